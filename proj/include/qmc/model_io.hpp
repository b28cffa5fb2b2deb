#pragma once

#include <string>

#include "qmc/trainer.hpp"

namespace qmc {

/// Persists a trained model. Text format is versioned JSON with rho stored
/// as nested [re, im] pairs; binary format is magic "QMC1", a little-endian
/// u64 header length, the same header JSON without rho, then the rho entries
/// as interleaved little-endian float64 re/im, row-major.
void save_model(const TrainedModel& model, const std::string& path,
                bool binary = false);

/// Loads either format (sniffed from the leading magic). Cheap structural
/// checks (Hermiticity, trace) run on load; the eigenvalue check is left to
/// validate_density callers.
TrainedModel load_model(const std::string& path);

}  // namespace qmc
