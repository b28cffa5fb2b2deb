#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qmc/trainer.hpp"
#include "qmc/types.hpp"

namespace qmc {

/// Output of one prediction: the reduced class state, its diagonal read as
/// probabilities, the argmax label and the pre-normalization support.
struct PredictionResult {
  DensityMatrix rho_y;                // l x l
  std::vector<double> probabilities;  // diag(rho_y), clamped at 0
  std::string label;
  double support = 0.0;  // Tr[pi rho pi]
};

/// pi(x*) = |psi_X(x*)><psi_X(x*)| (x) Id_l, materialized as a dense
/// operator. Only the naive reference path uses this.
CMatrix prediction_operator(const StateVector& x_state,
                            const BipartiteShape& shape);

/// Reference pipeline: build pi, conjugate, renormalize, partial-trace.
DensityMatrix reduced_output_state_naive(const DensityMatrix& rho,
                                         const BipartiteShape& shape,
                                         const StateVector& x_state,
                                         double* support_out = nullptr);

/// Contraction path: rho_y(a,b) = sum_ij conj(x_i) rho((i,a),(j,b)) x_j
/// up to normalization; never materializes pi or rho'. O(k^2 l^2) time,
/// O(l) scratch.
DensityMatrix reduced_output_state_fast(const DensityMatrix& rho,
                                        const BipartiteShape& shape,
                                        const StateVector& x_state,
                                        double* support_out = nullptr);

PredictionResult predict_density_naive(const TrainedModel& model,
                                       std::span<const double> x);
PredictionResult predict_density_fast(const TrainedModel& model,
                                      std::span<const double> x);

/// Argmax with ties broken toward the lowest class index.
std::size_t predict_label_index(std::span<const double> probabilities);
std::string predict_label(const PredictionResult& result,
                          const std::vector<std::string>& labels);

/// Per-row outcome of a batch prediction; rows with zero support carry the
/// error message instead of a result and do not abort the batch.
struct BatchEntry {
  std::optional<PredictionResult> result;
  std::string error;
  bool ok() const { return result.has_value(); }
};

/// Row-parallel batch prediction (worker count capped by QMC_THREADS);
/// output order matches input order.
std::vector<BatchEntry> predict_batch(const TrainedModel& model,
                                      const LabeledDataset& rows,
                                      bool use_fast = true);

}  // namespace qmc
