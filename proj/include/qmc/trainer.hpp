#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmc/datasets.hpp"
#include "qmc/encoders.hpp"
#include "qmc/types.hpp"

namespace qmc {

enum class TrainMode { pure, mixed, classical };

std::string to_string(TrainMode m);
TrainMode train_mode_from_string(const std::string& s);

/// The training state plus everything needed to encode new samples.
struct TrainedModel {
  DensityMatrix rho;      // joint training state, dim = k*l
  BipartiteShape shape;   // k = input dim, l = number of classes
  EncoderSpec spec;
  FeatureScaler scaler;
  std::optional<RffProjection> proj;
  std::vector<std::string> labels;  // first-appearance order
  TrainMode mode = TrainMode::mixed;
  std::size_t n_train = 0;
};

/// Distinct class names in order of first appearance in the rows.
std::vector<std::string> first_appearance_labels(const LabeledDataset& data);

/// Streaming accumulator for the per-mode sums. Commutative: accumulation
/// order and merge grouping change the result only at round-off level.
struct Accumulator {
  TrainMode mode = TrainMode::mixed;
  BipartiteShape shape;
  std::size_t count = 0;
  std::vector<cplx> psi_sum;     // pure
  std::vector<cplx> rho_sum;     // mixed, dim x dim row-major
  std::vector<double> diag_sum;  // classical

  Accumulator() = default;
  Accumulator(TrainMode mode, BipartiteShape shape);

  // joint must already be the encoded input (x) tensor label (y) state.
  void add(const StateVector& joint);
  void merge(const Accumulator& other);
};

/// Normalizes the accumulated sums into a density matrix.
/// Throws EmptyTrainingError / DegenerateSuperpositionError.
DensityMatrix finalize(const Accumulator& acc);

/// Single-pass training over a dataset. The scaler and (for rff) the
/// projection are fitted/created here from the spec.
TrainedModel train(const LabeledDataset& data, EncoderSpec spec,
                   TrainMode mode);

inline TrainedModel train_pure(const LabeledDataset& d, EncoderSpec s) {
  return train(d, std::move(s), TrainMode::pure);
}
inline TrainedModel train_mixed(const LabeledDataset& d, EncoderSpec s) {
  return train(d, std::move(s), TrainMode::mixed);
}
inline TrainedModel train_classical(const LabeledDataset& d, EncoderSpec s) {
  return train(d, std::move(s), TrainMode::classical);
}

}  // namespace qmc
