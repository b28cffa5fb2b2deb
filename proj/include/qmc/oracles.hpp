#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qmc/datasets.hpp"
#include "qmc/encoders.hpp"
#include "qmc/types.hpp"

// Independent reference implementations the measurement pipeline is checked
// against: counting-based Bayesian inference and the kernel-weighted form of
// the reduced output state. These ship in the library so `qmc verify` can
// run them on any install.

namespace qmc {

/// Joint count table of a 1-D categorical dataset: counts(j,c) over
/// categories j in 1..m and class slots c (first-appearance order).
struct DiscreteJoint {
  std::size_t m = 0;  // categories
  std::size_t l = 0;  // classes
  std::vector<std::uint64_t> counts;  // m x l, row-major
  std::uint64_t n = 0;

  std::uint64_t at(std::size_t category_1based, std::size_t cls) const {
    return counts[(category_1based - 1) * l + cls];
  }
};

DiscreteJoint joint_from_dataset(const LabeledDataset& data, std::size_t m);

/// P(y = c | x*) by row normalization of the count table.
/// Throws ZeroSupportError when category x* was never seen.
std::vector<double> bayes_posterior(const DiscreteJoint& joint,
                                    std::size_t x_star_1based);

/// Reduced output state as the kernel-weighted mixture over all training
/// samples (weights |<psi_X(x*)|psi_X(x_i)>|^2), normalized to unit trace.
/// Keeps every sample around, unlike the trained-density pipeline.
DensityMatrix kernel_form_predict(const LabeledDataset& samples,
                                  const EncoderSpec& spec,
                                  const FeatureScaler& scaler,
                                  const RffProjection* proj,
                                  std::span<const double> x_star);

/// Symmetric matrix of squared kernel magnitudes |<psi_i|psi_j>|^2.
struct RealMatrix {
  std::size_t n = 0;
  std::vector<double> a;
  explicit RealMatrix(std::size_t n_ = 0) : n(n_), a(n_ * n_) {}
  double& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  double at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

RealMatrix gram_kernel(const LabeledDataset& samples, const EncoderSpec& spec,
                       const FeatureScaler& scaler, const RffProjection* proj);

}  // namespace qmc
