#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qmc/datasets.hpp"
#include "qmc/types.hpp"

namespace qmc {

enum class EncoderKind { softmax, onehot, squeezed, coherent, rff };

std::string to_string(EncoderKind k);
EncoderKind encoder_kind_from_string(const std::string& s);

/// Which feature map to use and its hyperparameters.
struct EncoderSpec {
  EncoderKind kind = EncoderKind::softmax;
  std::size_t per_feature_dim = 2;  // m: grid size / categories / Fock truncation
  double beta = 0.0;                // softmax sharpness
  double gamma = 0.0;               // coherent / rff kernel scale
  double r = 0.0;                   // squeezing parameter
  std::size_t rff_dim = 0;          // D
  std::uint64_t rff_seed = 0;
  std::size_t num_features = 0;     // n

  // Dimension of the encoded input space: m^n, or D for rff.
  std::size_t input_dim() const;
  // Throws SpecError when parameters are inconsistent with the kind.
  void validate() const;
};

enum class ScaleTarget { none, unit, zero_to_pi };

ScaleTarget scale_target_for(EncoderKind kind);
std::string to_string(ScaleTarget t);
ScaleTarget scale_target_from_string(const std::string& s);

/// Per-feature min-max ranges fitted on the training set. Inputs outside
/// the fitted range are clamped onto the target interval.
struct FeatureScaler {
  ScaleTarget target = ScaleTarget::none;
  std::vector<double> min;  // empty when target == none
  std::vector<double> max;

  double apply(double x, std::size_t feature) const;
};

FeatureScaler fit_scaler(const LabeledDataset& data, ScaleTarget target);

/// Random Fourier features map z: R^n -> R^D for the Gaussian kernel
/// exp(-gamma * |x - y|^2); frequencies ~ N(0, 2*gamma*I).
struct RffProjection {
  std::size_t dim_out = 0;  // D
  std::size_t dim_in = 0;   // n
  std::vector<double> frequencies;  // D x n, row-major
  std::vector<double> offsets;      // D
  double gamma = 0.0;
  std::uint64_t seed = 0;
};

RffProjection make_rff_projection(const EncoderSpec& spec);

/// Unnormalized z(x); used by tests to check the kernel estimate directly.
std::vector<double> rff_features(std::span<const double> x,
                                 const RffProjection& proj);

// --- scalar encoders ---

/// Amplitudes sqrt(P_j(x)), P_j ~ exp(-beta*(x - j/(m-1))^2), x clamped to [0,1].
StateVector encode_softmax_scalar(double x, std::size_t m, double beta);

/// Basis vector e_{j-1} of dim m; j is 1-based. Throws InvalidCategoryError.
StateVector encode_onehot(std::size_t j, std::size_t m);

/// Squeezed vacuum truncated to the first m contributing (even) Fock levels,
/// stored in a compressed basis (slot n holds |2n>), then renormalized.
StateVector encode_squeezed_scalar(double phi, double r, std::size_t m);
/// Truncated series before renormalization (slot n holds |2n>).
std::vector<cplx> squeezed_amplitudes_unnormalized(double phi, double r,
                                                   std::size_t m);

/// Coherent state of alpha = x*e^{i*theta} with scale gamma, truncated to m
/// Fock levels and renormalized. Amplitude magnitudes are evaluated in the
/// log domain so large gamma*|alpha|^2 cannot overflow.
StateVector encode_coherent_scalar(double x, double theta, double gamma,
                                   std::size_t m);

/// Normalized z(x)/|z(x)| as a state of dim D.
StateVector encode_rff_vector(std::span<const double> x,
                              const RffProjection& proj);

/// Full-sample encoder: scales each feature, applies the per-feature scalar
/// map and combines with tensor products (dim m^n); rff maps the whole
/// scaled vector at once (dim D).
StateVector encode_sample(std::span<const double> x, const EncoderSpec& spec,
                          const FeatureScaler& scaler,
                          const RffProjection* proj);

}  // namespace qmc
