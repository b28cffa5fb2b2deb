#include "qmc/encoders.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "qmc/errors.hpp"
#include "qmc/simd.hpp"
#include "qmc/state.hpp"

namespace qmc {

namespace {
constexpr double kPi = std::numbers::pi;

StateVector normalized(std::vector<cplx> amp) {
  double n2 = 0.0;
  for (const cplx& z : amp) n2 += std::norm(z);
  const double n = std::sqrt(n2);
  if (!(n > 0.0)) throw ZeroVectorError("encoded state has zero norm");
  for (cplx& z : amp) z /= n;
  return StateVector(std::move(amp));
}
}  // namespace

std::string to_string(EncoderKind k) {
  switch (k) {
    case EncoderKind::softmax: return "softmax";
    case EncoderKind::onehot: return "onehot";
    case EncoderKind::squeezed: return "squeezed";
    case EncoderKind::coherent: return "coherent";
    case EncoderKind::rff: return "rff";
  }
  return "softmax";
}

EncoderKind encoder_kind_from_string(const std::string& s) {
  if (s == "softmax") return EncoderKind::softmax;
  if (s == "onehot") return EncoderKind::onehot;
  if (s == "squeezed") return EncoderKind::squeezed;
  if (s == "coherent") return EncoderKind::coherent;
  if (s == "rff") return EncoderKind::rff;
  throw SpecError("unknown encoding '" + s + "'");
}

std::string to_string(ScaleTarget t) {
  switch (t) {
    case ScaleTarget::none: return "none";
    case ScaleTarget::unit: return "unit";
    case ScaleTarget::zero_to_pi: return "zero_to_pi";
  }
  return "none";
}

ScaleTarget scale_target_from_string(const std::string& s) {
  if (s == "none") return ScaleTarget::none;
  if (s == "unit") return ScaleTarget::unit;
  if (s == "zero_to_pi") return ScaleTarget::zero_to_pi;
  throw SchemaError("unknown scale target '" + s + "'");
}

ScaleTarget scale_target_for(EncoderKind kind) {
  switch (kind) {
    case EncoderKind::softmax: return ScaleTarget::unit;
    case EncoderKind::rff: return ScaleTarget::unit;
    case EncoderKind::squeezed: return ScaleTarget::zero_to_pi;
    case EncoderKind::coherent: return ScaleTarget::zero_to_pi;
    case EncoderKind::onehot: return ScaleTarget::none;
  }
  return ScaleTarget::none;
}

std::size_t EncoderSpec::input_dim() const {
  if (kind == EncoderKind::rff) return rff_dim;
  std::size_t d = 1;
  for (std::size_t f = 0; f < num_features; ++f) d *= per_feature_dim;
  return d;
}

void EncoderSpec::validate() const {
  if (num_features < 1) throw SpecError("encoder needs num_features >= 1");
  switch (kind) {
    case EncoderKind::softmax:
      if (per_feature_dim < 2) throw SpecError("softmax needs m >= 2");
      if (!(beta > 0.0)) throw SpecError("softmax needs beta > 0");
      break;
    case EncoderKind::onehot:
      if (per_feature_dim < 2) throw SpecError("onehot needs m >= 2");
      break;
    case EncoderKind::squeezed:
      if (per_feature_dim < 2) throw SpecError("squeezed needs m >= 2");
      if (r < 0.0) throw SpecError("squeezed needs r >= 0");
      break;
    case EncoderKind::coherent:
      if (per_feature_dim < 2) throw SpecError("coherent needs m >= 2");
      if (!(gamma > 0.0)) throw SpecError("coherent needs gamma > 0");
      break;
    case EncoderKind::rff:
      if (rff_dim < 1) throw SpecError("rff needs D >= 1");
      if (!(gamma > 0.0)) throw SpecError("rff needs gamma > 0");
      break;
  }
}

double FeatureScaler::apply(double x, std::size_t feature) const {
  if (target == ScaleTarget::none) return x;
  const double lo = min.at(feature), hi = max.at(feature);
  double s = (x - lo) / (hi - lo);
  s = std::clamp(s, 0.0, 1.0);
  return target == ScaleTarget::zero_to_pi ? s * kPi : s;
}

FeatureScaler fit_scaler(const LabeledDataset& data, ScaleTarget target) {
  FeatureScaler sc;
  sc.target = target;
  if (target == ScaleTarget::none) return sc;
  if (data.n_rows == 0) throw EmptyTrainingError("fit_scaler: empty dataset");
  sc.min.assign(data.n_cols, 0.0);
  sc.max.assign(data.n_cols, 0.0);
  for (std::size_t c = 0; c < data.n_cols; ++c) {
    double lo = data.features[c], hi = data.features[c];
    for (std::size_t i = 1; i < data.n_rows; ++i) {
      const double v = data.features[i * data.n_cols + c];
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    if (!(hi > lo))
      throw DegenerateFeatureError("feature " + std::to_string(c + 1) +
                                   " is constant; cannot min-max scale");
    sc.min[c] = lo;
    sc.max[c] = hi;
  }
  return sc;
}

StateVector encode_softmax_scalar(double x, std::size_t m, double beta) {
  x = std::clamp(x, 0.0, 1.0);
  std::vector<double> logw(m);
  double peak = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < m; ++j) {
    const double alpha = double(j) / double(m - 1);
    logw[j] = -beta * (x - alpha) * (x - alpha);
    peak = std::max(peak, logw[j]);
  }
  double z = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    logw[j] = std::exp(logw[j] - peak);
    z += logw[j];
  }
  std::vector<cplx> amp(m);
  for (std::size_t j = 0; j < m; ++j) amp[j] = std::sqrt(logw[j] / z);
  return StateVector(std::move(amp));
}

StateVector encode_onehot(std::size_t j, std::size_t m) {
  if (j < 1 || j > m)
    throw InvalidCategoryError("category " + std::to_string(j) +
                               " outside 1.." + std::to_string(m));
  return StateVector::basis(m, j - 1);
}

std::vector<cplx> squeezed_amplitudes_unnormalized(double phi, double r,
                                                   std::size_t m) {
  // c_n = cosh(r)^{-1/2} * sqrt((2n)!)/(2^n n!) * (e^{i(phi+pi)} tanh r)^n,
  // occupying Fock level |2n>; odd levels vanish identically.
  std::vector<cplx> c(m);
  const double th = std::tanh(r);
  const double half_log_cosh = 0.5 * std::log(std::cosh(r));
  for (std::size_t n = 0; n < m; ++n) {
    if (n > 0 && th == 0.0) {
      c[n] = 0.0;
      continue;
    }
    const double dn = double(n);
    double logmag = -half_log_cosh;
    if (n > 0)
      logmag += 0.5 * std::lgamma(2.0 * dn + 1.0) - dn * std::log(2.0) -
                std::lgamma(dn + 1.0) + dn * std::log(th);
    const double arg = dn * (phi + kPi);
    c[n] = std::exp(logmag) * cplx{std::cos(arg), std::sin(arg)};
  }
  return c;
}

StateVector encode_squeezed_scalar(double phi, double r, std::size_t m) {
  return normalized(squeezed_amplitudes_unnormalized(phi, r, m));
}

StateVector encode_coherent_scalar(double x, double theta, double gamma,
                                   std::size_t m) {
  if (x == 0.0) return StateVector::basis(m, 0);  // vacuum
  // a_n = e^{-gamma*x^2/2} * alpha^n * gamma^{n/2} / sqrt(n!), alpha = x e^{i theta}
  std::vector<cplx> amp(m);
  const double log_x = std::log(x);
  const double log_gamma = std::log(gamma);
  for (std::size_t n = 0; n < m; ++n) {
    const double dn = double(n);
    const double logmag = -0.5 * gamma * x * x + dn * log_x +
                          0.5 * dn * log_gamma - 0.5 * std::lgamma(dn + 1.0);
    const double arg = dn * theta;
    amp[n] = std::exp(logmag) * cplx{std::cos(arg), std::sin(arg)};
  }
  return normalized(std::move(amp));
}

RffProjection make_rff_projection(const EncoderSpec& spec) {
  spec.validate();
  RffProjection p;
  p.dim_out = spec.rff_dim;
  p.dim_in = spec.num_features;
  p.gamma = spec.gamma;
  p.seed = spec.rff_seed;
  std::mt19937_64 rng(spec.rff_seed);
  std::normal_distribution<double> freq(0.0, std::sqrt(2.0 * spec.gamma));
  p.frequencies.resize(p.dim_out * p.dim_in);
  for (double& w : p.frequencies) w = freq(rng);
  std::uniform_real_distribution<double> offs(0.0, 2.0 * kPi);
  p.offsets.resize(p.dim_out);
  for (double& b : p.offsets) b = offs(rng);
  return p;
}

std::vector<double> rff_features(std::span<const double> x,
                                 const RffProjection& proj) {
  if (x.size() != proj.dim_in)
    throw DimensionError("rff_features: expected " + std::to_string(proj.dim_in) +
                         " features, got " + std::to_string(x.size()));
  std::vector<double> z(proj.dim_out);
  const double scale = std::sqrt(2.0 / double(proj.dim_out));
  for (std::size_t j = 0; j < proj.dim_out; ++j) {
    double t = proj.offsets[j];
    const double* w = proj.frequencies.data() + j * proj.dim_in;
    for (std::size_t f = 0; f < proj.dim_in; ++f) t += w[f] * x[f];
    z[j] = scale * std::cos(t);
  }
  return z;
}

StateVector encode_rff_vector(std::span<const double> x,
                              const RffProjection& proj) {
  std::vector<double> z = rff_features(x, proj);
  std::vector<cplx> amp(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) amp[j] = z[j];
  return normalized(std::move(amp));
}

StateVector encode_sample(std::span<const double> x, const EncoderSpec& spec,
                          const FeatureScaler& scaler,
                          const RffProjection* proj) {
  if (x.size() != spec.num_features)
    throw DimensionError("encode_sample: expected " +
                         std::to_string(spec.num_features) + " features, got " +
                         std::to_string(x.size()));

  if (spec.kind == EncoderKind::rff) {
    if (!proj) throw SpecError("rff encoding needs a projection");
    std::vector<double> scaled(x.size());
    for (std::size_t f = 0; f < x.size(); ++f) scaled[f] = scaler.apply(x[f], f);
    return encode_rff_vector(scaled, *proj);
  }

  StateVector psi;
  for (std::size_t f = 0; f < x.size(); ++f) {
    const double s = scaler.apply(x[f], f);
    StateVector phi;
    switch (spec.kind) {
      case EncoderKind::softmax:
        phi = encode_softmax_scalar(s, spec.per_feature_dim, spec.beta);
        break;
      case EncoderKind::onehot: {
        const double rounded = std::round(s);
        if (std::abs(s - rounded) > 1e-9)
          throw InvalidCategoryError("feature " + std::to_string(f + 1) +
                                     " is not an integer category");
        if (rounded < 1.0 || rounded > double(spec.per_feature_dim))
          throw InvalidCategoryError("category " + std::to_string(rounded) +
                                     " outside 1.." +
                                     std::to_string(spec.per_feature_dim));
        phi = encode_onehot(std::size_t(rounded), spec.per_feature_dim);
        break;
      }
      case EncoderKind::squeezed:
        phi = encode_squeezed_scalar(s, spec.r, spec.per_feature_dim);
        break;
      case EncoderKind::coherent:
        // the scaled value serves as both modulus and phase of alpha
        phi = encode_coherent_scalar(s, s, spec.gamma, spec.per_feature_dim);
        break;
      case EncoderKind::rff:
        break;  // handled above
    }
    psi = f == 0 ? std::move(phi) : tensor_product(psi, phi);
  }
  return psi;
}

}  // namespace qmc
