#include "qmc/oracles.hpp"

#include <cmath>

#include "qmc/errors.hpp"
#include "qmc/simd.hpp"
#include "qmc/state.hpp"
#include "qmc/trainer.hpp"

namespace qmc {

DiscreteJoint joint_from_dataset(const LabeledDataset& data, std::size_t m) {
  if (data.n_cols != 1)
    throw DimensionError("joint_from_dataset: expects 1-D categorical data");
  const std::vector<std::string> labels = first_appearance_labels(data);
  DiscreteJoint joint;
  joint.m = m;
  joint.l = labels.size();
  joint.counts.assign(m * joint.l, 0);
  for (std::size_t i = 0; i < data.n_rows; ++i) {
    const double v = data.features[i];
    const double rounded = std::round(v);
    if (std::abs(v - rounded) > 1e-9 || rounded < 1.0 || rounded > double(m))
      throw InvalidCategoryError("joint_from_dataset: bad category");
    const std::string& name =
        data.class_names.at(static_cast<std::size_t>(data.labels[i]));
    std::size_t slot = 0;
    while (labels[slot] != name) ++slot;
    joint.counts[(std::size_t(rounded) - 1) * joint.l + slot] += 1;
    ++joint.n;
  }
  return joint;
}

std::vector<double> bayes_posterior(const DiscreteJoint& joint,
                                    std::size_t x_star_1based) {
  if (x_star_1based < 1 || x_star_1based > joint.m)
    throw InvalidCategoryError("bayes_posterior: category outside 1..m");
  std::uint64_t row_sum = 0;
  for (std::size_t c = 0; c < joint.l; ++c) row_sum += joint.at(x_star_1based, c);
  if (row_sum == 0)
    throw ZeroSupportError("bayes_posterior: category never observed");
  std::vector<double> p(joint.l);
  for (std::size_t c = 0; c < joint.l; ++c)
    p[c] = double(joint.at(x_star_1based, c)) / double(row_sum);
  return p;
}

DensityMatrix kernel_form_predict(const LabeledDataset& samples,
                                  const EncoderSpec& spec,
                                  const FeatureScaler& scaler,
                                  const RffProjection* proj,
                                  std::span<const double> x_star) {
  if (samples.n_rows == 0)
    throw EmptyTrainingError("kernel_form_predict: empty dataset");
  const std::vector<std::string> labels = first_appearance_labels(samples);
  const std::size_t l = labels.size();

  std::vector<std::size_t> slot(samples.class_names.size());
  for (std::size_t c = 0; c < samples.class_names.size(); ++c) {
    std::size_t s = 0;
    while (s < l && labels[s] != samples.class_names[c]) ++s;
    slot[c] = s < l ? s : 0;
  }

  const StateVector psi_star = encode_sample(x_star, spec, scaler, proj);
  DensityMatrix rho_y(l);
  double total = 0.0;
  for (std::size_t i = 0; i < samples.n_rows; ++i) {
    const StateVector psi_i = encode_sample(samples.row(i), spec, scaler, proj);
    const cplx overlap =
        simd::cdotc(psi_star.data(), psi_i.data(), psi_star.dim());
    const double w = std::norm(overlap);
    total += w;
    const StateVector psi_y = encode_onehot(
        slot[static_cast<std::size_t>(samples.labels[i])] + 1, l);
    for (std::size_t a = 0; a < l; ++a)
      simd::caxpy_conj(w * psi_y.amp[a], psi_y.data(), rho_y.row(a), l);
  }
  if (!(total > 1e-300))
    throw ZeroSupportError("kernel_form_predict: all kernel weights vanish");
  for (cplx& z : rho_y.a) z /= total;
  return rho_y;
}

RealMatrix gram_kernel(const LabeledDataset& samples, const EncoderSpec& spec,
                       const FeatureScaler& scaler,
                       const RffProjection* proj) {
  if (samples.n_rows == 0) throw EmptyTrainingError("gram_kernel: empty dataset");
  const std::size_t n = samples.n_rows;
  std::vector<StateVector> psi(n);
  for (std::size_t i = 0; i < n; ++i)
    psi[i] = encode_sample(samples.row(i), spec, scaler, proj);
  RealMatrix g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.at(i, i) = std::norm(simd::cdotc(psi[i].data(), psi[i].data(), psi[i].dim()));
    for (std::size_t j = i + 1; j < n; ++j) {
      const double w =
          std::norm(simd::cdotc(psi[i].data(), psi[j].data(), psi[i].dim()));
      g.at(i, j) = w;
      g.at(j, i) = w;
    }
  }
  return g;
}

}  // namespace qmc
