#include "qmc/trainer.hpp"

#include <algorithm>
#include <cmath>

#include "qmc/errors.hpp"
#include "qmc/simd.hpp"
#include "qmc/state.hpp"

namespace qmc {

std::string to_string(TrainMode m) {
  switch (m) {
    case TrainMode::pure: return "pure";
    case TrainMode::mixed: return "mixed";
    case TrainMode::classical: return "classical";
  }
  return "mixed";
}

TrainMode train_mode_from_string(const std::string& s) {
  if (s == "pure") return TrainMode::pure;
  if (s == "mixed") return TrainMode::mixed;
  if (s == "classical") return TrainMode::classical;
  throw SpecError("unknown training state '" + s + "'");
}

std::vector<std::string> first_appearance_labels(const LabeledDataset& data) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < data.n_rows; ++i) {
    const std::string& name =
        data.class_names.at(static_cast<std::size_t>(data.labels[i]));
    if (std::find(labels.begin(), labels.end(), name) == labels.end())
      labels.push_back(name);
  }
  return labels;
}

Accumulator::Accumulator(TrainMode mode_, BipartiteShape shape_)
    : mode(mode_), shape(shape_) {
  const std::size_t d = shape.joint_dim();
  switch (mode) {
    case TrainMode::pure: psi_sum.assign(d, cplx{0.0, 0.0}); break;
    case TrainMode::mixed: rho_sum.assign(d * d, cplx{0.0, 0.0}); break;
    case TrainMode::classical: diag_sum.assign(d, 0.0); break;
  }
}

void Accumulator::add(const StateVector& joint) {
  const std::size_t d = shape.joint_dim();
  if (joint.dim() != d)
    throw DimensionError("accumulate: state dim " + std::to_string(joint.dim()) +
                         " != joint dim " + std::to_string(d));
  switch (mode) {
    case TrainMode::pure:
      simd::caxpy(cplx{1.0, 0.0}, joint.data(), psi_sum.data(), d);
      break;
    case TrainMode::mixed:
      for (std::size_t i = 0; i < d; ++i)
        simd::caxpy_conj(joint.amp[i], joint.data(), rho_sum.data() + i * d, d);
      break;
    case TrainMode::classical:
      for (std::size_t j = 0; j < d; ++j) diag_sum[j] += std::norm(joint.amp[j]);
      break;
  }
  ++count;
}

void Accumulator::merge(const Accumulator& other) {
  if (other.mode != mode || other.shape.dim_x != shape.dim_x ||
      other.shape.dim_y != shape.dim_y)
    throw DimensionError("merge: accumulators disagree on mode or shape");
  for (std::size_t i = 0; i < psi_sum.size(); ++i) psi_sum[i] += other.psi_sum[i];
  for (std::size_t i = 0; i < rho_sum.size(); ++i) rho_sum[i] += other.rho_sum[i];
  for (std::size_t i = 0; i < diag_sum.size(); ++i) diag_sum[i] += other.diag_sum[i];
  count += other.count;
}

DensityMatrix finalize(const Accumulator& acc) {
  if (acc.count == 0) throw EmptyTrainingError("finalize: no samples accumulated");
  const std::size_t d = acc.shape.joint_dim();
  switch (acc.mode) {
    case TrainMode::pure: {
      double n2 = simd::cdotc(acc.psi_sum.data(), acc.psi_sum.data(), d).real();
      const double n = std::sqrt(n2);
      if (!(n > 1e-12))
        throw DegenerateSuperpositionError(
            "superposition of encoded samples cancels to zero");
      StateVector psi;
      psi.amp = acc.psi_sum;
      for (cplx& z : psi.amp) z /= n;
      return outer_product(psi);
    }
    case TrainMode::mixed: {
      DensityMatrix rho(d);
      const double inv = 1.0 / double(acc.count);
      for (std::size_t i = 0; i < d * d; ++i) rho.a[i] = acc.rho_sum[i] * inv;
      return rho;
    }
    case TrainMode::classical: {
      DensityMatrix rho(d);
      const double inv = 1.0 / double(acc.count);
      for (std::size_t j = 0; j < d; ++j) rho.at(j, j) = acc.diag_sum[j] * inv;
      return rho;
    }
  }
  throw EmptyTrainingError("finalize: unreachable");
}

TrainedModel train(const LabeledDataset& data, EncoderSpec spec,
                   TrainMode mode) {
  if (data.n_rows == 0) throw EmptyTrainingError("train: empty dataset");
  spec.num_features = data.n_cols;
  spec.validate();

  TrainedModel model;
  model.mode = mode;
  model.spec = spec;
  model.labels = first_appearance_labels(data);
  model.scaler = fit_scaler(data, scale_target_for(spec.kind));
  if (spec.kind == EncoderKind::rff) model.proj = make_rff_projection(spec);

  const std::size_t k = spec.input_dim();
  const std::size_t l = model.labels.size();
  model.shape = {k, l};

  // dataset class index -> model label slot (first-appearance order)
  std::vector<std::size_t> slot(data.class_names.size());
  for (std::size_t c = 0; c < data.class_names.size(); ++c) {
    auto it = std::find(model.labels.begin(), model.labels.end(),
                        data.class_names[c]);
    slot[c] = it == model.labels.end()
                  ? std::size_t(0)
                  : std::size_t(it - model.labels.begin());
  }

  Accumulator acc(mode, model.shape);
  const RffProjection* proj = model.proj ? &*model.proj : nullptr;
  for (std::size_t i = 0; i < data.n_rows; ++i) {
    StateVector psi_x = encode_sample(data.row(i), spec, model.scaler, proj);
    StateVector psi_y =
        encode_onehot(slot[static_cast<std::size_t>(data.labels[i])] + 1, l);
    acc.add(tensor_product(psi_x, psi_y));
  }
  model.rho = finalize(acc);
  model.n_train = acc.count;
  return model;
}

}  // namespace qmc
