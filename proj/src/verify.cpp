#include "qmc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "qmc/errors.hpp"
#include "qmc/oracles.hpp"
#include "qmc/predictor.hpp"
#include "qmc/simd.hpp"
#include "qmc/state.hpp"
#include "qmc/trainer.hpp"

namespace qmc {

namespace {

LabeledDataset random_discrete_dataset(std::mt19937_64& rng, std::size_t m,
                                       std::size_t n) {
  LabeledDataset d;
  d.n_cols = 1;
  d.class_names = {"a", "b"};
  std::uniform_int_distribution<int> cat(1, int(m));
  std::uniform_int_distribution<int> cls(0, 1);
  for (std::size_t i = 0; i < n; ++i) {
    d.features.push_back(double(cat(rng)));
    d.labels.push_back(cls(rng));
    ++d.n_rows;
  }
  return d;
}

LabeledDataset random_real_dataset(std::mt19937_64& rng, std::size_t n,
                                   std::size_t cols) {
  LabeledDataset d;
  d.n_cols = cols;
  d.class_names = {"a", "b"};
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  std::uniform_int_distribution<int> cls(0, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < cols; ++c) d.features.push_back(val(rng));
    d.labels.push_back(cls(rng));
    ++d.n_rows;
  }
  return d;
}

double max_entry_diff(const DensityMatrix& a, const DensityMatrix& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.a.size(); ++i)
    worst = std::max(worst, std::abs(a.a[i] - b.a[i]));
  return worst;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

CheckResult check_bayes_equivalence(std::mt19937_64& rng) {
  CheckResult res{"prop1-bayes-equivalence", true, ""};
  double worst = 0.0;
  for (int trial = 0; trial < 20 && res.passed; ++trial) {
    const std::size_t m = 2 + rng() % 5;
    const std::size_t n = 5 + rng() % 36;
    LabeledDataset data = random_discrete_dataset(rng, m, n);
    EncoderSpec spec;
    spec.kind = EncoderKind::onehot;
    spec.per_feature_dim = m;
    const DiscreteJoint joint = joint_from_dataset(data, m);
    for (TrainMode mode : {TrainMode::mixed, TrainMode::classical}) {
      const TrainedModel model = train(data, spec, mode);
      for (std::size_t cat = 1; cat <= m; ++cat) {
        const double x = double(cat);
        bool oracle_zero = false;
        std::vector<double> expected;
        try {
          expected = bayes_posterior(joint, cat);
        } catch (const ZeroSupportError&) {
          oracle_zero = true;
        }
        try {
          const PredictionResult pred = predict_density_fast(model, {&x, 1});
          if (oracle_zero) {
            res.passed = false;
            res.detail = "pipeline produced a result where Bayes has no support";
            break;
          }
          for (std::size_t c = 0; c < expected.size(); ++c)
            worst = std::max(worst,
                             std::abs(pred.probabilities[c] - expected[c]));
        } catch (const ZeroSupportError&) {
          if (!oracle_zero) {
            res.passed = false;
            res.detail = "pipeline reported zero support where Bayes has counts";
            break;
          }
        }
      }
      if (!res.passed) break;
    }
  }
  if (res.passed && worst > 1e-10) {
    res.passed = false;
    res.detail = "max posterior deviation " + fmt(worst);
  }
  if (res.passed) res.detail = "max posterior deviation " + fmt(worst);
  return res;
}

EncoderSpec small_spec(EncoderKind kind, std::uint64_t seed) {
  EncoderSpec spec;
  spec.kind = kind;
  switch (kind) {
    case EncoderKind::softmax:
      spec.per_feature_dim = 3;
      spec.beta = 4.0;
      break;
    case EncoderKind::onehot:
      spec.per_feature_dim = 3;
      break;
    case EncoderKind::squeezed:
      spec.per_feature_dim = 6;
      spec.r = 1.2;
      break;
    case EncoderKind::coherent:
      spec.per_feature_dim = 6;
      spec.gamma = 2.0;
      break;
    case EncoderKind::rff:
      spec.rff_dim = 16;
      spec.gamma = 1.5;
      spec.rff_seed = seed;
      break;
  }
  return spec;
}

LabeledDataset dataset_for(EncoderKind kind, std::mt19937_64& rng,
                           std::size_t n) {
  if (kind == EncoderKind::onehot) {
    LabeledDataset d;
    d.n_cols = 2;
    d.class_names = {"a", "b"};
    std::uniform_int_distribution<int> cat(1, 3);
    std::uniform_int_distribution<int> cls(0, 1);
    for (std::size_t i = 0; i < n; ++i) {
      d.features.push_back(double(cat(rng)));
      d.features.push_back(double(cat(rng)));
      d.labels.push_back(cls(rng));
      ++d.n_rows;
    }
    return d;
  }
  return random_real_dataset(rng, n, 2);
}

CheckResult check_kernel_equivalence(std::mt19937_64& rng) {
  CheckResult res{"prop2-kernel-equivalence", true, ""};
  double worst = 0.0;
  for (EncoderKind kind :
       {EncoderKind::softmax, EncoderKind::onehot, EncoderKind::squeezed,
        EncoderKind::coherent, EncoderKind::rff}) {
    for (int trial = 0; trial < 5; ++trial) {
      const std::size_t n = 5 + rng() % 26;
      LabeledDataset data = dataset_for(kind, rng, n);
      EncoderSpec spec = small_spec(kind, rng());
      const TrainedModel model = train(data, spec, TrainMode::mixed);
      // query one of the training points so support cannot vanish
      const std::size_t pick = rng() % n;
      const auto x_star = data.row(pick);
      const RffProjection* proj = model.proj ? &*model.proj : nullptr;
      const DensityMatrix expected = kernel_form_predict(
          data, model.spec, model.scaler, proj, x_star);
      const PredictionResult got = predict_density_fast(model, x_star);
      worst = std::max(worst, max_entry_diff(expected, got.rho_y));
    }
  }
  res.passed = worst <= 1e-8;
  res.detail = "max rho_y deviation " + fmt(worst);
  return res;
}

CheckResult check_fast_naive(std::mt19937_64& rng) {
  CheckResult res{"fast-vs-naive-prediction", true, ""};
  double worst = 0.0, worst_support = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const EncoderKind kinds[] = {EncoderKind::softmax, EncoderKind::coherent,
                                 EncoderKind::squeezed, EncoderKind::rff,
                                 EncoderKind::onehot};
    const EncoderKind kind = kinds[rng() % 5];
    LabeledDataset data = dataset_for(kind, rng, 8 + rng() % 24);
    EncoderSpec spec = small_spec(kind, rng());
    const TrainedModel model = train(data, spec, TrainMode::mixed);
    const auto x_star = data.row(rng() % data.n_rows);
    double s_fast = 0.0, s_naive = 0.0;
    const RffProjection* proj = model.proj ? &*model.proj : nullptr;
    const StateVector psi =
        encode_sample(x_star, model.spec, model.scaler, proj);
    const DensityMatrix fast =
        reduced_output_state_fast(model.rho, model.shape, psi, &s_fast);
    const DensityMatrix naive =
        reduced_output_state_naive(model.rho, model.shape, psi, &s_naive);
    worst = std::max(worst, max_entry_diff(fast, naive));
    worst_support = std::max(worst_support, std::abs(s_fast - s_naive));
  }
  res.passed = worst <= 1e-9 && worst_support <= 1e-10;
  res.detail = "max rho_y deviation " + fmt(worst) + ", support deviation " +
               fmt(worst_support);
  return res;
}

CheckResult check_coherent_kernel(std::mt19937_64& rng) {
  CheckResult res{"coherent-closed-form-kernel", true, ""};
  const double gamma = 1.0;
  const std::size_t m = 32;
  std::uniform_real_distribution<double> val(0.0, 3.14159265358979);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const double u = val(rng), v = val(rng);
    const StateVector a = encode_coherent_scalar(u, u, gamma, m);
    const StateVector b = encode_coherent_scalar(v, v, gamma, m);
    const double got = std::norm(simd::cdotc(a.data(), b.data(), m));
    const double expected =
        std::exp(-gamma * (u * u + v * v - 2.0 * u * v * std::cos(u - v)));
    worst = std::max(worst, std::abs(got - expected));
  }
  res.passed = worst <= 1e-6;
  res.detail = "max kernel deviation " + fmt(worst);
  return res;
}

CheckResult check_density_validity(std::mt19937_64& rng, bool inject_fault) {
  CheckResult res{"density-invariants", true, ""};
  double worst_herm = 0.0, worst_trace = 0.0, worst_eig = 0.0;
  for (TrainMode mode : {TrainMode::pure, TrainMode::mixed, TrainMode::classical}) {
    const EncoderKind kinds[] = {EncoderKind::softmax, EncoderKind::coherent,
                                 EncoderKind::squeezed};
    for (EncoderKind kind : kinds) {
      LabeledDataset data = dataset_for(kind, rng, 12);
      EncoderSpec spec = small_spec(kind, rng());
      TrainedModel model = train(data, spec, mode);
      if (inject_fault) model.rho.at(0, model.rho.dim > 1 ? 1 : 0) += 1e-3;
      const ValidityReport train_rep = validate_density(model.rho);
      const PredictionResult pred = predict_density_fast(model, data.row(0));
      const ValidityReport pred_rep = validate_density(pred.rho_y);
      for (const ValidityReport& rep : {train_rep, pred_rep}) {
        worst_herm = std::max(worst_herm, rep.hermiticity_defect);
        worst_trace = std::max(worst_trace, rep.trace_defect);
        worst_eig = std::min(worst_eig, rep.min_eigenvalue);
        if (!rep.ok()) res.passed = false;
      }
    }
  }
  res.detail = "herm " + fmt(worst_herm) + ", trace " + fmt(worst_trace) +
               ", min eig " + fmt(worst_eig);
  return res;
}

}  // namespace

std::vector<CheckResult> run_self_checks(std::uint64_t seed,
                                         bool inject_fault) {
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> out;
  out.push_back(check_bayes_equivalence(rng));
  out.push_back(check_kernel_equivalence(rng));
  out.push_back(check_fast_naive(rng));
  out.push_back(check_coherent_kernel(rng));
  out.push_back(check_density_validity(rng, inject_fault));
  return out;
}

}  // namespace qmc
