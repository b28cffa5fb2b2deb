#include "qmc/predictor.hpp"

#include <algorithm>
#include <cmath>

#include "qmc/errors.hpp"
#include "qmc/simd.hpp"
#include "qmc/state.hpp"
#include "qmc/threading.hpp"

namespace qmc {

CMatrix prediction_operator(const StateVector& x_state,
                            const BipartiteShape& shape) {
  if (x_state.dim() != shape.dim_x)
    throw DimensionError("prediction_operator: state dim " +
                         std::to_string(x_state.dim()) + " != dim_x " +
                         std::to_string(shape.dim_x));
  const std::size_t k = shape.dim_x, l = shape.dim_y;
  CMatrix op(k * l);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const cplx v = x_state.amp[i] * std::conj(x_state.amp[j]);
      if (v == cplx{0.0, 0.0}) continue;
      for (std::size_t a = 0; a < l; ++a) op.at(i * l + a, j * l + a) = v;
    }
  return op;
}

DensityMatrix reduced_output_state_naive(const DensityMatrix& rho,
                                         const BipartiteShape& shape,
                                         const StateVector& x_state,
                                         double* support_out) {
  const CMatrix pi = prediction_operator(x_state, shape);
  const DensityMatrix projected = project_and_renormalize(rho, pi, support_out);
  return partial_trace_out_x(projected, shape);
}

DensityMatrix reduced_output_state_fast(const DensityMatrix& rho,
                                        const BipartiteShape& shape,
                                        const StateVector& x_state,
                                        double* support_out) {
  if (rho.dim != shape.joint_dim())
    throw DimensionError("reduced_output_state_fast: rho dim mismatch");
  if (x_state.dim() != shape.dim_x)
    throw DimensionError("reduced_output_state_fast: x_state dim mismatch");
  const std::size_t k = shape.dim_x, l = shape.dim_y;
  const cplx* x = x_state.data();

  // N(a,b) = sum_ij conj(x_i) rho((i,a),(j,b)) x_j; rho'_Y = N / Tr[N]
  CMatrix n_mat(l);
  std::vector<cplx> row_sum(l);
  for (std::size_t i = 0; i < k; ++i) {
    const cplx xi_c = std::conj(x[i]);
    if (xi_c == cplx{0.0, 0.0}) continue;
    for (std::size_t a = 0; a < l; ++a) {
      std::fill(row_sum.begin(), row_sum.end(), cplx{0.0, 0.0});
      simd::block_weighted_sum(rho.row(i * l + a), x, k, l, row_sum.data());
      simd::caxpy(xi_c, row_sum.data(), n_mat.row(a), l);
    }
  }
  // exact Hermiticity holds in exact arithmetic; clean up round-off
  for (std::size_t a = 0; a < l; ++a) {
    n_mat.at(a, a) = cplx{n_mat.at(a, a).real(), 0.0};
    for (std::size_t b = a + 1; b < l; ++b) {
      const cplx avg = 0.5 * (n_mat.at(a, b) + std::conj(n_mat.at(b, a)));
      n_mat.at(a, b) = avg;
      n_mat.at(b, a) = std::conj(avg);
    }
  }
  const double support = n_mat.trace().real();
  if (support_out) *support_out = support;
  const double eps = kSupportEps * std::abs(rho.trace().real());
  if (!(support > eps))
    throw ZeroSupportError("projective measurement has zero support (Tr = " +
                           std::to_string(support) + ")");
  for (cplx& z : n_mat.a) z /= support;
  return n_mat;
}

namespace {

PredictionResult finish_result(const TrainedModel& model, DensityMatrix rho_y,
                               double support) {
  PredictionResult res;
  res.support = support;
  res.probabilities.resize(rho_y.dim);
  for (std::size_t a = 0; a < rho_y.dim; ++a)
    res.probabilities[a] = std::max(0.0, rho_y.at(a, a).real());
  res.rho_y = std::move(rho_y);
  res.label = model.labels.at(predict_label_index(res.probabilities));
  return res;
}

PredictionResult predict_impl(const TrainedModel& model,
                              std::span<const double> x, bool fast) {
  const RffProjection* proj = model.proj ? &*model.proj : nullptr;
  const StateVector psi_x = encode_sample(x, model.spec, model.scaler, proj);
  double support = 0.0;
  DensityMatrix rho_y =
      fast ? reduced_output_state_fast(model.rho, model.shape, psi_x, &support)
           : reduced_output_state_naive(model.rho, model.shape, psi_x, &support);
  return finish_result(model, std::move(rho_y), support);
}

}  // namespace

PredictionResult predict_density_naive(const TrainedModel& model,
                                       std::span<const double> x) {
  return predict_impl(model, x, false);
}

PredictionResult predict_density_fast(const TrainedModel& model,
                                      std::span<const double> x) {
  return predict_impl(model, x, true);
}

std::size_t predict_label_index(std::span<const double> probabilities) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < probabilities.size(); ++i)
    if (probabilities[i] > probabilities[best]) best = i;
  return best;
}

std::string predict_label(const PredictionResult& result,
                          const std::vector<std::string>& labels) {
  return labels.at(predict_label_index(result.probabilities));
}

std::vector<BatchEntry> predict_batch(const TrainedModel& model,
                                      const LabeledDataset& rows,
                                      bool use_fast) {
  std::vector<BatchEntry> out(rows.n_rows);
  parallel_for(rows.n_rows, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        out[i].result = predict_impl(model, rows.row(i), use_fast);
      } catch (const Error& e) {
        out[i].error = e.what();
      }
    }
  });
  return out;
}

}  // namespace qmc
