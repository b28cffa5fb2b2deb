#include "qmc/state.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "qmc/errors.hpp"
#include "qmc/simd.hpp"

namespace qmc {

double StateVector::norm() const {
  return std::sqrt(simd::cdotc(amp.data(), amp.data(), amp.size()).real());
}

bool StateVector::is_normalized(double tol) const {
  return dim() >= 1 && std::abs(norm() - 1.0) <= tol;
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  StateVector v;
  v.amp.assign(dim, cplx{0.0, 0.0});
  v.amp.at(index) = 1.0;
  return v;
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
  const std::size_t bd = b.dim();
  StateVector out;
  out.amp.assign(a.dim() * bd, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < a.dim(); ++i)
    simd::caxpy(a.amp[i], b.data(), out.data() + i * bd, bd);
  return out;
}

DensityMatrix outer_product(const StateVector& v) {
  const std::size_t d = v.dim();
  DensityMatrix rho(d);
  for (std::size_t i = 0; i < d; ++i)
    simd::caxpy_conj(v.amp[i], v.data(), rho.row(i), d);
  return rho;
}

DensityMatrix partial_trace_out_x(const DensityMatrix& rho,
                                  const BipartiteShape& shape) {
  if (rho.dim != shape.joint_dim())
    throw DimensionError("partial_trace_out_x: rho.dim " +
                         std::to_string(rho.dim) + " != dim_x*dim_y " +
                         std::to_string(shape.joint_dim()));
  const std::size_t l = shape.dim_y;
  DensityMatrix out(l);
  for (std::size_t a = 0; a < l; ++a)
    for (std::size_t b = 0; b < l; ++b) {
      cplx s = 0.0;
      for (std::size_t i = 0; i < shape.dim_x; ++i)
        s += rho.at(i * l + a, i * l + b);
      out.at(a, b) = s;
    }
  return out;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  if (a.dim != b.dim) throw DimensionError("matmul: dimension mismatch");
  const std::size_t d = a.dim;
  CMatrix c(d);
  for (std::size_t i = 0; i < d; ++i) {
    const cplx* arow = a.row(i);
    cplx* crow = c.row(i);
    for (std::size_t t = 0; t < d; ++t) {
      if (arow[t] == cplx{0.0, 0.0}) continue;
      simd::caxpy(arow[t], b.row(t), crow, d);
    }
  }
  return c;
}

DensityMatrix project_and_renormalize(const DensityMatrix& rho,
                                      const CMatrix& projector,
                                      double* support_out) {
  if (rho.dim != projector.dim)
    throw DimensionError("project_and_renormalize: dimension mismatch");
  CMatrix prp = matmul(matmul(projector, rho), projector);
  const double support = prp.trace().real();
  if (support_out) *support_out = support;
  const double eps = kSupportEps * std::abs(rho.trace().real());
  if (!(support > eps))
    throw ZeroSupportError("projective measurement has zero support (Tr = " +
                           std::to_string(support) + ")");
  const std::size_t d = rho.dim;
  DensityMatrix out(d);
  // symmetrize away round-off from the two matrix products
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      out.at(i, j) = 0.5 * (prp.at(i, j) + std::conj(prp.at(j, i))) / support;
  return out;
}

ValidityReport validate_density(const DensityMatrix& rho) {
  ValidityReport rep;
  const std::size_t d = rho.dim;
  double herm = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      herm = std::max(herm, std::abs(rho.at(i, j) - std::conj(rho.at(j, i))));
  rep.hermiticity_defect = herm;
  rep.trace_defect = std::abs(rho.trace() - cplx{1.0, 0.0});

  using RowMajorC =
      Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const RowMajorC> m(rho.a.data(), static_cast<Eigen::Index>(d),
                                static_cast<Eigen::Index>(d));
  Eigen::SelfAdjointEigenSolver<RowMajorC> es;
  es.compute(m, Eigen::EigenvaluesOnly);
  rep.min_eigenvalue = es.eigenvalues().minCoeff();
  return rep;
}

double purity(const DensityMatrix& rho) {
  // Tr[rho^2] = sum_ij |rho_ij|^2 for Hermitian rho
  double s = 0.0;
  for (const cplx& z : rho.a) s += std::norm(z);
  return s;
}

}  // namespace qmc
