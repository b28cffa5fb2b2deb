#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qmc {

using cplx = std::complex<double>;

// Tolerances shared by the validity checks across the library.
inline constexpr double kUnitNormTol = 1e-10;
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kMinEigenvalueTol = -1e-9;
// Relative threshold (w.r.t. trace of the measured state) below which a
// measurement is reported as having zero support.
inline constexpr double kSupportEps = 1e-12;

/// Unit-norm complex amplitude vector.
struct StateVector {
  std::vector<cplx> amp;

  StateVector() = default;
  explicit StateVector(std::vector<cplx> amplitudes) : amp(std::move(amplitudes)) {}

  std::size_t dim() const { return amp.size(); }
  const cplx* data() const { return amp.data(); }
  cplx* data() { return amp.data(); }

  double norm() const;
  bool is_normalized(double tol = kUnitNormTol) const;

  // Canonical basis vector e_index of the given dimension.
  static StateVector basis(std::size_t dim, std::size_t index);
};

/// Dense square complex matrix, row-major. Used both for density matrices
/// and for measurement operators.
struct CMatrix {
  std::size_t dim = 0;
  std::vector<cplx> a;

  CMatrix() = default;
  explicit CMatrix(std::size_t d) : dim(d), a(d * d) {}

  cplx& at(std::size_t i, std::size_t j) { return a[i * dim + j]; }
  const cplx& at(std::size_t i, std::size_t j) const { return a[i * dim + j]; }
  cplx* row(std::size_t i) { return a.data() + i * dim; }
  const cplx* row(std::size_t i) const { return a.data() + i * dim; }

  cplx trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < dim; ++i) t += at(i, i);
    return t;
  }
};

using DensityMatrix = CMatrix;

/// Dimensions (k, l) of the two tensor factors of a bipartite space.
/// The flattened index convention everywhere is row-major with the X
/// subsystem as the slow (outer) index: joint index = i*dim_y + a.
struct BipartiteShape {
  std::size_t dim_x = 0;  // k
  std::size_t dim_y = 0;  // l

  std::size_t joint_dim() const { return dim_x * dim_y; }
};

/// Result of validate_density: measured defects plus the pass verdict.
struct ValidityReport {
  double hermiticity_defect = 0.0;
  double trace_defect = 0.0;
  double min_eigenvalue = 0.0;

  bool hermitian_ok() const { return hermiticity_defect <= kHermitianTol; }
  bool trace_ok() const { return trace_defect <= kTraceTol; }
  bool psd_ok() const { return min_eigenvalue >= kMinEigenvalueTol; }
  bool ok() const { return hermitian_ok() && trace_ok() && psd_ok(); }
};

}  // namespace qmc
