#include "qmc/simd.hpp"

// Reference kernels. Plain loops, no intrinsics; the AVX2 variants are
// checked against these.

namespace qmc::simd::detail {

namespace {

void scalar_caxpy(cplx a, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scalar_caxpy_conj(cplx a, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * std::conj(x[i]);
}

cplx scalar_cdotc(const cplx* x, const cplx* y, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

cplx scalar_cdotu(const cplx* x, const cplx* y, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
  }
  return {re, im};
}

void scalar_block_weighted_sum(const cplx* row, const cplx* w, std::size_t k,
                               std::size_t block, cplx* out) {
  for (std::size_t j = 0; j < k; ++j) {
    const cplx wj = w[j];
    const cplx* blk = row + j * block;
    for (std::size_t b = 0; b < block; ++b) out[b] += wj * blk[b];
  }
}

}  // namespace

extern const KernelTable scalar_table = {
    scalar_caxpy, scalar_caxpy_conj, scalar_cdotc, scalar_cdotu,
    scalar_block_weighted_sum,
};

}  // namespace qmc::simd::detail
