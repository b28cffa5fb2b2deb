#include "qmc/simd.hpp"

#include <immintrin.h>

// AVX2+FMA kernels over interleaved complex doubles (one __m256d holds two
// complex values). Compiled with -mavx2 -mfma; only reachable through the
// dispatch table after the CPU check.

namespace qmc::simd::detail {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d swap = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, swap));
}

// Sign masks flipping alternate lanes.
inline __m256d neg_even() { return _mm256_setr_pd(-0.0, 0.0, -0.0, 0.0); }
inline __m256d neg_odd() { return _mm256_setr_pd(0.0, -0.0, 0.0, -0.0); }

void avx2_caxpy(cplx a, const cplx* x, cplx* y, std::size_t n) {
  const double* px = reinterpret_cast<const double*>(x);
  double* py = reinterpret_cast<double*>(y);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(px + 2 * i);
    __m256d vy = _mm256_loadu_pd(py + 2 * i);
    __m256d sw = _mm256_permute_pd(vx, 0x5);  // [xi0 xr0 xi1 xr1]
    // even lanes: ar*xr - ai*xi, odd lanes: ar*xi + ai*xr
    vy = _mm256_add_pd(vy, _mm256_fmaddsub_pd(ar, vx, _mm256_mul_pd(ai, sw)));
    _mm256_storeu_pd(py + 2 * i, vy);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void avx2_caxpy_conj(cplx a, const cplx* x, cplx* y, std::size_t n) {
  const double* px = reinterpret_cast<const double*>(x);
  double* py = reinterpret_cast<double*>(y);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(px + 2 * i);
    __m256d vy = _mm256_loadu_pd(py + 2 * i);
    __m256d sw = _mm256_permute_pd(vx, 0x5);
    // even lanes: ai*xi + ar*xr, odd lanes: ai*xr - ar*xi
    vy = _mm256_add_pd(vy, _mm256_fmsubadd_pd(ai, sw, _mm256_mul_pd(ar, vx)));
    _mm256_storeu_pd(py + 2 * i, vy);
  }
  for (; i < n; ++i) y[i] += a * std::conj(x[i]);
}

cplx avx2_cdotc(const cplx* x, const cplx* y, std::size_t n) {
  const double* px = reinterpret_cast<const double*>(x);
  const double* py = reinterpret_cast<const double*>(y);
  __m256d acc1 = _mm256_setzero_pd();  // lanes [xr*yr, xi*yi, ...]
  __m256d acc2 = _mm256_setzero_pd();  // lanes [xi*yr, xr*yi, ...]
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(px + 2 * i);
    __m256d vy = _mm256_loadu_pd(py + 2 * i);
    acc1 = _mm256_fmadd_pd(vx, vy, acc1);
    acc2 = _mm256_fmadd_pd(_mm256_permute_pd(vx, 0x5), vy, acc2);
  }
  double re = hsum(acc1);
  double im = hsum(_mm256_xor_pd(acc2, neg_even()));
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

cplx avx2_cdotu(const cplx* x, const cplx* y, std::size_t n) {
  const double* px = reinterpret_cast<const double*>(x);
  const double* py = reinterpret_cast<const double*>(y);
  __m256d acc1 = _mm256_setzero_pd();
  __m256d acc2 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(px + 2 * i);
    __m256d vy = _mm256_loadu_pd(py + 2 * i);
    acc1 = _mm256_fmadd_pd(vx, vy, acc1);
    acc2 = _mm256_fmadd_pd(_mm256_permute_pd(vx, 0x5), vy, acc2);
  }
  double re = hsum(_mm256_xor_pd(acc1, neg_odd()));
  double im = hsum(acc2);
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
  }
  return {re, im};
}

// block == 2 specialization: one vector holds exactly one block.
void avx2_bws2(const cplx* row, const cplx* w, std::size_t k, cplx* out) {
  const double* pr = reinterpret_cast<const double*>(row);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 2 <= k; j += 2) {
    __m256d b0 = _mm256_loadu_pd(pr + 4 * j);
    __m256d b1 = _mm256_loadu_pd(pr + 4 * (j + 1));
    __m256d w0r = _mm256_set1_pd(w[j].real());
    __m256d w0i = _mm256_set1_pd(w[j].imag());
    __m256d w1r = _mm256_set1_pd(w[j + 1].real());
    __m256d w1i = _mm256_set1_pd(w[j + 1].imag());
    acc0 = _mm256_add_pd(
        acc0, _mm256_fmaddsub_pd(
                  w0r, b0, _mm256_mul_pd(w0i, _mm256_permute_pd(b0, 0x5))));
    acc1 = _mm256_add_pd(
        acc1, _mm256_fmaddsub_pd(
                  w1r, b1, _mm256_mul_pd(w1i, _mm256_permute_pd(b1, 0x5))));
  }
  acc0 = _mm256_add_pd(acc0, acc1);
  if (j < k) {
    __m256d b0 = _mm256_loadu_pd(pr + 4 * j);
    __m256d wr = _mm256_set1_pd(w[j].real());
    __m256d wi = _mm256_set1_pd(w[j].imag());
    acc0 = _mm256_add_pd(
        acc0,
        _mm256_fmaddsub_pd(wr, b0, _mm256_mul_pd(wi, _mm256_permute_pd(b0, 0x5))));
  }
  double buf[4];
  _mm256_storeu_pd(buf, acc0);
  out[0] += cplx{buf[0], buf[1]};
  out[1] += cplx{buf[2], buf[3]};
}

void avx2_block_weighted_sum(const cplx* row, const cplx* w, std::size_t k,
                             std::size_t block, cplx* out) {
  if (block == 2) {
    avx2_bws2(row, w, k, out);
  } else if (block == 1) {
    out[0] += avx2_cdotu(w, row, k);
  } else {
    for (std::size_t j = 0; j < k; ++j)
      avx2_caxpy(w[j], row + j * block, out, block);
  }
}

}  // namespace

extern const KernelTable avx2_table = {
    avx2_caxpy, avx2_caxpy_conj, avx2_cdotc, avx2_cdotu,
    avx2_block_weighted_sum,
};

}  // namespace qmc::simd::detail
