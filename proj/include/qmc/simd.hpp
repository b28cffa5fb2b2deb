#pragma once

#include <complex>
#include <cstddef>

// Data-parallel complex kernels behind the dense linear algebra. Every
// kernel has a scalar reference implementation and, on x86-64, an AVX2+FMA
// variant selected at runtime. The two are equivalence-tested; callers only
// see the dispatching entry points below.

namespace qmc::simd {

using cplx = std::complex<double>;

enum class Backend { scalar, avx2 };

// Backend in use, resolved on first call from CPU features and the
// QMC_SIMD environment variable ("scalar", "avx2", "auto").
Backend active_backend();
const char* backend_name(Backend b);
// Force a backend; throws qmc::SpecError if it is not available on this CPU.
void set_backend(Backend b);
bool backend_available(Backend b);

// y[i] += a * x[i]
void caxpy(cplx a, const cplx* x, cplx* y, std::size_t n);
// y[i] += a * conj(x[i])
void caxpy_conj(cplx a, const cplx* x, cplx* y, std::size_t n);
// sum_i conj(x[i]) * y[i]
cplx cdotc(const cplx* x, const cplx* y, std::size_t n);
// sum_i x[i] * y[i]
cplx cdotu(const cplx* x, const cplx* y, std::size_t n);
// out[b] += sum_j w[j] * row[j*block + b] for b in [0, block).
// `row` holds k contiguous blocks of `block` complex entries.
void block_weighted_sum(const cplx* row, const cplx* w, std::size_t k,
                        std::size_t block, cplx* out);

namespace detail {

struct KernelTable {
  void (*caxpy)(cplx, const cplx*, cplx*, std::size_t);
  void (*caxpy_conj)(cplx, const cplx*, cplx*, std::size_t);
  cplx (*cdotc)(const cplx*, const cplx*, std::size_t);
  cplx (*cdotu)(const cplx*, const cplx*, std::size_t);
  void (*block_weighted_sum)(const cplx*, const cplx*, std::size_t,
                             std::size_t, cplx*);
};

const KernelTable& active_table();

}  // namespace detail

inline void caxpy(cplx a, const cplx* x, cplx* y, std::size_t n) {
  detail::active_table().caxpy(a, x, y, n);
}
inline void caxpy_conj(cplx a, const cplx* x, cplx* y, std::size_t n) {
  detail::active_table().caxpy_conj(a, x, y, n);
}
inline cplx cdotc(const cplx* x, const cplx* y, std::size_t n) {
  return detail::active_table().cdotc(x, y, n);
}
inline cplx cdotu(const cplx* x, const cplx* y, std::size_t n) {
  return detail::active_table().cdotu(x, y, n);
}
inline void block_weighted_sum(const cplx* row, const cplx* w, std::size_t k,
                               std::size_t block, cplx* out) {
  detail::active_table().block_weighted_sum(row, w, k, block, out);
}

}  // namespace qmc::simd
