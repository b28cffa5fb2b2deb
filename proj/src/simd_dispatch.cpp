#include "qmc/simd.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <mutex>

#include "qmc/errors.hpp"

namespace qmc::simd {

namespace detail {
extern const KernelTable scalar_table;
#if QMC_HAVE_AVX2
extern const KernelTable avx2_table;
#endif
}  // namespace detail

namespace {

bool cpu_has_avx2() {
#if QMC_HAVE_AVX2 && defined(__GNUC__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

struct Dispatch {
  std::atomic<const detail::KernelTable*> table{nullptr};
  std::atomic<Backend> backend{Backend::scalar};
  std::once_flag once;

  void select(Backend b) {
#if QMC_HAVE_AVX2
    if (b == Backend::avx2) {
      table.store(&detail::avx2_table, std::memory_order_release);
      backend.store(Backend::avx2, std::memory_order_release);
      return;
    }
#endif
    table.store(&detail::scalar_table, std::memory_order_release);
    backend.store(Backend::scalar, std::memory_order_release);
  }

  void init() {
    std::call_once(once, [this] {
      Backend pick = cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
      if (const char* env = std::getenv("QMC_SIMD")) {
        if (std::strcmp(env, "scalar") == 0) pick = Backend::scalar;
        else if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) pick = Backend::avx2;
        // anything else, including "auto": keep the CPU-detected choice
      }
      select(pick);
    });
  }
};

Dispatch& dispatch() {
  static Dispatch d;
  return d;
}

}  // namespace

namespace detail {
const KernelTable& active_table() {
  Dispatch& d = dispatch();
  const KernelTable* t = d.table.load(std::memory_order_acquire);
  if (!t) {
    d.init();
    t = d.table.load(std::memory_order_acquire);
  }
  return *t;
}
}  // namespace detail

Backend active_backend() {
  detail::active_table();
  return dispatch().backend.load(std::memory_order_acquire);
}

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::avx2: return "avx2";
    case Backend::scalar: return "scalar";
  }
  return "scalar";
}

bool backend_available(Backend b) {
  return b == Backend::scalar || cpu_has_avx2();
}

void set_backend(Backend b) {
  if (!backend_available(b))
    throw SpecError("simd backend not available on this CPU");
  detail::active_table();  // make sure init ran first
  dispatch().select(b);
}

}  // namespace qmc::simd
