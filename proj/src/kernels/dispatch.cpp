// SPDX-License-Identifier: Apache-2.0

#include "kernels_impl.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

namespace ccm::kernels {
namespace {

#if defined(CCM_HAVE_AVX2)
bool cpu_has_avx2_fma() noexcept {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}
#endif

const KernelTable *initial_table() noexcept {
  if (const KernelTable *t = avx2_table())
    return t;
  return &scalar_table();
}

std::atomic<const KernelTable *> &active_slot() noexcept {
  static std::atomic<const KernelTable *> slot{initial_table()};
  return slot;
}

} // namespace

const KernelTable *avx2_table() noexcept {
#if defined(CCM_HAVE_AVX2)
  if (cpu_has_avx2_fma())
    return &detail::avx2_table_unchecked();
#endif
  return nullptr;
}

const KernelTable &active() noexcept {
  return *active_slot().load(std::memory_order_acquire);
}

void select_backend(Backend b) {
  const KernelTable *t = nullptr;
  switch (b) {
  case Backend::scalar:
    t = &scalar_table();
    break;
  case Backend::avx2:
    t = avx2_table();
    break;
  }
  if (t == nullptr)
    throw std::runtime_error("kernel backend not available on this CPU: " +
                             std::string(b == Backend::avx2 ? "avx2" : "?"));
  active_slot().store(t, std::memory_order_release);
}

Backend best_backend() noexcept { return initial_table()->backend; }

} // namespace ccm::kernels
