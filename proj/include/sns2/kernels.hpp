#pragma once

// Exponent-vector kernels. Every monomial operation in the library bottoms out
// here; a scalar reference implementation and an AVX2 variant are provided and
// the active table is chosen once at startup from CPUID (override with
// SNS2_SIMD=scalar).

#include <cstddef>
#include <cstdint>
#include <span>

namespace sns2::kernels {

using Exp = std::uint8_t;

struct KernelTable {
  const char* name;
  // out = a + b elementwise; false if any lane overflows.
  bool (*add)(const Exp* a, const Exp* b, Exp* out, std::size_t n);
  std::uint32_t (*degree)(const Exp* a, std::size_t n);
  // -1 / 0 / +1 by the first differing lane.
  int (*compare_lex)(const Exp* a, const Exp* b, std::size_t n);
  // sum a[i] * w[i]; callers keep |w[i]| < 2^23.
  std::int64_t (*dot)(const Exp* a, const std::int32_t* w, std::size_t n);
};

enum class SimdLevel { Scalar, Avx2 };

const KernelTable& scalar_table();
// nullptr when the binary has no AVX2 path or the CPU lacks it.
const KernelTable* avx2_table();

const KernelTable& active();
SimdLevel active_level();

inline bool add(std::span<const Exp> a, std::span<const Exp> b, std::span<Exp> out) {
  return active().add(a.data(), b.data(), out.data(), a.size());
}
inline std::uint32_t degree(std::span<const Exp> a) {
  return active().degree(a.data(), a.size());
}
inline int compare_lex(std::span<const Exp> a, std::span<const Exp> b) {
  return active().compare_lex(a.data(), b.data(), a.size());
}
inline std::int64_t dot(std::span<const Exp> a, std::span<const std::int32_t> w) {
  return active().dot(a.data(), w.data(), a.size());
}

}  // namespace sns2::kernels
