#include "sns2/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define SNS2_HAVE_AVX2_PATH 1
#endif

namespace sns2::kernels {

#ifdef SNS2_HAVE_AVX2_PATH
namespace {

#define SNS2_AVX2 __attribute__((target("avx2")))

SNS2_AVX2 bool add_avx2(const Exp* a, const Exp* b, Exp* out, std::size_t n) {
  std::size_t i = 0;
  __m256i bad = _mm256_setzero_si256();
  for (; i + 32 <= n; i += 32) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i wrap = _mm256_add_epi8(va, vb);
    __m256i sat = _mm256_adds_epu8(va, vb);
    bad = _mm256_or_si256(bad, _mm256_xor_si256(wrap, sat));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), wrap);
  }
  bool ok = _mm256_testz_si256(bad, bad);
  for (; i < n; ++i) {
    unsigned s = unsigned(a[i]) + unsigned(b[i]);
    ok &= s <= 0xFFu;
    out[i] = static_cast<Exp>(s);
  }
  return ok;
}

SNS2_AVX2 std::uint32_t degree_avx2(const Exp* a, std::size_t n) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  const __m256i zero = _mm256_setzero_si256();
  for (; i + 32 <= n; i += 32) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(va, zero));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t d = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) d += a[i];
  return static_cast<std::uint32_t>(d);
}

SNS2_AVX2 int compare_lex_avx2(const Exp* a, const Exp* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    unsigned eq = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(va, vb)));
    if (eq != 0xFFFFFFFFu) {
      std::size_t j = i + static_cast<std::size_t>(__builtin_ctz(~eq));
      return a[j] < b[j] ? -1 : 1;
    }
  }
  for (; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

SNS2_AVX2 std::int64_t dot_avx2(const Exp* a, const std::int32_t* w, std::size_t n) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 8 <= n; i += 8) {
    __m128i bytes = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(a + i));
    __m256i va = _mm256_cvtepu8_epi32(bytes);
    __m256i vw = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i));
    __m256i prod = _mm256_mullo_epi32(va, vw);
    acc = _mm256_add_epi64(acc, _mm256_cvtepi32_epi64(_mm256_castsi256_si128(prod)));
    acc = _mm256_add_epi64(acc, _mm256_cvtepi32_epi64(_mm256_extracti128_si256(prod, 1)));
  }
  alignas(32) std::int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::int64_t s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) s += std::int64_t(a[i]) * w[i];
  return s;
}

}  // namespace

const KernelTable* avx2_table() {
  static const bool supported = __builtin_cpu_supports("avx2");
  static const KernelTable table{"avx2", add_avx2, degree_avx2, compare_lex_avx2, dot_avx2};
  return supported ? &table : nullptr;
}

#else

const KernelTable* avx2_table() { return nullptr; }

#endif

}  // namespace sns2::kernels
