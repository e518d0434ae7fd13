#include "sns2/kernels.hpp"

namespace sns2::kernels {
namespace {

bool add_scalar(const Exp* a, const Exp* b, Exp* out, std::size_t n) {
  bool ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    unsigned s = unsigned(a[i]) + unsigned(b[i]);
    ok &= s <= 0xFFu;
    out[i] = static_cast<Exp>(s);
  }
  return ok;
}

std::uint32_t degree_scalar(const Exp* a, std::size_t n) {
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < n; ++i) d += a[i];
  return d;
}

int compare_lex_scalar(const Exp* a, const Exp* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::int64_t dot_scalar(const Exp* a, const std::int32_t* w, std::size_t n) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n; ++i) s += std::int64_t(a[i]) * w[i];
  return s;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{"scalar", add_scalar, degree_scalar, compare_lex_scalar,
                                 dot_scalar};
  return table;
}

}  // namespace sns2::kernels
