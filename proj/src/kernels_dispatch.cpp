#include <cstdlib>
#include <string_view>

#include "sns2/kernels.hpp"

namespace sns2::kernels {
namespace {

const KernelTable& select() {
  const char* env = std::getenv("SNS2_SIMD");
  if (env && std::string_view(env) == "scalar") return scalar_table();
  if (const KernelTable* t = avx2_table()) return *t;
  return scalar_table();
}

}  // namespace

const KernelTable& active() {
  static const KernelTable& table = select();
  return table;
}

SimdLevel active_level() {
  return &active() == &scalar_table() ? SimdLevel::Scalar : SimdLevel::Avx2;
}

}  // namespace sns2::kernels
