#include "rnni/bitkernel.hpp"

#include <bit>
#include <cstdlib>
#include <cstring>

namespace rnni {

namespace {

bool scalar_equal(const std::uint64_t* a, const std::uint64_t* b,
                  std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

bool scalar_subset(const std::uint64_t* a, const std::uint64_t* b,
                   std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

bool scalar_disjoint(const std::uint64_t* a, const std::uint64_t* b,
                     std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) {
    if (a[i] & b[i]) return false;
  }
  return true;
}

void scalar_or_assign(std::uint64_t* a, const std::uint64_t* b,
                      std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) a[i] |= b[i];
}

std::size_t scalar_popcount(const std::uint64_t* a, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i]);
  return total;
}

const BitKernelOps kScalar = {
    scalar_equal,  scalar_subset,   scalar_disjoint,
    scalar_or_assign, scalar_popcount, "scalar",
};

const BitKernelOps& select_kernels() {
  if (const char* env = std::getenv("RNNI_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return kScalar;
    if (std::strcmp(env, "avx2") == 0 && avx2_available())
      return avx2_kernels();
  }
  if (avx2_available()) return avx2_kernels();
  return kScalar;
}

}  // namespace

const BitKernelOps& scalar_kernels() { return kScalar; }

const BitKernelOps& kernels() {
  static const BitKernelOps& active = select_kernels();
  return active;
}

}  // namespace rnni
