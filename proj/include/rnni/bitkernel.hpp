#pragma once

#include <cstddef>
#include <cstdint>

namespace rnni {

// Word-level set kernels behind LeafSet. All spans are uint64_t arrays of
// length `words`; callers guarantee equal lengths. Two implementations are
// provided: a portable scalar reference and an AVX2 variant. The active one
// is picked once at startup from CPU capabilities (RNNI_KERNELS=scalar|avx2
// overrides the choice).
struct BitKernelOps {
  bool (*equal)(const std::uint64_t* a, const std::uint64_t* b,
                std::size_t words);
  // a subset of b, i.e. (a & ~b) == 0
  bool (*subset)(const std::uint64_t* a, const std::uint64_t* b,
                 std::size_t words);
  // (a & b) == 0
  bool (*disjoint)(const std::uint64_t* a, const std::uint64_t* b,
                   std::size_t words);
  // a |= b
  void (*or_assign)(std::uint64_t* a, const std::uint64_t* b,
                    std::size_t words);
  std::size_t (*popcount)(const std::uint64_t* a, std::size_t words);
  const char* name;
};

const BitKernelOps& scalar_kernels();

bool avx2_available();
// Valid to call only when avx2_available(); contents require AVX2 at runtime.
const BitKernelOps& avx2_kernels();

// The runtime-selected table.
const BitKernelOps& kernels();

}  // namespace rnni
