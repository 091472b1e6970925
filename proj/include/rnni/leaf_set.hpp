#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

#include "rnni/bitkernel.hpp"

namespace rnni {

// A set of leaf indices, stored as a bitset over 64-bit words. Clusters are
// LeafSets; all sets belonging to one tree share the same capacity (the leaf
// count n). Bulk operations route through the runtime-selected kernels.
class LeafSet {
 public:
  LeafSet() = default;

  explicit LeafSet(int n_bits)
      : bits_(n_bits), words_((static_cast<std::size_t>(n_bits) + 63) / 64) {}

  static LeafSet singleton(int n_bits, int i) {
    LeafSet s(n_bits);
    s.set(i);
    return s;
  }

  int capacity() const { return bits_; }

  bool test(int i) const {
    assert(i >= 0 && i < bits_);
    return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }

  void set(int i) {
    assert(i >= 0 && i < bits_);
    words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void reset(int i) {
    assert(i >= 0 && i < bits_);
    words_[static_cast<std::size_t>(i) >> 6] &=
        ~(std::uint64_t{1} << (i & 63));
  }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  bool empty() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }

  int count() const {
    return static_cast<int>(kernels().popcount(words_.data(), words_.size()));
  }

  // Lowest set bit, or -1 when empty.
  int first() const { return next(-1); }

  // Next set bit strictly after `after`, or -1.
  int next(int after) const {
    int start = after + 1;
    if (start >= bits_) return -1;
    std::size_t wi = static_cast<std::size_t>(start) >> 6;
    std::uint64_t w = words_[wi] >> (start & 63);
    if (w) return start + std::countr_zero(w);
    for (++wi; wi < words_.size(); ++wi) {
      if (words_[wi]) return static_cast<int>(wi * 64) + std::countr_zero(words_[wi]);
    }
    return -1;
  }

  // Lowest bit set in *this but not in `other`, or -1.
  int first_not_in(const LeafSet& other) const {
    assert(bits_ == other.bits_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i] & ~other.words_[i];
      if (w) return static_cast<int>(i * 64) + std::countr_zero(w);
    }
    return -1;
  }

  bool operator==(const LeafSet& other) const {
    return bits_ == other.bits_ &&
           kernels().equal(words_.data(), other.words_.data(), words_.size());
  }

  bool operator!=(const LeafSet& other) const { return !(*this == other); }

  // *this a subset of `other`.
  bool subset_of(const LeafSet& other) const {
    assert(bits_ == other.bits_);
    return kernels().subset(words_.data(), other.words_.data(), words_.size());
  }

  // *this contains `other`.
  bool contains(const LeafSet& other) const { return other.subset_of(*this); }

  bool disjoint_with(const LeafSet& other) const {
    assert(bits_ == other.bits_);
    return kernels().disjoint(words_.data(), other.words_.data(),
                              words_.size());
  }

  bool intersects(const LeafSet& other) const {
    return !disjoint_with(other);
  }

  LeafSet& operator|=(const LeafSet& other) {
    assert(bits_ == other.bits_);
    kernels().or_assign(words_.data(), other.words_.data(), words_.size());
    return *this;
  }

  friend LeafSet operator|(LeafSet a, const LeafSet& b) {
    a |= b;
    return a;
  }

  std::size_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto w : words_) {
      h ^= w;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h ^ static_cast<std::uint64_t>(bits_));
  }

  // Total order used only for canonical sorting (word-lexicographic).
  bool operator<(const LeafSet& other) const {
    assert(bits_ == other.bits_);
    for (std::size_t i = words_.size(); i-- > 0;) {
      if (words_[i] != other.words_[i]) return words_[i] < other.words_[i];
    }
    return false;
  }

  const std::uint64_t* words() const { return words_.data(); }
  std::size_t word_count() const { return words_.size(); }

 private:
  int bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace rnni
