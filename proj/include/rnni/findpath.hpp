#pragma once

#include <cstdint>
#include <vector>

#include "rnni/moves.hpp"
#include "rnni/ranked_tree.hpp"

namespace rnni {

// A start tree plus an ordered move list; the end tree is defined by folding
// apply over the moves. Each move is legal on the tree reached so far.
struct TreePath {
  RankedTree start;
  std::vector<Move> moves;
  // Number of moves emitted up to and including stage k = 1..n-2; after
  // stage k the first k clusters of the current tree equal the goal's.
  std::vector<std::int64_t> stage_ends;

  std::int64_t length() const { return static_cast<std::int64_t>(moves.size()); }
};

// The path-building algorithm: considers the goal's clusters in rank order
// and lowers the rank of each cluster's MRCA one interval at a time, by an
// NNI move on an edge interval and a rank swap otherwise. The result ends at
// R and its length is the RNNI distance (shortest for rho = 1 only). Runs in
// O(n^2) set operations; intermediate trees are never materialized.
TreePath find_path(const RankedTree& T, const RankedTree& R);

// Length of find_path(T, R) without recording the moves.
std::int64_t distance(const RankedTree& T, const RankedTree& R);

// Sum of move weights: 1 per NNI move, rho per rank move.
double path_weight(const TreePath& path, Rho rho);

// [start, apply(start, m_1), ..., end]; size = moves + 1. Writing each tree
// out costs O(n), so this is cubic where find_path is quadratic.
std::vector<RankedTree> materialize(const TreePath& path);

// The tree the path ends at, without materializing intermediates.
RankedTree end_of(const TreePath& path);

}  // namespace rnni
