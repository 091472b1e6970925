#pragma once

#include <array>
#include <memory>
#include <vector>

#include "rnni/moves.hpp"
#include "rnni/ranked_tree.hpp"

namespace rnni {

// The mutable tree behind move application and FindPath: one working copy
// whose moves mutate in place. Slots are indexed by rank, so a node's id
// follows its rank; a rank swap exchanges slot contents, an NNI rewrites one
// interval. Each move costs O(n/w) set operations.
class WorkingTree {
 public:
  explicit WorkingTree(const RankedTree& tree);

  int leaf_count() const { return n_; }
  const LeafSet& cluster(Rank t) const { return clusters_[t - 1]; }
  const std::shared_ptr<const LeafTable>& leaves_ptr() const {
    return leaves_;
  }

  bool is_edge_interval(Rank t) const {
    return parent_rank_[internal_node_id(n_, t)] == t + 1;
  }

  Rank mrca_rank(const LeafSet& target) const;

  NodeId child_id(Rank t, int which) const { return children_[t - 1][which]; }

  LeafSet node_cluster(NodeId id) const {
    if (is_leaf_id(n_, id)) return LeafSet::singleton(n_, id);
    return clusters_[rank_of_id(n_, id) - 1];
  }

  // Validating application; throws illegal_move / bad_stay_child.
  void apply_move(const Move& move);

  // Unchecked primitives used by FindPath (asserted preconditions).
  void apply_rank_swap(Rank t);
  void apply_nni(Rank t, NodeId stay);

  // The child of node t to keep below so that the NNI at t lowers the MRCA
  // rank of `target`; throws no_decreasing_move when the preconditions fail.
  NodeId decreasing_stay_child(Rank t, const LeafSet& target) const;

  RankedTree to_tree() const;
  bool equals_tree(const RankedTree& other) const {
    return clusters_ == other.clusters();
  }

 private:
  void or_node_into(LeafSet& dst, NodeId id) const;

  int n_;
  std::shared_ptr<const LeafTable> leaves_;
  std::vector<LeafSet> clusters_;                // index t-1
  std::vector<Rank> parent_rank_;                // by NodeId; root maps to 0
  std::vector<std::array<NodeId, 2>> children_;  // index t-1
};

}  // namespace rnni
