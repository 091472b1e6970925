#pragma once

#include <array>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rnni/leaf_set.hpp"

namespace rnni {

// Internal nodes carry ranks 1..n-1; leaves have implicit rank 0 and never
// appear in interval operations.
using Rank = int;

// Node ids: leaves 0..n-1 (their index in the leaf table), internal node of
// rank t has id (n-1)+t.
using NodeId = int;

inline NodeId internal_node_id(int n, Rank t) { return n - 1 + t; }
inline bool is_leaf_id(int n, NodeId id) { return id < n; }
inline Rank rank_of_id(int n, NodeId id) { return id - (n - 1); }

// The leaf label table of a tree: labels sorted lexicographically, unique,
// restricted to [A-Za-z0-9_.-]. The sort order is the canonical leaf order;
// leaf indices everywhere refer to positions in this table.
class LeafTable {
 public:
  static LeafTable from_labels(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Index of `name`, or -1.
  int index_of(std::string_view name) const;

  bool operator==(const LeafTable& other) const {
    return labels_ == other.labels_;
  }
  bool operator!=(const LeafTable& other) const { return !(*this == other); }

 private:
  std::vector<std::string> labels_;
};

// Labels a1..an, the paper's default leaf set.
LeafTable default_leaf_table(int n);
std::shared_ptr<const LeafTable> shared_default_leaf_table(int n);

// One child of an internal node: a leaf (index into the leaf table) or an
// internal node (its rank), together with the cluster it induces.
struct ChildDesc {
  bool is_leaf;
  int index;  // leaf index or rank
  LeafSet cluster;
};

// A ranked phylogenetic tree in canonical cluster representation: the list
// [C_1, ..., C_{n-1}] of clusters induced by the internal nodes in rank
// order. Immutable after construction; equality of (leaves, clusters) is
// equality of trees. A parent/children index is derived at construction.
class RankedTree {
 public:
  static RankedTree from_clusters(LeafTable leaves,
                                  std::vector<LeafSet> clusters);
  static RankedTree from_clusters(std::shared_ptr<const LeafTable> leaves,
                                  std::vector<LeafSet> clusters);

  int leaf_count() const { return leaves_->size(); }
  int internal_count() const { return leaves_->size() - 1; }

  const LeafTable& leaves() const { return *leaves_; }
  const std::shared_ptr<const LeafTable>& leaves_ptr() const {
    return leaves_;
  }

  const LeafSet& cluster(Rank t) const { return clusters_[t - 1]; }
  const std::vector<LeafSet>& clusters() const { return clusters_; }

  // Smallest rank t with s contained in C_t. s must be a non-empty set over
  // this tree's leaves.
  Rank mrca_rank(const LeafSet& s) const;

  // True iff the node of rank t+1 is the parent of the node of rank t
  // (equivalently C_t strictly contained in C_{t+1}). 1 <= t <= n-2.
  bool is_edge_interval(Rank t) const;

  std::pair<ChildDesc, ChildDesc> children_of(Rank t) const;

  // Index queries (no bounds reporting; asserted).
  Rank parent_rank_of_leaf(int leaf) const { return parent_rank_[leaf]; }
  Rank parent_rank_of_internal(Rank t) const {  // 0 for the root
    return parent_rank_[internal_node_id(leaf_count(), t)];
  }
  const std::array<NodeId, 2>& child_ids(Rank t) const {
    return children_[t - 1];
  }

  bool operator==(const RankedTree& other) const;
  bool operator!=(const RankedTree& other) const { return !(*this == other); }

  std::size_t hash() const;

 private:
  friend class WorkingTree;

  RankedTree(std::shared_ptr<const LeafTable> leaves,
             std::vector<LeafSet> clusters, std::vector<Rank> parent_rank,
             std::vector<std::array<NodeId, 2>> children)
      : leaves_(std::move(leaves)),
        clusters_(std::move(clusters)),
        parent_rank_(std::move(parent_rank)),
        children_(std::move(children)) {}

  std::shared_ptr<const LeafTable> leaves_;
  std::vector<LeafSet> clusters_;                 // index t-1
  std::vector<Rank> parent_rank_;                 // by NodeId; root maps to 0
  std::vector<std::array<NodeId, 2>> children_;   // index t-1
};

struct TreeHash {
  std::size_t operator()(const RankedTree& t) const { return t.hash(); }
};

}  // namespace rnni
