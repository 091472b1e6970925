#include "rnni/ranked_tree.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "rnni/error.hpp"

namespace rnni {

namespace {

bool valid_label_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-';
}

std::string set_to_string(const LeafTable& leaves, const LeafSet& s) {
  std::string out = "{";
  for (int i = s.first(); i >= 0; i = s.next(i)) {
    if (out.size() > 1) out += ',';
    out += leaves.label(i);
  }
  out += '}';
  return out;
}

}  // namespace

LeafTable LeafTable::from_labels(std::vector<std::string> labels) {
  for (const auto& l : labels) {
    if (l.empty() || !std::all_of(l.begin(), l.end(), valid_label_char))
      fail(errc::syntax_error, "invalid leaf label '" + l + "'");
  }
  std::sort(labels.begin(), labels.end());
  auto dup = std::adjacent_find(labels.begin(), labels.end());
  if (dup != labels.end())
    fail(errc::duplicate_leaf, "leaf label '" + *dup + "' repeats");
  LeafTable t;
  t.labels_ = std::move(labels);
  return t;
}

int LeafTable::index_of(std::string_view name) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), name);
  if (it == labels_.end() || *it != name) return -1;
  return static_cast<int>(it - labels_.begin());
}

LeafTable default_leaf_table(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 1; i <= n; ++i) labels.push_back("a" + std::to_string(i));
  return LeafTable::from_labels(std::move(labels));
}

std::shared_ptr<const LeafTable> shared_default_leaf_table(int n) {
  return std::make_shared<const LeafTable>(default_leaf_table(n));
}

RankedTree RankedTree::from_clusters(LeafTable leaves,
                                     std::vector<LeafSet> clusters) {
  return from_clusters(std::make_shared<const LeafTable>(std::move(leaves)),
                       std::move(clusters));
}

RankedTree RankedTree::from_clusters(std::shared_ptr<const LeafTable> leaves,
                                     std::vector<LeafSet> clusters) {
  const int n = leaves->size();
  if (n < 2) fail(errc::bad_root, "a tree needs at least 2 leaves");
  if (static_cast<int>(clusters.size()) != n - 1)
    fail(errc::bad_root, "expected " + std::to_string(n - 1) + " clusters, got " +
                             std::to_string(clusters.size()));
  for (const auto& c : clusters) {
    if (c.capacity() != n)
      throw std::invalid_argument("cluster capacity does not match leaf count");
  }

  // Replay the bottom-up merge process: blocks start as leaf singletons and
  // every C_t must be the union of exactly two current blocks.
  std::vector<Rank> parent_rank(2 * n - 1, 0);
  std::vector<std::array<NodeId, 2>> children(n - 1);
  std::vector<NodeId> block_of_leaf(n);
  for (int i = 0; i < n; ++i) block_of_leaf[i] = i;

  auto block_cluster = [&](NodeId id) -> LeafSet {
    if (is_leaf_id(n, id)) return LeafSet::singleton(n, id);
    return clusters[rank_of_id(n, id) - 1];
  };

  for (Rank t = 1; t <= n - 1; ++t) {
    const LeafSet& c = clusters[t - 1];
    int x = c.first();
    if (x < 0)
      fail(errc::not_binary, "cluster " + std::to_string(t) + " is empty");
    NodeId b1 = block_of_leaf[x];
    LeafSet b1c = block_cluster(b1);
    if (!b1c.subset_of(c))
      fail(errc::not_laminar, "cluster " + std::to_string(t) + " " +
                                  set_to_string(*leaves, c) +
                                  " splits the block " +
                                  set_to_string(*leaves, b1c));
    int y = c.first_not_in(b1c);
    if (y < 0)
      fail(errc::not_binary, "cluster " + std::to_string(t) + " " +
                                 set_to_string(*leaves, c) +
                                 " does not merge two blocks");
    NodeId b2 = block_of_leaf[y];
    LeafSet b2c = block_cluster(b2);
    if (!b2c.subset_of(c) || b1c.count() + b2c.count() != c.count())
      fail(errc::not_binary, "cluster " + std::to_string(t) + " " +
                                 set_to_string(*leaves, c) +
                                 " is not a union of two blocks");
    parent_rank[b1] = t;
    parent_rank[b2] = t;
    children[t - 1] = {b1, b2};
    NodeId merged = internal_node_id(n, t);
    for (int i = c.first(); i >= 0; i = c.next(i)) block_of_leaf[i] = merged;
  }

  if (clusters[n - 2].count() != n)
    fail(errc::bad_root, "last cluster is not the full leaf set");

  return RankedTree(std::move(leaves), std::move(clusters),
                    std::move(parent_rank), std::move(children));
}

Rank RankedTree::mrca_rank(const LeafSet& s) const {
  const int n = leaf_count();
  if (s.capacity() != n)
    throw std::invalid_argument("set capacity does not match leaf count");
  int x = s.first();
  if (x < 0) throw std::invalid_argument("mrca of an empty set");
  Rank r = parent_rank_[x];
  while (!clusters_[r - 1].contains(s)) {
    r = parent_rank_[internal_node_id(n, r)];
    assert(r >= 1);
  }
  return r;
}

bool RankedTree::is_edge_interval(Rank t) const {
  const int n = leaf_count();
  if (t < 1 || t > n - 2)
    fail(errc::rank_out_of_bounds,
         "interval rank " + std::to_string(t) + " outside 1.." +
             std::to_string(n - 2));
  return parent_rank_[internal_node_id(n, t)] == t + 1;
}

std::pair<ChildDesc, ChildDesc> RankedTree::children_of(Rank t) const {
  const int n = leaf_count();
  if (t < 1 || t > n - 1)
    fail(errc::rank_out_of_bounds,
         "rank " + std::to_string(t) + " outside 1.." + std::to_string(n - 1));
  auto desc = [&](NodeId id) {
    if (is_leaf_id(n, id))
      return ChildDesc{true, id, LeafSet::singleton(n, id)};
    Rank r = rank_of_id(n, id);
    return ChildDesc{false, r, clusters_[r - 1]};
  };
  const auto& ch = children_[t - 1];
  return {desc(ch[0]), desc(ch[1])};
}

bool RankedTree::operator==(const RankedTree& other) const {
  if (leaves_ != other.leaves_ && *leaves_ != *other.leaves_) return false;
  return clusters_ == other.clusters_;
}

std::size_t RankedTree::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& c : clusters_) {
    h ^= c.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace rnni
