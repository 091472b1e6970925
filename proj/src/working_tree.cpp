#include "rnni/working_tree.hpp"

#include <cassert>
#include <stdexcept>

#include "rnni/error.hpp"

namespace rnni {

WorkingTree::WorkingTree(const RankedTree& tree)
    : n_(tree.leaf_count()),
      leaves_(tree.leaves_ptr()),
      clusters_(tree.clusters()),
      parent_rank_(tree.parent_rank_),
      children_(tree.children_) {}

Rank WorkingTree::mrca_rank(const LeafSet& target) const {
  int x = target.first();
  assert(x >= 0);
  Rank r = parent_rank_[x];
  while (!clusters_[r - 1].contains(target)) {
    r = parent_rank_[internal_node_id(n_, r)];
    assert(r >= 1);
  }
  return r;
}

void WorkingTree::or_node_into(LeafSet& dst, NodeId id) const {
  if (is_leaf_id(n_, id)) {
    dst.set(id);
  } else {
    dst |= clusters_[rank_of_id(n_, id) - 1];
  }
}

void WorkingTree::apply_rank_swap(Rank t) {
  assert(t >= 1 && t <= n_ - 2);
  assert(!is_edge_interval(t));
  const NodeId it = internal_node_id(n_, t);
  const NodeId it1 = internal_node_id(n_, t + 1);

  // Locate the parents' child slots before rewriting anything; the two
  // parents may coincide.
  const Rank pa = parent_rank_[it];
  const Rank pb = parent_rank_[it1];
  auto& pa_children = children_[pa - 1];
  auto& pb_children = children_[pb - 1];
  int pa_slot = pa_children[0] == it ? 0 : 1;
  int pb_slot = pb_children[0] == it1 ? 0 : 1;
  assert(pa_children[pa_slot] == it && pb_children[pb_slot] == it1);

  std::swap(clusters_[t - 1], clusters_[t]);
  std::swap(children_[t - 1], children_[t]);
  std::swap(parent_rank_[it], parent_rank_[it1]);
  pa_children[pa_slot] = it1;
  pb_children[pb_slot] = it;
  for (NodeId c : children_[t - 1]) parent_rank_[c] = t;
  for (NodeId c : children_[t]) parent_rank_[c] = t + 1;
}

void WorkingTree::apply_nni(Rank t, NodeId stay) {
  assert(t >= 1 && t <= n_ - 2);
  assert(is_edge_interval(t));
  const NodeId it = internal_node_id(n_, t);
  auto& u_children = children_[t - 1];
  auto& v_children = children_[t];
  assert(u_children[0] == stay || u_children[1] == stay);

  const NodeId moved = u_children[0] == stay ? u_children[1] : u_children[0];
  const NodeId other = v_children[0] == it ? v_children[1] : v_children[0];
  assert(v_children[0] == it || v_children[1] == it);

  u_children = {stay, other};
  v_children = {it, moved};
  parent_rank_[other] = t;
  parent_rank_[moved] = t + 1;

  LeafSet& c = clusters_[t - 1];
  c.clear();
  or_node_into(c, stay);
  or_node_into(c, other);
}

NodeId WorkingTree::decreasing_stay_child(Rank t,
                                          const LeafSet& target) const {
  if (t < 1 || t > n_ - 2 || !is_edge_interval(t))
    fail(errc::no_decreasing_move,
         "interval " + std::to_string(t) + " is not an edge");
  const NodeId it = internal_node_id(n_, t);
  const auto& u_children = children_[t - 1];
  const auto& v_children = children_[t];
  const NodeId other = v_children[0] == it ? v_children[1] : v_children[0];

  bool hit0 = !is_leaf_id(n_, u_children[0])
                  ? clusters_[rank_of_id(n_, u_children[0]) - 1].intersects(target)
                  : target.test(u_children[0]);
  bool hit1 = !is_leaf_id(n_, u_children[1])
                  ? clusters_[rank_of_id(n_, u_children[1]) - 1].intersects(target)
                  : target.test(u_children[1]);
  bool hit_other = !is_leaf_id(n_, other)
                       ? clusters_[rank_of_id(n_, other) - 1].intersects(target)
                       : target.test(other);
  if (hit0 == hit1 || !hit_other)
    fail(errc::no_decreasing_move,
         "no NNI at interval " + std::to_string(t) +
             " lowers the MRCA of the target");
  return hit0 ? u_children[0] : u_children[1];
}

void WorkingTree::apply_move(const Move& move) {
  if (move.t < 1 || move.t > n_ - 2)
    fail(errc::illegal_move, "interval rank " + std::to_string(move.t) +
                                 " outside 1.." + std::to_string(n_ - 2));
  if (move.kind == MoveKind::rank_swap) {
    if (is_edge_interval(move.t))
      fail(errc::illegal_move, "rank swap on edge interval " +
                                   std::to_string(move.t));
    apply_rank_swap(move.t);
    return;
  }
  if (!is_edge_interval(move.t))
    fail(errc::illegal_move,
         "NNI on non-edge interval " + std::to_string(move.t));
  const auto& u_children = children_[move.t - 1];
  NodeId stay;
  if (node_cluster(u_children[0]) == move.stay_child) {
    stay = u_children[0];
  } else if (node_cluster(u_children[1]) == move.stay_child) {
    stay = u_children[1];
  } else {
    fail(errc::bad_stay_child,
         "stay_child is not a child cluster of node " +
             std::to_string(move.t));
  }
  apply_nni(move.t, stay);
}

RankedTree WorkingTree::to_tree() const {
  return RankedTree(leaves_, clusters_, parent_rank_, children_);
}

}  // namespace rnni
