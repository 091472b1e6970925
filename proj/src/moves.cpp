#include "rnni/moves.hpp"

#include <stdexcept>

#include "rnni/error.hpp"
#include "rnni/working_tree.hpp"

namespace rnni {

Rho::Rho(double value) : value_(value) {
  if (!(value >= 0.0))
    throw std::invalid_argument("rho must be a nonnegative real");
}

RankedTree apply(const RankedTree& tree, const Move& move) {
  WorkingTree w(tree);
  w.apply_move(move);
  return w.to_tree();
}

std::vector<Neighbor> neighbors(const RankedTree& tree, Rho rho) {
  const int n = tree.leaf_count();
  std::vector<Neighbor> out;
  if (n < 3) return out;
  out.reserve(2 * (n - 2));
  for (Rank t = 1; t <= n - 2; ++t) {
    if (tree.is_edge_interval(t)) {
      auto [c0, c1] = tree.children_of(t);
      for (const ChildDesc* stay : {&c0, &c1}) {
        Move m{MoveKind::nni, t, stay->cluster};
        WorkingTree w(tree);
        w.apply_nni(t, stay->is_leaf ? stay->index
                                     : internal_node_id(n, stay->index));
        out.push_back({std::move(m), w.to_tree(), rho.weight(MoveKind::nni)});
      }
    } else {
      Move m{MoveKind::rank_swap, t, LeafSet()};
      WorkingTree w(tree);
      w.apply_rank_swap(t);
      out.push_back(
          {std::move(m), w.to_tree(), rho.weight(MoveKind::rank_swap)});
    }
  }
  return out;
}

Move decreasing_nni(const RankedTree& tree, Rank t, const LeafSet& target) {
  const int n = tree.leaf_count();
  if (target.capacity() != n)
    throw std::invalid_argument("target capacity does not match leaf count");
  if (t < 1 || t > n - 2 || !tree.is_edge_interval(t))
    fail(errc::no_decreasing_move,
         "interval " + std::to_string(t) + " is not an edge");
  auto node_set = [&](NodeId id) {
    return is_leaf_id(n, id) ? LeafSet::singleton(n, id)
                             : tree.cluster(rank_of_id(n, id));
  };
  const auto& u_children = tree.child_ids(t);
  const auto& v_children = tree.child_ids(t + 1);
  const NodeId it = internal_node_id(n, t);
  const NodeId other = v_children[0] == it ? v_children[1] : v_children[0];
  bool hit0 = node_set(u_children[0]).intersects(target);
  bool hit1 = node_set(u_children[1]).intersects(target);
  if (hit0 == hit1 || !node_set(other).intersects(target))
    fail(errc::no_decreasing_move,
         "no NNI at interval " + std::to_string(t) +
             " lowers the MRCA of the target");
  return Move{MoveKind::nni, t, node_set(hit0 ? u_children[0] : u_children[1])};
}

}  // namespace rnni
