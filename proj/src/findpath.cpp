#include "rnni/findpath.hpp"

#include <cassert>

#include "rnni/error.hpp"
#include "rnni/working_tree.hpp"

namespace rnni {

namespace {

void require_same_leaves(const RankedTree& T, const RankedTree& R) {
  if (T.leaves_ptr() != R.leaves_ptr() && T.leaves() != R.leaves())
    fail(errc::leaf_mismatch, "trees are over different leaf tables");
}

// Core loop shared by find_path and distance. `sink` observes every move and
// each stage boundary; the working tree advances in place.
template <class Sink>
void run_findpath(WorkingTree& w, const RankedTree& goal, Sink&& sink) {
  const int n = w.leaf_count();
  for (Rank k = 1; k <= n - 2; ++k) {
    const LeafSet& target = goal.cluster(k);
    Rank r = w.mrca_rank(target);
    while (r > k) {
      const Rank t = r - 1;
      if (w.is_edge_interval(t)) {
        NodeId stay = w.decreasing_stay_child(t, target);
        sink.nni(w, t, stay);
        w.apply_nni(t, stay);
      } else {
        sink.rank_swap(t);
        w.apply_rank_swap(t);
      }
      --r;
    }
    assert(w.cluster(k) == target);
    sink.stage_done(k);
  }
  assert(w.equals_tree(goal));
}

struct MoveRecorder {
  std::vector<Move> moves;
  std::vector<std::int64_t> stage_ends;

  void nni(const WorkingTree& w, Rank t, NodeId stay) {
    moves.push_back({MoveKind::nni, t, w.node_cluster(stay)});
  }
  void rank_swap(Rank t) { moves.push_back({MoveKind::rank_swap, t, {}}); }
  void stage_done(Rank) {
    stage_ends.push_back(static_cast<std::int64_t>(moves.size()));
  }
};

struct MoveCounter {
  std::int64_t count = 0;

  void nni(const WorkingTree&, Rank, NodeId) { ++count; }
  void rank_swap(Rank) { ++count; }
  void stage_done(Rank) {}
};

}  // namespace

TreePath find_path(const RankedTree& T, const RankedTree& R) {
  require_same_leaves(T, R);
  WorkingTree w(T);
  MoveRecorder rec;
  run_findpath(w, R, rec);
  return TreePath{T, std::move(rec.moves), std::move(rec.stage_ends)};
}

std::int64_t distance(const RankedTree& T, const RankedTree& R) {
  require_same_leaves(T, R);
  WorkingTree w(T);
  MoveCounter counter;
  run_findpath(w, R, counter);
  return counter.count;
}

double path_weight(const TreePath& path, Rho rho) {
  double total = 0.0;
  for (const Move& m : path.moves) total += rho.weight(m.kind);
  return total;
}

std::vector<RankedTree> materialize(const TreePath& path) {
  std::vector<RankedTree> out;
  out.reserve(path.moves.size() + 1);
  out.push_back(path.start);
  WorkingTree w(path.start);
  for (const Move& m : path.moves) {
    w.apply_move(m);
    out.push_back(w.to_tree());
  }
  return out;
}

RankedTree end_of(const TreePath& path) {
  WorkingTree w(path.start);
  for (const Move& m : path.moves) w.apply_move(m);
  return w.to_tree();
}

}  // namespace rnni
