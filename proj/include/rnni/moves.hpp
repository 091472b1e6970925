#pragma once

#include <vector>

#include "rnni/ranked_tree.hpp"

namespace rnni {

enum class MoveKind { rank_swap, nni };

// One RNNI rearrangement acting on the interval [(T)_t, (T)_{t+1}]. A rank
// swap is legal only when the interval is not an edge; an NNI move only when
// it is. The two NNI variants at an edge are told apart by `stay_child`, the
// cluster of the child of node t that remains below node t after the move.
struct Move {
  MoveKind kind;
  Rank t;
  LeafSet stay_child;  // NNI only; empty/ignored for rank swaps
};

// Weight of a rank move; an NNI move always weighs 1.
class Rho {
 public:
  explicit Rho(double value);
  double value() const { return value_; }
  double weight(MoveKind kind) const {
    return kind == MoveKind::nni ? 1.0 : value_;
  }

 private:
  double value_;
};

// Applies one move, validating its legality on `tree`.
RankedTree apply(const RankedTree& tree, const Move& move);

struct Neighbor {
  Move move;
  RankedTree tree;
  double weight;
};

// All RNNI neighbors: per interval t in 1..n-2, the two NNI variants on an
// edge interval, otherwise the single rank swap.
std::vector<Neighbor> neighbors(const RankedTree& tree, Rho rho = Rho(1.0));

// The unique NNI move at edge interval t that lowers the rank of the MRCA of
// `target` by one.
Move decreasing_nni(const RankedTree& tree, Rank t, const LeafSet& target);

}  // namespace rnni
