#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rnni/moves.hpp"
#include "rnni/ranked_tree.hpp"

namespace rnni {

// Controls Newick rank assignment. Node heights are the source of truth;
// ties make the rank order arbitrary, so by default they are an error.
// break_by_traversal resolves ties by post-order position instead (opt-in
// for messy real data).
struct NewickConfig {
  enum class TiePolicy { reject, break_by_traversal };

  double tolerance = 1e-9;  // absolute height comparison epsilon
  TiePolicy tie_policy = TiePolicy::reject;
};

// Grammar: `[` cluster (`,` cluster)* `]` with cluster = `{` label (`,`
// label)* `}`; whitespace insignificant. The leaf table is the sorted union
// of the labels; clusters keep their listed order.
RankedTree parse_cluster_format(std::string_view text);

std::string to_cluster_format(const RankedTree& tree);

// Rooted binary Newick with branch lengths (mandatory except on the root),
// `;`-terminated. Heights are leaf-to-node path lengths; the tree must be
// ultrametric within cfg.tolerance and internal ranks follow ascending
// height. Comments `[...]` and quoted labels are rejected.
RankedTree parse_newick(std::string_view text, const NewickConfig& cfg = {});

// Rank-faithful synthetic Newick: the node of rank t sits at height
// t * unit_gap, leaves at 0; branch lengths are height differences.
std::string to_newick(const RankedTree& tree, double unit_gap = 1.0);

// Move-list format, one move per line: `rank <t>` or `nni <t>
// {<label>,<label>,...}` with the stay_child labels sorted.
std::vector<Move> parse_moves(std::string_view text, const LeafTable& leaves);

std::string format_moves(const std::vector<Move>& moves,
                         const LeafTable& leaves);

}  // namespace rnni
