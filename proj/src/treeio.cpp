#include "rnni/treeio.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>

#include "rnni/error.hpp"

namespace rnni {

namespace {

bool label_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-';
}

// Character cursor tracking a 1-based line/column position.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c, const char* what) {
    if (at_end() || text_[pos_] != c)
      fail_here(std::string("expected '") + c + "' " + what);
    advance();
  }

  std::string_view take_label() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && label_char(text_[pos_])) advance();
    if (pos_ == start) fail_here("expected a label");
    return text_.substr(start, pos_ - start);
  }

  double take_number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (label_char(text_[pos_]) || text_[pos_] == '+')) {
      advance();  // covers digits, '.', '-', 'e', 'E'
    }
    double value = 0.0;
    auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (pos_ == start || res.ec != std::errc{} ||
        res.ptr != text_.data() + pos_ || !std::isfinite(value))
      fail_here("expected a branch length");
    return value;
  }

  [[noreturn]] void fail_here(const std::string& msg) const {
    fail_at(errc::syntax_error, msg, line_, col_);
  }

  int line() const { return line_; }
  int column() const { return col_; }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

std::string format_length(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

}  // namespace

RankedTree parse_cluster_format(std::string_view text) {
  Cursor cur(text);
  cur.skip_ws();
  cur.expect('[', "to open the cluster list");
  std::vector<std::vector<std::string>> named;
  while (true) {
    cur.skip_ws();
    cur.expect('{', "to open a cluster");
    std::vector<std::string> members;
    while (true) {
      cur.skip_ws();
      members.emplace_back(cur.take_label());
      cur.skip_ws();
      if (cur.peek() == ',') {
        cur.expect(',', "");
        continue;
      }
      break;
    }
    cur.expect('}', "to close the cluster");
    named.push_back(std::move(members));
    cur.skip_ws();
    if (cur.peek() == ',') {
      cur.expect(',', "");
      continue;
    }
    break;
  }
  cur.expect(']', "to close the cluster list");
  cur.skip_ws();
  if (!cur.at_end()) cur.fail_here("trailing characters after the tree");

  std::set<std::string> label_set;
  for (const auto& cluster : named)
    label_set.insert(cluster.begin(), cluster.end());
  LeafTable leaves = LeafTable::from_labels(
      std::vector<std::string>(label_set.begin(), label_set.end()));

  const int n = leaves.size();
  std::vector<LeafSet> clusters;
  clusters.reserve(named.size());
  for (const auto& cluster : named) {
    LeafSet s(n);
    for (const auto& name : cluster) {
      int idx = leaves.index_of(name);
      if (s.test(idx))
        fail(errc::syntax_error, "label '" + name + "' repeats in a cluster");
      s.set(idx);
    }
    clusters.push_back(std::move(s));
  }
  return RankedTree::from_clusters(std::move(leaves), std::move(clusters));
}

std::string to_cluster_format(const RankedTree& tree) {
  const LeafTable& leaves = tree.leaves();
  std::string out = "[";
  for (Rank t = 1; t <= tree.internal_count(); ++t) {
    if (t > 1) out += ',';
    out += '{';
    const LeafSet& c = tree.cluster(t);
    bool first = true;
    for (int i = c.first(); i >= 0; i = c.next(i)) {
      if (!first) out += ',';
      out += leaves.label(i);
      first = false;
    }
    out += '}';
  }
  out += ']';
  return out;
}

namespace {

struct NewickNode {
  int leaf = -1;  // index into the label list while parsing
  int child0 = -1;
  int child1 = -1;
  double edge_len = 0.0;  // length of the edge to the parent
  double depth = 0.0;
};

struct NewickParse {
  std::vector<NewickNode> nodes;
  std::vector<std::string> leaf_names;

  int parse_subtree(Cursor& cur) {
    cur.skip_ws();
    char c = cur.peek();
    if (c == '[') cur.fail_here("Newick comments are not supported");
    if (c == '\'' || c == '"') cur.fail_here("quoted labels are not supported");
    if (c == '(') {
      cur.expect('(', "");
      std::vector<int> children;
      while (true) {
        int child = parse_subtree(cur);
        cur.skip_ws();
        cur.expect(':', "before a branch length");
        cur.skip_ws();
        double len = cur.take_number();
        if (len < 0.0) cur.fail_here("negative branch length");
        nodes[child].edge_len = len;
        children.push_back(child);
        cur.skip_ws();
        if (cur.peek() == ',') {
          cur.expect(',', "");
          continue;
        }
        break;
      }
      cur.expect(')', "to close a subtree");
      if (children.size() != 2)
        fail(errc::not_binary_topology,
             "internal node with " + std::to_string(children.size()) +
                 " children");
      int id = static_cast<int>(nodes.size());
      nodes.push_back({});
      nodes[id].child0 = children[0];
      nodes[id].child1 = children[1];
      return id;
    }
    std::string name(cur.take_label());
    int id = static_cast<int>(nodes.size());
    nodes.push_back({});
    nodes[id].leaf = static_cast<int>(leaf_names.size());
    leaf_names.push_back(std::move(name));
    return id;
  }
};

}  // namespace

RankedTree parse_newick(std::string_view text, const NewickConfig& cfg) {
  Cursor cur(text);
  NewickParse p;
  cur.skip_ws();
  int root = p.parse_subtree(cur);
  cur.skip_ws();
  if (cur.peek() == ':') {  // tolerated root edge length
    cur.expect(':', "");
    cur.skip_ws();
    cur.take_number();
    cur.skip_ws();
  }
  cur.expect(';', "to terminate the tree");
  cur.skip_ws();
  if (!cur.at_end()) cur.fail_here("trailing characters after ';'");
  if (p.nodes[root].leaf >= 0)
    fail(errc::not_binary_topology, "tree has a single leaf");

  // Depths from the root, then heights above the deepest leaf.
  std::vector<int> order;  // preorder
  order.push_back(root);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const NewickNode& node = p.nodes[order[i]];
    if (node.leaf < 0) {
      order.push_back(node.child0);
      order.push_back(node.child1);
    }
  }
  p.nodes[root].depth = 0.0;
  for (int id : order) {
    const NewickNode& node = p.nodes[id];
    if (node.leaf < 0) {
      p.nodes[node.child0].depth = node.depth + p.nodes[node.child0].edge_len;
      p.nodes[node.child1].depth = node.depth + p.nodes[node.child1].edge_len;
    }
  }
  double min_leaf = 0, max_leaf = 0;
  bool seen_leaf = false;
  for (const auto& node : p.nodes) {
    if (node.leaf >= 0) {
      if (!seen_leaf) {
        min_leaf = max_leaf = node.depth;
        seen_leaf = true;
      } else {
        min_leaf = std::min(min_leaf, node.depth);
        max_leaf = std::max(max_leaf, node.depth);
      }
    }
  }
  if (max_leaf - min_leaf > cfg.tolerance)
    fail(errc::not_ultrametric,
         "leaf heights differ by " + format_length(max_leaf - min_leaf));

  // Internal nodes sorted by ascending height; post-order index is the
  // secondary key. Exact-equal heights fall back to it; whether near-equal
  // heights are acceptable at all is the tie policy's call.
  std::vector<int> internals;
  std::vector<int> postorder_index(p.nodes.size(), 0);
  {
    int counter = 0;
    // iterative postorder
    std::vector<std::pair<int, bool>> stack{{root, false}};
    while (!stack.empty()) {
      auto [id, expanded] = stack.back();
      stack.pop_back();
      if (expanded || p.nodes[id].leaf >= 0) {
        postorder_index[id] = counter++;
        continue;
      }
      stack.push_back({id, true});
      stack.push_back({p.nodes[id].child1, false});
      stack.push_back({p.nodes[id].child0, false});
    }
  }
  for (std::size_t id = 0; id < p.nodes.size(); ++id) {
    if (p.nodes[id].leaf < 0) internals.push_back(static_cast<int>(id));
  }
  auto height = [&](int id) { return max_leaf - p.nodes[id].depth; };
  std::sort(internals.begin(), internals.end(), [&](int a, int b) {
    if (height(a) != height(b)) return height(a) < height(b);
    return postorder_index[a] < postorder_index[b];
  });
  for (std::size_t i = 0; i + 1 < internals.size(); ++i) {
    if (height(internals[i + 1]) - height(internals[i]) <= cfg.tolerance &&
        cfg.tie_policy == NewickConfig::TiePolicy::reject)
      fail(errc::tied_heights,
           "internal nodes at ranks " + std::to_string(i + 1) + " and " +
               std::to_string(i + 2) + " have tied heights");
  }

  LeafTable leaves = LeafTable::from_labels(p.leaf_names);
  const int n = leaves.size();

  // Leaf sets bottom-up (children precede parents in reverse preorder).
  std::vector<LeafSet> node_set(p.nodes.size());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NewickNode& node = p.nodes[*it];
    LeafSet s(n);
    if (node.leaf >= 0) {
      s.set(leaves.index_of(p.leaf_names[node.leaf]));
    } else {
      s |= node_set[node.child0];
      s |= node_set[node.child1];
    }
    node_set[*it] = std::move(s);
  }
  std::vector<LeafSet> clusters;
  clusters.reserve(internals.size());
  for (int id : internals) clusters.push_back(std::move(node_set[id]));
  return RankedTree::from_clusters(std::move(leaves), std::move(clusters));
}

std::string to_newick(const RankedTree& tree, double unit_gap) {
  const int n = tree.leaf_count();
  auto height = [&](bool is_leaf, int index) {
    return is_leaf ? 0.0 : index * unit_gap;
  };
  // Children ordered by smallest contained leaf for a deterministic output.
  std::string out;
  auto render = [&](auto&& self, Rank t) -> void {
    auto [c0, c1] = tree.children_of(t);
    if (c1.cluster.first() < c0.cluster.first()) std::swap(c0, c1);
    out += '(';
    for (int which = 0; which < 2; ++which) {
      const ChildDesc& c = which == 0 ? c0 : c1;
      if (which > 0) out += ',';
      if (c.is_leaf) {
        out += tree.leaves().label(c.index);
      } else {
        self(self, c.index);
      }
      out += ':';
      out += format_length(height(false, t) - height(c.is_leaf, c.index));
    }
    out += ')';
  };
  render(render, n - 1);
  out += ';';
  return out;
}

std::vector<Move> parse_moves(std::string_view text, const LeafTable& leaves) {
  std::vector<Move> moves;
  const int n = leaves.size();
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string_view::npos) continue;
    std::size_t j = line.find_first_of(" \t", i);
    std::string_view word = line.substr(i, j - i);
    if (word != "rank" && word != "nni")
      fail_at(errc::syntax_error, "unknown move '" + std::string(word) + "'",
              line_no, static_cast<int>(i) + 1);
    i = line.find_first_not_of(" \t", j);
    if (i == std::string_view::npos)
      fail_at(errc::syntax_error, "missing interval rank", line_no,
              static_cast<int>(line.size()) + 1);
    int t = 0;
    auto res = std::from_chars(line.data() + i, line.data() + line.size(), t);
    if (res.ec != std::errc{} || t < 1)
      fail_at(errc::syntax_error, "bad interval rank", line_no,
              static_cast<int>(i) + 1);
    i = res.ptr - line.data();

    if (word == "rank") {
      std::size_t rest = line.find_first_not_of(" \t\r", i);
      if (rest != std::string_view::npos)
        fail_at(errc::syntax_error, "trailing text after rank move", line_no,
                static_cast<int>(rest) + 1);
      moves.push_back({MoveKind::rank_swap, t, LeafSet()});
      continue;
    }

    i = line.find_first_not_of(" \t", i);
    if (i == std::string_view::npos || line[i] != '{')
      fail_at(errc::syntax_error, "expected '{' with the stay_child cluster",
              line_no, static_cast<int>(i == std::string_view::npos
                                            ? line.size()
                                            : i) + 1);
    std::size_t close = line.find('}', i);
    if (close == std::string_view::npos)
      fail_at(errc::syntax_error, "unterminated cluster", line_no,
              static_cast<int>(line.size()) + 1);
    LeafSet stay(n);
    std::size_t p = i + 1;
    while (p < close) {
      std::size_t q = p;
      while (q < close && label_char(line[q])) ++q;
      if (q == p)
        fail_at(errc::syntax_error, "expected a label", line_no,
                static_cast<int>(p) + 1);
      std::string name(line.substr(p, q - p));
      int idx = leaves.index_of(name);
      if (idx < 0)
        fail_at(errc::syntax_error, "unknown leaf '" + name + "'", line_no,
                static_cast<int>(p) + 1);
      stay.set(idx);
      p = q;
      if (p < close) {
        if (line[p] != ',')
          fail_at(errc::syntax_error, "expected ','", line_no,
                  static_cast<int>(p) + 1);
        ++p;
      }
    }
    if (stay.empty())
      fail_at(errc::syntax_error, "empty stay_child cluster", line_no,
              static_cast<int>(i) + 1);
    std::size_t rest = line.find_first_not_of(" \t\r", close + 1);
    if (rest != std::string_view::npos)
      fail_at(errc::syntax_error, "trailing text after NNI move", line_no,
              static_cast<int>(rest) + 1);
    moves.push_back({MoveKind::nni, t, std::move(stay)});
  }
  return moves;
}

std::string format_moves(const std::vector<Move>& moves,
                         const LeafTable& leaves) {
  std::string out;
  for (const Move& m : moves) {
    if (m.kind == MoveKind::rank_swap) {
      out += "rank " + std::to_string(m.t) + "\n";
    } else {
      out += "nni " + std::to_string(m.t) + " {";
      bool first = true;
      for (int i = m.stay_child.first(); i >= 0; i = m.stay_child.next(i)) {
        if (!first) out += ',';
        out += leaves.label(i);
        first = false;
      }
      out += "}\n";
    }
  }
  return out;
}

}  // namespace rnni
