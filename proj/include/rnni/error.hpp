#pragma once

#include <stdexcept>
#include <string>

namespace rnni {

// Library-wide error codes. Parse errors additionally carry a 1-based
// line/column position.
enum class errc {
  duplicate_leaf,
  not_laminar,
  not_binary,
  bad_root,
  rank_out_of_bounds,
  illegal_move,
  bad_stay_child,
  no_decreasing_move,
  leaf_mismatch,
  too_large,
  vertex_missing,
  syntax_error,
  not_binary_topology,
  not_ultrametric,
  tied_heights,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}

  Error(errc code, const std::string& msg, int line, int column)
      : std::runtime_error(std::string(errc_name(code)) + " at " +
                           std::to_string(line) + ":" + std::to_string(column) +
                           ": " + msg),
        code_(code),
        line_(line),
        column_(column) {}

  errc code() const { return code_; }

  // 1-based position for parse errors; 0 when not applicable.
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  errc code_;
  int line_ = 0;
  int column_ = 0;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw Error(code, msg);
}

[[noreturn]] inline void fail_at(errc code, const std::string& msg, int line,
                                 int column) {
  throw Error(code, msg, line, column);
}

}  // namespace rnni
