#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qcover/error.hpp"
#include "qcover/quandle.hpp"

namespace qcover {

/// Parse failure in a quandle-v1 document; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

/// quandle-v1:
///   quandle-v1
///   n <m>
///   names <m tokens>      (optional)
///   inv <m integers>
///   op <m integers>       (m lines, row a lists ^a 0 .. ^a (m-1))
/// '#' starts a comment; blank lines are ignored. Only the shape is checked
/// here, not the axioms.
IPQuandle read_quandle(std::istream& in);
IPQuandle read_quandle_file(const std::string& path);

void write_quandle(std::ostream& out, const IPQuandle& q);

/// Undirected graph, one vertex per name in order, edges as given.
void write_dot(std::ostream& out, const std::string& graph_name,
               const std::vector<std::string>& names,
               const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

}  // namespace qcover
