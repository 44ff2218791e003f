#include "qcover/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

namespace qcover {

namespace {

struct Token {
  std::string text;
  std::size_t column = 0;
};

struct Line {
  std::size_t number = 0;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      const auto start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

std::uint32_t parse_index(const Line& line, const Token& tok, std::size_t bound) {
  const auto& s = tok.text;
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw ParseError(line.number, tok.column, "expected a nonnegative integer, got '" + s + "'");
  }
  if (s.size() > 9 || std::stoul(s) >= bound) {
    throw ParseError(line.number, tok.column,
                     "index " + s + " out of range 0.." + std::to_string(bound - 1));
  }
  return static_cast<std::uint32_t>(std::stoul(s));
}

const Line& expect(const std::vector<Line>& lines, std::size_t& pos, const std::string& keyword,
                   std::size_t last_line) {
  if (pos >= lines.size()) {
    throw ParseError(last_line + 1, 1, "unexpected end of input, expected '" + keyword + "'");
  }
  const auto& line = lines[pos++];
  if (line.tokens[0].text != keyword) {
    throw ParseError(line.number, 1,
                     "expected '" + keyword + "', got '" + line.tokens[0].text + "'");
  }
  return line;
}

void expect_count(const Line& line, std::size_t m) {
  if (line.tokens.size() != m + 1) {
    const auto column = line.tokens.size() > m + 1 ? line.tokens[m + 1].column : line.tokens.back().column;
    throw ParseError(line.number, column,
                     "expected " + std::to_string(m) + " entries after '" + line.tokens[0].text +
                         "', got " + std::to_string(line.tokens.size() - 1));
  }
}

}  // namespace

IPQuandle read_quandle(std::istream& in) {
  const auto lines = tokenize(in);
  const std::size_t last = lines.empty() ? 0 : lines.back().number;
  std::size_t pos = 0;

  const auto& header = expect(lines, pos, "quandle-v1", last);
  if (header.tokens.size() != 1) throw ParseError(header.number, header.tokens[1].column, "trailing tokens");

  const auto& nline = expect(lines, pos, "n", last);
  expect_count(nline, 1);
  const auto m = parse_index(nline, nline.tokens[1], 1'000'000);
  if (m == 0) throw ParseError(nline.number, nline.tokens[1].column, "quandle must be nonempty");

  std::vector<std::string> names;
  if (pos < lines.size() && lines[pos].tokens[0].text == "names") {
    const auto& line = lines[pos++];
    expect_count(line, m);
    std::set<std::string> seen;
    for (std::size_t k = 1; k <= m; ++k) {
      if (!seen.insert(line.tokens[k].text).second) {
        throw ParseError(line.number, line.tokens[k].column, "duplicate name '" + line.tokens[k].text + "'");
      }
      names.push_back(line.tokens[k].text);
    }
  }

  const auto& iline = expect(lines, pos, "inv", last);
  expect_count(iline, m);
  std::vector<std::uint32_t> inv;
  for (std::size_t k = 1; k <= m; ++k) inv.push_back(parse_index(iline, iline.tokens[k], m));

  std::vector<std::vector<std::uint32_t>> op;
  for (std::size_t a = 0; a < m; ++a) {
    const auto& line = expect(lines, pos, "op", last);
    expect_count(line, m);
    std::vector<std::uint32_t> row;
    for (std::size_t k = 1; k <= m; ++k) row.push_back(parse_index(line, line.tokens[k], m));
    op.push_back(std::move(row));
  }
  if (pos < lines.size()) {
    throw ParseError(lines[pos].number, 1, "unexpected '" + lines[pos].tokens[0].text + "' after the table");
  }
  return IPQuandle(std::move(op), std::move(inv), std::move(names));
}

IPQuandle read_quandle_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_quandle(in);
}

void write_quandle(std::ostream& out, const IPQuandle& q) {
  const auto m = q.size();
  out << "quandle-v1\n";
  out << "n " << m << '\n';
  if (q.has_custom_names()) {
    out << "names";
    for (const auto& s : q.names()) out << ' ' << s;
    out << '\n';
  }
  out << "inv";
  for (auto x : q.inversion()) out << ' ' << x;
  out << '\n';
  for (std::uint32_t a = 0; a < m; ++a) {
    out << "op";
    for (std::uint32_t b = 0; b < m; ++b) out << ' ' << q.act(a, b);
    out << '\n';
  }
}

void write_dot(std::ostream& out, const std::string& graph_name,
               const std::vector<std::string>& names,
               const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  out << "graph " << quote(graph_name) << " {\n";
  for (std::size_t k = 0; k < names.size(); ++k) {
    out << "  " << k << " [label=" << quote(names[k]) << "];\n";
  }
  for (const auto& [a, b] : edges) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
}

}  // namespace qcover
