#include <doctest.h>

#include <sstream>

#include "qcover/catalog.hpp"
#include "qcover/io.hpp"

using namespace qcover;

namespace {

void expect_parse_error(const std::string& text, std::size_t line, std::size_t column) {
  std::istringstream in(text);
  try {
    read_quandle(in);
    FAIL("no parse error for:\n" << text);
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == column);
  }
}

}  // namespace

TEST_CASE("quandle-v1 round trip for catalog quandles") {
  for (const char* id : {"sym:3:2cycles", "sym:4:ncycles", "dihedral:5", "klein4", "cyclic:4",
                         "weyl:B:3", "example-2.3", "abelian:2,3"}) {
    CAPTURE(id);
    const auto q = std::get<IPQuandle>(catalog_lookup(id));
    std::stringstream s;
    write_quandle(s, q);
    const auto back = read_quandle(s);
    CHECK(back == q);
    CHECK(back.names() == q.names());
  }
}

TEST_CASE("quandle-v1 with comments and default names") {
  std::istringstream in(
      "# the trivial quandle on two points\n"
      "quandle-v1\n"
      "\n"
      "n 2   # size\n"
      "inv 0 1\n"
      "op 0 1\n"
      "op 0 1\n");
  const auto q = read_quandle(in);
  CHECK(q.size() == 2);
  CHECK_FALSE(q.has_custom_names());
  CHECK(verify_ip(q).all_ok());
  std::ostringstream out;
  write_quandle(out, q);
  CHECK(out.str() == "quandle-v1\nn 2\ninv 0 1\nop 0 1\nop 0 1\n");
}

TEST_CASE("quandle-v1 parse errors carry positions") {
  expect_parse_error("", 1, 1);
  expect_parse_error("quandle-v2\n", 1, 1);
  expect_parse_error("quandle-v1\nn 0\n", 2, 3);
  expect_parse_error("quandle-v1\nn 2\ninv 0\n", 3, 5);
  expect_parse_error("quandle-v1\nn 2\ninv 0 x\n", 3, 7);
  expect_parse_error("quandle-v1\nn 2\ninv 0 1\nop 0 1\nop 0 2\n", 5, 6);
  expect_parse_error("quandle-v1\nn 2\ninv 0 1\nop 0 1\n", 5, 1);
  expect_parse_error("quandle-v1\nn 2\nnames a a\ninv 0 1\nop 0 1\nop 0 1\n", 3, 9);
  expect_parse_error("quandle-v1\nn 1\ninv 0\nop 0\nop 0\n", 5, 1);
}

TEST_CASE("non-permutation rows parse but fail verification") {
  std::istringstream in("quandle-v1\nn 2\ninv 0 1\nop 0 0\nop 0 1\n");
  const auto q = read_quandle(in);
  const auto r = verify_ip(q);
  CHECK_FALSE(r.bijective_rows.holds);
  CHECK(r.bijective_rows.counterexample == std::vector<std::uint32_t>{0});
}

TEST_CASE("DOT output") {
  std::ostringstream out;
  write_dot(out, "skew", {"a", "b\"c"}, {{0, 1}});
  CHECK(out.str() ==
        "graph \"skew\" {\n  0 [label=\"a\"];\n  1 [label=\"b\\\"c\"];\n  0 -- 1;\n}\n");
}
