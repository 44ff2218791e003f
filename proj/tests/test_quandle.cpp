#include <doctest.h>

#include "qcover/catalog.hpp"
#include "qcover/quandle.hpp"

using namespace qcover;

TEST_CASE("catalog quandles satisfy the IP axioms") {
  for (const char* id : {"sym:3:2cycles", "sym:4:2cycles", "sym:4:ncycles", "alt:5:ncycles",
                         "dihedral:2", "dihedral:5", "dihedral:6", "cyclic:3", "klein4",
                         "weyl:B:2", "weyl:G:2", "example-2.3", "abelian:2,3"}) {
    CAPTURE(id);
    const auto q = std::get<IPQuandle>(catalog_lookup(id));
    const auto r = verify_ip(q);
    CHECK(r.all_ok());
    CHECK_FALSE(verify_right_ip(to_right_quandle(q)).has_value());
    CHECK(to_left_quandle(to_right_quandle(q)) == q);
  }
}

TEST_CASE("verify_ip reports the first counterexample") {
  // Row 0 is not a permutation.
  IPQuandle bad({{0, 0}, {0, 1}}, {0, 1});
  const auto r = verify_ip(bad);
  CHECK_FALSE(r.bijective_rows.holds);
  CHECK(r.bijective_rows.counterexample == std::vector<std::uint32_t>{0});
  CHECK_FALSE(r.all_ok());

  // Z_3 with ^a b = 2a - b is a quandle; swapping 1 and 2 as inversion breaks IP.
  IPQuandle z3({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}, {0, 2, 1});
  const auto t = verify_ip(z3);
  CHECK(t.quandle_ok());
  CHECK_FALSE(t.inverse_compatible.holds);

  // Non-idempotent rack: constant shift.
  IPQuandle shift({{1, 0}, {1, 0}}, {0, 1});
  const auto s = verify_ip(shift);
  CHECK(s.rack_ok());
  CHECK_FALSE(s.idempotent.holds);
  CHECK(s.idempotent.counterexample == std::vector<std::uint32_t>{0});
}

TEST_CASE("malformed tables are rejected at construction") {
  CHECK_THROWS_AS(IPQuandle({{0, 1}}, {0, 1}), MalformedTable);
  CHECK_THROWS_AS(IPQuandle({{0, 2}, {0, 1}}, {0, 1}), MalformedTable);
  CHECK_THROWS_AS(IPQuandle({{0, 1}, {0, 1}}, {0, 1}, {"x", "x"}), MalformedTable);
}

TEST_CASE("conjugation quandle preconditions") {
  const auto s3 = std::get<IPQuandle>(catalog_lookup("sym:3:2cycles"));
  const auto group = s3.embedding()->group;
  auto kind = [&](std::vector<std::size_t> elems) {
    try {
      conjugation_quandle(group, std::move(elems));
    } catch (const PreconditionFailed& e) {
      return e.kind();
    }
    return std::string("ok");
  };
  const auto& c = s3.embedding()->elements;
  CHECK(kind({group->identity(), c[0], c[1], c[2]}) == "ContainsIdentity");
  CHECK(kind({c[0], c[1]}) == "NotAdStable");
  CHECK(kind({c[0], c[0], c[1], c[2]}) == "Duplicate");
  CHECK(kind({c[0], c[1], c[2]}) == "ok");

  // A 3-cycle class is ad-stable but not inversion-stable in A_3 = Z_3.
  const auto z3 = std::get<IPQuandle>(catalog_lookup("cyclic:3"));
  const auto zg = z3.embedding()->group;
  CHECK_THROWS_WITH_AS(conjugation_quandle(zg, {z3.embedding()->elements[0]}),
                       doctest::Contains("NotInversionStable"), PreconditionFailed);
  // {a, a^-1} in Z_6 lies in Z_6 but an element of order 2 alone does not generate.
  const auto z6 = std::get<IPQuandle>(catalog_lookup("cyclic:6"));
  const auto g6 = z6.embedding()->group;
  const auto cube = g6->power(z6.embedding()->elements[0], 3);
  CHECK_THROWS_WITH_AS(conjugation_quandle(g6, {cube}), doctest::Contains("NotGenerating"),
                       PreconditionFailed);
}

TEST_CASE("skew analysis on small quandles") {
  const auto s3 = std::get<IPQuandle>(catalog_lookup("sym:3:2cycles"));
  const auto a = skew_analysis(s3);
  CHECK(a.is_skew);
  CHECK(a.is_locally_skew);
  CHECK(a.edges.size() == 3);

  const auto k = std::get<IPQuandle>(catalog_lookup("klein4"));
  const auto b = skew_analysis(k);
  CHECK_FALSE(b.is_skew);
  CHECK(b.components == 2);

  // {a, a^-1} is always mutually skew.
  const auto z5 = std::get<IPQuandle>(catalog_lookup("cyclic:5"));
  CHECK(mutually_skew(z5, 0, 1));
  CHECK(skew_analysis(z5).is_skew);

  // {a, a} is mutually skew iff a is an involution.
  CHECK(mutually_skew(s3, 0, 0));
  CHECK_FALSE(mutually_skew(z5, 0, 0));
}

TEST_CASE("braid conditions and the skew identity") {
  const auto q = std::get<IPQuandle>(catalog_lookup("sym:4:ncycles"));
  const auto m = static_cast<std::uint32_t>(q.size());
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = 0; b < m; ++b) {
      const auto c = braid_conditions(q, a, b);
      CHECK(c.all_equal());
      CHECK(c.skew == braid_conditions(q, b, a).skew);
      if (c.skew && c.inverses_skew) {
        REQUIRE(c.skew_ip_identity.has_value());
        CHECK(*c.skew_ip_identity);
      }
    }
  }
}

TEST_CASE("trivial quandle detection") {
  CHECK(is_trivial_quandle(std::get<IPQuandle>(catalog_lookup("klein4"))));
  CHECK(is_trivial_quandle(std::get<IPQuandle>(catalog_lookup("abelian:2,3,4"))));
  CHECK_FALSE(is_trivial_quandle(std::get<IPQuandle>(catalog_lookup("sym:3:2cycles"))));
}

TEST_CASE("right form matches b^-1 a b in the group") {
  const auto q = std::get<IPQuandle>(catalog_lookup("sym:4:ncycles"));
  const auto r = to_right_quandle(q);
  const auto& e = *q.embedding();
  const auto& g = *e.group;
  for (std::uint32_t a = 0; a < q.size(); ++a) {
    for (std::uint32_t b = 0; b < q.size(); ++b) {
      CHECK(e.elements[r.act(a, b)] == g.conjugate(g.inverse(e.elements[b]), e.elements[a]));
    }
  }
}
