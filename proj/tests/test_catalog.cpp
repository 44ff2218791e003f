#include <doctest.h>

#include <numeric>
#include <set>

#include "qcover/catalog.hpp"

using namespace qcover;

namespace {

Matrix2 mat(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) { return {{a, b, c, d}}; }

}  // namespace

TEST_CASE("sl2z matrices") {
  CHECK(sl2z_matrix(ProjVec::make(1, 0)) == mat(1, 1, 0, 1));
  CHECK(sl2z_matrix(ProjVec::make(0, 1, -1)) == mat(1, 0, 1, 1));
  CHECK(sl2z_matrix(ProjVec::make(1, 1)) == mat(0, 1, -1, 2));
  CHECK(ProjVec::make(-2, 3) == ProjVec::make(2, -3));
  CHECK(ProjVec::make(0, -1) == ProjVec::make(0, 1));
  CHECK_THROWS_AS(ProjVec::make(2, 4), InvalidParameter);
  CHECK_THROWS_AS(ProjVec::make(0, 0), InvalidParameter);
}

TEST_CASE("sl2z conjugation examples") {
  const auto e10 = ProjVec::make(1, 0), e01 = ProjVec::make(0, 1);
  CHECK(sl2z_conjugate(e10, e01) == ProjVec::make(1, 1));
  CHECK(sl2z_conjugate(e01, e01) == e01);
  CHECK(sl2z_conjugate(e10, e10.inverse()) == e10.inverse());
}

TEST_CASE("sl2z skew examples") {
  const auto e10 = ProjVec::make(1, 0), e01 = ProjVec::make(0, 1);
  CHECK(sl2z_skew(e10, e01.inverse()));
  CHECK_FALSE(sl2z_skew(e10, e01));
  CHECK(sl2z_skew(e10, ProjVec::make(2, 1).inverse()));
  CHECK(sl2z_skew(e10, e10.inverse()));
  CHECK_FALSE(sl2z_skew(e10, e10));
  CHECK_FALSE(sl2z_skew(e10, ProjVec::make(1, 2).inverse()));
}

TEST_CASE("sl2z window of size one") {
  const auto w = sl2z_window(1);
  const std::set<ProjVec> plus(w.elements.begin(), w.elements.begin() + 4);
  CHECK(plus == std::set<ProjVec>{ProjVec::make(1, 0), ProjVec::make(0, 1), ProjVec::make(1, 1),
                                  ProjVec::make(1, -1)});
  CHECK(w.size() == 8);
  for (std::uint32_t k = 0; k < 8; ++k) {
    CHECK(w.inv[w.inv[k]] == k);
    CHECK(w.elements[w.inv[k]] == w.elements[k].inverse());
  }
  CHECK(window_skew_graph(w).connected());
  CHECK(verify_window(w).all_ok());
  CHECK_THROWS_AS(sl2z_window(0), InvalidParameter);
}

TEST_CASE("sl2z window of size five agrees with matrix conjugation") {
  const auto w = sl2z_window(5);
  for (const auto& u : w.elements) {
    const auto mu = sl2z_matrix(u);
    CHECK(mu.det() == 1);
    CHECK(mu.trace() == 2);
    for (const auto& v : w.elements) {
      CHECK(sl2z_matrix(sl2z_conjugate(u, v)) == mu * sl2z_matrix(v) * mu.inverse());
      const bool by_formula =
          u.sign != v.sign && ((u.a == v.a && u.c == v.c) || std::llabs(det(u, v)) == 1);
      CHECK(sl2z_skew(u, v) == by_formula);
      CHECK(sl2z_skew(u, v) == sl2z_skew_by_conjugation(u, v));
    }
  }
  const auto g = window_skew_graph(w);
  CHECK(g.connected());
  const auto ax = verify_window(w);
  CHECK(ax.all_ok());
  CHECK(ax.checked > 0);
}

TEST_CASE("builders") {
  CHECK(symmetric_2cycles(5).size() == 10);
  CHECK(symmetric_ncycles(4).size() == 6);
  CHECK(alternating_ncycles(5).size() == 24);
  CHECK(dihedral(3).size() == 3);
  CHECK(dihedral(3).embedding()->group->order() == 6);
  CHECK(dihedral(2).embedding()->group->order() == 4);
  CHECK(cyclic(5).size() == 2);
  CHECK(klein_four().size() == 2);
  CHECK(example_2_3().size() == 6);
  CHECK_FALSE(example_2_3().embedding().has_value());
  CHECK(abelian_product({2, 3}).size() == 3);
  CHECK_THROWS_AS(symmetric_ncycles(5), InvalidParameter);
  CHECK_THROWS_AS(alternating_ncycles(4), InvalidParameter);
  CHECK_THROWS_AS(dihedral(1), InvalidParameter);
  CHECK_THROWS_AS(cyclic(1), InvalidParameter);
  CHECK_THROWS_AS(symmetric_2cycles(1), InvalidParameter);
  CHECK_THROWS_AS(abelian_product({}), InvalidParameter);
}

TEST_CASE("six-element non-embeddable quandle row data") {
  const auto q = example_2_3();
  CHECK(verify_ip(q).all_ok());
  // ^a a = ^b c = ^c a = a
  CHECK(q.act(0, 0) == 0);
  CHECK(q.act(1, 2) == 0);
  CHECK(q.act(2, 0) == 0);
}

TEST_CASE("catalog lookup") {
  for (const char* id : {"sym:4:2cycles", "sym:4:ncycles", "alt:5:ncycles", "dihedral:7",
                         "cyclic:3", "klein4", "weyl:G:2", "example-2.3", "abelian:2,2"}) {
    CAPTURE(id);
    const auto item = catalog_lookup(id);
    REQUIRE(std::holds_alternative<IPQuandle>(item));
    CHECK(verify_ip(std::get<IPQuandle>(item)).all_ok());
  }
  CHECK(std::holds_alternative<WindowQuandle>(catalog_lookup("sl2z:window:2")));
  for (const char* bad : {"sym:x:2cycles", "weyl:Q:2", "weyl:D:2", "nope", "dihedral:", "abelian:"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(catalog_lookup(bad), InvalidParameter);
  }
  bool has_window = false;
  for (const auto& e : catalog_identifiers()) has_window |= e.pattern == "sl2z:window:<N>";
  CHECK(has_window);
}
