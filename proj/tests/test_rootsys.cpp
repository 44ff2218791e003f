#include <doctest.h>

#include "oracle.hpp"
#include "qcover/catalog.hpp"
#include "qcover/rootsys.hpp"

using namespace qcover;

TEST_CASE("root counts") {
  struct Case {
    char type;
    std::size_t rank, roots;
  };
  for (auto [t, n, count] : std::vector<Case>{{'A', 1, 2},  {'A', 2, 6},   {'A', 4, 20},
                                              {'B', 2, 8},  {'B', 3, 18},  {'C', 3, 18},
                                              {'D', 4, 24}, {'D', 5, 40},  {'E', 6, 72},
                                              {'E', 7, 126}, {'E', 8, 240}, {'F', 4, 48},
                                              {'G', 2, 12}}) {
    CAPTURE(t);
    CAPTURE(n);
    const auto r = build_root_system(t, n);
    CHECK(r.size() == count);
    CHECK(r.positive_count * 2 == count);
    for (std::size_t k = 0; k < r.size(); ++k) {
      CHECK(r.find(r.roots[k]) == k);
      CHECK(r.negative(r.negative(k)) == k);
      CHECK(r.is_positive(k) != r.is_positive(r.negative(k)));
    }
  }
}

TEST_CASE("cartan matrices") {
  CHECK(cartan_matrix('A', 2) == CartanMatrix{{{2, -1}, {-1, 2}}});
  CHECK(cartan_matrix('B', 2) == CartanMatrix{{{2, -1}, {-2, 2}}});
  CHECK(cartan_matrix('C', 2) == CartanMatrix{{{2, -2}, {-1, 2}}});
  CHECK(cartan_matrix('G', 2) == CartanMatrix{{{2, -1}, {-3, 2}}});
  CHECK(is_simply_laced('E', 8));
  CHECK_FALSE(is_simply_laced('F', 4));
  CHECK_THROWS_AS(cartan_matrix('E', 9), InvalidParameter);
  CHECK_THROWS_AS(cartan_matrix('B', 1), InvalidParameter);
  CHECK_THROWS_AS(cartan_matrix('Q', 3), InvalidParameter);
  CHECK_THROWS_AS(validate_cartan(CartanMatrix{{{2, 1}, {1, 2}}}), InvalidParameter);
  CHECK_THROWS_AS(validate_cartan(CartanMatrix{{{2, -1}, {0, 2}}}), InvalidParameter);
  CHECK_THROWS_AS(validate_cartan(CartanMatrix{{{2, -2}, {-2, 2}}}), InvalidParameter);
  CHECK_THROWS_AS(validate_cartan(CartanMatrix{{{3}}}), InvalidParameter);
}

TEST_CASE("weyl group orders") {
  CHECK(weyl_order('A', 2) == 6);
  CHECK(weyl_order('B', 2) == 8);
  CHECK(weyl_order('D', 4) == 192);
  CHECK(weyl_order('E', 6) == 51840);
  CHECK(weyl_order('E', 8) == 696729600ull);
  CHECK(weyl_order('F', 4) == 1152);
  for (auto [t, n] : std::vector<std::pair<char, std::size_t>>{
           {'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2}, {'F', 4}}) {
    CAPTURE(t);
    CAPTURE(n);
    const auto r = build_root_system(t, n);
    CHECK(weyl_group(r)->order() == weyl_order(t, n));
    // Independent closure of the simple reflections as root permutations.
    std::vector<oracle::Perm> gens;
    for (std::size_t i = 0; i < n; ++i) {
      RootVector e(n, 0);
      e[i] = 1;
      oracle::Perm p(r.size());
      for (std::size_t k = 0; k < r.size(); ++k) {
        p[k] = static_cast<std::uint32_t>(*r.find(r.reflect(e, r.roots[k])));
      }
      gens.push_back(p);
    }
    CHECK(oracle::closure(gens).size() == weyl_order(t, n));
  }
}

TEST_CASE("reflections preserve the pairing") {
  for (auto [t, n] : std::vector<std::pair<char, std::size_t>>{{'B', 3}, {'G', 2}, {'C', 3}}) {
    const auto r = build_root_system(t, n);
    for (std::size_t a = 0; a < r.size(); ++a) {
      CHECK(r.pairing(r.roots[a], r.roots[a]) == 2);
      for (std::size_t b = 0; b < r.size(); ++b) {
        const auto sb = r.reflect(r.roots[a], r.roots[b]);
        for (std::size_t c = 0; c < r.size(); ++c) {
          const auto sc = r.reflect(r.roots[a], r.roots[c]);
          CHECK(r.form(sb, sc) == r.form(r.roots[b], r.roots[c]));
        }
      }
    }
  }
}

TEST_CASE("reflection quandles against conjugacy classes") {
  const auto a2 = weyl('A', 2);
  CHECK(a2.size() == 3);
  CHECK(oracle::isomorphic(a2.rows(), symmetric_2cycles(3).rows()));
  const auto a3 = weyl('A', 3);
  CHECK(a3.size() == 6);
  CHECK(oracle::isomorphic(a3.rows(), symmetric_2cycles(4).rows()));
  CHECK(verify_ip(weyl('G', 2)).all_ok());
  CHECK(verify_ip(weyl('F', 4)).all_ok());
  CHECK(weyl('D', 4).embedding()->group->order() == 192);
  CHECK(a2.name(0) == "r10");
}

TEST_CASE("skew reflections have equal length") {
  for (auto [t, n] : std::vector<std::pair<char, std::size_t>>{{'B', 3}, {'G', 2}, {'F', 4}}) {
    const auto r = build_root_system(t, n);
    const auto q = reflection_quandle(r);
    const auto s = skew_analysis(q);
    for (auto [a, b] : s.edges) CHECK(r.form(r.roots[a], r.roots[a]) == r.form(r.roots[b], r.roots[b]));
  }
}

TEST_CASE("B2 reflections have no skew pairs") {
  // In D_8 two reflections braid only when their axes are 60 degrees apart,
  // which never happens among the four B2 axes at multiples of 45 degrees.
  const auto s = skew_analysis(weyl('B', 2));
  CHECK(s.edges.empty());
  CHECK(s.components == 4);
  CHECK_FALSE(s.is_locally_skew);
}

TEST_CASE("large Weyl groups skip the embedding") {
  const auto e8 = weyl('E', 8);
  CHECK(e8.size() == 120);
  CHECK_FALSE(e8.embedding().has_value());
}
