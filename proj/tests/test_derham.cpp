#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "qcover/catalog.hpp"
#include "qcover/derham.hpp"

using namespace qcover;

namespace {

IPQuandle lookup(const char* id) { return std::get<IPQuandle>(catalog_lookup(id)); }

std::vector<oracle::Perm> as_perms(const IPQuandle& q) {
  const auto& e = *q.embedding();
  std::vector<oracle::Perm> out;
  for (auto x : e.elements) {
    const auto img = std::get<Permutation>(e.group->element(x)).images();
    out.emplace_back(img.begin(), img.end());
  }
  return out;
}

OneForm random_form(const Calculus& cal, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  OneForm w(cal);
  for (auto& v : w.c) v = d(rng);
  return w;
}

Function random_function(const Calculus& cal, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  Function f(cal.points());
  for (auto& v : f) v = d(rng);
  return f;
}

}  // namespace

TEST_CASE("partial derivatives and d0 on S3") {
  const Calculus cal(lookup("sym:3:2cycles"));
  REQUIRE(cal.points() == 6);
  const auto e = cal.group().identity();
  const auto de = d0(cal, delta(cal, e));
  std::size_t nonzero = 0;
  for (const auto& v : de.c) nonzero += sgn(v) != 0;
  // d^a delta_e(x) = delta_e(xa) - delta_e(x) is nonzero at x = e and x = a^-1 only.
  CHECK(nonzero == 6);
  for (std::uint32_t a = 0; a < 3; ++a) {
    const auto p = partial(cal, a, delta(cal, e));
    CHECK(p[e] == -1);
    CHECK(p[cal.element(a)] == 1);
  }
  CHECK_THROWS_AS(partial(cal, 3, delta(cal, e)), NotInC);
  CHECK_THROWS_AS(partial(cal, 0, Function(2, 0)), InvalidParameter);
}

TEST_CASE("theta is closed and not exact") {
  for (const char* id : {"sym:3:2cycles", "sym:4:2cycles", "dihedral:5", "klein4", "cyclic:4"}) {
    CAPTURE(id);
    const Calculus cal(lookup(id));
    const auto th = theta(cal);
    CHECK(is_closed(cal, th));
    CHECK(is_closed_via_braiding(cal, th));
    CHECK_FALSE(is_exact(cal, th).has_value());
    const auto inv = d_invariants(cal, th);
    CHECK(inv.constant);
    CHECK(inv.lambda == 2);
  }
}

TEST_CASE("a single basic form is not closed on S3") {
  const Calculus cal(lookup("sym:3:2cycles"));
  OneForm w(cal);
  for (std::size_t x = 0; x < cal.points(); ++x) w(0, x) = 1;
  CHECK_FALSE(is_closed(cal, w));
  CHECK_FALSE(is_closed_via_braiding(cal, w));
  CHECK_THROWS_AS(is_exact(cal, w), NotClosed);
  CHECK_THROWS_AS(d_invariants(cal, w), NotClosed);
}

TEST_CASE("exact forms round trip") {
  std::mt19937 rng(3);
  for (const char* id : {"sym:3:2cycles", "sym:4:ncycles", "dihedral:6"}) {
    const Calculus cal(lookup(id));
    for (int k = 0; k < 5; ++k) {
      const auto f = random_function(cal, rng);
      const auto w = d0(cal, f);
      CHECK(is_closed(cal, w));
      const auto g = is_exact(cal, w);
      REQUIRE(g.has_value());
      for (std::size_t x = 0; x < cal.points(); ++x) CHECK((*g)[x] - (*g)[0] == f[x] - f[0]);
      const auto inv = d_invariants(cal, w);
      CHECK(inv.constant);
      CHECK(inv.lambda == 0);
      CHECK((inner_commutator(cal, f) == w));
    }
  }
}

TEST_CASE("braiding route agrees with the explicit closedness test") {
  std::mt19937 rng(5);
  for (const char* id : {"sym:3:2cycles", "klein4", "dihedral:4", "cyclic:3", "weyl:B:2"}) {
    CAPTURE(id);
    const Calculus cal(lookup(id));
    for (int k = 0; k < 20; ++k) {
      const auto w = random_form(cal, rng);
      CHECK(is_closed(cal, w) == is_closed_via_braiding(cal, w));
    }
    for (const auto& w : closed_forms(cal)) {
      CHECK(is_closed(cal, w));
      CHECK(is_closed_via_braiding(cal, w));
    }
    CHECK_FALSE(psi_braid_failure(cal.quandle()).has_value());
  }
}

TEST_CASE("cohomology dimensions agree with the dense oracle") {
  for (const char* id : {"sym:3:2cycles", "sym:4:2cycles", "sym:4:ncycles", "klein4",
                         "dihedral:2", "dihedral:3", "dihedral:4", "dihedral:5", "dihedral:6",
                         "cyclic:3", "cyclic:4", "weyl:B:2", "abelian:2,3", "alt:3:ncycles"}) {
    CAPTURE(id);
    const auto q = lookup(id);
    const Calculus cal(q);
    const auto r = h1(cal);
    const auto o = oracle::h1_dims(as_perms(q));
    CHECK(r.dim_closed == o.dim_closed);
    CHECK(r.dim_exact == o.dim_exact);
    CHECK(r.dim_h1 == o.dim_h1);
    CHECK(r.dim_exact == cal.points() - 1);
    CHECK(r.basis.size() == r.dim_h1);
    CHECK(r.theta_class_independent);
    for (const auto& w : r.basis) {
      CHECK(is_closed(cal, w));
      CHECK_FALSE(is_exact(cal, w).has_value());
    }
    const auto m = h1_mod_p(cal, 3);
    const auto om = oracle::h1_dims(as_perms(q), 3);
    CHECK(m.dim_closed == om.dim_closed);
    CHECK(m.dim_h1 == om.dim_h1);
  }
}

TEST_CASE("frozen cohomology dimensions") {
  struct Case {
    const char* id;
    std::size_t closed, h1;
  };
  for (auto [id, closed, dim] : std::vector<Case>{{"sym:3:2cycles", 6, 1},
                                                  {"sym:4:2cycles", 24, 1},
                                                  {"klein4", 5, 2},
                                                  {"dihedral:6", 13, 2},
                                                  {"weyl:G:2", 13, 2},
                                                  {"weyl:B:2", 9, 2}}) {
    CAPTURE(id);
    const auto r = h1(Calculus(lookup(id)));
    CHECK(r.dim_closed == closed);
    CHECK(r.dim_h1 == dim);
  }
}

TEST_CASE("trivial quandles have one class per label") {
  const auto q = lookup("abelian:2,2");
  REQUIRE(is_trivial_quandle(q));
  const Calculus cal(q);
  CHECK(h1(cal).dim_h1 == q.size());
}

TEST_CASE("characteristic two is rejected") {
  const Calculus cal(lookup("sym:3:2cycles"));
  CHECK_THROWS_AS(h1_mod_p(cal, 2), InvalidParameter);
  CHECK_THROWS_AS(h1_mod_p(cal, 4), InvalidParameter);
}

TEST_CASE("calculus requires a conjugation quandle") {
  CHECK_THROWS_AS(Calculus(lookup("example-2.3")), InvalidParameter);
}
