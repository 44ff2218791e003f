#include "qcover/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace qcover {

namespace {

std::string type_name(char type, std::size_t rank) {
  return std::string(1, type) + std::to_string(rank);
}

bool valid_type(char type, std::size_t rank) {
  switch (type) {
    case 'A': return rank >= 1;
    case 'B':
    case 'C': return rank >= 2;
    case 'D': return rank >= 3;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

void require_type(char type, std::size_t rank) {
  if (!valid_type(type, rank)) {
    throw InvalidParameter("no root system of type " + type_name(type, rank));
  }
}

// d_i with d_i A_ij = d_j A_ji, smallest entry 1 on each component.
std::optional<std::vector<Rational>> symmetrize(const CartanMatrix& m) {
  const auto n = m.rank();
  std::vector<Rational> d(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (sgn(d[start]) != 0) continue;
    std::vector<std::size_t> comp{start};
    d[start] = 1;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      const auto i = comp[k];
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || m(i, j) == 0 || sgn(d[j]) != 0) continue;
        d[j] = d[i] * m(i, j) / m(j, i);
        comp.push_back(j);
      }
    }
    Rational lo = d[start];
    for (auto i : comp) lo = std::min(lo, d[i]);
    for (auto i : comp) d[i] /= lo;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (d[i] * m(i, j) != d[j] * m(j, i)) return std::nullopt;
    }
  }
  return d;
}

int height(const RootVector& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

void validate_cartan(const CartanMatrix& m) {
  const auto n = m.rank();
  if (n == 0) throw InvalidParameter("empty Cartan matrix");
  for (const auto& row : m.a) {
    if (row.size() != n) throw InvalidParameter("Cartan matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) != 2) throw InvalidParameter("Cartan diagonal entry is not 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const int x = m(i, j);
      if (x > 0 || x < -3) throw InvalidParameter("Cartan off-diagonal entry out of range");
      if ((x == 0) != (m(j, i) == 0)) throw InvalidParameter("Cartan zero pattern not symmetric");
      if (x * m(j, i) > 3) throw InvalidParameter("Cartan product A_ij A_ji exceeds 3");
    }
  }
  if (!symmetrize(m)) throw InvalidParameter("Cartan matrix is not symmetrizable");
}

CartanMatrix cartan_matrix(char type, std::size_t rank) {
  require_type(type, rank);
  const auto n = rank;
  CartanMatrix m;
  m.a.assign(n, std::vector<int>(n, 0));
  auto link = [&](std::size_t i, std::size_t j) { m.a[i][j] = m.a[j][i] = -1; };
  for (std::size_t i = 0; i < n; ++i) m.a[i][i] = 2;
  switch (type) {
    case 'A':
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      m.a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case 'C':
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      m.a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case 'D':
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      m.a[1][2] = -2;
      break;
    case 'G':
      link(0, 1);
      m.a[1][0] = -3;
      break;
  }
  return m;
}

bool is_simply_laced(char type, std::size_t rank) {
  require_type(type, rank);
  return type == 'A' || type == 'D' || type == 'E';
}

std::uint64_t weyl_order(char type, std::size_t rank) {
  require_type(type, rank);
  auto factorial = [](std::uint64_t k) {
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= k; ++i) f *= i;
    return f;
  };
  switch (type) {
    case 'A': return factorial(rank + 1);
    case 'B':
    case 'C': return (std::uint64_t{1} << rank) * factorial(rank);
    case 'D': return (std::uint64_t{1} << (rank - 1)) * factorial(rank);
    case 'E': return rank == 6 ? 51840 : rank == 7 ? 2903040 : 696729600;
    case 'F': return 1152;
    default: return 12;
  }
}

std::optional<std::size_t> RootSystem::find(const RootVector& v) const {
  auto pos = std::find(roots.begin(), roots.end(), v);
  if (pos == roots.end()) return std::nullopt;
  return static_cast<std::size_t>(pos - roots.begin());
}

Rational RootSystem::form(const RootVector& u, const RootVector& v) const {
  Rational s = 0;
  for (std::size_t i = 0; i < rank; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < rank; ++j) {
      if (v[j] != 0) s += symmetrizer[i] * cartan(i, j) * u[i] * v[j];
    }
  }
  return s;
}

Rational RootSystem::pairing(const RootVector& alpha, const RootVector& beta) const {
  return 2 * form(alpha, beta) / form(alpha, alpha);
}

RootVector RootSystem::reflect(const RootVector& alpha, const RootVector& v) const {
  const Rational k = pairing(alpha, v);
  if (k.get_den() != 1) throw Error("non-integral coroot pairing");
  const long kk = k.get_num().get_si();
  RootVector out = v;
  for (std::size_t i = 0; i < rank; ++i) out[i] -= static_cast<int>(kk) * alpha[i];
  return out;
}

Permutation RootSystem::reflection(std::size_t k) const {
  std::vector<std::uint32_t> images(size());
  for (std::size_t j = 0; j < size(); ++j) {
    auto img = find(reflect(roots[k], roots[j]));
    if (!img) throw Error("root system not closed under reflection");
    images[j] = static_cast<std::uint32_t>(*img);
  }
  return Permutation(std::move(images));
}

RootSystem build_root_system(char type, std::size_t rank) {
  return build_root_system(cartan_matrix(type, rank), type);
}

RootSystem build_root_system(const CartanMatrix& m, char type) {
  validate_cartan(m);
  RootSystem r;
  r.type = type;
  r.rank = m.rank();
  r.cartan = m;
  r.symmetrizer = *symmetrize(m);
  const auto n = r.rank;

  // Orbit of the simple roots under simple reflections, positives kept.
  std::set<RootVector> seen;
  std::deque<RootVector> queue;
  for (std::size_t i = 0; i < n; ++i) {
    RootVector e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      int k = 0;
      for (std::size_t j = 0; j < n; ++j) k += m(i, j) * v[j];
      RootVector w = v;
      w[i] -= k;
      if (std::any_of(w.begin(), w.end(), [](int x) { return x < 0; })) continue;
      if (std::all_of(w.begin(), w.end(), [](int x) { return x == 0; })) continue;
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  std::vector<RootVector> pos(seen.begin(), seen.end());
  std::sort(pos.begin(), pos.end(), [](const RootVector& a, const RootVector& b) {
    const int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a > b;
  });
  r.positive_count = pos.size();
  r.roots = pos;
  for (const auto& v : pos) {
    RootVector w = v;
    for (auto& x : w) x = -x;
    r.roots.push_back(std::move(w));
  }
  return r;
}

std::shared_ptr<const FiniteGroup> weyl_group(const RootSystem& r, std::size_t cap) {
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < r.rank; ++i) gens.emplace_back(r.reflection(i));
  return std::make_shared<const FiniteGroup>(closure_from_generators(gens, cap));
}

IPQuandle reflection_quandle(const RootSystem& r, std::size_t cap) {
  const auto p = r.positive_count;
  std::vector<std::vector<std::uint32_t>> op(p, std::vector<std::uint32_t>(p));
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = 0; b < p; ++b) {
      auto k = r.find(r.reflect(r.roots[a], r.roots[b]));
      if (!k) throw Error("root system not closed under reflection");
      op[a][b] = static_cast<std::uint32_t>(r.is_positive(*k) ? *k : r.negative(*k));
    }
  }
  std::vector<std::uint32_t> inv(p);
  std::iota(inv.begin(), inv.end(), 0u);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < p; ++a) {
    std::string s = "r";
    for (auto x : r.roots[a]) s += std::to_string(x);
    names.push_back(std::move(s));
  }
  IPQuandle q(std::move(op), std::move(inv), std::move(names));

  const bool known = valid_type(r.type, r.rank) && r.cartan == cartan_matrix(r.type, r.rank);
  if (known && weyl_order(r.type, r.rank) > cap) return q;
  std::shared_ptr<const FiniteGroup> w;
  try {
    w = weyl_group(r, cap);
  } catch (const CapExceeded&) {
    return q;
  }
  Embedding e{w, {}};
  for (std::size_t a = 0; a < p; ++a) e.elements.push_back(w->index_of(r.reflection(a)));
  q.set_embedding(std::move(e));
  return q;
}

}  // namespace qcover
