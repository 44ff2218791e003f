#include "qcover/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include "qcover/rootsys.hpp"

namespace qcover {

namespace {

std::shared_ptr<const FiniteGroup> permutation_group(const std::vector<Permutation>& gens) {
  std::vector<GroupElement> g(gens.begin(), gens.end());
  return std::make_shared<const FiniteGroup>(closure_from_generators(g));
}

IPQuandle from_permutations(const std::vector<Permutation>& gens,
                            const std::vector<Permutation>& c,
                            std::vector<std::string> names = {}) {
  auto group = permutation_group(gens);
  std::vector<std::size_t> elements;
  for (const auto& p : c) elements.push_back(group->index_of(p));
  return conjugation_quandle(std::move(group), std::move(elements), std::move(names));
}

Permutation long_cycle(std::size_t n) {
  std::vector<std::uint32_t> cycle(n);
  std::iota(cycle.begin(), cycle.end(), 0u);
  return Permutation::from_cycles(n, {cycle});
}

// Every n-cycle (0, a_1, ..., a_{n-1}), tails in lexicographic order.
std::vector<Permutation> all_long_cycles(std::size_t n) {
  std::vector<std::uint32_t> tail(n - 1);
  std::iota(tail.begin(), tail.end(), 1u);
  std::vector<Permutation> out;
  do {
    std::vector<std::uint32_t> cycle{0};
    cycle.insert(cycle.end(), tail.begin(), tail.end());
    out.push_back(Permutation::from_cycles(n, {cycle}));
  } while (std::next_permutation(tail.begin(), tail.end()));
  return out;
}

std::size_t parse_size(const std::string& s, const std::string& id) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
    throw InvalidParameter("bad number '" + s + "' in catalog id " + id);
  }
  return std::stoul(s);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

IPQuandle symmetric_2cycles(std::size_t n) {
  if (n < 2) throw InvalidParameter("symmetric_2cycles needs n >= 2");
  std::vector<Permutation> c;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) c.push_back(Permutation::from_cycles(n, {{i, j}}));
  }
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1}})};
  if (n > 2) gens.push_back(long_cycle(n));
  return from_permutations(gens, c);
}

IPQuandle symmetric_ncycles(std::size_t n) {
  if (n < 2 || n % 2 != 0) throw InvalidParameter("symmetric_ncycles needs even n >= 2");
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1}})};
  if (n > 2) gens.push_back(long_cycle(n));
  return from_permutations(gens, all_long_cycles(n));
}

IPQuandle alternating_ncycles(std::size_t n) {
  if (n < 3 || n % 2 == 0) throw InvalidParameter("alternating_ncycles needs odd n >= 3");
  std::vector<Permutation> gens{long_cycle(n)};
  if (n > 3) gens.push_back(Permutation::from_cycles(n, {{0, 1, 2}}));
  return from_permutations(gens, all_long_cycles(n));
}

IPQuandle dihedral(std::size_t n) {
  if (n < 2) throw InvalidParameter("dihedral needs n >= 2");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  if (n == 2) {
    // x = a^-1 x a acts trivially on two points; give x its own pair of points.
    const auto a = Permutation::from_cycles(4, {{0, 1}});
    const auto x = Permutation::from_cycles(4, {{2, 3}});
    return from_permutations({a, x}, {x, a * x}, names);
  }
  std::vector<std::uint32_t> ai(n), xi(n);
  for (std::uint32_t j = 0; j < n; ++j) {
    ai[j] = static_cast<std::uint32_t>((j + 1) % n);
    xi[j] = static_cast<std::uint32_t>((n - j) % n);
  }
  const Permutation a(ai), x(xi);
  std::vector<Permutation> c;
  Permutation r = x;
  for (std::size_t i = 0; i < n; ++i) {
    c.push_back(r);
    r = a * r;
  }
  return from_permutations({a, x}, c, names);
}

IPQuandle cyclic(std::size_t n) {
  if (n < 2) throw InvalidParameter("cyclic needs n >= 2");
  const auto a = long_cycle(n);
  if (n == 2) return from_permutations({a}, {a}, {"a"});
  return from_permutations({a}, {a, a.inverse()}, {"a", "a^-1"});
}

IPQuandle klein_four() {
  const auto a = Permutation::from_cycles(4, {{0, 1}});
  const auto x = Permutation::from_cycles(4, {{2, 3}});
  return from_permutations({a, x}, {x, a * x}, {"x", "ax"});
}

IPQuandle weyl(char type, std::size_t rank) {
  return reflection_quandle(build_root_system(type, rank));
}

IPQuandle example_2_3() {
  // 0 a, 1 b, 2 c, 3 a^-1, 4 b^-1, 5 c^-1
  const std::vector<std::uint32_t> id{0, 1, 2, 3, 4, 5};
  const std::vector<std::uint32_t> swap{2, 1, 0, 5, 4, 3};
  return IPQuandle({id, swap, id, id, swap, id}, {3, 4, 5, 0, 1, 2},
                   {"a", "b", "c", "a^-1", "b^-1", "c^-1"});
}

IPQuandle abelian_product(const std::vector<std::size_t>& factors) {
  if (factors.empty()) throw InvalidParameter("abelian_product needs at least one factor");
  std::size_t degree = 0;
  for (auto n : factors) {
    if (n < 2) throw InvalidParameter("abelian factors must be >= 2");
    degree += n;
  }
  std::vector<Permutation> gens, c;
  std::vector<std::string> names;
  std::uint32_t offset = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::vector<std::uint32_t> cycle(factors[i]);
    std::iota(cycle.begin(), cycle.end(), offset);
    offset += static_cast<std::uint32_t>(factors[i]);
    const auto g = Permutation::from_cycles(degree, {cycle});
    gens.push_back(g);
    c.push_back(g);
    names.push_back("g" + std::to_string(i + 1));
    if (factors[i] > 2) {
      c.push_back(g.inverse());
      names.push_back("g" + std::to_string(i + 1) + "^-1");
    }
  }
  return from_permutations(gens, c, names);
}

ProjVec ProjVec::make(std::int64_t a, std::int64_t c, int sign) {
  if (std::gcd(a, c) != 1) throw InvalidParameter("projective vector must be primitive");
  if (sign != 1 && sign != -1) throw InvalidParameter("sign must be +1 or -1");
  if (a < 0 || (a == 0 && c < 0)) {
    a = -a;
    c = -c;
  }
  return {a, c, sign};
}

std::string ProjVec::to_string() const {
  return "e(" + std::to_string(a) + "," + std::to_string(c) + ")" + (sign < 0 ? "^-1" : "");
}

std::int64_t det(const ProjVec& u, const ProjVec& v) { return u.a * v.c - u.c * v.a; }

Matrix2 sl2z_matrix(const ProjVec& v) {
  const auto a = v.a, c = v.c;
  const std::int64_t s = v.sign;
  return Matrix2{{1 - s * a * c, s * a * a, -s * c * c, 1 + s * a * c}};
}

ProjVec sl2z_conjugate(const ProjVec& u, const ProjVec& v) {
  const auto k = u.sign * det(u, v);
  return ProjVec::make(v.a + k * u.a, v.c + k * u.c, v.sign);
}

bool sl2z_skew(const ProjVec& u, const ProjVec& v) {
  if (u.sign == v.sign) return false;
  if (u.a == v.a && u.c == v.c) return true;
  return std::llabs(det(u, v)) == 1;
}

bool sl2z_skew_by_conjugation(const ProjVec& u, const ProjVec& v) {
  return sl2z_conjugate(u, v) == sl2z_conjugate(v, u).inverse();
}

std::vector<std::string> WindowQuandle::names() const {
  std::vector<std::string> out;
  for (const auto& e : elements) out.push_back(e.to_string());
  return out;
}

WindowQuandle sl2z_window(std::int64_t n) {
  if (n < 1) throw InvalidParameter("window bound must be >= 1");
  WindowQuandle w;
  w.bound = n;
  std::vector<ProjVec> plus;
  for (std::int64_t a = 0; a <= n; ++a) {
    for (std::int64_t c = -n; c <= n; ++c) {
      if (std::gcd(a, c) != 1 || (a == 0 && c < 0)) continue;
      plus.push_back(ProjVec::make(a, c));
    }
  }
  auto key = [](const ProjVec& v) {
    return std::make_tuple(std::max(std::llabs(v.a), std::llabs(v.c)),
                           std::llabs(v.a) + std::llabs(v.c), -v.a, -v.c);
  };
  std::sort(plus.begin(), plus.end(),
            [&](const ProjVec& x, const ProjVec& y) { return key(x) < key(y); });
  const auto half = plus.size();
  w.elements = plus;
  for (const auto& v : plus) w.elements.push_back(v.inverse());
  for (std::size_t k = 0; k < 2 * half; ++k) {
    w.inv.push_back(static_cast<std::uint32_t>(k < half ? k + half : k - half));
  }
  std::map<ProjVec, std::int32_t> index;
  for (std::size_t k = 0; k < w.elements.size(); ++k) index[w.elements[k]] = static_cast<std::int32_t>(k);
  const auto m = w.elements.size();
  w.op.assign(m * m, WindowQuandle::kOutOfWindow);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      auto it = index.find(sl2z_conjugate(w.elements[a], w.elements[b]));
      if (it != index.end()) w.op[a * m + b] = it->second;
    }
  }
  return w;
}

WindowAxioms verify_window(const WindowQuandle& w) {
  WindowAxioms out;
  const auto m = static_cast<std::uint32_t>(w.size());
  constexpr auto out_of = WindowQuandle::kOutOfWindow;
  for (std::uint32_t a = 0; a < m; ++a) {
    if (w.act(a, a) != static_cast<std::int32_t>(a)) out.idempotent = false;
    for (std::uint32_t b = 0; b < m; ++b) {
      const auto ab = w.act(a, b);
      const auto a_binv = w.act(a, w.inv[b]);
      if (ab != out_of && a_binv != out_of &&
          static_cast<std::uint32_t>(a_binv) != w.inv[ab]) {
        out.ip = false;
      }
      if (ab != out_of) {
        const auto back = w.act(w.inv[a], static_cast<std::uint32_t>(ab));
        if (back != out_of && back != static_cast<std::int32_t>(b)) out.ip = false;
      }
      for (std::uint32_t c = 0; c < m; ++c) {
        const auto bc = w.act(b, c), ac = w.act(a, c);
        if (ab == out_of || bc == out_of || ac == out_of) continue;
        const auto lhs = w.act(a, static_cast<std::uint32_t>(bc));
        const auto rhs = w.act(static_cast<std::uint32_t>(ab), static_cast<std::uint32_t>(ac));
        if (lhs == out_of || rhs == out_of) continue;
        ++out.checked;
        if (lhs != rhs) out.rack = false;
      }
    }
  }
  return out;
}

WindowSkewGraph window_skew_graph(const WindowQuandle& w) {
  WindowSkewGraph g;
  const auto m = static_cast<std::uint32_t>(w.size());
  std::vector<std::vector<std::uint32_t>> adj(m);
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = a + 1; b < m; ++b) {
      if (sl2z_skew(w.elements[a], w.elements[b])) {
        g.edges.emplace_back(a, b);
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
    }
  }
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  g.component.assign(m, unset);
  for (std::uint32_t s = 0; s < m; ++s) {
    if (g.component[s] != unset) continue;
    const auto label = static_cast<std::uint32_t>(g.components++);
    g.component[s] = label;
    std::deque<std::uint32_t> queue{s};
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      for (auto y : adj[x]) {
        if (g.component[y] == unset) {
          g.component[y] = label;
          queue.push_back(y);
        }
      }
    }
  }
  return g;
}

CatalogItem catalog_lookup(const std::string& id) {
  const auto parts = split(id, ':');
  auto count = [&](std::size_t k) { return parts.size() == k; };
  if (parts.empty()) throw InvalidParameter("empty catalog id");
  const auto& head = parts[0];
  if (head == "sym" && count(3)) {
    const auto n = parse_size(parts[1], id);
    if (parts[2] == "2cycles") return symmetric_2cycles(n);
    if (parts[2] == "ncycles") return symmetric_ncycles(n);
  } else if (head == "alt" && count(3) && parts[2] == "ncycles") {
    return alternating_ncycles(parse_size(parts[1], id));
  } else if (head == "dihedral" && count(2)) {
    return dihedral(parse_size(parts[1], id));
  } else if (head == "cyclic" && count(2)) {
    return cyclic(parse_size(parts[1], id));
  } else if (head == "klein4" && count(1)) {
    return klein_four();
  } else if (head == "weyl" && count(3) && parts[1].size() == 1) {
    return weyl(parts[1][0], parse_size(parts[2], id));
  } else if (head == "example-2.3" && count(1)) {
    return example_2_3();
  } else if (head == "abelian" && count(2)) {
    std::vector<std::size_t> factors;
    for (const auto& f : split(parts[1], ',')) factors.push_back(parse_size(f, id));
    return abelian_product(factors);
  } else if (head == "sl2z" && count(3) && parts[1] == "window") {
    return sl2z_window(static_cast<std::int64_t>(parse_size(parts[2], id)));
  }
  throw InvalidParameter("unknown catalog id '" + id + "'");
}

const std::vector<CatalogEntry>& catalog_identifiers() {
  static const std::vector<CatalogEntry> entries{
      {"sym:<n>:2cycles", "S_n, transpositions (n >= 2)"},
      {"sym:<n>:ncycles", "S_n, n-cycles (n even)"},
      {"alt:<n>:ncycles", "A_n, n-cycles (n odd >= 3)"},
      {"dihedral:<n>", "D_2n, reflections a^i x (n >= 2)"},
      {"cyclic:<n>", "Z_n, {a, a^-1} (n >= 2)"},
      {"klein4", "Z_2 x Z_2, {x, ax}"},
      {"weyl:<A|B|C|D|E|F|G>:<rank>", "Weyl group, reflections"},
      {"example-2.3", "six-element non-embeddable quandle"},
      {"abelian:<n1>,<n2>,...", "product of cyclic groups, one generator per factor"},
      {"sl2z:window:<N>", "SL2(Z) parabolic class, entries bounded by N"},
  };
  return entries;
}

}  // namespace qcover
