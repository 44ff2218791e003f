#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qcover/group.hpp"
#include "qcover/quandle.hpp"

namespace qcover {

IPQuandle symmetric_2cycles(std::size_t n);
/// n even: the n-cycles generate S_n.
IPQuandle symmetric_ncycles(std::size_t n);
/// n odd: all n-cycles inside A_n.
IPQuandle alternating_ncycles(std::size_t n);
/// D_{2n} with C = {a^i x}, named e0 .. e{n-1}; ^{e_i} e_j = e_{2i-j}.
IPQuandle dihedral(std::size_t n);
/// Z_n with C = {a, a^-1} ({a} when n = 2).
IPQuandle cyclic(std::size_t n);
/// Z_2 x Z_2 with C = {x, ax}.
IPQuandle klein_four();
IPQuandle weyl(char type, std::size_t rank);
/// Six-element quandle {a, b, c} and inverses; b swaps a and c, every other
/// element acts trivially. Not a conjugation quandle.
IPQuandle example_2_3();
/// Z_{n1} x ... x Z_{nk}, one generator per factor with its inverse.
IPQuandle abelian_product(const std::vector<std::size_t>& factors);

/// Primitive (a, c) modulo +-1, first nonzero entry positive; sign +1 for
/// e_v, -1 for e_v^-1.
struct ProjVec {
  std::int64_t a = 1;
  std::int64_t c = 0;
  int sign = 1;

  /// Normalizes; throws InvalidParameter unless gcd(a, c) = 1.
  static ProjVec make(std::int64_t a, std::int64_t c, int sign = 1);
  ProjVec inverse() const { return {a, c, -sign}; }
  auto operator<=>(const ProjVec&) const = default;
  std::string to_string() const;
};

/// a1 c2 - c1 a2.
std::int64_t det(const ProjVec& u, const ProjVec& v);

/// e_(a,c) = [[1-ac, a^2], [-c^2, 1+ac]], or its inverse for sign -1.
Matrix2 sl2z_matrix(const ProjVec& v);
/// ^u v: vector v + s det(u, v) u with s the sign of u, sign of v kept.
ProjVec sl2z_conjugate(const ProjVec& u, const ProjVec& v);
/// Opposite signs and (u = +-v or |det(u, v)| = 1).
bool sl2z_skew(const ProjVec& u, const ProjVec& v);
/// ^u v = (^v u)^-1 evaluated with sl2z_conjugate.
bool sl2z_skew_by_conjugation(const ProjVec& u, const ProjVec& v);

struct WindowQuandle {
  static constexpr std::int32_t kOutOfWindow = -1;

  std::int64_t bound = 0;
  std::vector<ProjVec> elements;  // sign +1 block, then the inverses in the same order
  std::vector<std::int32_t> op;   // ^a b or kOutOfWindow
  std::vector<std::uint32_t> inv;

  std::size_t size() const { return elements.size(); }
  std::int32_t act(std::uint32_t a, std::uint32_t b) const { return op[a * size() + b]; }
  std::vector<std::string> names() const;
};

struct WindowAxioms {
  std::size_t checked = 0;  // rack triples with every evaluation in-window
  bool rack = true;
  bool idempotent = true;
  bool ip = true;
  bool all_ok() const { return rack && idempotent && ip; }
};

struct WindowSkewGraph {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::vector<std::uint32_t> component;
  std::size_t components = 0;
  bool connected() const { return components == 1; }
};

WindowQuandle sl2z_window(std::int64_t n);
WindowAxioms verify_window(const WindowQuandle& w);
WindowSkewGraph window_skew_graph(const WindowQuandle& w);

using CatalogItem = std::variant<IPQuandle, WindowQuandle>;

/// Resolves identifiers such as "sym:4:ncycles" or "weyl:B:2".
/// Throws InvalidParameter for unknown names.
CatalogItem catalog_lookup(const std::string& id);

struct CatalogEntry {
  std::string pattern;
  std::string description;
};

const std::vector<CatalogEntry>& catalog_identifiers();

}  // namespace qcover
