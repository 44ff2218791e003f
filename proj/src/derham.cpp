#include "qcover/derham.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>

namespace qcover {

Calculus::Calculus(const IPQuandle& q)
    : quandle_(q), right_form_(to_right_quandle(q)) {
  if (!q.embedding()) throw InvalidParameter("calculus needs a conjugation quandle");
  group_ = q.embedding()->group;
  elements_ = q.embedding()->elements;
  labels_ = q.size();
  points_ = group_->order();
  right_.resize(labels_ * points_);
  for (std::uint32_t a = 0; a < labels_; ++a) {
    for (std::size_t x = 0; x < points_; ++x) right_[a * points_ + x] = group_->multiply(x, elements_[a]);
  }
}

OneForm OneForm::operator+(const OneForm& rhs) const {
  OneForm out = *this;
  for (std::size_t i = 0; i < c.size(); ++i) out.c[i] += rhs.c[i];
  return out;
}

OneForm OneForm::operator-(const OneForm& rhs) const {
  OneForm out = *this;
  for (std::size_t i = 0; i < c.size(); ++i) out.c[i] -= rhs.c[i];
  return out;
}

OneForm OneForm::operator*(const Rational& k) const {
  OneForm out = *this;
  for (auto& v : out.c) v *= k;
  return out;
}

bool OneForm::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Rational& v) { return sgn(v) == 0; });
}

namespace {

void check_label(const Calculus& cal, std::uint32_t a) {
  if (a >= cal.labels()) throw NotInC(a);
}

void check_form(const Calculus& cal, const OneForm& w) {
  if (w.labels != cal.labels() || w.points != cal.points() || w.c.size() != cal.unknowns()) {
    throw InvalidParameter("form is not dimensioned to the calculus");
  }
}

template <class Field>
using SparseRow = typename RowReducer<Field>::Row;

// Row of c_a(x) + c_b(xa) - c_b(x) - c_{a^b}(xb); empty when it cancels.
template <class Field>
SparseRow<Field> closedness_row(const Calculus& cal, const Field& field, std::uint32_t a,
                                std::uint32_t b, std::size_t x) {
  std::map<std::uint32_t, long> acc;
  auto add = [&](std::uint32_t l, std::size_t y, long k) {
    acc[static_cast<std::uint32_t>(cal.index(l, y))] += k;
  };
  add(a, x, 1);
  add(b, cal.right(x, a), 1);
  add(b, x, -1);
  add(cal.rconj(a, b), cal.right(x, b), -1);
  SparseRow<Field> row;
  for (auto [col, k] : acc) {
    if (k != 0) row.emplace_back(col, field.from_int(k));
  }
  return row;
}

template <class Field>
SparseRow<Field> d0_delta_row(const Calculus& cal, const Field& field, std::size_t y) {
  std::map<std::uint32_t, long> acc;
  // partial^a delta_y = delta_{y a^-1} - delta_y
  for (std::uint32_t a = 0; a < cal.labels(); ++a) {
    for (std::size_t x = 0; x < cal.points(); ++x) {
      long v = (cal.right(x, a) == y ? 1 : 0) - (x == y ? 1 : 0);
      if (v != 0) acc[static_cast<std::uint32_t>(cal.index(a, x))] += v;
    }
  }
  SparseRow<Field> row;
  for (auto [col, k] : acc) {
    if (k != 0) row.emplace_back(col, field.from_int(k));
  }
  return row;
}

template <class Field>
SparseRow<Field> theta_row(const Calculus& cal, const Field& field) {
  SparseRow<Field> row;
  for (std::uint32_t i = 0; i < cal.unknowns(); ++i) row.emplace_back(i, field.from_int(1));
  return row;
}

template <class Field>
RowReducer<Field> closedness_system(const Calculus& cal, const Field& field) {
  RowReducer<Field> r(field, cal.unknowns());
  for (std::size_t x = 0; x < cal.points(); ++x) {
    for (std::uint32_t a = 0; a < cal.labels(); ++a) {
      for (std::uint32_t b = 0; b < cal.labels(); ++b) {
        auto row = closedness_row(cal, field, a, b, x);
        if (!row.empty()) r.insert(std::move(row));
      }
    }
  }
  return r;
}

template <class Field>
RowReducer<Field> exact_system(const Calculus& cal, const Field& field) {
  RowReducer<Field> r(field, cal.unknowns());
  for (std::size_t y = 0; y < cal.points(); ++y) r.insert(d0_delta_row(cal, field, y));
  return r;
}

OneForm to_form(const Calculus& cal, const RowReducer<RationalField>::Row& row) {
  OneForm w(cal);
  for (const auto& [col, v] : row) w.c[col] = v;
  return w;
}

RowReducer<RationalField>::Row to_row(const OneForm& w) {
  RowReducer<RationalField>::Row row;
  for (std::uint32_t i = 0; i < w.c.size(); ++i) {
    if (sgn(w.c[i]) != 0) row.emplace_back(i, w.c[i]);
  }
  return row;
}

}  // namespace

Function partial(const Calculus& cal, std::uint32_t a, const Function& f) {
  check_label(cal, a);
  if (f.size() != cal.points()) throw InvalidParameter("function is not defined on G");
  Function out(cal.points());
  for (std::size_t x = 0; x < cal.points(); ++x) out[x] = f[cal.right(x, a)] - f[x];
  return out;
}

Function delta(const Calculus& cal, std::size_t y) {
  Function f(cal.points(), 0);
  f.at(y) = 1;
  return f;
}

OneForm d0(const Calculus& cal, const Function& f) {
  OneForm w(cal);
  for (std::uint32_t a = 0; a < cal.labels(); ++a) {
    auto p = partial(cal, a, f);
    std::copy(p.begin(), p.end(), w.c.begin() + static_cast<std::ptrdiff_t>(a * cal.points()));
  }
  return w;
}

OneForm theta(const Calculus& cal) {
  OneForm w(cal);
  std::fill(w.c.begin(), w.c.end(), Rational(1));
  return w;
}

OneForm inner_commutator(const Calculus& cal, const Function& f) {
  // theta f = sum_a R_a(f) omega_a, f theta = sum_a f omega_a.
  OneForm w(cal);
  for (std::uint32_t a = 0; a < cal.labels(); ++a) {
    for (std::size_t x = 0; x < cal.points(); ++x) w(a, x) = f[cal.right(x, a)] - f[x];
  }
  return w;
}

bool is_closed(const Calculus& cal, const OneForm& w) {
  check_form(cal, w);
  for (std::uint32_t a = 0; a < cal.labels(); ++a) {
    for (std::uint32_t b = 0; b < cal.labels(); ++b) {
      const auto ab = cal.rconj(a, b);
      for (std::size_t x = 0; x < cal.points(); ++x) {
        if (w(ab, cal.right(x, b)) + w(b, x) != w(b, cal.right(x, a)) + w(a, x)) return false;
      }
    }
  }
  return true;
}

Tensor2 psi_tilde(const Calculus& cal, const Tensor2& t) {
  const auto& q = cal.quandle();
  Tensor2 out{t.labels, t.points, std::vector<Rational>(t.t.size())};
  // Coefficient of omega_u (x) omega_v in the image is t_{v, v^-1 u v}.
  for (std::uint32_t u = 0; u < t.labels; ++u) {
    for (std::uint32_t v = 0; v < t.labels; ++v) {
      const auto b = q.act(q.inv(v), u);
      for (std::size_t x = 0; x < t.points; ++x) out(u, v, x) = t(v, b, x);
    }
  }
  return out;
}

Tensor2 d_tensor(const Calculus& cal, const OneForm& w) {
  check_form(cal, w);
  const auto n = cal.labels();
  Tensor2 t{n, cal.points(), std::vector<Rational>(n * n * cal.points())};
  // theta w = sum R_p(c_q) omega_p omega_q; w theta = sum c_p omega_p omega_q.
  for (std::uint32_t p = 0; p < n; ++p) {
    for (std::uint32_t q = 0; q < n; ++q) {
      for (std::size_t x = 0; x < cal.points(); ++x) t(p, q, x) = w(q, cal.right(x, p)) + w(p, x);
    }
  }
  return t;
}

bool is_closed_via_braiding(const Calculus& cal, const OneForm& w) {
  const auto t = d_tensor(cal, w);
  return psi_tilde(cal, t) == t;
}

std::optional<std::vector<std::uint32_t>> psi_braid_failure(const IPQuandle& q) {
  using Triple = std::array<std::uint32_t, 3>;
  auto s1 = [&](Triple v) { return Triple{q.act(v[0], v[1]), v[0], v[2]}; };
  auto s2 = [&](Triple v) { return Triple{v[0], q.act(v[1], v[2]), v[1]}; };
  const auto m = static_cast<std::uint32_t>(q.size());
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = 0; b < m; ++b) {
      for (std::uint32_t c = 0; c < m; ++c) {
        const Triple v{a, b, c};
        if (s1(s2(s1(v))) != s2(s1(s2(v)))) return std::vector<std::uint32_t>{a, b, c};
      }
    }
  }
  return std::nullopt;
}

std::optional<Function> is_exact(const Calculus& cal, const OneForm& w) {
  if (!is_closed(cal, w)) throw NotClosed();
  const auto& g = cal.group();
  Function f(cal.points(), 0);
  std::vector<bool> seen(cal.points(), false);
  seen[g.identity()] = true;
  std::deque<std::size_t> queue{g.identity()};
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (std::uint32_t a = 0; a < cal.labels(); ++a) {
      const auto y = cal.right(x, a);
      if (seen[y]) continue;
      seen[y] = true;
      f[y] = f[x] + w(a, x);
      queue.push_back(y);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw InvalidParameter("Cayley graph of the calculus is not connected");
  }
  for (std::uint32_t a = 0; a < cal.labels(); ++a) {
    for (std::size_t x = 0; x < cal.points(); ++x) {
      const auto xa = cal.right(x, a);
      if (f[xa] - f[x] != w(a, x)) return std::nullopt;
      if (sgn(w(a, x) + w(cal.inv(a), xa)) != 0) return std::nullopt;
    }
  }
  return f;
}

DInvariants d_invariants(const Calculus& cal, const OneForm& w) {
  if (!is_closed(cal, w)) throw NotClosed();
  DInvariants out;
  out.d.resize(cal.unknowns());
  for (std::uint32_t a = 0; a < cal.labels(); ++a) {
    for (std::size_t x = 0; x < cal.points(); ++x) {
      out.d[cal.index(a, x)] = w(a, x) + w(cal.inv(a), cal.right(x, a));
    }
  }
  out.constant = std::all_of(out.d.begin(), out.d.end(),
                             [&](const Rational& v) { return v == out.d.front(); });
  if (out.constant && !out.d.empty()) out.lambda = out.d.front();
  return out;
}

std::vector<OneForm> closed_forms(const Calculus& cal) {
  auto system = closedness_system(cal, RationalField{});
  std::vector<OneForm> out;
  for (const auto& v : system.nullspace()) out.push_back(to_form(cal, v));
  return out;
}

H1Result h1(const Calculus& cal) {
  RationalField field;
  auto system = closedness_system(cal, field);
  H1Result r;
  r.dim_closed = cal.unknowns() - system.rank();

  auto exact = exact_system(cal, field);
  r.dim_exact = exact.rank();
  r.dim_h1 = r.dim_closed - r.dim_exact;
  exact.make_reduced();

  auto classes = exact;
  const auto th = theta(cal);
  if (classes.insert(to_row(th))) {
    r.theta_class_independent = true;
    r.basis.push_back(th);
  }
  for (auto& v : system.nullspace()) {
    if (r.basis.size() == r.dim_h1) break;
    auto rep = exact.reduce(std::move(v));
    if (!classes.insert(rep)) continue;
    std::vector<Rational> dense(cal.unknowns(), 0);
    for (const auto& [col, x] : rep) dense[col] = x;
    const auto ints = primitive_integer_vector(dense);
    OneForm w(cal);
    for (std::size_t i = 0; i < ints.size(); ++i) w.c[i] = Rational(ints[i]);
    r.basis.push_back(std::move(w));
  }
  return r;
}

H1Result h1_mod_p(const Calculus& cal, std::uint32_t p) {
  if (p == 2) {
    throw InvalidParameter("characteristic 2 is excluded: theta is exact there");
  }
  PrimeField field(p);
  auto system = closedness_system(cal, field);
  H1Result r;
  r.dim_closed = cal.unknowns() - system.rank();
  auto exact = exact_system(cal, field);
  r.dim_exact = exact.rank();
  r.dim_h1 = r.dim_closed - r.dim_exact;
  r.theta_class_independent = exact.insert(theta_row(cal, field));
  return r;
}

}  // namespace qcover
