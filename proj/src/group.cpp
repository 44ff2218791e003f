#include "qcover/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "qcover/error.hpp"

namespace qcover {

Permutation::Permutation(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw InvalidParameter("image list is not a permutation");
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(
    std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (cycle[i] >= degree) throw InvalidParameter("cycle point out of range");
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw MixedBackends();
  std::vector<std::uint32_t> out(degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = images_[rhs.images_[i]];
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> out(degree());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[images_[i]] = i;
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::size_t Permutation::support_size() const {
  std::size_t n = 0;
  for (std::uint32_t i = 0; i < images_.size(); ++i) n += images_[i] != i;
  return n;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  std::vector<bool> done(images_.size(), false);
  bool any = false;
  for (std::uint32_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    any = true;
    os << '(' << start + 1;
    done[start] = true;
    for (auto x = images_[start]; x != start; x = images_[x]) {
      os << ',' << x + 1;
      done[x] = true;
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

Matrix2 Matrix2::operator*(const Matrix2& r) const {
  return {{m[0] * r.m[0] + m[1] * r.m[2], m[0] * r.m[1] + m[1] * r.m[3],
           m[2] * r.m[0] + m[3] * r.m[2], m[2] * r.m[1] + m[3] * r.m[3]}};
}

Matrix2 Matrix2::inverse() const {
  const auto d = det();
  if (d != 1 && d != -1) throw InvalidParameter("matrix is not unimodular");
  return {{m[3] * d, -m[1] * d, -m[2] * d, m[0] * d}};
}

std::string Matrix2::to_string() const {
  std::ostringstream os;
  os << "[[" << m[0] << ',' << m[1] << "],[" << m[2] << ',' << m[3] << "]]";
  return os.str();
}

RegularAction::RegularAction(std::size_t points, std::size_t columns,
                             std::vector<std::uint32_t> table,
                             std::vector<std::uint32_t> inverse_column)
    : points_(points),
      columns_(columns),
      table_(std::move(table)),
      inverse_column_(std::move(inverse_column)),
      paths_(points) {
  if (table_.size() != points_ * columns_ || inverse_column_.size() != columns_) {
    throw MalformedTable("regular action table has wrong shape");
  }
  std::vector<bool> seen(points_, false);
  std::deque<std::uint32_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    auto p = queue.front();
    queue.pop_front();
    for (std::uint32_t c = 0; c < columns_; ++c) {
      auto q = act(p, c);
      if (q >= points_) throw MalformedTable("regular action entry out of range");
      if (!seen[q]) {
        seen[q] = true;
        paths_[q] = paths_[p];
        paths_[q].push_back(c);
        queue.push_back(q);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw MalformedTable("regular action is not transitive");
  }
}

std::uint32_t RegularAction::multiply(std::uint32_t x, std::uint32_t y) const {
  for (auto c : paths_[y]) x = act(x, c);
  return x;
}

std::uint32_t RegularAction::inverse(std::uint32_t x) const {
  const auto& word = paths_[x];
  std::uint32_t p = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    p = act(p, inverse_column_[*it]);
  }
  return p;
}

namespace {

struct Multiplier {
  GroupElement operator()(const Permutation& a, const Permutation& b) const {
    return a * b;
  }
  GroupElement operator()(const Matrix2& a, const Matrix2& b) const { return a * b; }
  GroupElement operator()(const CosetElement& a, const CosetElement& b) const {
    if (a.action != b.action) throw MixedBackends();
    return CosetElement{a.action, a.action->multiply(a.index, b.index)};
  }
  template <class A, class B>
  GroupElement operator()(const A&, const B&) const {
    throw MixedBackends();
  }
};

}  // namespace

GroupElement multiply(const GroupElement& lhs, const GroupElement& rhs) {
  return std::visit(Multiplier{}, lhs, rhs);
}

GroupElement invert(const GroupElement& x) {
  return std::visit(
      [](const auto& v) -> GroupElement {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, CosetElement>) {
          return CosetElement{v.action, v.action->inverse(v.index)};
        } else {
          return v.inverse();
        }
      },
      x);
}

GroupElement identity_like(const GroupElement& x) {
  return std::visit(
      [](const auto& v) -> GroupElement {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Permutation>) {
          return Permutation::identity(v.degree());
        } else if constexpr (std::is_same_v<T, Matrix2>) {
          return Matrix2::identity();
        } else {
          return CosetElement{v.action, 0};
        }
      },
      x);
}

std::string to_string(const GroupElement& x) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, CosetElement>) {
          return "#" + std::to_string(v.index);
        } else {
          return v.to_string();
        }
      },
      x);
}

std::optional<std::size_t> FiniteGroup::find(const GroupElement& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGroup::index_of(const GroupElement& x) const {
  if (auto i = find(x)) return *i;
  throw ElementNotInGroup(to_string(x));
}

std::size_t FiniteGroup::multiply(std::size_t x, std::size_t y) const {
  return index_of(qcover::multiply(elements_[x], elements_[y]));
}

std::size_t FiniteGroup::power(std::size_t x, std::int64_t k) const {
  if (k < 0) {
    x = inverse(x);
    k = -k;
  }
  std::size_t result = identity();
  for (std::int64_t i = 0; i < k; ++i) result = multiply(result, x);
  return result;
}

std::size_t FiniteGroup::conjugate(std::size_t g, std::size_t x) const {
  return multiply(multiply(g, x), inverse(g));
}

FiniteGroup closure_from_generators(std::span<const GroupElement> gens,
                                    std::size_t cap) {
  if (gens.empty()) throw InvalidParameter("closure needs at least one generator");
  for (const auto& g : gens) {
    if (g.index() != gens.front().index()) throw MixedBackends();
    if (auto* c = std::get_if<CosetElement>(&g);
        c && c->action != std::get<CosetElement>(gens.front()).action) {
      throw MixedBackends();
    }
  }

  FiniteGroup group;
  auto add = [&](GroupElement x) {
    if (group.elements_.size() >= cap) throw CapExceeded(cap);
    group.index_.emplace(x, group.elements_.size());
    group.elements_.push_back(std::move(x));
  };
  add(identity_like(gens.front()));

  const std::size_t k = gens.size();
  for (std::size_t i = 0; i < group.elements_.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      auto y = qcover::multiply(group.elements_[i], gens[j]);
      auto it = group.index_.find(y);
      std::size_t yi;
      if (it == group.index_.end()) {
        yi = group.elements_.size();
        add(std::move(y));
      } else {
        yi = it->second;
      }
      group.cayley_.push_back(yi);
    }
  }

  for (const auto& g : gens) group.generators_.push_back(group.index_of(g));
  group.inverses_.resize(group.order());
  for (std::size_t i = 0; i < group.order(); ++i) {
    group.inverses_[i] = group.index_of(invert(group.elements_[i]));
  }
  return group;
}

std::vector<std::size_t> conjugacy_class(const FiniteGroup& group, std::size_t g) {
  std::vector<bool> in(group.order(), false);
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < group.order(); ++x) {
    auto c = group.conjugate(x, g);
    if (!in[c]) {
      in[c] = true;
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
    return group.element(a) < group.element(b);
  });
  return out;
}

std::vector<std::size_t> conjugacy_class(const FiniteGroup& group,
                                         const GroupElement& g) {
  return conjugacy_class(group, group.index_of(g));
}

bool is_central(const FiniteGroup& group, std::size_t n) {
  for (auto g : group.generators()) {
    if (group.multiply(n, g) != group.multiply(g, n)) return false;
  }
  return true;
}

bool is_central(const FiniteGroup& group, const GroupElement& n) {
  return is_central(group, group.index_of(n));
}

std::size_t element_order(const FiniteGroup& group, std::size_t g) {
  std::size_t k = 1;
  for (auto x = g; x != group.identity(); x = group.multiply(x, g)) ++k;
  return k;
}

std::size_t element_order(const FiniteGroup& group, const GroupElement& g) {
  return element_order(group, group.index_of(g));
}

}  // namespace qcover
