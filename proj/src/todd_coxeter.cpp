// HLT coset enumeration over the trivial subgroup, following the
// relator-scanning strategy with full coincidence processing. Definitions are
// made in coset order; no lookahead.

#include <algorithm>
#include <set>

#include "qcover/presentation.hpp"

namespace qcover {

namespace {

struct Overflow {};

class Enumerator {
 public:
  Enumerator(std::size_t columns, std::vector<std::uint32_t> column_inverse,
             std::vector<std::vector<std::uint32_t>> relators, std::size_t max_cosets)
      : columns_(columns),
        colinv_(std::move(column_inverse)),
        relators_(std::move(relators)),
        max_(max_cosets) {}

  void run() {
    new_coset();
    for (std::int32_t alpha = 0; alpha < count(); ++alpha) {
      if (!live(alpha)) continue;
      for (const auto& w : relators_) {
        scan_and_fill(alpha, w);
        if (!live(alpha)) break;
      }
      if (!live(alpha)) continue;
      for (std::uint32_t x = 0; x < columns_; ++x) {
        if (at(alpha, x) < 0) define(alpha, x);
      }
    }
  }

  std::int32_t count() const { return static_cast<std::int32_t>(parent_.size()); }
  std::size_t high_water() const { return parent_.size(); }

  CosetTable compact() {
    std::vector<std::int32_t> renumber(parent_.size(), -1);
    std::uint32_t next = 0;
    for (std::int32_t c = 0; c < count(); ++c) {
      if (live(c)) renumber[c] = static_cast<std::int32_t>(next++);
    }
    CosetTable t;
    t.cosets = next;
    t.columns = columns_;
    t.column_inverse = colinv_;
    t.table.reserve(static_cast<std::size_t>(next) * columns_);
    for (std::int32_t c = 0; c < count(); ++c) {
      if (!live(c)) continue;
      for (std::uint32_t x = 0; x < columns_; ++x) {
        t.table.push_back(static_cast<std::uint32_t>(renumber[rep(at(c, x))]));
      }
    }
    t.high_water = high_water();
    return t;
  }

 private:
  std::int32_t& at(std::int32_t c, std::uint32_t x) { return table_[c * columns_ + x]; }
  bool live(std::int32_t c) const { return parent_[c] == c; }

  std::int32_t new_coset() {
    if (parent_.size() >= max_) throw Overflow{};
    const auto c = count();
    parent_.push_back(c);
    table_.insert(table_.end(), columns_, -1);
    return c;
  }

  void define(std::int32_t c, std::uint32_t x) {
    const auto d = new_coset();
    at(c, x) = d;
    at(d, colinv_[x]) = c;
  }

  std::int32_t rep(std::int32_t k) {
    auto root = k;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[k] != root) {
      auto next = parent_[k];
      parent_[k] = root;
      k = next;
    }
    return root;
  }

  void merge(std::int32_t k, std::int32_t l) {
    auto a = rep(k), b = rep(l);
    if (a == b) return;
    auto lo = std::min(a, b), hi = std::max(a, b);
    parent_[hi] = lo;
    queue_.push_back(hi);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const auto gamma = queue_[i];
      for (std::uint32_t x = 0; x < columns_; ++x) {
        const auto delta = at(gamma, x);
        if (delta < 0) continue;
        const auto xi = colinv_[x];
        at(delta, xi) = -1;
        const auto mu = rep(gamma);
        const auto nu = rep(delta);
        if (at(mu, x) >= 0) {
          merge(nu, at(mu, x));
        } else if (at(nu, xi) >= 0) {
          merge(mu, at(nu, xi));
        } else {
          at(mu, x) = nu;
          at(nu, xi) = mu;
        }
      }
    }
  }

  void scan_and_fill(std::int32_t alpha, const std::vector<std::uint32_t>& w) {
    if (w.empty()) return;
    std::int32_t f = alpha, b = alpha;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, w[i]) >= 0) f = at(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, colinv_[w[j]]) >= 0) b = at(b, colinv_[w[j--]]);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, w[i]) = b;
        at(b, colinv_[w[i]]) = f;
        return;
      }
      define(f, w[i]);
    }
  }

  std::size_t columns_;
  std::vector<std::uint32_t> colinv_;
  std::vector<std::vector<std::uint32_t>> relators_;
  std::size_t max_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> queue_;
};

}  // namespace

EnumerationResult todd_coxeter(const Presentation& p, std::size_t max_cosets) {
  if (p.relators.empty()) throw InvalidParameter("presentation has no relators");
  if (max_cosets == 0) throw InvalidParameter("max_cosets must be positive");

  std::set<std::uint32_t> involutions;
  for (const auto& r : p.relators) {
    if (r.size() == 2 && r[0] == r[1]) involutions.insert(letter_generator(r[0]));
  }

  CosetTable shape;
  std::vector<std::uint32_t> colinv;
  for (std::uint32_t g = 0; g < p.generators; ++g) {
    const auto c = static_cast<std::uint32_t>(colinv.size());
    shape.generator_column.push_back(c);
    if (involutions.count(g)) {
      shape.inverse_generator_column.push_back(c);
      colinv.push_back(c);
    } else {
      shape.inverse_generator_column.push_back(c + 1);
      colinv.push_back(c + 1);
      colinv.push_back(c);
    }
  }

  std::vector<std::vector<std::uint32_t>> words;
  for (const auto& r : p.relators) {
    std::vector<std::uint32_t> w;
    for (auto l : r) w.push_back(shape.column_of(l));
    words.push_back(std::move(w));
  }

  Enumerator e(colinv.size(), colinv, std::move(words), max_cosets);
  try {
    e.run();
  } catch (const Overflow&) {
    return EnumerationExceeded{e.high_water()};
  }
  CosetTable t = e.compact();
  t.generator_column = std::move(shape.generator_column);
  t.inverse_generator_column = std::move(shape.inverse_generator_column);
  return t;
}

}  // namespace qcover
