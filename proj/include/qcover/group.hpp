#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qcover/error.hpp"

namespace qcover {

/// Permutation of {0, ..., n-1} stored as its image tuple.
/// Products compose as functions: (p * q)(i) = p(q(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);
  /// Builds from 0-based cycles, e.g. {{0, 1, 2, 3}} is the 4-cycle (1,2,3,4).
  static Permutation from_cycles(
      std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  std::span<const std::uint32_t> images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  std::size_t support_size() const;

  /// 1-based cycle notation without spaces: "(1,2)(3,4)"; the identity is "()".
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// 2x2 integer matrix of determinant +-1, row-major.
struct Matrix2 {
  std::array<std::int64_t, 4> m{1, 0, 0, 1};

  static Matrix2 identity() { return {}; }
  std::int64_t det() const { return m[0] * m[3] - m[1] * m[2]; }
  std::int64_t trace() const { return m[0] + m[3]; }
  Matrix2 operator*(const Matrix2& rhs) const;
  Matrix2 inverse() const;
  std::string to_string() const;

  auto operator<=>(const Matrix2&) const = default;
};

/// Right action of a group on itself recovered from a completed coset table
/// over the trivial subgroup. Point 0 is the identity.
class RegularAction {
 public:
  RegularAction(std::size_t points, std::size_t columns,
                std::vector<std::uint32_t> table,
                std::vector<std::uint32_t> inverse_column);

  std::size_t size() const { return points_; }
  std::size_t columns() const { return columns_; }
  std::uint32_t act(std::uint32_t point, std::uint32_t column) const {
    return table_[point * columns_ + column];
  }
  std::uint32_t inverse_column(std::uint32_t column) const {
    return inverse_column_[column];
  }
  /// Column word leading from point 0 to `point` along a BFS tree.
  std::span<const std::uint32_t> path(std::uint32_t point) const {
    return paths_[point];
  }

  std::uint32_t multiply(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t inverse(std::uint32_t x) const;

 private:
  std::size_t points_;
  std::size_t columns_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_column_;
  std::vector<std::vector<std::uint32_t>> paths_;
};

struct CosetElement {
  std::shared_ptr<const RegularAction> action;
  std::uint32_t index = 0;

  bool operator==(const CosetElement& rhs) const { return index == rhs.index; }
  std::strong_ordering operator<=>(const CosetElement& rhs) const {
    return index <=> rhs.index;
  }
};

using GroupElement = std::variant<Permutation, Matrix2, CosetElement>;

GroupElement multiply(const GroupElement& lhs, const GroupElement& rhs);
GroupElement invert(const GroupElement& x);
GroupElement identity_like(const GroupElement& x);
std::string to_string(const GroupElement& x);

/// A finite group enumerated from generators. Elements are indexed in BFS
/// discovery order from the identity (index 0).
class FiniteGroup {
 public:
  static constexpr std::size_t kDefaultCap = 1'000'000;

  std::size_t order() const { return elements_.size(); }
  std::size_t identity() const { return 0; }
  const GroupElement& element(std::size_t i) const { return elements_[i]; }
  std::string label(std::size_t i) const { return to_string(elements_[i]); }

  std::optional<std::size_t> find(const GroupElement& x) const;
  /// Throws ElementNotInGroup.
  std::size_t index_of(const GroupElement& x) const;

  std::size_t multiply(std::size_t x, std::size_t y) const;
  std::size_t inverse(std::size_t x) const { return inverses_[x]; }
  std::size_t power(std::size_t x, std::int64_t k) const;
  std::size_t conjugate(std::size_t g, std::size_t x) const;  // g x g^-1

  /// Indices of the generators, in input order.
  const std::vector<std::size_t>& generators() const { return generators_; }
  /// x * generators()[k], read from the table built during enumeration.
  std::size_t right_by_generator(std::size_t x, std::size_t k) const {
    return cayley_[x * generators_.size() + k];
  }

  friend FiniteGroup closure_from_generators(std::span<const GroupElement> gens,
                                             std::size_t cap);

 private:
  std::vector<GroupElement> elements_;
  std::map<GroupElement, std::size_t> index_;
  std::vector<std::size_t> inverses_;
  std::vector<std::size_t> generators_;
  std::vector<std::size_t> cayley_;
};

/// BFS closure under right multiplication by the generators.
/// Throws CapExceeded when more than `cap` elements are found and
/// MixedBackends when the generators are of different kinds.
FiniteGroup closure_from_generators(std::span<const GroupElement> gens,
                                    std::size_t cap = FiniteGroup::kDefaultCap);

/// Conjugacy class of g, sorted by canonical form.
std::vector<std::size_t> conjugacy_class(const FiniteGroup& group, std::size_t g);
std::vector<std::size_t> conjugacy_class(const FiniteGroup& group,
                                         const GroupElement& g);

bool is_central(const FiniteGroup& group, std::size_t n);
bool is_central(const FiniteGroup& group, const GroupElement& n);

std::size_t element_order(const FiniteGroup& group, std::size_t g);
std::size_t element_order(const FiniteGroup& group, const GroupElement& g);

}  // namespace qcover
