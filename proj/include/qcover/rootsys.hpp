#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "qcover/group.hpp"
#include "qcover/linalg.hpp"
#include "qcover/quandle.hpp"

namespace qcover {

/// A[i][j] = <coroot_i, alpha_j>.
struct CartanMatrix {
  std::vector<std::vector<int>> a;

  std::size_t rank() const { return a.size(); }
  int operator()(std::size_t i, std::size_t j) const { return a[i][j]; }
  bool operator==(const CartanMatrix&) const = default;
};

/// Throws InvalidParameter unless A is a symmetrizable crystallographic
/// Cartan matrix (diagonal 2, off-diagonal in {0,-1,-2,-3}, zero pattern
/// symmetric, A_ij A_ji in {0,1,2,3}).
void validate_cartan(const CartanMatrix& m);

/// Bourbaki numbering. Throws InvalidParameter for unknown (type, rank).
CartanMatrix cartan_matrix(char type, std::size_t rank);

bool is_simply_laced(char type, std::size_t rank);

/// Classical order of the Weyl group.
std::uint64_t weyl_order(char type, std::size_t rank);

using RootVector = std::vector<int>;  // coordinates in the simple-root basis

struct RootSystem {
  char type = 'A';
  std::size_t rank = 0;
  CartanMatrix cartan;
  /// Positive roots by height, then coordinates descending (simple roots
  /// first); then the negatives in the same order: roots[k + P] = -roots[k].
  std::vector<RootVector> roots;
  std::size_t positive_count = 0;
  /// Symmetric form (alpha_i, alpha_j) = d_i A_ij with min d_i = 1.
  std::vector<Rational> symmetrizer;

  std::size_t size() const { return roots.size(); }
  bool is_positive(std::size_t k) const { return k < positive_count; }
  std::size_t negative(std::size_t k) const {
    return k < positive_count ? k + positive_count : k - positive_count;
  }
  std::optional<std::size_t> find(const RootVector& v) const;

  Rational form(const RootVector& u, const RootVector& v) const;
  /// <coroot(alpha), beta> = 2 (alpha, beta) / (alpha, alpha).
  Rational pairing(const RootVector& alpha, const RootVector& beta) const;
  /// r_alpha(v) = v - <coroot(alpha), v> alpha.
  RootVector reflect(const RootVector& alpha, const RootVector& v) const;
  /// r_{roots[k]} as a permutation of the root list.
  Permutation reflection(std::size_t k) const;
};

RootSystem build_root_system(char type, std::size_t rank);
RootSystem build_root_system(const CartanMatrix& m, char type = '?');

/// Generated by the simple reflections acting on the root list.
/// Throws CapExceeded above `cap`.
std::shared_ptr<const FiniteGroup> weyl_group(const RootSystem& r,
                                              std::size_t cap = FiniteGroup::kDefaultCap);

/// Reflections r_alpha for positive alpha, ^{r_alpha} r_beta = r_{|r_alpha(beta)|},
/// inv = identity. Carries an embedding into the Weyl group when |W| <= cap.
IPQuandle reflection_quandle(const RootSystem& r, std::size_t cap = FiniteGroup::kDefaultCap);

}  // namespace qcover
