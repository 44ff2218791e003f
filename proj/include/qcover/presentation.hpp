#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qcover/group.hpp"
#include "qcover/linalg.hpp"
#include "qcover/quandle.hpp"

namespace qcover {

/// Letter +(g+1) is generator g, -(g+1) its formal inverse.
using Letter = std::int32_t;
using Word = std::vector<Letter>;

inline Letter gen_letter(std::uint32_t g) { return static_cast<Letter>(g) + 1; }
inline Letter inv_letter(std::uint32_t g) { return -(static_cast<Letter>(g) + 1); }
inline std::uint32_t letter_generator(Letter l) {
  return static_cast<std::uint32_t>((l > 0 ? l : -l) - 1);
}

Word free_reduce(Word w);
Word inverse_word(const Word& w);

struct Presentation {
  std::size_t generators = 0;
  std::vector<Word> relators;
  std::vector<std::string> names;  // one per generator; may be empty

  std::string format(const Word& w) const;
};

/// Generators are the quandle elements; relators are ^a b . a . b^-1 . a^-1
/// for every ordered pair and a . inv(a) for every a, freely reduced, with
/// repeats (up to cyclic rotation and inversion) dropped in first-seen order.
Presentation presentation_from_quandle(const IPQuandle& q);

/// Completed coset table over the trivial subgroup. Coset 0 is the identity.
struct CosetTable {
  std::size_t cosets = 0;
  std::size_t columns = 0;
  std::vector<std::uint32_t> table;           // cosets x columns
  std::vector<std::uint32_t> column_inverse;  // column of the inverse letter
  std::vector<std::uint32_t> generator_column;  // column of letter +(g+1)
  std::vector<std::uint32_t> inverse_generator_column;  // column of -(g+1)
  std::size_t high_water = 0;

  std::uint32_t act(std::uint32_t coset, std::uint32_t column) const {
    return table[coset * columns + column];
  }
  std::uint32_t column_of(Letter l) const {
    return l > 0 ? generator_column[letter_generator(l)]
                 : inverse_generator_column[letter_generator(l)];
  }
  std::uint32_t trace(std::uint32_t coset, const Word& w) const;
};

struct EnumerationExceeded {
  std::size_t high_water = 0;
};

using EnumerationResult = std::variant<CosetTable, EnumerationExceeded>;

/// HLT coset enumeration over the trivial subgroup. A generator g shares
/// its column with g^-1 when g.g is a relator.
EnumerationResult todd_coxeter(const Presentation& p, std::size_t max_cosets);

/// The group presented by `p`, realized as its regular permutation action.
struct Realization {
  CosetTable table;
  std::shared_ptr<const FiniteGroup> group;  // coset-backed
  std::vector<std::size_t> generator_elements;  // image of each generator
  std::vector<std::size_t> coset_element;  // coset index -> group index

  std::size_t order() const { return table.cosets; }
  /// Generator images pairwise distinct and different from the identity.
  bool embeddable() const;
};

Realization group_from_coset_table(const CosetTable& table, std::size_t generators);

/// Enumerates G_C for `q`; nullopt when `max_cosets` is hit.
std::optional<Realization> realize(const IPQuandle& q, std::size_t max_cosets,
                                   std::size_t* high_water = nullptr);

struct CoverReport {
  std::size_t order_gc = 0;
  std::size_t order_g = 0;
  std::size_t kernel_order = 0;
  bool kernel_central = false;
  bool embeddable = false;
  bool is_covering = false;

  Realization realization;
  std::vector<std::size_t> projection;  // realization element -> G element
  std::vector<std::size_t> kernel;      // realization elements mapping to e
};

/// Analyzes pi: G_C -> G for a conjugation quandle. Throws
/// EnumerationIncomplete when G_C does not fit in `max_cosets`.
CoverReport covering_analysis(const IPQuandle& q,
                              std::size_t max_cosets = FiniteGroup::kDefaultCap);

struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors >= 2, each dividing the next

  bool operator==(const AbelianInvariants&) const = default;
};

IntMatrix relator_exponent_matrix(const Presentation& p);
AbelianInvariants abelianization(const Presentation& p);

/// One rewrite: `removed` at `position` of the previous word replaced by
/// `inserted`, giving `word`. `relator` is false for free insert/delete.
struct ProofStep {
  Word word;
  std::size_t position = 0;
  Word removed;
  Word inserted;
  bool relator = false;

  std::string describe(const Presentation& p) const;
};

/// Bidirectional breadth-first search for a derivation w1 = w2 using at most
/// `depth` moves. Moves: insert or delete an adjacent pair x x^-1; replace a
/// subword u by v where u v^-1 is a cyclic rotation of a relator or of its
/// inverse (u or v may be empty). Words longer than `max_length` are not
/// explored; 0 picks max(|w1|, |w2|) + 2 + longest relator.
/// Returns the chain starting at w1 and ending at w2, or nullopt (inconclusive).
std::optional<std::vector<ProofStep>> prove_equal_bounded(const Presentation& p,
                                                          const Word& w1, const Word& w2,
                                                          std::size_t depth,
                                                          std::size_t max_length = 0);

/// a . b^-1 . a == b^-1 . a . b^-1 in the realization of G_C.
bool braid_check(const Realization& r, std::uint32_t a, std::uint32_t b);

class NotQuandleMap : public Error {
 public:
  NotQuandleMap(std::uint32_t a, std::uint32_t b)
      : Error("map does not respect the quandle structure at (" + std::to_string(a) + "," +
              std::to_string(b) + ")"),
        a_(a),
        b_(b) {}
  std::uint32_t a() const { return a_; }
  std::uint32_t b() const { return b_; }

 private:
  std::uint32_t a_, b_;
};

class SectionFails : public Error {
 public:
  explicit SectionFails(std::uint32_t a)
      : Error("phi o j differs from the inclusion at element " + std::to_string(a)), a_(a) {}
  std::uint32_t a() const { return a_; }

 private:
  std::uint32_t a_;
};

/// Generator images of the homomorphism G_C -> H induced by a quandle map
/// j: C -> H \ {e} with phi o j = inclusion. `phi` maps H indices to indices
/// of q's embedding group. Throws NotQuandleMap or SectionFails.
std::vector<std::size_t> induced_hom(const IPQuandle& q, const FiniteGroup& h,
                                     const std::vector<std::size_t>& j,
                                     const std::vector<std::size_t>& phi);

}  // namespace qcover
