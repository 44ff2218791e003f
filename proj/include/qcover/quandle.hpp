#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcover/group.hpp"

namespace qcover {

/// Where a conjugation quandle lives: element k of the quandle is
/// `group->element(elements[k])`.
struct Embedding {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<std::size_t> elements;
};

/// Finite left IP quandle stored as a dense table, act(a, b) = ^a b.
///
/// Construction only checks shapes and index ranges (MalformedTable); the
/// axioms themselves are the business of verify_ip.
class IPQuandle {
 public:
  IPQuandle() = default;
  IPQuandle(std::vector<std::vector<std::uint32_t>> op, std::vector<std::uint32_t> inv,
            std::vector<std::string> names = {});

  std::size_t size() const { return inv_.size(); }
  std::uint32_t act(std::uint32_t a, std::uint32_t b) const { return op_[a * size() + b]; }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }

  /// Element names; generated as "q0", "q1", ... when none were supplied.
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::uint32_t a) const { return names_[a]; }
  bool has_custom_names() const { return custom_names_; }

  std::vector<std::vector<std::uint32_t>> rows() const;
  const std::vector<std::uint32_t>& inversion() const { return inv_; }

  const std::optional<Embedding>& embedding() const { return embedding_; }
  void set_embedding(Embedding e);

  bool operator==(const IPQuandle& rhs) const {
    return op_ == rhs.op_ && inv_ == rhs.inv_;
  }

 private:
  std::vector<std::uint32_t> op_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::string> names_;
  bool custom_names_ = false;
  std::optional<Embedding> embedding_;
};

/// Right IP quandle, act(a, b) = a^b.
class RightQuandle {
 public:
  RightQuandle(std::vector<std::uint32_t> table, std::vector<std::uint32_t> inv)
      : table_(std::move(table)), inv_(std::move(inv)) {}

  std::size_t size() const { return inv_.size(); }
  std::uint32_t act(std::uint32_t a, std::uint32_t b) const {
    return table_[a * size() + b];
  }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }

  bool operator==(const RightQuandle&) const = default;

 private:
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inv_;
};

struct AxiomCheck {
  bool holds = true;
  /// First failing index tuple in lexicographic order.
  std::vector<std::uint32_t> counterexample;
};

struct AxiomReport {
  AxiomCheck bijective_rows;   // each ^a(.) is a permutation; witness {a}
  AxiomCheck rack;             // ^a(^b c) = ^(^a b)(^a c); witness {a,b,c}
  AxiomCheck idempotent;       // ^a a = a
  AxiomCheck involution;       // (a^-1)^-1 = a
  AxiomCheck inverse_compatible;  // ^a(b^-1) = (^a b)^-1
  AxiomCheck cancellation;     // ^(a^-1)(^a b) = b
  AxiomCheck derived_fixed_point;  // ^(a^-1) a = a, a consequence of the others

  bool rack_ok() const { return bijective_rows.holds && rack.holds; }
  bool quandle_ok() const { return rack_ok() && idempotent.holds; }
  bool ip_ok() const {
    return involution.holds && inverse_compatible.holds && cancellation.holds;
  }
  bool all_ok() const { return quandle_ok() && ip_ok() && derived_fixed_point.holds; }
};

AxiomReport verify_ip(const IPQuandle& q);

/// Conjugation quandle ^a b = a b a^-1 on `elements` (kept in the given
/// order). Throws PreconditionFailed with kind ContainsIdentity, NotAdStable,
/// NotInversionStable, NotGenerating or Duplicate.
IPQuandle conjugation_quandle(std::shared_ptr<const FiniteGroup> group,
                              std::vector<std::size_t> elements,
                              std::vector<std::string> names = {});

bool mutually_skew(const IPQuandle& q, std::uint32_t a, std::uint32_t b);
bool mutually_skew(const RightQuandle& q, std::uint32_t a, std::uint32_t b);

struct SkewAnalysis {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // a < b
  std::vector<std::uint32_t> component;  // component label per element
  std::size_t components = 0;
  bool is_skew = false;
  bool is_locally_skew = false;
};

/// Throws InvalidParameter on the empty quandle.
SkewAnalysis skew_analysis(const IPQuandle& q);

struct BraidConditions {
  bool skew;                  // (1) ^a b = (^b a)^-1
  bool conjugate_back;        // (2) ^(b^-1)(^a(b^-1)) = a
  bool conjugate_by_image;    // (3) ^(^(b^-1) a)(b^-1) = a
  bool inverses_skew;         // (5) a^-1, b^-1 mutually skew
  /// ^(^b a)(a^-1) = b, evaluated only when (1) holds.
  std::optional<bool> skew_ip_identity;

  bool all_equal() const {
    return skew == conjugate_back && skew == conjugate_by_image &&
           skew == inverses_skew;
  }
};

BraidConditions braid_conditions(const IPQuandle& q, std::uint32_t a, std::uint32_t b);

/// a^b = (^(b^-1)(a^-1))^-1.
RightQuandle to_right_quandle(const IPQuandle& q);
/// ^a b = ((b^-1)^(a^-1))^-1, the inverse of to_right_quandle.
IPQuandle to_left_quandle(const RightQuandle& q);

/// First failing right axiom, or nullopt when (a^b)^c = (a^c)^(b^c),
/// a^a = a, (a^-1)^b = (a^b)^-1 and (a^b)^(b^-1) = a all hold.
std::optional<std::string> verify_right_ip(const RightQuandle& q);

bool is_trivial_quandle(const IPQuandle& q);

}  // namespace qcover
