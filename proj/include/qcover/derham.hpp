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

class NotInC : public Error {
 public:
  explicit NotInC(std::uint32_t a) : Error("label " + std::to_string(a) + " is not in C") {}
};

/// Bicovariant calculus on G from a conjugation quandle C, in right form:
/// a^b = b^-1 a b, basis 1-forms omega_a, a in C.
class Calculus {
 public:
  /// Needs q's embedding; throws InvalidParameter otherwise.
  explicit Calculus(const IPQuandle& q);

  const FiniteGroup& group() const { return *group_; }
  const IPQuandle& quandle() const { return quandle_; }
  std::size_t labels() const { return labels_; }
  std::size_t points() const { return points_; }
  std::size_t unknowns() const { return labels_ * points_; }
  std::size_t index(std::uint32_t a, std::size_t x) const { return a * points_ + x; }

  std::size_t element(std::uint32_t a) const { return elements_[a]; }
  /// x * a in G.
  std::size_t right(std::size_t x, std::uint32_t a) const { return right_[a * points_ + x]; }
  std::uint32_t inv(std::uint32_t a) const { return quandle_.inv(a); }
  /// a^b = b^-1 a b.
  std::uint32_t rconj(std::uint32_t a, std::uint32_t b) const { return right_form_.act(a, b); }
  const RightQuandle& right_form() const { return right_form_; }

 private:
  IPQuandle quandle_;
  std::shared_ptr<const FiniteGroup> group_;
  std::size_t labels_ = 0;
  std::size_t points_ = 0;
  std::vector<std::size_t> elements_;
  std::vector<std::size_t> right_;
  RightQuandle right_form_;
};

using Function = std::vector<Rational>;  // indexed by group element

/// sum_a c_a omega_a; coefficient c_a(x) at index a * |G| + x.
struct OneForm {
  std::size_t labels = 0;
  std::size_t points = 0;
  std::vector<Rational> c;

  OneForm() = default;
  explicit OneForm(const Calculus& cal)
      : labels(cal.labels()), points(cal.points()), c(cal.unknowns(), 0) {}

  Rational& operator()(std::uint32_t a, std::size_t x) { return c[a * points + x]; }
  const Rational& operator()(std::uint32_t a, std::size_t x) const { return c[a * points + x]; }

  OneForm operator+(const OneForm& rhs) const;
  OneForm operator-(const OneForm& rhs) const;
  OneForm operator*(const Rational& k) const;
  bool operator==(const OneForm&) const = default;
  bool is_zero() const;
};

/// (partial^a f)(x) = f(xa) - f(x).
Function partial(const Calculus& cal, std::uint32_t a, const Function& f);
Function delta(const Calculus& cal, std::size_t y);

OneForm d0(const Calculus& cal, const Function& f);
OneForm theta(const Calculus& cal);
/// (theta f - f theta)_a = R_a f - f.
OneForm inner_commutator(const Calculus& cal, const Function& f);

/// c_{a^b}(xb) + c_b(x) = c_b(xa) + c_a(x) for all a, b in C, x in G.
bool is_closed(const Calculus& cal, const OneForm& w);

/// Coefficients t_{a,b}(x) of sum f omega_a (x) omega_b, index (a |C| + b) |G| + x.
struct Tensor2 {
  std::size_t labels = 0;
  std::size_t points = 0;
  std::vector<Rational> t;

  Rational& operator()(std::uint32_t a, std::uint32_t b, std::size_t x) {
    return t[(a * labels + b) * points + x];
  }
  const Rational& operator()(std::uint32_t a, std::uint32_t b, std::size_t x) const {
    return t[(a * labels + b) * points + x];
  }
  bool operator==(const Tensor2&) const = default;
};

/// omega_a (x) omega_b -> omega_{a b a^-1} (x) omega_a, left k(G)-linear.
Tensor2 psi_tilde(const Calculus& cal, const Tensor2& t);
/// Degree-2 tensor of theta w + w theta, whose class is dw.
Tensor2 d_tensor(const Calculus& cal, const OneForm& w);
/// Closedness as dw in ker(id - psi_tilde).
bool is_closed_via_braiding(const Calculus& cal, const OneForm& w);

/// (a, b) -> (^a b, a) satisfies the braid relation on label triples; first
/// failing triple otherwise.
std::optional<std::vector<std::uint32_t>> psi_braid_failure(const IPQuandle& q);

/// f with d0(f) = w and f(e) = 0, or nullopt. Throws NotClosed.
std::optional<Function> is_exact(const Calculus& cal, const OneForm& w);

struct DInvariants {
  std::vector<Rational> d;  // d_a(x) at a * |G| + x
  bool constant = false;
  std::optional<Rational> lambda;

  const Rational& operator()(std::uint32_t a, std::size_t x, std::size_t points) const {
    return d[a * points + x];
  }
};

/// d_a(x) = c_a(x) + c_{a^-1}(xa). Throws NotClosed.
DInvariants d_invariants(const Calculus& cal, const OneForm& w);

struct H1Result {
  std::size_t dim_closed = 0;
  std::size_t dim_exact = 0;
  std::size_t dim_h1 = 0;
  /// Representatives reduced modulo exact forms, integer coefficients with
  /// content 1; theta first when its class is nonzero.
  std::vector<OneForm> basis;
  bool theta_class_independent = false;
};

/// Basis of the closed forms over Q (nullspace of the closedness system).
std::vector<OneForm> closed_forms(const Calculus& cal);

H1Result h1(const Calculus& cal);

/// Dimensions only, over Z/p. Throws InvalidParameter for p = 2 or p not
/// an odd prime.
H1Result h1_mod_p(const Calculus& cal, std::uint32_t p);

}  // namespace qcover
