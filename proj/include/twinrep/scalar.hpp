#ifndef TWINREP_SCALAR_HPP
#define TWINREP_SCALAR_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twinrep/poly.hpp"

namespace twinrep::exact {

class RingContext;
using Ctx = std::shared_ptr<const RingContext>;

/// Variable registry for one working ring: ordinary parameters plus adjoined
/// square-root symbols r with a defining relation r^2 = radicand, where the
/// radicand is a polynomial in the parameters.  Contexts are immutable;
/// adjoin/specialize return extended copies.  A context B "extends" A when
/// A's variables are a prefix of B's, and scalars lift from A to B.
class RingContext : public std::enable_shared_from_this<RingContext> {
 public:
  struct Var {
    std::string name;
    bool radical = false;
    Poly radicand;  // meaningful for radicals only
  };

  static Ctx make(const std::vector<std::string>& params);

  Ctx adjoin_radical(const std::string& name, const class Scalar& radicand) const;
  /// Full specialization: every parameter gets a rational value.  Every
  /// radicand must evaluate to a perfect rational square (the radical then
  /// takes the nonnegative root); otherwise the specialization is rejected.
  Ctx specialized(const std::map<std::string, Rat>& values) const;

  size_t size() const { return vars_.size(); }
  const Var& var(size_t i) const { return vars_[i]; }
  std::optional<size_t> find(const std::string& name) const;
  bool is_specialized() const { return static_cast<bool>(spec_); }
  const std::vector<Rat>& spec_values() const { return *spec_; }

  bool extends(const RingContext& base) const;

 private:
  std::vector<Var> vars_;
  std::optional<std::vector<Rat>> spec_;  // one value per var, radicals included
};

/// Returns the nonnegative rational square root when it exists.
std::optional<Rat> rational_sqrt(const Rat& q);

/// Element of Q(params)[radicals] / (r^2 = radicand), kept as a reduced
/// fraction num/den of integer polynomials.  Invariants: radicals appear with
/// exponent at most 1, the denominator is radical-free with positive leading
/// coefficient, and gcd(num, den) = 1 — so equal ring elements have identical
/// representations.
class Scalar {
 public:
  Scalar() = default;  // zero, context-free constant
  static Scalar integer(long long v);
  static Scalar rational(const Rat& v);
  static Scalar param(const Ctx& ctx, const std::string& name);
  static Scalar var(const Ctx& ctx, size_t index);
  static Scalar from_fraction(Ctx ctx, Poly num, Poly den);

  const Ctx& ctx() const { return ctx_; }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool has_radical() const;
  /// Value of a constant scalar.
  Rat rational_value() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on non-invertible divisor
  Scalar operator-() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  Scalar pow(int e) const;
  /// Multiplicative inverse; throws twinrep::Error when the element is zero
  /// or a zero divisor.
  Scalar inverse() const;

  /// Evaluate under a fully specialized context (context vars must match).
  Rat eval(const Ctx& spec_ctx) const;
  /// Constant scalar carrying the evaluated value, homed in spec_ctx.
  Scalar specialize(const Ctx& spec_ctx) const;
  /// Substitute scalars for variables (by name); unlisted variables map to
  /// the same-named variable of target.  Radicals may be remapped too.
  Scalar substituted(const std::map<std::string, Scalar>& values, const Ctx& target) const;

  /// sqrt(this) as c or c*r for rational c and an adjoined radical r, when
  /// such a form exists; nullopt otherwise.
  std::optional<Scalar> sqrt() const;

  /// Total order for deterministic sorting (not algebraically meaningful).
  static int cmp(const Scalar& a, const Scalar& b);

 private:
  Ctx ctx_;  // null for pure rational constants
  Poly num_ = Poly::zero();
  Poly den_ = Poly::constant(Int(1));

  void canonicalize();
  void rationalize_den();
  static void unify(Scalar& a, Scalar& b);
  friend Poly reduce_radicals(Poly p, const Ctx& ctx);
};

/// Reduce radical exponents by r^2 -> radicand until all are at most 1.
Poly reduce_radicals(Poly p, const Ctx& ctx);

/// Re-home a scalar into any context that carries all the variables it
/// actually uses, matched by position and name.
Scalar rehome(const Scalar& s, const Ctx& target);

}  // namespace twinrep::exact

#endif
