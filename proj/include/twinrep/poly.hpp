#ifndef TWINREP_POLY_HPP
#define TWINREP_POLY_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace twinrep::exact {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Exponent vector indexed by variable id; trailing zeros are trimmed so the
/// representation is unique.
struct Monomial {
  std::vector<uint32_t> exps;

  static Monomial one() { return Monomial{}; }
  bool is_one() const { return exps.empty(); }
  uint32_t deg() const;
  uint32_t exp(size_t var) const { return var < exps.size() ? exps[var] : 0; }
  void set_exp(size_t var, uint32_t e);
  int max_var() const { return static_cast<int>(exps.size()) - 1; }
  void trim();

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;     // this | o
  Monomial divided_by(const Monomial& o) const;  // this / o, assumes divisible
  bool operator==(const Monomial& o) const { return exps == o.exps; }
};

/// Graded-lex order: higher total degree wins, ties broken lexicographically
/// with lower variable ids more significant.
int mono_cmp(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Int coeff;
};

/// Dense-in-terms multivariate polynomial over Z.  Terms are kept sorted in
/// descending graded-lex order with nonzero coefficients, so equal
/// polynomials compare equal term-for-term.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Int c);
  static Poly zero() { return Poly(); }
  static Poly constant(Int c) { return Poly(std::move(c)); }
  static Poly variable(size_t var, uint32_t exp = 1);
  static Poly from_terms(std::vector<Term> terms);  // sorts and merges

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  const Int& constant_value() const;  // requires is_constant; 0 if zero
  bool is_one() const;
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  uint32_t total_deg() const { return terms_.empty() ? 0 : terms_[0].mono.deg(); }
  int max_var() const;
  uint32_t deg_in(size_t var) const;
  bool has_var(size_t var) const { return deg_in(var) > 0; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const;
  Poly pow(uint32_t e) const;
  Poly scaled(const Int& c) const;

  /// gcd of all integer coefficients, nonnegative; 0 for the zero polynomial.
  Int int_content() const;
  /// Sign of the leading coefficient (0 for zero).
  int lc_sign() const;

  /// Substitute 0 for a variable (drops all terms containing it).
  Poly subst_zero(size_t var) const;
  /// Coefficient of var^k, as a polynomial in the remaining variables.
  Poly coeff_wrt(size_t var, uint32_t k) const;
  /// Evaluate at rational values, one per variable id (vector may be longer
  /// than needed).
  Rat eval(const std::vector<Rat>& values) const;

  /// Exact division; nullopt when the division is not exact over Z.
  static std::optional<Poly> exact_div(const Poly& num, const Poly& den);
  /// Polynomial square root with positive leading coefficient, when exact.
  static std::optional<Poly> sqrt(const Poly& p);
  /// Polynomial gcd over Z (primitive PRS), sign-normalized so the leading
  /// coefficient is positive.  gcd(0,0) = 0.
  static Poly gcd(const Poly& a, const Poly& b);

 private:
  std::vector<Term> terms_;
};

}  // namespace twinrep::exact

#endif
