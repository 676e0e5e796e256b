#include "twinrep/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace twinrep::exact {

uint32_t Monomial::deg() const {
  uint32_t d = 0;
  for (uint32_t e : exps) d += e;
  return d;
}

void Monomial::set_exp(size_t var, uint32_t e) {
  if (var >= exps.size()) {
    if (e == 0) return;
    exps.resize(var + 1, 0);
  }
  exps[var] = e;
  trim();
}

void Monomial::trim() {
  while (!exps.empty() && exps.back() == 0) exps.pop_back();
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.exps.resize(std::max(exps.size(), o.exps.size()), 0);
  for (size_t i = 0; i < r.exps.size(); i++) r.exps[i] = exp(i) + o.exp(i);
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (size_t i = 0; i < exps.size(); i++)
    if (exps[i] > o.exp(i)) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
  Monomial r;
  r.exps.resize(exps.size(), 0);
  for (size_t i = 0; i < exps.size(); i++) r.exps[i] = exps[i] - o.exp(i);
  r.trim();
  return r;
}

int mono_cmp(const Monomial& a, const Monomial& b) {
  uint32_t da = a.deg(), db = b.deg();
  if (da != db) return da < db ? -1 : 1;
  size_t n = std::max(a.exps.size(), b.exps.size());
  for (size_t i = 0; i < n; i++) {
    uint32_t ea = a.exp(i), eb = b.exp(i);
    if (ea != eb) return ea < eb ? -1 : 1;
  }
  return 0;
}

namespace {
struct MonoGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return mono_cmp(a, b) > 0; }
};
}  // namespace

Poly::Poly(Int c) {
  if (c != 0) terms_.push_back(Term{Monomial::one(), std::move(c)});
}

Poly Poly::variable(size_t var, uint32_t exp) {
  if (exp == 0) return Poly(Int(1));
  Monomial m;
  m.set_exp(var, exp);
  Poly p;
  p.terms_.push_back(Term{std::move(m), Int(1)});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::map<Monomial, Int, MonoGreater> acc;
  for (auto& t : terms) {
    if (t.coeff == 0) continue;
    acc[t.mono] += t.coeff;
  }
  Poly p;
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back(Term{m, c});
  return p;
}

const Int& Poly::constant_value() const {
  static const Int kZero = 0;
  if (terms_.empty()) return kZero;
  return terms_[0].coeff;
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

int Poly::max_var() const {
  int mv = -1;
  for (const auto& t : terms_) mv = std::max(mv, t.mono.max_var());
  return mv;
}

uint32_t Poly::deg_in(size_t var) const {
  uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exp(var));
  return d;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size()) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size()) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      int c = mono_cmp(terms_[i].mono, o.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back(o.terms_[j++]);
      } else {
        Int s = terms_[i].coeff + o.terms_[j].coeff;
        if (s != 0) r.terms_.push_back(Term{terms_[i].mono, std::move(s)});
        i++;
        j++;
      }
    }
  }
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::map<Monomial, Int, MonoGreater> acc;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) acc[a.mono * b.mono] += a.coeff * b.coeff;
  Poly r;
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.push_back(Term{m, c});
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); i++)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

Poly Poly::pow(uint32_t e) const {
  Poly r(Int(1));
  for (uint32_t i = 0; i < e; i++) r = r * *this;
  return r;
}

Poly Poly::scaled(const Int& c) const {
  if (c == 0) return Poly();
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Int Poly::int_content() const {
  Int g = 0;
  for (const auto& t : terms_) {
    g = boost::multiprecision::gcd(g, t.coeff);
    if (g == 1) break;
  }
  return g < 0 ? Int(-g) : g;
}

int Poly::lc_sign() const {
  if (terms_.empty()) return 0;
  return terms_[0].coeff < 0 ? -1 : 1;
}

Poly Poly::subst_zero(size_t var) const {
  Poly r;
  for (const auto& t : terms_)
    if (t.mono.exp(var) == 0) r.terms_.push_back(t);
  return r;
}

Poly Poly::coeff_wrt(size_t var, uint32_t k) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono.exp(var) != k) continue;
    Term u = t;
    u.mono.set_exp(var, 0);
    out.push_back(std::move(u));
  }
  return Poly::from_terms(std::move(out));
}

Rat Poly::eval(const std::vector<Rat>& values) const {
  Rat acc = 0;
  for (const auto& t : terms_) {
    Rat v(t.coeff);
    for (size_t i = 0; i < t.mono.exps.size(); i++) {
      uint32_t e = t.mono.exps[i];
      if (e == 0) continue;
      if (i >= values.size()) throw std::logic_error("poly eval: missing value for variable");
      Rat base = values[i];
      for (uint32_t j = 0; j < e; j++) v *= base;
    }
    acc += v;
  }
  return acc;
}

std::optional<Poly> Poly::exact_div(const Poly& num, const Poly& den) {
  if (den.is_zero()) return std::nullopt;
  Poly rem = num;
  std::vector<Term> q;
  while (!rem.is_zero()) {
    const Term& lr = rem.leading();
    const Term& ld = den.leading();
    if (!ld.mono.divides(lr.mono)) return std::nullopt;
    if (lr.coeff % ld.coeff != 0) return std::nullopt;
    Term t{lr.mono.divided_by(ld.mono), lr.coeff / ld.coeff};
    Poly tp;
    tp.terms_.push_back(t);
    rem = rem - tp * den;
    q.push_back(std::move(t));
  }
  return Poly::from_terms(std::move(q));
}

std::optional<Poly> Poly::sqrt(const Poly& p) {
  if (p.is_zero()) return Poly();
  const Term& lead = p.leading();
  if (lead.coeff < 0) return std::nullopt;
  Int rc = boost::multiprecision::sqrt(lead.coeff);
  if (rc * rc != lead.coeff) return std::nullopt;
  Monomial rm;
  for (size_t v = 0; v < lead.mono.exps.size(); v++) {
    if (lead.mono.exps[v] % 2 != 0) return std::nullopt;
    rm.set_exp(v, lead.mono.exps[v] / 2);
  }
  Poly q = Poly::from_terms({Term{rm, rc}});
  Poly two_t = q.scaled(Int(2));
  Poly rem = p - q * q;
  // peel terms greedily: next term of the root is lt(rem) / (2 * lt(root))
  while (!rem.is_zero()) {
    const Term& lr = rem.leading();
    const Term& ld = two_t.leading();
    if (!ld.mono.divides(lr.mono) || lr.coeff % ld.coeff != 0) return std::nullopt;
    Poly u = Poly::from_terms({Term{lr.mono.divided_by(ld.mono), lr.coeff / ld.coeff}});
    Poly qn = q + u;
    Poly remn = p - qn * qn;
    if (!remn.is_zero() && mono_cmp(remn.leading().mono, lr.mono) >= 0) return std::nullopt;
    q = std::move(qn);
    rem = std::move(remn);
  }
  return q;
}

namespace {

// Univariate view in one variable with Poly coefficients, index = degree.
std::vector<Poly> uni_coeffs(const Poly& p, size_t var) {
  std::vector<Poly> c(p.deg_in(var) + 1);
  for (uint32_t k = 0; k <= p.deg_in(var); k++) c[k] = p.coeff_wrt(var, k);
  return c;
}

Poly uni_build(const std::vector<Poly>& c, size_t var) {
  Poly r;
  for (size_t k = 0; k < c.size(); k++) r = r + c[k] * Poly::variable(var, static_cast<uint32_t>(k));
  return r;
}

void uni_trim(std::vector<Poly>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// Pseudo-remainder of A by B in the given variable (both with deg >= 1 in it).
Poly prem(const Poly& a, const Poly& b, size_t var) {
  auto A = uni_coeffs(a, var);
  auto B = uni_coeffs(b, var);
  uni_trim(A);
  uni_trim(B);
  const Poly& lb = B.back();
  size_t db = B.size() - 1;
  while (A.size() > db && !A.empty()) {
    Poly la = A.back();
    size_t k = A.size() - 1 - db;
    std::vector<Poly> next(A.size() - 1);
    for (size_t i = 0; i + 1 < A.size(); i++) {
      next[i] = lb * A[i];
      if (i >= k) next[i] = next[i] - la * B[i - k];
    }
    A = std::move(next);
    uni_trim(A);
  }
  return uni_build(A, var);
}

// gcd of the univariate coefficients (the content w.r.t. var).
Poly content_wrt(const Poly& p, size_t var) {
  Poly c;
  for (uint32_t k = 0; k <= p.deg_in(var); k++) c = Poly::gcd(c, p.coeff_wrt(var, k));
  return c;
}

Poly sign_normalized(Poly p) {
  if (p.lc_sign() < 0) return -p;
  return p;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return sign_normalized(b);
  if (b.is_zero()) return sign_normalized(a);
  if (a.is_constant() || b.is_constant())
    return Poly::constant(boost::multiprecision::gcd(a.int_content(), b.int_content()));
  size_t var = static_cast<size_t>(std::max(a.max_var(), b.max_var()));
  if (!a.has_var(var)) return Poly::gcd(a, content_wrt(b, var));
  if (!b.has_var(var)) return Poly::gcd(content_wrt(a, var), b);

  Poly ca = content_wrt(a, var);
  Poly cb = content_wrt(b, var);
  Poly cont = Poly::gcd(ca, cb);
  Poly A = *exact_div(a, ca);
  Poly B = *exact_div(b, cb);
  if (A.deg_in(var) < B.deg_in(var)) std::swap(A, B);
  // Primitive PRS; sizes here are tiny so the extra contents are cheap.
  Poly g;
  for (;;) {
    Poly r = prem(A, B, var);
    if (r.is_zero()) {
      g = B;
      break;
    }
    if (r.deg_in(var) == 0) {
      g = Poly(Int(1));
      break;
    }
    A = B;
    B = *exact_div(r, content_wrt(r, var));
  }
  if (!g.is_constant()) g = *exact_div(g, content_wrt(g, var));
  return sign_normalized(cont * g);
}

}  // namespace twinrep::exact
