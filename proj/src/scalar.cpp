#include "twinrep/scalar.hpp"

#include <algorithm>

#include "twinrep/error.hpp"

namespace twinrep::exact {

// ---------------------------------------------------------------- contexts

Ctx RingContext::make(const std::vector<std::string>& params) {
  auto ctx = std::make_shared<RingContext>();
  for (const auto& p : params) {
    if (ctx->find(p)) throw Error("duplicate parameter name: " + p);
    ctx->vars_.push_back(Var{p, false, Poly()});
  }
  return ctx;
}

std::optional<size_t> RingContext::find(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); i++)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

Ctx RingContext::adjoin_radical(const std::string& name, const Scalar& radicand) const {
  if (spec_) throw Error("cannot adjoin a radical to a specialized context");
  if (find(name)) throw Error("duplicate radical name: " + name);
  if (!radicand.is_polynomial()) throw Error("radicand must be a polynomial in the parameters");
  if (radicand.has_radical()) throw Error("radicand must be radical-free");
  if (radicand.ctx() && !extends(*radicand.ctx()))
    throw Error("radicand references unknown parameters");
  auto ctx = std::make_shared<RingContext>(*this);
  ctx->vars_.push_back(Var{name, true, radicand.num()});
  return ctx;
}

Ctx RingContext::specialized(const std::map<std::string, Rat>& values) const {
  if (spec_) throw Error("context is already specialized");
  for (const auto& [k, v] : values) {
    auto i = find(k);
    if (!i) throw Error("specialization names unknown parameter: " + k);
    if (vars_[*i].radical) throw Error("cannot specialize radical directly: " + k);
  }
  auto ctx = std::make_shared<RingContext>(*this);
  std::vector<Rat> vals(vars_.size());
  for (size_t i = 0; i < vars_.size(); i++) {
    const Var& v = vars_[i];
    if (v.radical) {
      Rat q = v.radicand.eval(vals);  // radicands use earlier vars only
      auto root = rational_sqrt(q);
      if (!root)
        throw Error("inadmissible specialization: radicand of " + v.name +
                    " is not a perfect rational square");
      vals[i] = *root;
    } else {
      auto it = values.find(v.name);
      if (it == values.end()) throw Error("specialization must assign every parameter: " + v.name);
      vals[i] = it->second;
    }
  }
  ctx->spec_ = std::move(vals);
  return ctx;
}

bool RingContext::extends(const RingContext& base) const {
  if (base.spec_ && !(spec_ && *spec_ == *base.spec_ && vars_.size() == base.vars_.size()))
    return false;
  if (base.vars_.size() > vars_.size()) return false;
  for (size_t i = 0; i < base.vars_.size(); i++) {
    const Var& a = vars_[i];
    const Var& b = base.vars_[i];
    if (a.name != b.name || a.radical != b.radical || !(a.radicand == b.radicand)) return false;
  }
  return true;
}

std::optional<Rat> rational_sqrt(const Rat& q) {
  if (q < 0) return std::nullopt;
  Int n = numerator(q), d = denominator(q);
  Int rn = boost::multiprecision::sqrt(n);
  Int rd = boost::multiprecision::sqrt(d);
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return Rat(rn, rd);
}

// ----------------------------------------------------------------- scalars

Poly reduce_radicals(Poly p, const Ctx& ctx) {
  if (!ctx) return p;
  for (;;) {
    bool changed = false;
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
      bool hit = false;
      for (size_t v = 0; v < ctx->size() && !hit; v++) {
        if (!ctx->var(v).radical) continue;
        uint32_t e = t.mono.exp(v);
        if (e < 2) continue;
        Monomial m = t.mono;
        m.set_exp(v, e % 2);
        Poly piece = Poly::from_terms({Term{m, t.coeff}});
        for (uint32_t j = 0; j < e / 2; j++) piece = piece * ctx->var(v).radicand;
        for (const auto& u : piece.terms()) out.push_back(u);
        hit = true;
        changed = true;
      }
      if (!hit) out.push_back(t);
    }
    p = Poly::from_terms(std::move(out));
    if (!changed) return p;
  }
}

namespace {
bool poly_has_radical(const Poly& p, const Ctx& ctx) {
  if (!ctx) return false;
  for (size_t v = 0; v < ctx->size(); v++)
    if (ctx->var(v).radical && p.has_var(v)) return true;
  return false;
}

int poly_cmp(const Poly& a, const Poly& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (size_t i = 0; i < std::min(ta.size(), tb.size()); i++) {
    int c = mono_cmp(ta[i].mono, tb[i].mono);
    if (c != 0) return c;
    if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff ? -1 : 1;
  }
  if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
  return 0;
}
}  // namespace

bool Scalar::has_radical() const {
  return poly_has_radical(num_, ctx_) || poly_has_radical(den_, ctx_);
}

Scalar Scalar::integer(long long v) {
  Scalar s;
  s.num_ = Poly::constant(Int(v));
  return s;
}

Scalar Scalar::rational(const Rat& v) {
  Scalar s;
  s.num_ = Poly::constant(numerator(v));
  s.den_ = Poly::constant(denominator(v));
  s.canonicalize();
  return s;
}

Scalar Scalar::param(const Ctx& ctx, const std::string& name) {
  auto i = ctx->find(name);
  if (!i) throw Error("unknown parameter: " + name);
  return var(ctx, *i);
}

Scalar Scalar::var(const Ctx& ctx, size_t index) {
  Scalar s;
  s.ctx_ = ctx;
  s.num_ = Poly::variable(index);
  return s;
}

Scalar Scalar::from_fraction(Ctx ctx, Poly num, Poly den) {
  if (den.is_zero()) throw Error("zero denominator");
  Scalar s;
  s.ctx_ = std::move(ctx);
  s.num_ = reduce_radicals(std::move(num), s.ctx_);
  s.den_ = reduce_radicals(std::move(den), s.ctx_);
  s.rationalize_den();
  s.canonicalize();
  return s;
}

void Scalar::rationalize_den() {
  if (!ctx_) return;
  for (;;) {
    std::optional<size_t> rad;
    for (size_t v = 0; v < ctx_->size(); v++)
      if (ctx_->var(v).radical && den_.has_var(v)) {
        rad = v;
        break;
      }
    if (!rad) return;
    // den = A + B r; multiply through by A - B r.
    Poly a = den_.coeff_wrt(*rad, 0);
    Poly b = den_.coeff_wrt(*rad, 1);
    Poly conj = a - b * Poly::variable(*rad);
    num_ = reduce_radicals(num_ * conj, ctx_);
    den_ = reduce_radicals(a * a - b * b * ctx_->var(*rad).radicand, ctx_);
    if (den_.is_zero()) throw Error("division by a zero divisor");
  }
}

void Scalar::canonicalize() {
  num_ = reduce_radicals(std::move(num_), ctx_);
  if (num_.is_zero()) {
    den_ = Poly::constant(Int(1));
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = *Poly::exact_div(num_, g);
    den_ = *Poly::exact_div(den_, g);
  }
  if (den_.lc_sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

void Scalar::unify(Scalar& a, Scalar& b) {
  if (a.ctx_ == b.ctx_) return;
  if (a.is_constant()) {
    a.ctx_ = b.ctx_;
    return;
  }
  if (b.is_constant()) {
    b.ctx_ = a.ctx_;
    return;
  }
  if (a.ctx_->extends(*b.ctx_)) {
    b.ctx_ = a.ctx_;
    return;
  }
  if (b.ctx_->extends(*a.ctx_)) {
    a.ctx_ = b.ctx_;
    return;
  }
  throw Error("scalars from incompatible ring contexts");
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar a = *this, b = o;
  unify(a, b);
  Scalar r;
  r.ctx_ = a.ctx_;
  r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
  r.den_ = a.den_ * b.den_;
  r.canonicalize();
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar a = *this, b = o;
  unify(a, b);
  Scalar r;
  r.ctx_ = a.ctx_;
  r.num_ = a.num_ * b.num_;
  r.den_ = a.den_ * b.den_;
  r.canonicalize();
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  Scalar r;
  r.ctx_ = ctx_;
  r.num_ = den_;
  r.den_ = num_;
  r.rationalize_den();
  r.canonicalize();
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  Scalar a = *this, b = o;
  unify(a, b);
  return a.num_ == b.num_ && a.den_ == b.den_;
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r = Scalar::integer(1);
  for (int i = 0; i < e; i++) r = r * *this;
  return r;
}

Rat Scalar::rational_value() const {
  if (!is_constant()) throw Error("scalar is not constant");
  return Rat(num_.constant_value(), den_.constant_value());
}

Rat Scalar::eval(const Ctx& spec_ctx) const {
  if (!spec_ctx || !spec_ctx->is_specialized()) throw Error("eval requires a specialized context");
  if (ctx_ && !spec_ctx->extends(*ctx_) && !is_constant())
    throw Error("scalar does not belong to the given context");
  const auto& vals = spec_ctx->spec_values();
  Rat dv = den_.eval(vals);
  if (dv == 0) throw Error("specialization makes a denominator vanish");
  return num_.eval(vals) / dv;
}

Scalar Scalar::specialize(const Ctx& spec_ctx) const {
  Scalar s = Scalar::rational(eval(spec_ctx));
  s.ctx_ = spec_ctx;
  return s;
}

Scalar Scalar::substituted(const std::map<std::string, Scalar>& values, const Ctx& target) const {
  auto image_of = [&](size_t v) -> Scalar {
    const std::string& name = ctx_->var(v).name;
    auto it = values.find(name);
    if (it != values.end()) return it->second;
    return Scalar::param(target, name);
  };
  auto subst_poly = [&](const Poly& p) -> Scalar {
    Scalar acc;
    for (const auto& t : p.terms()) {
      Scalar term = Scalar::rational(Rat(t.coeff));
      for (size_t v = 0; v < t.mono.exps.size(); v++)
        if (t.mono.exps[v] > 0) term = term * image_of(v).pow(static_cast<int>(t.mono.exps[v]));
      acc = acc + term;
    }
    return acc;
  };
  if (!ctx_) return *this;
  return subst_poly(num_) / subst_poly(den_);
}

std::optional<Scalar> Scalar::sqrt() const {
  if (is_zero()) return Scalar();
  auto radical_free_sqrt = [](const Scalar& s) -> std::optional<Scalar> {
    auto rn = Poly::sqrt(s.num());
    auto rd = Poly::sqrt(s.den());
    if (!rn || !rd) return std::nullopt;
    return Scalar::from_fraction(s.ctx_, std::move(*rn), std::move(*rd));
  };
  if (!has_radical()) {
    if (auto root = radical_free_sqrt(*this)) return root;
  }
  if (!ctx_) return std::nullopt;
  for (size_t v = 0; v < ctx_->size(); v++) {
    if (!ctx_->var(v).radical) continue;
    Scalar radicand;
    radicand.ctx_ = ctx_;
    radicand.num_ = ctx_->var(v).radicand;
    if (radicand.is_zero()) continue;
    Scalar ratio = *this / radicand;
    if (ratio.has_radical()) continue;
    if (auto c = radical_free_sqrt(ratio)) return *c * Scalar::var(ctx_, v);
  }
  return std::nullopt;
}

int Scalar::cmp(const Scalar& a, const Scalar& b) {
  int c = poly_cmp(a.num_, b.num_);
  if (c != 0) return c;
  return poly_cmp(a.den_, b.den_);
}

Scalar rehome(const Scalar& s, const Ctx& target) {
  if (s.ctx() == target) return s;
  int used = std::max(s.num().max_var(), s.den().max_var());
  for (int v = 0; v <= used; v++) {
    if (static_cast<size_t>(v) >= target->size())
      throw Error("scalar uses a variable the target context lacks");
    if (!s.ctx()) break;
    const auto& a = s.ctx()->var(static_cast<size_t>(v));
    const auto& b = target->var(static_cast<size_t>(v));
    if (a.name != b.name || a.radical != b.radical)
      throw Error("scalar variable '" + a.name + "' does not match the target context");
  }
  return Scalar::from_fraction(target, s.num(), s.den());
}

}  // namespace twinrep::exact
