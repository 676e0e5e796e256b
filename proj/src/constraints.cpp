#include <algorithm>
#include <random>
#include <sstream>

#include "twinrep/analysis.hpp"
#include "twinrep/error.hpp"
#include "twinrep/scalar_io.hpp"

namespace twinrep::analysis {

using exact::Int;
using exact::Rat;
using exact::RingContext;
using groups::GroupTag;

namespace {

int poly_order(const Poly& a, const Poly& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (size_t i = 0; i < std::min(ta.size(), tb.size()); i++) {
    int c = exact::mono_cmp(ta[i].mono, tb[i].mono);
    if (c != 0) return c;
    if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff ? -1 : 1;
  }
  if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
  return 0;
}

Poly sign_normalized(Poly p) { return p.lc_sign() < 0 ? -p : p; }

// single term +-x^2: the equations that force an entry to vanish outright
std::optional<size_t> forced_square_var(const Poly& p) {
  if (p.terms().size() != 1) return std::nullopt;
  const auto& t = p.terms()[0];
  if (t.coeff != 1 && t.coeff != -1) return std::nullopt;
  size_t var = 0;
  int seen = 0;
  for (size_t v = 0; v < t.mono.exps.size(); v++) {
    if (t.mono.exps[v] == 2)
      var = v, seen++;
    else if (t.mono.exps[v] != 0)
      return std::nullopt;
  }
  if (seen != 1) return std::nullopt;
  return var;
}

void collect_equations(std::vector<ConstraintEquation>& out, const la::Matrix& diff,
                       const std::string& label) {
  for (size_t i = 0; i < diff.dim(); i++)
    for (size_t j = 0; j < diff.dim(); j++) {
      const Scalar& s = diff.at(i, j);
      if (s.is_zero()) continue;
      if (!s.is_polynomial()) throw Error("constraint entry unexpectedly non-polynomial");
      std::ostringstream prov;
      prov << label << " entry (" << i + 1 << "," << j + 1 << ")";
      out.push_back(ConstraintEquation{s.num(), prov.str()});
    }
}

}  // namespace

ConstraintSystem derive_local_constraints(GroupTag tag, int k, int position_a, int position_b,
                                          int n) {
  if (k != 3) throw Error("constraint derivation covers k = 3 only");
  if (tag == GroupTag::B) throw Error("constraint derivation covers T, VT, WT");
  if (position_a < 1 || position_b > n - 1 || std::abs(position_a - position_b) < 2)
    throw Error("need two far-apart block positions");

  std::vector<std::string> names = {"a", "b", "c", "d", "e", "f", "g", "h", "entry_33"};
  bool pair = tag != GroupTag::T;
  if (pair)
    for (const char* q : {"n11", "n12", "n13", "n21", "n22", "n23", "n31", "n32", "n33"})
      names.push_back(q);
  Ctx ctx = RingContext::make(names);

  la::Matrix m(3), nn(3);
  for (size_t i = 0; i < 3; i++)
    for (size_t j = 0; j < 3; j++) {
      m.at(i, j) = Scalar::var(ctx, i * 3 + j);
      if (pair) nn.at(i, j) = Scalar::var(ctx, 9 + i * 3 + j);
    }

  size_t pa = static_cast<size_t>(position_a), pb = static_cast<size_t>(position_b);
  size_t sn = static_cast<size_t>(n);
  la::Matrix sa = la::block_embed(m, pa, sn);
  la::Matrix sb = la::block_embed(m, pb, sn);
  la::Matrix id = la::Matrix::identity(sa.dim());

  ConstraintSystem sys{tag, ctx, {}, {}, {}};
  collect_equations(sys.raw, sa * sa - id, "s" + std::to_string(pa) + "^2 = 1");
  collect_equations(sys.raw, sa * sb - sb * sa,
                    "s" + std::to_string(pa) + " s" + std::to_string(pb) + " commutation");
  if (pair) {
    la::Matrix ra = la::block_embed(nn, pa, sn);
    la::Matrix rb = la::block_embed(nn, pb, sn);
    la::Matrix ra2 = la::block_embed(nn, pa + 1, sn);
    la::Matrix sa2 = la::block_embed(m, pa + 1, sn);
    collect_equations(sys.raw, ra * ra - id, "r" + std::to_string(pa) + "^2 = 1");
    collect_equations(sys.raw, ra * rb - rb * ra,
                      "r" + std::to_string(pa) + " r" + std::to_string(pb) + " commutation");
    collect_equations(sys.raw, sa * rb - rb * sa,
                      "s" + std::to_string(pa) + " r" + std::to_string(pb) + " commutation");
    collect_equations(sys.raw, sb * ra - ra * sb,
                      "s" + std::to_string(pb) + " r" + std::to_string(pa) + " commutation");
    collect_equations(sys.raw, ra * ra2 * ra - ra2 * ra * ra2, "rho braid");
    collect_equations(sys.raw, ra * ra2 * sa - sa2 * ra * ra2, "r r s = s r r");
    if (tag == GroupTag::WT)
      collect_equations(sys.raw, ra * sa2 * sa - sa2 * sa * ra2, "r s s = s s r");
  }

  // the directly forcing equations (c^2 = 0 and g^2 = 0 in the T case)
  std::vector<size_t> forced;
  for (const auto& eq : sys.raw) {
    auto var = forced_square_var(eq.poly);
    if (var && std::find(forced.begin(), forced.end(), *var) == forced.end()) forced.push_back(*var);
  }
  for (size_t v : forced) sys.forced_zero.push_back(ctx->var(v).name);

  std::vector<ConstraintEquation> reduced;
  for (const auto& eq : sys.raw) {
    Poly p = eq.poly;
    for (size_t v : forced) p = p.subst_zero(v);
    if (p.is_zero()) continue;
    p = sign_normalized(p);
    bool dup = false;
    for (const auto& have : reduced) dup |= have.poly == p;
    if (!dup) reduced.push_back(ConstraintEquation{std::move(p), eq.provenance});
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const ConstraintEquation& x, const ConstraintEquation& y) {
              return poly_order(x.poly, y.poly) < 0;
            });
  sys.equations = std::move(reduced);
  return sys;
}

std::vector<Poly> reference_t_constraints(const Ctx& ctx) {
  std::vector<const char*> texts = {
      "-1 + a^2 + b*d", "a*b + b*e",     "b*f",
      "a*d + d*e",      "-1 + b*d + e^2 + f*h",
      "e*f + f*entry_33",
      "d*h",            "e*h + h*entry_33",
      "-1 + f*h + entry_33^2",
      "-f + a*f",       "h - a*h",       "-b + b*entry_33",
      "d - d*entry_33",
  };
  std::vector<Poly> out;
  for (const char* t : texts) {
    Scalar s = exact::parse_scalar(ctx, t);
    out.push_back(sign_normalized(s.num()));
  }
  std::sort(out.begin(), out.end(), [](const Poly& x, const Poly& y) { return poly_order(x, y) < 0; });
  return out;
}

bool satisfies(const ConstraintSystem& system, const la::Matrix& core_m,
               const std::optional<la::Matrix>& core_n) {
  std::vector<Scalar> values;
  for (size_t i = 0; i < 3; i++)
    for (size_t j = 0; j < 3; j++) values.push_back(core_m.at(i, j));
  if (core_n)
    for (size_t i = 0; i < 3; i++)
      for (size_t j = 0; j < 3; j++) values.push_back(core_n->at(i, j));
  if (values.size() < system.ctx->size()) throw Error("core pair expected for this system");
  auto eval_poly = [&](const Poly& p) {
    Scalar acc;
    for (const auto& t : p.terms()) {
      Scalar term = Scalar::rational(Rat(t.coeff));
      for (size_t v = 0; v < t.mono.exps.size(); v++)
        for (uint32_t e = 0; e < t.mono.exps[v]; e++) term = term * values[v];
      acc = acc + term;
    }
    return acc;
  };
  // raw system includes the forcing equations, so checking it subsumes
  // the reduced set
  for (const auto& eq : system.raw)
    if (!eval_poly(eq.poly).is_zero()) return false;
  return true;
}

std::vector<la::Matrix> solution_samples(const ConstraintSystem& system, int count, uint64_t seed) {
  if (system.tag != GroupTag::T)
    throw Error("solution sampling follows the twin-group case branches only");
  if (count < 1) throw Error("sample count must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> coin(0, 1);
  auto rnd = [&]() { return Rat(num(rng), den(rng)); };
  auto rnd_nonzero = [&]() {
    Rat v = rnd();
    while (v == 0) v = rnd();
    return v;
  };
  auto sign = [&]() { return coin(rng) ? 1 : -1; };

  std::vector<la::Matrix> out;
  for (int i = 0; i < count; i++) {
    // entries (a,b,c,d,e,f,g,h,i33); c = g = 0 throughout
    Rat a, b, c, d, e, f, g, h, i33;
    bool case_b_zero = coin(rng) == 0;
    bool inner_zero = coin(rng) == 0;
    if (case_b_zero) {
      b = 0;
      if (inner_zero) {
        h = 0;
        a = sign(), e = sign(), i33 = sign();
        bool d_free = (a == 1 && e == -1 && i33 == 1) || (a == -1 && e == 1 && i33 == 1);
        bool f_free = (a == 1 && e == -1 && i33 == 1) || (a == 1 && e == 1 && i33 == -1);
        d = d_free ? rnd() : Rat(0);
        f = f_free ? rnd() : Rat(0);
      } else {
        // h != 0: d = 0, a = 1, e = -i33, e^2 = 1 - f h
        d = 0;
        a = 1;
        e = rnd();
        i33 = -e;
        h = rnd_nonzero();
        f = (Rat(1) - e * e) / h;
      }
    } else {
      f = 0;
      if (inner_zero) {
        d = 0;
        a = sign(), e = sign(), i33 = sign();
        bool b_free = (a == 1 && e == -1 && i33 == 1) || (a == -1 && e == 1 && i33 == 1);
        bool h_free = (a == 1 && e == -1 && i33 == 1) || (a == 1 && e == 1 && i33 == -1);
        b = b_free ? rnd() : Rat(0);
        h = h_free ? rnd() : Rat(0);
      } else {
        // d != 0: h = 0, i33 = 1, a = -e, a^2 = 1 - b d
        h = 0;
        i33 = 1;
        e = rnd();
        a = -e;
        d = rnd_nonzero();
        b = (Rat(1) - e * e) / d;
      }
    }
    c = 0;
    g = 0;
    la::Matrix core(3);
    core.at(0, 0) = Scalar::rational(a);
    core.at(0, 1) = Scalar::rational(b);
    core.at(0, 2) = Scalar::rational(c);
    core.at(1, 0) = Scalar::rational(d);
    core.at(1, 1) = Scalar::rational(e);
    core.at(1, 2) = Scalar::rational(f);
    core.at(2, 0) = Scalar::rational(g);
    core.at(2, 1) = Scalar::rational(h);
    core.at(2, 2) = Scalar::rational(i33);
    if (!satisfies(system, core)) throw Error("internal: sampled core violates the system");
    out.push_back(std::move(core));
  }
  return out;
}

}  // namespace twinrep::analysis
