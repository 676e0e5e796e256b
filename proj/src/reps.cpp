#include "twinrep/reps.hpp"

#include <array>
#include <sstream>

#include "twinrep/error.hpp"
#include "twinrep/scalar_io.hpp"

namespace twinrep::reps {

using exact::parse_scalar;
using exact::RingContext;
using groups::GenKind;

namespace {

const std::array<const char*, 34> kFamilyNames = {
    "T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9", "T10", "T11",
    "V1", "V2", "V3", "V4", "V5", "V6", "V7", "V8", "V9", "V10", "V11", "V12", "V13", "V14",
    "W1", "W2", "W3", "W4", "W5",
    "BURAU", "F", "N1", "N2",
};

la::Matrix parse_core(const Ctx& ctx, const std::vector<std::string>& rows) {
  std::vector<la::Vec> out;
  for (const auto& row : rows) {
    la::Vec v;
    size_t start = 0;
    for (size_t i = 0; i <= row.size(); i++) {
      if (i == row.size() || row[i] == ',') {
        v.push_back(parse_scalar(ctx, row.substr(start, i - start)));
        start = i + 1;
      }
    }
    out.push_back(std::move(v));
  }
  return la::Matrix::from_rows(std::move(out));
}

struct Spec {
  FamilyId id;
  GroupTag tag;
  int locality;
  std::vector<ParamSpec> params;
  const char* radical;
  const char* radicand;
  std::vector<std::string> m_rows;
  std::vector<std::string> n_rows;  // empty: single-core family
};

FamilyDescriptor make_descriptor(const Spec& s) {
  std::vector<std::string> names;
  for (const auto& p : s.params) names.push_back(p.name);
  Ctx ctx = RingContext::make(names);
  std::string radicand_text;
  if (s.radical && *s.radical) {
    radicand_text = s.radicand;
    ctx = ctx->adjoin_radical(s.radical, parse_scalar(ctx, s.radicand));
  }
  FamilyDescriptor d{s.id,
                     s.tag,
                     s.locality,
                     s.params,
                     s.radical ? s.radical : "",
                     radicand_text,
                     ctx,
                     parse_core(ctx, s.m_rows),
                     std::nullopt};
  if (!s.n_rows.empty()) d.core_n = parse_core(ctx, s.n_rows);
  return d;
}

std::vector<FamilyDescriptor> build_catalog() {
  const GroupTag T = GroupTag::T, VT = GroupTag::VT, WT = GroupTag::WT, B = GroupTag::B;
  auto p = [](const char* name) { return ParamSpec{name, false}; };
  auto pz = [](const char* name) { return ParamSpec{name, true}; };  // must be nonzero
  std::vector<Spec> specs = {
      {FamilyId::T1, T, 3, {p("d"), p("f")}, "", "",
       {"1,0,0", "d,-1,f", "0,0,1"}, {}},
      {FamilyId::T2, T, 3, {p("f"), p("h")}, "r", "1 - f*h",
       {"1,0,0", "0,-r,f", "0,h,r"}, {}},
      {FamilyId::T3, T, 3, {p("f"), p("h")}, "r", "1 - f*h",
       {"1,0,0", "0,r,f", "0,h,-r"}, {}},
      {FamilyId::T4, T, 3, {p("b"), p("h")}, "", "",
       {"1,b,0", "0,-1,0", "0,h,1"}, {}},
      {FamilyId::T5, T, 3, {p("b"), p("d")}, "r", "1 - b*d",
       {"-r,b,0", "d,r,0", "0,0,1"}, {}},
      {FamilyId::T6, T, 3, {p("b"), p("d")}, "r", "1 - b*d",
       {"r,b,0", "d,-r,0", "0,0,1"}, {}},
      {FamilyId::T7, T, 3, {}, "", "", {"1,0,0", "0,-1,0", "0,0,-1"}, {}},
      {FamilyId::T8, T, 3, {}, "", "", {"-1,0,0", "0,-1,0", "0,0,1"}, {}},
      {FamilyId::T9, T, 3, {}, "", "", {"1,0,0", "0,1,0", "0,0,1"}, {}},
      {FamilyId::T10, T, 3, {}, "", "", {"-1,0,0", "0,-1,0", "0,0,-1"}, {}},
      {FamilyId::T11, T, 3, {}, "", "", {"-1,0,0", "0,1,0", "0,0,-1"}, {}},

      {FamilyId::V1, VT, 3, {p("e"), pz("h"), pz("p")}, "", "",
       {"1,0,0", "0,e,(1 - e^2)/h", "0,h,-e"},
       {"1,0,0", "0,0,p", "0,1/p,0"}},
      {FamilyId::V2, VT, 3, {p("e"), pz("d"), pz("kappa")}, "", "",
       {"-e,(1 - e^2)/d,0", "d,e,0", "0,0,1"},
       {"0,kappa,0", "1/kappa,0,0", "0,0,1"}},
      {FamilyId::V3, VT, 3, {p("d"), pz("p")}, "", "",
       {"1,0,0", "d,-1,2*p - d*p^2", "0,0,1"},
       {"1,0,0", "1/p,-1,p", "0,0,1"}},
      {FamilyId::V4, VT, 3, {p("h"), pz("kappa")}, "", "",
       {"1,2*kappa - h*kappa^2,0", "0,-1,0", "0,h,1"},
       {"1,kappa,0", "0,-1,0", "0,1/kappa,1"}},
      {FamilyId::V5, VT, 3, {p("b"), pz("kappa")}, "", "",
       {"1,b,0", "0,-1,0", "0,0,1"},
       {"0,kappa,0", "1/kappa,0,0", "0,0,1"}},
      {FamilyId::V6, VT, 3, {p("b"), pz("kappa")}, "", "",
       {"-1,b,0", "0,1,0", "0,0,1"},
       {"0,kappa,0", "1/kappa,0,0", "0,0,1"}},
      {FamilyId::V7, VT, 3, {pz("p")}, "", "",
       {"1,0,0", "0,1,0", "0,0,1"},
       {"1,0,0", "1/p,-1,p", "0,0,1"}},
      {FamilyId::V8, VT, 3, {pz("kappa")}, "", "",
       {"1,0,0", "0,1,0", "0,0,1"},
       {"1,kappa,0", "0,-1,0", "0,1/kappa,1"}},
      {FamilyId::V9, VT, 3, {pz("p")}, "", "",
       {"1,0,0", "0,-1,0", "0,0,-1"},
       {"1,0,0", "0,0,p", "0,1/p,0"}},
      {FamilyId::V10, VT, 3, {pz("p")}, "", "",
       {"1,0,0", "0,-1,0", "0,0,1"},
       {"1,0,0", "0,0,p", "0,1/p,0"}},
      {FamilyId::V11, VT, 3, {pz("p")}, "", "",
       {"1,0,0", "0,1,0", "0,0,1"},
       {"1,0,0", "0,0,p", "0,1/p,0"}},
      {FamilyId::V12, VT, 3, {pz("kappa")}, "", "",
       {"-1,0,0", "0,-1,0", "0,0,1"},
       {"0,kappa,0", "1/kappa,0,0", "0,0,1"}},
      {FamilyId::V13, VT, 3, {pz("kappa")}, "", "",
       {"1,0,0", "0,1,0", "0,0,1"},
       {"0,kappa,0", "1/kappa,0,0", "0,0,1"}},
      {FamilyId::V14, VT, 3, {}, "", "",
       {"1,0,0", "0,1,0", "0,0,1"},
       {"1,0,0", "0,1,0", "0,0,1"}},

      {FamilyId::W1, WT, 3, {pz("h"), pz("p")}, "", "",
       {"1,0,0", "0,0,1/h", "0,h,0"},
       {"1,0,0", "0,0,p", "0,1/p,0"}},
      {FamilyId::W2, WT, 3, {pz("d"), pz("kappa")}, "", "",
       {"0,1/d,0", "d,0,0", "0,0,1"},
       {"0,kappa,0", "1/kappa,0,0", "0,0,1"}},
      {FamilyId::W3, WT, 3, {pz("p")}, "", "",
       {"1,0,0", "1/p,-1,p", "0,0,1"},
       {"1,0,0", "1/p,-1,p", "0,0,1"}},
      {FamilyId::W4, WT, 3, {pz("kappa")}, "", "",
       {"1,kappa,0", "0,-1,0", "0,1/kappa,1"},
       {"1,kappa,0", "0,-1,0", "0,1/kappa,1"}},
      {FamilyId::W5, WT, 3, {}, "", "",
       {"1,0,0", "0,1,0", "0,0,1"},
       {"1,0,0", "0,1,0", "0,0,1"}},

      {FamilyId::BURAU, B, 2, {pz("t")}, "", "", {"1 - t,t", "1,0"}, {}},
      {FamilyId::F, B, 3, {pz("t")}, "", "", {"1,1,0", "0,-t,0", "0,t,1"}, {}},
      {FamilyId::N1, T, 2, {p("t")}, "", "", {"1 - t,t", "2 - t,t - 1"}, {}},
      {FamilyId::N2, T, 2, {pz("f")}, "", "", {"0,f", "1/f,0"}, {}},
  };
  std::vector<FamilyDescriptor> out;
  for (const auto& s : specs) out.push_back(make_descriptor(s));
  return out;
}

}  // namespace

std::string to_string(FamilyId id) { return kFamilyNames[static_cast<size_t>(id)]; }

FamilyId family_from_string(const std::string& name) {
  for (size_t i = 0; i < kFamilyNames.size(); i++)
    if (name == kFamilyNames[i]) return static_cast<FamilyId>(i);
  throw Error("unknown family: " + name);
}

bool FamilyDescriptor::has_param(const std::string& name) const {
  for (const auto& p : params)
    if (p.name == name) return true;
  return false;
}

const std::vector<FamilyDescriptor>& catalog() {
  static const std::vector<FamilyDescriptor> cat = build_catalog();
  return cat;
}

const FamilyDescriptor& family(FamilyId id) {
  for (const auto& d : catalog())
    if (d.id == id) return d;
  throw Error("unknown family id");
}

// ----------------------------------------------------------------- building

LocalRep build_rep(FamilyId id, const std::map<std::string, Scalar>& params, int n) {
  const FamilyDescriptor& desc = family(id);
  if (n < 2) throw Error("strand count must be at least 2");
  for (const auto& [name, value] : params) {
    (void)value;
    if (!desc.has_param(name))
      throw Error("family " + to_string(id) + " has no parameter '" + name + "'");
  }

  std::vector<std::string> names;
  for (const auto& p : desc.params) names.push_back(p.name);
  Ctx target = RingContext::make(names);

  std::map<std::string, Scalar> sub;
  for (const auto& [name, value] : params) sub[name] = rehome(value, target);

  std::map<std::string, std::string> echo;
  for (const auto& [name, value] : sub) echo[name] = exact::to_string(value);

  for (const auto& p : desc.params) {
    if (!p.nonzero) continue;
    auto it = sub.find(p.name);
    if (it != sub.end() && it->second.is_zero())
      throw Error("parameter '" + p.name + "' of " + to_string(id) + " must be nonzero");
  }

  if (!desc.radical.empty()) {
    Scalar radicand = parse_scalar(target, desc.radicand_text).substituted(sub, target);
    if (radicand.is_constant()) {
      auto root = radicand.sqrt();
      if (!root)
        throw Error("inadmissible parameters for " + to_string(id) + ": radicand " +
                    exact::to_string(radicand) + " is not a perfect rational square");
      sub[desc.radical] = *root;
    } else if (radicand.is_polynomial()) {
      target = target->adjoin_radical(desc.radical, radicand);
      sub[desc.radical] = Scalar::param(target, desc.radical);
    } else {
      throw Error("substitution makes the radicand of " + to_string(id) +
                  " non-polynomial; assign all of its parameters instead");
    }
  }

  LocalRep rep{id,
               desc.tag,
               n,
               desc.locality,
               static_cast<size_t>(n + desc.locality - 2),
               desc.core_m.substituted(sub, target),
               std::nullopt,
               std::move(echo)};
  if (desc.core_n) rep.core_n = desc.core_n->substituted(sub, target);
  return rep;
}

std::map<std::string, Scalar> parse_params(FamilyId id, const std::string& params_text) {
  const FamilyDescriptor& desc = family(id);
  std::map<std::string, Scalar> out;
  if (params_text.empty()) return out;
  size_t start = 0;
  for (size_t i = 0; i <= params_text.size(); i++) {
    if (i != params_text.size() && params_text[i] != ',') continue;
    std::string piece = params_text.substr(start, i - start);
    start = i + 1;
    size_t eq = piece.find('=');
    if (eq == std::string::npos) throw Error("expected name=value in params: " + piece);
    std::string name = piece.substr(0, eq);
    while (!name.empty() && name.back() == ' ') name.pop_back();
    while (!name.empty() && name.front() == ' ') name.erase(name.begin());
    out[name] = parse_scalar(desc.ctx, piece.substr(eq + 1));
  }
  return out;
}

LocalRep build_rep(FamilyId id, const std::string& params_text, int n) {
  return build_rep(id, parse_params(id, params_text), n);
}

la::Matrix LocalRep::image(const groups::Generator& g) const {
  const la::Matrix* core = nullptr;
  switch (g.kind) {
    case GenKind::S:
      if (tag != GroupTag::B) core = &core_m;
      break;
    case GenKind::Sigma:
      if (tag == GroupTag::B) core = &core_m;
      break;
    case GenKind::Rho:
      if (core_n) core = &*core_n;
      break;
  }
  if (!core)
    throw Error("representation of " + groups::to_string(tag) + "_n has no image for " +
                groups::to_string(g));
  if (g.index < 1 || g.index > n - 1) throw Error("generator index out of range");
  return la::block_embed(*core, static_cast<size_t>(g.index), static_cast<size_t>(n));
}

groups::ImageMap LocalRep::image_map() const {
  groups::ImageMap images;
  for (const auto& g : groups::presentation(tag, n).generators)
    images.set(g.kind, g.index, image(g));
  return images;
}

std::string LocalRep::label() const {
  std::ostringstream out;
  out << to_string(id);
  if (!param_echo.empty()) {
    out << "(";
    bool first = true;
    for (const auto& [k, v] : param_echo) {
      if (!first) out << ", ";
      out << k << "=" << v;
      first = false;
    }
    out << ")";
  }
  out << " n=" << n;
  return out.str();
}

Rep to_rep(const LocalRep& rep) {
  return Rep{rep.tag, rep.n, rep.dim, rep.image_map(), rep.label()};
}

// ----------------------------------------------------------------- matching

namespace {

// entry is c*x for a single variable x and c in {1,-1}: returns (var, c)
std::optional<std::pair<size_t, int>> bare_variable(const Scalar& s) {
  if (!s.is_polynomial() || s.num().terms().size() != 1) return std::nullopt;
  const auto& t = s.num().terms()[0];
  if (t.coeff != 1 && t.coeff != -1) return std::nullopt;
  size_t var = 0;
  int count = 0;
  for (size_t v = 0; v < t.mono.exps.size(); v++) {
    if (t.mono.exps[v] == 1)
      var = v, count++;
    else if (t.mono.exps[v] != 0)
      return std::nullopt;
  }
  if (count != 1) return std::nullopt;
  return std::make_pair(var, t.coeff == 1 ? 1 : -1);
}

std::optional<std::map<std::string, Rat>> unify_core(const FamilyDescriptor& desc,
                                                     const la::Matrix& tmpl,
                                                     const la::Matrix& core,
                                                     std::map<std::string, Rat>& assigned) {
  // pass 1: read off bare parameters and radical values
  for (size_t i = 0; i < 3; i++)
    for (size_t j = 0; j < 3; j++) {
      auto bare = bare_variable(tmpl.at(i, j));
      if (!bare) continue;
      const auto& var = desc.ctx->var(bare->first);
      Rat value = core.at(i, j).rational_value() * bare->second;
      auto it = assigned.find(var.name);
      if (it != assigned.end()) {
        if (it->second != value) return std::nullopt;
      } else {
        assigned[var.name] = value;
      }
    }
  return assigned;
}

}  // namespace

MatchResult match_family(const la::Matrix& core_m, const std::optional<la::Matrix>& core_n,
                         GroupTag tag) {
  if (!core_m.is_constant() || (core_n && !core_n->is_constant()))
    throw Error("match_family needs specialized cores");
  MatchResult result;
  if (!(core_m * core_m == la::Matrix::identity(core_m.dim())) ||
      (core_n && !(*core_n * *core_n == la::Matrix::identity(core_n->dim())))) {
    result.involution_ok = false;  // not a solution of the involution constraint
    return result;
  }
  for (const auto& desc : catalog()) {
    if (desc.tag != tag || desc.locality != static_cast<int>(core_m.dim())) continue;
    if (desc.core_n.has_value() != core_n.has_value()) continue;
    std::map<std::string, Rat> assigned;
    if (!unify_core(desc, desc.core_m, core_m, assigned)) continue;
    if (core_n && !unify_core(desc, *desc.core_n, *core_n, assigned)) continue;
    // every parameter must be pinned down (all catalog params occur bare)
    bool complete = true;
    for (const auto& p : desc.params) complete &= assigned.count(p.name) > 0;
    if (!complete) continue;
    // nonzero constraints
    bool ok = true;
    for (const auto& p : desc.params)
      if (p.nonzero && assigned[p.name] == 0) ok = false;
    if (!ok) continue;
    // radical consistency: value^2 must equal the radicand at the assignment
    std::map<std::string, Rat> spec_map;
    for (const auto& p : desc.params) spec_map[p.name] = assigned[p.name];
    Rat radical_value;
    if (!desc.radical.empty()) {
      auto it = assigned.find(desc.radical);
      if (it == assigned.end()) continue;
      radical_value = it->second;
      std::vector<Rat> values(desc.ctx->size());
      for (size_t v = 0; v < desc.ctx->size(); v++)
        if (!desc.ctx->var(v).radical) values[v] = spec_map[desc.ctx->var(v).name];
      size_t rad_var = *desc.ctx->find(desc.radical);
      if (radical_value * radical_value != desc.ctx->var(rad_var).radicand.eval(values)) continue;
      values[rad_var] = radical_value;
      // pass 2 with explicit radical value
      bool match = true;
      for (size_t i = 0; i < 3 && match; i++)
        for (size_t j = 0; j < 3 && match; j++) {
          const Scalar& t = desc.core_m.at(i, j);
          Rat dv = t.den().eval(values);
          if (dv == 0 || t.num().eval(values) / dv != core_m.at(i, j).rational_value())
            match = false;
        }
      if (!match) continue;
      std::map<std::string, Rat> params_only = spec_map;
      result.matches.push_back(FamilyMatch{desc.id, std::move(params_only)});
      continue;
    }
    // radical-free: verify all entries under full specialization
    exact::Ctx spec;
    try {
      spec = desc.ctx->specialized(spec_map);
    } catch (const Error&) {
      continue;
    }
    bool match = true;
    auto check = [&](const la::Matrix& tmpl, const la::Matrix& core) {
      for (size_t i = 0; i < 3; i++)
        for (size_t j = 0; j < 3; j++) {
          Rat tv;
          try {
            tv = tmpl.at(i, j).eval(spec);
          } catch (const Error&) {
            return false;
          }
          if (tv != core.at(i, j).rational_value()) return false;
        }
      return true;
    };
    match = check(desc.core_m, core_m);
    if (match && core_n) match = check(*desc.core_n, *core_n);
    if (match) result.matches.push_back(FamilyMatch{desc.id, std::move(spec_map)});
  }
  return result;
}

}  // namespace twinrep::reps
