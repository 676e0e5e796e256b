#include "twinrep/suite.hpp"

#include <functional>
#include <json.hpp>
#include <random>
#include <sstream>

#include "twinrep/error.hpp"
#include "twinrep/scalar_io.hpp"
#include "twinrep/snf.hpp"

namespace twinrep::cli {

using analysis::ReducibilityCertificate;
using analysis::Side;
using exact::Ctx;
using exact::Rat;
using exact::RingContext;
using exact::Scalar;
using groups::GroupTag;
using la::Matrix;
using la::Vec;
using reps::FamilyId;

namespace {

CheckResult pass(std::string id, std::string detail = "") {
  return CheckResult{std::move(id), "pass", std::move(detail)};
}
CheckResult fail(std::string id, std::string detail) {
  return CheckResult{std::move(id), "fail", std::move(detail)};
}
CheckResult outcome(std::string id, bool ok, std::string detail = "") {
  return ok ? pass(std::move(id), std::move(detail)) : fail(std::move(id), std::move(detail));
}

std::vector<const reps::FamilyDescriptor*> families_of(GroupTag tag) {
  std::vector<const reps::FamilyDescriptor*> out;
  for (const auto& d : reps::catalog())
    if (d.tag == tag && d.locality == 3) out.push_back(&d);
  return out;
}

Matrix parse_core(const Ctx& ctx, const std::vector<std::string>& rows) {
  std::vector<Vec> out;
  for (const auto& row : rows) {
    Vec v;
    size_t start = 0;
    for (size_t i = 0; i <= row.size(); i++)
      if (i == row.size() || row[i] == ',') {
        v.push_back(exact::parse_scalar(ctx, row.substr(start, i - start)));
        start = i + 1;
      }
    out.push_back(std::move(v));
  }
  return Matrix::from_rows(std::move(out));
}

Vec axis(size_t dim, size_t i) {
  Vec v(dim);
  v[i] = Scalar::integer(1);
  return v;
}

bool vec_equal(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); i++)
    if (a[i] != b[i]) return false;
  return true;
}

const ReducibilityCertificate* find_line(const std::vector<ReducibilityCertificate>& certs,
                                         const Vec& v) {
  for (const auto& c : certs)
    if (c.basis.size() == 1 && vec_equal(c.basis[0], v)) return &c;
  return nullptr;
}

const ReducibilityCertificate* find_geometric(const std::vector<ReducibilityCertificate>& certs,
                                              const Scalar& ratio) {
  for (const auto& c : certs)
    if (c.geometric && c.basis.size() == 1 && c.basis[0].size() > 1 && c.basis[0][1] == ratio)
      return &c;
  return nullptr;
}

}  // namespace

// ------------------------------------------------------------ relations

std::vector<CheckResult> check_relations(GroupTag tag, const std::vector<int>& ns) {
  std::vector<CheckResult> out;
  for (const auto* d : families_of(tag)) {
    for (int n : ns) {
      auto report = analysis::verify_relations(reps::build_rep(d->id, "", n));
      std::string id = "relations/" + reps::to_string(d->id) + "/n=" + std::to_string(n);
      if (report.all_pass()) {
        out.push_back(pass(id, std::to_string(report.checks.size()) + " relations hold"));
      } else {
        std::string detail;
        for (const auto& c : report.checks)
          if (!c.pass) detail += c.relation + " fails; ";
        out.push_back(fail(id, detail));
      }
    }
  }
  return out;
}

std::vector<CheckResult> check_mutation_detection() {
  std::vector<CheckResult> out;
  for (const auto& d : reps::catalog()) {
    if (d.locality != 3 || d.tag == GroupTag::B) continue;
    reps::LocalRep rep = reps::build_rep(d.id, "", 4);
    rep.core_m.at(0, 0) = rep.core_m.at(0, 0) + Scalar::integer(1);
    bool failed = !analysis::verify_relations(rep).all_pass();
    out.push_back(outcome("mutation/" + reps::to_string(d.id), failed,
                          failed ? "mutated entry detected" : "mutation went unnoticed"));
  }
  return out;
}

// ------------------------------------------------------------ constraints

std::vector<CheckResult> check_constraints() {
  std::vector<CheckResult> out;
  auto sys = analysis::derive_local_constraints();
  out.push_back(outcome("constraints/forced", sys.forced_zero == std::vector<std::string>{"c", "g"},
                        "entries forced to vanish: c, g"));
  auto expected = analysis::reference_t_constraints(sys.ctx);
  bool same = sys.equations.size() == expected.size();
  for (size_t i = 0; same && i < expected.size(); i++) same = sys.equations[i].poly == expected[i];
  out.push_back(outcome("constraints/thirteen-equations", same,
                        same ? "derived set equals the displayed thirteen equations"
                             : "derived set differs from the displayed equations"));
  auto alt = analysis::derive_local_constraints(GroupTag::T, 3, 2, 4, 5);
  bool same_alt = alt.equations.size() == sys.equations.size();
  for (size_t i = 0; same_alt && i < alt.equations.size(); i++)
    same_alt = alt.equations[i].poly == sys.equations[i].poly;
  out.push_back(outcome("constraints/cross-position", same_alt,
                        "generator pair (s2, s4) at n=5 yields the same set"));
  // the catalog templates annihilate their systems
  for (GroupTag tag : {GroupTag::T, GroupTag::VT, GroupTag::WT}) {
    auto tag_sys = tag == GroupTag::T ? sys : analysis::derive_local_constraints(tag);
    bool all = true;
    std::string bad;
    for (const auto* d : families_of(tag)) {
      bool ok = analysis::satisfies(tag_sys, d->core_m,
                                    tag == GroupTag::T ? std::nullopt : d->core_n);
      if (!ok) bad += reps::to_string(d->id) + " ";
      all &= ok;
    }
    out.push_back(outcome("constraints/annihilation/" + groups::to_string(tag), all,
                          all ? "every catalog template satisfies the system"
                              : "violated by: " + bad));
  }
  return out;
}

std::vector<CheckResult> check_completeness(int count, uint64_t seed) {
  auto sys = analysis::derive_local_constraints();
  auto samples = analysis::solution_samples(sys, count, seed);
  int matched = 0;
  for (const auto& core : samples) {
    auto m = reps::match_family(core, std::nullopt, GroupTag::T);
    if (m.involution_ok && !m.matches.empty()) matched++;
  }
  std::ostringstream d;
  d << matched << "/" << count << " sampled solutions land in a catalog family";
  return {outcome("completeness/samples", matched == count, d.str())};
}

// ------------------------------------------------------------ reducibility

std::vector<CheckResult> check_reducibility(GroupTag tag, const std::vector<int>& ns) {
  std::vector<CheckResult> out;
  for (const auto* d : families_of(tag)) {
    for (int n : ns) {
      reps::LocalRep rep = reps::build_rep(d->id, "", n);
      std::string found;
      for (Side side : {Side::Column, Side::Row}) {
        auto certs = analysis::invariant_lines(rep, side);
        for (const auto& c : certs) {
          if (c.basis.size() >= 1 && c.basis.size() < rep.dim) {
            found = c.describe();
            break;
          }
        }
        if (!found.empty()) break;
      }
      out.push_back(outcome(
          "reducibility/" + reps::to_string(d->id) + "/n=" + std::to_string(n), !found.empty(),
          found.empty() ? "no proper invariant certificate found" : found));
    }
  }
  return out;
}

std::vector<CheckResult> check_reducibility_anchors() {
  std::vector<CheckResult> out;
  {
    auto certs =
        analysis::invariant_lines(reps::build_rep(FamilyId::T1, "d=3,f=1/4", 4), Side::Column);
    Vec expect;
    long long val = 1;
    for (int i = 0; i < 5; i++, val *= 2) expect.push_back(Scalar::integer(val));
    out.push_back(outcome("anchor/tau1-geometric", find_line(certs, expect) != nullptr,
                          "x = 2 gives (1,2,4,8,16)"));
  }
  {
    auto certs = analysis::invariant_lines(reps::build_rep(FamilyId::T2, "", 4), Side::Column);
    out.push_back(outcome("anchor/tau2-e1", find_line(certs, axis(5, 0)) != nullptr,
                          "(1,0,...,0) invariant symbolically"));
  }
  {
    auto certs = analysis::invariant_lines(reps::build_rep(FamilyId::V3, "d=1,p=2", 4), Side::Row);
    out.push_back(outcome("anchor/delta3-row", find_line(certs, axis(5, 0)) != nullptr,
                          "row (1,0,...,0) invariant"));
  }
  return out;
}

// --------------------------------------------------------- factor chains

namespace {

struct Tau1Chain {
  std::vector<CheckResult> checks;
  std::optional<reps::Rep> factor;  // the 3-dimensional composition factor
  Ctx plain_ctx;                    // {d, f}, radical-free
};

Tau1Chain tau1_chain() {
  Tau1Chain result;
  Ctx plain = RingContext::make({"d", "f"});
  result.plain_ctx = plain;
  Ctx ctx = plain->adjoin_radical("r", exact::parse_scalar(plain, "1 - d*f"));
  const auto& desc = reps::family(FamilyId::T1);
  reps::LocalRep rep{FamilyId::T1, GroupTag::T, 4, 3, 5,
                     la::rehome(desc.core_m, ctx),  std::nullopt, {}};
  Scalar x = exact::parse_scalar(ctx, "(1 - r)/f");

  auto certs = analysis::invariant_lines(rep, Side::Column);
  const auto* cx = find_geometric(certs, x);
  result.checks.push_back(outcome("3.3/certificate", cx != nullptr,
                                  "geometric line with x = (1 - r)/f found symbolically"));
  if (!cx) return result;
  reps::Rep quotient = analysis::composition_factor(reps::to_rep(rep), *cx);

  auto rows = analysis::invariant_lines(quotient, Side::Row);
  const auto* ce4 = find_line(rows, axis(4, 3));
  result.checks.push_back(
      outcome("3.3/row-certificate", ce4 != nullptr, "row (0,0,0,1) invariant in the quotient"));
  if (!ce4) return result;
  reps::Rep factor = analysis::composition_factor(quotient, *ce4);

  std::vector<std::vector<std::string>> rows_s = {
      {"-1,f,0", "0,1,0", "0,0,1"},
      {"1,0,0", "d,-1,f", "0,0,1"},
      {"1,0,0", "0,1,0", "0,d,-1"},
  };
  bool match = true;
  std::string detail = "composition factor equals the displayed 3x3 images";
  try {
    for (int i = 1; i <= 3; i++) {
      Matrix img = la::rehome(factor.images.image(groups::GenKind::S, i), plain);
      if (!(img == parse_core(plain, rows_s[static_cast<size_t>(i - 1)]))) {
        match = false;
        detail = "image of s" + std::to_string(i) + " differs";
      }
    }
  } catch (const Error& e) {
    match = false;
    detail = e.what();
  }
  result.checks.push_back(outcome("3.3/factor-entries", match, detail));
  if (match) result.factor = std::move(factor);
  return result;
}

struct Tau2Chain {
  std::vector<CheckResult> checks;
  std::optional<reps::Rep> second_factor;  // 3-dimensional, f != 0 branch
};

Tau2Chain tau2_chain() {
  Tau2Chain result;
  reps::LocalRep rep = reps::build_rep(FamilyId::T2, "", 4);
  Ctx ctx = rep.core_m.ctx();

  auto certs = analysis::invariant_lines(rep, Side::Column);
  const auto* ce1 = find_line(certs, axis(5, 0));
  result.checks.push_back(outcome("3.5/certificate", ce1 != nullptr, "(1,0,...,0) invariant"));
  if (!ce1) return result;
  reps::Rep first = analysis::composition_factor(reps::to_rep(rep), *ce1);

  Matrix block = parse_core(ctx, {"0 - r,f", "h,r"});
  bool match_first = true;
  for (int i = 1; i <= 3; i++)
    match_first &= first.images.image(groups::GenKind::S, i) ==
                   la::block_embed(block, static_cast<size_t>(i), 4);
  result.checks.push_back(outcome("3.5/factor-entries", match_first,
                                  "first factor is the displayed 2-local representation"));

  Scalar x = exact::parse_scalar(ctx, "(1 + r)/f");
  auto certs2 = analysis::invariant_lines(first, Side::Column);
  const auto* cx = find_geometric(certs2, x);
  result.checks.push_back(outcome("3.6/certificate", cx != nullptr,
                                  "geometric line with x = (1 + r)/f found symbolically"));
  if (!cx) return result;
  reps::Rep second = analysis::composition_factor(first, *cx);
  std::vector<std::vector<std::string>> rows_s = {
      {"-1,0,0", "-(r + 1)^2/f,1,0", "-(r + 1)^3/f^2,0,1"},
      {"0 - r,f,0", "h,r,0", "0,0,1"},
      {"1,0,0", "0,0 - r,f", "0,h,r"},
  };
  bool match_second = true;
  for (int i = 1; i <= 3; i++)
    match_second &= second.images.image(groups::GenKind::S, i) ==
                    parse_core(ctx, rows_s[static_cast<size_t>(i - 1)]);
  result.checks.push_back(outcome("3.6/factor-entries", match_second,
                                  "second factor matches the displayed images (f != 0 branch)"));
  if (match_second) result.second_factor = std::move(second);

  // f = 0 branch: the radical collapses to 1 and the factor is lower triangular
  reps::LocalRep rep0 = reps::build_rep(FamilyId::T2, "f=0", 4);
  Ctx ctx0 = rep0.core_m.ctx();
  auto certs0 = analysis::invariant_lines(rep0, Side::Column);
  const auto* ce1b = find_line(certs0, axis(5, 0));
  bool branch_ok = ce1b != nullptr;
  std::string branch_detail = "f = 0 branch factor is lower triangular";
  if (branch_ok) {
    reps::Rep first0 = analysis::composition_factor(reps::to_rep(rep0), *ce1b);
    auto rows0 = analysis::invariant_lines(first0, Side::Row);
    const auto* crow = find_line(rows0, axis(4, 0));
    branch_ok = crow != nullptr;
    if (branch_ok) {
      reps::Rep second0 = analysis::composition_factor(first0, *crow);
      std::vector<std::vector<std::string>> rows_expected = {
          {"1,0,0", "0,1,0", "0,0,1"},
          {"-1,0,0", "h,1,0", "0,0,1"},
          {"1,0,0", "0,-1,0", "0,h,1"},
      };
      for (int i = 1; i <= 3 && branch_ok; i++) {
        Matrix img = second0.images.image(groups::GenKind::S, i);
        branch_ok = img == parse_core(ctx0, rows_expected[static_cast<size_t>(i - 1)]);
        for (size_t r = 0; r < 3 && branch_ok; r++)
          for (size_t c = r + 1; c < 3; c++) branch_ok &= img.at(r, c).is_zero();
      }
      if (!branch_ok) branch_detail = "f = 0 factor differs from the frozen lower-triangular images";
    } else {
      branch_detail = "row certificate (1,0,0,0) not found in the f = 0 quotient";
    }
  } else {
    branch_detail = "column certificate e1 not found at f = 0";
  }
  result.checks.push_back(outcome("3.6/f-zero-branch", branch_ok, branch_detail));
  return result;
}

}  // namespace

std::vector<CheckResult> check_factor_chain_tau1() { return tau1_chain().checks; }
std::vector<CheckResult> check_factor_chain_tau2() { return tau2_chain().checks; }

// ----------------------------------------------------------- meataxe grids

std::vector<CheckResult> check_meataxe_tau1_grid(uint64_t seed) {
  std::vector<CheckResult> out;
  Tau1Chain chain = tau1_chain();
  if (!chain.factor) {
    out.push_back(fail("3.4/grid", "composition factor unavailable"));
    return out;
  }
  std::vector<Rat> ds = {Rat(-2), Rat(-1), Rat(0), Rat(1), Rat(2), Rat(3)};
  std::vector<Rat> fs = {Rat(1), Rat(1, 2), Rat(2)};
  for (const Rat& d : ds)
    for (const Rat& f : fs) {
      auto spec = chain.plain_ctx->specialized(
          {{"d", d}, {"f", f}});
      reps::Rep at_point{GroupTag::T, 4, 3, {}, "tau1 factor specialized"};
      for (int i = 1; i <= 3; i++)
        at_point.images.set(groups::GenKind::S, i,
                            la::rehome(chain.factor->images.image(groups::GenKind::S, i),
                                       chain.plain_ctx)
                                .specialize(spec));
      auto verdict = analysis::meataxe_irreducible(at_point, seed);
      bool expect_irreducible = d != 0;
      std::ostringstream id;
      id << "3.4/grid/d=" << d << ",f=" << f;
      std::string detail =
          verdict.irreducible ? "irreducible (" + verdict.evidence + ")"
                              : "reducible (" + verdict.evidence + ")";
      for (const auto& v : verdict.invariant_subspace) detail += " " + la::to_string(v);
      if (verdict.irreducible != expect_irreducible)
        detail += "; expected " + std::string(expect_irreducible ? "irreducible" : "reducible") +
                  " by the stated iff-condition; the certificate above is verified (d*f = 2 here)";
      out.push_back(outcome(id.str(), verdict.irreducible == expect_irreducible, detail));
    }
  return out;
}

std::vector<CheckResult> check_meataxe_tau2_grid(uint64_t seed) {
  std::vector<CheckResult> out;
  Tau2Chain chain = tau2_chain();
  if (!chain.second_factor) {
    out.push_back(fail("3.8/grid", "composition factor unavailable"));
    return out;
  }
  Ctx ctx = chain.second_factor->images.image(groups::GenKind::S, 1).ctx();
  std::vector<std::pair<Rat, Rat>> points = {
      {Rat(1), Rat(0)}, {Rat(3), Rat(1, 4)}, {Rat(1, 4), Rat(3)}, {Rat(2), Rat(3, 8)}};
  for (const auto& [f, h] : points) {
    auto spec = ctx->specialized({{"f", f}, {"h", h}});
    reps::Rep at_point{GroupTag::T, 4, 3, {}, "tau2 second factor specialized"};
    for (int i = 1; i <= 3; i++)
      at_point.images.set(groups::GenKind::S, i,
                          chain.second_factor->images.image(groups::GenKind::S, i).specialize(spec));
    auto verdict = analysis::meataxe_irreducible(at_point, seed);
    bool expect_irreducible = h != 0;
    std::ostringstream id;
    id << "3.8/grid/f=" << f << ",h=" << h;
    std::string detail = verdict.irreducible ? "irreducible (" + verdict.evidence + ")"
                                             : "reducible (" + verdict.evidence + ")";
    bool ok = verdict.irreducible == expect_irreducible;
    if (ok && h == 0) {
      // the invariant line at h = 0 is (1, 2/f, 4/f^2)
      Vec expect = {Scalar::integer(1), Scalar::rational(Rat(2) / f),
                    Scalar::rational(Rat(4) / (f * f))};
      ok = verdict.invariant_subspace.size() == 1 &&
           vec_equal(verdict.invariant_subspace[0], expect);
      if (ok) detail += "; certificate (1, 2/f, 4/f^2)";
    }
    out.push_back(outcome(id.str(), ok, detail));
  }
  return out;
}

// ----------------------------------------------------------- faithfulness

std::vector<CheckResult> check_faithfulness_catalog(GroupTag tag) {
  struct Entry {
    FamilyId id;
    const char* params;
    const char* witness;
  };
  std::vector<Entry> entries;
  if (tag == GroupTag::VT) {
    entries = {
        {FamilyId::V1, "e=1", "s1 r2 s1 r2 s1 r2 s1 r2"},
        {FamilyId::V2, "e=1", "s2 r1 s2 r1 s2 r1 s2 r1"},
        {FamilyId::V3, "d=1/p", "s1 r1"},
        {FamilyId::V4, "h=1/kappa", "s1 r1"},
        {FamilyId::V5, "", "s1 r2 s1 r2 s1 r2 s1 r2"},
        {FamilyId::V6, "", "s2 r1 s2 r1 s2 r1 s2 r1"},
        {FamilyId::V7, "", "s1"},
        {FamilyId::V8, "", "s1"},
        {FamilyId::V9, "", "s1 s2 s1 s2"},
        {FamilyId::V10, "", "s1 s2 s1 s2"},
        {FamilyId::V11, "", "s1"},
        {FamilyId::V12, "", "s1 s2 s1 s2"},
        {FamilyId::V13, "", "s1"},
        {FamilyId::V14, "", "s1"},
    };
  } else {
    entries = {
        {FamilyId::W1, "", "s1 r1 s2 r1 s1 r2"},
        {FamilyId::W2, "", "s1 r1 s2 r1 s1 r2"},
        {FamilyId::W3, "", "s1 r1"},
        {FamilyId::W4, "", "s1 r1"},
        {FamilyId::W5, "", "s1"},
    };
  }
  std::vector<CheckResult> out;
  for (const auto& e : entries) {
    auto reports = analysis::faithfulness_check(reps::build_rep(e.id, e.params, 4));
    const analysis::FaithfulnessReport* hit = nullptr;
    for (const auto& r : reports)
      if (r.word == e.witness) hit = &r;
    std::string id = "unfaithful/" + reps::to_string(e.id);
    if (!hit) {
      out.push_back(fail(id, std::string("witness ") + e.witness + " not in catalog"));
      continue;
    }
    bool ok = hit->image_is_identity && !hit->evidence_kind.empty() &&
              hit->evidence_kind != "asserted-by-paper";
    std::ostringstream d;
    d << e.witness;
    if (*e.params) d << " at " << e.params;
    d << " -> identity; " << hit->evidence_kind << " " << hit->evidence_detail;
    out.push_back(outcome(id, ok,
                          ok ? d.str()
                             : std::string(e.witness) + ": image identity=" +
                                   (hit->image_is_identity ? "yes" : "no") + ", evidence=" +
                                   hit->evidence_kind));
  }
  return out;
}

// ------------------------------------------------------ classical fixtures

std::vector<CheckResult> check_classical_fixtures() {
  std::vector<CheckResult> out;
  for (FamilyId id : {FamilyId::BURAU, FamilyId::F, FamilyId::N1, FamilyId::N2}) {
    for (int n : {4, 5, 6}) {
      auto report = analysis::verify_relations(reps::build_rep(id, "", n));
      out.push_back(outcome("classical/" + reps::to_string(id) + "/n=" + std::to_string(n),
                            report.all_pass(),
                            std::to_string(report.checks.size()) + " relations checked"));
    }
  }
  return out;
}

// ----------------------------------------------------------- property suite

std::vector<CheckResult> check_properties(uint64_t seed) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(seed + 1);

  // eval_hom multiplicativity on 200 random word pairs per group
  struct Probe {
    GroupTag tag;
    FamilyId id;
  };
  for (const Probe& probe : {Probe{GroupTag::B, FamilyId::BURAU}, Probe{GroupTag::T, FamilyId::T1},
                             Probe{GroupTag::VT, FamilyId::V1}, Probe{GroupTag::WT, FamilyId::W3}}) {
    int n = 5;
    reps::LocalRep rep = reps::build_rep(probe.id, "", n);
    auto images = rep.image_map();
    auto pres = groups::presentation(probe.tag, n);
    std::uniform_int_distribution<size_t> pick(0, pres.generators.size() - 1);
    std::uniform_int_distribution<int> len(0, 5), flip(0, 1);
    auto random_word = [&]() {
      std::vector<groups::Generator> gens;
      int L = len(rng);
      for (int i = 0; i < L; i++) {
        groups::Generator g = pres.generators[pick(rng)];
        if (probe.tag == GroupTag::B && flip(rng)) g.exponent = -1;
        gens.push_back(g);
      }
      return groups::GroupWord(std::move(gens), probe.tag);
    };
    bool ok = true;
    for (int trial = 0; trial < 200 && ok; trial++) {
      groups::GroupWord w1 = random_word(), w2 = random_word();
      ok = groups::eval_hom(w1 * w2, images) ==
           groups::eval_hom(w1, images) * groups::eval_hom(w2, images);
    }
    out.push_back(outcome("property/eval-hom/" + groups::to_string(probe.tag), ok,
                          "200 random word pairs"));
  }

  // block embedding: multiplicative at fixed position, disjoint blocks commute
  {
    std::uniform_int_distribution<long long> entry(-4, 4);
    auto rnd_core = [&]() {
      Matrix m(3);
      for (size_t i = 0; i < 3; i++)
        for (size_t j = 0; j < 3; j++) m.at(i, j) = Scalar::integer(entry(rng));
      return m;
    };
    bool mult = true, comm = true;
    for (int trial = 0; trial < 50; trial++) {
      Matrix a = rnd_core(), b = rnd_core();
      size_t n = 5 + trial % 3;
      size_t i = 1 + trial % (n - 1);
      mult &= la::block_embed(a * b, i, n) == la::block_embed(a, i, n) * la::block_embed(b, i, n);
      size_t j = 4 + trial % (n - 4);
      la::Matrix ea = la::block_embed(a, 1, n), eb = la::block_embed(b, j, n);
      comm &= ea * eb == eb * ea;
    }
    out.push_back(outcome("property/block-embed/multiplicative", mult, "50 random core pairs"));
    out.push_back(outcome("property/block-embed/disjoint-commute", comm, "50 random core pairs"));
  }

  // Smith normal form invariants
  {
    std::uniform_int_distribution<long long> entry(-3, 3);
    bool ok = true;
    for (int trial = 0; trial < 50 && ok; trial++) {
      size_t r = 1 + trial % 4, c = 1 + (trial / 3) % 4;
      groups::IntMat a(r, std::vector<long long>(c));
      for (auto& row : a)
        for (auto& x : row) x = entry(rng);
      auto snf = groups::smith_normal_form(a);
      ok &= groups::int_mul(groups::int_mul(snf.u, snf.s), snf.v) == a;
      ok &= std::llabs(groups::int_det(snf.u)) == 1 && std::llabs(groups::int_det(snf.v)) == 1;
      for (size_t k = 0; k + 1 < std::min(r, c); k++)
        if (snf.s[k][k] != 0 && snf.s[k + 1][k + 1] != 0)
          ok &= snf.s[k + 1][k + 1] % snf.s[k][k] == 0;
    }
    out.push_back(outcome("property/snf", ok, "recomposition, unimodularity, divisibility chain"));
  }

  // Scalar canonical-form idempotence on 1000 random expressions
  {
    Ctx base = RingContext::make({"d", "f", "h"});
    Ctx ctx = base->adjoin_radical("r", exact::parse_scalar(base, "1 - f*h"));
    std::uniform_int_distribution<int> op(0, 5);
    std::uniform_int_distribution<long long> c(-6, 6);
    std::uniform_int_distribution<size_t> v(0, ctx->size() - 1);
    std::function<Scalar(int)> rnd_expr = [&](int depth) -> Scalar {
      int o = depth == 0 ? op(rng) % 2 : op(rng);
      switch (o) {
        case 0: return Scalar::integer(c(rng));
        case 1: return Scalar::var(ctx, v(rng));
        case 2: return rnd_expr(depth - 1) + rnd_expr(depth - 1);
        case 3: return rnd_expr(depth - 1) - rnd_expr(depth - 1);
        case 4: return rnd_expr(depth - 1) * rnd_expr(depth - 1);
        default: {
          Scalar den = rnd_expr(depth - 1);
          return den.is_zero() ? rnd_expr(depth - 1) : rnd_expr(depth - 1) / den;
        }
      }
    };
    bool ok = true;
    int done = 0;
    while (done < 1000) {
      Scalar x;
      try {
        x = rnd_expr(3);
      } catch (const Error&) {
        continue;  // zero-divisor division drawn
      }
      Scalar renorm = Scalar::from_fraction(ctx, x.num(), x.den());
      ok &= renorm.num() == x.num() && renorm.den() == x.den();
      ok &= exact::parse_scalar(ctx, exact::to_string(x)) == x;
      done++;
      if (!ok) break;
    }
    out.push_back(outcome("property/scalar-idempotence", ok, "1000 random expressions"));
  }
  return out;
}

// ------------------------------------------------------------ suite runner

const std::vector<std::string>& suite_selectors() {
  static const std::vector<std::string> sel = {"3.1", "3.2", "3.3", "3.4",  "3.5",
                                               "3.6", "3.8", "4.1", "4.2",  "4.3",
                                               "4.4", "4.5", "defs-2.6-2.9", "all"};
  return sel;
}

bool RunReport::all_ok() const {
  for (const auto& c : checks)
    if (c.status == "fail") return false;
  return true;
}

std::string RunReport::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["selector"] = selector;
  j["seed"] = seed;
  j["n"] = n;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    arr.push_back(nlohmann::ordered_json{{"id", c.id}, {"status", c.status}, {"detail", c.detail}});
  j["checks"] = std::move(arr);
  j["ok"] = all_ok();
  return j.dump(2);
}

RunReport RunReport::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  RunReport r;
  r.command = j.at("command").get<std::string>();
  r.selector = j.at("selector").get<std::string>();
  r.seed = j.at("seed").get<uint64_t>();
  r.n = j.at("n").get<int>();
  for (const auto& c : j.at("checks"))
    r.checks.push_back(CheckResult{c.at("id").get<std::string>(), c.at("status").get<std::string>(),
                                   c.at("detail").get<std::string>()});
  return r;
}

RunReport run_theorem_suite(const std::string& selector, const SuiteOptions& opts) {
  bool known = false;
  for (const auto& s : suite_selectors()) known |= s == selector;
  if (!known) throw Error("unknown suite selector: " + selector);

  RunReport report;
  report.selector = selector;
  report.seed = opts.seed;
  report.n = opts.n;

  std::vector<int> ns;
  for (int n = 4; n <= std::max(4, opts.n); n++) ns.push_back(n);

  auto want = [&](const std::string& s) { return selector == "all" || selector == s; };
  auto add = [&](std::vector<CheckResult> more) {
    for (auto& c : more) report.checks.push_back(std::move(c));
  };
  auto add_or_skip = [&](const std::string& sel, const std::string& group, auto&& fn) {
    if (!want(sel)) return;
    if (opts.self_test) {
      report.checks.push_back(CheckResult{sel + "/" + group, "skipped", "empty catalog (self-test)"});
      return;
    }
    add(fn());
  };

  add_or_skip("3.1", "relations", [&] { return check_relations(GroupTag::T, ns); });
  add_or_skip("3.1", "mutation", [&] { return check_mutation_detection(); });
  add_or_skip("3.1", "constraints", [&] { return check_constraints(); });
  add_or_skip("3.1", "completeness", [&] { return check_completeness(500, opts.seed); });
  auto anchors_with_prefix = [&](const std::string& prefix) {
    std::vector<CheckResult> filtered;
    for (auto& c : check_reducibility_anchors())
      if (c.id.rfind("anchor/" + prefix, 0) == 0) filtered.push_back(std::move(c));
    return filtered;
  };
  add_or_skip("3.2", "reducibility", [&] { return check_reducibility(GroupTag::T, ns); });
  add_or_skip("3.2", "anchors", [&] { return anchors_with_prefix("tau"); });
  add_or_skip("3.3", "factor", [&] { return check_factor_chain_tau1(); });
  add_or_skip("3.4", "grid", [&] { return check_meataxe_tau1_grid(opts.seed); });
  if (want("3.5") || want("3.6")) {
    if (opts.self_test) {
      report.checks.push_back(CheckResult{"3.5/factor", "skipped", "empty catalog (self-test)"});
    } else {
      auto chain = check_factor_chain_tau2();
      for (auto& c : chain) {
        bool is35 = c.id.rfind("3.5", 0) == 0;
        if ((is35 && want("3.5")) || (!is35 && want("3.6"))) report.checks.push_back(std::move(c));
      }
    }
  }
  add_or_skip("3.8", "grid", [&] { return check_meataxe_tau2_grid(opts.seed); });
  add_or_skip("4.1", "relations", [&] { return check_relations(GroupTag::VT, ns); });
  add_or_skip("4.2", "relations", [&] { return check_relations(GroupTag::WT, ns); });
  add_or_skip("4.3", "reducibility", [&] {
    auto vt = check_reducibility(GroupTag::VT, ns);
    auto wt = check_reducibility(GroupTag::WT, ns);
    vt.insert(vt.end(), wt.begin(), wt.end());
    return vt;
  });
  add_or_skip("4.3", "anchors", [&] { return anchors_with_prefix("delta"); });
  add_or_skip("4.4", "witnesses", [&] { return check_faithfulness_catalog(GroupTag::VT); });
  add_or_skip("4.5", "witnesses", [&] { return check_faithfulness_catalog(GroupTag::WT); });
  add_or_skip("defs-2.6-2.9", "classical", [&] { return check_classical_fixtures(); });
  return report;
}

}  // namespace twinrep::cli
