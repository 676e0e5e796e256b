#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <json.hpp>

#include "twinrep/analysis.hpp"
#include "twinrep/error.hpp"
#include "twinrep/scalar_io.hpp"
#include "twinrep/suite.hpp"

using namespace twinrep;
using exact::Scalar;
using groups::GroupTag;
using la::Matrix;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDiscrepancy = 2;

uint64_t effective_seed(uint64_t flag_seed) {
  // TWINREP_SEED overrides --seed when set
  if (const char* env = std::getenv("TWINREP_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw Error("TWINREP_SEED must be an unsigned integer");
    }
  }
  return flag_seed;
}

int clamp_n(int n) {
  if (n < 4 || n > 8) throw Error("-n must lie in 4..8");
  return n;
}

Matrix parse_core_arg(const std::string& text) {
  auto ctx = exact::RingContext::make({});
  std::vector<la::Vec> rows;
  size_t start = 0;
  for (size_t i = 0; i <= text.size(); i++) {
    if (i != text.size() && text[i] != ';') continue;
    std::string row = text.substr(start, i - start);
    start = i + 1;
    la::Vec v;
    size_t rs = 0;
    for (size_t j = 0; j <= row.size(); j++) {
      if (j != row.size() && row[j] != ',') continue;
      v.push_back(exact::parse_scalar(ctx, row.substr(rs, j - rs)));
      rs = j + 1;
    }
    rows.push_back(std::move(v));
  }
  return Matrix::from_rows(std::move(rows));
}

ordered_json matrix_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (size_t i = 0; i < m.dim(); i++) {
    ordered_json row = ordered_json::array();
    for (size_t j = 0; j < m.dim(); j++) row.push_back(exact::to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return ordered_json{{"dim", m.dim()}, {"entries", std::move(rows)}};
}

ordered_json vec_json(const la::Vec& v) {
  ordered_json out = ordered_json::array();
  for (const auto& s : v) out.push_back(exact::to_string(s));
  return out;
}

void print_rep(const reps::LocalRep& rep, bool json) {
  if (json) {
    ordered_json j;
    j["family"] = reps::to_string(rep.id);
    j["group"] = groups::to_string(rep.tag);
    j["n"] = rep.n;
    j["locality"] = rep.k;
    j["dim"] = rep.dim;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : rep.param_echo) params[k] = v;
    j["params"] = std::move(params);
    j["core_m"] = matrix_json(rep.core_m);
    if (rep.core_n) j["core_n"] = matrix_json(*rep.core_n);
    ordered_json images = ordered_json::object();
    for (const auto& g : groups::presentation(rep.tag, rep.n).generators)
      images[groups::to_string(g)] = matrix_json(rep.image(g));
    j["images"] = std::move(images);
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << rep.label() << "  (" << groups::to_string(rep.tag) << "_" << rep.n << " -> GL_"
            << rep.dim << ")\n";
  std::cout << "core M:\n" << rep.core_m.to_pretty_string();
  if (rep.core_n) std::cout << "core N:\n" << rep.core_n->to_pretty_string();
  for (const auto& g : groups::presentation(rep.tag, rep.n).generators)
    std::cout << "image of " << groups::to_string(g) << ":\n" << rep.image(g).to_pretty_string();
}

int report_and_exit_code(const cli::RunReport& report, bool json, double seconds) {
  if (json) {
    std::cout << report.to_json() << "\n";
  } else {
    for (const auto& c : report.checks)
      std::cout << "[" << c.status << "] " << c.id << (c.detail.empty() ? "" : " - " + c.detail)
                << "\n";
    int failed = 0;
    for (const auto& c : report.checks) failed += c.status == "fail";
    std::cout << report.checks.size() << " checks, " << failed << " failed";
    std::cout << "  (" << seconds << "s)\n";
  }
  return report.all_ok() ? kExitOk : kExitDiscrepancy;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for homogeneous 3-local twin representations"};
  app.require_subcommand(1);

  std::string family_name, params_text, word_text, selector, core_text, core_n_text, derived;
  std::string side = "both", vector_text;
  std::string group_name = "T";
  int n = 4, samples = 0, index = -1;
  uint64_t seed = 0;
  bool json = false, self_test = false;

  auto add_common = [&](CLI::App* cmd, bool with_family = true) {
    if (with_family) cmd->add_option("--family", family_name, "catalog family id (T1..T11, V1..V14, W1..W5, BURAU, F, N1, N2)");
    cmd->add_option("--params", params_text, "parameter assignment, e.g. d=3,f=1/4");
    cmd->add_option("-n", n, "strand count (4..8)");
    cmd->add_option("--seed", seed, "random seed (TWINREP_SEED overrides)");
    cmd->add_flag("--json", json, "machine-readable output");
  };

  auto* show = app.add_subcommand("show", "print a family's cores and generator images");
  show->add_option("family", family_name)->required();
  add_common(show, false);

  auto* verify = app.add_subcommand("verify", "check every defining relation symbolically");
  add_common(verify);

  auto* constraints = app.add_subcommand("constraints", "regenerate the local classification equations");
  constraints->add_option("--group", group_name, "T, VT or WT");
  add_common(constraints);

  auto* classify = app.add_subcommand("classify", "match cores against the catalog");
  classify->add_option("--group", group_name, "T, VT or WT");
  classify->add_option("--core", core_text, "3x3 core, rows ';'-separated: 1,0,0;2,-1,3;0,0,1");
  classify->add_option("--coreN", core_n_text, "rho core for VT/WT");
  classify->add_option("--samples", samples, "sample this many constraint solutions and classify them");
  add_common(classify);

  auto* lines = app.add_subcommand("invariant-lines", "common invariant lines of the images");
  add_common(lines);
  lines->add_option("--side", side, "column, row or both");

  auto* factor = app.add_subcommand("factor", "composition factor along an invariant line");
  add_common(factor);
  factor->add_option("--side", side, "column or row (default column)");
  factor->add_option("--index", index, "certificate index from invariant-lines (default: first line)");
  factor->add_option("--vector", vector_text, "explicit certificate vector, comma-separated");

  auto* irr = app.add_subcommand("irreducible", "meataxe verdict at a full specialization");
  add_common(irr);
  irr->add_option("--derived", derived,
                  "tau1-factor, tau2-factor or tau2-factor2 (the studied composition factors)");

  auto* faith = app.add_subcommand("faithfulness", "witness words with identity image");
  add_common(faith);

  auto* eval = app.add_subcommand("eval", "evaluate a word under a representation and the quotients");
  eval->add_option("word", word_text)->required();
  add_common(eval);

  auto* suite = app.add_subcommand("suite", "run the verification suite for one statement");
  suite->add_option("selector", selector,
                    "3.1 3.2 3.3 3.4 3.5 3.6 3.8 4.1 4.2 4.3 4.4 4.5 defs-2.6-2.9 all")
      ->required();
  suite->add_option("-n", n);
  suite->add_option("--seed", seed);
  suite->add_flag("--json", json);
  suite->add_flag("--self-test", self_test, "run against an empty catalog; everything skips");

  CLI11_PARSE(app, argc, argv);

  try {
    uint64_t rng_seed = effective_seed(seed);
    clamp_n(n);

    if (show->parsed()) {
      print_rep(reps::build_rep(reps::family_from_string(family_name), params_text, n), json);
      return kExitOk;
    }

    if (verify->parsed()) {
      if (family_name.empty()) throw Error("verify needs --family");
      auto rep = reps::build_rep(reps::family_from_string(family_name), params_text, n);
      auto report = analysis::verify_relations(rep);
      if (json) {
        ordered_json j;
        j["rep"] = report.rep_label;
        ordered_json checks = ordered_json::array();
        for (const auto& c : report.checks) {
          ordered_json e{{"relation", c.relation}, {"pass", c.pass}};
          if (!c.residuals.empty()) e["residuals"] = c.residuals;
          checks.push_back(std::move(e));
        }
        j["checks"] = std::move(checks);
        j["ok"] = report.all_pass();
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& c : report.checks) {
          std::cout << (c.pass ? "[pass] " : "[FAIL] ") << c.relation << "\n";
          for (const auto& r : c.residuals) std::cout << "        residual " << r << "\n";
        }
      }
      return report.all_pass() ? kExitOk : kExitDiscrepancy;
    }

    if (constraints->parsed()) {
      auto tag = groups::group_tag_from_string(group_name);
      auto sys = analysis::derive_local_constraints(tag);
      bool consistent = true;
      std::string note;
      if (tag == GroupTag::T) {
        auto expected = analysis::reference_t_constraints(sys.ctx);
        consistent = sys.equations.size() == expected.size();
        for (size_t i = 0; consistent && i < expected.size(); i++)
          consistent = sys.equations[i].poly == expected[i];
        note = consistent ? "matches the thirteen displayed equations"
                          : "differs from the displayed equations";
      } else {
        for (const auto& d : reps::catalog())
          if (d.tag == tag && d.locality == 3)
            consistent &= analysis::satisfies(sys, d.core_m, d.core_n);
        note = consistent ? "every catalog family annihilates the system"
                          : "some catalog family violates the system";
      }
      if (json) {
        ordered_json j;
        j["group"] = groups::to_string(tag);
        j["forced_zero"] = sys.forced_zero;
        ordered_json eqs = ordered_json::array();
        for (const auto& e : sys.equations)
          eqs.push_back(ordered_json{{"equation", exact::to_string(e.poly, sys.ctx) + " = 0"},
                                     {"from", e.provenance}});
        j["equations"] = std::move(eqs);
        j["consistent"] = consistent;
        j["note"] = note;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "forced to vanish:";
        for (const auto& v : sys.forced_zero) std::cout << " " << v;
        std::cout << "\n";
        for (const auto& e : sys.equations)
          std::cout << exact::to_string(e.poly, sys.ctx) << " = 0    [" << e.provenance << "]\n";
        std::cout << note << "\n";
      }
      return consistent ? kExitOk : kExitDiscrepancy;
    }

    if (classify->parsed()) {
      auto tag = groups::group_tag_from_string(group_name);
      ordered_json out = ordered_json::array();
      bool all_matched = true;
      auto classify_one = [&](const Matrix& m, const std::optional<Matrix>& nn) {
        auto res = reps::match_family(m, nn, tag);
        ordered_json rec;
        rec["core"] = matrix_json(m);
        rec["involution"] = res.involution_ok;
        ordered_json ms = ordered_json::array();
        for (const auto& match : res.matches) {
          ordered_json pm = ordered_json::object();
          for (const auto& [k, v] : match.params) {
            std::ostringstream vs;
            vs << v;
            pm[k] = vs.str();
          }
          ms.push_back(ordered_json{{"family", reps::to_string(match.id)}, {"params", pm}});
        }
        rec["matches"] = std::move(ms);
        all_matched &= res.involution_ok && !res.matches.empty();
        out.push_back(std::move(rec));
      };
      if (!core_text.empty()) {
        std::optional<Matrix> nn;
        if (!core_n_text.empty()) nn = parse_core_arg(core_n_text);
        classify_one(parse_core_arg(core_text), nn);
      } else if (samples > 0) {
        auto sys = analysis::derive_local_constraints();
        for (const auto& core : analysis::solution_samples(sys, samples, rng_seed))
          classify_one(core, std::nullopt);
      } else {
        throw Error("classify needs --core or --samples");
      }
      if (json) {
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto& rec : out) {
          if (!rec["involution"].get<bool>()) {
            std::cout << "not a solution (core is not an involution)\n";
            continue;
          }
          std::cout << "matches:";
          for (const auto& m : rec["matches"]) {
            std::cout << " " << m["family"].get<std::string>() << "(";
            bool first = true;
            for (auto it = m["params"].begin(); it != m["params"].end(); ++it) {
              if (!first) std::cout << ",";
              std::cout << it.key() << "=" << it.value().get<std::string>();
              first = false;
            }
            std::cout << ")";
          }
          std::cout << "\n";
        }
      }
      return all_matched ? kExitOk : kExitDiscrepancy;
    }

    if (lines->parsed()) {
      if (family_name.empty()) throw Error("invariant-lines needs --family");
      auto rep = reps::build_rep(reps::family_from_string(family_name), params_text, n);
      ordered_json out = ordered_json::array();
      for (analysis::Side s : {analysis::Side::Column, analysis::Side::Row}) {
        if (side == "column" && s == analysis::Side::Row) continue;
        if (side == "row" && s == analysis::Side::Column) continue;
        auto certs = analysis::invariant_lines(rep, s);
        for (const auto& c : certs) {
          if (json) {
            ordered_json e;
            e["side"] = s == analysis::Side::Column ? "column" : "row";
            e["kind"] = c.kind == analysis::ReducibilityCertificate::Kind::InvariantSubspace
                            ? "invariant-subspace"
                            : (s == analysis::Side::Column ? "invariant-vector"
                                                           : "invariant-covector");
            ordered_json basis = ordered_json::array();
            for (const auto& v : c.basis) basis.push_back(vec_json(v));
            e["basis"] = std::move(basis);
            e["eigen_signs"] = c.eigen_signs;
            e["geometric"] = c.geometric;
            out.push_back(std::move(e));
          } else {
            std::cout << (s == analysis::Side::Column ? "column: " : "row:    ") << c.describe()
                      << "\n";
          }
        }
      }
      if (json) std::cout << out.dump(2) << "\n";
      return kExitOk;
    }

    if (factor->parsed()) {
      if (family_name.empty()) throw Error("factor needs --family");
      auto rep = reps::build_rep(reps::family_from_string(family_name), params_text, n);
      auto s = side == "row" ? analysis::Side::Row : analysis::Side::Column;
      auto certs = analysis::invariant_lines(rep, s);
      const analysis::ReducibilityCertificate* chosen = nullptr;
      if (!vector_text.empty()) {
        la::Vec v;
        auto ctx = rep.core_m.ctx();
        size_t start = 0;
        for (size_t i = 0; i <= vector_text.size(); i++)
          if (i == vector_text.size() || vector_text[i] == ',') {
            v.push_back(exact::parse_scalar(ctx ? ctx : exact::RingContext::make({}),
                                            vector_text.substr(start, i - start)));
            start = i + 1;
          }
        analysis::ReducibilityCertificate cert{
            s == analysis::Side::Column
                ? analysis::ReducibilityCertificate::Kind::InvariantVector
                : analysis::ReducibilityCertificate::Kind::InvariantCovector,
            s,
            {v},
            {},
            false};
        // recover the eigenvalue signs from the images
        auto pres = groups::presentation(rep.tag, rep.n);
        auto images = rep.image_map();
        for (const auto& g : pres.generators) {
          Matrix img = images.image(g.kind, g.index);
          if (s == analysis::Side::Row) img = img.transpose();
          la::Vec w = img.apply(v);
          cert.eigen_signs.push_back(vec_json(w) == vec_json(v) ? 1 : -1);
        }
        auto out = analysis::composition_factor(reps::to_rep(rep), cert);
        for (const auto& g : pres.generators)
          std::cout << "factor image of " << groups::to_string(g) << ":\n"
                    << out.images.image(g.kind, g.index).to_pretty_string();
        return kExitOk;
      }
      size_t want = index >= 0 ? static_cast<size_t>(index) : 0;
      size_t seen = 0;
      for (const auto& c : certs) {
        if (c.basis.size() != 1) continue;
        if (seen++ == want) {
          chosen = &c;
          break;
        }
      }
      if (!chosen) throw Error("no line certificate at that index");
      auto out = analysis::composition_factor(reps::to_rep(rep), *chosen);
      std::cout << "factored along " << chosen->describe() << "\n";
      for (const auto& g : groups::presentation(rep.tag, rep.n).generators)
        std::cout << "factor image of " << groups::to_string(g) << ":\n"
                  << out.images.image(g.kind, g.index).to_pretty_string();
      return kExitOk;
    }

    if (irr->parsed()) {
      reps::Rep rep;
      if (!derived.empty()) {
        // rebuild the studied composition factors at the given parameters
        auto parse_two = [&](const char* a, const char* b, reps::FamilyId fid) {
          auto params = reps::parse_params(fid, params_text);
          if (!params.count(a) || !params.count(b))
            throw Error(std::string("--derived needs --params with ") + a + " and " + b);
          return params;
        };
        if (derived == "tau1-factor") {
          auto params = parse_two("d", "f", reps::FamilyId::T1);
          auto ctx = exact::RingContext::make({"d", "f"});
          std::map<std::string, exact::Rat> spec_map;
          for (auto& [k, v] : params) spec_map[k] = v.rational_value();
          auto spec = ctx->specialized(spec_map);
          std::vector<std::vector<std::string>> rows = {
              {"-1,f,0", "0,1,0", "0,0,1"},
              {"1,0,0", "d,-1,f", "0,0,1"},
              {"1,0,0", "0,1,0", "0,d,-1"},
          };
          rep = reps::Rep{GroupTag::T, 4, 3, {}, "tau1 composition factor"};
          for (int i = 1; i <= 3; i++) {
            std::vector<la::Vec> mat;
            for (const auto& row : rows[static_cast<size_t>(i - 1)]) {
              la::Vec v;
              size_t start = 0;
              for (size_t j = 0; j <= row.size(); j++)
                if (j == row.size() || row[j] == ',') {
                  v.push_back(exact::parse_scalar(ctx, row.substr(start, j - start)).specialize(spec));
                  start = j + 1;
                }
              mat.push_back(std::move(v));
            }
            rep.images.set(groups::GenKind::S, i, Matrix::from_rows(std::move(mat)));
          }
        } else {
          throw Error("--derived supports tau1-factor (tau2 factors: use suite 3.8)");
        }
      } else {
        if (family_name.empty()) throw Error("irreducible needs --family or --derived");
        auto local = reps::build_rep(reps::family_from_string(family_name), params_text, n);
        rep = reps::to_rep(local);
      }
      auto verdict = analysis::meataxe_irreducible(rep, rng_seed);
      if (json) {
        ordered_json j;
        j["rep"] = rep.label;
        j["irreducible"] = verdict.irreducible;
        j["evidence"] = verdict.evidence;
        if (!verdict.invariant_subspace.empty()) {
          ordered_json basis = ordered_json::array();
          for (const auto& v : verdict.invariant_subspace) basis.push_back(vec_json(v));
          j["invariant_subspace"] = std::move(basis);
        }
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << rep.label << ": " << (verdict.irreducible ? "irreducible" : "reducible")
                  << " (" << verdict.evidence << ")\n";
        for (const auto& v : verdict.invariant_subspace)
          std::cout << "  invariant: " << la::to_string(v) << "\n";
      }
      return kExitOk;
    }

    if (faith->parsed()) {
      if (family_name.empty()) throw Error("faithfulness needs --family");
      auto rep = reps::build_rep(reps::family_from_string(family_name), params_text, n);
      auto reports = analysis::faithfulness_check(rep);
      if (json) {
        ordered_json out = ordered_json::array();
        for (const auto& r : reports)
          out.push_back(ordered_json{{"word", r.word},
                                     {"image", matrix_json(r.image)},
                                     {"identity_image", r.image_is_identity},
                                     {"evidence", r.evidence_kind},
                                     {"detail", r.evidence_detail},
                                     {"unfaithful_witness", r.establishes_unfaithful}});
        std::cout << out.dump(2) << "\n";
      } else {
        bool any = false;
        for (const auto& r : reports) {
          if (!r.image_is_identity) continue;
          any = true;
          std::cout << "witness: " << r.word << " -> identity; " << r.evidence_kind << " "
                    << r.evidence_detail << "\n";
        }
        if (!any) std::cout << "no witness word maps to the identity at these parameters\n";
      }
      return kExitOk;
    }

    if (eval->parsed()) {
      if (family_name.empty()) throw Error("eval needs --family");
      auto rep = reps::build_rep(reps::family_from_string(family_name), params_text, n);
      auto word = groups::parse_word(word_text, rep.tag, rep.n);
      auto image = groups::eval_hom(word, rep.image_map());
      auto pres = groups::presentation(rep.tag, rep.n);
      if (json) {
        ordered_json j;
        j["word"] = groups::to_string(word);
        j["image"] = matrix_json(image);
        j["identity"] = image.is_identity();
        j["sym_image"] =
            groups::to_string(groups::sym_image(word, groups::SymMode::BothTransposition, pres));
        groups::AbelianQuotient ab(pres);
        j["abelianization"] = ab.reduced_image(word);
        j["abelianization_structure"] = ab.structure();
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "word: " << (word.empty() ? "(empty)" : groups::to_string(word)) << "\n";
        std::cout << image.to_pretty_string();
        std::cout << "sym image: "
                  << groups::to_string(
                         groups::sym_image(word, groups::SymMode::BothTransposition, pres))
                  << "\n";
        groups::AbelianQuotient ab(pres);
        auto cls = ab.reduced_image(word);
        std::cout << "abelianization (" << ab.structure() << "): (";
        for (size_t i = 0; i < cls.size(); i++) std::cout << (i ? "," : "") << cls[i];
        std::cout << ")\n";
      }
      return kExitOk;
    }

    if (suite->parsed()) {
      cli::SuiteOptions opts;
      opts.n = n;
      opts.seed = rng_seed;
      opts.self_test = self_test;
      auto t0 = std::chrono::steady_clock::now();
      cli::RunReport report = cli::run_theorem_suite(selector, opts);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::string cmd = "twinrep suite " + selector + " -n " + std::to_string(n) + " --seed " +
                        std::to_string(rng_seed) + (self_test ? " --self-test" : "");
      report.command = cmd;
      return report_and_exit_code(report, json, secs);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
