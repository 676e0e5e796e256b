#include <sstream>

#include "twinrep/analysis.hpp"
#include "twinrep/error.hpp"

namespace twinrep::analysis {

namespace {

using groups::GroupTag;
using groups::GroupWord;
using groups::SymMode;

std::string perm_detail(const groups::Perm& p) { return "maps to " + groups::to_string(p); }

}  // namespace

std::vector<FaithfulnessReport> faithfulness_check(const reps::LocalRep& rep) {
  if (rep.tag != GroupTag::VT && rep.tag != GroupTag::WT)
    throw Error("faithfulness witnesses cover the virtual and welded families");
  int n = rep.n;
  auto pres = groups::presentation(rep.tag, n);
  auto images = rep.image_map();
  la::Matrix id = la::Matrix::identity(rep.dim);

  std::vector<GroupWord> words;
  auto word = [&](const std::string& text) { return groups::parse_word(text, rep.tag, n); };
  for (int i = 1; i <= n - 2; i++) {
    std::string si = "s" + std::to_string(i), si1 = "s" + std::to_string(i + 1);
    std::string ri = "r" + std::to_string(i), ri1 = "r" + std::to_string(i + 1);
    words.push_back(word(si + " " + ri1).pow(4));
    words.push_back(word(si1 + " " + ri).pow(4));
    words.push_back(word(si + " " + si1).pow(2));
    words.push_back(word(si + " " + si1 + " " + si));
    // catches the weighted-transposition families: the h/p weights telescope
    // away while the s- and rho-parities stay odd
    words.push_back(word(si + " " + ri + " " + si1 + " " + ri + " " + si + " " + ri1));
  }
  for (int i = 1; i <= n - 1; i++) {
    std::string si = "s" + std::to_string(i), ri = "r" + std::to_string(i);
    words.push_back(word(si + " " + ri));
    words.push_back(word(si));
    words.push_back(word(ri));
  }

  groups::SymQuotient both(pres, SymMode::BothTransposition);
  groups::AbelianQuotient ab(pres);
  std::optional<groups::SymQuotient> rho_only;
  if (rep.tag == GroupTag::VT) rho_only.emplace(pres, SymMode::RhoOnly);

  std::vector<FaithfulnessReport> out;
  for (const auto& w : words) {
    if (w.empty()) continue;
    FaithfulnessReport rec{groups::to_string(w), groups::eval_hom(w, images), false, "", "", false};
    rec.image_is_identity = rec.image == id;
    if (rec.image_is_identity) {
      groups::Perm p = both.image(w);
      if (!groups::is_identity_perm(p)) {
        rec.evidence_kind = "sym_image";
        rec.evidence_detail = perm_detail(p);
      } else if (!ab.is_trivial_image(w)) {
        std::ostringstream d;
        d << "class (";
        auto img = ab.reduced_image(w);
        for (size_t i = 0; i < img.size(); i++) d << (i ? "," : "") << img[i];
        d << ") != 0 in " << ab.structure();
        rec.evidence_kind = "abelianization";
        rec.evidence_detail = d.str();
      } else if (rho_only) {
        groups::Perm q = rho_only->image(w);
        if (!groups::is_identity_perm(q)) {
          rec.evidence_kind = "sym_image(rho_only)";
          rec.evidence_detail = perm_detail(q);
        }
      }
      if (rec.evidence_kind.empty()) {
        rec.evidence_kind = "asserted-by-paper";
        rec.evidence_detail = "no implemented quotient separates this word";
      }
      rec.establishes_unfaithful = true;
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace twinrep::analysis
