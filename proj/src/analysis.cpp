#include "twinrep/analysis.hpp"

#include <sstream>

#include "twinrep/error.hpp"
#include "twinrep/scalar_io.hpp"

namespace twinrep::analysis {

bool RelationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

RelationReport verify_relations(const reps::Rep& rep) {
  RelationReport report;
  report.rep_label = rep.label;
  auto pres = groups::presentation(rep.tag, rep.n);
  for (const auto& rel : pres.relations) {
    la::Matrix lhs = groups::eval_hom(std::span<const groups::Generator>(rel.lhs), rep.images);
    la::Matrix rhs = groups::eval_hom(std::span<const groups::Generator>(rel.rhs), rep.images);
    RelationCheck check{rel.name, lhs == rhs, {}};
    if (!check.pass) {
      la::Matrix res = lhs - rhs;
      for (size_t i = 0; i < res.dim(); i++)
        for (size_t j = 0; j < res.dim(); j++)
          if (!res.at(i, j).is_zero()) {
            std::ostringstream e;
            e << "(" << i + 1 << "," << j + 1 << ") = " << exact::to_string(res.at(i, j));
            check.residuals.push_back(e.str());
          }
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

RelationReport verify_relations(const reps::LocalRep& rep) {
  return verify_relations(reps::to_rep(rep));
}

std::string ReducibilityCertificate::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::InvariantVector: out << "invariant vector "; break;
    case Kind::InvariantCovector: out << "invariant covector "; break;
    case Kind::InvariantSubspace: out << "invariant subspace dim " << basis.size() << " "; break;
  }
  for (const auto& v : basis) out << la::to_string(v) << " ";
  out << "signs (";
  for (size_t i = 0; i < eigen_signs.size(); i++) out << (i ? "," : "") << eigen_signs[i];
  out << ")";
  if (geometric) out << " geometric";
  return out.str();
}

bool any_unfaithful_witness(const std::vector<FaithfulnessReport>& reports) {
  for (const auto& r : reports)
    if (r.establishes_unfaithful) return true;
  return false;
}

}  // namespace twinrep::analysis
