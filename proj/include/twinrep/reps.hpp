#ifndef TWINREP_REPS_HPP
#define TWINREP_REPS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twinrep/groups.hpp"
#include "twinrep/matrix.hpp"

namespace twinrep::reps {

using exact::Ctx;
using exact::Rat;
using exact::Scalar;
using groups::GroupTag;

enum class FamilyId {
  T1, T2, T3, T4, T5, T6, T7, T8, T9, T10, T11,
  V1, V2, V3, V4, V5, V6, V7, V8, V9, V10, V11, V12, V13, V14,
  W1, W2, W3, W4, W5,
  BURAU, F, N1, N2,
};

std::string to_string(FamilyId id);
FamilyId family_from_string(const std::string& name);

struct ParamSpec {
  std::string name;
  bool nonzero = false;
};

/// One catalog entry: the s-generator core template M (and the rho core N
/// for the virtual/welded families), over a symbolic context holding the
/// family parameters and any required square-root symbol.
struct FamilyDescriptor {
  FamilyId id;
  GroupTag tag;
  int locality;  // block size k
  std::vector<ParamSpec> params;
  std::string radical;           // "" when none
  std::string radicand_text;     // for display
  Ctx ctx;
  la::Matrix core_m;
  std::optional<la::Matrix> core_n;

  bool has_param(const std::string& name) const;
};

const std::vector<FamilyDescriptor>& catalog();
const FamilyDescriptor& family(FamilyId id);

/// A homogeneous k-local representation: block-embedded cores at positions
/// 1..n-1.  Parameters may be fully symbolic, partially substituted, or
/// rational.
struct LocalRep {
  FamilyId id;
  GroupTag tag;
  int n;
  int k;
  size_t dim;
  la::Matrix core_m;
  std::optional<la::Matrix> core_n;
  std::map<std::string, std::string> param_echo;

  la::Matrix image(const groups::Generator& g) const;
  groups::ImageMap image_map() const;
  std::string label() const;
};

/// Values may be rational constants or scalar expressions in the family's
/// other parameters (e.g. d = 1/p).  Unlisted parameters stay symbolic.
/// Violated nonzero constraints and radicands that specialize to
/// non-squares are rejected.
LocalRep build_rep(FamilyId id, const std::map<std::string, Scalar>& params, int n);
/// Convenience: parse "d=3,f=1/4" style assignments over the family context.
LocalRep build_rep(FamilyId id, const std::string& params_text, int n);
std::map<std::string, Scalar> parse_params(FamilyId id, const std::string& params_text);

/// A not-necessarily-local matrix representation (composition factors land
/// here).
struct Rep {
  GroupTag tag;
  int n;
  size_t dim;
  groups::ImageMap images;
  std::string label;
};
Rep to_rep(const LocalRep& rep);

struct FamilyMatch {
  FamilyId id;
  std::map<std::string, Rat> params;
};

struct MatchResult {
  bool involution_ok = true;  // false: core fails core^2 = I, not a solution
  std::vector<FamilyMatch> matches;
};

/// All catalog families (of the given group, locality 3) whose template
/// equals the specialized core(s) under some admissible parameter
/// assignment.  Overlapping families yield multiple matches.
MatchResult match_family(const la::Matrix& core_m, const std::optional<la::Matrix>& core_n,
                         GroupTag tag);

}  // namespace twinrep::reps

#endif
