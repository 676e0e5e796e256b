#ifndef TWINREP_ANALYSIS_HPP
#define TWINREP_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twinrep/reps.hpp"

namespace twinrep::analysis {

using exact::Ctx;
using exact::Poly;
using exact::Scalar;

// ------------------------------------------------------- relation checking

struct RelationCheck {
  std::string relation;
  bool pass;
  std::vector<std::string> residuals;  // nonzero (row,col)=value entries on failure
};

struct RelationReport {
  std::string rep_label;
  std::vector<RelationCheck> checks;
  bool all_pass() const;
};

RelationReport verify_relations(const reps::Rep& rep);
RelationReport verify_relations(const reps::LocalRep& rep);

// ------------------------------------------------------ constraint systems

struct ConstraintEquation {
  Poly poly;
  std::string provenance;
};

/// Polynomial equations a generic homogeneous 3-local core (or core pair)
/// must satisfy, derived from one involution relation and one far
/// commutation (plus the rho and mixed relations for VT/WT).  `equations`
/// holds the canonical deduplicated set after substituting the variables
/// that are directly forced to vanish.
struct ConstraintSystem {
  groups::GroupTag tag;
  Ctx ctx;
  std::vector<ConstraintEquation> raw;
  std::vector<std::string> forced_zero;
  std::vector<ConstraintEquation> equations;
};

ConstraintSystem derive_local_constraints(groups::GroupTag tag = groups::GroupTag::T, int k = 3,
                                          int position_a = 1, int position_b = 3, int n = 4);

/// The thirteen equations displayed in the source classification for the
/// twin-group case, over the same generic-entry context; sign-normalized
/// for set comparison.
std::vector<Poly> reference_t_constraints(const Ctx& ctx);

/// Seeded random rational solutions of the twin-group constraint system,
/// drawn from the case branches of the classification proof.  Every emitted
/// core satisfies the system exactly (asserted internally).
std::vector<la::Matrix> solution_samples(const ConstraintSystem& system, int count, uint64_t seed);

/// Does a specialized 3x3 core (pair) satisfy the system?
bool satisfies(const ConstraintSystem& system, const la::Matrix& core_m,
               const std::optional<la::Matrix>& core_n = std::nullopt);

// -------------------------------------------------------- invariant lines

enum class Side { Column, Row };

struct ReducibilityCertificate {
  enum class Kind { InvariantVector, InvariantCovector, InvariantSubspace };
  Kind kind;
  Side side;
  std::vector<la::Vec> basis;    // one vector for lines; RREF rows otherwise
  std::vector<int> eigen_signs;  // per presentation generator
  bool geometric = false;        // line of the shape (1, x, x^2, ...)
  std::string describe() const;
};

/// Common one-dimensional invariant subspaces of the generator images (or of
/// their transposes for Side::Row), found by intersecting eigenspaces over
/// all sign patterns.  When a common eigenspace has dimension >= 2 every
/// line inside it is invariant; the certificate then carries the full RREF
/// basis and each basis vector is also emitted as a line, together with any
/// geometric lines (1, x, x^2, ...) that lie in the space.  Images must be
/// involutions; the meataxe covers the non-involutive representations.
std::vector<ReducibilityCertificate> invariant_lines(const reps::Rep& rep, Side side);
std::vector<ReducibilityCertificate> invariant_lines(const reps::LocalRep& rep, Side side);

/// Zero-residual re-verification of a certificate against the images.
bool verify_certificate(const reps::Rep& rep, const ReducibilityCertificate& cert);

// ----------------------------------------------------- composition factors

/// Change basis to {v, complementary standard vectors} and delete the fixed
/// row and column (for a row certificate the construction runs on the
/// transposes).  The result is re-verified to satisfy every presentation
/// relation.
reps::Rep composition_factor(const reps::Rep& rep, const ReducibilityCertificate& cert);

// ------------------------------------------------------------------ meataxe

struct MeatAxeResult {
  bool irreducible;
  std::vector<la::Vec> invariant_subspace;  // proper nonzero; empty iff irreducible
  std::string evidence;
};

/// Norton-style irreducibility test over Q for fully specialized
/// representations of dimension <= 8: spin null vectors of singular algebra
/// elements, with the dual check, plus a deterministic exhaustive fallback
/// (eigenline candidates and their duals) that settles every dimension <= 3
/// input without randomness.
MeatAxeResult meataxe_irreducible(const reps::Rep& rep, uint64_t seed = 0);

// -------------------------------------------------------------- faithfulness

struct FaithfulnessReport {
  std::string word;
  la::Matrix image;
  bool image_is_identity;
  std::string evidence_kind;    // "sym_image", "sym_image(rho_only)", "abelianization",
                                // "asserted-by-paper"; empty when image != I
  std::string evidence_detail;  // the separating permutation / class
  bool establishes_unfaithful;
};

/// Evaluates the witness catalog (s_i rho_{i+1})^4, (s_{i+1} rho_i)^4,
/// (s_i s_{i+1})^2, s_i s_{i+1} s_i, s_i rho_i, s_i, rho_i against a virtual
/// or welded family representation and reports every word with identity
/// image together with quotient nontriviality evidence.
std::vector<FaithfulnessReport> faithfulness_check(const reps::LocalRep& rep);

bool any_unfaithful_witness(const std::vector<FaithfulnessReport>& reports);

}  // namespace twinrep::analysis

#endif
