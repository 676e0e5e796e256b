#ifndef TWINREP_GROUPS_HPP
#define TWINREP_GROUPS_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "twinrep/matrix.hpp"
#include "twinrep/snf.hpp"

namespace twinrep::groups {

enum class GroupTag { B, T, VT, WT };
std::string to_string(GroupTag tag);
GroupTag group_tag_from_string(const std::string& s);

enum class GenKind { S, Rho, Sigma };

struct Generator {
  GenKind kind;
  int index;         // 1-based, in 1..n-1
  int exponent = 1;  // +1 or -1
  bool operator==(const Generator& o) const = default;
};
std::string to_string(const Generator& g);

/// Is this generator an involution in the given group?  (s and rho in the
/// twin-type groups; braid sigmas are not.)
bool involutive(GenKind kind, GroupTag tag);

/// Freely reduced word; in involutive groups equal adjacent letters cancel
/// regardless of recorded exponents, and exponents normalize to +1.
class GroupWord {
 public:
  GroupWord() = default;
  GroupWord(std::vector<Generator> gens, GroupTag tag);

  GroupTag tag() const { return tag_; }
  const std::vector<Generator>& gens() const { return gens_; }
  bool empty() const { return gens_.empty(); }
  size_t size() const { return gens_.size(); }

  GroupWord operator*(const GroupWord& o) const;
  GroupWord inverse() const;
  GroupWord pow(int e) const;
  bool operator==(const GroupWord& o) const { return tag_ == o.tag_ && gens_ == o.gens_; }

 private:
  GroupTag tag_ = GroupTag::T;
  std::vector<Generator> gens_;
};
std::string to_string(const GroupWord& w);

/// Token syntax "s1 r2 g3^-1" (g = braid sigma); whitespace separated.
/// Throws twinrep::Error with a byte offset on syntax errors or when an
/// index falls outside 1..n-1 or the kind does not belong to the group.
GroupWord parse_word(const std::string& text, GroupTag tag, int n);

struct Relation {
  std::vector<Generator> lhs, rhs;  // stored unreduced
  std::string name;
};

struct Presentation {
  GroupTag tag;
  int n;
  std::vector<Generator> generators;
  std::vector<Relation> relations;
};

/// Defining presentations: the braid group (sigma braid + far commutation),
/// the twin group (involutions + far commutation), its virtual extension
/// (rho braid/commutation/involution, mixed commutation, rho rho s = s rho rho),
/// and the welded quotient (additionally rho s s = s s rho).
Presentation presentation(GroupTag tag, int n);

/// Generator images for a matrix representation, all of one dimension.
/// Inverse images are computed and cached on demand.
class ImageMap {
 public:
  ImageMap() = default;
  void set(GenKind kind, int index, la::Matrix image);
  const la::Matrix& image(GenKind kind, int index) const;
  const la::Matrix& inverse_image(GenKind kind, int index) const;
  size_t dim() const { return dim_; }
  bool has(GenKind kind, int index) const;

 private:
  std::map<std::pair<int, int>, la::Matrix> images_;
  mutable std::map<std::pair<int, int>, la::Matrix> inverses_;
  size_t dim_ = 0;
};

la::Matrix eval_hom(std::span<const Generator> word, const ImageMap& images);
la::Matrix eval_hom(const GroupWord& word, const ImageMap& images);

// ------------------------------------------------------------ quotients

using Perm = std::vector<int>;  // images of 0..n-1
bool is_identity_perm(const Perm& p);
std::string to_string(const Perm& p);

enum class SymMode { BothTransposition, RhoOnly };

/// Symmetric-group quotient: generators map to transpositions (i, i+1); in
/// RhoOnly mode the s generators map to the identity.  Construction verifies
/// every presentation relation and throws when the mode is not a
/// homomorphism for the group (e.g. RhoOnly on WT breaks rho s s = s s rho).
class SymQuotient {
 public:
  SymQuotient(const Presentation& pres, SymMode mode);
  Perm image(const GroupWord& w) const;
  Perm image(std::span<const Generator> w) const;

 private:
  int n_;
  SymMode mode_;
};

Perm sym_image(const GroupWord& word, SymMode mode, const Presentation& pres);

/// Abelianization computed from the relation matrix by integer Smith normal
/// form.  Coordinates follow the SNF invariant factors; factor-1 components
/// are dropped from the reported structure.
class AbelianQuotient {
 public:
  explicit AbelianQuotient(const Presentation& pres);

  /// All invariant factors (one per generator column; 0 means a free Z).
  const std::vector<long long>& factors() const { return factors_; }
  /// e.g. "Z/2 x Z/2" or "trivial".
  std::string structure() const;

  std::vector<long long> image(const GroupWord& w) const;
  bool is_trivial_image(const GroupWord& w) const;
  /// Image restricted to the nontrivial components, matching structure().
  std::vector<long long> reduced_image(const GroupWord& w) const;

 private:
  Presentation pres_;
  IntMat v_inv_;
  std::vector<long long> factors_;
  std::vector<long long> exponent_vector(const GroupWord& w) const;
};

}  // namespace twinrep::groups

#endif
