#ifndef TWINREP_MATRIX_HPP
#define TWINREP_MATRIX_HPP

#include <string>
#include <vector>

#include "twinrep/scalar.hpp"

namespace twinrep::la {

using exact::Ctx;
using exact::Scalar;

using Vec = std::vector<Scalar>;

/// Dense square matrix over Scalar.  Dimensions are capped at 64; everything
/// in the catalog is at most 9x9.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(size_t dim);  // zero matrix
  static Matrix identity(size_t dim);
  static Matrix from_rows(std::vector<Vec> rows);

  size_t dim() const { return dim_; }
  const Scalar& at(size_t r, size_t c) const { return e_[r * dim_ + c]; }
  Scalar& at(size_t r, size_t c) { return e_[r * dim_ + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  Matrix transpose() const;
  Vec apply(const Vec& v) const;  // column-vector action

  bool is_identity() const;
  bool is_zero() const;
  bool is_constant() const;  // all entries rational

  Matrix specialize(const Ctx& spec_ctx) const;
  Matrix substituted(const std::map<std::string, Scalar>& values, const Ctx& target) const;

  /// First non-null entry context (null for all-constant matrices).
  Ctx ctx() const;

  std::string to_pretty_string() const;

 private:
  size_t dim_ = 0;
  std::vector<Scalar> e_;
};

/// Identity of size m = n+k-2 with the k x k core at rows/columns
/// i..i+k-1 (1-based position i in 1..n-1).
Matrix block_embed(const Matrix& core, size_t position, size_t strands);

/// Re-home every entry into a context carrying the variables actually used
/// (drops radicals that no longer occur, so the result can be specialized
/// at points where their radicands are not squares).
Matrix rehome(const Matrix& m, const Ctx& target);

/// Exact determinant (fraction-free Bareiss; cofactor fallback for dim <= 5).
Scalar det(const Matrix& a);

/// Exact inverse; throws twinrep::Error on singular input.
Matrix inverse(const Matrix& a);

/// Monic characteristic polynomial coefficients c[0..m] (c[m] = 1),
/// p(x) = sum c_i x^i, via the Faddeev-LeVerrier recurrence.
std::vector<Scalar> char_poly(const Matrix& a);

/// Kernel basis over a field-like scalar context (generic parameters or a
/// full specialization); vectors come out of a reduced row echelon form so
/// the basis is canonical.
std::vector<Vec> kernel_basis(const Matrix& a);

/// Spec'd null space: requires a fully specialized (constant) matrix.
std::vector<Vec> null_space(const Matrix& a);

/// In-place reduced row echelon form; returns pivot column indices.
/// Rows may be rectangular (all the same length).
std::vector<size_t> rref(std::vector<Vec>& rows);

/// Is v in the row span of an RREF basis?
bool in_span(const std::vector<Vec>& rref_basis, const std::vector<size_t>& pivots, const Vec& v);

std::string to_string(const Vec& v);

/// JSON schema {"dim": m, "entries": [[scalar-string, ...], ...]}.
std::string to_json_string(const Matrix& m);
Matrix matrix_from_json_string(const Ctx& ctx, const std::string& text);

}  // namespace twinrep::la

#endif
