#include "twinrep/matrix.hpp"

#include <json.hpp>
#include <sstream>

#include "twinrep/error.hpp"
#include "twinrep/scalar_io.hpp"

namespace twinrep::la {

namespace {
constexpr size_t kMaxDim = 64;
}

Matrix::Matrix(size_t dim) : dim_(dim), e_(dim * dim) {
  if (dim == 0 || dim > kMaxDim) throw Error("matrix dimension out of range");
}

Matrix Matrix::identity(size_t dim) {
  Matrix m(dim);
  for (size_t i = 0; i < dim; i++) m.at(i, i) = Scalar::integer(1);
  return m;
}

Matrix Matrix::from_rows(std::vector<Vec> rows) {
  Matrix m(rows.size());
  for (size_t i = 0; i < rows.size(); i++) {
    if (rows[i].size() != rows.size()) throw Error("matrix must be square");
    for (size_t j = 0; j < rows.size(); j++) m.at(i, j) = std::move(rows[i][j]);
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (dim_ != o.dim_) throw Error("matrix dimension mismatch");
  Matrix r(dim_);
  for (size_t i = 0; i < dim_; i++)
    for (size_t k = 0; k < dim_; k++) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (size_t j = 0; j < dim_; j++) {
        const Scalar& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) = r.at(i, j) + a * b;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (dim_ != o.dim_) throw Error("matrix dimension mismatch");
  Matrix r(dim_);
  for (size_t i = 0; i < e_.size(); i++) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (dim_ != o.dim_) throw Error("matrix dimension mismatch");
  Matrix r(dim_);
  for (size_t i = 0; i < e_.size(); i++) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (dim_ != o.dim_) return false;
  for (size_t i = 0; i < e_.size(); i++)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix r(dim_);
  for (size_t i = 0; i < dim_; i++)
    for (size_t j = 0; j < dim_; j++) r.at(j, i) = at(i, j);
  return r;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != dim_) throw Error("vector dimension mismatch");
  Vec r(dim_);
  for (size_t i = 0; i < dim_; i++)
    for (size_t j = 0; j < dim_; j++)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] = r[i] + at(i, j) * v[j];
  return r;
}

bool Matrix::is_identity() const {
  for (size_t i = 0; i < dim_; i++)
    for (size_t j = 0; j < dim_; j++) {
      if (i == j && !at(i, j).is_one()) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::is_constant() const {
  for (const auto& s : e_)
    if (!s.is_constant()) return false;
  return true;
}

Matrix Matrix::specialize(const Ctx& spec_ctx) const {
  Matrix r(dim_);
  for (size_t i = 0; i < e_.size(); i++) r.e_[i] = e_[i].specialize(spec_ctx);
  return r;
}

Matrix Matrix::substituted(const std::map<std::string, Scalar>& values, const Ctx& target) const {
  Matrix r(dim_);
  for (size_t i = 0; i < e_.size(); i++) r.e_[i] = e_[i].substituted(values, target);
  return r;
}

Ctx Matrix::ctx() const {
  for (const auto& s : e_)
    if (s.ctx()) return s.ctx();
  return nullptr;
}

std::string Matrix::to_pretty_string() const {
  std::ostringstream out;
  for (size_t i = 0; i < dim_; i++) {
    out << "[";
    for (size_t j = 0; j < dim_; j++) {
      if (j) out << ", ";
      out << exact::to_string(at(i, j));
    }
    out << "]\n";
  }
  return out.str();
}

Matrix rehome(const Matrix& m, const Ctx& target) {
  Matrix r(m.dim());
  for (size_t i = 0; i < m.dim(); i++)
    for (size_t j = 0; j < m.dim(); j++) r.at(i, j) = exact::rehome(m.at(i, j), target);
  return r;
}

Matrix block_embed(const Matrix& core, size_t position, size_t strands) {
  size_t k = core.dim();
  if (k < 2) throw Error("block size must be at least 2");
  if (position < 1 || position > strands - 1) throw Error("block position out of range");
  size_t m = strands + k - 2;
  Matrix r = Matrix::identity(m);
  for (size_t i = 0; i < k; i++)
    for (size_t j = 0; j < k; j++) r.at(position - 1 + i, position - 1 + j) = core.at(i, j);
  return r;
}

namespace {

Scalar det_cofactor(const Matrix& a) {
  size_t n = a.dim();
  if (n == 1) return a.at(0, 0);
  Scalar acc;
  for (size_t r = 0; r < n; r++) {
    if (a.at(r, 0).is_zero()) continue;
    Matrix minor(n - 1);
    for (size_t i = 0, ii = 0; i < n; i++) {
      if (i == r) continue;
      for (size_t j = 1; j < n; j++) minor.at(ii, j - 1) = a.at(i, j);
      ii++;
    }
    Scalar term = a.at(r, 0) * det_cofactor(minor);
    acc = (r % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

Scalar det_bareiss(const Matrix& a) {
  size_t n = a.dim();
  std::vector<Vec> m(n, Vec(n));
  for (size_t i = 0; i < n; i++)
    for (size_t j = 0; j < n; j++) m[i][j] = a.at(i, j);
  Scalar prev = Scalar::integer(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; k++) {
    if (m[k][k].is_zero()) {
      size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) r++;
      if (r == n) return Scalar();
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; i++)
      for (size_t j = k + 1; j < n; j++)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  Scalar d = m[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

}  // namespace

Scalar det(const Matrix& a) {
  try {
    return det_bareiss(a);
  } catch (const Error&) {
    if (a.dim() <= 5) return det_cofactor(a);
    throw;
  }
}

namespace {

Matrix inverse_bareiss(const Matrix& a) {
  size_t n = a.dim();
  std::vector<Vec> m(n, Vec(2 * n));
  for (size_t i = 0; i < n; i++) {
    for (size_t j = 0; j < n; j++) m[i][j] = a.at(i, j);
    m[i][n + i] = Scalar::integer(1);
  }
  Scalar prev = Scalar::integer(1);
  for (size_t k = 0; k < n; k++) {
    if (m[k][k].is_zero()) {
      size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) r++;
      if (r == n) throw Error("singular matrix");
      std::swap(m[k], m[r]);
    }
    for (size_t i = 0; i < n; i++) {
      if (i == k) continue;
      for (size_t j = 0; j < 2 * n; j++) {
        if (j == k) continue;
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = Scalar();
    }
    prev = m[k][k];
  }
  Matrix r(n);
  for (size_t i = 0; i < n; i++) {
    if (m[i][i].is_zero()) throw Error("singular matrix");
    for (size_t j = 0; j < n; j++) r.at(i, j) = m[i][n + j] / m[i][i];
  }
  return r;
}

Matrix inverse_adjugate(const Matrix& a) {
  size_t n = a.dim();
  Scalar d = det_cofactor(a);
  if (d.is_zero()) throw Error("singular matrix");
  Matrix r(n);
  for (size_t i = 0; i < n; i++)
    for (size_t j = 0; j < n; j++) {
      Matrix minor(n - 1);
      for (size_t p = 0, pp = 0; p < n; p++) {
        if (p == j) continue;
        for (size_t q = 0, qq = 0; q < n; q++) {
          if (q == i) continue;
          minor.at(pp, qq++) = a.at(p, q);
        }
        pp++;
      }
      Scalar c = (n == 1) ? Scalar::integer(1) : det_cofactor(minor);
      r.at(i, j) = ((i + j) % 2 == 0) ? c / d : -c / d;
    }
  return r;
}

}  // namespace

Matrix inverse(const Matrix& a) {
  try {
    return inverse_bareiss(a);
  } catch (const Error& e) {
    if (std::string(e.what()) == "singular matrix") throw;
    if (a.dim() <= 5) return inverse_adjugate(a);
    throw;
  }
}

std::vector<Scalar> char_poly(const Matrix& a) {
  size_t n = a.dim();
  auto trace = [&](const Matrix& m) {
    Scalar t;
    for (size_t i = 0; i < n; i++) t = t + m.at(i, i);
    return t;
  };
  std::vector<Scalar> c(n + 1);
  c[n] = Scalar::integer(1);
  Matrix w = a;
  c[n - 1] = -trace(w);
  for (size_t k = 2; k <= n; k++) {
    Matrix shifted = w;
    for (size_t i = 0; i < n; i++) shifted.at(i, i) = shifted.at(i, i) + c[n - k + 1];
    w = a * shifted;
    c[n - k] = -(trace(w) / Scalar::integer(static_cast<long long>(k)));
  }
  return c;
}

std::vector<size_t> rref(std::vector<Vec>& rows) {
  std::vector<size_t> pivots;
  if (rows.empty()) return pivots;
  size_t ncols = rows[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < ncols && rank < rows.size(); col++) {
    size_t sel = rank;
    while (sel < rows.size() && rows[sel][col].is_zero()) sel++;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    Scalar inv = rows[rank][col].inverse();
    for (size_t j = col; j < ncols; j++) rows[rank][j] = rows[rank][j] * inv;
    for (size_t i = 0; i < rows.size(); i++) {
      if (i == rank || rows[i][col].is_zero()) continue;
      Scalar f = rows[i][col];
      for (size_t j = col; j < ncols; j++) rows[i][j] = rows[i][j] - f * rows[rank][j];
    }
    pivots.push_back(col);
    rank++;
  }
  rows.resize(rank, Vec(ncols));
  return pivots;
}

std::vector<Vec> kernel_basis(const Matrix& a) {
  size_t n = a.dim();
  std::vector<Vec> rows(n, Vec(n));
  for (size_t i = 0; i < n; i++)
    for (size_t j = 0; j < n; j++) rows[i][j] = a.at(i, j);
  auto pivots = rref(rows);
  std::vector<bool> is_pivot(n, false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (size_t f = 0; f < n; f++) {
    if (is_pivot[f]) continue;
    Vec v(n);
    v[f] = Scalar::integer(1);
    for (size_t r = 0; r < pivots.size(); r++) v[pivots[r]] = -rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> null_space(const Matrix& a) {
  if (!a.is_constant())
    throw Error("null_space requires a fully specialized matrix; use kernel_basis for generic parameters");
  return kernel_basis(a);
}

bool in_span(const std::vector<Vec>& rref_basis, const std::vector<size_t>& pivots, const Vec& v) {
  Vec rem = v;
  for (size_t r = 0; r < rref_basis.size(); r++) {
    Scalar c = rem[pivots[r]];
    if (c.is_zero()) continue;
    for (size_t j = 0; j < rem.size(); j++) rem[j] = rem[j] - c * rref_basis[r][j];
  }
  for (const auto& s : rem)
    if (!s.is_zero()) return false;
  return true;
}

std::string to_string(const Vec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); i++) {
    if (i) out += ", ";
    out += exact::to_string(v[i]);
  }
  return out + ")";
}

std::string to_json_string(const Matrix& m) {
  nlohmann::ordered_json j;
  j["dim"] = m.dim();
  auto rows = nlohmann::ordered_json::array();
  for (size_t i = 0; i < m.dim(); i++) {
    auto row = nlohmann::ordered_json::array();
    for (size_t jj = 0; jj < m.dim(); jj++) row.push_back(exact::to_string(m.at(i, jj)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j.dump();
}

Matrix matrix_from_json_string(const Ctx& ctx, const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  size_t dim = j.at("dim").get<size_t>();
  Matrix m(dim);
  const auto& rows = j.at("entries");
  if (rows.size() != dim) throw Error("matrix json: row count mismatch");
  for (size_t i = 0; i < dim; i++) {
    if (rows[i].size() != dim) throw Error("matrix json: column count mismatch");
    for (size_t jj = 0; jj < dim; jj++)
      m.at(i, jj) = exact::parse_scalar(ctx, rows[i][jj].get<std::string>());
  }
  return m;
}

}  // namespace twinrep::la
