#include <algorithm>

#include "twinrep/analysis.hpp"
#include "twinrep/error.hpp"

namespace twinrep::analysis {

namespace {

using la::Matrix;
using la::Vec;

// kernel of the linear map given by rectangular rows (each of length ncols)
std::vector<Vec> kernel_from_rows(std::vector<Vec> rows, size_t ncols) {
  auto pivots = la::rref(rows);
  std::vector<bool> is_pivot(ncols, false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (size_t f = 0; f < ncols; f++) {
    if (is_pivot[f]) continue;
    Vec v(ncols);
    v[f] = Scalar::integer(1);
    for (size_t r = 0; r < pivots.size(); r++) v[pivots[r]] = -rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

struct State {
  std::vector<int> signs;
  std::vector<Vec> basis;  // RREF rows spanning the common eigenspace
  std::vector<size_t> pivots;
};

// intersect span(state.basis) with the lambda-eigenspace of image
std::optional<State> refine(const State& state, const Matrix& image, int lambda) {
  size_t m = image.dim();
  size_t k = state.basis.size();
  // rows of the k-column system (image - lambda) * sum c_j b_j = 0
  std::vector<Vec> sys(m, Vec(k));
  for (size_t j = 0; j < k; j++) {
    Vec w = image.apply(state.basis[j]);
    for (size_t i = 0; i < m; i++) {
      Scalar entry = w[i] - (lambda == 1 ? state.basis[j][i] : -state.basis[j][i]);
      sys[i][j] = std::move(entry);
    }
  }
  auto coeffs = kernel_from_rows(std::move(sys), k);
  if (coeffs.empty()) return std::nullopt;
  std::vector<Vec> vectors;
  for (const auto& c : coeffs) {
    Vec v(m);
    for (size_t j = 0; j < k; j++) {
      if (c[j].is_zero()) continue;
      for (size_t i = 0; i < m; i++) v[i] = v[i] + c[j] * state.basis[j][i];
    }
    vectors.push_back(std::move(v));
  }
  State next;
  next.signs = state.signs;
  next.signs.push_back(lambda);
  next.pivots = la::rref(vectors);
  next.basis = std::move(vectors);
  return next;
}

// polynomial in one unknown with Scalar coefficients, index = degree
using XPoly = std::vector<Scalar>;

void xtrim(XPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

std::vector<Scalar> roots_of(const XPoly& p) {
  std::vector<Scalar> roots;
  if (p.size() == 2) {
    roots.push_back(-(p[0] / p[1]));
  } else if (p.size() == 3) {
    Scalar disc = p[1] * p[1] - Scalar::integer(4) * p[0] * p[2];
    auto s = disc.sqrt();
    if (!s) return roots;
    Scalar two_a = Scalar::integer(2) * p[2];
    roots.push_back((-p[1] + *s) / two_a);
    if (!s->is_zero()) roots.push_back((-p[1] - *s) / two_a);
  }
  return roots;
}

// lines (1, x, x^2, ...) inside the eigenspace: the catalog's reducibility
// vectors have this shape, so they are surfaced explicitly
std::vector<Vec> geometric_lines(const State& state, size_t m) {
  std::vector<Vec> found;
  if (state.basis.empty() || state.basis.size() == m) return found;
  if (state.pivots.empty() || state.pivots[0] != 0) return found;  // needs v[0] = 1
  // v = sum_j x^{p_j} b_j; non-pivot coordinates give polynomials in x
  std::vector<bool> is_pivot(m, false);
  for (size_t p : state.pivots) is_pivot[p] = true;
  XPoly constraint;
  for (size_t q = 0; q < m && constraint.empty(); q++) {
    if (is_pivot[q]) continue;
    XPoly c(m, Scalar());
    c[q] = Scalar::integer(-1);
    for (size_t j = 0; j < state.basis.size(); j++) {
      size_t deg = state.pivots[j];
      c[deg] = c[deg] + state.basis[j][q];
    }
    xtrim(c);
    if (!c.empty()) constraint = std::move(c);
  }
  if (constraint.empty()) return found;
  for (const Scalar& x : roots_of(constraint)) {
    Vec v(m);
    Scalar acc = Scalar::integer(1);
    for (size_t i = 0; i < m; i++) {
      v[i] = acc;
      acc = acc * x;
    }
    if (la::in_span(state.basis, state.pivots, v)) found.push_back(std::move(v));
  }
  return found;
}

bool same_line(const Vec& a, const Vec& b) {
  // both normalized with leading nonzero = 1 by construction paths; compare
  // up to scalar by cross-ratios
  size_t lead = 0;
  while (lead < a.size() && a[lead].is_zero() && b[lead].is_zero()) lead++;
  if (lead == a.size()) return true;
  if (a[lead].is_zero() || b[lead].is_zero()) return false;
  for (size_t i = 0; i < a.size(); i++)
    if (a[i] * b[lead] != b[i] * a[lead]) return false;
  return true;
}

}  // namespace

std::vector<ReducibilityCertificate> invariant_lines(const reps::Rep& rep, Side side) {
  auto pres = groups::presentation(rep.tag, rep.n);
  std::vector<Matrix> images;
  for (const auto& g : pres.generators) {
    Matrix img = rep.images.image(g.kind, g.index);
    if (!(img * img == Matrix::identity(img.dim())))
      throw Error("invariant-line search expects involutive images; use the meataxe instead");
    images.push_back(side == Side::Row ? img.transpose() : img);
  }
  size_t m = rep.dim;

  State full;
  for (size_t i = 0; i < m; i++) {
    Vec e(m);
    e[i] = Scalar::integer(1);
    full.basis.push_back(std::move(e));
    full.pivots.push_back(i);
  }
  std::vector<State> states{full};
  for (const auto& img : images) {
    std::vector<State> next;
    for (const auto& st : states)
      for (int lambda : {1, -1}) {
        auto refined = refine(st, img, lambda);
        if (refined) next.push_back(std::move(*refined));
      }
    states = std::move(next);
  }

  std::vector<ReducibilityCertificate> certs;
  auto line_kind = side == Side::Column ? ReducibilityCertificate::Kind::InvariantVector
                                        : ReducibilityCertificate::Kind::InvariantCovector;
  auto emit_line = [&](Vec v, const std::vector<int>& signs, bool geometric) {
    for (auto& c : certs)
      if (c.basis.size() == 1 && same_line(c.basis[0], v)) {
        c.geometric |= geometric;
        return;
      }
    certs.push_back(ReducibilityCertificate{line_kind, side, {std::move(v)}, signs, geometric});
  };
  for (const auto& st : states) {
    if (st.basis.size() == 1 && m > 1) {
      emit_line(st.basis[0], st.signs, false);
    } else if (st.basis.size() >= 2 && st.basis.size() < m) {
      certs.push_back(ReducibilityCertificate{ReducibilityCertificate::Kind::InvariantSubspace,
                                              side, st.basis, st.signs, false});
      for (const auto& b : st.basis) emit_line(b, st.signs, false);
    } else if (st.basis.size() == m) {
      // whole space fixed pointwise-up-to-sign: every axis is invariant
      for (const auto& b : st.basis) emit_line(b, st.signs, false);
    }
    for (auto& v : geometric_lines(st, m)) emit_line(std::move(v), st.signs, true);
  }
  // re-verify everything before handing certificates out
  for (const auto& c : certs)
    if (!verify_certificate(rep, c)) throw Error("internal: certificate failed residual check");
  return certs;
}

std::vector<ReducibilityCertificate> invariant_lines(const reps::LocalRep& rep, Side side) {
  return invariant_lines(reps::to_rep(rep), side);
}

bool verify_certificate(const reps::Rep& rep, const ReducibilityCertificate& cert) {
  auto pres = groups::presentation(rep.tag, rep.n);
  if (cert.eigen_signs.size() != pres.generators.size()) return false;
  for (size_t gi = 0; gi < pres.generators.size(); gi++) {
    const auto& g = pres.generators[gi];
    Matrix img = rep.images.image(g.kind, g.index);
    if (cert.side == Side::Row) img = img.transpose();
    for (const auto& v : cert.basis) {
      Vec w = img.apply(v);
      for (size_t i = 0; i < w.size(); i++) {
        Scalar expect = cert.eigen_signs[gi] == 1 ? v[i] : -v[i];
        if (w[i] != expect) return false;
      }
    }
  }
  return true;
}

}  // namespace twinrep::analysis
