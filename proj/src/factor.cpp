#include "twinrep/analysis.hpp"
#include "twinrep/error.hpp"

namespace twinrep::analysis {

namespace {

using la::Matrix;
using la::Vec;

// P is the identity with column p replaced by v (v[p] = 1), so P^-1 is the
// identity with column p replaced by (2e_p - v) pattern: I - (v - e_p) e_p^T.
Matrix conjugate_and_delete(const Matrix& a, const Vec& v, size_t p) {
  size_t m = a.dim();
  Matrix pm = Matrix::identity(m);
  Matrix pinv = Matrix::identity(m);
  for (size_t i = 0; i < m; i++) {
    pm.at(i, p) = v[i];
    pinv.at(i, p) = i == p ? Scalar::integer(1) : -v[i];
  }
  Matrix conj = pinv * a * pm;
  Matrix out(m - 1);
  for (size_t i = 0, ii = 0; i < m; i++) {
    if (i == p) continue;
    for (size_t j = 0, jj = 0; j < m; j++) {
      if (j == p) continue;
      out.at(ii, jj++) = conj.at(i, j);
    }
    ii++;
  }
  return out;
}

}  // namespace

reps::Rep composition_factor(const reps::Rep& rep, const ReducibilityCertificate& cert) {
  if (cert.kind == ReducibilityCertificate::Kind::InvariantSubspace || cert.basis.size() != 1)
    throw Error("composition_factor needs a one-dimensional certificate");
  if (!verify_certificate(rep, cert)) throw Error("certificate fails its residual check");
  if (rep.dim < 2) throw Error("nothing to factor");

  Vec v = cert.basis[0];
  size_t p = 0;
  while (p < v.size() && v[p].is_zero()) p++;
  if (p == v.size()) throw Error("zero certificate vector");
  Scalar lead_inv = v[p].inverse();
  for (auto& x : v) x = x * lead_inv;

  auto pres = groups::presentation(rep.tag, rep.n);
  reps::Rep out{rep.tag, rep.n, rep.dim - 1, {}, rep.label + " factor"};
  for (const auto& g : pres.generators) {
    Matrix img = rep.images.image(g.kind, g.index);
    if (cert.side == Side::Row)
      img = conjugate_and_delete(img.transpose(), v, p).transpose();
    else
      img = conjugate_and_delete(img, v, p);
    out.images.set(g.kind, g.index, std::move(img));
  }
  RelationReport sanity = verify_relations(out);
  if (!sanity.all_pass()) throw Error("internal: composition factor is not a homomorphism");
  return out;
}

}  // namespace twinrep::analysis
