#ifndef TWINREP_SNF_HPP
#define TWINREP_SNF_HPP

#include <vector>

namespace twinrep::groups {

using IntMat = std::vector<std::vector<long long>>;

/// a = u * s * v with u, v unimodular and s diagonal satisfying the
/// divisibility chain s11 | s22 | ...  v_inv is carried along because the
/// abelianization quotient needs it.
struct SnfResult {
  IntMat u, s, v, v_inv;
};

SnfResult smith_normal_form(const IntMat& a);

IntMat int_identity(size_t n);
IntMat int_mul(const IntMat& a, const IntMat& b);
long long int_det(const IntMat& a);  // via fraction-free elimination

}  // namespace twinrep::groups

#endif
