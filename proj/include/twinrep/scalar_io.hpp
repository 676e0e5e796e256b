#ifndef TWINREP_SCALAR_IO_HPP
#define TWINREP_SCALAR_IO_HPP

#include <string>

#include "twinrep/scalar.hpp"

namespace twinrep::exact {

/// Canonical string form: terms in the fixed monomial order, "*" products,
/// "^" powers, and "(num)/(den)" when the denominator is nontrivial.
/// print/parse round-trips are bit-exact.
std::string to_string(const Poly& p, const Ctx& ctx);
std::string to_string(const Scalar& s);

/// Strict expression parser over the context's parameter/radical names.
/// Throws twinrep::Error with a byte offset on malformed input.
Scalar parse_scalar(const Ctx& ctx, const std::string& text);

}  // namespace twinrep::exact

#endif
