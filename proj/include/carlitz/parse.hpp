#ifndef CARLITZ_PARSE_HPP
#define CARLITZ_PARSE_HPP

#include <string>

#include "carlitz/fq.hpp"

namespace carlitz {

/// Parses a modulus expression.  Two syntaxes:
///   - sum of monomials in T: "T^3+T^2", "2*T^2+1", "T^2-1"; coefficients
///     are integers (reduced into F_q) or, for q = p^n with n > 1,
///     coordinate tuples like "(1,1)"
///   - comma-separated coefficient list, constant term first: "1,0,1"
/// Rejects non-monic and constant results (NotMonic / ConstantModulus).
FqPoly parse_modulus(const std::string& text, const FieldCtx& F);

} // namespace carlitz

#endif
