#ifndef CARLITZ_CHAR_MATRIX_HPP
#define CARLITZ_CHAR_MATRIX_HPP

#include <vector>

#include "carlitz/cyclotomic.hpp"
#include "carlitz/fq.hpp"
#include "carlitz/units.hpp"

namespace carlitz {

/// A character of F_q^x, written against the field's fixed generator g:
/// lambda_t(g^k) = zeta_{q-1}^{t k}.  t = 0 is the trivial character.
struct FqStarChar {
    int exponent = 0;
    const CycCtx* ctx = nullptr; // ring Z[zeta_{q-1}]

    bool is_trivial() const { return exponent % ctx->n() == 0; }
    FqStarChar inverse() const {
        int n = ctx->n();
        return FqStarChar{(n - exponent % n) % n, ctx};
    }
};

/// lambda(a) = zeta_{q-1}^{t * dlog(a)}; a != 0.
CycNum char_value(const FieldCtx& F, const FqStarChar& lambda, FqElem a);

/// The matrix D_m^{(lambda)}(X): entry (i,j) = c_ij^lambda X^{d_ij} with
/// c_ij^lambda = lambda^{-1}(L(a_i a_j^{-1})) and d_ij = Deg(a_i a_j^{-1}).
struct CharMatrix {
    int size = 0;
    std::vector<CycPoly> entries; // row-major

    const CycPoly& at(int i, int j) const { return entries[i * size + j]; }
    CycPoly& at(int i, int j) { return entries[i * size + j]; }
};

CharMatrix build_matrix(const FieldCtx& F, const UnitSystem& sys, const FqStarChar& lambda);

/// Exact determinant by fraction-free Bareiss elimination over Z[zeta][X],
/// with row pivoting (swap on zero pivot, sign tracked).  The degree bound
/// deg det <= sum_i max_j deg(entry(i,j)) is asserted.
CycPoly det_cycpoly(const CharMatrix& M);

/// Second determinant engine: evaluate X at degree-bound+1 integer points,
/// run scalar Bareiss over Z[zeta], interpolate with exact rationals and
/// assert integrality.  Must agree with det_cycpoly bit for bit.
CycPoly det_cycpoly_interp(const CharMatrix& M);

/// Exact determinant of a scalar matrix over Z[zeta] (row-major, n x n).
CycNum det_cycnum(std::vector<CycNum> a, int n, const CycCtx& ctx);

/// The per-lambda determinants det D_m^{(lambda_t)}(X), t = 1, ..., q-2,
/// in that order, over the given Z[zeta_{q-1}] context.
std::vector<CycPoly> det_lambdas(const FieldCtx& F, const UnitSystem& sys, const CycCtx& ctx);

/// det D_m^{(-)}(X) = prod over nontrivial lambda of det D_m^{(lambda)}(X),
/// reduced to an integer polynomial (the product is Galois stable).  The
/// empty product for q = 2 is the constant 1.
IntPoly det_minus(const FieldCtx& F, const UnitSystem& sys);

/// The X = 1 specialization: prod over nontrivial lambda of det(c_ij^lambda),
/// computed as scalar determinants over Z[zeta_{q-1}] and reduced to an
/// integer (Maillet-type determinant).
mpz_class maillet_product(const FieldCtx& F, const UnitSystem& sys);

} // namespace carlitz

#endif
