#ifndef CARLITZ_UNITS_HPP
#define CARLITZ_UNITS_HPP

#include <map>
#include <utility>
#include <vector>

#include "carlitz/fq.hpp"

namespace carlitz {

/// One unit class of (A/(m))^x, held as its canonical representative of
/// degree < deg m.
struct UnitRep {
    FqPoly rep;
    FqPoly modulus;
};

/// The monic-leading representatives a_1, ..., a_{N_m} of the quotient
/// (A/(m))^x / F_q^x, in (degree, lex) order.  Immutable after construction.
struct UnitSystem {
    FqPoly modulus;
    std::vector<FqPoly> reps;
    long long n_m = 0;
    std::map<FqPoly, int> index;

    /// Copy with the representatives rearranged by `perm` (a permutation of
    /// 0..N_m-1).  The determinant pipeline is invariant under this; used by
    /// the ordering-invariance checks.
    UnitSystem permuted(const std::vector<int>& perm) const;
    /// Copy with the representatives in a caller-given order (must be the
    /// same set).
    UnitSystem with_order(const std::vector<FqPoly>& order) const;
};

/// Remainder of a mod m: the canonical degree < deg m representative.
FqPoly canonical_rep(const FieldCtx& F, const FqPoly& a, const FqPoly& m);

/// (Deg, L) of a unit representative: degree and leading coefficient of the
/// canonical rep; (0, r) for a constant r.
std::pair<int, FqElem> deg_and_leading(const UnitRep& alpha);

/// Inverse of a modulo m via extended Euclid; canonical rep returned.
FqPoly inverse_mod(const FieldCtx& F, const FqPoly& a, const FqPoly& m);

UnitSystem unit_system(const FieldCtx& F, const FqPoly& m);

/// (d_ij, l_ij) = (Deg, L) of the canonical rep of a_i * a_j^{-1}.
std::pair<int, FqElem> pair_data(const FieldCtx& F, const UnitSystem& sys, int i, int j);

} // namespace carlitz

#endif
