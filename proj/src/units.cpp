#include "carlitz/units.hpp"

#include <algorithm>

namespace carlitz {

FqPoly canonical_rep(const FieldCtx& F, const FqPoly& a, const FqPoly& m) {
    if (!is_monic(m)) throw NotMonic("modulus must be monic");
    if (m.degree() < 1) throw ConstantModulus();
    return poly_mod(F, a, m);
}

std::pair<int, FqElem> deg_and_leading(const UnitRep& alpha) {
    const FqPoly& r = alpha.rep;
    if (r.is_zero()) throw NotAUnit("zero is not a unit representative");
    return {r.degree(), r.leading()};
}

FqPoly inverse_mod(const FieldCtx& F, const FqPoly& a, const FqPoly& m) {
    auto x = poly_xgcd(F, poly_mod(F, a, m), m);
    if (x.g.degree() != 0) throw NotAUnit("element is not coprime to the modulus");
    // g is the constant 1 after monic scaling, so u * a = 1 mod m
    return poly_mod(F, x.u, m);
}

UnitSystem unit_system(const FieldCtx& F, const FqPoly& m) {
    if (!is_monic(m)) throw NotMonic("modulus must be monic");
    if (m.degree() < 1) throw ConstantModulus();
    UnitSystem sys;
    sys.modulus = m;
    for (int d = 0; d < m.degree(); ++d)
        for (auto& r : enumerate_monic(F, d))
            if (poly_gcd(F, r, m).degree() == 0) sys.reps.push_back(std::move(r));
    sys.n_m = static_cast<long long>(sys.reps.size());
    for (int i = 0; i < sys.n_m; ++i) sys.index[sys.reps[i]] = i;
    return sys;
}

UnitSystem UnitSystem::permuted(const std::vector<int>& perm) const {
    std::vector<FqPoly> order;
    order.reserve(reps.size());
    for (int k : perm) order.push_back(reps.at(k));
    return with_order(order);
}

UnitSystem UnitSystem::with_order(const std::vector<FqPoly>& order) const {
    UnitSystem sys;
    sys.modulus = modulus;
    sys.reps = order;
    sys.n_m = n_m;
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    auto canon = reps;
    std::sort(canon.begin(), canon.end());
    if (sorted != canon) throw Error("reordered representative list is not the same set");
    for (std::size_t i = 0; i < sys.reps.size(); ++i) sys.index[sys.reps[i]] = static_cast<int>(i);
    return sys;
}

std::pair<int, FqElem> pair_data(const FieldCtx& F, const UnitSystem& sys, int i, int j) {
    const FqPoly& ai = sys.reps.at(i);
    const FqPoly& aj = sys.reps.at(j);
    FqPoly r = canonical_rep(F, poly_mul(F, ai, inverse_mod(F, aj, sys.modulus)), sys.modulus);
    return deg_and_leading(UnitRep{r, sys.modulus});
}

} // namespace carlitz
