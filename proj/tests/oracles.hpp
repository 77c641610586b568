#ifndef CARLITZ_TEST_ORACLES_HPP
#define CARLITZ_TEST_ORACLES_HPP

// Brute-force reference implementations used only by tests.  Everything here
// is deliberately naive and independent of the library's computation paths.

#include <vector>

#include "carlitz/char_matrix.hpp"
#include "carlitz/cyclotomic.hpp"
#include "carlitz/fq.hpp"

namespace carlitz::testing {

// multiplicative order by repeated multiplication
inline int brute_order(const FieldCtx& F, FqElem a) {
    FqElem cur = a;
    int k = 1;
    while (!(cur == F.one())) {
        cur = F.mul(cur, a);
        ++k;
    }
    return k;
}

// number of nonzero residues of degree < deg m coprime to m
inline long long brute_unit_count(const FieldCtx& F, const FqPoly& m) {
    long long codes = 1;
    for (int i = 0; i < m.degree(); ++i) codes *= F.q();
    long long count = 0;
    for (long long code = 1; code < codes; ++code) {
        FqPoly u;
        u.c.resize(m.degree(), F.zero());
        long long c = code;
        for (int i = 0; i < m.degree(); ++i) {
            u.c[i] = FqElem{static_cast<std::uint32_t>(c % F.q())};
            c /= F.q();
        }
        u.normalize();
        if (poly_gcd(F, u, m).degree() == 0) ++count;
    }
    return count;
}

// irreducibility by exhaustive trial multiplication of lower-degree monics
inline bool brute_irreducible(const FieldCtx& F, const FqPoly& f) {
    if (f.degree() < 1) return false;
    for (int d = 1; 2 * d <= f.degree(); ++d)
        for (const auto& g : enumerate_monic(F, d))
            if (poly_mod(F, f, g).is_zero()) return false;
    return true;
}

// determinant by cofactor expansion along the first row
inline CycPoly cofactor_det(const std::vector<CycPoly>& a, int n, const CycCtx& ctx) {
    if (n == 1) return a[0];
    CycPoly det(ctx);
    for (int j = 0; j < n; ++j) {
        if (a[j].is_zero()) continue;
        std::vector<CycPoly> minor;
        minor.reserve((n - 1) * (n - 1));
        for (int i = 1; i < n; ++i)
            for (int k = 0; k < n; ++k)
                if (k != j) minor.push_back(a[i * n + k]);
        CycPoly term = cycpoly_mul(a[j], cofactor_det(minor, n - 1, ctx));
        det = (j % 2 == 0) ? cycpoly_add(det, term) : cycpoly_sub(det, term);
    }
    return det;
}

inline CycNum cofactor_det_scalar(const std::vector<CycNum>& a, int n, const CycCtx& ctx) {
    if (n == 1) return a[0];
    CycNum det(ctx);
    for (int j = 0; j < n; ++j) {
        if (a[j].is_zero()) continue;
        std::vector<CycNum> minor;
        minor.reserve((n - 1) * (n - 1));
        for (int i = 1; i < n; ++i)
            for (int k = 0; k < n; ++k)
                if (k != j) minor.push_back(a[i * n + k]);
        CycNum term = cyc_mul(a[j], cofactor_det_scalar(minor, n - 1, ctx));
        det = (j % 2 == 0) ? cyc_add(det, term) : cyc_sub(det, term);
    }
    return det;
}

// schoolbook polynomial product written independently of poly_mul
inline FqPoly brute_poly_mul(const FieldCtx& F, const FqPoly& a, const FqPoly& b) {
    FqPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            FqElem prod = F.mul(a.c[i], b.c[j]);
            r.c[i + j] = F.add(r.c[i + j], prod);
        }
    r.normalize();
    return r;
}

} // namespace carlitz::testing

#endif
