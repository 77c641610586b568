#include "carlitz/char_matrix.hpp"

#include <algorithm>

namespace carlitz {

CycNum char_value(const FieldCtx& F, const FqStarChar& lambda, FqElem a) {
    if (a.idx == 0) throw ZeroArgument();
    long long k = F.dlog(a);
    return zeta_power(*lambda.ctx, static_cast<long long>(lambda.exponent) * k);
}

CharMatrix build_matrix(const FieldCtx& F, const UnitSystem& sys, const FqStarChar& lambda) {
    if (lambda.is_trivial()) throw TrivialCharacter();
    const CycCtx& ctx = *lambda.ctx;
    const int n = static_cast<int>(sys.n_m);
    const FqStarChar lam_inv = lambda.inverse();

    // inverses of the representatives, reduced once per column
    std::vector<FqPoly> inv(n);
    for (int j = 0; j < n; ++j) inv[j] = inverse_mod(F, sys.reps[j], sys.modulus);

    CharMatrix M;
    M.size = n;
    M.entries.assign(static_cast<std::size_t>(n) * n, CycPoly(ctx));
    const int dmax = sys.modulus.degree() - 1;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                M.at(i, j) = CycPoly::one(ctx);
                continue;
            }
            FqPoly r = poly_mod(F, poly_mul(F, sys.reps[i], inv[j]), sys.modulus);
            int d = r.degree();
            if (d <= 0 || d > dmax) throw Error("pair degree out of range"); // d_ij > 0 off-diagonal
            M.at(i, j) = CycPoly::monomial(ctx, char_value(F, lam_inv, r.leading()), d);
        }
    }
    return M;
}

namespace {

// ring adapters for the shared Bareiss elimination
bool ring_is_zero(const CycNum& a) { return a.is_zero(); }
bool ring_is_zero(const CycPoly& a) { return a.is_zero(); }
CycNum ring_exact_div(const CycNum& a, const CycNum& b) { return cyc_exact_div(a, b); }
CycPoly ring_exact_div(const CycPoly& a, const CycPoly& b) { return cycpoly_exact_div(a, b); }
CycNum ring_neg(const CycNum& a) { return cyc_neg(a); }
CycPoly ring_neg(const CycPoly& a) { return cycpoly_neg(a); }
CycNum ring_mul_sub(const CycNum& a, const CycNum& b, const CycNum& c, const CycNum& d) {
    return cyc_sub(cyc_mul(a, b), cyc_mul(c, d));
}
CycPoly ring_mul_sub(const CycPoly& a, const CycPoly& b, const CycPoly& c, const CycPoly& d) {
    return cycpoly_mul_sub(a, b, c, d);
}

// Fraction-free Bareiss with row pivoting.  Every division is exact by
// Sylvester's identity; zero_value is returned when a pivot column vanishes.
template <class Ring>
Ring bareiss(std::vector<Ring>& a, int n, Ring zero_value) {
    int sign = 1;
    const Ring* prev = nullptr;
    for (int k = 0; k + 1 < n; ++k) {
        if (ring_is_zero(a[k * n + k])) {
            int r = -1;
            for (int i = k + 1; i < n; ++i)
                if (!ring_is_zero(a[i * n + k])) { r = i; break; }
            if (r < 0) return zero_value;
            for (int j = 0; j < n; ++j) std::swap(a[k * n + j], a[r * n + j]);
            sign = -sign;
        }
        const Ring& pivot = a[k * n + k];
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Ring t = ring_mul_sub(a[i * n + j], pivot, a[i * n + k], a[k * n + j]);
                a[i * n + j] = prev ? ring_exact_div(t, *prev) : std::move(t);
            }
            a[i * n + k] = zero_value;
        }
        prev = &a[k * n + k];
    }
    Ring det = a[(n - 1) * n + (n - 1)];
    return sign < 0 ? ring_neg(det) : det;
}

int degree_bound(const CharMatrix& M) {
    int bound = 0;
    for (int i = 0; i < M.size; ++i) {
        int row_max = 0;
        for (int j = 0; j < M.size; ++j) row_max = std::max(row_max, M.at(i, j).degree());
        bound += std::max(row_max, 0);
    }
    return bound;
}

} // namespace

CycPoly det_cycpoly(const CharMatrix& M) {
    if (M.size == 0) throw Error("empty matrix");
    const CycCtx& ctx = *M.entries[0].ctx;
    const int bound = degree_bound(M);
    std::vector<CycPoly> a = M.entries;
    CycPoly det = bareiss(a, M.size, CycPoly(ctx));
    if (det.degree() > bound) throw InternalCheckError("determinant exceeds its degree bound");
    return det;
}

CycNum det_cycnum(std::vector<CycNum> a, int n, const CycCtx& ctx) {
    if (n == 0) throw Error("empty matrix");
    return bareiss(a, n, CycNum(ctx));
}

namespace {

// exact monomial-basis interpolation through (xs[i], ys[i]), Newton form
std::vector<mpq_class> interpolate(const std::vector<long>& xs,
                                   const std::vector<mpq_class>& ys) {
    const std::size_t n = xs.size();
    std::vector<mpq_class> dd = ys; // divided differences, in place
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / mpq_class(xs[i] - xs[i - level]);
            if (i == level) break;
        }
    // expand Newton form to monomial coefficients
    std::vector<mpq_class> coeffs(n, mpq_class(0));
    std::vector<mpq_class> basis(n, mpq_class(0)); // prod (x - xs[j]), j < level
    basis[0] = 1;
    std::size_t basis_deg = 0;
    for (std::size_t level = 0; level < n; ++level) {
        for (std::size_t j = 0; j <= basis_deg; ++j) coeffs[j] += dd[level] * basis[j];
        if (level + 1 < n) {
            // basis *= (x - xs[level])
            for (std::size_t j = basis_deg + 1; j > 0; --j)
                basis[j] = basis[j - 1] - mpq_class(xs[level]) * basis[j];
            basis[0] = -mpq_class(xs[level]) * basis[0];
            ++basis_deg;
        }
    }
    return coeffs;
}

} // namespace

CycPoly det_cycpoly_interp(const CharMatrix& M) {
    if (M.size == 0) throw Error("empty matrix");
    const CycCtx& ctx = *M.entries[0].ctx;
    const int bound = degree_bound(M);
    const int points = bound + 1;

    std::vector<long> xs(points);
    std::vector<CycNum> values;
    values.reserve(points);
    for (int s = 0; s < points; ++s) {
        xs[s] = s;
        // evaluate every entry at X = s
        std::vector<CycNum> a(static_cast<std::size_t>(M.size) * M.size, CycNum(ctx));
        for (int i = 0; i < M.size; ++i)
            for (int j = 0; j < M.size; ++j) {
                const CycPoly& e = M.at(i, j);
                CycNum acc(ctx);
                mpz_class xp = 1;
                for (int d = 0; d <= e.degree(); ++d) {
                    if (!e.c[d].is_zero())
                        for (int t = 0; t < ctx.dim(); ++t)
                            if (e.c[d].c[t] != 0) acc.c[t] += e.c[d].c[t] * xp;
                    xp *= s;
                }
                a[i * M.size + j] = std::move(acc);
            }
        values.push_back(det_cycnum(std::move(a), M.size, ctx));
    }

    // interpolate each coordinate; every coefficient must be integral
    CycPoly result(ctx);
    result.c.assign(points, CycNum(ctx));
    for (int t = 0; t < ctx.dim(); ++t) {
        std::vector<mpq_class> ys(points);
        for (int s = 0; s < points; ++s) ys[s] = values[s].c[t];
        auto coeffs = interpolate(xs, ys);
        for (int d = 0; d < points; ++d) {
            if (coeffs[d].get_den() != 1)
                throw NonIntegerCoefficient("interpolated determinant not integral");
            result.c[d].c[t] = coeffs[d].get_num();
        }
    }
    result.normalize();
    return result;
}

std::vector<CycPoly> det_lambdas(const FieldCtx& F, const UnitSystem& sys, const CycCtx& ctx) {
    std::vector<CycPoly> dets;
    for (int t = 1; t <= F.q() - 2; ++t) {
        FqStarChar lambda{t, &ctx};
        dets.push_back(det_cycpoly(build_matrix(F, sys, lambda)));
    }
    return dets;
}

IntPoly det_minus(const FieldCtx& F, const UnitSystem& sys) {
    if (F.q() == 2) return IntPoly(1);
    CycCtx ctx(static_cast<int>(F.q()) - 1);
    CycPoly prod = CycPoly::one(ctx);
    for (const auto& d : det_lambdas(F, sys, ctx)) prod = cycpoly_mul(prod, d);
    auto ip = cycpoly_to_int(prod);
    if (!ip) throw NonIntegerCoefficient("det D_m^(-) has a non-integer coefficient");
    return *ip;
}

mpz_class maillet_product(const FieldCtx& F, const UnitSystem& sys) {
    if (F.q() == 2) return 1;
    CycCtx ctx(static_cast<int>(F.q()) - 1);
    const int n = static_cast<int>(sys.n_m);

    std::vector<FqPoly> inv(n);
    for (int j = 0; j < n; ++j) inv[j] = inverse_mod(F, sys.reps[j], sys.modulus);

    CycNum prod = CycNum::from_int(ctx, 1);
    for (int t = 1; t <= F.q() - 2; ++t) {
        FqStarChar lam_inv = FqStarChar{t, &ctx}.inverse();
        std::vector<CycNum> a(static_cast<std::size_t>(n) * n, CycNum(ctx));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) {
                    a[i * n + j] = CycNum::from_int(ctx, 1);
                } else {
                    FqPoly r =
                        poly_mod(F, poly_mul(F, sys.reps[i], inv[j]), sys.modulus);
                    a[i * n + j] = char_value(F, lam_inv, r.leading());
                }
            }
        prod = cyc_mul(prod, det_cycnum(std::move(a), n, ctx));
    }
    auto v = to_integer(prod);
    if (!v) throw NonIntegerCoefficient("Maillet product is not an integer");
    return *v;
}

} // namespace carlitz
