#ifndef CARLITZ_CYCLOTOMIC_HPP
#define CARLITZ_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "carlitz/errors.hpp"

namespace carlitz {

/// Polynomial over Z in one variable, lowest coefficient first, no trailing
/// zeros; the zero polynomial is empty (degree -1).
struct IntPoly {
    std::vector<mpz_class> c;

    IntPoly() = default;
    explicit IntPoly(long v) {
        if (v != 0) c.emplace_back(v);
    }
    static IntPoly from(std::vector<mpz_class> coeffs) {
        IntPoly r;
        r.c = std::move(coeffs);
        r.normalize();
        return r;
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    mpz_class coeff(std::size_t i) const { return i < c.size() ? c[i] : mpz_class(0); }
    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    friend bool operator==(const IntPoly&, const IntPoly&) = default;
};

IntPoly int_add(const IntPoly& a, const IntPoly& b);
IntPoly int_sub(const IntPoly& a, const IntPoly& b);
IntPoly int_mul(const IntPoly& a, const IntPoly& b);
IntPoly int_neg(const IntPoly& a);
/// Exact division in Z[X]; throws InexactDivision if b does not divide a.
IntPoly int_exact_div(const IntPoly& a, const IntPoly& b);
mpz_class int_eval(const IntPoly& a, const mpz_class& x);
/// "1 - 2*X^2 + 9*X^4" rendering.
std::string int_poly_to_string(const IntPoly& a, const std::string& var = "X");

/// The n-th cyclotomic polynomial, by iterated exact division of x^n - 1 by
/// the cyclotomic polynomials of the proper divisors of n.
IntPoly cyclotomic_poly(int n);

/// Arithmetic context for Z[zeta_n] = Z[x]/(Phi_n(x)).  Holds the reduction
/// table x^k mod Phi_n for every exponent a product of two reduced elements
/// (or zeta_power) can hit.
class CycCtx {
public:
    explicit CycCtx(int n);

    int n() const { return n_; }
    int dim() const { return dim_; }
    const IntPoly& cyclo() const { return cyclo_; }
    /// Coordinates of x^k mod Phi_n, valid for 0 <= k <= max_pow().
    const std::vector<mpz_class>& xpow(int k) const { return xpow_[k]; }
    int max_pow() const { return static_cast<int>(xpow_.size()) - 1; }

private:
    int n_;
    int dim_;
    IntPoly cyclo_;
    std::vector<std::vector<mpz_class>> xpow_;
};

/// Element of Z[zeta_n] as integer coordinates over 1, x, ..., x^{phi(n)-1}.
/// A default-constructed value is null and only assignable.
struct CycNum {
    const CycCtx* ctx = nullptr;
    std::vector<mpz_class> c;

    CycNum() = default;
    explicit CycNum(const CycCtx& context) : ctx(&context), c(context.dim()) {}
    static CycNum from_int(const CycCtx& context, const mpz_class& v) {
        CycNum r(context);
        r.c[0] = v;
        return r;
    }

    bool is_zero() const {
        for (const auto& x : c)
            if (x != 0) return false;
        return true;
    }
    friend bool operator==(const CycNum& a, const CycNum& b) { return a.c == b.c; }
};

CycNum cyc_add(const CycNum& a, const CycNum& b);
CycNum cyc_sub(const CycNum& a, const CycNum& b);
CycNum cyc_neg(const CycNum& a);
CycNum cyc_mul(const CycNum& a, const CycNum& b);
/// zeta_n^k (k arbitrary, taken mod n).
CycNum zeta_power(const CycCtx& ctx, long long k);
/// The integer value iff all coordinates above the constant vanish.
std::optional<mpz_class> to_integer(const CycNum& a);
/// Exact division in Z[zeta_n] via inversion in Q(zeta_n); throws
/// InexactDivision when b does not divide a (or DivisionByZero).
CycNum cyc_exact_div(const CycNum& a, const CycNum& b);
std::string cyc_to_string(const CycNum& a);

/// Polynomial in X over Z[zeta_n], lowest coefficient first, normalized.
struct CycPoly {
    const CycCtx* ctx = nullptr;
    std::vector<CycNum> c;

    CycPoly() = default;
    explicit CycPoly(const CycCtx& context) : ctx(&context) {}
    static CycPoly constant(const CycCtx& context, const CycNum& v) {
        CycPoly r(context);
        r.c.push_back(v);
        r.normalize();
        return r;
    }
    static CycPoly monomial(const CycCtx& context, const CycNum& v, int deg) {
        CycPoly r(context);
        r.c.assign(deg + 1, CycNum(context));
        r.c[deg] = v;
        r.normalize();
        return r;
    }
    static CycPoly one(const CycCtx& context) {
        return constant(context, CycNum::from_int(context, 1));
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    CycNum coeff(std::size_t i) const {
        return i < c.size() ? c[i] : CycNum(*ctx);
    }
    void normalize() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    friend bool operator==(const CycPoly& a, const CycPoly& b) { return a.c == b.c; }
};

CycPoly cycpoly_add(const CycPoly& a, const CycPoly& b);
CycPoly cycpoly_sub(const CycPoly& a, const CycPoly& b);
CycPoly cycpoly_mul(const CycPoly& a, const CycPoly& b);
/// a*b - c*d in one pass (single reduction per output coefficient).
CycPoly cycpoly_mul_sub(const CycPoly& a, const CycPoly& b, const CycPoly& c, const CycPoly& d);
CycPoly cycpoly_neg(const CycPoly& a);
/// Exact division in Z[zeta_n][X]: long division over Q(zeta_n) with an
/// integrality check on every quotient coefficient and a zero remainder.
CycPoly cycpoly_exact_div(const CycPoly& a, const CycPoly& b);
/// Sum of coefficients (the value at X = 1).
CycNum cycpoly_eval_one(const CycPoly& a);
/// Lift of an integer polynomial into Z[zeta_n][X].
CycPoly cycpoly_from_int(const CycCtx& ctx, const IntPoly& a);
/// Integer polynomial iff every coefficient passes to_integer.
std::optional<IntPoly> cycpoly_to_int(const CycPoly& a);

/// Exact division by a fixed nonzero element, entirely in integer
/// arithmetic: x = adj(M_b) a / det(M_b) with M_b the multiplication-by-b
/// matrix (det = +-Norm(b) != 0).  divide() returns false when b does not
/// divide a in Z[zeta].
class CycNumDivider {
public:
    explicit CycNumDivider(const CycNum& b);
    bool divide(const CycNum& a, CycNum& out) const;

private:
    const CycCtx* ctx_;
    std::vector<mpz_class> adj_; // row-major adjugate of M_b
    mpz_class det_;
};

/// Map along Z[zeta_{from}] -> Z[zeta_{to}] with from.n() | to.n(),
/// zeta_from = zeta_to^{to.n/from.n}.
CycNum embed_up(const CycNum& a, const CycCtx& to);
CycPoly embed_up(const CycPoly& a, const CycCtx& to);

/// Re-expresses elements of Z[zeta_{from}] that happen to lie in the subring
/// Z[zeta_{to}] (to.n() | from.n(), eta = zeta_from^{from.n/to.n}) over the
/// power basis of the subring.  solve() returns nothing when the element is
/// not in the subring (or not integral over it).
class SubringSolver {
public:
    SubringSolver(const CycCtx& from, const CycCtx& to);
    std::optional<CycNum> solve(const CycNum& a) const;
    std::optional<CycPoly> solve(const CycPoly& a) const;

private:
    const CycCtx* from_;
    const CycCtx* to_;
    std::vector<std::vector<mpz_class>> basis_; // columns eta^j in from-coords
    std::vector<int> pivot_rows_;
    std::vector<std::vector<mpq_class>> pivot_inv_; // inverse of pivot submatrix
};

} // namespace carlitz

#endif
