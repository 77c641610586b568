#ifndef CARLITZ_CHARACTERS_HPP
#define CARLITZ_CHARACTERS_HPP

#include <map>
#include <memory>
#include <vector>

#include "carlitz/char_matrix.hpp"
#include "carlitz/cyclotomic.hpp"
#include "carlitz/fq.hpp"

namespace carlitz {

/// Concrete basis of the finite abelian group (A/(m))^x: coprime-power
/// cyclic factors found by repeated extraction of an element of maximal
/// order in the quotient, plus an exhaustive discrete-log table.
struct AbelianBasis {
    FqPoly modulus;
    std::vector<std::pair<FqPoly, long long>> gens; // (unit, order), orders non-increasing
    long long exponent = 1;                         // E = lcm of the orders
    long long order = 1;                            // Phi(m)
    std::map<FqPoly, std::vector<long long>> dlog_table;

    const std::vector<long long>& dlog(const FqPoly& canonical_unit) const {
        auto it = dlog_table.find(canonical_unit);
        if (it == dlog_table.end()) throw NotAUnit("element not in the unit group");
        return it->second;
    }
};

AbelianBasis abelian_basis(const FieldCtx& F, const FqPoly& m, long long phi_limit = 5000);

/// Dirichlet character of (A/(m))^x, as exponents against the basis:
/// chi(u) = zeta_E^{sum_k exps[k] * (E/order_k) * dlog_k(u)}.
struct DirichletChar {
    const AbelianBasis* basis = nullptr;
    std::vector<long long> exps;
    const CycCtx* ctx = nullptr; // Z[zeta_E]

    bool is_trivial() const;
    /// k with chi(u) = zeta_E^k, for a canonical unit representative.
    long long value_exponent(const FqPoly& canonical_unit) const;
    /// Multiplicative order of the character.
    long long order() const;
};

enum class CharFilter { all, minus_part };

/// Primitive Dirichlet L-polynomial: coefficient of X^d is the sum of
/// chi(a) over monic a of degree d coprime to the conductor, for
/// 0 <= d <= deg f - 1.  `value` lives over Z[zeta_{order(chi)}].
struct LPoly {
    DirichletChar chr;
    FqPoly conductor;
    CycPoly value;
};

/// Character-group workspace for one modulus.  Owns the cyclotomic contexts
/// its values live in; not itself thread-safe, but independent instances are.
class CharacterOracle {
public:
    CharacterOracle(const FieldCtx& F, const FqPoly& m, long long phi_limit = 5000);

    const AbelianBasis& basis() const { return basis_; }
    const CycCtx& ctx_e() const { return ctx(static_cast<int>(basis_.exponent)); }

    std::vector<DirichletChar> characters(CharFilter filter) const;
    /// Characters whose restriction to F_q^x equals lambda.
    std::vector<DirichletChar> characters_restricted(const FqStarChar& lambda) const;

    /// Smallest-degree monic divisor f of m with chi trivial on the kernel
    /// of (A/(m))^x -> (A/(f))^x.
    FqPoly conductor(const DirichletChar& chi) const;

    /// For nontrivial chi only (conductor of degree >= 1).
    LPoly l_poly(const DirichletChar& chi) const;
    /// prod over Q | m of (1 - chi~(Q) X^{deg Q}) with chi~ the primitive
    /// version (factor 1 when Q divides the conductor); over the order ring.
    CycPoly j_factor(const DirichletChar& chi) const;

    /// P_m^(-)(X) as the product of primitive L-polynomials over the minus
    /// part, reduced to integer coefficients.
    IntPoly p_minus() const;
    /// J_m^(-)(X) as the character double product.
    IntPoly j_char() const;
    /// prod over chi restricting to lambda of L(X, chi~), as an element of
    /// Z[zeta_{q-1}][X] over lambda's context; equals det D_m^{(lambda)}(X).
    CycPoly det_lambda(const FqStarChar& lambda) const;

private:
    struct PrimChar {
        FqPoly conductor;
        long long order = 1;
        std::map<FqPoly, long long> expo; // residue mod conductor -> exponent of zeta_order
    };
    struct Suborbit {
        long long order = 1;            // common order of the members
        int lambda_t = 0;               // restriction exponent in [1, q-1)
        DirichletChar rep;
        std::vector<long long> conj;    // distinct conjugation exponents mod order
    };

    const CycCtx& ctx(int n) const;
    PrimChar primitive(const DirichletChar& chi) const;
    CycPoly l_value(const PrimChar& pc) const;   // over Z[zeta_order]
    CycPoly j_value(const PrimChar& pc) const;   // over Z[zeta_order]
    int restriction_exponent(const DirichletChar& chi) const;
    const std::vector<Suborbit>& suborbits() const;
    // product over the suborbit of sigma_a(f), f over Z[zeta_order]
    CycPoly suborbit_product(const Suborbit& so, const CycPoly& f) const;
    // re-express over Z[zeta_{gcd(order, q-1)}] and embed into `target`
    CycPoly to_subring(const CycPoly& s, long long order, const CycCtx& target) const;
    const CycPoly& suborbit_sl(std::size_t idx) const; // product of primitive L's
    const CycPoly& suborbit_sj(std::size_t idx) const; // product of j-factors

    const FieldCtx* F_;
    FqPoly m_;
    AbelianBasis basis_;
    std::vector<std::pair<FqPoly, int>> factors_;
    std::vector<FqPoly> divisors_; // monic divisors of m, (deg, lex) order
    mutable std::map<int, std::unique_ptr<CycCtx>> ctxs_;
    mutable std::vector<Suborbit> suborbits_;
    mutable bool suborbits_built_ = false;
    mutable std::vector<CycPoly> sl_, sj_;
    mutable std::vector<bool> sl_done_, sj_done_;
};

// Single-shot convenience wrappers.
IntPoly p_minus_oracle(const FieldCtx& F, const FqPoly& m, long long phi_limit = 5000);
IntPoly j_poly_char(const FieldCtx& F, const FqPoly& m, long long phi_limit = 5000);
CycPoly det_lambda_oracle(const FieldCtx& F, const FqPoly& m, const FqStarChar& lambda,
                          long long phi_limit = 5000);

} // namespace carlitz

#endif
