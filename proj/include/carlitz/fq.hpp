#ifndef CARLITZ_FQ_HPP
#define CARLITZ_FQ_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "carlitz/errors.hpp"

namespace carlitz {

/// An element of F_q, identified by its canonical index in [0, q).
/// The index encodes the coordinate vector over the F_p-basis of F_q:
/// idx = sum coords[i] * p^i.  Arithmetic lives on FieldCtx.
struct FqElem {
    std::uint32_t idx = 0;
    friend bool operator==(FqElem, FqElem) = default;
};

/// A dense polynomial over F_q, lowest coefficient first, no trailing zeros.
/// The zero polynomial is the empty vector and has degree -1 (standing in
/// for -infinity: every comparison that matters is deg r < deg b with b != 0).
struct FqPoly {
    std::vector<FqElem> c;

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    FqElem coeff(std::size_t i) const { return i < c.size() ? c[i] : FqElem{0}; }
    FqElem leading() const { return c.empty() ? FqElem{0} : c.back(); }
    void normalize() {
        while (!c.empty() && c.back().idx == 0) c.pop_back();
    }

    friend bool operator==(const FqPoly&, const FqPoly&) = default;
    // Orders by degree, then within a degree by the enumeration order used
    // everywhere in this library (constant coefficient varying fastest, so
    // higher coefficients compare first).
    friend bool operator<(const FqPoly& a, const FqPoly& b) {
        if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
        for (std::size_t i = a.c.size(); i-- > 0;)
            if (a.c[i].idx != b.c[i].idx) return a.c[i].idx < b.c[i].idx;
        return false;
    }
};

/// Arithmetic context for F_q, q = p^n.  Carries full multiplication /
/// inverse / discrete-log tables (desk scale: q is capped at 1024) plus a
/// deterministically chosen generator of the multiplicative group.
class FieldCtx {
public:
    /// Builds F_q. When n > 1 and no defining polynomial is given, the
    /// lexicographically smallest monic irreducible of degree n over F_p is
    /// chosen. The generator is the smallest element (in canonical index
    /// order) of multiplicative order q-1.
    static FieldCtx make(long long p, int n,
                         const std::vector<long long>* defining_poly = nullptr);

    /// Same field, different generator (must have order q-1). The discrete
    /// log table is rebuilt; everything else is shared state re-derived.
    FieldCtx with_generator(FqElem g) const;

    long long p() const { return p_; }
    int n() const { return n_; }
    long long q() const { return q_; }
    FqElem generator() const { return gen_; }
    /// Coefficients of the defining polynomial over F_p (constant first,
    /// monic, length n+1); empty when n == 1.
    const std::vector<long long>& defining_poly() const { return defpoly_; }

    FqElem zero() const { return FqElem{0}; }
    FqElem one() const { return FqElem{1}; }
    /// Reduction of an integer into the prime subfield.
    FqElem from_int(long long v) const {
        long long r = v % p_;
        if (r < 0) r += p_;
        return FqElem{static_cast<std::uint32_t>(r)};
    }
    /// Element with the given coordinate vector over the F_p-basis.
    FqElem from_coords(const std::vector<long long>& coords) const;
    std::vector<long long> coords(FqElem a) const;

    FqElem add(FqElem a, FqElem b) const;
    FqElem sub(FqElem a, FqElem b) const;
    FqElem neg(FqElem a) const;
    FqElem mul(FqElem a, FqElem b) const { return FqElem{mul_[a.idx * q_ + b.idx]}; }
    FqElem inv(FqElem a) const;
    FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }
    FqElem pow(FqElem a, unsigned long long e) const;

    /// k with generator^k == a (a != 0).
    int dlog(FqElem a) const;
    /// Multiplicative order of a != 0.
    int mult_order(FqElem a) const;

private:
    long long p_ = 0;
    int n_ = 1;
    long long q_ = 0;
    std::vector<long long> defpoly_; // over F_p, constant first; empty iff n == 1
    FqElem gen_{0};
    std::vector<std::uint32_t> mul_;  // q*q multiplication table
    std::vector<std::uint32_t> inv_;  // inverse table, inv_[0] unused
    std::vector<int> dlog_;           // dlog_[a] = k with gen^k = a, a != 0

    void build_tables();
    void build_dlog();
};

// ---- polynomial ring A = F_q[T] -------------------------------------------

FqPoly poly_from_indices(const std::vector<std::uint32_t>& idx);
/// Coefficients given as integers, reduced into the prime subfield.
FqPoly poly_from_ints(const FieldCtx& F, const std::vector<long long>& v);
FqPoly poly_one();
FqPoly poly_t(); // the monomial T

bool is_monic(const FqPoly& a);

FqPoly poly_add(const FieldCtx& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_sub(const FieldCtx& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_neg(const FieldCtx& F, const FqPoly& a);
FqPoly poly_mul(const FieldCtx& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_scale(const FieldCtx& F, FqElem s, const FqPoly& a);
/// (quotient, remainder) with a = q*b + r, deg r < deg b.
std::pair<FqPoly, FqPoly> poly_divrem(const FieldCtx& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_mod(const FieldCtx& F, const FqPoly& a, const FqPoly& b);
/// Monic gcd.
FqPoly poly_gcd(const FieldCtx& F, FqPoly a, FqPoly b);
/// g = gcd(a,b) monic, plus u,v with u*a + v*b = g.
struct XgcdResult {
    FqPoly g, u, v;
};
XgcdResult poly_xgcd(const FieldCtx& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_powmod(const FieldCtx& F, const FqPoly& a, unsigned long long e, const FqPoly& m);
/// Scales a nonzero polynomial monic.
FqPoly poly_monic(const FieldCtx& F, const FqPoly& a);

/// All q^d monic polynomials of degree d, constant coefficient varying
/// fastest, coefficient values in canonical element order.
std::vector<FqPoly> enumerate_monic(const FieldCtx& F, int d);
/// All monic m with 1 <= deg m <= max_deg, in (degree, lex) order.
std::vector<FqPoly> all_monic_up_to(const FieldCtx& F, int max_deg);

/// Deterministic irreducibility test: f has no irreducible factor of degree
/// i iff gcd(f, T^{q^i} - T) = 1; probing i <= deg f / 2 decides.
bool is_irreducible(const FieldCtx& F, const FqPoly& f);

/// Factorization of a monic m of degree >= 1 by trial division, factors
/// sorted by (degree, lex).
std::vector<std::pair<FqPoly, int>> factorize(const FieldCtx& F, const FqPoly& m);

/// Phi(m) = |(A/(m))^x| from the factorization of m.
long long phi(const FieldCtx& F, const FqPoly& m);

/// Canonical text form, e.g. "T^3+T^2", "T^2+2*T+2", "1".  For extension
/// fields coefficients print as coordinate tuples "(c0,c1)".
std::string poly_to_string(const FieldCtx& F, const FqPoly& a);

} // namespace carlitz

#endif
