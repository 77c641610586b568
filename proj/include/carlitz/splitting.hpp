#ifndef CARLITZ_SPLITTING_HPP
#define CARLITZ_SPLITTING_HPP

#include <gmpxx.h>

#include <vector>

#include "carlitz/cyclotomic.hpp"
#include "carlitz/fq.hpp"

namespace carlitz {

/// Ramification data of a prime divisor Q of m in K_m/k and K_m^+/k:
/// e*f*g = Phi(m) and e_plus*f_plus*g_plus = Phi(m)/(q-1).
struct SplitData {
    FqPoly Q;
    int deg_q = 0;
    int v = 0; // exponent of Q in m
    long long e = 0, f = 0, g = 0;
    long long e_plus = 0, f_plus = 0, g_plus = 0;

    friend bool operator==(const SplitData&, const SplitData&) = default;
};

/// J_m^(-)(X) as the exact rational-function product over Q | m, together
/// with the per-factor numerators and denominators.
struct JPoly {
    IntPoly value;
    struct PerQ {
        SplitData split;
        IntPoly numerator;   // (1 - X^{f deg Q})^g
        IntPoly denominator; // (1 - X^{f+ deg Q})^{g+}
    };
    std::vector<PerQ> per_q;
};

/// Splitting data for Q^v || m, from pure group arithmetic:
/// f = order of Q in (A/(m_Q))^x, f+ = least k with Q^k scalar mod m_Q,
/// with m_Q = m / Q^v (both are 1 when m_Q = 1).
SplitData split_data(const FieldCtx& F, const FqPoly& m, const FqPoly& Q, int v);

JPoly j_poly(const FieldCtx& F, const FqPoly& m);

/// W_m^- : prod over Q of (f_Q^-)^{g_Q^+} when every g_Q^- = 1, else 0.
/// Equals J_m^(-)(1).
mpz_class w_minus(const FieldCtx& F, const FqPoly& m);

} // namespace carlitz

#endif
