#include "carlitz/splitting.hpp"

namespace carlitz {

SplitData split_data(const FieldCtx& F, const FqPoly& m, const FqPoly& Q, int v) {
    if (!is_monic(m)) throw NotMonic("modulus must be monic");
    // m_Q = m / Q^v, and Q^v must divide m exactly
    FqPoly m_q = m;
    for (int i = 0; i < v; ++i) {
        auto [quot, rem] = poly_divrem(F, m_q, Q);
        if (!rem.is_zero()) throw NotExactDivisor("Q^v does not divide m");
        m_q = quot;
    }
    if (poly_mod(F, m_q, Q).is_zero()) throw NotExactDivisor("Q^v is not the exact power in m");

    const long long qm1 = F.q() - 1;
    const long long phi_m = phi(F, m);

    SplitData s;
    s.Q = Q;
    s.deg_q = Q.degree();
    s.v = v;

    if (m_q.degree() == 0) {
        // prime-power modulus: Q totally ramified in K_m/k
        s.f = 1;
        s.g = 1;
        s.e = phi_m;
        s.f_plus = 1;
        s.g_plus = 1;
        s.e_plus = phi_m / qm1;
        return s;
    }

    const long long phi_mq = phi(F, m_q);
    const FqPoly q_red = poly_mod(F, Q, m_q);
    FqPoly cur = q_red;
    long long f = 0, f_plus = 0;
    for (long long k = 1; k <= phi_mq; ++k) {
        if (f_plus == 0 && cur.degree() == 0) f_plus = k; // scalar power
        if (cur == poly_one()) {
            f = k;
            break;
        }
        cur = poly_mod(F, poly_mul(F, cur, q_red), m_q);
    }
    if (f == 0) throw Error("order computation did not terminate"); // cannot happen
    s.f = f;
    s.g = phi_mq / f;
    s.e = phi_m / (s.f * s.g);
    s.f_plus = f_plus;
    const long long g_plus_order = phi_mq / qm1; // |(A/(m_Q))^x / F_q^x|
    s.g_plus = g_plus_order / f_plus;
    s.e_plus = (phi_m / qm1) / (s.f_plus * s.g_plus);
    return s;
}

namespace {

// (1 - X^a)^b
IntPoly binomial_power(long long a, long long b) {
    IntPoly base;
    base.c.assign(a + 1, mpz_class(0));
    base.c[0] = 1;
    base.c[a] = -1;
    IntPoly acc(1);
    for (long long i = 0; i < b; ++i) acc = int_mul(acc, base);
    return acc;
}

} // namespace

JPoly j_poly(const FieldCtx& F, const FqPoly& m) {
    if (!is_monic(m)) throw NotMonic("modulus must be monic");
    if (m.degree() < 1) throw ConstantModulus();
    JPoly jp;
    IntPoly num(1), den(1);
    for (const auto& [Q, v] : factorize(F, m)) {
        SplitData s = split_data(F, m, Q, v);
        IntPoly qn = binomial_power(s.f * s.deg_q, s.g);
        IntPoly qd = binomial_power(s.f_plus * s.deg_q, s.g_plus);
        num = int_mul(num, qn);
        den = int_mul(den, qd);
        jp.per_q.push_back({std::move(s), std::move(qn), std::move(qd)});
    }
    jp.value = int_exact_div(num, den);
    return jp;
}

mpz_class w_minus(const FieldCtx& F, const FqPoly& m) {
    if (!is_monic(m)) throw NotMonic("modulus must be monic");
    if (m.degree() < 1) throw ConstantModulus();
    mpz_class w = 1;
    for (const auto& [Q, v] : factorize(F, m)) {
        SplitData s = split_data(F, m, Q, v);
        if (s.g != s.g_plus) return 0; // some g_Q^- != 1
        mpz_class f_minus(static_cast<long>(s.f / s.f_plus));
        mpz_class term;
        mpz_pow_ui(term.get_mpz_t(), f_minus.get_mpz_t(), static_cast<unsigned long>(s.g_plus));
        w *= term;
    }
    return w;
}

} // namespace carlitz
