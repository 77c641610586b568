#include "carlitz/lowdeg.hpp"

namespace carlitz {

long long c_m(const FieldCtx& F, const UnitSystem& sys) {
    long long count = 0;
    for (const auto& rep : sys.reps) {
        FqPoly inv = inverse_mod(F, rep, sys.modulus);
        if (inv.leading() == F.one()) ++count;
    }
    return count;
}

LowDegPrediction predict_low_coeffs(const FieldCtx& F, const UnitSystem& sys) {
    const int d = sys.modulus.degree();
    if (d < 2) throw DegreeTooSmall("predictions need deg m >= 2");
    LowDegPrediction pred;
    pred.a1 = 0;
    if (d > 2) {
        pred.a2 = mpz_class(0);
        return pred;
    }
    const long long cm = c_m(F, sys);
    pred.c_m = cm;
    // a2 = (N_m/2) * ((q-1)(1-C_m) + N_m - 1); the product is always even
    mpz_class t = mpz_class(static_cast<long>(sys.n_m)) *
                  static_cast<long>((F.q() - 1) * (1 - cm) + sys.n_m - 1);
    if (t % 2 != 0) throw InternalCheckError("a2 closed form is not an integer");
    pred.a2 = t / 2;
    return pred;
}

} // namespace carlitz
