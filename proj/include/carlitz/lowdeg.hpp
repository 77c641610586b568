#ifndef CARLITZ_LOWDEG_HPP
#define CARLITZ_LOWDEG_HPP

#include <gmpxx.h>

#include <optional>

#include "carlitz/fq.hpp"
#include "carlitz/units.hpp"

namespace carlitz {

/// Closed-form predictions for the coefficients of X and X^2 in
/// det D_m^(-)(X): a1 = 0 always; a2 = 0 for deg m > 2 and
/// (N_m/2)((q-1)(1-C_m) + N_m - 1) for deg m = 2.
struct LowDegPrediction {
    long long a1 = 0;
    std::optional<mpz_class> a2;
    std::optional<long long> c_m;
};

/// C_m: the number of representatives a_i whose inverse has leading
/// coefficient 1.
long long c_m(const FieldCtx& F, const UnitSystem& sys);

/// Requires deg m >= 2.
LowDegPrediction predict_low_coeffs(const FieldCtx& F, const UnitSystem& sys);

} // namespace carlitz

#endif
