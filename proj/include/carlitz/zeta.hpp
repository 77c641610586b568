#ifndef CARLITZ_ZETA_HPP
#define CARLITZ_ZETA_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "carlitz/char_matrix.hpp"
#include "carlitz/characters.hpp"
#include "carlitz/cyclotomic.hpp"
#include "carlitz/fq.hpp"
#include "carlitz/splitting.hpp"
#include "carlitz/units.hpp"

namespace carlitz {

/// Full result bundle for one (q, m).
struct ZetaReport {
    long long p = 0;
    int n = 1;
    long long q = 0;
    FqPoly m;
    std::string m_text;
    long long phi_m = 0;
    long long n_m = 0;
    IntPoly det_poly;
    IntPoly j;
    IntPoly p_minus;
    mpz_class h_minus;
    mpz_class w_minus;
    std::vector<SplitData> split;
    std::map<std::string, bool> checks;
    std::map<std::string, double> timings_ms;

    friend bool operator==(const ZetaReport&, const ZetaReport&) = default;
};

struct ZetaOptions {
    bool with_oracle = false;
    long long phi_limit = 5000;
};

/// The pipeline: det D_m^(-) and J_m^(-) first, then the exact division
/// P = det / J, h^- = P(1), W^-, and the consistency checks (all of which
/// are theorems; a failure throws InternalCheckError).  With `with_oracle`
/// the Dirichlet-character recomputation runs and equality checks are added.
ZetaReport relative_zeta(const FieldCtx& F, const FqPoly& m, const ZetaOptions& opts = {});

/// Same pipeline, but failed checks are recorded in the report instead of
/// thrown; used by the verification CLI to print its pass/fail matrix.
ZetaReport relative_zeta_nothrow(const FieldCtx& F, const FqPoly& m, const ZetaOptions& opts = {});

/// prod over nontrivial lambda of det(c_ij^lambda), and whether it equals
/// W_m^- * h_m^- (the Maillet-type determinant identity).
std::pair<mpz_class, bool> maillet_determinant(const FieldCtx& F, const FqPoly& m);

/// Recomputes det/J/P with an alternative generator of F_q^x (when one
/// exists) and a shuffled representative order; true iff the integer
/// polynomials are identical.  `seed` fixes the shuffle.
bool invariance_trial(const FieldCtx& F, const FqPoly& m, const ZetaReport& reference,
                      unsigned long seed);

} // namespace carlitz

#endif
