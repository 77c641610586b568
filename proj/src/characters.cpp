#include "carlitz/characters.hpp"

#include <algorithm>
#include <numeric>

namespace carlitz {

namespace {

std::vector<long long> divisors_ascending(long long n) {
    std::vector<long long> d;
    for (long long i = 1; i * i <= n; ++i)
        if (n % i == 0) {
            d.push_back(i);
            if (i != n / i) d.push_back(n / i);
        }
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

AbelianBasis abelian_basis(const FieldCtx& F, const FqPoly& m, long long phi_limit) {
    if (!is_monic(m)) throw NotMonic("modulus must be monic");
    if (m.degree() < 1) throw ConstantModulus();
    const long long phi_m = phi(F, m);
    if (phi_m > phi_limit) throw GroupTooLarge(phi_m, phi_limit);

    AbelianBasis B;
    B.modulus = m;
    B.order = phi_m;

    // all units of (A/(m))^x as canonical representatives
    std::vector<FqPoly> units;
    long long codes = 1;
    for (int i = 0; i < m.degree(); ++i) codes *= F.q();
    for (long long code = 1; code < codes; ++code) {
        FqPoly u;
        u.c.resize(m.degree(), F.zero());
        long long c = code;
        for (int i = 0; i < m.degree(); ++i) {
            u.c[i] = FqElem{static_cast<std::uint32_t>(c % F.q())};
            c /= F.q();
        }
        u.normalize();
        if (poly_gcd(F, u, m).degree() == 0) units.push_back(std::move(u));
    }
    if (static_cast<long long>(units.size()) != phi_m)
        throw InternalCheckError("unit count disagrees with Phi(m)");

    B.dlog_table[poly_one()] = {};
    const auto divs = divisors_ascending(phi_m);

    while (static_cast<long long>(B.dlog_table.size()) < phi_m) {
        // element of maximal order in G/H
        const FqPoly* best = nullptr;
        long long best_r = 0;
        for (const auto& u : units) {
            if (B.dlog_table.count(u)) continue;
            long long r = 0;
            for (long long d : divs)
                if (B.dlog_table.count(poly_powmod(F, u, static_cast<unsigned long long>(d), m))) {
                    r = d;
                    break;
                }
            if (r > best_r) {
                best_r = r;
                best = &u;
            }
        }
        if (!best) throw InternalCheckError("abelian basis extraction stalled");

        // adjust so the new generator has exact order best_r: u^r = prod g_i^{s_i}
        // with r | s_i (purity of the subgroup built so far)
        FqPoly u = *best;
        const auto& s = B.dlog_table.at(poly_powmod(F, u, static_cast<unsigned long long>(best_r), m));
        for (std::size_t i = 0; i < B.gens.size(); ++i) {
            if (s[i] % best_r != 0)
                throw InternalCheckError("basis adjustment divisibility failed");
            long long shift = (B.gens[i].second - s[i] / best_r) % B.gens[i].second;
            if (shift)
                u = poly_mod(F,
                             poly_mul(F, u,
                                      poly_powmod(F, B.gens[i].first,
                                                  static_cast<unsigned long long>(shift), m)),
                             m);
        }
        if (!(poly_powmod(F, u, static_cast<unsigned long long>(best_r), m) == poly_one()))
            throw InternalCheckError("adjusted generator has wrong order");

        // extend the dlog table by the new cyclic factor
        auto old = B.dlog_table;
        for (auto& [rep, tup] : B.dlog_table) tup.push_back(0);
        FqPoly cur = poly_one();
        for (long long j = 1; j < best_r; ++j) {
            cur = poly_mod(F, poly_mul(F, cur, u), m);
            for (const auto& [rep, tup] : old) {
                auto t2 = tup;
                t2.push_back(j);
                B.dlog_table[poly_mod(F, poly_mul(F, rep, cur), m)] = std::move(t2);
            }
        }
        B.gens.emplace_back(std::move(u), best_r);
    }

    B.exponent = B.gens.empty() ? 1 : B.gens[0].second;
    for (std::size_t i = 1; i < B.gens.size(); ++i)
        if (B.gens[i - 1].second % B.gens[i].second != 0)
            throw InternalCheckError("basis orders not a divisibility chain");
    return B;
}

bool DirichletChar::is_trivial() const {
    for (long long e : exps)
        if (e != 0) return false;
    return true;
}

long long DirichletChar::value_exponent(const FqPoly& canonical_unit) const {
    const auto& tup = basis->dlog(canonical_unit);
    const long long E = basis->exponent;
    long long k = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        long long o = basis->gens[i].second;
        k = (k + exps[i] % o * (E / o) % E * (tup[i] % o)) % E;
    }
    return (k % E + E) % E;
}

long long DirichletChar::order() const {
    long long o = 1;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        long long oi = basis->gens[i].second;
        long long ord_i = oi / std::gcd(oi, exps[i]);
        o = std::lcm(o, ord_i);
    }
    return o;
}

CharacterOracle::CharacterOracle(const FieldCtx& F, const FqPoly& m, long long phi_limit)
    : F_(&F), m_(m), basis_(abelian_basis(F, m, phi_limit)), factors_(factorize(F, m)) {
    // monic divisors of m in (deg, lex) order
    divisors_.push_back(poly_one());
    for (const auto& [Q, v] : factors_) {
        std::vector<FqPoly> next;
        FqPoly power = poly_one();
        for (int a = 0; a <= v; ++a) {
            for (const auto& d : divisors_) next.push_back(poly_mul(F, d, power));
            if (a < v) power = poly_mul(F, power, Q);
        }
        divisors_ = std::move(next);
    }
    std::sort(divisors_.begin(), divisors_.end());
}

const CycCtx& CharacterOracle::ctx(int n) const {
    auto it = ctxs_.find(n);
    if (it == ctxs_.end()) it = ctxs_.emplace(n, std::make_unique<CycCtx>(n)).first;
    return *it->second;
}

std::vector<DirichletChar> CharacterOracle::characters(CharFilter filter) const {
    const CycCtx& ce = ctx_e();
    std::vector<DirichletChar> out;
    std::vector<long long> exps(basis_.gens.size(), 0);
    const FqPoly g_const{{F_->generator()}};
    while (true) {
        DirichletChar chi{&basis_, exps, &ce};
        if (filter == CharFilter::all || chi.value_exponent(g_const) != 0) out.push_back(chi);
        // odometer, first generator slowest
        std::size_t i = exps.size();
        while (i > 0) {
            --i;
            if (++exps[i] < basis_.gens[i].second) break;
            exps[i] = 0;
            if (i == 0) return out;
        }
        if (exps.empty()) return out; // trivial group: single character
    }
}

int CharacterOracle::restriction_exponent(const DirichletChar& chi) const {
    const long long qm1 = F_->q() - 1;
    if (qm1 == 0 || basis_.exponent % qm1 != 0)
        throw EmbeddingMismatch("F_q^x does not embed in the unit group");
    const FqPoly g_const{{F_->generator()}};
    long long kg = chi.value_exponent(g_const);
    long long step = basis_.exponent / qm1;
    if (kg % step != 0) throw InternalCheckError("restriction is not a character of F_q^x");
    return static_cast<int>(kg / step);
}

std::vector<DirichletChar> CharacterOracle::characters_restricted(const FqStarChar& lambda) const {
    const long long qm1 = F_->q() - 1;
    int t = ((lambda.exponent % qm1) + qm1) % qm1;
    std::vector<DirichletChar> out;
    for (auto& chi : characters(CharFilter::all))
        if (restriction_exponent(chi) == t) out.push_back(std::move(chi));
    return out;
}

FqPoly CharacterOracle::conductor(const DirichletChar& chi) const {
    for (const auto& f : divisors_) {
        if (f.degree() == 0) {
            if (chi.is_trivial()) return f;
            continue;
        }
        bool trivial_on_kernel = true;
        for (const auto& [rep, tup] : basis_.dlog_table) {
            if (!(poly_mod(*F_, rep, f) == poly_one())) continue;
            if (chi.value_exponent(rep) != 0) {
                trivial_on_kernel = false;
                break;
            }
        }
        if (trivial_on_kernel) return f;
    }
    throw InternalCheckError("no conductor found"); // m itself always qualifies
}

CharacterOracle::PrimChar CharacterOracle::primitive(const DirichletChar& chi) const {
    PrimChar pc;
    pc.conductor = conductor(chi);
    pc.order = chi.order();
    const long long E = basis_.exponent;
    const long long step = E / pc.order;
    for (const auto& [rep, tup] : basis_.dlog_table) {
        long long k = chi.value_exponent(rep);
        if (k % step != 0) throw InternalCheckError("character value outside its order group");
        long long kp = k / step;
        FqPoly r = poly_mod(*F_, rep, pc.conductor);
        auto [it, inserted] = pc.expo.emplace(std::move(r), kp);
        if (!inserted && it->second != kp)
            throw InternalCheckError("primitive character values inconsistent");
    }
    return pc;
}

CycPoly CharacterOracle::l_value(const PrimChar& pc) const {
    const CycCtx& co = ctx(static_cast<int>(pc.order));
    const int degf = pc.conductor.degree();
    CycPoly value(co);
    value.c.assign(std::max(degf, 1), CycNum(co));
    for (int d = 0; d <= degf; ++d) {
        std::vector<long long> hist(pc.order, 0);
        for (const auto& a : enumerate_monic(*F_, d)) {
            auto it = pc.expo.find(poly_mod(*F_, a, pc.conductor));
            if (it != pc.expo.end()) ++hist[it->second];
        }
        CycNum coeff(co);
        for (long long j = 0; j < pc.order; ++j) {
            if (hist[j] == 0) continue;
            const auto& row = co.xpow(static_cast<int>(j));
            for (int t = 0; t < co.dim(); ++t)
                if (row[t] != 0) coeff.c[t] += static_cast<long>(hist[j]) * row[t];
        }
        if (d < degf) {
            value.c[d] = std::move(coeff);
        } else if (!coeff.is_zero()) {
            // orthogonality: the sum over a full degree vanishes
            throw InternalCheckError("primitive character sum did not vanish at deg f");
        }
    }
    value.normalize();
    return value;
}

CycPoly CharacterOracle::j_value(const PrimChar& pc) const {
    const CycCtx& co = ctx(static_cast<int>(pc.order));
    CycPoly prod = CycPoly::one(co);
    for (const auto& [Q, v] : factors_) {
        auto it = pc.expo.find(poly_mod(*F_, Q, pc.conductor));
        if (it == pc.expo.end()) continue; // chi~(Q) = 0: factor is 1
        CycPoly factor(co);
        factor.c.assign(Q.degree() + 1, CycNum(co));
        factor.c[0] = CycNum::from_int(co, 1);
        factor.c[Q.degree()] = cyc_neg(zeta_power(co, it->second));
        prod = cycpoly_mul(prod, factor);
    }
    return prod;
}

LPoly CharacterOracle::l_poly(const DirichletChar& chi) const {
    if (chi.is_trivial()) throw TrivialCharacter();
    PrimChar pc = primitive(chi);
    if (pc.conductor.degree() < 1) throw TrivialCharacter();
    return LPoly{chi, pc.conductor, l_value(pc)};
}

CycPoly CharacterOracle::j_factor(const DirichletChar& chi) const {
    return j_value(primitive(chi));
}

const std::vector<CharacterOracle::Suborbit>& CharacterOracle::suborbits() const {
    if (suborbits_built_) return suborbits_;
    const long long E = basis_.exponent;
    const long long qm1 = F_->q() - 1;

    // conjugation exponents fixing the restriction to F_q^x
    std::vector<long long> s_e;
    for (long long a = 1; a <= E; ++a)
        if (std::gcd(a, E) == 1 && (qm1 == 1 || a % qm1 == 1)) s_e.push_back(a);

    std::map<std::vector<long long>, bool> assigned;
    for (const auto& chi : characters(CharFilter::minus_part)) {
        if (assigned.count(chi.exps)) continue;
        Suborbit so;
        so.order = chi.order();
        so.lambda_t = restriction_exponent(chi);
        so.rep = chi;
        std::map<std::vector<long long>, long long> members; // tuple -> conj exponent
        for (long long a : s_e) {
            std::vector<long long> te(chi.exps.size());
            for (std::size_t i = 0; i < te.size(); ++i)
                te[i] = chi.exps[i] * (a % basis_.gens[i].second) % basis_.gens[i].second;
            if (!members.count(te)) members.emplace(std::move(te), a % so.order);
        }
        for (auto& [tuple, a] : members) {
            assigned[tuple] = true;
            so.conj.push_back(a);
        }
        std::sort(so.conj.begin(), so.conj.end());
        suborbits_.push_back(std::move(so));
    }
    sl_.assign(suborbits_.size(), CycPoly());
    sj_.assign(suborbits_.size(), CycPoly());
    sl_done_.assign(suborbits_.size(), false);
    sj_done_.assign(suborbits_.size(), false);
    suborbits_built_ = true;
    return suborbits_;
}

namespace {

// sigma_a: zeta_o -> zeta_o^a applied coefficientwise
CycPoly conjugate(const CycPoly& f, long long a) {
    const CycCtx& co = *f.ctx;
    CycPoly r(co);
    r.c.reserve(f.c.size());
    for (const auto& coeff : f.c) {
        CycNum v(co);
        for (int j = 0; j < co.dim(); ++j) {
            if (coeff.c[j] == 0) continue;
            const auto& row = co.xpow(static_cast<int>(a * j % co.n()));
            for (int t = 0; t < co.dim(); ++t)
                if (row[t] != 0)
                    mpz_addmul(v.c[t].get_mpz_t(), coeff.c[j].get_mpz_t(), row[t].get_mpz_t());
        }
        r.c.push_back(std::move(v));
    }
    r.normalize();
    return r;
}

bool is_one_poly(const CycPoly& f) {
    return f.degree() == 0 && to_integer(f.c[0]).value_or(0) == 1;
}

} // namespace

CycPoly CharacterOracle::suborbit_product(const Suborbit& so, const CycPoly& f) const {
    const CycCtx& co = ctx(static_cast<int>(so.order));
    if (is_one_poly(f)) return CycPoly::one(co);
    CycPoly prod = CycPoly::one(co);
    for (long long a : so.conj) prod = cycpoly_mul(prod, conjugate(f, a));
    return prod;
}

const CycPoly& CharacterOracle::suborbit_sl(std::size_t idx) const {
    const auto& so = suborbits()[idx];
    if (!sl_done_[idx]) {
        sl_[idx] = suborbit_product(so, l_value(primitive(so.rep)));
        sl_done_[idx] = true;
    }
    return sl_[idx];
}

const CycPoly& CharacterOracle::suborbit_sj(std::size_t idx) const {
    const auto& so = suborbits()[idx];
    if (!sj_done_[idx]) {
        sj_[idx] = suborbit_product(so, j_value(primitive(so.rep)));
        sj_done_[idx] = true;
    }
    return sj_[idx];
}

CycPoly CharacterOracle::to_subring(const CycPoly& s, long long order, const CycCtx& target) const {
    const long long g = std::gcd(order, static_cast<long long>(target.n()));
    const CycCtx& cg = ctx(static_cast<int>(g));
    const CycCtx& co = ctx(static_cast<int>(order));
    SubringSolver solver(co, cg);
    auto down = solver.solve(s);
    if (!down) throw EmbeddingMismatch("suborbit product lies outside the invariant subring");
    return embed_up(*down, target);
}

IntPoly CharacterOracle::p_minus() const {
    if (F_->q() == 2) return IntPoly(1);
    const CycCtx& cw = ctx(static_cast<int>(F_->q()) - 1);
    CycPoly prod = CycPoly::one(cw);
    for (std::size_t i = 0; i < suborbits().size(); ++i)
        prod = cycpoly_mul(prod, to_subring(suborbit_sl(i), suborbits()[i].order, cw));
    auto ip = cycpoly_to_int(prod);
    if (!ip) throw NonIntegerCoefficient("P_m^(-) oracle product is not integral");
    if (ip->coeff(0) != 1) throw InternalCheckError("P_m^(-)(0) != 1");
    return *ip;
}

IntPoly CharacterOracle::j_char() const {
    if (F_->q() == 2) return IntPoly(1);
    const CycCtx& cw = ctx(static_cast<int>(F_->q()) - 1);
    CycPoly prod = CycPoly::one(cw);
    for (std::size_t i = 0; i < suborbits().size(); ++i)
        prod = cycpoly_mul(prod, to_subring(suborbit_sj(i), suborbits()[i].order, cw));
    auto ip = cycpoly_to_int(prod);
    if (!ip) throw NonIntegerCoefficient("J_m^(-) character product is not integral");
    return *ip;
}

CycPoly CharacterOracle::det_lambda(const FqStarChar& lambda) const {
    if (lambda.is_trivial()) throw TrivialCharacter();
    const long long qm1 = F_->q() - 1;
    if (basis_.exponent % qm1 != 0)
        throw EmbeddingMismatch("F_q^x does not embed in the unit group");
    const int t = ((lambda.exponent % static_cast<int>(qm1)) + static_cast<int>(qm1)) %
                  static_cast<int>(qm1);
    const CycCtx& target = *lambda.ctx;
    CycPoly prod = CycPoly::one(target);
    for (std::size_t i = 0; i < suborbits().size(); ++i) {
        const auto& so = suborbits()[i];
        if (so.lambda_t != t) continue;
        const CycPoly& sj = suborbit_sj(i);
        CycPoly piece = is_one_poly(sj) ? suborbit_sl(i) : cycpoly_mul(suborbit_sl(i), sj);
        prod = cycpoly_mul(prod, to_subring(piece, so.order, target));
    }
    return prod;
}

IntPoly p_minus_oracle(const FieldCtx& F, const FqPoly& m, long long phi_limit) {
    return CharacterOracle(F, m, phi_limit).p_minus();
}

IntPoly j_poly_char(const FieldCtx& F, const FqPoly& m, long long phi_limit) {
    return CharacterOracle(F, m, phi_limit).j_char();
}

CycPoly det_lambda_oracle(const FieldCtx& F, const FqPoly& m, const FqStarChar& lambda,
                          long long phi_limit) {
    return CharacterOracle(F, m, phi_limit).det_lambda(lambda);
}

} // namespace carlitz
