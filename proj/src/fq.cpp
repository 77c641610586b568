#include "carlitz/fq.hpp"

#include <algorithm>
#include <cstdlib>

namespace carlitz {

namespace {

constexpr long long kMaxQ = 1024; // table-based field arithmetic; desk scale

bool is_prime_ll(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// F_p[x] helpers used only while constructing a FieldCtx (before the q-level
// tables exist).  Coefficients are plain residues mod p, constant first.
using PPoly = std::vector<long long>;

void pp_trim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pp_mul(const PPoly& a, const PPoly& b, long long p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    pp_trim(r);
    return r;
}

PPoly pp_mod(PPoly a, const PPoly& b, long long p) {
    // b monic
    while (a.size() >= b.size()) {
        long long lead = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = (a[shift + i] - lead * b[i]) % p;
            if (a[shift + i] < 0) a[shift + i] += p;
        }
        pp_trim(a);
        if (a.size() >= b.size() && a.back() == 0) pp_trim(a);
    }
    return a;
}

PPoly pp_gcd(PPoly a, PPoly b, long long p) {
    auto make_monic = [p](PPoly& f) {
        if (f.empty()) return;
        long long lc = f.back(), inv = 1;
        for (long long k = 1; k < p; ++k)
            if (lc * k % p == 1) { inv = k; break; }
        for (auto& c : f) c = c * inv % p;
    };
    while (!b.empty()) {
        make_monic(b);
        PPoly r = pp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    make_monic(a);
    return a;
}

PPoly pp_powmod_x(unsigned long long e, const PPoly& m, long long p) {
    // x^e mod m, square and multiply
    PPoly base = pp_mod(PPoly{0, 1}, m, p);
    PPoly acc{1};
    while (e) {
        if (e & 1) acc = pp_mod(pp_mul(acc, base, p), m, p);
        base = pp_mod(pp_mul(base, base, p), m, p);
        e >>= 1;
    }
    return acc;
}

bool pp_irreducible(const PPoly& f, long long p) {
    int d = static_cast<int>(f.size()) - 1;
    if (d < 1) return false;
    unsigned long long qe = 1;
    for (int i = 1; 2 * i <= d; ++i) {
        qe *= static_cast<unsigned long long>(p);
        PPoly probe = pp_powmod_x(qe, f, p); // x^{p^i} mod f
        // probe - x
        PPoly diff = probe;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] - 1 % p + p) % p;
        pp_trim(diff);
        PPoly g = pp_gcd(f, diff, p);
        if (g.size() != 1) return false;
    }
    return true;
}

} // namespace

FieldCtx FieldCtx::make(long long p, int n, const std::vector<long long>* defining_poly) {
    if (!is_prime_ll(p)) throw NotPrime(p);
    if (n < 1) throw UserError("extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < n; ++i) {
        q *= p;
        if (q > kMaxQ) throw UserError("q = p^n too large for table arithmetic (max 1024)");
    }

    FieldCtx F;
    F.p_ = p;
    F.n_ = n;
    F.q_ = q;

    if (n == 1) {
        if (defining_poly) throw UserError("defining polynomial only meaningful for n > 1");
    } else if (defining_poly) {
        PPoly f;
        for (long long v : *defining_poly) f.push_back(((v % p) + p) % p);
        pp_trim(f);
        if (static_cast<int>(f.size()) - 1 != n || f.back() != 1)
            throw NotIrreducible("defining polynomial must be monic of degree n");
        if (!pp_irreducible(f, p)) throw NotIrreducible("defining polynomial is reducible");
        F.defpoly_ = f;
    } else {
        // smallest monic irreducible of degree n over F_p, constant
        // coefficient varying fastest
        long long count = 1;
        for (int i = 0; i < n; ++i) count *= p;
        for (long long code = 0;; ++code) {
            if (code >= count) throw Error("no irreducible polynomial found"); // unreachable
            PPoly f(n + 1, 0);
            long long c = code;
            for (int i = 0; i < n; ++i) {
                f[i] = c % p;
                c /= p;
            }
            f[n] = 1;
            if (pp_irreducible(f, p)) {
                F.defpoly_ = f;
                break;
            }
        }
    }

    F.build_tables();

    // generator: smallest index with multiplicative order q-1
    for (long long a = 1; a < q; ++a) {
        FqElem e{static_cast<std::uint32_t>(a)};
        if (F.mult_order(e) == q - 1) {
            F.gen_ = e;
            break;
        }
    }
    F.build_dlog();
    return F;
}

FieldCtx FieldCtx::with_generator(FqElem g) const {
    FieldCtx F = *this;
    if (g.idx == 0 || F.mult_order(g) != q_ - 1)
        throw UserError("element is not a generator of the multiplicative group");
    F.gen_ = g;
    F.build_dlog();
    return F;
}

void FieldCtx::build_tables() {
    mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
    inv_.assign(q_, 0);

    // element idx <-> coordinate digits base p; multiply as polynomials over
    // F_p reduced mod the defining polynomial
    auto to_digits = [&](long long a) {
        PPoly d(n_, 0);
        for (int i = 0; i < n_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    };
    auto from_digits = [&](const PPoly& d) {
        long long a = 0;
        for (int i = n_ - 1; i >= 0; --i) a = a * p_ + (i < static_cast<int>(d.size()) ? d[i] : 0);
        return a;
    };

    for (long long a = 0; a < q_; ++a) {
        PPoly da = to_digits(a);
        pp_trim(da);
        for (long long b = a; b < q_; ++b) {
            PPoly db = to_digits(b);
            pp_trim(db);
            PPoly prod = pp_mul(da, db, p_);
            if (n_ > 1) prod = pp_mod(prod, defpoly_, p_);
            long long r = from_digits(prod);
            mul_[a * q_ + b] = static_cast<std::uint32_t>(r);
            mul_[b * q_ + a] = static_cast<std::uint32_t>(r);
        }
    }
    for (long long a = 1; a < q_; ++a)
        for (long long b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) {
                inv_[a] = static_cast<std::uint32_t>(b);
                break;
            }
}

void FieldCtx::build_dlog() {
    dlog_.assign(q_, -1);
    FqElem cur = one();
    for (long long k = 0; k < q_ - 1; ++k) {
        dlog_[cur.idx] = static_cast<int>(k);
        cur = mul(cur, gen_);
    }
}

FqElem FieldCtx::from_coords(const std::vector<long long>& coords) const {
    long long a = 0;
    for (int i = n_ - 1; i >= 0; --i) {
        long long c = i < static_cast<int>(coords.size()) ? coords[i] : 0;
        c %= p_;
        if (c < 0) c += p_;
        a = a * p_ + c;
    }
    return FqElem{static_cast<std::uint32_t>(a)};
}

std::vector<long long> FieldCtx::coords(FqElem a) const {
    std::vector<long long> d(n_, 0);
    long long v = a.idx;
    for (int i = 0; i < n_; ++i) {
        d[i] = v % p_;
        v /= p_;
    }
    return d;
}

FqElem FieldCtx::add(FqElem a, FqElem b) const {
    long long r = 0, mulp = 1, x = a.idx, y = b.idx;
    for (int i = 0; i < n_; ++i) {
        r += (x % p_ + y % p_) % p_ * mulp;
        x /= p_;
        y /= p_;
        mulp *= p_;
    }
    return FqElem{static_cast<std::uint32_t>(r)};
}

FqElem FieldCtx::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem FieldCtx::neg(FqElem a) const {
    long long r = 0, mulp = 1, x = a.idx;
    for (int i = 0; i < n_; ++i) {
        r += (p_ - x % p_) % p_ * mulp;
        x /= p_;
        mulp *= p_;
    }
    return FqElem{static_cast<std::uint32_t>(r)};
}

FqElem FieldCtx::inv(FqElem a) const {
    if (a.idx == 0) throw DivisionByZero();
    return FqElem{inv_[a.idx]};
}

FqElem FieldCtx::pow(FqElem a, unsigned long long e) const {
    FqElem acc = one(), base = a;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

int FieldCtx::dlog(FqElem a) const {
    if (a.idx == 0) throw ZeroArgument();
    return dlog_[a.idx];
}

int FieldCtx::mult_order(FqElem a) const {
    if (a.idx == 0) throw ZeroArgument();
    FqElem cur = a;
    int k = 1;
    while (!(cur == one())) {
        cur = mul(cur, a);
        ++k;
    }
    return k;
}

// ---- polynomials ------------------------------------------------------------

FqPoly poly_from_indices(const std::vector<std::uint32_t>& idx) {
    FqPoly r;
    for (auto v : idx) r.c.push_back(FqElem{v});
    r.normalize();
    return r;
}

FqPoly poly_from_ints(const FieldCtx& F, const std::vector<long long>& v) {
    FqPoly r;
    for (long long x : v) r.c.push_back(F.from_int(x));
    r.normalize();
    return r;
}

FqPoly poly_one() { return FqPoly{{FqElem{1}}}; }
FqPoly poly_t() { return FqPoly{{FqElem{0}, FqElem{1}}}; }

bool is_monic(const FqPoly& a) { return !a.is_zero() && a.leading().idx == 1; }

FqPoly poly_add(const FieldCtx& F, const FqPoly& a, const FqPoly& b) {
    FqPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), F.zero());
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.add(a.coeff(i), b.coeff(i));
    r.normalize();
    return r;
}

FqPoly poly_sub(const FieldCtx& F, const FqPoly& a, const FqPoly& b) {
    FqPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), F.zero());
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.sub(a.coeff(i), b.coeff(i));
    r.normalize();
    return r;
}

FqPoly poly_neg(const FieldCtx& F, const FqPoly& a) {
    FqPoly r = a;
    for (auto& x : r.c) x = F.neg(x);
    return r;
}

FqPoly poly_mul(const FieldCtx& F, const FqPoly& a, const FqPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    FqPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].idx == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
    }
    r.normalize();
    return r;
}

FqPoly poly_scale(const FieldCtx& F, FqElem s, const FqPoly& a) {
    FqPoly r = a;
    for (auto& x : r.c) x = F.mul(s, x);
    r.normalize();
    return r;
}

std::pair<FqPoly, FqPoly> poly_divrem(const FieldCtx& F, const FqPoly& a, const FqPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    FqPoly rem = a, quot;
    int db = b.degree();
    if (rem.degree() >= db) quot.c.assign(rem.degree() - db + 1, F.zero());
    FqElem lcinv = F.inv(b.leading());
    while (rem.degree() >= db) {
        int shift = rem.degree() - db;
        FqElem s = F.mul(rem.leading(), lcinv);
        quot.c[shift] = s;
        for (int i = 0; i <= db; ++i)
            rem.c[shift + i] = F.sub(rem.c[shift + i], F.mul(s, b.c[i]));
        rem.normalize();
    }
    quot.normalize();
    return {quot, rem};
}

FqPoly poly_mod(const FieldCtx& F, const FqPoly& a, const FqPoly& b) {
    return poly_divrem(F, a, b).second;
}

FqPoly poly_monic(const FieldCtx& F, const FqPoly& a) {
    if (a.is_zero()) return a;
    return poly_scale(F, F.inv(a.leading()), a);
}

FqPoly poly_gcd(const FieldCtx& F, FqPoly a, FqPoly b) {
    while (!b.is_zero()) {
        FqPoly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(F, a);
}

XgcdResult poly_xgcd(const FieldCtx& F, const FqPoly& a, const FqPoly& b) {
    FqPoly r0 = a, r1 = b;
    FqPoly u0 = poly_one(), u1;
    FqPoly v0, v1 = poly_one();
    while (!r1.is_zero()) {
        auto [q, r] = poly_divrem(F, r0, r1);
        FqPoly u2 = poly_sub(F, u0, poly_mul(F, q, u1));
        FqPoly v2 = poly_sub(F, v0, poly_mul(F, q, v1));
        r0 = std::move(r1); r1 = std::move(r);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    if (!r0.is_zero()) {
        FqElem s = F.inv(r0.leading());
        r0 = poly_scale(F, s, r0);
        u0 = poly_scale(F, s, u0);
        v0 = poly_scale(F, s, v0);
    }
    return {r0, u0, v0};
}

FqPoly poly_powmod(const FieldCtx& F, const FqPoly& a, unsigned long long e, const FqPoly& m) {
    if (m.is_zero()) throw DivisionByZero();
    FqPoly acc = poly_mod(F, poly_one(), m);
    FqPoly base = poly_mod(F, a, m);
    while (e) {
        if (e & 1) acc = poly_mod(F, poly_mul(F, acc, base), m);
        base = poly_mod(F, poly_mul(F, base, base), m);
        e >>= 1;
    }
    return acc;
}

std::vector<FqPoly> enumerate_monic(const FieldCtx& F, int d) {
    if (d < 0) throw UserError("degree must be nonnegative");
    std::vector<FqPoly> out;
    long long count = 1;
    for (int i = 0; i < d; ++i) {
        count *= F.q();
        if (count > 10'000'000) throw UserError("monic enumeration too large (q^d > 10^7)");
    }
    out.reserve(count);
    for (long long code = 0; code < count; ++code) {
        FqPoly f;
        f.c.resize(d + 1, F.zero());
        long long c = code;
        for (int i = 0; i < d; ++i) {
            f.c[i] = FqElem{static_cast<std::uint32_t>(c % F.q())};
            c /= F.q();
        }
        f.c[d] = F.one();
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<FqPoly> all_monic_up_to(const FieldCtx& F, int max_deg) {
    std::vector<FqPoly> out;
    for (int d = 1; d <= max_deg; ++d)
        for (auto& m : enumerate_monic(F, d)) out.push_back(std::move(m));
    return out;
}

bool is_irreducible(const FieldCtx& F, const FqPoly& f) {
    int d = f.degree();
    if (d < 1) return false;
    unsigned long long qe = 1;
    for (int i = 1; 2 * i <= d; ++i) {
        qe *= static_cast<unsigned long long>(F.q());
        FqPoly probe = poly_powmod(F, poly_t(), qe, f);
        FqPoly diff = poly_sub(F, probe, poly_t());
        FqPoly g = poly_gcd(F, f, diff);
        if (g.degree() != 0) return false;
    }
    return true;
}

std::vector<std::pair<FqPoly, int>> factorize(const FieldCtx& F, const FqPoly& m) {
    if (!is_monic(m)) throw NotMonic("factorize requires a monic polynomial");
    if (m.degree() < 1) throw ConstantModulus();
    std::vector<std::pair<FqPoly, int>> factors;
    FqPoly rest = m;
    int half = m.degree() / 2;
    for (int d = 1; d <= half && rest.degree() > 0; ++d) {
        for (const auto& cand : enumerate_monic(F, d)) {
            if (rest.degree() < d) break;
            int v = 0;
            while (true) {
                auto [q, r] = poly_divrem(F, rest, cand);
                if (!r.is_zero()) break;
                rest = q;
                ++v;
            }
            if (v > 0) factors.emplace_back(cand, v);
        }
    }
    if (rest.degree() >= 1) factors.emplace_back(rest, 1);
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return factors;
}

long long phi(const FieldCtx& F, const FqPoly& m) {
    auto factors = factorize(F, m);
    long long result = 1;
    for (const auto& [Q, v] : factors) {
        long long qd = 1;
        for (int i = 0; i < Q.degree(); ++i) qd *= F.q();
        long long term = qd - 1;
        for (int i = 1; i < v; ++i) term *= qd;
        result *= term;
    }
    return result;
}

std::string poly_to_string(const FieldCtx& F, const FqPoly& a) {
    if (a.is_zero()) return "0";
    auto coeff_str = [&](FqElem e) {
        if (F.n() == 1) return std::to_string(e.idx);
        std::string s = "(";
        auto d = F.coords(e);
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(d[i]);
        }
        return s + ")";
    };
    std::string out;
    for (int i = a.degree(); i >= 0; --i) {
        FqElem e = a.coeff(i);
        if (e.idx == 0) continue;
        if (!out.empty()) out += "+";
        bool unit_coeff = (e == F.one());
        if (i == 0) {
            out += coeff_str(e);
        } else {
            if (!unit_coeff) out += coeff_str(e) + "*";
            out += (i == 1) ? "T" : "T^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace carlitz
