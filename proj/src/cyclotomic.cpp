#include "carlitz/cyclotomic.hpp"

#include <map>

namespace carlitz {

namespace {

void ensure_same_ctx(const CycNum& a, const CycNum& b) {
    if (a.ctx == nullptr || a.ctx != b.ctx)
        throw Error("cyclotomic operands belong to different rings");
}

int euler_phi_int(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

// rational polynomial helpers for inversion / division in Q(zeta) and Q[X]
using QPoly = std::vector<mpq_class>; // lowest first, not normalized strictly

void q_trim(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly q_divrem(QPoly& a, const QPoly& b) {
    // returns quotient, leaves remainder in a
    QPoly quot;
    if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, mpq_class(0));
    while (a.size() >= b.size()) {
        mpq_class s = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        quot[shift] = s;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= s * b[i];
        q_trim(a);
        if (a.size() >= b.size() && a.back() == 0) q_trim(a);
    }
    return quot;
}

} // namespace

// ---- IntPoly ---------------------------------------------------------------

IntPoly int_add(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) + b.coeff(i);
    r.normalize();
    return r;
}

IntPoly int_sub(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) - b.coeff(i);
    r.normalize();
    return r;
}

IntPoly int_neg(const IntPoly& a) {
    IntPoly r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

IntPoly int_mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    IntPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            mpz_addmul(r.c[i + j].get_mpz_t(), a.c[i].get_mpz_t(), b.c[j].get_mpz_t());
    }
    r.normalize();
    return r;
}

IntPoly int_exact_div(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw InexactDivision("degree of divisor exceeds dividend");
    QPoly ra(a.c.begin(), a.c.end());
    QPoly rb(b.c.begin(), b.c.end());
    QPoly quot = q_divrem(ra, rb);
    if (!ra.empty()) throw InexactDivision("nonzero remainder in Z[X] division");
    IntPoly r;
    r.c.reserve(quot.size());
    for (auto& q : quot) {
        if (q.get_den() != 1) throw InexactDivision("non-integral quotient in Z[X] division");
        r.c.push_back(q.get_num());
    }
    r.normalize();
    return r;
}

mpz_class int_eval(const IntPoly& a, const mpz_class& x) {
    mpz_class r = 0;
    for (int i = a.degree(); i >= 0; --i) r = r * x + a.c[i];
    return r;
}

std::string int_poly_to_string(const IntPoly& a, const std::string& var) {
    if (a.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        const mpz_class& co = a.c[i];
        if (co == 0) continue;
        mpz_class mag = abs(co);
        if (out.empty()) {
            if (co < 0) out += "-";
        } else {
            out += (co < 0) ? " - " : " + ";
        }
        bool unit = (mag == 1);
        if (i == 0) {
            out += mag.get_str();
        } else {
            if (!unit) out += mag.get_str() + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

namespace {

IntPoly cyclotomic_memo(int n, std::map<int, IntPoly>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    IntPoly f;
    f.c.assign(n + 1, mpz_class(0));
    f.c[0] = -1;
    f.c[n] = 1; // x^n - 1
    for (int d = 1; d < n; ++d)
        if (n % d == 0) f = int_exact_div(f, cyclotomic_memo(d, memo));
    memo[n] = f;
    return f;
}

} // namespace

IntPoly cyclotomic_poly(int n) {
    if (n < 1) throw UserError("cyclotomic polynomial needs n >= 1");
    std::map<int, IntPoly> memo;
    return cyclotomic_memo(n, memo);
}

// ---- CycCtx ------------------------------------------------------------------

CycCtx::CycCtx(int n) : n_(n), dim_(euler_phi_int(n)), cyclo_(cyclotomic_poly(n)) {
    int maxp = std::max(n - 1, 2 * dim_ - 2);
    maxp = std::max(maxp, dim_); // always at least one reduced row
    xpow_.resize(maxp + 1);
    for (int k = 0; k < dim_; ++k) {
        xpow_[k].assign(dim_, mpz_class(0));
        xpow_[k][k] = 1;
    }
    // x^k = x * x^{k-1} reduced by Phi_n (monic): x^dim == -sum_{j<dim} Phi[j] x^j
    for (int k = dim_; k <= maxp; ++k) {
        std::vector<mpz_class> row(dim_, mpz_class(0));
        const auto& prev = xpow_[k - 1];
        // shift
        for (int j = 0; j + 1 < dim_; ++j) row[j + 1] = prev[j];
        // reduce the overflow of x^{dim}
        const mpz_class& top = prev[dim_ - 1];
        if (top != 0)
            for (int j = 0; j < dim_; ++j)
                if (cyclo_.c[j] != 0) row[j] -= top * cyclo_.c[j];
        xpow_[k] = std::move(row);
    }
}

// ---- CycNum -----------------------------------------------------------------

CycNum cyc_add(const CycNum& a, const CycNum& b) {
    ensure_same_ctx(a, b);
    CycNum r(*a.ctx);
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

CycNum cyc_sub(const CycNum& a, const CycNum& b) {
    ensure_same_ctx(a, b);
    CycNum r(*a.ctx);
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

CycNum cyc_neg(const CycNum& a) {
    CycNum r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

namespace {

// accumulate the coordinate convolution of a * b into conv (size 2*dim-1)
void conv_accumulate(const CycNum& a, const CycNum& b, std::vector<mpz_class>& conv) {
    const int dim = a.ctx->dim();
    for (int i = 0; i < dim; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j < dim; ++j) {
            if (b.c[j] == 0) continue;
            mpz_addmul(conv[i + j].get_mpz_t(), a.c[i].get_mpz_t(), b.c[j].get_mpz_t());
        }
    }
}

// reduce a raw convolution buffer to a CycNum
CycNum conv_reduce(const CycCtx& ctx, std::vector<mpz_class>& conv) {
    const int dim = ctx.dim();
    CycNum r(ctx);
    for (int k = 0; k < dim; ++k) r.c[k] = std::move(conv[k]);
    for (int k = dim; k < static_cast<int>(conv.size()); ++k) {
        if (conv[k] == 0) continue;
        const auto& row = ctx.xpow(k);
        for (int j = 0; j < dim; ++j)
            if (row[j] != 0)
                mpz_addmul(r.c[j].get_mpz_t(), conv[k].get_mpz_t(), row[j].get_mpz_t());
    }
    return r;
}

} // namespace

CycNum cyc_mul(const CycNum& a, const CycNum& b) {
    ensure_same_ctx(a, b);
    const int dim = a.ctx->dim();
    std::vector<mpz_class> conv(2 * dim - 1);
    conv_accumulate(a, b, conv);
    return conv_reduce(*a.ctx, conv);
}

CycNum zeta_power(const CycCtx& ctx, long long k) {
    long long kk = k % ctx.n();
    if (kk < 0) kk += ctx.n();
    CycNum r(ctx);
    const auto& row = ctx.xpow(static_cast<int>(kk));
    for (int j = 0; j < ctx.dim(); ++j) r.c[j] = row[j];
    return r;
}

std::optional<mpz_class> to_integer(const CycNum& a) {
    for (std::size_t i = 1; i < a.c.size(); ++i)
        if (a.c[i] != 0) return std::nullopt;
    return a.c.empty() ? mpz_class(0) : a.c[0];
}

namespace {

// inverse of b in Q(zeta_n) as rational coordinates; b must be nonzero
QPoly cyc_inverse_rational(const CycNum& b) {
    if (b.is_zero()) throw DivisionByZero();
    const CycCtx& ctx = *b.ctx;
    QPoly r0(ctx.cyclo().c.begin(), ctx.cyclo().c.end());
    QPoly r1(b.c.begin(), b.c.end());
    q_trim(r1);
    QPoly u0, u1{mpq_class(1)};
    while (!r1.empty()) {
        QPoly rem = r0;
        QPoly q = q_divrem(rem, r1);
        // u2 = u0 - q*u1
        QPoly qu1;
        if (!q.empty() && !u1.empty()) {
            qu1.assign(q.size() + u1.size() - 1, mpq_class(0));
            for (std::size_t i = 0; i < q.size(); ++i)
                for (std::size_t j = 0; j < u1.size(); ++j) qu1[i + j] += q[i] * u1[j];
        }
        QPoly u2 = u0;
        if (u2.size() < qu1.size()) u2.resize(qu1.size(), mpq_class(0));
        for (std::size_t i = 0; i < qu1.size(); ++i) u2[i] -= qu1[i];
        q_trim(u2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    // r0 is the gcd: a nonzero constant because Phi_n is irreducible over Q
    if (r0.size() != 1) throw Error("cyclotomic inversion hit a nonunit gcd");
    QPoly inv = u0;
    for (auto& x : inv) x /= r0[0];
    inv.resize(ctx.dim(), mpq_class(0));
    return inv;
}

// product of rational coordinates with an integer CycNum, reduced mod Phi
QPoly cyc_mul_rational(const QPoly& a, const CycNum& b) {
    const CycCtx& ctx = *b.ctx;
    const int dim = ctx.dim();
    std::vector<mpq_class> conv(2 * dim - 1, mpq_class(0));
    for (int i = 0; i < dim; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < dim; ++j) {
            if (b.c[j] == 0) continue;
            conv[i + j] += a[i] * b.c[j];
        }
    }
    QPoly r(conv.begin(), conv.begin() + dim);
    for (int k = dim; k < 2 * dim - 1; ++k) {
        if (conv[k] == 0) continue;
        const auto& row = ctx.xpow(k);
        for (int j = 0; j < dim; ++j)
            if (row[j] != 0) r[j] += conv[k] * row[j];
    }
    return r;
}

std::optional<CycNum> rational_to_cyc(const CycCtx& ctx, const QPoly& a) {
    CycNum r(ctx);
    for (int i = 0; i < ctx.dim(); ++i) {
        if (a[i].get_den() != 1) return std::nullopt;
        r.c[i] = a[i].get_num();
    }
    return r;
}

} // namespace

CycNum cyc_exact_div(const CycNum& a, const CycNum& b) {
    ensure_same_ctx(a, b);
    if (a.ctx->dim() > 8) {
        // adjugate construction is factorial in the dimension; large rings
        // take the rational route instead (never hit by the sweep determinants)
        QPoly binv = cyc_inverse_rational(b);
        auto r = rational_to_cyc(*a.ctx, cyc_mul_rational(binv, a));
        if (!r) throw InexactDivision("quotient not integral in Z[zeta]");
        return *r;
    }
    CycNumDivider divider(b);
    CycNum out(*a.ctx);
    if (!divider.divide(a, out)) throw InexactDivision("quotient not integral in Z[zeta]");
    return out;
}

namespace {

// determinant of an integer matrix given by selected rows/columns, by
// cofactor expansion; the dividers live in rings of dimension phi(q-1),
// which is tiny, so this is never deep
mpz_class minor_det(const std::vector<mpz_class>& m, int dim, std::vector<int> rows,
                    std::vector<int> cols) {
    const std::size_t n = rows.size();
    if (n == 1) return m[rows[0] * dim + cols[0]];
    mpz_class det = 0;
    std::vector<int> subrows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < n; ++j) {
        const mpz_class& entry = m[rows[0] * dim + cols[j]];
        if (entry == 0) continue;
        std::vector<int> subcols;
        subcols.reserve(n - 1);
        for (std::size_t k = 0; k < n; ++k)
            if (k != j) subcols.push_back(cols[k]);
        mpz_class term = entry * minor_det(m, dim, subrows, subcols);
        if (j % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

} // namespace

CycNumDivider::CycNumDivider(const CycNum& b) : ctx_(b.ctx) {
    if (b.is_zero()) throw DivisionByZero();
    const int dim = ctx_->dim();
    // multiplication matrix: column j holds the coordinates of b * x^j
    std::vector<mpz_class> m(static_cast<std::size_t>(dim) * dim);
    std::vector<mpz_class> col(b.c.begin(), b.c.end());
    for (int j = 0; j < dim; ++j) {
        if (j > 0) {
            // col <- x * col mod Phi
            mpz_class top = std::move(col[dim - 1]);
            for (int i = dim - 1; i > 0; --i) col[i] = std::move(col[i - 1]);
            col[0] = 0;
            if (top != 0) {
                const IntPoly& phi = ctx_->cyclo();
                for (int i = 0; i < dim; ++i)
                    if (phi.c[i] != 0) col[i] -= top * phi.c[i];
            }
        }
        for (int i = 0; i < dim; ++i) m[i * dim + j] = col[i];
    }

    std::vector<int> all(dim);
    for (int i = 0; i < dim; ++i) all[i] = i;
    det_ = minor_det(m, dim, all, all);
    if (det_ == 0) throw Error("multiplication matrix singular for nonzero element");

    adj_.assign(static_cast<std::size_t>(dim) * dim, mpz_class(0));
    if (dim == 1) {
        adj_[0] = 1;
        return;
    }
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            std::vector<int> rows, cols;
            for (int k = 0; k < dim; ++k) {
                if (k != i) rows.push_back(k);
                if (k != j) cols.push_back(k);
            }
            mpz_class c = minor_det(m, dim, rows, cols);
            if ((i + j) % 2) c = -c;
            adj_[j * dim + i] = std::move(c); // transpose of the cofactor matrix
        }
}

bool CycNumDivider::divide(const CycNum& a, CycNum& out) const {
    const int dim = ctx_->dim();
    for (int i = 0; i < dim; ++i) {
        mpz_class acc = 0;
        for (int j = 0; j < dim; ++j) {
            const mpz_class& w = adj_[i * dim + j];
            if (w != 0 && a.c[j] != 0)
                mpz_addmul(acc.get_mpz_t(), w.get_mpz_t(), a.c[j].get_mpz_t());
        }
        if (!mpz_divisible_p(acc.get_mpz_t(), det_.get_mpz_t())) return false;
        mpz_divexact(out.c[i].get_mpz_t(), acc.get_mpz_t(), det_.get_mpz_t());
    }
    return true;
}

std::string cyc_to_string(const CycNum& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (i) s += ",";
        s += a.c[i].get_str();
    }
    return s + "]";
}

// ---- CycPoly ----------------------------------------------------------------

CycPoly cycpoly_add(const CycPoly& a, const CycPoly& b) {
    CycPoly r(*a.ctx);
    r.c.resize(std::max(a.c.size(), b.c.size()), CycNum(*a.ctx));
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = cyc_add(a.coeff(i), b.coeff(i));
    r.normalize();
    return r;
}

CycPoly cycpoly_sub(const CycPoly& a, const CycPoly& b) {
    CycPoly r(*a.ctx);
    r.c.resize(std::max(a.c.size(), b.c.size()), CycNum(*a.ctx));
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = cyc_sub(a.coeff(i), b.coeff(i));
    r.normalize();
    return r;
}

CycPoly cycpoly_neg(const CycPoly& a) {
    CycPoly r = a;
    for (auto& x : r.c) x = cyc_neg(x);
    return r;
}

namespace {

// shared core of cycpoly_mul / cycpoly_mul_sub: one flat convolution buffer
// (stride 2*dim-1 per output coefficient), a single mod-Phi reduction per
// coefficient at the end
void accumulate_product(const CycPoly& a, const CycPoly& b, bool negate,
                        std::vector<mpz_class>& flat, int stride) {
    const int dim = a.ctx->dim();
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j].is_zero()) continue;
            mpz_class* buf = flat.data() + (i + j) * stride;
            const CycNum& x = a.c[i];
            const CycNum& y = b.c[j];
            for (int s = 0; s < dim; ++s) {
                if (x.c[s] == 0) continue;
                for (int t = 0; t < dim; ++t) {
                    if (y.c[t] == 0) continue;
                    if (negate)
                        mpz_submul(buf[s + t].get_mpz_t(), x.c[s].get_mpz_t(),
                                   y.c[t].get_mpz_t());
                    else
                        mpz_addmul(buf[s + t].get_mpz_t(), x.c[s].get_mpz_t(),
                                   y.c[t].get_mpz_t());
                }
            }
        }
    }
}

CycPoly reduce_flat(const CycCtx& ctx, std::vector<mpz_class>& flat, std::size_t count,
                    int stride) {
    CycPoly r(ctx);
    r.c.reserve(count);
    const int dim = ctx.dim();
    for (std::size_t k = 0; k < count; ++k) {
        mpz_class* buf = flat.data() + k * stride;
        CycNum v(ctx);
        for (int s = 0; s < dim; ++s) v.c[s] = std::move(buf[s]);
        for (int s = dim; s < stride; ++s) {
            if (buf[s] == 0) continue;
            const auto& row = ctx.xpow(s);
            for (int t = 0; t < dim; ++t)
                if (row[t] != 0)
                    mpz_addmul(v.c[t].get_mpz_t(), buf[s].get_mpz_t(), row[t].get_mpz_t());
        }
        r.c.push_back(std::move(v));
    }
    r.normalize();
    return r;
}

} // namespace

CycPoly cycpoly_mul(const CycPoly& a, const CycPoly& b) {
    if (a.ctx == nullptr || a.ctx != b.ctx)
        throw Error("cyclotomic operands belong to different rings");
    if (a.is_zero() || b.is_zero()) return CycPoly(*a.ctx);
    const CycCtx& ctx = *a.ctx;
    const int stride = 2 * ctx.dim() - 1;
    const std::size_t len = a.c.size() + b.c.size() - 1;
    std::vector<mpz_class> flat(len * stride);
    accumulate_product(a, b, false, flat, stride);
    return reduce_flat(ctx, flat, len, stride);
}

CycPoly cycpoly_mul_sub(const CycPoly& a, const CycPoly& b, const CycPoly& c, const CycPoly& d) {
    if (a.ctx == nullptr || a.ctx != b.ctx || a.ctx != c.ctx || a.ctx != d.ctx)
        throw Error("cyclotomic operands belong to different rings");
    const CycCtx& ctx = *a.ctx;
    const int stride = 2 * ctx.dim() - 1;
    std::size_t len1 = (a.is_zero() || b.is_zero()) ? 0 : a.c.size() + b.c.size() - 1;
    std::size_t len2 = (c.is_zero() || d.is_zero()) ? 0 : c.c.size() + d.c.size() - 1;
    std::size_t len = std::max(len1, len2);
    if (len == 0) return CycPoly(ctx);
    std::vector<mpz_class> flat(len * stride);
    if (len1) accumulate_product(a, b, false, flat, stride);
    if (len2) accumulate_product(c, d, true, flat, stride);
    return reduce_flat(ctx, flat, len, stride);
}

CycPoly cycpoly_exact_div(const CycPoly& a, const CycPoly& b) {
    if (a.ctx == nullptr || a.ctx != b.ctx)
        throw Error("cyclotomic operands belong to different rings");
    if (b.is_zero()) throw DivisionByZero();
    const CycCtx& ctx = *a.ctx;
    if (a.is_zero()) return CycPoly(ctx);
    const int da = a.degree(), db = b.degree();
    if (da < db) throw InexactDivision("degree of divisor exceeds dividend");

    // every quotient coefficient is exact in Z[zeta] because the full
    // quotient is; lc(b) divides each leading remainder coefficient
    std::optional<CycNumDivider> divider;
    std::optional<QPoly> lcinv;
    if (ctx.dim() <= 8)
        divider.emplace(b.c[db]);
    else
        lcinv = cyc_inverse_rational(b.c[db]);

    CycPoly rem = a;
    CycPoly quot(ctx);
    quot.c.assign(da - db + 1, CycNum(ctx));
    const int dim = ctx.dim();
    const int stride = 2 * dim - 1;
    std::vector<mpz_class> scratch(stride);
    for (int shift = da - db; shift >= 0; --shift) {
        const CycNum& lead = rem.c[shift + db];
        if (lead.is_zero()) continue;
        CycNum qc(ctx);
        if (divider) {
            if (!divider->divide(lead, qc))
                throw InexactDivision("non-integral quotient coefficient");
        } else {
            auto r = rational_to_cyc(ctx, cyc_mul_rational(*lcinv, lead));
            if (!r) throw InexactDivision("non-integral quotient coefficient");
            qc = std::move(*r);
        }
        // rem -= qc * b shifted, in place
        for (int i = 0; i <= db; ++i) {
            const CycNum& y = b.c[i];
            if (y.is_zero()) continue;
            for (auto& z : scratch) z = 0;
            for (int s = 0; s < dim; ++s) {
                if (qc.c[s] == 0) continue;
                for (int t = 0; t < dim; ++t)
                    if (y.c[t] != 0)
                        mpz_addmul(scratch[s + t].get_mpz_t(), qc.c[s].get_mpz_t(),
                                   y.c[t].get_mpz_t());
            }
            CycNum& target = rem.c[shift + i];
            for (int s = 0; s < dim; ++s) target.c[s] -= scratch[s];
            for (int s = dim; s < stride; ++s) {
                if (scratch[s] == 0) continue;
                const auto& row = ctx.xpow(s);
                for (int t = 0; t < dim; ++t)
                    if (row[t] != 0)
                        mpz_submul(target.c[t].get_mpz_t(), scratch[s].get_mpz_t(),
                                   row[t].get_mpz_t());
            }
        }
        quot.c[shift] = std::move(qc);
    }
    for (const auto& coeff : rem.c)
        if (!coeff.is_zero()) throw InexactDivision("nonzero remainder");
    quot.normalize();
    return quot;
}

CycNum cycpoly_eval_one(const CycPoly& a) {
    CycNum r(*a.ctx);
    for (const auto& coeff : a.c) r = cyc_add(r, coeff);
    return r;
}

CycPoly cycpoly_from_int(const CycCtx& ctx, const IntPoly& a) {
    CycPoly r(ctx);
    r.c.reserve(a.c.size());
    for (const auto& v : a.c) r.c.push_back(CycNum::from_int(ctx, v));
    r.normalize();
    return r;
}

std::optional<IntPoly> cycpoly_to_int(const CycPoly& a) {
    IntPoly r;
    r.c.reserve(a.c.size());
    for (const auto& coeff : a.c) {
        auto v = to_integer(coeff);
        if (!v) return std::nullopt;
        r.c.push_back(std::move(*v));
    }
    r.normalize();
    return r;
}

// ---- ring maps --------------------------------------------------------------

CycNum embed_up(const CycNum& a, const CycCtx& to) {
    const CycCtx& from = *a.ctx;
    if (to.n() % from.n() != 0) throw EmbeddingMismatch("embed_up needs from | to");
    if (&from == &to) return a;
    const int k = to.n() / from.n();
    CycNum r(to);
    for (int j = 0; j < from.dim(); ++j) {
        if (a.c[j] == 0) continue;
        const auto& row = to.xpow(j * k);
        for (int t = 0; t < to.dim(); ++t)
            if (row[t] != 0)
                mpz_addmul(r.c[t].get_mpz_t(), a.c[j].get_mpz_t(), row[t].get_mpz_t());
    }
    return r;
}

CycPoly embed_up(const CycPoly& a, const CycCtx& to) {
    CycPoly r(to);
    r.c.reserve(a.c.size());
    for (const auto& coeff : a.c) r.c.push_back(embed_up(coeff, to));
    r.normalize();
    return r;
}

SubringSolver::SubringSolver(const CycCtx& from, const CycCtx& to) : from_(&from), to_(&to) {
    if (from.n() % to.n() != 0) throw EmbeddingMismatch("subring solver needs to | from");
    const int k = from.n() / to.n();
    const int rows = from.dim(), cols = to.dim();
    basis_.assign(cols, {});
    for (int j = 0; j < cols; ++j) {
        // j*k < to.n * (from.n / to.n) = from.n, always a valid table index
        const auto& row = from.xpow(j * k);
        basis_[j].assign(row.begin(), row.end());
    }
    // Greedy pivot selection, then invert the pivot submatrix over Q.
    std::vector<std::vector<mpq_class>> work(rows, std::vector<mpq_class>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) work[i][j] = basis_[j][i];
    std::vector<bool> used(rows, false);
    for (int col = 0; col < cols; ++col) {
        int pr = -1;
        for (int i = 0; i < rows; ++i)
            if (!used[i] && work[i][col] != 0) { pr = i; break; }
        if (pr < 0) throw Error("subring basis is rank deficient"); // cannot happen
        used[pr] = true;
        pivot_rows_.push_back(pr);
        mpq_class inv = 1 / work[pr][col];
        for (int j = 0; j < cols; ++j) work[pr][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == pr || work[i][col] == 0) continue;
            mpq_class f = work[i][col];
            for (int j = 0; j < cols; ++j) work[i][j] -= f * work[pr][j];
        }
    }
    // invert the pivot submatrix directly (Gauss-Jordan on [P | I])
    std::vector<std::vector<mpq_class>> aug(cols, std::vector<mpq_class>(2 * cols));
    for (int i = 0; i < cols; ++i) {
        for (int j = 0; j < cols; ++j) aug[i][j] = basis_[j][pivot_rows_[i]];
        aug[i][cols + i] = 1;
    }
    for (int col = 0; col < cols; ++col) {
        int pr = -1;
        for (int i = col; i < cols; ++i)
            if (aug[i][col] != 0) { pr = i; break; }
        if (pr < 0) throw Error("pivot submatrix singular");
        std::swap(aug[col], aug[pr]);
        mpq_class inv = 1 / aug[col][col];
        for (int j = 0; j < 2 * cols; ++j) aug[col][j] *= inv;
        for (int i = 0; i < cols; ++i) {
            if (i == col || aug[i][col] == 0) continue;
            mpq_class f = aug[i][col];
            for (int j = 0; j < 2 * cols; ++j) aug[i][j] -= f * aug[col][j];
        }
    }
    pivot_inv_.assign(cols, std::vector<mpq_class>(cols));
    for (int i = 0; i < cols; ++i)
        for (int j = 0; j < cols; ++j) pivot_inv_[i][j] = aug[i][cols + j];
}

std::optional<CycNum> SubringSolver::solve(const CycNum& a) const {
    const int rows = from_->dim(), cols = to_->dim();
    // candidate = pivot_inv * a[pivot_rows]
    std::vector<mpq_class> y(cols, mpq_class(0));
    for (int i = 0; i < cols; ++i)
        for (int j = 0; j < cols; ++j)
            if (pivot_inv_[i][j] != 0) y[i] += pivot_inv_[i][j] * a.c[pivot_rows_[j]];
    CycNum r(*to_);
    for (int i = 0; i < cols; ++i) {
        if (y[i].get_den() != 1) return std::nullopt;
        r.c[i] = y[i].get_num();
    }
    // verify all rows over Z
    for (int t = 0; t < rows; ++t) {
        mpz_class acc = 0;
        for (int j = 0; j < cols; ++j)
            if (r.c[j] != 0 && basis_[j][t] != 0)
                mpz_addmul(acc.get_mpz_t(), r.c[j].get_mpz_t(), basis_[j][t].get_mpz_t());
        if (acc != a.c[t]) return std::nullopt;
    }
    return r;
}

std::optional<CycPoly> SubringSolver::solve(const CycPoly& a) const {
    CycPoly r(*to_);
    r.c.reserve(a.c.size());
    for (const auto& coeff : a.c) {
        auto v = solve(coeff);
        if (!v) return std::nullopt;
        r.c.push_back(std::move(*v));
    }
    r.normalize();
    return r;
}

} // namespace carlitz
