#include "carlitz/parse.hpp"

#include <cctype>

namespace carlitz {

namespace {

constexpr int kMaxExponent = 4096;

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

long long parse_int(Cursor& cur) {
    cur.skip_ws();
    std::size_t start = cur.pos;
    bool neg = cur.eat('-');
    cur.skip_ws();
    if (cur.pos >= cur.s.size() || !std::isdigit(static_cast<unsigned char>(cur.s[cur.pos])))
        throw SyntaxError("expected an integer", start);
    long long v = 0;
    while (cur.pos < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.pos]))) {
        v = v * 10 + (cur.s[cur.pos] - '0');
        if (v > (1LL << 40)) throw SyntaxError("integer literal too large", start);
        ++cur.pos;
    }
    return neg ? -v : v;
}

FqElem parse_coeff(Cursor& cur, const FieldCtx& F) {
    if (cur.peek() == '(') {
        std::size_t start = cur.pos;
        cur.eat('(');
        std::vector<long long> coords;
        coords.push_back(parse_int(cur));
        while (cur.eat(',')) coords.push_back(parse_int(cur));
        if (!cur.eat(')')) throw SyntaxError("expected ')'", cur.pos);
        if (static_cast<int>(coords.size()) > F.n())
            throw SyntaxError("coordinate tuple longer than the extension degree", start);
        return F.from_coords(coords);
    }
    return F.from_int(parse_int(cur));
}

// one term: coeff, coeff*T^k, coeff T^k, T^k, T
void parse_term(Cursor& cur, const FieldCtx& F, bool negate, std::vector<FqElem>& acc) {
    FqElem coeff = F.one();
    bool have_coeff = false;
    char c = cur.peek();
    if (c == '(' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
        coeff = parse_coeff(cur, F);
        have_coeff = true;
        cur.eat('*');
    }
    int exp = 0;
    if (cur.peek() == 'T' || cur.peek() == 't') {
        ++cur.pos;
        exp = 1;
        if (cur.eat('^')) {
            std::size_t epos = cur.pos;
            long long e = parse_int(cur);
            if (e < 0 || e > kMaxExponent) throw SyntaxError("exponent out of range", epos);
            exp = static_cast<int>(e);
        }
    } else if (!have_coeff) {
        throw SyntaxError("expected a coefficient or 'T'", cur.pos);
    }
    if (negate) coeff = F.neg(coeff);
    if (static_cast<int>(acc.size()) <= exp) acc.resize(exp + 1, F.zero());
    acc[exp] = F.add(acc[exp], coeff);
}

FqPoly parse_monomial_form(const std::string& text, const FieldCtx& F) {
    Cursor cur{text};
    std::vector<FqElem> acc;
    bool negate = cur.eat('-');
    parse_term(cur, F, negate, acc);
    while (!cur.done()) {
        if (cur.eat('+'))
            negate = false;
        else if (cur.eat('-'))
            negate = true;
        else
            throw SyntaxError("expected '+' or '-'", cur.pos);
        parse_term(cur, F, negate, acc);
    }
    FqPoly p{std::move(acc)};
    p.normalize();
    return p;
}

FqPoly parse_list_form(const std::string& text, const FieldCtx& F) {
    Cursor cur{text};
    std::vector<FqElem> coeffs;
    coeffs.push_back(parse_coeff(cur, F));
    while (cur.eat(',')) coeffs.push_back(parse_coeff(cur, F));
    if (!cur.done()) throw SyntaxError("unexpected trailing input", cur.pos);
    FqPoly p{std::move(coeffs)};
    p.normalize();
    return p;
}

bool looks_like_list(const std::string& text) {
    int depth = 0;
    bool top_level_comma = false;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) top_level_comma = true;
        if (c == 'T' || c == 't') return false;
    }
    return top_level_comma;
}

} // namespace

FqPoly parse_modulus(const std::string& text, const FieldCtx& F) {
    FqPoly m = looks_like_list(text) ? parse_list_form(text, F) : parse_monomial_form(text, F);
    if (m.degree() < 1) throw ConstantModulus();
    if (!is_monic(m)) throw NotMonic("modulus must be monic: " + poly_to_string(F, m));
    return m;
}

} // namespace carlitz
