#include "carlitz/serialize.hpp"

#include <sstream>

namespace carlitz {

namespace {

nlohmann::json mpz_to_json(const mpz_class& v) {
    if (v.fits_slong_p()) return static_cast<long>(v.get_si());
    return v.get_str();
}

mpz_class mpz_from_json(const nlohmann::json& j) {
    if (j.is_string()) return mpz_class(j.get<std::string>());
    if (j.is_number_integer() || j.is_number_unsigned())
        return mpz_class(std::to_string(j.get<long long>()));
    throw UserError("expected integer or decimal string in JSON");
}

nlohmann::json intpoly_to_json(const IntPoly& p) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : p.c) a.push_back(mpz_to_json(c));
    return a;
}

IntPoly intpoly_from_json(const nlohmann::json& j) {
    IntPoly p;
    for (const auto& c : j) p.c.push_back(mpz_from_json(c));
    p.normalize();
    return p;
}

} // namespace

nlohmann::json report_to_json(const FieldCtx& F, const ZetaReport& r) {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["p"] = r.p;
    j["n"] = r.n;
    j["q"] = r.q;
    if (F.n() > 1)
        j["defining_poly"] = F.defining_poly();
    else
        j["defining_poly"] = nullptr;
    j["modulus"] = r.m_text;
    nlohmann::json mc = nlohmann::json::array();
    for (const auto& e : r.m.c) mc.push_back(e.idx);
    j["modulus_coeffs"] = mc;
    j["phi"] = r.phi_m;
    j["n_m"] = r.n_m;
    j["det"] = intpoly_to_json(r.det_poly);
    j["j_poly"] = intpoly_to_json(r.j);
    j["p_minus"] = intpoly_to_json(r.p_minus);
    j["h_minus"] = mpz_to_json(r.h_minus);
    j["w_minus"] = mpz_to_json(r.w_minus);
    nlohmann::json split = nlohmann::json::array();
    for (const auto& s : r.split) {
        nlohmann::json e;
        nlohmann::json qc = nlohmann::json::array();
        for (const auto& x : s.Q.c) qc.push_back(x.idx);
        e["q_poly"] = poly_to_string(F, s.Q);
        e["q_coeffs"] = qc;
        e["deg"] = s.deg_q;
        e["v"] = s.v;
        e["e"] = s.e;
        e["f"] = s.f;
        e["g"] = s.g;
        e["e_plus"] = s.e_plus;
        e["f_plus"] = s.f_plus;
        e["g_plus"] = s.g_plus;
        split.push_back(e);
    }
    j["splitting"] = split;
    j["checks"] = r.checks;
    j["timings_ms"] = r.timings_ms;
    return j;
}

FieldCtx field_from_json(const nlohmann::json& j) {
    long long p = j.at("p").get<long long>();
    int n = j.at("n").get<int>();
    if (n > 1 && !j.at("defining_poly").is_null()) {
        auto def = j.at("defining_poly").get<std::vector<long long>>();
        return FieldCtx::make(p, n, &def);
    }
    return FieldCtx::make(p, n);
}

ZetaReport report_from_json(const nlohmann::json& j) {
    if (j.at("schema_version").get<int>() != kSchemaVersion)
        throw UserError("unsupported report schema version");
    ZetaReport r;
    r.p = j.at("p").get<long long>();
    r.n = j.at("n").get<int>();
    r.q = j.at("q").get<long long>();
    r.m_text = j.at("modulus").get<std::string>();
    r.m = poly_from_indices(j.at("modulus_coeffs").get<std::vector<std::uint32_t>>());
    r.phi_m = j.at("phi").get<long long>();
    r.n_m = j.at("n_m").get<long long>();
    r.det_poly = intpoly_from_json(j.at("det"));
    r.j = intpoly_from_json(j.at("j_poly"));
    r.p_minus = intpoly_from_json(j.at("p_minus"));
    r.h_minus = mpz_from_json(j.at("h_minus"));
    r.w_minus = mpz_from_json(j.at("w_minus"));
    for (const auto& e : j.at("splitting")) {
        SplitData s;
        s.Q = poly_from_indices(e.at("q_coeffs").get<std::vector<std::uint32_t>>());
        s.deg_q = e.at("deg").get<int>();
        s.v = e.at("v").get<int>();
        s.e = e.at("e").get<long long>();
        s.f = e.at("f").get<long long>();
        s.g = e.at("g").get<long long>();
        s.e_plus = e.at("e_plus").get<long long>();
        s.f_plus = e.at("f_plus").get<long long>();
        s.g_plus = e.at("g_plus").get<long long>();
        r.split.push_back(std::move(s));
    }
    r.checks = j.at("checks").get<std::map<std::string, bool>>();
    r.timings_ms = j.at("timings_ms").get<std::map<std::string, double>>();
    return r;
}

std::string report_to_text(const FieldCtx& F, const ZetaReport& r) {
    std::ostringstream out;
    out << "q = " << r.q << " (p = " << r.p << ", n = " << r.n << ")\n";
    if (F.n() > 1) {
        out << "defining poly = ";
        for (std::size_t i = 0; i < F.defining_poly().size(); ++i) {
            if (i) out << ",";
            out << F.defining_poly()[i];
        }
        out << " (constant term first)\n";
    }
    out << "m = " << r.m_text << "\n";
    out << "Phi = " << r.phi_m << ", N_m = " << r.n_m << "\n";
    out << "det D = " << int_poly_to_string(r.det_poly) << "\n";
    out << "J = " << int_poly_to_string(r.j) << "\n";
    out << "P_minus = " << int_poly_to_string(r.p_minus) << "\n";
    out << "h_minus = " << r.h_minus.get_str() << "\n";
    out << "w_minus = " << r.w_minus.get_str() << "\n";
    for (const auto& s : r.split)
        out << "split Q=" << poly_to_string(F, s.Q) << " v=" << s.v << " (e,f,g)=(" << s.e << ","
            << s.f << "," << s.g << ") (e+,f+,g+)=(" << s.e_plus << "," << s.f_plus << ","
            << s.g_plus << ")\n";
    out << "checks:";
    bool all = true;
    for (const auto& [name, ok] : r.checks) {
        if (!ok) all = false;
        out << " " << name << "=" << (ok ? "pass" : "FAIL");
    }
    out << "\n";
    out << "all_checks " << (all ? "passed" : "FAILED") << "\n";
    out << "timings_ms:";
    for (const auto& [name, ms] : r.timings_ms) out << " " << name << "=" << ms;
    out << "\n";
    return out.str();
}

std::string json_dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

} // namespace carlitz
