#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "carlitz/cache.hpp"
#include "carlitz/parse.hpp"
#include "carlitz/serialize.hpp"
#include "carlitz/zeta.hpp"

using namespace carlitz;

namespace {

std::string run_command(const std::string& cmd, int& exit_code) {
    std::string full = cmd + " 2>/dev/null";
    FILE* pipe = popen(full.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    exit_code = WEXITSTATUS(status);
    return out;
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("carlitz_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("parse_modulus syntaxes") {
    FieldCtx F = FieldCtx::make(3, 1);
    FqPoly expect51 = poly_from_ints(F, {1, 0, 1});
    CHECK(parse_modulus("T^2+1", F) == expect51);
    CHECK(parse_modulus("1,0,1", F) == expect51);
    CHECK(parse_modulus(" T^2 + 1 ", F) == expect51);
    CHECK(parse_modulus("T^3+T^2", F) == poly_from_ints(F, {0, 0, 1, 1}));
    CHECK(parse_modulus("T^2+2*T+2", F) == poly_from_ints(F, {2, 2, 1}));
    CHECK(parse_modulus("T^2-1", F) == poly_from_ints(F, {2, 0, 1}));
    CHECK(parse_modulus("4*T^2+1", F) == expect51); // coefficients reduce into F_q
    CHECK(parse_modulus("T+T^2+1+T+T", F) == expect51); // repeated monomials accumulate

    CHECK_THROWS_AS(parse_modulus("2*T^2+1", F), NotMonic);
    CHECK_THROWS_AS(parse_modulus("5", F), ConstantModulus);
    CHECK_THROWS_AS(parse_modulus("T^2++1", F), SyntaxError);
    CHECK_THROWS_AS(parse_modulus("", F), SyntaxError);
    CHECK_THROWS_AS(parse_modulus("T^2+x", F), SyntaxError);

    // error position is reported
    try {
        parse_modulus("T^2+@", F);
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.position == 4);
    }

    // extension field: tuples as coefficients
    FieldCtx F4 = FieldCtx::make(2, 2);
    FqPoly m4 = parse_modulus("T^2+(0,1)*T+(1,1)", F4);
    CHECK(m4.degree() == 2);
    CHECK(m4.c[1] == F4.from_coords({0, 1}));
    CHECK(m4.c[0] == F4.from_coords({1, 1}));
    CHECK(parse_modulus(poly_to_string(F4, m4), F4) == m4); // round trip
}

TEST_CASE("parse-print round trip over a sweep") {
    for (long long q : {2, 3, 5}) {
        FieldCtx F = FieldCtx::make(q, 1);
        for (const auto& m : all_monic_up_to(F, 3))
            CHECK(parse_modulus(poly_to_string(F, m), F) == m);
    }
}

TEST_CASE("report JSON round trip over a sweep") {
    FieldCtx F = FieldCtx::make(3, 1);
    for (const auto& m : all_monic_up_to(F, 2)) {
        ZetaReport r = relative_zeta(F, m, ZetaOptions{true});
        nlohmann::json j = report_to_json(F, r);
        ZetaReport back = report_from_json(j);
        CHECK(back == r);
        // and the rebuilt field matches
        FieldCtx F2 = field_from_json(j);
        CHECK(F2.q() == F.q());
    }

    // extension field: the defining polynomial travels with the report
    FieldCtx F4 = FieldCtx::make(2, 2);
    ZetaReport r4 = relative_zeta(F4, parse_modulus("T^2+(0,1)*T+(1,1)", F4), ZetaOptions{true});
    nlohmann::json j4 = report_to_json(F4, r4);
    CHECK(report_from_json(j4) == r4);
    FieldCtx F4b = field_from_json(j4);
    CHECK(F4b.q() == 4);
    CHECK(F4b.defining_poly() == F4.defining_poly());
}

TEST_CASE("json big integers become strings and read back") {
    nlohmann::json big = nlohmann::json::parse("\"123456789012345678901234567890\"");
    ZetaReport r;
    r.h_minus = mpz_class("123456789012345678901234567890");
    FieldCtx F = FieldCtx::make(3, 1);
    r.m = poly_from_ints(F, {1, 0, 1});
    r.m_text = "T^2+1";
    nlohmann::json j = report_to_json(F, r);
    CHECK(j.at("h_minus") == big);
    CHECK(report_from_json(j).h_minus == r.h_minus);
}

TEST_CASE("cache store and load round trip, atomic file") {
    TempDir tmp;
    FieldCtx F = FieldCtx::make(3, 1);
    std::string key = cache_key(F, "T^2+1", false);
    auto file = cache_path(tmp.path, key);
    CHECK(!cache_load(file).has_value());

    ZetaReport r = relative_zeta(F, poly_from_ints(F, {1, 0, 1}));
    nlohmann::json j = report_to_json(F, r);
    cache_store(file, j);
    auto hit = cache_load(file);
    REQUIRE(hit.has_value());
    CHECK(json_dump(*hit) == json_dump(j));

    // distinct keys for oracle / field variations
    CHECK(cache_key(F, "T^2+1", true) != key);
    FieldCtx F5 = FieldCtx::make(5, 1);
    CHECK(cache_key(F5, "T^2+1", false) != key);
}

TEST_CASE("CARLITZ_CACHE_DIR is the default cache location") {
    TempDir tmp;
    setenv("CARLITZ_CACHE_DIR", tmp.path.c_str(), 1);
    CHECK(default_cache_dir() == tmp.path);
    unsetenv("CARLITZ_CACHE_DIR");
    CHECK(default_cache_dir().empty());
}

#ifdef CARLITZ_BIN_PATH
TEST_CASE("binary: zeta text output on the reference case q=3, T^2+1") {
    int code = 0;
    std::string out =
        run_command(std::string(CARLITZ_BIN_PATH) + " zeta --p 3 --modulus \"T^2+1\"", code);
    CHECK(code == 0);
    CHECK(out.find("h_minus = 8") != std::string::npos);
    CHECK(out.find("1 - 2*X^2 + 9*X^4") != std::string::npos);
}

TEST_CASE("binary: zeta JSON output on the reference case q=3, T^3+T^2") {
    int code = 0;
    std::string out = run_command(
        std::string(CARLITZ_BIN_PATH) + " zeta --p 3 --modulus \"T^3+T^2\" --format json", code);
    CHECK(code == 0);
    nlohmann::json j = nlohmann::json::parse(out);
    CHECK(j.at("p_minus") == nlohmann::json::parse("[1,-1,1,-6,3,-9,27]"));
    CHECK(j.at("h_minus") == 16);
}

TEST_CASE("binary: user errors exit 1") {
    int code = 0;
    run_command(std::string(CARLITZ_BIN_PATH) + " zeta --p 4 --modulus T", code);
    CHECK(code == 1);
    run_command(std::string(CARLITZ_BIN_PATH) + " zeta --p 3 --modulus \"2*T+1\"", code);
    CHECK(code == 1);
    run_command(std::string(CARLITZ_BIN_PATH) + " zeta --p 3 --modulus \"7\"", code);
    CHECK(code == 1);
    // oracle group-order cap
    run_command(std::string(CARLITZ_BIN_PATH) +
                    " zeta --p 5 --modulus \"T^3+T+1\" --oracle --phi-limit 10",
                code);
    CHECK(code == 1);
}

TEST_CASE("binary: verify over an extension field") {
    int code = 0;
    std::string out = run_command(
        std::string(CARLITZ_BIN_PATH) + " verify --p 2 --n 2 --max-deg 1 --jobs 2", code);
    CHECK(code == 0);
    CHECK(out.find("RESULT: all checks passed") != std::string::npos);
}

TEST_CASE("binary: table CSV row count and cache reuse is byte-identical") {
    TempDir tmp;
    std::string cache = (tmp.path / "cache").string();
    std::string cmd = std::string(CARLITZ_BIN_PATH) +
                      " table --p 3 --max-deg 2 --jobs 2 --cache-dir " + cache;
    int code1 = 0, code2 = 0;
    std::string cold = run_command(cmd, code1);
    std::string warm = run_command(cmd, code2);
    CHECK(code1 == 0);
    CHECK(code2 == 0);
    CHECK(cold == warm);

    std::istringstream lines(cold);
    std::string line;
    int rows = 0;
    bool saw_example = false;
    while (std::getline(lines, line)) {
        if (rows == 0) CHECK(line == "q,m,Phi,N_m,h_minus,w_minus,p_coeffs,j_coeffs,checks_passed");
        if (line.find("T^2+1") != std::string::npos && line.find(",8,") != std::string::npos)
            saw_example = true;
        ++rows;
    }
    CHECK(rows == 1 + 3 + 9); // header + linear + quadratic moduli
    CHECK(saw_example);
}

TEST_CASE("binary: table output is identical across worker counts") {
    int c1 = 0, c2 = 0;
    std::string base = std::string(CARLITZ_BIN_PATH) + " table --p 3 --max-deg 2";
    CHECK(run_command(base + " --jobs 1", c1) == run_command(base + " --jobs 4", c2));
    CHECK(c1 == 0);
    CHECK(c2 == 0);
}

TEST_CASE("binary: q = 2 table has all h_minus = 1") {
    int code = 0;
    std::string out =
        run_command(std::string(CARLITZ_BIN_PATH) + " table --p 2 --max-deg 3", code);
    CHECK(code == 0);
    std::istringstream lines(out);
    std::string line;
    std::getline(lines, line); // header
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        std::istringstream cells(line);
        std::string q, m, phi, nm, h;
        std::getline(cells, q, ',');
        std::getline(cells, m, ',');
        std::getline(cells, phi, ',');
        std::getline(cells, nm, ',');
        std::getline(cells, h, ',');
        CHECK(h == "1");
    }
}

TEST_CASE("binary: verify runs clean on a small sweep") {
    int code = 0;
    std::string out =
        run_command(std::string(CARLITZ_BIN_PATH) + " verify --p 3 --max-deg 2 --jobs 2", code);
    CHECK(code == 0);
    CHECK(out.find("RESULT: all checks passed") != std::string::npos);
}
#endif

TEST_SUITE_END();
