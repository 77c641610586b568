#include <doctest.h>

#include <algorithm>

#include "carlitz/units.hpp"
#include "oracles.hpp"

using namespace carlitz;

TEST_SUITE_BEGIN("units");

TEST_CASE("canonical_rep") {
    FieldCtx F = FieldCtx::make(3, 1);
    FqPoly m = poly_from_ints(F, {1, 0, 1}); // T^2+1
    // T^3 = T(T^2+1) - T == -T == 2T
    CHECK(canonical_rep(F, poly_from_ints(F, {0, 0, 0, 1}), m) == poly_from_ints(F, {0, 2}));
    CHECK(canonical_rep(F, poly_one(), m) == poly_one());
    CHECK(canonical_rep(F, m, m) == FqPoly{});
}

TEST_CASE("inverse_mod") {
    FieldCtx F = FieldCtx::make(3, 1);
    FqPoly m = poly_from_ints(F, {1, 0, 1});
    CHECK(inverse_mod(F, poly_one(), m) == poly_one());
    // T * 2T = 2T^2 == -2 == 1 mod T^2+1
    CHECK(inverse_mod(F, poly_t(), m) == poly_from_ints(F, {0, 2}));
    // (T+2)(T+1) = T^2 + 2 == 1 mod T^2+1, verified by expansion
    FqPoly t_plus_2 = poly_from_ints(F, {2, 1});
    FqPoly inv = inverse_mod(F, t_plus_2, m);
    CHECK(inv == poly_from_ints(F, {1, 1}));
    CHECK(canonical_rep(F, poly_mul(F, t_plus_2, inv), m) == poly_one());

    CHECK_THROWS_AS(inverse_mod(F, poly_t(), poly_mul(F, poly_t(), poly_t())), NotAUnit);
}

TEST_CASE("inverse_mod is an involution (exhaustive over small sweeps)") {
    for (long long q : {2, 3, 5}) {
        FieldCtx F = FieldCtx::make(q, 1);
        for (const auto& m : all_monic_up_to(F, 3)) {
            UnitSystem sys = unit_system(F, m);
            for (const auto& rep : sys.reps) {
                FqPoly inv = inverse_mod(F, rep, m);
                CHECK(inverse_mod(F, inv, m) == canonical_rep(F, rep, m));
                CHECK(canonical_rep(F, poly_mul(F, rep, inv), m) == poly_one());
            }
        }
    }
}

TEST_CASE("unit_system on hand-checked representative lists") {
    FieldCtx F = FieldCtx::make(3, 1);

    // m = T^2+1: alpha = 1, T, T+1, T+2
    UnitSystem s1 = unit_system(F, poly_from_ints(F, {1, 0, 1}));
    REQUIRE(s1.n_m == 4);
    CHECK(s1.reps[0] == poly_one());
    CHECK(s1.reps[1] == poly_t());
    CHECK(s1.reps[2] == poly_from_ints(F, {1, 1}));
    CHECK(s1.reps[3] == poly_from_ints(F, {2, 1}));

    // m = T^3+T^2: the six unit classes in lex order
    UnitSystem s2 = unit_system(F, poly_from_ints(F, {0, 0, 1, 1}));
    REQUIRE(s2.n_m == 6);
    CHECK(s2.reps[0] == poly_one());
    CHECK(s2.reps[1] == poly_from_ints(F, {2, 1}));
    CHECK(s2.reps[2] == poly_from_ints(F, {1, 0, 1}));
    CHECK(s2.reps[3] == poly_from_ints(F, {1, 1, 1}));
    CHECK(s2.reps[4] == poly_from_ints(F, {2, 1, 1}));
    CHECK(s2.reps[5] == poly_from_ints(F, {2, 2, 1}));

    // linear modulus: single class
    for (long long q : {2, 3, 5}) {
        FieldCtx Fq = FieldCtx::make(q, 1);
        for (const auto& lin : enumerate_monic(Fq, 1)) {
            UnitSystem s = unit_system(Fq, lin);
            REQUIRE(s.n_m == 1);
            CHECK(s.reps[0] == poly_one());
        }
    }
}

TEST_CASE("unit system size and leading coefficients") {
    for (long long q : {2, 3, 5}) {
        FieldCtx F = FieldCtx::make(q, 1);
        for (const auto& m : all_monic_up_to(F, 3)) {
            UnitSystem sys = unit_system(F, m);
            CHECK(sys.n_m * (q - 1) == phi(F, m));
            for (const auto& rep : sys.reps) {
                auto [deg, lead] = deg_and_leading(UnitRep{rep, m});
                CHECK(lead == F.one());
                CHECK(deg == rep.degree());
            }
        }
    }
}

TEST_CASE("deg_and_leading") {
    FieldCtx F = FieldCtx::make(3, 1);
    FqPoly m = poly_from_ints(F, {1, 0, 1});
    CHECK(deg_and_leading(UnitRep{poly_one(), m}) == std::pair<int, FqElem>{0, FqElem{1}});
    CHECK(deg_and_leading(UnitRep{poly_from_ints(F, {1, 2}), m}) ==
          std::pair<int, FqElem>{1, FqElem{2}});
    // T^2+2T+2 is a monic-leading representative mod T^3+T^2
    FqPoly m2 = poly_from_ints(F, {0, 0, 1, 1});
    CHECK(deg_and_leading(UnitRep{poly_from_ints(F, {2, 2, 1}), m2}) ==
          std::pair<int, FqElem>{2, FqElem{1}});
}

TEST_CASE("pair_data: diagonal and hand-checked entries mod T^2+1") {
    FieldCtx F = FieldCtx::make(3, 1);
    UnitSystem sys = unit_system(F, poly_from_ints(F, {1, 0, 1}));
    for (int i = 0; i < 4; ++i) CHECK(pair_data(F, sys, i, i) == std::pair<int, FqElem>{0, FqElem{1}});
    // alpha_1 alpha_2^{-1} = T^{-1} = 2T: degree 1, leading 2
    CHECK(pair_data(F, sys, 0, 1) == std::pair<int, FqElem>{1, FqElem{2}});
    // alpha_1 alpha_3^{-1} = (T+1)^{-1} = T+2: degree 1, leading 1
    CHECK(pair_data(F, sys, 0, 2) == std::pair<int, FqElem>{1, FqElem{1}});
}

TEST_CASE("pair degrees are positive off the diagonal") {
    for (long long q : {2, 3, 5}) {
        FieldCtx F = FieldCtx::make(q, 1);
        for (const auto& m : all_monic_up_to(F, 3)) {
            UnitSystem sys = unit_system(F, m);
            for (int i = 0; i < sys.n_m; ++i)
                for (int j = 0; j < sys.n_m; ++j) {
                    auto [d, l] = pair_data(F, sys, i, j);
                    CHECK((d > 0) == (i != j));
                }
        }
    }
}

TEST_CASE("the scaled-monic translates of the rep set are the rep set") {
    FieldCtx F = FieldCtx::make(3, 1);
    for (const auto& m : all_monic_up_to(F, 3)) {
        UnitSystem sys = unit_system(F, m);
        for (int j = 0; j < sys.n_m; ++j) {
            std::vector<FqPoly> translated;
            FqPoly inv_j = inverse_mod(F, sys.reps[j], m);
            for (int i = 0; i < sys.n_m; ++i) {
                FqPoly r = canonical_rep(F, poly_mul(F, sys.reps[i], inv_j), m);
                translated.push_back(poly_monic(F, r));
            }
            std::sort(translated.begin(), translated.end());
            auto expected = sys.reps;
            std::sort(expected.begin(), expected.end());
            CHECK(translated == expected);
        }
    }
}

TEST_SUITE_END();
