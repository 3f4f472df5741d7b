#include <fppcert/surface_lattice.hpp>

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace fppcert;

namespace {

Matrix to_matrix(const std::vector<std::vector<long long>>& rows) {
    Matrix m;
    for (const auto& r : rows) {
        std::vector<Rational> row(r.begin(), r.end());
        m.push_back(std::move(row));
    }
    return m;
}

PassKind mirror(PassKind k) {
    switch (k) {
        case PassKind::smooth_E1: return PassKind::smooth_E2;
        case PassKind::smooth_E2: return PassKind::smooth_E1;
        case PassKind::tac_E1: return PassKind::tac_E2;
        case PassKind::tac_E2: return PassKind::tac_E1;
        case PassKind::node: return PassKind::node;
    }
    throw std::logic_error("unreachable");
}

LatticeConfig mirrored(LatticeConfig cfg) {
    for (auto& p : cfg.curve1.passages) p.kind = mirror(p.kind);
    for (auto& p : cfg.curve2.passages) p.kind = mirror(p.kind);
    return cfg;
}

// The six configurations whose lattices rule out a pair of tangent or
// doubly-tangent degree-2 invariant curves. Sites: 0 = a, 1 = b, 2 = c.
LatticeConfig transversal_pair(int which) {
    CurvePassage smooth_smooth{2, {{0, PassKind::smooth_E1}, {1, PassKind::smooth_E1}}};
    CurvePassage smooth_smooth2{2, {{0, PassKind::smooth_E2}, {2, PassKind::smooth_E1}}};
    CurvePassage tac_first{2, {{0, PassKind::smooth_E1}, {1, PassKind::tac_E1}}};
    CurvePassage tac_second{2, {{0, PassKind::smooth_E2}, {2, PassKind::tac_E1}}};
    switch (which) {
        case 0: return {smooth_smooth, smooth_smooth2, {{0, Contact::tr}}};
        case 1: return {smooth_smooth, tac_second, {{0, Contact::tr}}};
        default: return {tac_first, tac_second, {{0, Contact::tr}}};
    }
}

LatticeConfig tangent_pair(int which) {
    CurvePassage first{2, {{0, PassKind::smooth_E1}, {2, PassKind::smooth_E1}}};
    CurvePassage second{2, {{0, PassKind::smooth_E1}, {1, PassKind::smooth_E1}}};
    CurvePassage tac_first{2, {{0, PassKind::smooth_E1}, {2, PassKind::tac_E1}}};
    CurvePassage tac_second{2, {{0, PassKind::smooth_E1}, {1, PassKind::tac_E1}}};
    switch (which) {
        case 0: return {first, second, {{0, Contact::tan_tan}}};
        case 1: return {first, tac_second, {{0, Contact::tan_tan}}};
        default: return {tac_first, tac_second, {{0, Contact::tan_tan}}};
    }
}

}  // namespace

TEST_CASE("numerics of strict transforms") {
    auto expect = [](const CurvePassage& c, Rational ce, Rational c2, Rational pa, Rational kc) {
        auto n = curve_numbers(c);
        REQUIRE(n.CE == ce);
        REQUIRE(n.C_self == c2);
        REQUIRE(n.p_a == pa);
        REQUIRE(n.KC == kc);
    };

    CurvePassage N{1, {{0, PassKind::smooth_E1}, {1, PassKind::smooth_E1}}};
    CurvePassage I1{2, {{0, PassKind::smooth_E1}, {1, PassKind::smooth_E1}}};
    CurvePassage I2{2, {{0, PassKind::node}, {1, PassKind::smooth_E1}, {2, PassKind::smooth_E1}}};
    CurvePassage I3{2, {{0, PassKind::tac_E1}, {1, PassKind::smooth_E1}}};

    expect(N, Rational(4, 3), Rational(-1), Rational(1), Rational(1));
    expect(I1, Rational(4, 3), Rational(0), Rational(2), Rational(2));
    expect(I2, Rational(10, 3), Rational(-2), Rational(1), Rational(2));
    expect(I3, Rational(10, 3), Rational(-2), Rational(1), Rational(2));

    // the doubled degree-2 curve through a node has the same numbers as I2
    CurvePassage X{2, {{0, PassKind::node}, {1, PassKind::smooth_E1}, {2, PassKind::smooth_E1}}};
    expect(X, Rational(10, 3), Rational(-2), Rational(1), Rational(2));
}

TEST_CASE("surface constants satisfy Noether's formula") {
    REQUIRE((SurfaceConstants::KZ_squared + SurfaceConstants::euler_Z) % 12 == 0);
    REQUIRE(SurfaceConstants::picard_rank_Z ==
            1 + 2 * SurfaceConstants::singular_points);
}

TEST_CASE("golden lattices for transversal pairs") {
    const std::vector<std::vector<std::vector<long long>>> golden = {
        {{0, 3, 1, 0, 1, 0, 0, 0},
         {3, 0, 0, 1, 0, 0, 1, 0},
         {1, 0, -2, 1, 0, 0, 0, 0},
         {0, 1, 1, -2, 0, 0, 0, 0},
         {1, 0, 0, 0, -2, 1, 0, 0},
         {0, 0, 0, 0, 1, -2, 0, 0},
         {0, 1, 0, 0, 0, 0, -2, 1},
         {0, 0, 0, 0, 0, 0, 1, -2}},
        {{0, 3, 1, 0, 1, 0, 0, 0},
         {3, -2, 0, 1, 0, 0, 2, 0},
         {1, 0, -2, 1, 0, 0, 0, 0},
         {0, 1, 1, -2, 0, 0, 0, 0},
         {1, 0, 0, 0, -2, 1, 0, 0},
         {0, 0, 0, 0, 1, -2, 0, 0},
         {0, 2, 0, 0, 0, 0, -2, 1},
         {0, 0, 0, 0, 0, 0, 1, -2}},
        {{-2, 3, 1, 0, 2, 0, 0, 0},
         {3, -2, 0, 1, 0, 0, 2, 0},
         {1, 0, -2, 1, 0, 0, 0, 0},
         {0, 1, 1, -2, 0, 0, 0, 0},
         {2, 0, 0, 0, -2, 1, 0, 0},
         {0, 0, 0, 0, 1, -2, 0, 0},
         {0, 2, 0, 0, 0, 0, -2, 1},
         {0, 0, 0, 0, 0, 0, 1, -2}}};

    for (int i = 0; i < 3; ++i) {
        auto cfg = transversal_pair(i);
        auto m = build_intersection_matrix(cfg);
        REQUIRE(m == to_matrix(golden[i]));
        auto det = exact_determinant(m);
        REQUIRE(det == -252);
        REQUIRE(oracle::cofactor_det(m) == det);
        REQUIRE(picard_contradiction(m) == LatticeVerdict::CONTRADICTION);
        REQUIRE(exact_determinant(build_intersection_matrix(mirrored(cfg))) == det);
    }
}

TEST_CASE("golden lattices for doubly tangent pairs") {
    const std::vector<std::vector<std::vector<long long>>> golden = {
        {{0, 0, 1, 0, 0, 0, 1, 0},
         {0, 0, 1, 0, 1, 0, 0, 0},
         {1, 1, -2, 1, 0, 0, 0, 0},
         {0, 0, 1, -2, 0, 0, 0, 0},
         {0, 1, 0, 0, -2, 1, 0, 0},
         {0, 0, 0, 0, 1, -2, 0, 0},
         {1, 0, 0, 0, 0, 0, -2, 1},
         {0, 0, 0, 0, 0, 0, 1, -2}},
        {{0, 0, 1, 0, 0, 0, 1, 0},
         {0, -2, 1, 0, 2, 0, 0, 0},
         {1, 1, -2, 1, 0, 0, 0, 0},
         {0, 0, 1, -2, 0, 0, 0, 0},
         {0, 2, 0, 0, -2, 1, 0, 0},
         {0, 0, 0, 0, 1, -2, 0, 0},
         {1, 0, 0, 0, 0, 0, -2, 1},
         {0, 0, 0, 0, 0, 0, 1, -2}},
        {{-2, 0, 1, 0, 0, 0, 2, 0},
         {0, -2, 1, 0, 2, 0, 0, 0},
         {1, 1, -2, 1, 0, 0, 0, 0},
         {0, 0, 1, -2, 0, 0, 0, 0},
         {0, 2, 0, 0, -2, 1, 0, 0},
         {0, 0, 0, 0, 1, -2, 0, 0},
         {2, 0, 0, 0, 0, 0, -2, 1},
         {0, 0, 0, 0, 0, 0, 1, -2}}};

    for (int i = 0; i < 3; ++i) {
        auto cfg = tangent_pair(i);
        auto m = build_intersection_matrix(cfg);
        REQUIRE(m == to_matrix(golden[i]));
        auto det = exact_determinant(m);
        REQUIRE(det == 36);
        REQUIRE(oracle::cofactor_det(m) == det);
        REQUIRE(picard_contradiction(m) == LatticeVerdict::CONTRADICTION);
        REQUIRE(exact_determinant(build_intersection_matrix(mirrored(cfg))) == det);
    }
}

TEST_CASE("configuration validation") {
    CurvePassage c1{2, {{0, PassKind::smooth_E1}, {1, PassKind::smooth_E1}}};
    CurvePassage c2{2, {{0, PassKind::smooth_E2}, {2, PassKind::smooth_E1}}};

    SECTION("shared site must be visited by both curves") {
        REQUIRE_THROWS_AS(build_intersection_matrix({c1, c2, {{1, Contact::tr}}}),
                          std::invalid_argument);
    }

    SECTION("contact cannot exceed the product upstairs") {
        CurvePassage both{2,
                          {{0, PassKind::smooth_E1}, {1, PassKind::smooth_E1}}};
        CurvePassage other{2,
                           {{0, PassKind::smooth_E1}, {1, PassKind::smooth_E1}}};
        LatticeConfig cfg{both, other, {{0, Contact::tan_tan}, {1, Contact::tan_sm}}};
        REQUIRE_THROWS_AS(build_intersection_matrix(cfg), std::domain_error);
    }

    SECTION("site index range") {
        CurvePassage bad{2, {{5, PassKind::smooth_E1}}};
        REQUIRE_THROWS_AS(build_intersection_matrix({bad, c2, {}}), std::invalid_argument);
    }
}

TEST_CASE("determinant engine") {
    SECTION("agrees with cofactor expansion on random rational matrices") {
        oracle::Rng rng(321);
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t n = static_cast<std::size_t>(rng.range(1, 5));
            Matrix m(n, std::vector<Rational>(n));
            for (auto& row : m)
                for (auto& v : row) v = Rational(rng.range(-6, 6), rng.range(1, 4));
            REQUIRE(exact_determinant(m) == oracle::cofactor_det(m));
        }
    }

    SECTION("rank-deficient matrices give zero") {
        Matrix m = {{Rational(1), Rational(2), Rational(3)},
                    {Rational(2), Rational(4), Rational(6)},
                    {Rational(0), Rational(1), Rational(1)}};
        REQUIRE(exact_determinant(m) == 0);
    }

    SECTION("needs pivoting when a leading minor vanishes") {
        Matrix m = {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
        REQUIRE(exact_determinant(m) == -1);
    }

    SECTION("rejects non-square input") {
        Matrix m = {{Rational(1), Rational(2)}};
        REQUIRE_THROWS_AS(exact_determinant(m), std::invalid_argument);
    }
}

TEST_CASE("rank bound drives the verdict") {
    Matrix small(7, std::vector<Rational>(7, Rational(0)));
    for (int i = 0; i < 7; ++i) small[i][i] = Rational(1);
    REQUIRE(picard_contradiction(small) == LatticeVerdict::INCONCLUSIVE);

    Matrix degenerate(8, std::vector<Rational>(8, Rational(0)));
    REQUIRE(picard_contradiction(degenerate) == LatticeVerdict::INCONCLUSIVE);
}
