#include <fppcert/local_singularity.hpp>

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numeric>

using namespace fppcert;

TEST_CASE("semigroup delta on classical branches") {
    REQUIRE(semigroup_delta({1}) == 0);
    REQUIRE(semigroup_delta({2, 3}) == 1);   // ordinary cusp
    REQUIRE(semigroup_delta({2, 5}) == 2);   // ramphoid direction: gaps 1, 3
    REQUIRE(semigroup_delta({3, 4}) == 3);
    REQUIRE(semigroup_delta({3, 5}) == 4);
    // For <2, 2k+1> the gaps are the k odd numbers below 2k+1.
    for (long long k = 1; k <= 10; ++k) REQUIRE(semigroup_delta({2, 2 * k + 1}) == k);
}

TEST_CASE("semigroup delta input validation") {
    REQUIRE_THROWS_AS(semigroup_delta({}), std::invalid_argument);
    REQUIRE_THROWS_AS(semigroup_delta({2, 4}), std::invalid_argument);
    REQUIRE_THROWS_AS(semigroup_delta({0, 3}), std::invalid_argument);
    REQUIRE_THROWS_AS(semigroup_delta({-2, 3}), std::invalid_argument);
}

TEST_CASE("semigroup delta matches explicit enumeration") {
    oracle::Rng rng(17);
    int checked = 0;
    while (checked < 40) {
        std::vector<long long> gens;
        for (long long i = rng.range(1, 3); i > 0; --i) gens.push_back(rng.range(2, 9));
        long long g = 0;
        for (long long v : gens) g = std::gcd(g, v);
        if (g != 1) continue;
        long long bound = 1;
        for (long long v : gens) bound = std::max(bound, v);
        bound *= bound;
        REQUIRE(semigroup_delta(gens) == oracle::semigroup_gaps_enumerated(gens, bound));
        ++checked;
    }
}

TEST_CASE("shrinking a semigroup only adds gaps") {
    oracle::Rng rng(23);
    int checked = 0;
    while (checked < 40) {
        std::vector<long long> gens{rng.range(2, 7), rng.range(2, 9)};
        if (std::gcd(gens[0], gens[1]) != 1) continue;
        auto extended = gens;
        extended.push_back(rng.range(2, 15));
        REQUIRE(semigroup_delta(extended) <= semigroup_delta(gens));
        ++checked;
    }
}

TEST_CASE("unibranch fixed points have delta at least 3") {
    // The two weight cases confine the value semigroup inside <2,7> and
    // <4,5,7> respectively; their gap counts already exceed any budget of 2.
    REQUIRE(semigroup_delta({2, 7}) == 3);
    REQUIRE(semigroup_delta({4, 5, 7}) == 4);
}

TEST_CASE("local intersection multiplicities") {
    REQUIRE(local_intersection_mult(Contact::tr) == 1);
    REQUIRE(local_intersection_mult(Contact::tan_sm) == 2);
    REQUIRE(local_intersection_mult(Contact::tr_tac) == 2);
    REQUIRE(local_intersection_mult(Contact::tan_node) == 3);
    REQUIRE(local_intersection_mult(Contact::tan_tan) == 4);
    REQUIRE(local_intersection_mult(Contact::tan_tac) == 4);
}

TEST_CASE("delta is additive over branches") {
    REQUIRE(delta_additivity({0, 0}, {1}) == 1);            // node
    REQUIRE(delta_additivity({0, 0}, {2}) == 2);            // tacnode
    REQUIRE(delta_additivity({0, 0, 0}, {1, 1, 1}) == 3);   // ordinary triple point
    REQUIRE(delta_additivity({1, 0}, {1}) == 2);            // cusp meeting a smooth branch
    REQUIRE(delta_additivity({0}, {}) == 0);

    SECTION("r branches force delta >= r(r-1)/2") {
        oracle::Rng rng(31);
        for (int trial = 0; trial < 30; ++trial) {
            std::size_t r = static_cast<std::size_t>(rng.range(2, 5));
            std::vector<long long> deltas(r), mults(r * (r - 1) / 2);
            for (auto& d : deltas) d = rng.range(0, 3);
            for (auto& m : mults) m = rng.range(1, 4);
            REQUIRE(delta_additivity(deltas, mults) >=
                    static_cast<long long>(r * (r - 1) / 2));
        }
    }

    SECTION("validation") {
        REQUIRE_THROWS_AS(delta_additivity({0, 0}, {}), std::invalid_argument);
        REQUIRE_THROWS_AS(delta_additivity({0, 0}, {0}), std::invalid_argument);
        REQUIRE_THROWS_AS(delta_additivity({-1, 0}, {1}), std::invalid_argument);
    }
}

TEST_CASE("equivariant singularities within a delta budget") {
    auto smooth_only = classify_equivariant_singularity(0);
    REQUIRE(smooth_only.size() == 1);
    REQUIRE(smooth_only[0].name == "smooth");
    REQUIRE(smooth_only[0].delta == 0);

    auto budget1 = classify_equivariant_singularity(1);
    REQUIRE(budget1.size() == 1);
    REQUIRE(budget1[0].name == "node");

    auto budget2 = classify_equivariant_singularity(2);
    REQUIRE(budget2.size() == 2);
    REQUIRE(budget2[0].name == "node");
    REQUIRE(budget2[1].name == "tacnode");
    for (const auto& s : budget2) {
        REQUIRE(s.branches == 2);
        REQUIRE(s.lifted_fixed_points == 2);
        // two smooth branches: delta is exactly the mutual contact
        REQUIRE(s.delta == delta_additivity({0, 0}, {s.delta}));
    }

    REQUIRE_THROWS_AS(classify_equivariant_singularity(-1), std::invalid_argument);
    REQUIRE_THROWS_AS(classify_equivariant_singularity(3), std::invalid_argument);
}
