#include <fppcert/cyclotomic.hpp>

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using fppcert::Cyclotomic;
using fppcert::Rational;
using fppcert::cyc_eval_sum;
using fppcert::cyc_inv_one_minus_zeta;

namespace {

Cyclotomic random_element(unsigned l, oracle::Rng& rng) {
    Cyclotomic acc(l);
    for (unsigned k = 0; k + 1 < l; ++k) {
        Rational c(rng.range(-5, 5), rng.range(1, 4));
        acc += Cyclotomic::from_rational(l, c) * Cyclotomic::zeta_pow(l, k);
    }
    return acc;
}

double abs_error(const Cyclotomic& exact, std::complex<double> numeric) {
    return std::abs(oracle::eval_coeffs_numeric(exact.order(), exact.coefficients()) - numeric);
}

}  // namespace

TEST_CASE("zeta powers land in canonical form") {
    for (unsigned l : {3u, 5u, 7u, 11u}) {
        auto z0 = Cyclotomic::zeta_pow(l, 0);
        REQUIRE(z0 == Cyclotomic::one(l));
        REQUIRE(z0.coefficients().size() == l - 1);

        // zeta^{l-1} folds onto the all-minus-one vector.
        auto ztop = Cyclotomic::zeta_pow(l, l - 1);
        for (const auto& c : ztop.coefficients()) REQUIRE(c == -1);

        // exponents are periodic mod l, including negatives
        REQUIRE(Cyclotomic::zeta_pow(l, l) == z0);
        REQUIRE(Cyclotomic::zeta_pow(l, -1) == ztop);
        REQUIRE(Cyclotomic::zeta_pow(l, 3 * l + 2) == Cyclotomic::zeta_pow(l, 2));
    }
}

TEST_CASE("power map is a homomorphism") {
    oracle::Rng rng(11);
    for (unsigned l : {3u, 5u, 7u, 13u}) {
        for (int trial = 0; trial < 40; ++trial) {
            long long a = rng.range(-30, 30);
            long long b = rng.range(-30, 30);
            REQUIRE(Cyclotomic::zeta_pow(l, a) * Cyclotomic::zeta_pow(l, b) ==
                    Cyclotomic::zeta_pow(l, a + b));
        }
    }
}

TEST_CASE("all primitive roots sum to -1") {
    for (unsigned l : {3u, 5u, 7u, 11u, 13u}) {
        Cyclotomic acc(l);
        for (unsigned k = 1; k < l; ++k) acc += Cyclotomic::zeta_pow(l, k);
        REQUIRE(acc.is_rational());
        REQUIRE(acc.rational_value() == -1);
    }
}

TEST_CASE("field axioms hold on random elements") {
    oracle::Rng rng(20240229);
    for (unsigned l : {3u, 5u, 7u}) {
        for (int trial = 0; trial < 25; ++trial) {
            auto a = random_element(l, rng);
            auto b = random_element(l, rng);
            auto c = random_element(l, rng);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE(a + b == b + a);
            REQUIRE(a * b == b * a);
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE((a - a).is_zero());
            if (!a.is_zero()) {
                REQUIRE(a * a.inverse() == Cyclotomic::one(l));
                REQUIRE(a.inverse().inverse() == a);
            }
        }
    }
}

TEST_CASE("exact arithmetic matches numeric evaluation") {
    oracle::Rng rng(7);
    for (unsigned l : {3u, 5u, 7u, 11u}) {
        for (int trial = 0; trial < 10; ++trial) {
            auto a = random_element(l, rng);
            auto b = random_element(l, rng);
            auto na = oracle::eval_coeffs_numeric(l, a.coefficients());
            auto nb = oracle::eval_coeffs_numeric(l, b.coefficients());
            REQUIRE(abs_error(a * b, na * nb) < 1e-7);
            REQUIRE(abs_error(a + b, na + nb) < 1e-9);
            if (!a.is_zero()) REQUIRE(abs_error(a.inverse(), 1.0 / na) < 1e-7);
        }
    }
}

TEST_CASE("inverse of 1 - zeta^k") {
    SECTION("throws when the denominator vanishes") {
        REQUIRE_THROWS_AS(cyc_inv_one_minus_zeta(3, 0), std::domain_error);
        REQUIRE_THROWS_AS(cyc_inv_one_minus_zeta(7, 14), std::domain_error);
        REQUIRE_THROWS_AS(cyc_inv_one_minus_zeta(5, -5), std::domain_error);
    }

    SECTION("defining property") {
        for (unsigned l : {3u, 5u, 7u, 11u, 13u})
            for (unsigned k = 1; k < l; ++k) {
                auto w = cyc_inv_one_minus_zeta(l, k);
                auto denom = Cyclotomic::one(l) - Cyclotomic::zeta_pow(l, k);
                REQUIRE(w * denom == Cyclotomic::one(l));
            }
    }

    SECTION("conjugate weights pair to 1") {
        for (unsigned l : {3u, 5u, 7u, 11u, 13u})
            for (unsigned k = 1; k < l; ++k) {
                auto sum = cyc_inv_one_minus_zeta(l, k) + cyc_inv_one_minus_zeta(l, l - k);
                REQUIRE(sum.is_rational());
                REQUIRE(sum.rational_value() == 1);
            }
    }

    SECTION("weights over all nonzero exponents sum to (l-1)/2") {
        for (unsigned l : {3u, 5u, 7u, 11u, 13u}) {
            Cyclotomic acc(l);
            for (unsigned k = 1; k < l; ++k) acc += cyc_inv_one_minus_zeta(l, k);
            REQUIRE(acc.is_rational());
            REQUIRE(acc.rational_value() == Rational(l - 1, 2));
        }
    }
}

TEST_CASE("trace-side sums") {
    SECTION("input validation") {
        REQUIRE_THROWS_AS(cyc_eval_sum(3, {0}, {}), std::invalid_argument);
        REQUIRE_THROWS_AS(cyc_eval_sum(3, {3}, {}), std::invalid_argument);
        REQUIRE_THROWS_AS(cyc_eval_sum(3, {}, {0}), std::invalid_argument);
        REQUIRE_THROWS_AS(cyc_eval_sum(5, {1}, {5}), std::invalid_argument);
    }

    SECTION("known vanishing combinations for order 3") {
        REQUIRE(cyc_eval_sum(3, {1, 2}, {1, 2}).is_zero());
        REQUIRE(cyc_eval_sum(3, {1, 1, 1}, {1, 2, 2}).is_zero());
    }

    SECTION("agrees with numeric evaluation on random exponent lists") {
        oracle::Rng rng(99);
        for (unsigned l : {3u, 7u}) {
            for (int trial = 0; trial < 30; ++trial) {
                std::vector<unsigned> fixed, eigen;
                for (long long i = rng.range(0, 4); i > 0; --i)
                    fixed.push_back(static_cast<unsigned>(rng.range(1, l - 1)));
                for (long long i = rng.range(0, 4); i > 0; --i)
                    eigen.push_back(static_cast<unsigned>(rng.range(1, l - 1)));
                auto exact = cyc_eval_sum(l, fixed, eigen);
                REQUIRE(abs_error(exact, oracle::eval_sum_numeric(l, fixed, eigen)) < 1e-9);
            }
        }
    }
}

TEST_CASE("field construction rejects non-prime orders") {
    REQUIRE_THROWS_AS(Cyclotomic(4), std::invalid_argument);
    REQUIRE_THROWS_AS(Cyclotomic(1), std::invalid_argument);
    REQUIRE_THROWS_AS(Cyclotomic(9), std::invalid_argument);
    REQUIRE_NOTHROW(Cyclotomic(13));
}

TEST_CASE("rational detection") {
    auto z = Cyclotomic::zeta_pow(7, 3);
    REQUIRE_FALSE(z.is_rational());
    REQUIRE_THROWS_AS(z.rational_value(), std::domain_error);
    auto r = Cyclotomic::from_rational(7, Rational(22, 7));
    REQUIRE(r.is_rational());
    REQUIRE(r.rational_value() == Rational(22, 7));
}
