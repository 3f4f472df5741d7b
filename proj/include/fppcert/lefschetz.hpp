#pragma once

#include "cyclotomic.hpp"
#include "rational.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fppcert {

// Fixed point count of an order-l automorphism of a genus-g curve in terms of
// the genus drop Delta = g - (quotient genus): 2 - 2g + 2*l*Delta/(l-1).
// Feasible means the count is a nonnegative integer; anything else certifies
// that no such action exists.
struct FixedPointCount {
    Rational value;
    bool feasible;
};

inline FixedPointCount fixed_point_count(unsigned l, long long g, const Rational& Delta) {
    Rational value = Rational(2) - Rational(2 * g) +
                     Rational(2 * static_cast<long long>(l)) * Delta /
                         Rational(static_cast<long long>(l) - 1);
    return {value, is_integer(value) && value >= 0};
}

// Counting equation a*n + b*x = c for an invariant curve of degree k with
// delta-invariant delta: a = (l-1)/2, b = l, and c = (l-1) + g where g is the
// geometric genus 1 + k(k+3)/2 - delta. n counts fixed points on the
// normalization; at least one exists, hence n_min = 1.
struct CaseEquation {
    long long a;
    long long b;
    long long c;
    long long n_min = 1;
    std::optional<long long> n_max;
};

inline CaseEquation case_equation(long long k, unsigned l, long long delta) {
    long long g = 1 + k * (k + 3) / 2 - delta;
    CaseEquation eq;
    eq.a = (static_cast<long long>(l) - 1) / 2;
    eq.b = static_cast<long long>(l);
    eq.c = (static_cast<long long>(l) - 1) + g;
    return eq;
}

// All (n, x) with a*n + b*x = c, n in [n_min, n_max], x >= 0, ascending in n.
inline std::vector<std::pair<long long, long long>> solve_diophantine(const CaseEquation& eq) {
    if (eq.a <= 0 || eq.b <= 0) throw std::invalid_argument("equation coefficients must be positive");
    std::vector<std::pair<long long, long long>> out;
    for (long long n = eq.n_min; eq.a * n <= eq.c; ++n) {
        if (eq.n_max && n > *eq.n_max) break;
        long long rem = eq.c - eq.a * n;
        if (rem % eq.b == 0) out.emplace_back(n, rem / eq.b);
    }
    return out;
}

// One candidate eigenvalue assignment: exponents eta_i at the fixed points and
// xi_j on the space of differentials, each running over 1..l-1.
struct LefschetzSolution {
    std::vector<unsigned> fixed_exponents;
    std::vector<unsigned> eigen_exponents;

    friend bool operator==(const LefschetzSolution& a, const LefschetzSolution& b) = default;
    friend bool operator<(const LefschetzSolution& a, const LefschetzSolution& b) {
        if (a.fixed_exponents != b.fixed_exponents) return a.fixed_exponents < b.fixed_exponents;
        return a.eigen_exponents < b.eigen_exponents;
    }
};

namespace detail {

inline void search_rec(unsigned l, unsigned n_fixed, unsigned n_eigen,
                       const std::vector<Cyclotomic>& weight, const std::vector<Cyclotomic>& power,
                       const Cyclotomic& target, std::vector<unsigned>& digits, const Cyclotomic& acc,
                       std::vector<LefschetzSolution>& out) {
    const unsigned total = n_fixed + n_eigen;
    const unsigned pos = static_cast<unsigned>(digits.size());
    if (pos == total) {
        if (acc == target) {
            LefschetzSolution s;
            s.fixed_exponents.assign(digits.begin(), digits.begin() + n_fixed);
            s.eigen_exponents.assign(digits.begin() + n_fixed, digits.end());
            out.push_back(std::move(s));
        }
        return;
    }
    const auto& table = pos < n_fixed ? weight : power;
    for (unsigned e = 1; e < l; ++e) {
        digits.push_back(e);
        search_rec(l, n_fixed, n_eigen, weight, power, target, digits, acc + table[e], out);
        digits.pop_back();
    }
}

}  // namespace detail

// Exhaustive certificate search: every (eta, xi) in ((Z/l)^x)^{n_fixed+n_eigen}
// with sum_i 1/(1-zeta^{eta_i}) + sum_j zeta^{xi_j} equal to the rational
// target, in lexicographic order. With dedup_up_to_permutation the lists are
// sorted componentwise and duplicates removed, since reordering fixed points
// or eigenvalues yields the same geometric datum.
inline std::vector<LefschetzSolution> search_lefschetz_solutions(
    unsigned l, unsigned n_fixed, unsigned n_eigen, const Rational& target,
    bool dedup_up_to_permutation = false) {
    std::vector<Cyclotomic> weight(l, Cyclotomic(l)), power(l, Cyclotomic(l));
    for (unsigned e = 1; e < l; ++e) {
        weight[e] = cyc_inv_one_minus_zeta(l, e);
        power[e] = Cyclotomic::zeta_pow(l, e);
    }
    std::vector<LefschetzSolution> out;
    std::vector<unsigned> digits;
    digits.reserve(n_fixed + n_eigen);
    detail::search_rec(l, n_fixed, n_eigen, weight, power, Cyclotomic::from_rational(l, target),
                       digits, Cyclotomic(l), out);
    if (dedup_up_to_permutation) {
        for (auto& s : out) {
            std::sort(s.fixed_exponents.begin(), s.fixed_exponents.end());
            std::sort(s.eigen_exponents.begin(), s.eigen_exponents.end());
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return out;
}

enum class CurveSing { smooth, node, two_nodes, tacnode };

// One admissible type of irreducible invariant curve: degree k (the class is
// k times the ample generator), n fixed points on the normalization, total
// delta-invariant, trace parameter x from the counting equation, singularity
// content of the image curve.
struct InvariantCurveType {
    std::string label;
    long long k;
    long long n;
    long long delta;
    long long x;
    CurveSing sing;
};

// Full case analysis for irreducible curves invariant under the order-l
// automorphism group of a surface with n_embedded_max candidate fixed sites.
//
// For each degree k in {1, 2} the delta-invariant is capped by the genus gap
// (k^2 + k - 2)/2 between the embedded arithmetic genus and the genus bound
// from the quotient map. Each (delta, n, x) solving the counting equation
// must then pass:
//   * delta = 0: the curve is smooth and embedded, so its fixed points sit
//     among the surface's fixed sites, n <= n_embedded_max;
//   * delta > 0, l = 3: singular points of an invariant curve are fixed, and
//     lifting the action to the normalization turns a node into one site with
//     two branch preimages (n >= 2 with 1 + (n-2) sites used) and a tacnode
//     likewise; two separate nodes need n >= 4 and occupy 2 + (n-4) sites;
//   * every survivor: the eigenvalue search at the normalization, n fixed
//     exponents and g - x eigen exponents summing to 1 - x, must be solvable.
// Degree-1 survivors are labeled N; degree-2 survivors I1, I2, ... in order.
inline std::vector<InvariantCurveType> classify_invariant_curve_types(unsigned l,
                                                                      long long n_embedded_max = 3) {
    std::vector<InvariantCurveType> out;
    int deg2_index = 0;
    for (long long k = 1; k <= 2; ++k) {
        long long delta_max = (k * k + k - 2) / 2;
        for (long long delta = 0; delta <= delta_max; ++delta) {
            long long g = 1 + k * (k + 3) / 2 - delta;
            for (auto [n, x] : solve_diophantine(case_equation(k, l, delta))) {
                std::vector<CurveSing> options;
                if (delta == 0) {
                    if (n <= n_embedded_max) options.push_back(CurveSing::smooth);
                } else if (l == 3) {
                    if (delta == 1 && n >= 2 && 1 + (n - 2) <= n_embedded_max)
                        options.push_back(CurveSing::node);
                    if (delta == 2) {
                        if (n >= 4 && 2 + (n - 4) <= n_embedded_max)
                            options.push_back(CurveSing::two_nodes);
                        if (n >= 2 && 1 + (n - 2) <= n_embedded_max)
                            options.push_back(CurveSing::tacnode);
                    }
                } else {
                    if (delta == 1) options.push_back(CurveSing::node);
                    if (delta == 2) {
                        options.push_back(CurveSing::two_nodes);
                        options.push_back(CurveSing::tacnode);
                    }
                }
                for (CurveSing sing : options) {
                    if (g - x < 0) continue;
                    auto witnesses = search_lefschetz_solutions(
                        l, static_cast<unsigned>(n), static_cast<unsigned>(g - x), Rational(1 - x));
                    if (witnesses.empty()) continue;
                    std::string label = k == 1 ? "N" : "I" + std::to_string(++deg2_index);
                    out.push_back({label, k, n, delta, x, sing});
                }
            }
        }
    }
    return out;
}

}  // namespace fppcert
