#pragma once

#include "local_singularity.hpp"
#include "rational.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace fppcert {

// Numerics of the singular quotient Y of a fake projective plane by an
// order-3 automorphism group and of its minimal resolution Z. Y carries
// exactly three A2 points, each resolving to a chain of two (-2)-curves, so
// the Picard rank of Z is 1 + 3*2 = 7 and Noether's formula reads
// chi(O_Z) = (K^2 + e)/12 = (3 + 9)/12 = 1.
struct SurfaceConstants {
    static constexpr int L_self = 1;            // L^2 on the fake plane
    static constexpr int canonical_multiple = 3;  // K = 3L upstairs
    static constexpr int singular_points = 3;   // A2 points on Y
    static constexpr int picard_rank_Z = 7;
    static constexpr int KZ_squared = 3;
    static constexpr int KY_squared = 3;
    static constexpr int euler_Z = 9;
};

// How a curve on Z passes through the exceptional A2 chain E1 + E2 over one
// of the three singular points: transversally through one chain component
// (smooth branch), through the chain node with a branch on each component
// (node below), or with contact order two on one component (tacnode below).
enum class PassKind { smooth_E1, smooth_E2, node, tac_E1, tac_E2 };

struct SitePassage {
    int site;  // 0, 1, 2 for the three singular points a, b, c
    PassKind kind;
};

// The strict transform on Z of a degree-k invariant curve, together with how
// it crosses the exceptional locus.
struct CurvePassage {
    long long k;
    std::vector<SitePassage> passages;
};

namespace detail {

// (incidence with E1, incidence with E2, self-intersection correction)
struct LocalPull {
    long long e1;
    long long e2;
    Rational correction;  // contribution to C_Z . E_Z
};

inline LocalPull local_pull(PassKind kind) {
    switch (kind) {
        case PassKind::smooth_E1: return {1, 0, Rational(2, 3)};
        case PassKind::smooth_E2: return {0, 1, Rational(2, 3)};
        case PassKind::node:      return {1, 1, Rational(2)};
        case PassKind::tac_E1:    return {2, 0, Rational(8, 3)};
        case PassKind::tac_E2:    return {0, 2, Rational(8, 3)};
    }
    throw std::logic_error("unreachable");
}

}  // namespace detail

// Intersection numbers of the strict transform: C_Z . E_Z accumulates the
// local corrections, C_Z^2 = k^2/3 - C_Z . E_Z, the arithmetic genus follows
// from adjunction with K_Z . C_Z = k.
struct CurveNumbers {
    Rational CE;
    Rational C_self;
    Rational p_a;
    Rational KC;
};

inline CurveNumbers curve_numbers(const CurvePassage& c) {
    Rational ce(0);
    for (const auto& p : c.passages) ce += detail::local_pull(p.kind).correction;
    Rational c2 = Rational(c.k * c.k, 3) - ce;
    Rational pa = Rational(1) + Rational(c.k * (c.k + 3), 6) - ce / 2;
    return {ce, c2, pa, Rational(c.k)};
}

struct SharedSite {
    int site;
    Contact contact;
};

// Two invariant curves on Z with their declared common fixed sites.
struct LatticeConfig {
    CurvePassage curve1;
    CurvePassage curve2;
    std::vector<SharedSite> shared;
};

using Matrix = std::vector<std::vector<Rational>>;

// Intersection matrix of [C1, C2, Ea1, Ea2, Eb1, Eb2, Ec1, Ec2] on Z. The
// product of the two strict transforms is the product upstairs, k1*k2, minus
// the local multiplicity at each shared site; a negative result means the
// declared configuration is geometrically impossible and throws.
inline Matrix build_intersection_matrix(const LatticeConfig& cfg) {
    const std::size_t dim = 2 + 2 * SurfaceConstants::singular_points;
    Matrix m(dim, std::vector<Rational>(dim, Rational(0)));

    const CurvePassage* curves[2] = {&cfg.curve1, &cfg.curve2};
    for (int ci = 0; ci < 2; ++ci)
        for (const auto& p : curves[ci]->passages)
            if (p.site < 0 || p.site >= SurfaceConstants::singular_points)
                throw std::invalid_argument("site index out of range");
    for (int ci = 0; ci < 2; ++ci) {
        auto nums = curve_numbers(*curves[ci]);
        if (!is_integer(nums.C_self))
            throw std::domain_error("self-intersection of a strict transform must be integral");
        m[ci][ci] = nums.C_self;
        for (const auto& p : curves[ci]->passages) {
            auto pull = detail::local_pull(p.kind);
            m[ci][2 + 2 * p.site] += pull.e1;
            m[ci][2 + 2 * p.site + 1] += pull.e2;
            m[2 + 2 * p.site][ci] = m[ci][2 + 2 * p.site];
            m[2 + 2 * p.site + 1][ci] = m[ci][2 + 2 * p.site + 1];
        }
    }

    Rational c12 = Rational(cfg.curve1.k * cfg.curve2.k);
    for (const auto& s : cfg.shared) {
        auto touches = [&](const CurvePassage& c) {
            for (const auto& p : c.passages)
                if (p.site == s.site) return true;
            return false;
        };
        if (!touches(cfg.curve1) || !touches(cfg.curve2))
            throw std::invalid_argument("shared site not visited by both curves");
        c12 -= local_intersection_mult(s.contact);
    }
    if (c12 < 0) throw std::domain_error("negative intersection of distinct irreducible curves");
    m[0][1] = m[1][0] = c12;

    for (int s = 0; s < SurfaceConstants::singular_points; ++s) {
        m[2 + 2 * s][2 + 2 * s] = Rational(-2);
        m[2 + 2 * s + 1][2 + 2 * s + 1] = Rational(-2);
        m[2 + 2 * s][2 + 2 * s + 1] = m[2 + 2 * s + 1][2 + 2 * s] = Rational(1);
    }
    return m;
}

// Exact determinant. Denominators are cleared first, then the fraction-free
// Bareiss elimination runs over the integers; every division it performs is
// exact, so no rounding can occur at any point.
inline Rational exact_determinant(const Matrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return Rational(1);
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");

    Integer den(1);
    for (const auto& row : m)
        for (const auto& v : row) den = boost::multiprecision::lcm(den, denominator(v));
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = numerator(m[i][j]) * (den / denominator(m[i][j]));

    int sign = 1;
    Integer prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot][k] == 0) ++pivot;
            if (pivot == n) return Rational(0);
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    Integer det_scaled = a[n - 1][n - 1] * sign;

    Rational scale(1);
    for (std::size_t i = 0; i < n; ++i) scale *= Rational(den);
    return Rational(det_scaled) / scale;
}

enum class LatticeVerdict { CONTRADICTION, INCONCLUSIVE };

// The classes listed in the matrix live in a Picard group of rank 7. If the
// matrix is larger and nondegenerate, the configuration cannot exist.
inline LatticeVerdict picard_contradiction(const Matrix& m) {
    if (m.size() > static_cast<std::size_t>(SurfaceConstants::picard_rank_Z) &&
        exact_determinant(m) != 0)
        return LatticeVerdict::CONTRADICTION;
    return LatticeVerdict::INCONCLUSIVE;
}

struct LabeledPassage {
    std::string label;
    CurvePassage passage;
};

// Site assignments of the five curve shapes the case analysis handles: the
// degree-1 curve and the smooth conic each pass through two fixed sites, the
// nodal conic puts its node at one site and crosses the other two, the
// tacnodal conic concentrates everything at two sites, and the two-line
// configuration X matches the nodal conic numerically.
inline std::vector<LabeledPassage> standard_strict_transforms() {
    using PK = PassKind;
    return {
        {"N", {1, {{0, PK::smooth_E1}, {1, PK::smooth_E1}}}},
        {"I1", {2, {{0, PK::smooth_E1}, {1, PK::smooth_E1}}}},
        {"I2", {2, {{0, PK::node}, {1, PK::smooth_E1}, {2, PK::smooth_E1}}}},
        {"I3", {2, {{0, PK::tac_E1}, {1, PK::smooth_E1}}}},
        {"X", {2, {{0, PK::node}, {1, PK::smooth_E1}, {2, PK::smooth_E1}}}},
    };
}

}  // namespace fppcert
