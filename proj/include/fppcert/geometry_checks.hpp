#pragma once

#include "rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace fppcert {

enum class CheckVerdict { CONTRADICTION, CONSISTENT };

// Euler characteristic of mL on a surface with chi(O) = 1, L^2 = 1, K = 3L:
// Riemann-Roch gives chi(mL) = 1 + m(m-3)/2.
inline long long riemann_roch_chi(long long m) { return 1 + m * (m - 3) / 2; }

// Upper bound for h^0(2L) from h^0(4L): the image of the multiplication map
// H^0(2L) x H^0(2L) -> H^0(4L) spans at least 2h - 1 dimensions when
// h = h^0(2L) (a linear system of dimension h - 1 added to itself), hence
// h <= (h^0(4L) + 1)/2.
inline long long h0_2L_bound(long long h0_4L) {
    if (h0_4L < 0) throw std::invalid_argument("negative section count");
    return (h0_4L + 1) / 2;
}

// Genus bounds for an irreducible degree-k curve on a surface with L^2 = 1
// and K = 3L. The arithmetic genus is p_a = 1 + k(k+3)/2; the delta-invariant
// of an irreducible member is capped at delta_max = (k^2 + k - 2)/2, so the
// geometric genus is at least genus_min = p_a - delta_max.
struct SchwarzBounds {
    long long delta_max;
    long long genus_min;
};

inline SchwarzBounds schwarz_bounds(long long k) {
    if (k < 1) throw std::invalid_argument("degree must be positive");
    long long pa = 1 + k * (k + 3) / 2;
    long long delta_max = (k * k + k - 2) / 2;
    return {delta_max, pa - delta_max};
}

enum class EulerVerdict { FIXED_POINT_FORCED, FREE_ACTION_POSSIBLE };

// A free action of a group of prime order p on a genus-g curve needs the
// Euler characteristic 2 - 2g to be p times another curve's 2 - 2h. When
// that fails every order-p automorphism has a fixed point.
inline EulerVerdict euler_quotient_check(long long g, long long p) {
    if (p < 2) throw std::invalid_argument("order must be a prime >= 2");
    long long chi = 2 - 2 * g;
    if (chi % p == 0 && ((chi / p) % 2 + 2) % 2 == 0) return EulerVerdict::FREE_ACTION_POSSIBLE;
    return EulerVerdict::FIXED_POINT_FORCED;
}

// Ramification budget of a degree-d map from a rational curve to the line:
// Riemann-Hurwitz gives total ramification exactly 2d - 2, and each point
// contributes its multiplicity minus one, at most d - 1. Contributions
// summing past the budget certify that no such map exists.
inline CheckVerdict riemann_hurwitz_check(long long d,
                                          const std::vector<long long>& contributions) {
    if (d < 2) throw std::invalid_argument("degree must be at least 2");
    long long total = 0;
    for (long long c : contributions) {
        if (c < 0 || c > d - 1) throw std::invalid_argument("ramification contribution out of range");
        total += c;
    }
    return total > 2 * d - 2 ? CheckVerdict::CONTRADICTION : CheckVerdict::CONSISTENT;
}

// Degree bookkeeping for a canonical class written through a fibration:
// K = pullback_mult * (fiber class) + D with D effective. Pairing with the
// polarization of self-degree KY2 yields at least (pullback_mult + D_mult) * KY2,
// which cannot exceed the actual canonical degree KY2.
struct CanonicalLedger {
    Rational rhs_min;
    CheckVerdict verdict;
};

inline CanonicalLedger canonical_degree_ledger(long long KY2, const Rational& pullback_mult,
                                               const Rational& D_mult) {
    Rational rhs = (pullback_mult + D_mult) * KY2;
    return {rhs, rhs > KY2 ? CheckVerdict::CONTRADICTION : CheckVerdict::CONSISTENT};
}

// On an elliptic curve a divisor of positive degree d has h^0 = d and is base
// point free once complete of degree >= 2. Exhibiting all h^0 sections while
// a base point persists is absurd.
inline CheckVerdict elliptic_pencil_check(long long deg, long long sections,
                                          long long base_points) {
    if (deg <= 0) throw std::invalid_argument("degree must be positive on an elliptic curve");
    long long h0 = deg;
    if (sections > h0) throw std::invalid_argument("more sections than the full space");
    if (base_points < 0) throw std::invalid_argument("negative base point count");
    return sections == h0 && base_points > 0 ? CheckVerdict::CONTRADICTION
                                             : CheckVerdict::CONSISTENT;
}

}  // namespace fppcert
