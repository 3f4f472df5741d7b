#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace fppcert {

// Delta-invariant of a unibranch singularity with value semigroup generated
// by gens: the number of gaps of the semigroup. Generators must be positive
// and coprime as a set, otherwise no curve branch realizes them.
inline long long semigroup_delta(const std::vector<long long>& gens) {
    if (gens.empty()) throw std::invalid_argument("empty generator set");
    long long g = 0;
    long long lo = gens.front(), hi = gens.front();
    for (long long v : gens) {
        if (v <= 0) throw std::invalid_argument("semigroup generators must be positive");
        g = std::gcd(g, v);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (g != 1) throw std::invalid_argument("semigroup generators must be coprime");
    // The conductor is below lo*hi (Schur bound), so reachability up to there
    // decides every gap.
    const long long limit = lo * hi + 1;
    std::vector<char> member(static_cast<std::size_t>(limit) + 1, 0);
    member[0] = 1;
    for (long long v = 1; v <= limit; ++v)
        for (long long gen : gens)
            if (v >= gen && member[static_cast<std::size_t>(v - gen)]) {
                member[static_cast<std::size_t>(v)] = 1;
                break;
            }
    long long gaps = 0;
    for (long long v = 1; v <= limit; ++v)
        if (!member[static_cast<std::size_t>(v)]) ++gaps;
    return gaps;
}

// Local contact type of two equivariant curve branches at a common fixed
// point, each branch either smooth, one branch of a node, or a tacnode.
// The value is the local intersection multiplicity of the two curves there.
enum class Contact { tr, tan_sm, tr_tac, tan_node, tan_tan, tan_tac };

inline long long local_intersection_mult(Contact c) {
    switch (c) {
        case Contact::tr: return 1;        // transversal smooth branches
        case Contact::tan_sm: return 2;    // smooth branches, mutually tangent
        case Contact::tr_tac: return 2;    // smooth branch crossing a tacnode
        case Contact::tan_node: return 3;  // smooth branch tangent to a node branch
        case Contact::tan_tan: return 4;   // both tangent to the same axis, contact 2 each
        case Contact::tan_tac: return 4;   // smooth branch tangent to a tacnode
    }
    throw std::logic_error("unreachable");
}

// Delta of a multibranch singularity: sum of the branch deltas plus the
// pairwise intersection multiplicities, which are >= 1 for distinct branches
// through one point. pairwise_mults lists the r(r-1)/2 values in any order.
inline long long delta_additivity(const std::vector<long long>& branch_deltas,
                                  const std::vector<long long>& pairwise_mults) {
    const std::size_t r = branch_deltas.size();
    if (pairwise_mults.size() != r * (r - 1) / 2)
        throw std::invalid_argument("need one multiplicity per branch pair");
    long long total = 0;
    for (long long d : branch_deltas) {
        if (d < 0) throw std::invalid_argument("branch delta cannot be negative");
        total += d;
    }
    for (long long m : pairwise_mults) {
        if (m < 1) throw std::invalid_argument("distinct branches meet with multiplicity >= 1");
        total += m;
    }
    return total;
}

struct EquivariantSingularity {
    std::string name;
    long long delta;
    int branches;
    int lifted_fixed_points;  // fixed points of the lifted action on the normalization
};

// Singularity types available to an invariant curve at a fixed point of an
// order-3 action within a given delta budget.
//
// Unibranch types are out: equivariance forces the branch's value semigroup
// into a proper subsemigroup of the naturals whose gap count is at least 3
// in either local weight case (contained in <2,7> when the branch is tangent
// to an axis, delta >= 3; in <4,5,7> otherwise, delta >= 4), and shrinking a
// semigroup only adds gaps. Three or more branches are out since pairwise
// meetings alone give delta >= 3. What remains are two smooth branches with
// contact 1 (node) or 2 (tacnode); both branch preimages of such a point are
// fixed by the lifted action, contributing 2 to the count upstairs.
inline std::vector<EquivariantSingularity> classify_equivariant_singularity(
    long long delta_max = 2) {
    if (delta_max < 0) throw std::invalid_argument("negative delta budget");
    if (delta_max == 0) return {{"smooth", 0, 1, 1}};
    if (delta_max > 2)
        throw std::invalid_argument("singularity classification covers delta budgets up to 2");
    std::vector<EquivariantSingularity> out{{"node", 1, 2, 2}};
    if (delta_max == 2) out.push_back({"tacnode", 2, 2, 2});
    return out;
}

}  // namespace fppcert
