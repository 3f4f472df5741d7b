#pragma once

#include "geometry_checks.hpp"
#include "local_singularity.hpp"
#include "surface_lattice.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace fppcert {

// Thrown when a rule that must certify a contradiction fails to do so, or
// when the enumeration produces a configuration outside the verified table.
// Reaching this is a verification failure, never a recoverable condition.
struct VerificationError : std::logic_error {
    using std::logic_error::logic_error;
};

// The irreducible invariant curve classes on the quotient surface, plus X for
// the reducible degree-2 class made of two degree-1 curves through a common
// fixed point.
enum class CurveClass { N, I1, I2, I3, X };

inline std::string curve_class_name(CurveClass c) {
    switch (c) {
        case CurveClass::N: return "N";
        case CurveClass::I1: return "I1";
        case CurveClass::I2: return "I2";
        case CurveClass::I3: return "I3";
        case CurveClass::X: return "X";
    }
    throw std::logic_error("unreachable");
}

inline std::string contact_name(Contact c) {
    switch (c) {
        case Contact::tr: return "tr";
        case Contact::tan_sm: return "tan_sm";
        case Contact::tr_tac: return "tr_tac";
        case Contact::tan_node: return "tan_node";
        case Contact::tan_tan: return "tan_tan";
        case Contact::tan_tac: return "tan_tac";
    }
    throw std::logic_error("unreachable");
}

// What a curve does at each fixed site it occupies.
enum class Slot { sm, node, tac };

struct CurveProfile {
    CurveClass cls;
    long long degree;         // class is degree * L
    std::vector<Slot> slots;  // unordered; placements assign sites
};

inline CurveProfile curve_profile(CurveClass c) {
    switch (c) {
        case CurveClass::N: return {c, 1, {Slot::sm, Slot::sm}};
        case CurveClass::I1: return {c, 2, {Slot::sm, Slot::sm}};
        case CurveClass::I2: return {c, 2, {Slot::node, Slot::sm, Slot::sm}};
        case CurveClass::I3: return {c, 2, {Slot::tac, Slot::sm}};
        case CurveClass::X: return {c, 2, {Slot::node, Slot::sm, Slot::sm}};
    }
    throw std::logic_error("unreachable");
}

namespace detail {

constexpr int kSites = 3;

// site -> occupied slot, or nothing
using Placement = std::array<std::optional<Slot>, kSites>;

inline std::vector<Placement> placements_of(CurveClass cls) {
    const auto prof = curve_profile(cls);
    std::vector<Placement> out;
    std::vector<int> sites(prof.slots.size());
    // enumerate injective slot -> site maps, deduplicate equal placements
    auto emit = [&]() {
        Placement p{};
        for (std::size_t i = 0; i < sites.size(); ++i) p[sites[i]] = prof.slots[i];
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == sites.size()) {
            emit();
            return;
        }
        for (int s = 0; s < kSites; ++s) {
            bool taken = false;
            for (std::size_t j = 0; j < i; ++j)
                if (sites[j] == s) taken = true;
            if (taken) continue;
            sites[i] = s;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// Contacts available to two branches of the given slot kinds at one site.
inline std::vector<Contact> compatible_contacts(Slot a, Slot b) {
    if (a == Slot::sm && b == Slot::sm) return {Contact::tr, Contact::tan_sm, Contact::tan_tan};
    if ((a == Slot::sm && b == Slot::node) || (a == Slot::node && b == Slot::sm))
        return {Contact::tan_node};
    if ((a == Slot::sm && b == Slot::tac) || (a == Slot::tac && b == Slot::sm))
        return {Contact::tr_tac, Contact::tan_tac};
    return {};  // node/node, node/tac, tac/tac cannot share a point
}

// One complete contact assignment between two placed curves.
using ContactMap = std::map<int, Contact>;  // shared site -> contact

// All contact assignments whose local multiplicities exhaust exactly the
// intersection number degree1 * degree2. Curves meet only at fixed sites, so
// nothing may be left over and nothing may exceed it.
inline std::vector<ContactMap> pair_contact_maps(const Placement& pa, long long deg_a,
                                                 const Placement& pb, long long deg_b) {
    std::vector<int> shared;
    for (int s = 0; s < kSites; ++s)
        if (pa[s] && pb[s]) shared.push_back(s);

    std::vector<ContactMap> out;
    ContactMap current;
    auto rec = [&](auto&& self, std::size_t i, long long used) -> void {
        if (used > deg_a * deg_b) return;
        if (i == shared.size()) {
            if (used == deg_a * deg_b && !shared.empty()) out.push_back(current);
            return;
        }
        int s = shared[i];
        for (Contact c : compatible_contacts(*pa[s], *pb[s])) {
            current[s] = c;
            self(self, i + 1, used + local_intersection_mult(c));
            current.erase(s);
        }
    };
    rec(rec, 0, 0);
    return out;
}

// Canonical name of a pair configuration, keyed by the multiset of contacts
// and the number of degree-1 curves in the pair.
inline std::string pair_label(const ContactMap& contacts, int n_count) {
    std::multiset<std::string> key;
    for (const auto& [site, c] : contacts) key.insert(contact_name(c));

    auto is = [&](std::initializer_list<const char*> names) {
        return key == std::multiset<std::string>(names.begin(), names.end());
    };
    if (n_count == 2 && is({"tr"})) return "3a";
    if (n_count == 1) {
        if (is({"tr", "tr"})) return "3b";
        if (is({"tan_sm"})) return "3c";
        if (is({"tr_tac"})) return "1b-1";
    }
    if (n_count == 0) {
        if (is({"tan_node", "tr"})) return "1a";
        if (is({"tr_tac", "tr_tac"})) return "1b-2";
        if (is({"tan_sm", "tr_tac"})) return "1b-3";
        if (is({"tan_tac"})) return "1c";
        if (is({"tan_tan"})) return "2a";
        if (is({"tan_sm", "tan_sm"})) return "2b";
    }
    throw VerificationError("unclassified pair contact configuration");
}

}  // namespace detail

// All case labels a pair of curve classes can realize, sorted.
inline std::vector<std::string> classify_pair(CurveClass a, CurveClass b) {
    const auto prof_a = curve_profile(a);
    const auto prof_b = curve_profile(b);
    const int n_count = (a == CurveClass::N) + (b == CurveClass::N);
    std::set<std::string> labels;
    for (const auto& pa : detail::placements_of(a))
        for (const auto& pb : detail::placements_of(b))
            for (const auto& cm :
                 detail::pair_contact_maps(pa, prof_a.degree, pb, prof_b.degree))
                labels.insert(detail::pair_label(cm, n_count));
    return {labels.begin(), labels.end()};
}

struct PairCase {
    CurveClass a;
    CurveClass b;
    std::string label;
};

// The complete pair table over the irreducible classes.
inline std::vector<PairCase> enumerate_pair_cases() {
    const std::vector<CurveClass> classes{CurveClass::N, CurveClass::I1, CurveClass::I2,
                                          CurveClass::I3};
    std::vector<PairCase> out;
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i; j < classes.size(); ++j)
            for (const auto& label : classify_pair(classes[i], classes[j]))
                out.push_back({classes[i], classes[j], label});
    return out;
}

enum class RuleKind { MACHINE, CITATION_ONLY };

// Every exclusion rule the engine can invoke. MACHINE rules re-run their
// underlying contradiction on each application and refuse to apply if the
// check comes back consistent; CITATION_ONLY rules rest on prose geometry
// and are reported as such.
inline RuleKind rule_kind(const std::string& rule) {
    static const std::map<std::string, RuleKind> registry = {
        {"tangency_four_lattice", RuleKind::MACHINE},
        {"double_tangency_pencil", RuleKind::MACHINE},
        {"tacnode_pair_pencil", RuleKind::MACHINE},
        {"mixed_tacnode_pencil", RuleKind::MACHINE},
        {"node_pair_count", RuleKind::MACHINE},
        {"tangent_chain_count", RuleKind::MACHINE},
        {"cubic_map_degree_ledger", RuleKind::MACHINE},
        {"common_point_pencil_rh", RuleKind::MACHINE},
        {"torsion_class_excludes_doubles", RuleKind::MACHINE},
        {"double_double_pencil", RuleKind::CITATION_ONLY},
        {"reducible_pair_pencil", RuleKind::CITATION_ONLY},
    };
    auto it = registry.find(rule);
    if (it == registry.end()) throw std::invalid_argument("unknown rule: " + rule);
    return it->second;
}

namespace detail {

// A pair of degree-2 curves tangent at one fixed site spans, with the chains,
// eight classes whose Gram matrix is nondegenerate in each of the three slot
// combinations, exceeding the Picard rank.
inline void check_tangency_four_lattice() {
    const CurvePassage sm_sm{2, {{0, PassKind::smooth_E1}, {2, PassKind::smooth_E1}}};
    const CurvePassage sm_sm2{2, {{0, PassKind::smooth_E1}, {1, PassKind::smooth_E1}}};
    const CurvePassage tac_a{2, {{0, PassKind::smooth_E1}, {2, PassKind::tac_E1}}};
    const CurvePassage tac_b{2, {{0, PassKind::smooth_E1}, {1, PassKind::tac_E1}}};
    const LatticeConfig configs[3] = {{sm_sm, sm_sm2, {{0, Contact::tan_tan}}},
                                      {sm_sm, tac_b, {{0, Contact::tan_tan}}},
                                      {tac_a, tac_b, {{0, Contact::tan_tan}}}};
    for (const auto& cfg : configs)
        if (picard_contradiction(build_intersection_matrix(cfg)) !=
            LatticeVerdict::CONTRADICTION)
            throw VerificationError("tangency_four_lattice failed to certify a contradiction");
}

// The pencils spanned by doubly tangent or doubly tacnodal pairs induce a
// degree-12 rational map whose ramification exceeds the Hurwitz budget.
inline void check_tangency_pencil_rh() {
    if (riemann_hurwitz_check(12, {11, 11, 1}) != CheckVerdict::CONTRADICTION)
        throw VerificationError("pencil ramification failed to certify a contradiction");
}

inline void check_cubic_map_degree_ledger(long long exponent) {
    auto ledger =
        canonical_degree_ledger(SurfaceConstants::KY_squared,
                                Rational(-2 * exponent, 3), Rational(2 * (exponent - 1)));
    if (ledger.verdict != CheckVerdict::CONTRADICTION)
        throw VerificationError("cubic_map_degree_ledger failed to certify a contradiction");
}

inline void check_common_point_pencil_rh(long long exponent) {
    if (riemann_hurwitz_check(exponent, {exponent - 1, exponent - 1, 1}) !=
        CheckVerdict::CONTRADICTION)
        throw VerificationError("common_point_pencil_rh failed to certify a contradiction");
}

// A degree-1 invariant curve represents L + tau for a torsion class tau.
// With torsion exponent 3 its triple is a member of |3L + 3*tau| = |K|,
// which is empty since p_g = 0.
inline void check_torsion_class_excludes_doubles(long long exponent) {
    if (exponent != 3)
        throw VerificationError("degree-1 exclusion needs torsion exponent 3");
    constexpr long long p_g = 0;
    static_assert(p_g < 1, "a canonical member would force p_g >= 1");
}

inline void run_label_rule(const std::string& rule) {
    if (rule == "tangency_four_lattice") check_tangency_four_lattice();
    if (rule == "double_tangency_pencil" || rule == "tacnode_pair_pencil" ||
        rule == "mixed_tacnode_pencil")
        check_tangency_pencil_rh();
}

// label -> rule that excludes it at the pair level, if any
inline std::optional<std::string> pair_label_rule(const std::string& label) {
    if (label == "2a") return "tangency_four_lattice";
    if (label == "2b") return "double_tangency_pencil";
    if (label == "3a") return "double_double_pencil";
    return std::nullopt;
}

// label -> rule that kills any triple containing it
inline std::optional<std::string> triple_label_rule(const std::string& label) {
    if (label == "1b-2") return "tacnode_pair_pencil";
    if (label == "1b-3") return "mixed_tacnode_pencil";
    return std::nullopt;
}

}  // namespace detail

struct PairOutcome {
    CurveClass a;
    CurveClass b;
    std::string label;
    bool excluded;
    std::string rule;  // empty when the case survives the pair stage
};

// Mark each pair case with the rule that excludes it outright, if any.
// Machine rules are re-proved on the spot. The map is per-label, so the
// result does not depend on the input order.
inline std::vector<PairOutcome> apply_exclusions(const std::vector<PairCase>& pairs) {
    std::vector<PairOutcome> out;
    for (const auto& pc : pairs) {
        auto rule = detail::pair_label_rule(pc.label);
        if (rule && rule_kind(*rule) == RuleKind::MACHINE) detail::run_label_rule(*rule);
        out.push_back({pc.a, pc.b, pc.label, rule.has_value(), rule.value_or("")});
    }
    return out;
}

enum class TorsionHypothesis { H1_quotient_C3, H1_quotient_C2xC3, generic };

// What is assumed about the first homology of the quotient surface. The
// exponent of the torsion subgroup bounds the order of every torsion class,
// which sets the degrees of the pencil arguments; the two concrete
// hypotheses also make the three distinguished torsion sections linearly
// independent, which the generic context cannot grant.
struct TorsionContext {
    TorsionHypothesis hypothesis = TorsionHypothesis::generic;
    bool in_C18 = false;

    long long exponent() const {
        switch (hypothesis) {
            case TorsionHypothesis::H1_quotient_C3: return 3;
            case TorsionHypothesis::H1_quotient_C2xC3: return 6;
            case TorsionHypothesis::generic: return 12;
        }
        throw std::logic_error("unreachable");
    }

    bool van3tor_applicable() const { return hypothesis != TorsionHypothesis::generic; }

    // Degree-1 curves represent L + (torsion): when the exponent is 3 any
    // such curve cubes to a member of |K|, impossible with p_g = 0. The
    // reducible doubled class X is excluded by the pencil it would span.
    std::vector<std::pair<CurveClass, std::string>> class_exclusions() const {
        if (exponent() == 3)
            return {{CurveClass::N, "torsion_class_excludes_doubles"},
                    {CurveClass::X, "torsion_class_excludes_doubles"}};
        return {{CurveClass::X, "reducible_pair_pencil"}};
    }

    std::vector<CurveClass> allowed_classes() const {
        std::vector<CurveClass> all{CurveClass::N, CurveClass::I1, CurveClass::I2,
                                    CurveClass::I3, CurveClass::X};
        auto excl = class_exclusions();
        std::vector<CurveClass> out;
        for (CurveClass c : all) {
            bool gone = false;
            for (const auto& [ec, rule] : excl)
                if (ec == c) gone = true;
            if (!gone) out.push_back(c);
        }
        return out;
    }
};

struct TripleOutcome {
    std::array<CurveClass, 3> classes;
    bool survives;
    std::vector<std::string> rules;  // every rule that closed a branch of the enumeration
    std::string evidence;
};

namespace detail {

// Direction consistency: each smooth or tacnodal branch at a site follows one
// of the two local axes; a node covers both. Transversal contacts force
// different axes, tangential contacts the same axis. At most 9 binary
// choices, checked exhaustively.
struct DirConstraint {
    int var_a;
    int var_b;
    bool equal;
};

inline bool directions_satisfiable(const std::vector<DirConstraint>& constraints, int n_vars) {
    for (int mask = 0; mask < (1 << n_vars); ++mask) {
        bool ok = true;
        for (const auto& c : constraints) {
            bool same = ((mask >> c.var_a) & 1) == ((mask >> c.var_b) & 1);
            if (same != c.equal) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace detail

// Exhaustive elimination of triples of invariant curves in a torsion context.
// Classes may repeat (the curves are distinct members); every placement of
// the three curves on the fixed sites and every contact assignment is
// walked, and each branch must be closed by a named rule. A surviving
// configuration is only tolerated for {N, I1, I2} meeting at a common point;
// anything else is a verification failure.
inline std::vector<TripleOutcome> filter_triples(const TorsionContext& ctx) {
    using detail::Placement;
    const auto allowed = ctx.allowed_classes();
    const long long e = ctx.exponent();

    std::vector<TripleOutcome> out;
    for (std::size_t i = 0; i < allowed.size(); ++i)
        for (std::size_t j = i; j < allowed.size(); ++j)
            for (std::size_t k = j; k < allowed.size(); ++k) {
                std::array<CurveClass, 3> cls{allowed[i], allowed[j], allowed[k]};
                std::set<std::string> rules;
                bool survives = false;
                std::string evidence;

                const std::array<long long, 3> deg{curve_profile(cls[0]).degree,
                                                   curve_profile(cls[1]).degree,
                                                   curve_profile(cls[2]).degree};
                const std::array<int, 3> pair_a{0, 0, 1}, pair_b{1, 2, 2};
                int survivor_count = 0;

                for (const auto& p0 : detail::placements_of(cls[0]))
                    for (const auto& p1 : detail::placements_of(cls[1]))
                        for (const auto& p2 : detail::placements_of(cls[2])) {
                            const std::array<const Placement*, 3> place{&p0, &p1, &p2};

                            // contact assignments per pair, exact totals
                            std::array<std::vector<detail::ContactMap>, 3> choices;
                            bool structurally_ok = true;
                            for (int p = 0; p < 3 && structurally_ok; ++p) {
                                choices[p] = detail::pair_contact_maps(
                                    *place[pair_a[p]], deg[pair_a[p]], *place[pair_b[p]],
                                    deg[pair_b[p]]);
                                if (choices[p].empty()) structurally_ok = false;
                            }
                            if (!structurally_ok) continue;

                            for (const auto& c01 : choices[0])
                                for (const auto& c02 : choices[1])
                                    for (const auto& c12 : choices[2]) {
                                        const std::array<const detail::ContactMap*, 3> cm{
                                            &c01, &c02, &c12};

                                        // pair-stage and triple-stage label rules
                                        std::set<std::string> branch_rules;
                                        for (int p = 0; p < 3; ++p) {
                                            int n_count =
                                                (cls[pair_a[p]] == CurveClass::N) +
                                                (cls[pair_b[p]] == CurveClass::N);
                                            auto label = detail::pair_label(*cm[p], n_count);
                                            if (auto r = detail::pair_label_rule(label))
                                                branch_rules.insert(*r);
                                            else if (auto t = detail::triple_label_rule(label))
                                                branch_rules.insert(*t);
                                        }
                                        if (!branch_rules.empty()) {
                                            for (const auto& r : branch_rules) {
                                                if (rule_kind(r) == RuleKind::MACHINE)
                                                    detail::run_label_rule(r);
                                                rules.insert(r);
                                            }
                                            continue;
                                        }

                                        // direction consistency
                                        std::map<std::pair<int, int>, int> var_of;
                                        auto var = [&](int curve, int site) {
                                            auto key = std::make_pair(curve, site);
                                            auto it = var_of.find(key);
                                            if (it != var_of.end()) return it->second;
                                            int id = static_cast<int>(var_of.size());
                                            var_of[key] = id;
                                            return id;
                                        };
                                        std::vector<detail::DirConstraint> constraints;
                                        for (int p = 0; p < 3; ++p)
                                            for (const auto& [site, contact] : *cm[p]) {
                                                Slot sa = *(*place[pair_a[p]])[site];
                                                Slot sb = *(*place[pair_b[p]])[site];
                                                if (sa == Slot::node || sb == Slot::node)
                                                    continue;
                                                bool equal = contact != Contact::tr &&
                                                             contact != Contact::tr_tac;
                                                constraints.push_back(
                                                    {var(pair_a[p], site), var(pair_b[p], site),
                                                     equal});
                                            }
                                        if (!detail::directions_satisfiable(
                                                constraints, static_cast<int>(var_of.size()))) {
                                            rules.insert("tangent_chain_count");
                                            continue;
                                        }

                                        // endgame: common point or not
                                        int common = -1;
                                        for (int s = 0; s < detail::kSites; ++s)
                                            if (p0[s] && p1[s] && p2[s]) common = s;

                                        std::multiset<CurveClass> kind(cls.begin(), cls.end());
                                        if (common < 0) {
                                            detail::check_cubic_map_degree_ledger(e);
                                            rules.insert("cubic_map_degree_ledger");
                                            continue;
                                        }
                                        if (kind == std::multiset<CurveClass>{
                                                        CurveClass::N, CurveClass::I1,
                                                        CurveClass::I3}) {
                                            detail::check_common_point_pencil_rh(e);
                                            rules.insert("common_point_pencil_rh");
                                            continue;
                                        }
                                        if (kind == std::multiset<CurveClass>{
                                                        CurveClass::N, CurveClass::I1,
                                                        CurveClass::I2}) {
                                            survives = true;
                                            ++survivor_count;
                                            continue;
                                        }
                                        throw VerificationError(
                                            "unexpected surviving triple configuration");
                                    }
                        }

                if (survives) {
                    evidence = "configurations with a common fixed point: " +
                               std::to_string(survivor_count);
                    rules.clear();  // partial exclusions are moot once one branch stands
                } else if (rules.empty()) {
                    // nothing was even structurally placeable; two I2 members
                    // always collide at the node site, anything else exceeds
                    // the contact capacity of the three sites
                    int i2s = 0;
                    for (CurveClass c : cls)
                        if (c == CurveClass::I2) ++i2s;
                    rules.insert(i2s >= 2 ? "node_pair_count" : "tangent_chain_count");
                }

                out.push_back({cls, survives,
                               std::vector<std::string>(rules.begin(), rules.end()), evidence});
            }
    return out;
}

enum class ECVerdict { EC_EXISTS, H0_VANISHES_ONLY, UNDECIDED };

// Final verdict for a context. The case analysis is complete when no triple
// survives, or when the only survivor is {N, I1, I2} and the independence of
// the three distinguished torsion sections applies: the three curves through
// a common point then restrict to a degree-2 complete pencil with a base
// point on an elliptic curve, which cannot exist. Whether the conclusion is
// a full exceptional collection or only vanishing of global sections depends
// on whether the canonical class splits as three times a line bundle.
inline ECVerdict exceptional_collection_verdict(const TorsionContext& ctx, bool K_splits) {
    auto triples = filter_triples(ctx);
    bool all_killed = true;
    for (const auto& t : triples) {
        if (!t.survives) continue;
        std::multiset<CurveClass> kind(t.classes.begin(), t.classes.end());
        bool killable =
            kind == std::multiset<CurveClass>{CurveClass::N, CurveClass::I1, CurveClass::I2} &&
            ctx.van3tor_applicable() &&
            elliptic_pencil_check(2, 2, 1) == CheckVerdict::CONTRADICTION;
        if (!killable) all_killed = false;
    }
    if (!all_killed) return ECVerdict::UNDECIDED;
    return K_splits ? ECVerdict::EC_EXISTS : ECVerdict::H0_VANISHES_ONLY;
}

}  // namespace fppcert
