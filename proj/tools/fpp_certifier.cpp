// Command-line front end: every subcommand prints JSON (or, for verify-all
// and report, the human-readable report) and exits 0 on success, 1 when a
// verification fails, 2 on usage or input errors.

#include <fppcert/verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace fppcert;

int exit_code = 0;

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

Rational parse_rational(const std::string& s) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw CLI::ValidationError("rational", "not a rational number: " + s);
    }
}

PassKind pass_kind_from(const std::string& s) {
    if (s == "smooth_E1") return PassKind::smooth_E1;
    if (s == "smooth_E2") return PassKind::smooth_E2;
    if (s == "node") return PassKind::node;
    if (s == "tac_E1") return PassKind::tac_E1;
    if (s == "tac_E2") return PassKind::tac_E2;
    throw CLI::ValidationError("kind", "unknown passage kind: " + s);
}

Contact contact_from(const std::string& s) {
    for (Contact c : {Contact::tr, Contact::tan_sm, Contact::tr_tac, Contact::tan_node,
                      Contact::tan_tan, Contact::tan_tac})
        if (contact_name(c) == s) return c;
    throw CLI::ValidationError("contact", "unknown contact: " + s);
}

CurvePassage curve_passage_from(const json& j) {
    CurvePassage c;
    c.k = j.at("k").get<long long>();
    for (const auto& p : j.at("passages"))
        c.passages.push_back(
            {p.at("site").get<int>(), pass_kind_from(p.at("kind").get<std::string>())});
    return c;
}

LatticeConfig lattice_config_from(const json& j) {
    LatticeConfig cfg;
    cfg.curve1 = curve_passage_from(j.at("curve1"));
    cfg.curve2 = curve_passage_from(j.at("curve2"));
    if (j.contains("shared"))
        for (const auto& s : j.at("shared"))
            cfg.shared.push_back(
                {s.at("site").get<int>(), contact_from(s.at("contact").get<std::string>())});
    return cfg;
}

json solutions_json(const std::vector<LefschetzSolution>& sols) {
    auto arr = json::array();
    for (const auto& s : sols)
        arr.push_back({{"fixed", s.fixed_exponents}, {"eigen", s.eigen_exponents}});
    return arr;
}

json record_json(const FppRecord& r) {
    return {{"class_id", r.class_id},
            {"label", r.label},
            {"aut", r.aut},
            {"h1_M", r.h1_M.str()},
            {"h", r.h},
            {"h1_quotient", r.h1_quotient.str()},
            {"in_C18", r.in_C18},
            {"in_C2", r.in_C2},
            {"k_is_3L", r.k_is_3L},
            {"torsion_exponent", invariant_torsion_exponent(r)},
            {"applicability",
             std::string(applicability_name(theorem_applicability(r)))}};
}

TorsionContext context_from(const std::string& name, bool in_c18) {
    if (name == "C3") return {TorsionHypothesis::H1_quotient_C3, in_c18};
    if (name == "C2xC3") return {TorsionHypothesis::H1_quotient_C2xC3, in_c18};
    if (name == "generic") return {TorsionHypothesis::generic, in_c18};
    throw CLI::ValidationError("ctx", "unknown context (want C3, C2xC3, generic): " + name);
}

std::string ec_verdict_name(ECVerdict v) {
    switch (v) {
        case ECVerdict::EC_EXISTS: return "EC_EXISTS";
        case ECVerdict::H0_VANISHES_ONLY: return "H0_VANISHES_ONLY";
        case ECVerdict::UNDECIDED: return "UNDECIDED";
    }
    throw std::logic_error("unreachable");
}

// Run the named registry checks and print their certificates; any FAILURE
// flips the process exit code to 1.
void print_certificate_chain(const std::vector<std::string>& ids) {
    auto bundle = run_checks();
    auto arr = json::array();
    for (const auto& id : ids)
        for (const auto& c : bundle.certificates)
            if (c.check_id == id) {
                arr.push_back(c.to_json());
                if (c.verdict == Verdict::FAILURE) exit_code = 1;
            }
    emit(arr);
}

std::string resolve_module(const std::string& name) {
    static const std::map<std::string, std::string> aliases = {
        {"arith", "exact_arith"},         {"exact_arith", "exact_arith"},
        {"lefschetz", "lefschetz"},       {"lattice", "surface_lattice"},
        {"surface_lattice", "surface_lattice"},
        {"geometry", "geometry_checks"},  {"geometry_checks", "geometry_checks"},
        {"local", "local_singularity"},   {"local_singularity", "local_singularity"},
        {"cases", "case_engine"},         {"case_engine", "case_engine"},
        {"db", "fpp_db"},                 {"fpp_db", "fpp_db"},
    };
    auto it = aliases.find(name);
    if (it == aliases.end())
        throw CLI::ValidationError("--only", "unknown module: " + name);
    return it->second;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"re-derives the finite computations behind the exceptional-collection "
                 "result on fake projective planes with automorphisms"};
    app.require_subcommand(1);

    // ------------------------------------------------------------------ lefschetz
    auto* lef = app.add_subcommand("lefschetz", "fixed-point counts and trace equations");
    lef->require_subcommand(1);

    unsigned order = 3, n_fixed = 1, n_eigen = 1;
    long long genus = 0, degree_k = 1, delta_ll = 0;
    std::string delta_str = "0", target_str = "0";
    long long n_max = -1;
    bool dedup = false;

    auto* lc = lef->add_subcommand("count", "holomorphic Lefschetz fixed-point count");
    lc->add_option("--order,-l", order, "automorphism order")->required();
    lc->add_option("--genus,-g", genus, "curve genus")->required();
    lc->add_option("--delta,-d", delta_str, "trace-term total (rational)")->required();
    lc->callback([&] {
        auto r = fixed_point_count(order, genus, parse_rational(delta_str));
        emit({{"order", order},
              {"genus", genus},
              {"delta", delta_str},
              {"count", to_string(r.value)},
              {"feasible", r.feasible}});
    });

    auto* ls = lef->add_subcommand("solve", "search exponent tuples with a given trace");
    ls->add_option("--order,-l", order, "automorphism order")->required();
    ls->add_option("--fixed", n_fixed, "number of fixed-point terms")->required();
    ls->add_option("--eigen", n_eigen, "number of eigenvalue terms")->required();
    ls->add_option("--target", target_str, "required rational trace value")->required();
    ls->add_flag("--dedup", dedup, "collapse permutations of each exponent multiset");
    ls->callback([&] {
        auto sols = search_lefschetz_solutions(order, n_fixed, n_eigen,
                                               parse_rational(target_str), dedup);
        emit({{"order", order},
              {"fixed_terms", n_fixed},
              {"eigen_terms", n_eigen},
              {"target", target_str},
              {"count", sols.size()},
              {"solutions", solutions_json(sols)}});
    });

    auto* ld = lef->add_subcommand("diophantine",
                                   "fixed points vs isolated points of an invariant curve");
    ld->add_option("--degree,-k", degree_k, "curve degree")->required();
    ld->add_option("--order,-l", order, "automorphism order")->required();
    ld->add_option("--delta,-d", delta_ll, "delta invariant")->required();
    ld->add_option("--n-max", n_max, "cap on fixed points lying on the curve");
    ld->callback([&] {
        auto eq = case_equation(degree_k, order, delta_ll);
        if (n_max >= 0) eq.n_max = n_max;
        auto sols = solve_diophantine(eq);
        auto arr = json::array();
        for (auto [n, x] : sols) arr.push_back({{"n", n}, {"x", x}});
        emit({{"a", eq.a},
              {"b", eq.b},
              {"c", eq.c},
              {"n_min", eq.n_min},
              {"n_max", eq.n_max ? json(*eq.n_max) : json()},
              {"solutions", arr}});
    });

    // -------------------------------------------------------------------- lattice
    auto* lat = app.add_subcommand("lattice", "intersection lattices on the quotient");
    lat->require_subcommand(1);

    auto* lt = lat->add_subcommand(
        "table2", "strict-transform intersection numbers of the standard curve shapes");
    lt->callback([&] {
        auto arr = json::array();
        for (const auto& row : standard_strict_transforms()) {
            auto n = curve_numbers(row.passage);
            arr.push_back({{"class", row.label},
                           {"degree", row.passage.k},
                           {"C.E", to_string(n.CE)},
                           {"C.C", to_string(n.C_self)},
                           {"p_a", to_string(n.p_a)},
                           {"K.C", to_string(n.KC)}});
        }
        emit(arr);
    });

    std::string config_path;
    auto* ldet = lat->add_subcommand("det", "determinant of a configured pair lattice");
    ldet->add_option("--config", config_path, "LatticeConfig JSON file, or - for stdin")
        ->required();
    ldet->callback([&] {
        json j;
        if (config_path == "-") {
            std::cin >> j;
        } else {
            std::ifstream in(config_path);
            if (!in) throw CLI::ValidationError("--config", "cannot open " + config_path);
            in >> j;
        }
        auto cfg = lattice_config_from(j);
        auto m = build_intersection_matrix(cfg);
        Rational det = exact_determinant(m);
        auto verdict = picard_contradiction(m);
        auto rows = json::array();
        for (const auto& r : m) {
            auto row = json::array();
            for (const auto& v : r) row.push_back(to_string(v));
            rows.push_back(row);
        }
        emit({{"dimension", m.size()},
              {"determinant", to_string(det)},
              {"verdict",
               verdict == LatticeVerdict::CONTRADICTION ? "CONTRADICTION" : "INCONCLUSIVE"},
              {"matrix", rows}});
    });

    // --------------------------------------------------------------------- checks
    auto* chk = app.add_subcommand("checks", "numerical consistency checks");
    chk->require_subcommand(1);

    long long chi_m = std::numeric_limits<long long>::min();
    auto* crr = chk->add_subcommand("rr", "Euler characteristic of mL");
    crr->add_option("--m", chi_m, "multiple of L (omit for the certificate chain)");
    crr->callback([&] {
        if (chi_m != std::numeric_limits<long long>::min())
            emit({{"m", chi_m}, {"chi", riemann_roch_chi(chi_m)}});
        else
            print_certificate_chain({"chi_line_bundle_values", "invariant_section_bound"});
    });

    long long sk = 0;
    auto* csw = chk->add_subcommand("schwarz", "delta and genus bounds by degree");
    csw->add_option("--k", sk, "curve degree (omit for the certificate chain)");
    csw->callback([&] {
        if (sk > 0) {
            auto b = schwarz_bounds(sk);
            emit({{"k", sk}, {"delta_max", b.delta_max}, {"genus_min", b.genus_min}});
        } else {
            print_certificate_chain({"genus_delta_budget"});
        }
    });

    long long rh_degree = 0;
    std::vector<long long> rh_ram;
    auto* crh = chk->add_subcommand("rh", "Riemann-Hurwitz feasibility of a pencil map");
    crh->add_option("--degree,-d", rh_degree, "map degree (omit for the certificate chain)");
    crh->add_option("--ramification", rh_ram, "ramification contributions")->delimiter(',');
    crh->callback([&] {
        if (rh_degree > 0) {
            auto v = riemann_hurwitz_check(rh_degree, rh_ram);
            emit({{"degree", rh_degree},
                  {"ramification", rh_ram},
                  {"budget", 2 * rh_degree - 2},
                  {"verdict",
                   v == CheckVerdict::CONTRADICTION ? "CONTRADICTION" : "CONSISTENT"}});
        } else {
            print_certificate_chain(
                {"pencil_ramification_contradictions", "euler_quotient_forcing"});
        }
    });

    long long led_k2 = 0;
    std::string led_pullback = "0", led_divisor = "0";
    auto* cled = chk->add_subcommand("ledger", "canonical degree bookkeeping");
    cled->add_option("--k2", led_k2, "K^2 of the quotient (omit for the certificate chain)");
    cled->add_option("--pullback", led_pullback, "pullback multiple (rational)");
    cled->add_option("--divisor", led_divisor, "divisor multiple (rational)");
    cled->callback([&] {
        if (led_k2 > 0) {
            auto led = canonical_degree_ledger(led_k2, parse_rational(led_pullback),
                                               parse_rational(led_divisor));
            emit({{"K2", led_k2},
                  {"pullback", led_pullback},
                  {"divisor", led_divisor},
                  {"rhs", to_string(led.rhs_min)},
                  {"verdict", led.verdict == CheckVerdict::CONTRADICTION ? "CONTRADICTION"
                                                                         : "CONSISTENT"}});
        } else {
            print_certificate_chain(
                {"canonical_degree_ledgers", "elliptic_pencil_base_point"});
        }
    });

    // ---------------------------------------------------------------------- local
    auto* loc = app.add_subcommand("local", "curve singularity invariants");
    loc->require_subcommand(1);

    long long budget = 2;
    auto* lcl = loc->add_subcommand("classify",
                                    "equivariant singularities within a delta budget");
    lcl->add_option("--budget", budget, "delta budget (default 2)");
    lcl->callback([&] {
        auto arr = json::array();
        for (const auto& s : classify_equivariant_singularity(budget))
            arr.push_back({{"name", s.name},
                           {"delta", s.delta},
                           {"branches", s.branches},
                           {"lifted_fixed_points", s.lifted_fixed_points}});
        emit(arr);
    });

    std::vector<long long> gens;
    auto* ldl = loc->add_subcommand("delta", "delta invariant of a semigroup branch");
    ldl->add_option("--gens", gens, "semigroup generators, e.g. 2,7")
        ->required()
        ->delimiter(',');
    ldl->callback([&] {
        emit({{"generators", gens}, {"delta", semigroup_delta(gens)}});
    });

    // ---------------------------------------------------------------------- cases
    auto* cas = app.add_subcommand("cases", "invariant-curve configuration analysis");
    cas->require_subcommand(1);

    auto* cp = cas->add_subcommand("pairs", "pair intersection cases and exclusions");
    cp->callback([&] {
        auto arr = json::array();
        for (const auto& o : apply_exclusions(enumerate_pair_cases())) {
            json row = {{"a", curve_class_name(o.a)},
                        {"b", curve_class_name(o.b)},
                        {"case", o.label},
                        {"excluded", o.excluded}};
            if (o.excluded) row["rule"] = o.rule;
            arr.push_back(row);
        }
        emit(arr);
    });

    std::string ctx_name = "generic";
    bool in_c18 = false, k_split = true;
    auto* ct = cas->add_subcommand("triples", "three-curve configurations under a context");
    ct->add_option("--ctx", ctx_name, "torsion context: C3, C2xC3, generic")->required();
    ct->add_flag("--in-c18", in_c18, "surface lies in the C18 class");
    ct->callback([&] {
        auto ctx = context_from(ctx_name, in_c18);
        auto arr = json::array();
        int survivors = 0;
        for (const auto& t : filter_triples(ctx)) {
            json row = {{"classes",
                         {curve_class_name(t.classes[0]), curve_class_name(t.classes[1]),
                          curve_class_name(t.classes[2])}},
                        {"survives", t.survives},
                        {"rules", t.rules}};
            if (t.survives) {
                row["evidence"] = t.evidence;
                ++survivors;
            }
            arr.push_back(row);
        }
        emit({{"context", ctx_name},
              {"torsion_exponent", ctx.exponent()},
              {"torsion_vanishing_applicable", ctx.van3tor_applicable()},
              {"survivors", survivors},
              {"triples", arr}});
    });

    auto* cv = cas->add_subcommand("verdict", "final exceptional-collection verdict");
    cv->add_option("--ctx", ctx_name, "torsion context: C3, C2xC3, generic")->required();
    cv->add_option("--k-split", k_split, "canonical class is an honest triple of L")
        ->required();
    cv->add_flag("--in-c18", in_c18, "surface lies in the C18 class");
    cv->callback([&] {
        auto ctx = context_from(ctx_name, in_c18);
        emit({{"context", ctx_name},
              {"in_C18", in_c18},
              {"k_splits", k_split},
              {"verdict", ec_verdict_name(exceptional_collection_verdict(ctx, k_split))}});
    });

    // ------------------------------------------------------------------------- db
    auto* db = app.add_subcommand("db", "fake projective plane records");
    db->require_subcommand(1);

    std::string label;
    auto* dlk = db->add_subcommand("lookup", "one record by label");
    dlk->add_option("label", label, "record label (unicode or plain)")->required();
    dlk->callback([&] {
        try {
            emit(record_json(lookup(label)));
        } catch (const std::out_of_range& e) {
            throw CLI::ValidationError("label", e.what());
        }
    });

    auto* drp = db->add_subcommand("report", "coverage of the applicability theorems");
    drp->callback([&] {
        auto rep = coverage_report();
        json tally;
        for (const auto& [a, n] : rep.tally) tally[std::string(applicability_name(a))] = n;
        emit({{"records_total", rep.records_total},
              {"records_covered", rep.records_covered},
              {"planes_covered", rep.planes_covered},
              {"liftable_planes_among_100", rep.liftable_planes},
              {"tally", tally},
              {"by_aut", rep.by_aut}});
    });

    std::string aut;
    auto* dq = db->add_subcommand("query", "records filtered by automorphism group");
    dq->add_option("--aut", aut, "automorphism group, e.g. C3")->required();
    dq->callback([&] {
        auto arr = json::array();
        for (const auto& r : query_by_aut(aut)) arr.push_back(record_json(r));
        emit(arr);
    });

    // ------------------------------------------------------------------ verify-all
    std::string only_module, out_path;
    auto* va = app.add_subcommand("verify-all", "run the complete check registry");
    va->add_option("--only", only_module, "restrict to one module (e.g. lattice)");
    va->add_option("--out", out_path, "write the certificate bundle JSON here");
    va->callback([&] {
        RunOptions opt;
        if (!only_module.empty()) opt.only_module = resolve_module(only_module);
        auto bundle = verify_all(out_path, opt);
        std::cout << render_report(bundle);
        if (!bundle.ok()) exit_code = 1;
    });

    // --------------------------------------------------------------------- report
    std::string bundle_path;
    auto* rp = app.add_subcommand("report", "render a previously written bundle");
    rp->add_option("bundle", bundle_path, "certificate bundle JSON")->required();
    rp->callback([&] {
        std::ifstream in(bundle_path);
        if (!in) throw CLI::ValidationError("bundle", "cannot open " + bundle_path);
        json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw CLI::ValidationError("bundle", std::string("malformed JSON: ") + e.what());
        }
        CertificateBundle bundle;
        try {
            bundle = CertificateBundle::from_json(j);
        } catch (const std::exception& e) {
            throw CLI::ValidationError("bundle", std::string("malformed bundle: ") + e.what());
        }
        std::cout << render_report(bundle);
        if (!bundle.ok()) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
