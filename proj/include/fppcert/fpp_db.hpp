#pragma once

#include <fppcert/sha256.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fppcert {

// Rewrites the typographic variants that occur in surface labels and group
// names into plain ASCII so that text from any source compares equal:
// subscript digits become digits, superscript digits become "^d", and the
// multiplication sign becomes 'x'. Everything else (including '∅') passes
// through untouched.
inline std::string normalize_label(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size();) {
        unsigned char a = text[i];
        unsigned char b = i + 1 < text.size() ? text[i + 1] : 0;
        unsigned char c = i + 2 < text.size() ? text[i + 2] : 0;
        if (a == 0xC3 && b == 0x97) {  // ×
            out.push_back('x');
            i += 2;
        } else if (a == 0xC2 && (b == 0xB9 || b == 0xB2 || b == 0xB3)) {  // ¹²³
            out.push_back('^');
            out.push_back(b == 0xB9 ? '1' : b == 0xB2 ? '2' : '3');
            i += 2;
        } else if (a == 0xE2 && b == 0x82 && c >= 0x80 && c <= 0x89) {  // ₀..₉
            out.push_back(static_cast<char>('0' + (c - 0x80)));
            i += 3;
        } else if (a == 0xE2 && b == 0x81 && (c == 0xB0 || (c >= 0xB4 && c <= 0xB9))) {
            out.push_back('^');  // ⁰ and ⁴..⁹
            out.push_back(static_cast<char>('0' + (c - 0xB0)));
            i += 3;
        } else {
            out.push_back(static_cast<char>(a));
            ++i;
        }
    }
    return out;
}

// Finite abelian group in primary decomposition: a sorted list of prime-power
// cyclic factor orders. Empty list = trivial group.
struct AbelianGroup {
    std::vector<long long> factors;

    AbelianGroup() = default;

    // Accepts arbitrary cyclic factor orders >= 2 and splits each into its
    // prime-power parts, so C6 and C2xC3 normalize to the same object.
    explicit AbelianGroup(const std::vector<long long>& orders) {
        for (long long n : orders) {
            if (n < 2) throw std::invalid_argument("cyclic factor order must be >= 2");
            for (long long p = 2; p * p <= n; ++p)
                if (n % p == 0) {
                    long long q = 1;
                    while (n % p == 0) {
                        q *= p;
                        n /= p;
                    }
                    factors.push_back(q);
                }
            if (n > 1) factors.push_back(n);
        }
        std::sort(factors.begin(), factors.end());
    }

    bool trivial() const { return factors.empty(); }

    long long order() const {
        long long n = 1;
        for (long long f : factors) n *= f;
        return n;
    }

    long long exponent() const {
        long long e = 1;
        for (long long f : factors) e = std::lcm(e, f);
        return e;
    }

    // Number of cyclic factors whose order p divides; for a prime p this is
    // the p-rank, i.e. the dimension of the p-torsion over F_p.
    int rank_at(long long p) const {
        int r = 0;
        for (long long f : factors)
            if (f % p == 0) ++r;
        return r;
    }

    bool operator==(const AbelianGroup&) const = default;

    std::string str() const {
        if (factors.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) s.push_back('x');
            s += "C" + std::to_string(factors[i]);
        }
        return s;
    }
};

// Parses "C2^2xC13", "C₂²×C₁₃", "0", "{1}" and friends.
inline AbelianGroup parse_abelian_group(std::string_view text) {
    std::string s = normalize_label(text);
    if (s.empty() || s == "0" || s == "1" || s == "{1}" || s == "trivial") return {};
    std::vector<long long> orders;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] != 'C') throw std::invalid_argument("bad group token in: " + s);
        ++i;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw std::invalid_argument("missing factor order in: " + s);
        long long n = std::stoll(s.substr(i, j - i));
        long long copies = 1;
        i = j;
        if (i < s.size() && s[i] == '^') {
            ++i;
            j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i) throw std::invalid_argument("missing exponent in: " + s);
            copies = std::stoll(s.substr(i, j - i));
            i = j;
        }
        for (long long k = 0; k < copies; ++k) orders.push_back(n);
        if (i < s.size()) {
            if (s[i] != 'x') throw std::invalid_argument("bad separator in: " + s);
            ++i;
        }
    }
    return AbelianGroup(orders);
}

// One fake projective plane conjugate pair: its class, the full surface
// label, the automorphism group, integral homology of the surface and of the
// quotient by the distinguished subgroup H, plus the three stored flags that
// are not derivable from the homology columns.
struct FppRecord {
    std::string class_id;
    std::string label;
    std::string aut;       // "C7:C3", "C3xC3", or "C3"
    AbelianGroup h1_M;
    std::string h;         // "C7", "C3", or "Aut(M)"
    AbelianGroup h1_quotient;
    bool in_C18 = false;   // arithmetic class C18
    bool in_C2 = false;    // arithmetic class C2
    bool k_is_3L = false;  // canonical class equals 3L for an honest line bundle
};

// The 33 records with nontrivial automorphism group, transcribed from the
// published invariant tables. The first 15 rows are the surfaces for which
// the exceptional collection is established; the remaining 18 are the open
// ones. Kept byte-identical to data/fpp_records.tsv (checked in tests and by
// the verifier).
inline constexpr std::string_view embedded_records_tsv =
    R"TSV(class_id	label	aut	h1_M	h	h1_quotient	in_C18	in_C2	k_is_3L
(a=7,p=2,∅)	(a=7,p=2,∅,D₃2₇)	C7:C3	C2^4	C7	C2	0	0	1
(a=7,p=2,{7})	(a=7,p=2,{7},D₃2₇)	C7:C3	C2^3	C7	0	0	0	1
(C20,{v2},∅)	(C20,{v2},∅,D₃2₇)	C7:C3	C2^6	C7	0	0	0	1
(C2,p=2,∅)	(C2,p=2,∅,d₃D₃)	C3xC3	C2xC7	Aut(M)	C2	0	1	1
(C2,p=2,{3})	(C2,p=2,{3},d₃D₃)	C3xC3	C7	Aut(M)	0	0	1	1
(C18,p=3,∅)	(C18,p=3,∅,d₃D₃)	C3xC3	C2^2xC13	Aut(M)	0	1	0	1
(a=15,p=2,{3,5})	(a=15,p=2,{3,5},D₃)	C3	C3xC7	Aut(M)	C3	0	0	1
(a=15,p=2,{3,5})	(a=15,p=2,{3,5},3₃)	C3	C2^2xC3	Aut(M)	C3	0	0	1
(a=15,p=2,{3,5})	(a=15,p=2,{3,5},(D3)₃)	C3	C3	Aut(M)	C3	0	0	1
(a=15,p=2,{3})	(a=15,p=2,{3},D₃)	C3	C2xC3xC7	Aut(M)	C2xC3	0	0	1
(a=15,p=2,{3})	(a=15,p=2,{3},3₃)	C3	C2^3xC3	Aut(M)	C2xC3	0	0	1
(a=15,p=2,{3})	(a=15,p=2,{3},(D3)₃)	C3	C2xC3	Aut(M)	C2xC3	0	0	1
(C2,p=2,∅)	(C2,p=2,∅,D₃X₃)	C3	C2xC7xC9	Aut(M)	C2xC3	0	1	1
(C2,p=2,∅)	(C2,p=2,∅,(dD)₃X₃)	C3	C2xC9	Aut(M)	C2xC3	0	1	1
(C2,p=2,∅)	(C2,p=2,∅,(d²D)₃X₃)	C3	C2xC9	Aut(M)	C2xC3	0	1	1
(a=1,p=5,∅)	(a=1,p=5,∅,D₃)	C3	C2xC4xC31	C3	C2xC4	0	0	1
(a=1,p=5,{2})	(a=1,p=5,{2},D₃)	C3	C4xC31	C3	C4	0	0	1
(a=2,p=3,{2})	(a=2,p=3,{2},D₃)	C3	C2^2xC13	C3	C2xC2	0	0	1
(a=2,p=3,∅)	(a=2,p=3,∅,D₃)	C3	C2^2xC13	C3	C2xC2	0	0	1
(a=7,p=2,∅)	(a=7,p=2,∅,D₃X₇)	C3	C2xC7	C3	C2	0	0	1
(a=7,p=2,{7})	(a=7,p=2,{7},D₃7₇)	C3	C2xC7	C3	C2	0	0	1
(a=7,p=2,{7})	(a=7,p=2,{7},D₃7'₇)	C3	C2^2xC7	C3	C2xC2	0	0	1
(a=7,p=2,{3})	(a=7,p=2,{3},D₃)	C3	C2xC4xC7	C3	C2xC4	0	0	1
(a=7,p=2,{3,7})	(a=7,p=2,{3,7},D₃)	C3	C4xC7	C3	C4	0	0	1
(a=15,p=2,∅)	(a=15,p=2,∅,D₃)	C3	C2^2xC7	C3	C2xC2	0	0	1
(a=15,p=2,{5})	(a=15,p=2,{5},D₃)	C3	C2xC7	C3	C2	0	0	1
(C10,p=2,∅)	(C10,p=2,∅,D₃)	C3	C2xC7	C3	C2	0	0	1
(C10,p=2,{17-})	(C10,p=2,{17-},D₃)	C3	C7	C3	0	0	0	1
(C18,p=3,{2})	(C18,p=3,{2},D₃)	C3	C2xC3xC13	C3	C2xC3	1	0	0
(C18,p=3,{2})	(C18,p=3,{2},(dD)₃)	C3	C2xC3	C3	C2xC3	1	0	0
(C18,p=3,{2})	(C18,p=3,{2},(d²D)₃)	C3	C2xC3	C3	C2xC3	1	0	0
(C20,{v2},{3+})	(C20,{v2},{3+},D₃)	C3	C4xC7	C3	C4	0	0	1
(C20,{v2},{3-})	(C20,{v2},{3-},D₃)	C3	C4xC7	C3	C4	0	0	1
)TSV";

// Among all 100 fake projective planes (50 conjugate pairs doubled), 92 admit
// an honest cubic root of the canonical class. The tables here only hold the
// 33 classes with nontrivial automorphisms, so this count is provenance
// metadata, not derivable from the fixture.
inline constexpr int liftable_planes_among_100 = 92;

namespace detail {

inline bool parse_flag(const std::string& s) {
    if (s == "0") return false;
    if (s == "1") return true;
    throw std::invalid_argument("flag column must be 0 or 1, got: " + s);
}

}  // namespace detail

inline std::vector<FppRecord> parse_records_tsv(std::string_view tsv) {
    std::vector<FppRecord> out;
    std::istringstream in{std::string(tsv)};
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (header) {
            header = false;
            continue;
        }
        std::vector<std::string> cols;
        std::size_t start = 0;
        while (true) {
            std::size_t tab = line.find('\t', start);
            cols.push_back(line.substr(start, tab - start));
            if (tab == std::string::npos) break;
            start = tab + 1;
        }
        if (cols.size() != 9)
            throw std::invalid_argument("record row must have 9 columns, got " +
                                        std::to_string(cols.size()));
        FppRecord r;
        r.class_id = cols[0];
        r.label = cols[1];
        r.aut = cols[2];
        r.h1_M = parse_abelian_group(cols[3]);
        r.h = cols[4];
        r.h1_quotient = parse_abelian_group(cols[5]);
        r.in_C18 = detail::parse_flag(cols[6]);
        r.in_C2 = detail::parse_flag(cols[7]);
        r.k_is_3L = detail::parse_flag(cols[8]);
        if (r.aut != "C7:C3" && r.aut != "C3xC3" && r.aut != "C3")
            throw std::invalid_argument("unexpected automorphism group: " + r.aut);
        out.push_back(std::move(r));
    }
    return out;
}

// The in-memory database, parsed once from the embedded fixture.
inline const std::vector<FppRecord>& database() {
    static const std::vector<FppRecord> db = parse_records_tsv(embedded_records_tsv);
    return db;
}

// Loads the on-disk fixture, refusing to proceed unless its bytes match the
// SHA-256 recorded in the sibling ".sha256" file.
inline std::vector<FppRecord> load_database(const std::string& tsv_path) {
    std::ifstream in(tsv_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open fixture: " + tsv_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string content = buf.str();

    std::ifstream sumfile(tsv_path + ".sha256");
    if (!sumfile) throw std::runtime_error("missing checksum file: " + tsv_path + ".sha256");
    std::string expected;
    sumfile >> expected;
    const std::string actual = sha256_hex(content);
    if (actual != expected)
        throw std::runtime_error("fixture checksum mismatch: expected " + expected +
                                 ", got " + actual);
    return parse_records_tsv(content);
}

inline const FppRecord& lookup(std::string_view label) {
    const std::string key = normalize_label(label);
    for (const auto& r : database())
        if (normalize_label(r.label) == key) return r;
    throw std::out_of_range("unknown record label: " + std::string(label));
}

// Exponent of the invariant torsion group H1(M/H); every invariant torsion
// class is killed by it (and it always divides 12 on this dataset).
inline long long invariant_torsion_exponent(const FppRecord& r) {
    return r.h1_quotient.exponent();
}

// True iff the group has exactly one subgroup of order 3. The count of
// order-3 subgroups is (3^r - 1)/2 for r the 3-rank, so this is r == 1.
inline bool unique_c3_subgroup(const AbelianGroup& g) { return g.rank_at(3) == 1; }

enum class Applicability {
    Theorem1,       // Aut = C7:C3
    Theorem2,       // Aut = C3xC3
    CorC3a,         // Aut = C3, quotient torsion C3
    CorC3b,         // Aut = C3, quotient torsion C2xC3, not class C18
    Prop15Partial,  // class C18: only h0(2L) = 0, no honest cubic root
    Unproven,
};

inline std::string_view applicability_name(Applicability a) {
    switch (a) {
        case Applicability::Theorem1: return "Theorem 1";
        case Applicability::Theorem2: return "Theorem 2";
        case Applicability::CorC3a: return "Corollary C3a";
        case Applicability::CorC3b: return "Corollary C3b";
        case Applicability::Prop15Partial: return "Prop 1.5 (partial: h0(2L)=0 only)";
        case Applicability::Unproven: return "UNPROVEN";
    }
    throw std::logic_error("unreachable");
}

inline Applicability theorem_applicability(const FppRecord& r) {
    if (r.aut == "C7:C3") return Applicability::Theorem1;
    if (r.aut == "C3xC3") return Applicability::Theorem2;
    static const AbelianGroup c3({3}), c2xc3({2, 3});
    if (r.h1_quotient == c3) return Applicability::CorC3a;
    if (r.h1_quotient == c2xc3 && !r.in_C18) return Applicability::CorC3b;
    if (r.h1_quotient == c2xc3 && r.in_C18) return Applicability::Prop15Partial;
    return Applicability::Unproven;
}

// A record is fully covered when one of the exceptional-collection theorems
// applies (the C18 partial result only gives section vanishing).
inline bool covered(const FppRecord& r) {
    auto a = theorem_applicability(r);
    return a != Applicability::Unproven && a != Applicability::Prop15Partial;
}

struct CoverageReport {
    int records_total = 0;
    int records_covered = 0;
    int planes_covered = 0;  // two conjugate planes per covered record
    std::map<Applicability, int> tally;
    std::map<std::string, int> by_aut;
    int liftable_planes = liftable_planes_among_100;
};

inline CoverageReport coverage_report() {
    CoverageReport rep;
    for (const auto& r : database()) {
        ++rep.records_total;
        if (covered(r)) ++rep.records_covered;
        ++rep.tally[theorem_applicability(r)];
        ++rep.by_aut[r.aut];
    }
    rep.planes_covered = 2 * rep.records_covered;
    return rep;
}

inline std::vector<FppRecord> query_by_aut(std::string_view aut) {
    std::vector<FppRecord> out;
    for (const auto& r : database())
        if (r.aut == normalize_label(aut)) out.push_back(r);
    return out;
}

}  // namespace fppcert
