#pragma once

#include <fppcert/sha256.hpp>

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <stdexcept>
#include <string>
#include <vector>

namespace fppcert {

// Outcome of one check. VERIFIED and CONTRADICTION_CONFIRMED are both
// successes: the former re-derives a stated value, the latter re-derives the
// inconsistency that an exclusion argument relies on. CITATION_ONLY marks a
// prose-geometric step that is recorded but not machine-checked. Any FAILURE
// makes the whole bundle fail.
enum class Verdict { VERIFIED, CONTRADICTION_CONFIRMED, CITATION_ONLY, FAILURE };

inline std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::VERIFIED: return "VERIFIED";
        case Verdict::CONTRADICTION_CONFIRMED: return "CONTRADICTION_CONFIRMED";
        case Verdict::CITATION_ONLY: return "CITATION_ONLY";
        case Verdict::FAILURE: return "FAILURE";
    }
    throw std::logic_error("unreachable");
}

inline Verdict verdict_from_name(std::string_view s) {
    if (s == "VERIFIED") return Verdict::VERIFIED;
    if (s == "CONTRADICTION_CONFIRMED") return Verdict::CONTRADICTION_CONFIRMED;
    if (s == "CITATION_ONLY") return Verdict::CITATION_ONLY;
    if (s == "FAILURE") return Verdict::FAILURE;
    throw std::invalid_argument("unknown verdict: " + std::string(s));
}

struct Certificate {
    std::string check_id;
    std::string module;  // registry section the check belongs to
    std::string claim;   // self-contained statement of what is being checked
    nlohmann::json inputs;
    Verdict verdict = Verdict::FAILURE;
    nlohmann::json evidence;

    nlohmann::json to_json() const {
        return {{"check_id", check_id}, {"module", module},     {"claim", claim},
                {"inputs", inputs},     {"verdict", verdict_name(verdict)},
                {"evidence", evidence}};
    }

    static Certificate from_json(const nlohmann::json& j) {
        Certificate c;
        c.check_id = j.at("check_id").get<std::string>();
        c.module = j.at("module").get<std::string>();
        c.claim = j.at("claim").get<std::string>();
        c.inputs = j.at("inputs");
        c.verdict = verdict_from_name(j.at("verdict").get<std::string>());
        c.evidence = j.at("evidence");
        return c;
    }
};

struct CertificateBundle {
    std::string schema_version = "1";
    std::string generated_at;  // informational; excluded from the checksum
    std::vector<Certificate> certificates;

    bool ok() const {
        for (const auto& c : certificates)
            if (c.verdict == Verdict::FAILURE) return false;
        return true;
    }

    int count(Verdict v) const {
        int n = 0;
        for (const auto& c : certificates)
            if (c.verdict == v) ++n;
        return n;
    }

    // Checksum of everything except the timestamp, so two runs of the same
    // binary produce bundles that differ only in "generated_at".
    std::string checksum() const {
        nlohmann::json payload = {{"schema_version", schema_version},
                                  {"certificates", nlohmann::json::array()}};
        for (const auto& c : certificates) payload["certificates"].push_back(c.to_json());
        return sha256_hex(payload.dump());
    }

    nlohmann::json to_json() const {
        nlohmann::json j = {{"schema_version", schema_version},
                            {"generated_at", generated_at},
                            {"certificates", nlohmann::json::array()},
                            {"summary",
                             {{"total", certificates.size()},
                              {"verified", count(Verdict::VERIFIED)},
                              {"contradiction_confirmed", count(Verdict::CONTRADICTION_CONFIRMED)},
                              {"citation_only", count(Verdict::CITATION_ONLY)},
                              {"failure", count(Verdict::FAILURE)}}},
                            {"checksum", checksum()}};
        for (const auto& c : certificates) j["certificates"].push_back(c.to_json());
        return j;
    }

    static CertificateBundle from_json(const nlohmann::json& j) {
        CertificateBundle b;
        b.schema_version = j.at("schema_version").get<std::string>();
        b.generated_at = j.value("generated_at", "");
        for (const auto& cj : j.at("certificates"))
            b.certificates.push_back(Certificate::from_json(cj));
        if (j.contains("checksum") && j.at("checksum").get<std::string>() != b.checksum())
            throw std::runtime_error("bundle checksum mismatch");
        return b;
    }
};

inline std::string utc_timestamp() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[80];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                  tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
    return buf;
}

}  // namespace fppcert
