#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dgs/exclusion.hpp"

namespace dgs {

inline constexpr const char* kToolName = "dgs";
inline constexpr const char* kToolVersion = "0.1.0";

// Flat, serialization-friendly mirror of a certification run. All big
// integers are decimal strings; floats never appear.
struct FactorTermDoc {
    std::string prime;
    unsigned exponent = 1;
    bool operator==(const FactorTermDoc&) const = default;
};

struct FactorizationDoc {
    int sign = 1;
    std::vector<FactorTermDoc> factors;
    std::string residual = "1";
    bool complete = true;
    bool operator==(const FactorizationDoc&) const = default;
};

struct PrimeEntryDoc {
    std::string prime;
    std::string state;
    std::string rule;
    std::vector<std::string> witness;
    std::string detail;
    bool operator==(const PrimeEntryDoc&) const = default;
};

struct CandidateDoc {
    std::array<int, 4> support{};
    bool passes = false;
    bool operator==(const CandidateDoc&) const = default;
};

struct TimingsDoc {
    double profile_seconds = 0;
    double primes_seconds = 0;
    double level2_seconds = 0;
    double total_seconds = 0;
    bool operator==(const TimingsDoc&) const = default;
};

struct ReportDocument {
    int schema_version = 1;
    std::string tool_name = kToolName;
    std::string tool_version = kToolVersion;

    std::string input_format;  // "graph6" | "adjacency"
    std::string input_source;  // file path or "-"
    std::string graph6;        // canonical echo of the graph

    int n = 0;
    int edges = 0;

    bool controllable = false;
    std::string det;
    std::vector<std::string> snf_diagonal;
    std::optional<FactorizationDoc> dn_factorization;
    std::optional<FactorizationDoc> det_factorization;
    std::string in_family;  // "true" | "false" | "unknown"

    std::vector<PrimeEntryDoc> primes;
    PrimeEntryDoc level2;
    std::vector<CandidateDoc> level2_candidates;

    std::string verdict;
    std::optional<TimingsDoc> timings;  // attached only on request

    bool operator==(const ReportDocument&) const = default;
};

ReportDocument make_report(const Graph& g, const CertificationReport& cert,
                           const std::string& input_format, const std::string& input_source,
                           bool include_timings);

nlohmann::json to_json(const ReportDocument& doc);
ReportDocument report_from_json(const nlohmann::json& j);

std::string render_text(const ReportDocument& doc);

// Process exit code for a verdict: 0, 10 or 11.
int exit_code(Verdict v);

}  // namespace dgs
