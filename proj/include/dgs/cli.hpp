#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "dgs/oracle.hpp"
#include "dgs/report.hpp"

namespace dgs {

enum class InputFormat { graph6, adjacency };

// Exit codes shared by the CLI commands.
inline constexpr int kExitCertified = 0;
inline constexpr int kExitUndecided = 10;
inline constexpr int kExitNotControllable = 11;
inline constexpr int kExitInputError = 2;

Graph parse_input_graph(const std::string& text, InputFormat format);

struct AnalyzeOptions {
    InputFormat format = InputFormat::graph6;
    std::uint64_t effort = kDefaultFactorEffort;
    bool json = false;
    bool timings = false;
};

int cmd_analyze(const std::string& text, const std::string& source, const AnalyzeOptions& opt,
                std::ostream& out, std::ostream& err);

struct BatchOptions {
    std::uint64_t effort = kDefaultFactorEffort;
    int parallelism = 1;
    bool strict = false;
    bool timings = false;
};

// graph6 stream in, one JSON report per line out (input order, regardless of
// parallelism), then one summary line.
int cmd_batch(std::istream& in, const BatchOptions& opt, std::ostream& out, std::ostream& err);

int cmd_verify_q(const std::string& graph_text, InputFormat format, const std::string& q_text,
                 bool json, std::ostream& out, std::ostream& err);

struct OracleOptions {
    int n = 6;
    bool json = false;
};

int cmd_oracle(const OracleOptions& opt, std::ostream& out, std::ostream& err);

struct DensityOptions {
    int n = 12;
    std::size_t samples = 10000;
    std::uint64_t seed = 0x5eed00d5;
    std::uint64_t effort = kDefaultFactorEffort;
    bool json = false;
};

struct DensityResult {
    std::size_t samples = 0;
    std::size_t members = 0;
    std::size_t nonmembers = 0;
    std::size_t indeterminate = 0;  // factorization effort exhausted
    // Certification outcomes across the members.
    std::size_t member_certified = 0;
    std::size_t member_level2_open = 0;
    std::size_t member_inconsistent = 0;  // anything else; must stay 0
};

// Samples graphs with independent fair edge coins (deterministic in the
// seed), classifies family membership from det(W) alone, and certifies every
// member.
DensityResult run_density(const DensityOptions& opt);

int cmd_density(const DensityOptions& opt, std::ostream& out, std::ostream& err);

nlohmann::json to_json(const ValidationReport& report);
nlohmann::json to_json(const DensityResult& result);

}  // namespace dgs
