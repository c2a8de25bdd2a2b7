#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "dgs/exclusion.hpp"
#include "dgs/graph.hpp"

namespace dgs {

// Exhaustive labeled enumeration is capped here; beyond it, feed canonical
// representatives through ingest_graph6_stream instead.
inline constexpr int kMaxExhaustiveOrder = 7;

// Graph with vertex pairs (i,j), i<j, numbered j(j-1)/2+i as mask bits.
Graph graph_from_edge_mask(int n, std::uint64_t mask);
std::uint64_t edge_mask_of(const Graph& g);

// Calls fn for every labeled graph on n vertices, in edge-mask order.
// Throws std::invalid_argument for n > kMaxExhaustiveOrder.
void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn);
std::uint64_t labeled_graph_count(int n);

// Exact isomorphism by degree-refined backtracking. Different orders compare
// unequal (no exception).
bool is_isomorphic(const Graph& g, const Graph& h);

struct MateReport {
    Graph graph;
    std::vector<Graph> mates;  // pairwise nonisomorphic, none isomorphic to graph
    bool is_dgs() const { return mates.empty(); }
};

// Mates of g within an explicit universe, or within the exhaustive labeled
// universe of g's order. Bucketing compares characteristic polynomial pairs
// exactly; no hashes decide membership.
MateReport find_gcs_mates(const Graph& g, std::span<const Graph> universe);
MateReport find_gcs_mates(const Graph& g);

struct ValidationReport {
    int n = 0;
    std::uint64_t labeled_graphs = 0;
    std::size_t iso_classes = 0;
    std::size_t spectrum_buckets = 0;
    std::size_t mate_classes = 0;  // classes sharing their spectrum with another class
    std::size_t controllable_classes = 0;
    std::size_t certified = 0;
    std::size_t undecided = 0;
    std::size_t soundness_violations = 0;  // certified yet a mate exists; must be 0
    std::vector<std::string> violation_graph6;
    std::size_t undecided_without_mate = 0;  // incompleteness, not an error
    std::size_t pairs_checked = 0;           // ordered controllable cospectral pairs
    std::size_t level_divides_failures = 0;  // level(Q) must divide d_n
    std::size_t isotropy_witness_failures = 0;  // odd p | level must stay OPEN
    std::size_t level2_pairs = 0;
    std::size_t level2_necessity_failures = 0;  // level-2 pair must leave a passing candidate
    std::map<std::string, std::size_t> pairs_by_level;
    double elapsed_seconds = 0;
};

// Exhaustive ground-truth sweep: buckets every labeled graph on n vertices by
// its exact generalized characteristic polynomial pair, splits buckets into
// isomorphism classes, and checks every certified class against the mates
// actually present.
ValidationReport cross_validate(
    int n, const std::function<CertificationReport(const Graph&)>& certifier);
ValidationReport cross_validate(int n);

struct StreamStats {
    std::size_t lines = 0;
    std::size_t parsed = 0;
    std::vector<std::pair<std::size_t, std::string>> errors;  // line number, message
};

// One graph6 record per line. Strict mode throws on the first bad line;
// lenient mode records it and continues.
std::vector<Graph> ingest_graph6_stream(std::istream& in, bool strict,
                                        StreamStats* stats = nullptr);

}  // namespace dgs
