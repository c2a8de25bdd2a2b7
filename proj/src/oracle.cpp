#include "dgs/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <istream>
#include <stdexcept>
#include <unordered_map>

#include "dgs/errors.hpp"
#include "dgs/qmatrix.hpp"

namespace dgs {

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((mask >> k) & 1) g.add_edge(i, j);
    return g;
}

std::uint64_t edge_mask_of(const Graph& g) {
    std::uint64_t mask = 0;
    int k = 0;
    for (int j = 1; j < g.order(); ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (g.has_edge(i, j)) mask |= std::uint64_t(1) << k;
    return mask;
}

std::uint64_t labeled_graph_count(int n) {
    return std::uint64_t(1) << (n * (n - 1) / 2);
}

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > kMaxExhaustiveOrder)
        throw std::invalid_argument(
            "exhaustive enumeration supports 1 <= n <= " + std::to_string(kMaxExhaustiveOrder) +
            "; stream canonical graph6 representatives for larger orders");
    const std::uint64_t total = labeled_graph_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) fn(graph_from_edge_mask(n, mask));
}

namespace {

// Backtracking isomorphism search over a degree-compatible vertex map.
bool extend_map(const Graph& g, const Graph& h, int depth, std::array<std::int8_t, 64>& map,
                std::uint64_t used) {
    const int n = g.order();
    if (depth == n) return true;
    for (int w = 0; w < n; ++w) {
        if ((used >> w) & 1) continue;
        if (g.degree(depth) != h.degree(w)) continue;
        bool ok = true;
        for (int u = 0; u < depth && ok; ++u)
            if (g.has_edge(depth, u) != h.has_edge(w, map[u])) ok = false;
        if (!ok) continue;
        map[depth] = static_cast<std::int8_t>(w);
        if (extend_map(g, h, depth + 1, map, used | (std::uint64_t(1) << w))) return true;
    }
    return false;
}

}  // namespace

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) return false;
    if (g.edge_count() != h.edge_count()) return false;
    const int n = g.order();
    std::vector<int> dg(n), dh(n);
    for (int i = 0; i < n; ++i) {
        dg[i] = g.degree(i);
        dh[i] = h.degree(i);
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    std::array<std::int8_t, 64> map{};
    return extend_map(g, h, 0, map, 0);
}

namespace {

// ---- fast exact bucketing key for small graphs -------------------------
//
// Characteristic polynomial coefficients of a 0/1 matrix of order <= 8 stay
// far inside int64 (every coefficient is a sum of minors bounded by the
// Hadamard bound ~ n^(n/2)), so the trace recurrence runs in plain machine
// integers here. Buckets are keyed by the two full coefficient vectors and
// compared exactly.

using SmallPoly = std::array<std::int64_t, kMaxExhaustiveOrder + 1>;

SmallPoly small_charpoly(const Graph& g) {
    const int n = g.order();
    std::int64_t a[kMaxExhaustiveOrder][kMaxExhaustiveOrder];
    std::int64_t mk[kMaxExhaustiveOrder][kMaxExhaustiveOrder];
    std::int64_t am[kMaxExhaustiveOrder][kMaxExhaustiveOrder];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            a[i][j] = g.has_edge(i, j) ? 1 : 0;
            mk[i][j] = (i == j);
        }
    SmallPoly c{};
    c[n] = 1;
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::int64_t s = 0;
                for (int t = 0; t < n; ++t) s += a[i][t] * mk[t][j];
                am[i][j] = s;
            }
        std::int64_t tr = 0;
        for (int i = 0; i < n; ++i) tr += am[i][i];
        c[n - k] = -tr / k;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) mk[i][j] = am[i][j] + (i == j ? c[n - k] : 0);
    }
    return c;
}

struct SpectrumKey {
    SmallPoly graph_poly;
    SmallPoly complement_poly;
    bool operator==(const SpectrumKey&) const = default;
};

struct SpectrumKeyHash {
    std::size_t operator()(const SpectrumKey& k) const {
        std::size_t h = 1469598103934665603ull;
        auto mix = [&h](std::int64_t x) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        };
        for (auto x : k.graph_poly) mix(x);
        for (auto x : k.complement_poly) mix(x);
        return h;
    }
};

SpectrumKey spectrum_key(const Graph& g) {
    return {small_charpoly(g), small_charpoly(complement(g))};
}

// Buckets of labeled edge masks sharing a generalized spectrum.
std::vector<std::vector<std::uint64_t>> bucket_labeled_graphs(int n) {
    std::unordered_map<SpectrumKey, std::size_t, SpectrumKeyHash> index;
    std::vector<std::vector<std::uint64_t>> buckets;
    const std::uint64_t total = labeled_graph_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const Graph g = graph_from_edge_mask(n, mask);
        const SpectrumKey key = spectrum_key(g);
        auto [it, inserted] = index.try_emplace(key, buckets.size());
        if (inserted) buckets.emplace_back();
        buckets[it->second].push_back(mask);
    }
    return buckets;
}

std::vector<Graph> isomorphism_class_reps(int n, const std::vector<std::uint64_t>& masks) {
    std::vector<Graph> reps;
    for (std::uint64_t mask : masks) {
        Graph g = graph_from_edge_mask(n, mask);
        bool known = false;
        for (const Graph& r : reps)
            if (is_isomorphic(g, r)) {
                known = true;
                break;
            }
        if (!known) reps.push_back(std::move(g));
    }
    return reps;
}

}  // namespace

MateReport find_gcs_mates(const Graph& g, std::span<const Graph> universe) {
    MateReport report{g, {}};
    const auto target = generalized_charpoly(g);
    for (const Graph& h : universe) {
        if (h.order() != g.order()) continue;
        if (generalized_charpoly(h) != target) continue;
        if (is_isomorphic(g, h)) continue;
        bool seen = false;
        for (const Graph& m : report.mates)
            if (is_isomorphic(h, m)) {
                seen = true;
                break;
            }
        if (!seen) report.mates.push_back(h);
    }
    return report;
}

MateReport find_gcs_mates(const Graph& g) {
    const int n = g.order();
    if (n > kMaxExhaustiveOrder)
        throw std::invalid_argument("exhaustive mate search is limited to n <= " +
                                    std::to_string(kMaxExhaustiveOrder));
    MateReport report{g, {}};
    const SpectrumKey target = spectrum_key(g);
    const std::uint64_t total = labeled_graph_count(n);
    std::vector<std::uint64_t> bucket;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const Graph h = graph_from_edge_mask(n, mask);
        if (spectrum_key(h) == target) bucket.push_back(mask);
    }
    for (const Graph& r : isomorphism_class_reps(n, bucket))
        if (!is_isomorphic(r, g)) report.mates.push_back(r);
    return report;
}

ValidationReport cross_validate(int n,
                                const std::function<CertificationReport(const Graph&)>& certifier) {
    const auto t0 = std::chrono::steady_clock::now();
    ValidationReport report;
    report.n = n;
    report.labeled_graphs = labeled_graph_count(n);

    const auto buckets = bucket_labeled_graphs(n);
    report.spectrum_buckets = buckets.size();

    for (const auto& masks : buckets) {
        const auto reps = isomorphism_class_reps(n, masks);
        report.iso_classes += reps.size();
        if (reps.size() > 1) report.mate_classes += reps.size();

        std::vector<CertificationReport> certs;
        std::vector<std::size_t> controllable_ids;
        for (std::size_t i = 0; i < reps.size(); ++i) {
            CertificationReport cert = certifier(reps[i]);
            if (cert.verdict != Verdict::not_controllable) {
                ++report.controllable_classes;
                controllable_ids.push_back(i);
                const bool has_mate = reps.size() > 1;
                if (cert.verdict == Verdict::certified_dgs) {
                    ++report.certified;
                    if (has_mate) {
                        ++report.soundness_violations;
                        report.violation_graph6.push_back(emit_graph6(reps[i]));
                    }
                } else {
                    ++report.undecided;
                    if (!has_mate) ++report.undecided_without_mate;
                }
            }
            certs.push_back(std::move(cert));
        }

        // Every ordered controllable pair in the bucket is a genuine
        // generalized-cospectral pair; validate the conjugator invariants.
        for (std::size_t i : controllable_ids)
            for (std::size_t j : controllable_ids) {
                if (i == j) continue;
                ++report.pairs_checked;
                const Graph& a = reps[i];
                const Graph& b = reps[j];
                const WalkProfile& prof = certs[i].profile;
                RationalOrthogonal q = recover_q(a, b);
                ++report.pairs_by_level[q.level().str()];
                if (prof.dn() % q.level() != 0) ++report.level_divides_failures;
                if (q.level() == 2) {
                    ++report.level2_pairs;
                    auto [st, cands] = exclude_level2(a, prof);
                    bool any = false;
                    for (const auto& c : cands) any = any || c.passes_power_test;
                    if (!any) ++report.level2_necessity_failures;
                }
                for (const auto& [p, e] : factor(q.level()).factors) {
                    if (p == 2) continue;
                    if (exclude_by_isotropy(a, prof, p).state == PrimeState::excluded)
                        ++report.isotropy_witness_failures;
                }
            }
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

ValidationReport cross_validate(int n) {
    return cross_validate(n, [](const Graph& g) { return certify(g); });
}

std::vector<Graph> ingest_graph6_stream(std::istream& in, bool strict, StreamStats* stats) {
    std::vector<Graph> graphs;
    StreamStats local;
    StreamStats& st = stats ? *stats : local;
    std::string line;
    while (std::getline(in, line)) {
        ++st.lines;
        if (line.empty() || (line.size() == 1 && line[0] == '\r')) continue;
        try {
            graphs.push_back(parse_graph6(line));
            ++st.parsed;
        } catch (const ParseError& e) {
            if (strict)
                throw ParseError("line " + std::to_string(st.lines) + ": " + e.what(), e.offset());
            st.errors.emplace_back(st.lines, e.what());
        }
    }
    return graphs;
}

}  // namespace dgs
