#include "dgs/cli.hpp"

#include <atomic>
#include <istream>
#include <ostream>
#include <random>
#include <thread>

#include "dgs/errors.hpp"
#include "dgs/qmatrix.hpp"

namespace dgs {

Graph parse_input_graph(const std::string& text, InputFormat format) {
    if (format == InputFormat::graph6) {
        // take the first non-empty line
        std::string line = text;
        if (auto pos = line.find('\n'); pos != std::string::npos) line.resize(pos);
        return parse_graph6(line);
    }
    return parse_adjacency_text(text);
}

int cmd_analyze(const std::string& text, const std::string& source, const AnalyzeOptions& opt,
                std::ostream& out, std::ostream& err) {
    Graph g(1);
    try {
        g = parse_input_graph(text, opt.format);
    } catch (const std::exception& e) {
        err << "error: " << source << ": " << e.what() << "\n";
        return kExitInputError;
    }
    const CertificationReport cert = certify(g, opt.effort);
    const ReportDocument doc =
        make_report(g, cert, opt.format == InputFormat::graph6 ? "graph6" : "adjacency", source,
                    opt.timings);
    if (opt.json)
        out << to_json(doc).dump(2) << "\n";
    else
        out << render_text(doc);
    return exit_code(cert.verdict);
}

int cmd_batch(std::istream& in, const BatchOptions& opt, std::ostream& out, std::ostream& err) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        while (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }

    struct Slot {
        bool skipped = false;
        bool blank = false;
        std::string payload;  // JSON report line, or the parse error message
        std::string verdict;
        std::string in_family;
    };
    std::vector<Slot> slots(lines.size());

    const int workers = std::max(1, opt.parallelism);
    std::atomic<std::size_t> cursor{0};
    auto work = [&] {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= lines.size()) return;
            Slot& slot = slots[i];
            if (lines[i].empty()) {
                slot.blank = true;
                continue;
            }
            try {
                const Graph g = parse_graph6(lines[i]);
                const CertificationReport cert = certify(g, opt.effort);
                ReportDocument doc = make_report(g, cert, "graph6",
                                                 "line " + std::to_string(i + 1), opt.timings);
                slot.payload = to_json(doc).dump();
                slot.verdict = doc.verdict;
                slot.in_family = doc.in_family;
            } catch (const std::exception& e) {
                slot.skipped = true;
                slot.payload = e.what();
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    std::size_t graphs = 0, skipped = 0;
    std::size_t certified = 0, undecided = 0, noncontrollable = 0;
    std::size_t family_yes = 0, family_no = 0, family_unknown = 0;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        const Slot& slot = slots[i];
        if (slot.blank) continue;
        if (slot.skipped) {
            if (opt.strict) {
                err << "error: line " << (i + 1) << ": " << slot.payload << "\n";
                return kExitInputError;
            }
            ++skipped;
            err << "skipped line " << (i + 1) << ": " << slot.payload << "\n";
            continue;
        }
        ++graphs;
        out << slot.payload << "\n";
        if (slot.verdict == "CERTIFIED_DGS") ++certified;
        else if (slot.verdict == "UNDECIDED") ++undecided;
        else ++noncontrollable;
        if (slot.in_family == "true") ++family_yes;
        else if (slot.in_family == "false") ++family_no;
        else ++family_unknown;
    }

    nlohmann::json summary;
    summary["summary"] = {
        {"graphs", graphs},
        {"skipped", skipped},
        {"verdicts",
         {{"certified_dgs", certified},
          {"undecided", undecided},
          {"not_controllable", noncontrollable}}},
        {"family",
         {{"members", family_yes}, {"nonmembers", family_no}, {"unknown", family_unknown}}}};
    out << summary.dump() << "\n";
    return 0;
}

int cmd_verify_q(const std::string& graph_text, InputFormat format, const std::string& q_text,
                 bool json, std::ostream& out, std::ostream& err) {
    Graph g(1);
    IntMatrix scaled;
    Integer lvl;
    try {
        g = parse_input_graph(graph_text, format);
        std::tie(scaled, lvl) = parse_q_entries(q_text);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    if (scaled.rows() != static_cast<std::size_t>(g.order())) {
        err << "error: Q is " << scaled.rows() << "x" << scaled.cols() << " but the graph has "
            << g.order() << " vertices\n";
        return kExitInputError;
    }

    const auto violations = rational_orthogonal_violations(scaled, lvl);
    nlohmann::json j;
    j["level"] = lvl.str();
    j["valid"] = violations.empty();
    j["violations"] = violations;
    j["member"] = false;

    if (violations.empty()) {
        RationalOrthogonal q(scaled, lvl);
        if (auto image = check_membership(q, g)) {
            j["member"] = true;
            j["image_graph6"] = emit_graph6(*image);
        }
    }

    if (json) {
        out << j.dump(2) << "\n";
    } else {
        if (violations.empty()) {
            out << "orthogonality: ok\nrow/column sums: ok\nlevel minimality: ok\n";
        } else {
            for (const auto& v : violations) out << "invariant violated: " << v << "\n";
        }
        out << "level: " << lvl.str() << "\n";
        out << "member of Q_G: " << (j["member"].get<bool>() ? "yes" : "no") << "\n";
        if (j.contains("image_graph6"))
            out << "image graph: " << j["image_graph6"].get<std::string>() << "\n";
    }
    if (!violations.empty()) return 4;
    return j["member"].get<bool>() ? 0 : 3;
}

nlohmann::json to_json(const ValidationReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["labeled_graphs"] = r.labeled_graphs;
    j["iso_classes"] = r.iso_classes;
    j["spectrum_buckets"] = r.spectrum_buckets;
    j["mate_classes"] = r.mate_classes;
    j["controllable_classes"] = r.controllable_classes;
    j["certified"] = r.certified;
    j["undecided"] = r.undecided;
    j["soundness_violations"] = r.soundness_violations;
    j["violation_graph6"] = r.violation_graph6;
    j["undecided_without_mate"] = r.undecided_without_mate;
    j["pairs_checked"] = r.pairs_checked;
    j["level_divides_failures"] = r.level_divides_failures;
    j["isotropy_witness_failures"] = r.isotropy_witness_failures;
    j["level2_pairs"] = r.level2_pairs;
    j["level2_necessity_failures"] = r.level2_necessity_failures;
    j["pairs_by_level"] = r.pairs_by_level;
    j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

int cmd_oracle(const OracleOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.n < 1 || opt.n > kMaxExhaustiveOrder) {
        err << "error: oracle sweeps support 1 <= n <= " << kMaxExhaustiveOrder << "\n";
        return kExitInputError;
    }
    const ValidationReport r = cross_validate(opt.n);
    if (opt.json) {
        out << to_json(r).dump(2) << "\n";
    } else {
        out << "n=" << r.n << ": " << r.labeled_graphs << " labeled graphs, " << r.iso_classes
            << " isomorphism classes, " << r.spectrum_buckets << " spectrum buckets\n";
        out << "classes with a generalized-cospectral mate: " << r.mate_classes << "\n";
        out << "controllable classes: " << r.controllable_classes
            << " (certified " << r.certified << ", undecided " << r.undecided << ")\n";
        out << "soundness violations: " << r.soundness_violations << "\n";
        out << "undecided without mate (incompleteness): " << r.undecided_without_mate << "\n";
        out << "cospectral pairs checked: " << r.pairs_checked
            << " (level | d_n failures: " << r.level_divides_failures
            << ", isotropy witness failures: " << r.isotropy_witness_failures << ")\n";
        out << "level-2 pairs: " << r.level2_pairs
            << " (necessity failures: " << r.level2_necessity_failures << ")\n";
        for (const auto& [lvl, count] : r.pairs_by_level)
            out << "  pairs with level " << lvl << ": " << count << "\n";
        out << "elapsed: " << r.elapsed_seconds << " s\n";
    }
    return r.soundness_violations == 0 ? 0 : 1;
}

namespace {

Graph sample_graph(int n, std::mt19937_64& rng) {
    Graph g(n);
    std::uint64_t word = 0;
    int bits_left = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (bits_left == 0) {
                word = rng();
                bits_left = 64;
            }
            if (word & 1) g.add_edge(i, j);
            word >>= 1;
            --bits_left;
        }
    return g;
}

}  // namespace

DensityResult run_density(const DensityOptions& opt) {
    DensityResult result;
    result.samples = opt.samples;
    std::mt19937_64 rng(opt.seed);
    const unsigned half_n = static_cast<unsigned>(opt.n / 2);

    for (std::size_t s = 0; s < opt.samples; ++s) {
        const Graph g = sample_graph(opt.n, rng);
        // Membership needs only det(W): exactly floor(n/2) twos and a
        // square-free odd part.
        const Integer d = det(build_walk_matrix(g));
        if (d == 0) {
            ++result.nonmembers;
            continue;
        }
        const unsigned v2 = p_adic_valuation(d, 2);
        if (v2 != half_n) {
            ++result.nonmembers;
            continue;
        }
        const Factorization odd = factor(abs(d) >> v2, opt.effort);
        if (!odd.complete) {
            ++result.indeterminate;
            continue;
        }
        if (!odd.squarefree_odd_part()) {
            ++result.nonmembers;
            continue;
        }
        ++result.members;

        const CertificationReport cert = certify(g, opt.effort);
        if (cert.verdict == Verdict::certified_dgs) {
            ++result.member_certified;
        } else if (cert.verdict == Verdict::undecided &&
                   cert.level2.state == PrimeState::open) {
            bool odd_ok = true;
            for (const auto& p : cert.primes)
                if (p.state != PrimeState::excluded) odd_ok = false;
            if (odd_ok)
                ++result.member_level2_open;
            else
                ++result.member_inconsistent;
        } else {
            ++result.member_inconsistent;
        }
    }
    return result;
}

nlohmann::json to_json(const DensityResult& r) {
    nlohmann::json j;
    j["samples"] = r.samples;
    j["members"] = r.members;
    j["nonmembers"] = r.nonmembers;
    j["indeterminate"] = r.indeterminate;
    j["member_certified"] = r.member_certified;
    j["member_level2_open"] = r.member_level2_open;
    j["member_inconsistent"] = r.member_inconsistent;
    return j;
}

int cmd_density(const DensityOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.n < 2 || opt.n > Graph::kMaxVertices) {
        err << "error: density experiment needs 2 <= n <= " << Graph::kMaxVertices << "\n";
        return kExitInputError;
    }
    const DensityResult r = run_density(opt);
    if (opt.json) {
        nlohmann::json j = to_json(r);
        j["n"] = opt.n;
        j["seed"] = opt.seed;
        out << j.dump(2) << "\n";
    } else {
        out << "samples: " << r.samples << " (n=" << opt.n << ", seed=" << opt.seed << ")\n";
        out << "family members: " << r.members << "\n";
        out << "nonmembers: " << r.nonmembers << "\n";
        out << "indeterminate: " << r.indeterminate << "\n";
        out << "member fraction: " << r.members << "/" << r.samples << "\n";
        out << "members certified DGS: " << r.member_certified << "\n";
        out << "members blocked at the level-2 scan: " << r.member_level2_open << "\n";
        out << "members with inconsistent ledgers: " << r.member_inconsistent << "\n";
    }
    return r.member_inconsistent == 0 ? 0 : 1;
}

}  // namespace dgs
