#include "dgs/report.hpp"

#include <sstream>

namespace dgs {

namespace {

FactorizationDoc factorization_doc(const Factorization& f) {
    FactorizationDoc doc;
    doc.sign = f.sign;
    for (const auto& [p, e] : f.factors) doc.factors.push_back({p.str(), e});
    doc.residual = f.residual.str();
    doc.complete = f.complete;
    return doc;
}

PrimeEntryDoc prime_doc(const PrimeStatus& st) {
    PrimeEntryDoc doc;
    doc.prime = st.prime.str();
    doc.state = to_string(st.state);
    doc.rule = to_string(st.rule);
    for (const auto& w : st.witness) doc.witness.push_back(w.str());
    doc.detail = st.detail;
    return doc;
}

nlohmann::json to_json(const FactorizationDoc& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : f.factors) terms.push_back({{"prime", t.prime}, {"exponent", t.exponent}});
    return {{"sign", f.sign}, {"factors", terms}, {"residual", f.residual},
            {"complete", f.complete}};
}

FactorizationDoc factorization_from_json(const nlohmann::json& j) {
    FactorizationDoc f;
    f.sign = j.at("sign").get<int>();
    for (const auto& t : j.at("factors"))
        f.factors.push_back({t.at("prime").get<std::string>(), t.at("exponent").get<unsigned>()});
    f.residual = j.at("residual").get<std::string>();
    f.complete = j.at("complete").get<bool>();
    return f;
}

nlohmann::json to_json(const PrimeEntryDoc& p) {
    return {{"prime", p.prime}, {"state", p.state}, {"rule", p.rule},
            {"witness", p.witness}, {"detail", p.detail}};
}

PrimeEntryDoc prime_from_json(const nlohmann::json& j) {
    PrimeEntryDoc p;
    p.prime = j.at("prime").get<std::string>();
    p.state = j.at("state").get<std::string>();
    p.rule = j.at("rule").get<std::string>();
    p.witness = j.at("witness").get<std::vector<std::string>>();
    p.detail = j.at("detail").get<std::string>();
    return p;
}

}  // namespace

ReportDocument make_report(const Graph& g, const CertificationReport& cert,
                           const std::string& input_format, const std::string& input_source,
                           bool include_timings) {
    ReportDocument doc;
    doc.input_format = input_format;
    doc.input_source = input_source;
    doc.graph6 = emit_graph6(g);
    doc.n = g.order();
    doc.edges = g.edge_count();

    const WalkProfile& prof = cert.profile;
    doc.controllable = prof.controllable;
    doc.det = prof.det.str();
    for (const auto& d : prof.snf_diagonal) doc.snf_diagonal.push_back(d.str());
    if (prof.dn_factorization) doc.dn_factorization = factorization_doc(*prof.dn_factorization);
    if (prof.det_factorization) doc.det_factorization = factorization_doc(*prof.det_factorization);
    doc.in_family = prof.in_fn ? (*prof.in_fn ? "true" : "false") : "unknown";

    for (const auto& st : cert.primes) doc.primes.push_back(prime_doc(st));
    doc.level2 = prime_doc(cert.level2);
    for (const auto& c : cert.level2_candidates)
        doc.level2_candidates.push_back({c.support, c.passes_power_test});

    doc.verdict = to_string(cert.verdict);
    if (include_timings)
        doc.timings = TimingsDoc{cert.profile_seconds, cert.primes_seconds, cert.level2_seconds,
                                 cert.total_seconds};
    return doc;
}

nlohmann::json to_json(const ReportDocument& doc) {
    nlohmann::json j;
    j["schema_version"] = doc.schema_version;
    j["tool"] = {{"name", doc.tool_name}, {"version", doc.tool_version}};
    j["input"] = {{"format", doc.input_format}, {"source", doc.input_source},
                  {"graph6", doc.graph6}};
    j["graph"] = {{"n", doc.n}, {"edges", doc.edges}};

    nlohmann::json prof;
    prof["controllable"] = doc.controllable;
    prof["det"] = doc.det;
    prof["snf_diagonal"] = doc.snf_diagonal;
    prof["dn_factorization"] =
        doc.dn_factorization ? to_json(*doc.dn_factorization) : nlohmann::json(nullptr);
    prof["det_factorization"] =
        doc.det_factorization ? to_json(*doc.det_factorization) : nlohmann::json(nullptr);
    prof["in_family"] = doc.in_family;
    j["profile"] = prof;

    nlohmann::json primes = nlohmann::json::array();
    for (const auto& p : doc.primes) primes.push_back(to_json(p));
    j["primes"] = primes;

    nlohmann::json level2 = to_json(doc.level2);
    nlohmann::json cands = nlohmann::json::array();
    for (const auto& c : doc.level2_candidates)
        cands.push_back({{"support", c.support}, {"passes", c.passes}});
    level2["candidates"] = cands;
    j["level2"] = level2;

    j["verdict"] = doc.verdict;
    if (doc.timings)
        j["timings"] = {{"profile_seconds", doc.timings->profile_seconds},
                        {"primes_seconds", doc.timings->primes_seconds},
                        {"level2_seconds", doc.timings->level2_seconds},
                        {"total_seconds", doc.timings->total_seconds}};
    return j;
}

ReportDocument report_from_json(const nlohmann::json& j) {
    ReportDocument doc;
    doc.schema_version = j.at("schema_version").get<int>();
    doc.tool_name = j.at("tool").at("name").get<std::string>();
    doc.tool_version = j.at("tool").at("version").get<std::string>();
    doc.input_format = j.at("input").at("format").get<std::string>();
    doc.input_source = j.at("input").at("source").get<std::string>();
    doc.graph6 = j.at("input").at("graph6").get<std::string>();
    doc.n = j.at("graph").at("n").get<int>();
    doc.edges = j.at("graph").at("edges").get<int>();

    const auto& prof = j.at("profile");
    doc.controllable = prof.at("controllable").get<bool>();
    doc.det = prof.at("det").get<std::string>();
    doc.snf_diagonal = prof.at("snf_diagonal").get<std::vector<std::string>>();
    if (!prof.at("dn_factorization").is_null())
        doc.dn_factorization = factorization_from_json(prof.at("dn_factorization"));
    if (!prof.at("det_factorization").is_null())
        doc.det_factorization = factorization_from_json(prof.at("det_factorization"));
    doc.in_family = prof.at("in_family").get<std::string>();

    for (const auto& p : j.at("primes")) doc.primes.push_back(prime_from_json(p));
    doc.level2 = prime_from_json(j.at("level2"));
    for (const auto& c : j.at("level2").at("candidates"))
        doc.level2_candidates.push_back(
            {c.at("support").get<std::array<int, 4>>(), c.at("passes").get<bool>()});

    doc.verdict = j.at("verdict").get<std::string>();
    if (j.contains("timings")) {
        const auto& t = j.at("timings");
        doc.timings = TimingsDoc{
            t.at("profile_seconds").get<double>(), t.at("primes_seconds").get<double>(),
            t.at("level2_seconds").get<double>(), t.at("total_seconds").get<double>()};
    }
    return doc;
}

namespace {

std::string factorization_str(const FactorizationDoc& f) {
    std::string out = f.sign < 0 ? "-" : "";
    bool first = true;
    for (const auto& [p, e] : f.factors) {
        if (!first) out += " * ";
        first = false;
        out += p;
        if (e > 1) out += "^" + std::to_string(e);
    }
    if (!f.complete) {
        if (!first) out += " * ";
        out += "[" + f.residual + " composite, unsplit]";
        first = false;
    }
    if (first) out += "1";
    return out;
}

}  // namespace

std::string render_text(const ReportDocument& doc) {
    std::ostringstream out;
    out << "graph: " << doc.graph6 << "  (n=" << doc.n << ", edges=" << doc.edges << ")\n";
    out << "controllable: " << (doc.controllable ? "yes" : "no") << "\n";
    if (doc.controllable) {
        out << "det(W) = " << doc.det;
        if (doc.det_factorization) out << " = " << factorization_str(*doc.det_factorization);
        out << "\n";
        out << "d_n    = " << doc.snf_diagonal.back();
        if (doc.dn_factorization) out << " = " << factorization_str(*doc.dn_factorization);
        out << "\n";
        out << "family membership (det test): " << doc.in_family << "\n";
        for (const auto& p : doc.primes) {
            out << "  p=" << p.prime << ": " << p.state;
            if (p.rule != "NONE") out << " [" << p.rule << "]";
            out << " -- " << p.detail << "\n";
        }
        out << "  p=2: " << doc.level2.state;
        if (doc.level2.rule != "NONE") out << " [" << doc.level2.rule << "]";
        out << " -- " << doc.level2.detail << "\n";
        if (!doc.level2_candidates.empty()) {
            out << "  level-2 candidates (" << doc.level2_candidates.size() << "):\n";
            for (const auto& c : doc.level2_candidates) {
                out << "    {" << c.support[0] << "," << c.support[1] << "," << c.support[2] << ","
                    << c.support[3] << "} " << (c.passes ? "passes" : "fails") << "\n";
            }
        }
    }
    out << "verdict: " << doc.verdict << "\n";
    if (doc.timings) out << "total time: " << doc.timings->total_seconds << " s\n";
    return out.str();
}

int exit_code(Verdict v) {
    switch (v) {
        case Verdict::certified_dgs: return 0;
        case Verdict::undecided: return 10;
        case Verdict::not_controllable: return 11;
    }
    return 1;
}

}  // namespace dgs
