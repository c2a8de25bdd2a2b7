#include "dgs/exclusion.hpp"

#include <chrono>
#include <stdexcept>

#include "dgs/factor.hpp"

namespace dgs {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Integer dot_mod_p(const std::vector<Integer>& a, const std::vector<Integer>& b, const Integer& p) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return mod_floor(s, p);
}

void require_odd_prime_divisor(const WalkProfile& profile, const Integer& p,
                               const char* operation) {
    if (p == 2) throw std::invalid_argument(std::string(operation) + " applies to odd primes only");
    if (!is_prime(p)) throw std::invalid_argument(std::string(operation) + ": p must be prime");
    if (profile.dn() % p != 0)
        throw std::invalid_argument(std::string(operation) + ": " + p.str() +
                                    " does not divide d_n");
}

}  // namespace

PrimeStatus exclude_by_squarefree(const WalkProfile& profile, const Integer& p) {
    require_odd_prime_divisor(profile, p, "square-free exclusion");
    if (!profile.controllable)
        throw std::invalid_argument("square-free exclusion needs a controllable graph");

    PrimeStatus st;
    st.prime = p;
    const unsigned v = p_adic_valuation(profile.det, p);
    if (v == 1) {
        st.state = PrimeState::excluded;
        st.rule = ExclusionRule::squarefree;
        st.detail = "det(W) is exactly divisible by " + p.str();
    } else {
        st.state = PrimeState::open;
        st.detail = "exponent of " + p.str() + " in det(W) is " + std::to_string(v);
    }
    return st;
}

PrimeStatus exclude_by_isotropy(const Graph& g, const WalkProfile& profile, const Integer& p) {
    require_odd_prime_divisor(profile, p, "isotropy exclusion");
    (void)g;

    PrimeStatus st;
    st.prime = p;

    const auto basis = nullspace_mod_p(profile.walk_matrix.transposed(), p);
    if (basis.empty())
        throw std::invalid_argument("W^T has full rank mod " + p.str() +
                                    ", yet p divides d_n: inconsistent profile");

    if (basis.size() == 1) {
        const auto& xi = basis[0];
        const Integer norm = dot_mod_p(xi, xi, p);
        if (norm != 0) {
            st.state = PrimeState::excluded;
            st.rule = ExclusionRule::isotropy;
            st.witness = xi;
            st.detail = "nullspace generator has xi^T xi = " + norm.str() + " != 0 (mod " +
                        p.str() + ")";
        } else {
            st.state = PrimeState::open;
            st.witness = xi;
            st.detail = "nullspace generator is isotropic mod " + p.str();
        }
        return st;
    }

    if (basis.size() == 2) {
        // Scan the p+1 projective lines of the plane span{b0, b1}. With
        // a = b0^T b0, b = b0^T b1, c = b1^T b1 the squared length of
        // b0 + t*b1 is a + 2bt + ct^2, so each line costs O(1).
        const Integer a = dot_mod_p(basis[0], basis[0], p);
        const Integer b = dot_mod_p(basis[0], basis[1], p);
        const Integer c = dot_mod_p(basis[1], basis[1], p);
        std::vector<Integer> isotropic;
        if (c == 0) {
            isotropic = basis[1];
        } else {
            for (Integer t = 0; t < p; ++t) {
                if (mod_floor(a + 2 * b * t + c * t * t, p) == 0) {
                    isotropic.resize(basis[0].size());
                    for (std::size_t i = 0; i < isotropic.size(); ++i)
                        isotropic[i] = mod_floor(basis[0][i] + t * basis[1][i], p);
                    break;
                }
            }
        }
        if (isotropic.empty()) {
            st.state = PrimeState::excluded;
            st.rule = ExclusionRule::isotropy;
            st.detail = "no isotropic line in the 2-dimensional nullspace mod " + p.str();
        } else {
            st.state = PrimeState::open;
            st.witness = std::move(isotropic);
            st.detail = "isotropic vector found in the 2-dimensional nullspace mod " + p.str();
        }
        return st;
    }

    // A quadratic form restricted to a space of dimension >= 3 over F_p has a
    // nontrivial zero, so exclusion is impossible; skip the enumeration.
    st.state = PrimeState::open;
    st.detail = "nullspace mod " + p.str() + " has dimension " + std::to_string(basis.size()) +
                " >= 3; an isotropic vector always exists";
    return st;
}

std::pair<PrimeStatus, std::vector<Level2Candidate>> exclude_level2(const Graph& g,
                                                                    const WalkProfile& profile) {
    if (!profile.controllable)
        throw std::invalid_argument("level-2 exclusion needs a controllable graph");

    PrimeStatus st;
    st.prime = 2;
    std::vector<Level2Candidate> candidates;

    const int n = g.order();
    if (n < 4) {
        st.state = PrimeState::excluded;
        st.rule = ExclusionRule::level2;
        st.detail = "no weight-4 vectors exist on " + std::to_string(n) + " vertices";
        return {st, candidates};
    }

    // Rows of W mod 2 as bitmasks; u is retained iff the rows indexed by its
    // support XOR to zero.
    std::vector<std::uint64_t> row_bits(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((profile.walk_matrix(i, j) & 1) != 0) row_bits[i] |= std::uint64_t(1) << j;

    // Powers of A mod 4, k = 1..n-1.
    const IntMatrix a = adjacency_matrix(g);
    std::vector<std::vector<std::uint8_t>> pow4;
    {
        IntMatrix ak = a;
        for (int k = 1; k < n; ++k) {
            std::vector<std::uint8_t> red(n * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    red[i * n + j] = static_cast<std::uint8_t>(ak(i, j) & 3);
            pow4.push_back(std::move(red));
            if (k + 1 < n) ak = ak * a;
        }
    }

    bool any_pass = false;
    for (int v0 = 0; v0 < n; ++v0)
        for (int v1 = v0 + 1; v1 < n; ++v1)
            for (int v2 = v1 + 1; v2 < n; ++v2)
                for (int v3 = v2 + 1; v3 < n; ++v3) {
                    if ((row_bits[v0] ^ row_bits[v1] ^ row_bits[v2] ^ row_bits[v3]) != 0) continue;
                    Level2Candidate cand{{v0, v1, v2, v3}, true};
                    for (int k = 0; k + 1 < n && cand.passes_power_test; ++k) {
                        unsigned s = 0;
                        for (int x : cand.support)
                            for (int y : cand.support) s += pow4[k][x * n + y];
                        if (s % 4 != 0) cand.passes_power_test = false;
                    }
                    any_pass = any_pass || cand.passes_power_test;
                    candidates.push_back(cand);
                }

    if (any_pass) {
        st.state = PrimeState::open;
        st.detail = "a retained weight-4 vector satisfies all power congruences";
    } else {
        st.state = PrimeState::excluded;
        st.rule = ExclusionRule::level2;
        st.detail = std::to_string(candidates.size()) +
                    " retained weight-4 vectors, none passes the power congruences";
    }
    return {st, candidates};
}

CertificationReport certify(const Graph& g, std::uint64_t effort_bound) {
    const auto t0 = std::chrono::steady_clock::now();
    CertificationReport report;
    report.profile = profile(g, effort_bound);
    report.profile_seconds = seconds_since(t0);
    const WalkProfile& prof = report.profile;

    if (!prof.controllable) {
        report.verdict = Verdict::not_controllable;
        report.level2.prime = 2;
        report.level2.detail = "not applicable";
        report.total_seconds = seconds_since(t0);
        return report;
    }

    const auto t1 = std::chrono::steady_clock::now();
    bool all_odd_excluded = true;
    for (const auto& [p, e] : prof.dn_factorization->factors) {
        if (p == 2) continue;
        PrimeStatus st = exclude_by_squarefree(prof, p);
        if (st.state == PrimeState::open) st = exclude_by_isotropy(g, prof, p);
        if (st.state != PrimeState::excluded) all_odd_excluded = false;
        report.primes.push_back(std::move(st));
    }
    if (!prof.dn_factorization->complete) {
        PrimeStatus st;
        st.prime = prof.dn_factorization->residual;
        st.state = PrimeState::unknown;
        st.detail = "composite residual of d_n; its prime divisors were not identified "
                    "within the effort bound";
        all_odd_excluded = false;
        report.primes.push_back(std::move(st));
    }
    report.primes_seconds = seconds_since(t1);

    const auto t2 = std::chrono::steady_clock::now();
    const unsigned v2 = p_adic_valuation(prof.dn(), 2);
    report.level2.prime = 2;
    if (v2 == 0) {
        // only d_n = 1 lands here; a level dividing 1 is already trivial
        report.level2.state = PrimeState::excluded;
        report.level2.rule = ExclusionRule::level2;
        report.level2.detail = "2 does not divide d_n";
    } else if (v2 >= 2) {
        report.level2.state = PrimeState::unknown;
        report.level2.detail =
            "2^" + std::to_string(v2) + " divides d_n; no criterion applies";
    } else if (!all_odd_excluded) {
        report.level2.state = PrimeState::unknown;
        report.level2.detail = "level-2 scan not run: an odd prime is unresolved";
    } else {
        auto [st, candidates] = exclude_level2(g, prof);
        report.level2 = std::move(st);
        report.level2_candidates = std::move(candidates);
    }
    report.level2_seconds = seconds_since(t2);

    const bool certified = all_odd_excluded && report.level2.state == PrimeState::excluded;
    report.verdict = certified ? Verdict::certified_dgs : Verdict::undecided;
    report.total_seconds = seconds_since(t0);
    return report;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::certified_dgs: return "CERTIFIED_DGS";
        case Verdict::undecided: return "UNDECIDED";
        case Verdict::not_controllable: return "NOT_CONTROLLABLE";
    }
    return "?";
}

const char* to_string(PrimeState s) {
    switch (s) {
        case PrimeState::excluded: return "EXCLUDED";
        case PrimeState::open: return "OPEN";
        case PrimeState::unknown: return "UNKNOWN";
    }
    return "?";
}

const char* to_string(ExclusionRule r) {
    switch (r) {
        case ExclusionRule::none: return "NONE";
        case ExclusionRule::squarefree: return "SQUAREFREE";
        case ExclusionRule::isotropy: return "ISOTROPY";
        case ExclusionRule::level2: return "LEVEL2";
    }
    return "?";
}

}  // namespace dgs
