#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "dgs/graph.hpp"
#include "dgs/walk.hpp"

namespace dgs {

enum class PrimeState { excluded, open, unknown };

enum class ExclusionRule { none, squarefree, isotropy, level2 };

// Per-prime entry of the certification ledger. EXCLUDED means the prime can
// divide no level; OPEN means the criterion genuinely fails (a witness
// exists); UNKNOWN means the question could not be decided.
struct PrimeStatus {
    Integer prime;
    PrimeState state = PrimeState::unknown;
    ExclusionRule rule = ExclusionRule::none;
    std::vector<Integer> witness;  // isotropic vector mod prime, when one exists
    std::string detail;
};

// Weight-4 indicator vector u with W^T u even; the flag records whether
// u^T A^k u = 0 (mod 4) held for every k = 1..n-1.
struct Level2Candidate {
    std::array<int, 4> support;
    bool passes_power_test = false;
};

enum class Verdict { certified_dgs, undecided, not_controllable };

struct CertificationReport {
    Verdict verdict = Verdict::undecided;
    WalkProfile profile;
    std::vector<PrimeStatus> primes;  // odd primes of d_n, plus residual entries
    PrimeStatus level2;               // the prime-2 entry
    std::vector<Level2Candidate> level2_candidates;
    double profile_seconds = 0, primes_seconds = 0, level2_seconds = 0, total_seconds = 0;
};

// Square-free rule: an odd prime with v_p(det W) == 1 divides no level.
// Returns OPEN (defer to the isotropy test) when the exponent exceeds one.
PrimeStatus exclude_by_squarefree(const WalkProfile& profile, const Integer& p);

// Isotropy rule: p divides a level only if W^T x = 0, x^T x = 0 (mod p) has a
// solution x != 0. Nullspace dimension 1 reduces to one inner product,
// dimension 2 to a projective scan of p+1 lines; dimension >= 3 always admits
// a nontrivial isotropic vector and stays OPEN.
PrimeStatus exclude_by_isotropy(const Graph& g, const WalkProfile& profile, const Integer& p);

// Level-2 rule: a level-2 conjugator forces a weight-4 0/1 vector u with
// W^T u even and u^T A^k u = 0 (mod 4) for all k; no such candidate means the
// level cannot be 2.
std::pair<PrimeStatus, std::vector<Level2Candidate>> exclude_level2(const Graph& g,
                                                                    const WalkProfile& profile);

CertificationReport certify(const Graph& g, std::uint64_t effort_bound = kDefaultFactorEffort);

const char* to_string(Verdict v);
const char* to_string(PrimeState s);
const char* to_string(ExclusionRule r);

}  // namespace dgs
