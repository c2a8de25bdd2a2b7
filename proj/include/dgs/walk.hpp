#pragma once

#include <optional>
#include <vector>

#include "dgs/factor.hpp"
#include "dgs/graph.hpp"
#include "dgs/matrix.hpp"

namespace dgs {

// Arithmetic profile of a graph's walk matrix W = [e, Ae, ..., A^{n-1}e].
struct WalkProfile {
    int n = 0;
    IntMatrix walk_matrix;
    Integer det;
    std::vector<Integer> snf_diagonal;
    // Absent when the graph is not controllable (det == 0 has no factorization).
    std::optional<Factorization> dn_factorization;
    std::optional<Factorization> det_factorization;
    bool controllable = false;
    // Unset when square-freeness cannot be certified from an incomplete
    // factorization.
    std::optional<bool> in_fn;

    const Integer& dn() const { return snf_diagonal.back(); }
};

IntMatrix build_walk_matrix(const Graph& g);

WalkProfile profile(const Graph& g, std::uint64_t effort_bound = kDefaultFactorEffort);

// Membership in the family of controllable graphs whose det(W) carries
// exactly floor(n/2) factors of two and a square-free odd part. Throws
// IndeterminateError when the factorization is incomplete.
bool in_family_fn(const WalkProfile& p);

}  // namespace dgs
