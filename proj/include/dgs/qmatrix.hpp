#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dgs/graph.hpp"
#include "dgs/matrix.hpp"

namespace dgs {

// Individual invariant failures, for reporting; empty means the pair
// (scaled, level) is a valid rational orthogonal matrix with row sum one.
std::vector<std::string> rational_orthogonal_violations(const IntMatrix& scaled,
                                                        const Integer& level);

// A rational orthogonal matrix Q with Qe = e, stored exactly as the integer
// matrix level*Q together with its level (the least common denominator).
class RationalOrthogonal {
public:
    // Validates orthogonality, row/column sums and level minimality; throws
    // std::invalid_argument listing every violated invariant.
    RationalOrthogonal(IntMatrix scaled, Integer level);

    static RationalOrthogonal from_rational(const RatMatrix& q);
    static RationalOrthogonal identity(std::size_t n);

    const IntMatrix& scaled() const { return scaled_; }
    const Integer& level() const { return level_; }
    std::size_t order() const { return scaled_.rows(); }
    RatMatrix rational() const;

    bool operator==(const RationalOrthogonal&) const = default;

private:
    IntMatrix scaled_;
    Integer level_;
};

// Least common denominator of the entries of q (all in lowest terms).
Integer level(const RatMatrix& q);

// Conjugates the adjacency matrix of g by q; returns the image graph when
// q^T A(g) q is again a symmetric 0/1 matrix with zero diagonal.
std::optional<Graph> check_membership(const RationalOrthogonal& q, const Graph& g);

// The unique rational orthogonal Q with Q^T A(g) Q = A(h) and Qe = e for
// controllable generalized-cospectral g, h; the conjugation identity is
// re-verified before returning.
RationalOrthogonal recover_q(const Graph& g, const Graph& h);

// Text format: first line "n level", then n rows of n integers (level*Q).
// parse_q_entries only reads the numbers; parse_q_text also validates.
std::pair<IntMatrix, Integer> parse_q_entries(std::string_view text);
RationalOrthogonal parse_q_text(std::string_view text);
std::string emit_q_text(const RationalOrthogonal& q);

}  // namespace dgs
