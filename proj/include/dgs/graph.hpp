#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dgs/matrix.hpp"
#include "dgs/poly.hpp"

namespace dgs {

// Simple undirected graph on labeled vertices 0..n-1, adjacency kept as one
// bitmask per vertex (n <= 62, the graph6 short-form range).
class Graph {
public:
    static constexpr int kMaxVertices = 62;

    explicit Graph(int n);

    int order() const { return n_; }
    int edge_count() const;
    int degree(int v) const;

    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
    void add_edge(int u, int v);
    std::uint64_t neighbors(int v) const { return adj_[v]; }

    bool operator==(const Graph&) const = default;

private:
    int n_;
    std::vector<std::uint64_t> adj_;
};

// graph6 short form, bit-exact: header byte 63+n, then the upper triangle
// x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into 6-bit groups,
// each emitted as 63+value. Long-form headers (n > 62) are rejected.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// Whitespace-tolerant 0/1 adjacency matrix text; rejects ragged rows,
// asymmetry and nonzero diagonal, naming the offending row/column.
Graph parse_adjacency_text(std::string_view text);
std::string emit_adjacency_text(const Graph& g);

Graph complement(const Graph& g);

IntMatrix adjacency_matrix(const Graph& g);

// Characteristic polynomials of the graph and of its complement — together
// they carry the generalized spectrum, exactly.
std::pair<IntPolynomial, IntPolynomial> generalized_charpoly(const Graph& g);

// Image of g under the vertex relabeling v -> perm[v].
Graph relabeled(const Graph& g, std::span<const int> perm);

}  // namespace dgs
