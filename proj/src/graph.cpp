#include "dgs/graph.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "dgs/errors.hpp"

namespace dgs {

Graph::Graph(int n) : n_(n), adj_(n, 0) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("vertex count must be in [1, 62], got " + std::to_string(n));
}

int Graph::edge_count() const {
    int total = 0;
    for (auto row : adj_) total += std::popcount(row);
    return total / 2;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("vertex out of range");
    adj_[u] |= std::uint64_t(1) << v;
    adj_[v] |= std::uint64_t(1) << u;
}

namespace {

std::string_view strip_record_terminator(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    return text;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    text = strip_record_terminator(text);
    if (text.empty()) throw ParseError("empty graph6 record", 0);

    const unsigned char header = static_cast<unsigned char>(text[0]);
    if (header == 126)
        throw ParseError("graph6 long form (n > 62) is not supported", 0);
    if (header < 63 || header > 125)
        throw ParseError("invalid graph6 header byte", 0);
    const int n = header - 63;
    if (n == 0) throw ParseError("graph6 record with zero vertices", 0);

    const int bits = n * (n - 1) / 2;
    const std::size_t expected = 1 + (bits + 5) / 6;
    if (text.size() < expected)
        throw ParseError("truncated graph6 record", text.size());
    if (text.size() > expected)
        throw ParseError("trailing data after graph6 record", expected);

    Graph g(n);
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            const std::size_t byte = 1 + k / 6;
            const unsigned char ch = static_cast<unsigned char>(text[byte]);
            if (ch < 63 || ch > 126) throw ParseError("graph6 byte out of range", byte);
            const int group = ch - 63;
            if ((group >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    // padding bits of the last group must be zero in a canonical record
    for (int b = bits; b % 6 != 0; ++b) {
        const std::size_t byte = 1 + b / 6;
        const int group = static_cast<unsigned char>(text[byte]) - 63;
        if ((group >> (5 - b % 6)) & 1)
            throw ParseError("nonzero padding bits in graph6 record", byte);
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    if (n > Graph::kMaxVertices)
        throw std::invalid_argument("graph6 short form supports at most 62 vertices");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int group = 0, fill = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++fill == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = 0;
                fill = 0;
            }
        }
    if (fill) out.push_back(static_cast<char>(63 + (group << (6 - fill))));
    return out;
}

Graph parse_adjacency_text(std::string_view text) {
    std::vector<std::string> rows;
    std::string current;
    for (char ch : text) {
        if (ch == '\n') {
            if (!current.empty()) rows.push_back(std::move(current));
            current.clear();
        } else if (ch == '0' || ch == '1') {
            current.push_back(ch);
        } else if (ch == ' ' || ch == '\t' || ch == '\r') {
            // separators are free-form
        } else {
            throw std::invalid_argument(std::string("unexpected symbol '") + ch +
                                        "' in adjacency text (row " +
                                        std::to_string(rows.size() + 1) + ")");
        }
    }
    if (!current.empty()) rows.push_back(std::move(current));

    const std::size_t n = rows.size();
    if (n == 0) throw std::invalid_argument("adjacency text contains no rows");
    for (std::size_t i = 0; i < n; ++i)
        if (rows[i].size() != n)
            throw std::invalid_argument("row " + std::to_string(i + 1) + " has " +
                                        std::to_string(rows[i].size()) + " entries, expected " +
                                        std::to_string(n));

    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i][i] != '0')
            throw std::invalid_argument("nonzero diagonal at row " + std::to_string(i + 1));
        for (std::size_t j = i + 1; j < n; ++j)
            if (rows[i][j] != rows[j][i])
                throw std::invalid_argument("asymmetric entries at row " + std::to_string(i + 1) +
                                            ", column " + std::to_string(j + 1));
    }

    Graph g(static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rows[i][j] == '1') g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

std::string emit_adjacency_text(const Graph& g) {
    std::ostringstream out;
    for (int i = 0; i < g.order(); ++i) {
        for (int j = 0; j < g.order(); ++j) {
            if (j) out << ' ';
            out << (g.has_edge(i, j) ? '1' : '0');
        }
        out << '\n';
    }
    return out.str();
}

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph c(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.has_edge(i, j)) c.add_edge(i, j);
    return c;
}

IntMatrix adjacency_matrix(const Graph& g) {
    const int n = g.order();
    IntMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.has_edge(i, j)) a(i, j) = 1;
    return a;
}

std::pair<IntPolynomial, IntPolynomial> generalized_charpoly(const Graph& g) {
    return {char_poly(adjacency_matrix(g)), char_poly(adjacency_matrix(complement(g)))};
}

Graph relabeled(const Graph& g, std::span<const int> perm) {
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permutation size mismatch");
    Graph h(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.has_edge(i, j)) h.add_edge(perm[i], perm[j]);
    return h;
}

}  // namespace dgs
