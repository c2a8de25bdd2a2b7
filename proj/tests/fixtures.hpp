#pragma once

// Shared test fixtures: three worked sample graphs with fully known walk
// arithmetic, a level-3 conjugator for the third one, and a constructed
// level-2 cospectral pair.

#include <array>
#include <set>

#include "dgs/graph.hpp"
#include "dgs/qmatrix.hpp"

namespace fixtures {

// 12 vertices; certified DGS; d_12 = 2 * 17 * 67 * 8054231.
inline constexpr const char* kSample12 = R"(
0 1 1 0 0 1 0 0 1 0 1 1
1 0 0 0 0 0 0 0 1 1 0 1
1 0 0 0 0 1 0 0 1 0 1 0
0 0 0 0 1 0 0 1 0 1 0 0
0 0 0 1 0 1 0 0 0 0 0 1
1 0 1 0 1 0 1 1 0 1 1 0
0 0 0 0 0 1 0 0 1 1 1 0
0 0 0 1 0 1 0 0 1 0 1 0
1 1 1 0 0 0 1 1 0 0 0 0
0 1 0 1 0 1 1 0 0 0 0 1
1 0 1 0 0 1 1 1 0 0 0 1
1 1 0 0 1 0 0 0 0 1 1 0
)";

// 13 vertices; certified DGS; d_13 = 2 * 3^2 * 5 * 197 * 263 * 5821.
inline constexpr const char* kSample13 = R"(
0 1 0 0 1 1 0 0 1 1 0 0 1
1 0 1 1 0 1 1 0 0 0 0 0 0
0 1 0 1 0 0 1 1 1 0 0 1 1
0 1 1 0 1 0 1 0 0 0 1 1 1
1 0 0 1 0 0 0 1 1 1 0 0 1
1 1 0 0 0 0 1 1 0 0 0 1 1
0 1 1 1 0 1 0 0 0 0 1 1 0
0 0 1 0 1 1 0 0 0 1 1 0 1
1 0 1 0 1 0 0 0 0 1 0 0 0
1 0 0 0 1 0 0 1 1 0 1 1 0
0 0 0 1 0 0 1 1 0 1 0 0 1
0 0 1 1 0 1 1 0 0 1 0 0 1
1 0 1 1 1 1 0 1 0 0 1 1 0
)";

// 12 vertices; det(W) = 2^6 * 3^2 * 157 * 1361 * 2237; the exponent of 3
// keeps the square-free rule from deciding, the isotropy test finds an
// isotropic vector mod 3, and indeed kOpen12Q below conjugates it to a
// nonisomorphic graph with level 3.
inline constexpr const char* kOpen12 = R"(
0 0 0 0 0 1 0 1 0 0 1 0
0 0 1 0 1 0 1 0 1 0 1 1
0 1 0 1 1 0 1 1 0 0 1 0
0 0 1 0 1 0 1 0 0 0 1 1
0 1 1 1 0 1 0 1 0 0 0 1
1 0 0 0 1 0 1 1 1 0 1 0
0 1 1 1 0 1 0 1 1 0 1 1
1 0 1 0 1 1 1 0 1 1 0 0
0 1 0 0 0 1 1 1 0 0 0 1
0 0 0 0 0 0 0 1 0 0 1 1
1 1 1 1 0 1 1 0 0 1 0 1
0 1 0 1 1 0 1 0 1 1 1 0
)";

inline constexpr const char* kOpen12Q = R"(12 3
0 0 0 0 0 0 3 0 0 0 0 0
2 -1 -1 1 1 1 0 0 0 0 0 0
0 0 0 0 0 0 0 3 0 0 0 0
0 0 0 0 0 0 0 0 3 0 0 0
0 0 0 0 0 0 0 0 0 3 0 0
1 1 1 2 -1 -1 0 0 0 0 0 0
-1 2 -1 1 1 1 0 0 0 0 0 0
-1 -1 2 1 1 1 0 0 0 0 0 0
1 1 1 -1 2 -1 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 3 0
0 0 0 0 0 0 0 0 0 0 0 3
1 1 1 -1 -1 2 0 0 0 0 0 0
)";

// Frozen walk arithmetic of the three samples.
inline constexpr const char* kSample12Det = "587121222976";     // 2^6 * 17 * 67 * 8054231
inline constexpr const char* kSample12Dn = "18347538218";       // 2 * 17 * 67 * 8054231
inline constexpr const char* kSample13Det = "-868584473280";    // -2^6 * 3^2 * 5 * ...
inline constexpr const char* kSample13Dn = "27143264790";       // 2 * 3^2 * 5 * 197 * 263 * 5821
inline constexpr const char* kOpen12Det = "275325378624";       // 2^6 * 3^2 * 157 * 1361 * 2237

// The 15 weight-4 supports retained for kSample12 (0-based, each sorted).
inline const std::set<std::array<int, 4>> kSample12Supports = {
    {0, 2, 4, 11}, {0, 2, 6, 10}, {0, 2, 8, 9},  {0, 4, 6, 9},  {0, 4, 8, 10},
    {0, 6, 8, 11}, {0, 9, 10, 11}, {1, 3, 5, 7}, {2, 4, 6, 8},  {2, 4, 9, 10},
    {2, 6, 9, 11}, {2, 8, 10, 11}, {4, 6, 10, 11}, {4, 8, 9, 11}, {6, 8, 9, 10}};

// A controllable graph on 8 vertices with a genuine level-2 conjugate mate:
// vertices 0..3 are independent and every other vertex sees 0, 2 or 4 of
// them, so the half-block matrix from level2_block_q conjugates the
// adjacency matrix to another 0/1 matrix.
inline constexpr const char* kLevel2PairG = "G?NzAk";
inline constexpr const char* kLevel2PairH = "G?N{ak";

inline dgs::RationalOrthogonal level2_block_q(int n) {
    dgs::IntMatrix scaled(n, n);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) scaled(i, j) = (j == 3 - i) ? -1 : 1;
    for (int i = 4; i < n; ++i) scaled(i, i) = 2;
    return dgs::RationalOrthogonal(std::move(scaled), 2);
}

inline dgs::Graph sample12() { return dgs::parse_adjacency_text(kSample12); }
inline dgs::Graph sample13() { return dgs::parse_adjacency_text(kSample13); }
inline dgs::Graph open12() { return dgs::parse_adjacency_text(kOpen12); }

inline dgs::Graph path(int n) {
    dgs::Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline dgs::Graph cycle(int n) {
    dgs::Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline dgs::Graph complete(int n) {
    dgs::Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline dgs::Graph empty(int n) { return dgs::Graph(n); }

inline dgs::Graph complete_bipartite(int a, int b) {
    dgs::Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

}  // namespace fixtures
