#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dgs/errors.hpp"
#include "dgs/oracle.hpp"
#include "dgs/walk.hpp"
#include "fixtures.hpp"

using namespace dgs;

namespace {

Graph random_graph(int n, std::mt19937_64& rng) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() & 1) g.add_edge(i, j);
    return g;
}

}  // namespace

TEST_CASE("walk matrix construction") {
    CHECK(build_walk_matrix(fixtures::complete(1)) == IntMatrix::from_rows({{1}}));
    CHECK(build_walk_matrix(fixtures::complete(2)) == IntMatrix::from_rows({{1, 1}, {1, 1}}));
    CHECK(build_walk_matrix(fixtures::path(3)) ==
          IntMatrix::from_rows({{1, 1, 2}, {1, 2, 2}, {1, 1, 2}}));
    CHECK(det(build_walk_matrix(fixtures::path(3))) == 0);

    // columns are e, Ae, A^2 e, ...
    std::mt19937_64 rng(301);
    Graph g = random_graph(6, rng);
    IntMatrix w = build_walk_matrix(g);
    IntMatrix a = adjacency_matrix(g);
    std::vector<Integer> col(6, Integer(1));
    for (int j = 0; j < 6; ++j) {
        for (int i = 0; i < 6; ++i) CHECK(w(i, j) == col[i]);
        col = a * col;
    }
}

TEST_CASE("walk profiles of the worked samples") {
    WalkProfile p12 = profile(fixtures::sample12());
    CHECK(p12.controllable);
    CHECK(p12.det == Integer(fixtures::kSample12Det));
    CHECK(p12.dn() == Integer(fixtures::kSample12Dn));
    REQUIRE(p12.dn_factorization.has_value());
    CHECK(p12.dn_factorization->factors == std::vector<std::pair<Integer, unsigned>>{
                                               {2, 1}, {17, 1}, {67, 1}, {8054231, 1}});
    CHECK(p12.det_factorization->factors == std::vector<std::pair<Integer, unsigned>>{
                                                {2, 6}, {17, 1}, {67, 1}, {8054231, 1}});

    WalkProfile p13 = profile(fixtures::sample13());
    CHECK(p13.controllable);
    CHECK(p13.det == Integer(fixtures::kSample13Det));
    CHECK(p13.dn() == Integer(fixtures::kSample13Dn));
    CHECK(p13.dn_factorization->factors ==
          std::vector<std::pair<Integer, unsigned>>{
              {2, 1}, {3, 2}, {5, 1}, {197, 1}, {263, 1}, {5821, 1}});

    WalkProfile open = profile(fixtures::open12());
    CHECK(open.det == Integer(fixtures::kOpen12Det));
    CHECK(open.det_factorization->factors ==
          std::vector<std::pair<Integer, unsigned>>{
              {2, 6}, {3, 2}, {157, 1}, {1361, 1}, {2237, 1}});
}

TEST_CASE("non-controllable profiles carry no factorizations") {
    WalkProfile p = profile(fixtures::complete(2));
    CHECK_FALSE(p.controllable);
    CHECK(p.det == 0);
    CHECK_FALSE(p.dn_factorization.has_value());
    CHECK_FALSE(p.det_factorization.has_value());
    CHECK(p.in_fn.has_value());
    CHECK_FALSE(*p.in_fn);
    CHECK_FALSE(in_family_fn(p));
}

TEST_CASE("family membership of the samples") {
    CHECK(in_family_fn(profile(fixtures::sample12())));
    // the odd part of det carries a square of 3
    CHECK_FALSE(in_family_fn(profile(fixtures::open12())));
    CHECK_FALSE(in_family_fn(profile(fixtures::sample13())));
}

TEST_CASE("family membership refuses to guess from incomplete factorizations") {
    WalkProfile p = profile(fixtures::sample12());
    p.det_factorization->complete = false;
    p.det_factorization->residual = 35;
    p.in_fn.reset();
    CHECK_THROWS_AS(in_family_fn(p), IndeterminateError);
}

TEST_CASE("rank of W over F_2 is at most ceil(n/2), exhaustively to n=6") {
    for (int n = 1; n <= 6; ++n) {
        const std::size_t bound = (n + 1) / 2;
        for_each_labeled_graph(n, [&](const Graph& g) {
            REQUIRE(rank_mod_p(build_walk_matrix(g), 2) <= bound);
        });
    }
}

TEST_CASE("rank bound and determinant parity bound, randomized to n=16") {
    std::mt19937_64 rng(307);
    for (int rep = 0; rep < 150; ++rep) {
        const int n = 8 + int(rng() % 9);
        Graph g = random_graph(n, rng);
        IntMatrix w = build_walk_matrix(g);
        CHECK(rank_mod_p(w, 2) <= std::size_t((n + 1) / 2));
        const Integer d = det(w);
        if (d != 0) CHECK(p_adic_valuation(d, 2) >= unsigned(n / 2));
    }
    // and exhaustively on a small order
    for_each_labeled_graph(5, [&](const Graph& g) {
        const Integer d = det(build_walk_matrix(g));
        if (d != 0) REQUIRE(p_adic_valuation(d, 2) >= 2u);
    });
}

TEST_CASE("d_n is the least denominator scale of W^{-1}") {
    std::mt19937_64 rng(311);
    int checked = 0;
    for (int rep = 0; rep < 60 && checked < 12; ++rep) {
        const int n = 6 + int(rng() % 5);
        Graph g = random_graph(n, rng);
        WalkProfile p = profile(g);
        if (!p.controllable) continue;
        ++checked;
        RatMatrix inv = inverse_rational(p.walk_matrix);
        // d_n * W^{-1} integral
        for (std::size_t i = 0; i < inv.rows(); ++i)
            for (std::size_t j = 0; j < inv.cols(); ++j)
                CHECK(denominator(inv(i, j) * Rational(p.dn())) == 1);
        // dropping any prime of d_n breaks integrality
        for (const auto& [q, e] : p.dn_factorization->factors) {
            const Integer reduced = p.dn() / q;
            bool integral = true;
            for (std::size_t i = 0; i < inv.rows() && integral; ++i)
                for (std::size_t j = 0; j < inv.cols() && integral; ++j)
                    if (denominator(inv(i, j) * Rational(reduced)) != 1) integral = false;
            CHECK_FALSE(integral);
        }
    }
    CHECK(checked >= 12);
}

TEST_CASE("vertex-transitive graphs are never controllable") {
    for (const Graph& g : {fixtures::cycle(6), fixtures::cycle(8), fixtures::complete(5),
                           fixtures::complete(7), fixtures::complete_bipartite(3, 3)}) {
        CHECK(det(build_walk_matrix(g)) == 0);
    }
}
