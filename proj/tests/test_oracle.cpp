#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <sstream>

#include "dgs/errors.hpp"
#include "dgs/oracle.hpp"
#include "fixtures.hpp"
#include "test_oracles.hpp"

using namespace dgs;

namespace {

Graph random_graph(int n, std::mt19937_64& rng) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() & 1) g.add_edge(i, j);
    return g;
}

// Independent global isomorphism-class census: no spectrum bucketing, no
// fast charpoly. Returns one representative per class with its orbit size.
struct Census {
    std::vector<Graph> reps;
    std::vector<std::uint64_t> orbit_sizes;
};

Census global_census(int n) {
    Census census;
    // group candidates by (edges, sorted degree sequence) before iso checks
    std::map<std::vector<int>, std::vector<std::size_t>> by_invariant;
    for_each_labeled_graph(n, [&](const Graph& g) {
        std::vector<int> inv{g.edge_count()};
        for (int v = 0; v < n; ++v) inv.push_back(g.degree(v));
        std::sort(inv.begin() + 1, inv.end());
        auto& bucket = by_invariant[inv];
        for (std::size_t id : bucket) {
            if (is_isomorphic(census.reps[id], g)) {
                ++census.orbit_sizes[id];
                return;
            }
        }
        census.reps.push_back(g);
        census.orbit_sizes.push_back(1);
        bucket.push_back(census.reps.size() - 1);
    });
    return census;
}

const Census& census7() {
    static const Census c = global_census(7);
    return c;
}

}  // namespace

TEST_CASE("labeled enumeration counts and bounds") {
    int count2 = 0, count3 = 0, count5 = 0;
    for_each_labeled_graph(2, [&](const Graph&) { ++count2; });
    for_each_labeled_graph(3, [&](const Graph&) { ++count3; });
    for_each_labeled_graph(5, [&](const Graph&) { ++count5; });
    CHECK(count2 == 2);
    CHECK(count3 == 8);
    CHECK(count5 == 1024);
    CHECK(labeled_graph_count(7) == 2097152);
    CHECK_THROWS_AS(for_each_labeled_graph(8, [](const Graph&) {}), std::invalid_argument);

    // edge-mask round trip
    std::mt19937_64 rng(601);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 2 + int(rng() % 6);
        const std::uint64_t mask = rng() % labeled_graph_count(n);
        CHECK(edge_mask_of(graph_from_edge_mask(n, mask)) == mask);
    }
}

TEST_CASE("isomorphism decisions on fixed graphs") {
    Graph p3 = fixtures::path(3);
    Graph p3_relabeled(3);
    p3_relabeled.add_edge(1, 0);
    p3_relabeled.add_edge(0, 2);
    CHECK(is_isomorphic(p3, p3_relabeled));
    CHECK_FALSE(is_isomorphic(p3, fixtures::complete(3)));

    // same degree sequence, different components
    Graph two_triangles(6);
    for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})
        two_triangles.add_edge(a, b);
    CHECK_FALSE(is_isomorphic(fixtures::cycle(6), two_triangles));

    CHECK_FALSE(is_isomorphic(fixtures::path(3), fixtures::path(4)));  // size mismatch
}

TEST_CASE("isomorphism agrees with the full permutation search") {
    std::mt19937_64 rng(607);
    int agree_true = 0, agree_false = 0;
    for (int rep = 0; rep < 1000; ++rep) {
        const int n = 2 + int(rng() % 5);
        Graph g = random_graph(n, rng);
        Graph h(1);
        if (rng() & 1) {
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);
            h = relabeled(g, perm);
        } else {
            h = random_graph(n, rng);
        }
        const bool expected = refimpl::permutation_isomorphic(g, h);
        CHECK(is_isomorphic(g, h) == expected);
        (expected ? agree_true : agree_false)++;
    }
    CHECK(agree_true > 100);
    CHECK(agree_false > 100);
}

TEST_CASE("every graph on up to three vertices is determined") {
    for (int n = 1; n <= 3; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            MateReport r = find_gcs_mates(g);
            CHECK(r.is_dgs());
        });
}

TEST_CASE("smallest order with a generalized-cospectral mate is seven") {
    for (int n = 4; n <= 6; ++n) {
        ValidationReport r = cross_validate(n);
        CHECK(r.mate_classes == 0);
    }

    // Frozen census at n = 7: 1044 isomorphism classes, of which 40 share
    // their generalized spectrum with another class (20 disjoint pairs).
    ValidationReport r7 = cross_validate(7);
    CHECK(r7.iso_classes == 1044);
    CHECK(r7.mate_classes == 40);
    CHECK(r7.spectrum_buckets == 1024);
}

TEST_CASE("hash-free quadratic recount of the n=7 mate census") {
    // independent path: global census by backtracking isomorphism only, then
    // all-pairs comparison of exact big-integer polynomial pairs
    const Census& census = census7();
    CHECK(census.reps.size() == 1044);

    // orbit sizes must cover the labeled universe exactly
    std::uint64_t total = 0;
    for (auto s : census.orbit_sizes) total += s;
    CHECK(total == labeled_graph_count(7));

    std::vector<std::pair<IntPolynomial, IntPolynomial>> polys;
    polys.reserve(census.reps.size());
    for (const Graph& g : census.reps) polys.push_back(generalized_charpoly(g));

    std::size_t with_mate = 0, pairings = 0;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        bool any = false;
        for (std::size_t j = 0; j < polys.size(); ++j) {
            if (i == j || polys[i] != polys[j]) continue;
            any = true;
            if (i < j) ++pairings;
        }
        with_mate += any;
    }
    CHECK(with_mate == 40);
    CHECK(pairings == 20);
}

TEST_CASE("mate reports at order seven") {
    // spot check: take non-determined graphs from the census and validate
    // their MateReport invariants against the exhaustive search
    const Census& census = census7();
    std::vector<std::pair<IntPolynomial, IntPolynomial>> polys;
    for (const Graph& g : census.reps) polys.push_back(generalized_charpoly(g));

    int verified = 0;
    for (std::size_t i = 0; i < census.reps.size() && verified < 3; ++i) {
        bool has_mate = false;
        for (std::size_t j = 0; j < polys.size(); ++j)
            if (i != j && polys[i] == polys[j]) has_mate = true;
        if (!has_mate) continue;
        MateReport r = find_gcs_mates(census.reps[i]);
        CHECK_FALSE(r.is_dgs());
        REQUIRE(r.mates.size() == 1);
        CHECK(generalized_charpoly(r.mates[0]) == polys[i]);
        CHECK_FALSE(is_isomorphic(r.mates[0], census.reps[i]));

        // complement duality: the complement has exactly as many mates
        MateReport rc = find_gcs_mates(complement(census.reps[i]));
        CHECK(rc.mates.size() == r.mates.size());
        ++verified;
    }
    CHECK(verified == 3);
}

TEST_CASE("explicit universes work like the exhaustive one") {
    std::vector<Graph> universe;
    for_each_labeled_graph(5, [&](const Graph& g) { universe.push_back(g); });
    std::mt19937_64 rng(613);
    for (int rep = 0; rep < 10; ++rep) {
        Graph g = random_graph(5, rng);
        MateReport a = find_gcs_mates(g);
        MateReport b = find_gcs_mates(g, universe);
        CHECK(a.mates.size() == b.mates.size());
        CHECK(a.is_dgs() == b.is_dgs());
    }
    // universes may mix orders; foreign orders are ignored
    universe.push_back(fixtures::complete(3));
    Graph g = random_graph(5, rng);
    CHECK(find_gcs_mates(g, universe).mates.size() == find_gcs_mates(g).mates.size());
}

TEST_CASE("cross validation is clean through order six") {
    for (int n = 4; n <= 6; ++n) {
        ValidationReport r = cross_validate(n);
        CHECK(r.soundness_violations == 0);
        CHECK(r.violation_graph6.empty());
        CHECK(r.level_divides_failures == 0);
        CHECK(r.isotropy_witness_failures == 0);
        CHECK(r.level2_necessity_failures == 0);
        CHECK(r.labeled_graphs == labeled_graph_count(n));
    }
    // controllable graphs first appear at n = 6
    CHECK(cross_validate(5).controllable_classes == 0);
    CHECK(cross_validate(6).controllable_classes == 8);
}

TEST_CASE("graph6 stream ingestion") {
    {
        std::istringstream in("@\nA_\n");
        StreamStats stats;
        auto graphs = ingest_graph6_stream(in, /*strict=*/true, &stats);
        REQUIRE(graphs.size() == 2);
        CHECK(graphs[0].order() == 1);
        CHECK(graphs[1] == fixtures::complete(2));
        CHECK(stats.parsed == 2);
    }
    {
        std::istringstream in("");
        CHECK(ingest_graph6_stream(in, true).empty());
    }
    {
        // lenient mode skips the malformed middle line and records it
        std::istringstream in("@\n*bad*\nA_\n");
        StreamStats stats;
        auto graphs = ingest_graph6_stream(in, /*strict=*/false, &stats);
        CHECK(graphs.size() == 2);
        REQUIRE(stats.errors.size() == 1);
        CHECK(stats.errors[0].first == 2);
    }
    {
        std::istringstream in("@\n*bad*\nA_\n");
        CHECK_THROWS_AS(ingest_graph6_stream(in, /*strict=*/true), ParseError);
    }
    {
        // blank lines are ignored, order is preserved
        std::istringstream in("\nBw\n\n@\n");
        auto graphs = ingest_graph6_stream(in, true);
        REQUIRE(graphs.size() == 2);
        CHECK(graphs[0] == fixtures::complete(3));
        CHECK(graphs[1].order() == 1);
    }
}
