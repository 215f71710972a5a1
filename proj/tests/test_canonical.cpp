#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "lamin/canonical.hpp"
#include "lamin/families.hpp"
#include "oracles.hpp"

using namespace lamin;

TEST_CASE("canonical key is a labeling invariant") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 400; ++t) {
        const int n = 2 + static_cast<int>(rng() % 8);
        Graph g = oracles::random_graph(n, rng);
        std::vector<int> perm(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        REQUIRE(canonical_key(g) == canonical_key(g.relabeled(perm)));
    }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
    // C4 and the star-plus-edge graph share the degree-based invariants a
    // refinement pass alone would see only after individualization
    Graph s34 = s3(4).graph;
    REQUIRE(canonical_key(cycle(4)) != canonical_key(s34));
    REQUIRE_FALSE(isomorphic(cycle(4), s34));
    REQUIRE(isomorphic(cycle(4), cycle(4).relabeled({2, 3, 0, 1})));
}

TEST_CASE("canonical graph is a fixed point") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 100; ++t) {
        const int n = 2 + static_cast<int>(rng() % 8);
        Graph g = oracles::random_graph(n, rng);
        Graph c = canonical_graph(g);
        REQUIRE(isomorphic(c, g));
        REQUIRE(canonical_graph(c) == c);
        REQUIRE(canonical_key(c) == canonical_key(g));
    }
}

TEST_CASE("key partition agrees with the all-permutations oracle") {
    // the canonical key need not equal the minimum over every labeling, but
    // the two must induce the same partition into isomorphism classes
    for (int n = 2; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        std::map<std::string, std::set<std::string>> fibers;
        std::set<std::string> classes;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            Graph g = oracles::graph_from_mask(n, mask);
            fibers[oracles::brute_min_key(g)].insert(canonical_key(g));
            classes.insert(canonical_key(g));
        }
        std::set<std::string> seen;
        for (const auto& [brute, keys] : fibers) {
            REQUIRE(keys.size() == 1);  // oracle class -> single key
            REQUIRE(seen.insert(*keys.begin()).second);  // distinct classes -> distinct keys
        }
        REQUIRE(classes.size() == fibers.size());
        if (n == 5) REQUIRE(classes.size() == 34);
    }
}

TEST_CASE("labeled unicyclic graphs on four vertices form two classes") {
    std::set<std::string> keys;
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        Graph g = oracles::graph_from_mask(4, mask);
        if (is_unicyclic(g)) keys.insert(canonical_key(g));
    }
    REQUIRE(keys.size() == 2);  // C4 and the triangle with a pendant vertex
    REQUIRE(keys.count(canonical_key(cycle(4))) == 1);
    REQUIRE(keys.count(canonical_key(s3(4).graph)) == 1);
}

TEST_CASE("order bound") {
    REQUIRE(kMaxCanonicalOrder >= 12);
    REQUIRE_THROWS_AS(canonical_key(Graph(kMaxCanonicalOrder + 1)), std::invalid_argument);
    // at the bound itself the computation still runs
    REQUIRE(canonical_key(cycle(kMaxCanonicalOrder)).size() ==
            1 + static_cast<size_t>((kMaxCanonicalOrder * (kMaxCanonicalOrder - 1) / 2 + 7) / 8));
}
