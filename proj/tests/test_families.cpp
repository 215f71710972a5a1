#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "lamin/canonical.hpp"
#include "lamin/families.hpp"
#include "lamin/graph.hpp"

using namespace lamin;

namespace {

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d(static_cast<size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) d[static_cast<size_t>(v)] = g.degree(v);
    std::sort(d.rbegin(), d.rend());
    return d;
}

}  // namespace

TEST_CASE("star") {
    Graph s = star(5);
    REQUIRE(s.order() == 5);
    REQUIRE(s.edge_count() == 4);
    REQUIRE(s.degree(0) == 4);
    for (int v = 1; v < 5; ++v) REQUIRE(s.degree(v) == 1);
    REQUIRE_THROWS_AS(star(1), std::invalid_argument);
}

TEST_CASE("cycle and complete") {
    REQUIRE(cycle(3) == complete(3));
    REQUIRE(complete(1).order() == 1);
    REQUIRE(complete(1).edge_count() == 0);
    REQUIRE(cycle(6).edge_count() == 6);
    REQUIRE(complete(6).edge_count() == 15);
    REQUIRE_THROWS_AS(cycle(2), std::invalid_argument);
    REQUIRE_THROWS_AS(complete(0), std::invalid_argument);
}

TEST_CASE("s3") {
    REQUIRE(s3(3).graph == complete(3));

    LabeledFamilyGraph f = s3(4);
    REQUIRE(f.graph.order() == 4);
    REQUIRE(f.graph.edge_count() == 4);
    REQUIRE(is_unicyclic(f.graph));
    // a triangle with one pendant vertex
    REQUIRE(degree_sequence(f.graph) == std::vector<int>{3, 2, 2, 1});
    REQUIRE(f.roles.at("center") == std::vector<int>{0});
    REQUIRE(f.roles.at("triangle") == std::vector<int>{0, 1, 2});

    for (int n = 5; n <= 12; ++n) {
        REQUIRE(is_unicyclic(s3(n).graph));
        REQUIRE(s3(n).graph.degree(0) == n - 1);
    }
    REQUIRE_THROWS_AS(s3(2), std::invalid_argument);
}

TEST_CASE("complement of s3 isolates the dominating vertex") {
    for (int n = 4; n <= 9; ++n) {
        Graph c = complement(s3(n).graph);
        int isolated = 0;
        for (int v = 0; v < n; ++v) isolated += c.degree(v) == 0;
        REQUIRE(isolated == 1);
        REQUIRE(c.degree(0) == 0);
    }
}

TEST_CASE("u_pq") {
    LabeledFamilyGraph f = u_pq(1, 3);
    REQUIRE(f.graph.order() == 6);
    REQUIRE(is_unicyclic(f.graph));
    REQUIRE(degree_sequence(f.graph) == std::vector<int>{3, 2, 2, 2, 2, 1});

    for (int p = 1; p <= 6; ++p) {
        for (int q = 3; q <= 6; ++q) {
            LabeledFamilyGraph u = u_pq(p, q);
            const int n = p + q + 2;
            REQUIRE(u.graph.order() == n);
            REQUIRE(is_unicyclic(u.graph));
            REQUIRE(u.roles.at("v1").size() == static_cast<size_t>(p - 1));
            REQUIRE(u.roles.at("v6").size() == 2);
            REQUIRE(u.roles.at("v7").size() == static_cast<size_t>(q - 3));
            const int v2 = u.roles.at("v2").front();
            const int v5 = u.roles.at("v5").front();
            REQUIRE(u.graph.degree(v2) == p);
            REQUIRE(u.graph.degree(v5) == q);
            for (int leaf : u.roles.at("v1")) REQUIRE(u.graph.degree(leaf) == 1);
            for (int leaf : u.roles.at("v7")) REQUIRE(u.graph.degree(leaf) == 1);
            // the unique cycle is the triangle on v5 and the two v6 vertices
            const auto& v6 = u.roles.at("v6");
            REQUIRE(u.graph.adjacent(v6[0], v6[1]));
            REQUIRE(u.graph.adjacent(v5, v6[0]));
            REQUIRE(u.graph.adjacent(v5, v6[1]));
        }
    }
    REQUIRE_THROWS_AS(u_pq(0, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(u_pq(1, 2), std::invalid_argument);
}

TEST_CASE("u_prime") {
    LabeledFamilyGraph f = u_prime(1);
    REQUIRE(f.graph.order() == 5);
    REQUIRE(is_unicyclic(f.graph));
    // a triangle with a path of length two attached
    REQUIRE(degree_sequence(f.graph) == std::vector<int>{3, 2, 2, 2, 1});

    for (int p = 1; p <= 8; ++p) {
        LabeledFamilyGraph u = u_prime(p);
        REQUIRE(u.graph.order() == p + 4);
        REQUIRE(is_unicyclic(u.graph));
        REQUIRE(u.roles.at("u1").size() == static_cast<size_t>(p - 1));
        REQUIRE(u.graph.degree(u.roles.at("u2").front()) == p);
        const auto& u5 = u.roles.at("u5");
        REQUIRE(u.graph.adjacent(u5[0], u5[1]));
    }
    REQUIRE_THROWS_AS(u_prime(0), std::invalid_argument);
}

TEST_CASE("rebuilding a family member reproduces its canonical form") {
    for (int n = 4; n <= 10; ++n) {
        REQUIRE(canonical_key(s3(n).graph) == canonical_key(s3(n).graph));
        REQUIRE(canonical_key(star(n)) == canonical_key(star(n)));
    }
    for (int p = 1; p <= 4; ++p) {
        REQUIRE(canonical_key(u_prime(p).graph) == canonical_key(u_prime(p).graph));
        for (int q = 3; q <= 5; ++q) {
            REQUIRE(canonical_key(u_pq(p, q).graph) == canonical_key(u_pq(p, q).graph));
        }
    }
    // same order, different shapes
    REQUIRE(canonical_key(u_pq(2, 3).graph) != canonical_key(u_prime(3).graph));
}
