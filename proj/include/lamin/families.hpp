// families.hpp -- constructors for the named graph families.
//
// Deterministic vertex numbering throughout: star block first (center is
// always index 0), then the bridge vertices, then the far block. Role maps
// name the structural vertex classes so callers can reason about degrees
// and quotient partitions without re-deriving the layout.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace lamin {

struct LabeledFamilyGraph {
    Graph graph;
    std::map<std::string, std::vector<int>> roles;
};

/// K_{1,n-1}; center is vertex 0.
inline Graph star(int n) {
    if (n < 2) throw std::invalid_argument("star: order must be at least 2");
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(0, i);
    return g;
}

inline Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: order must be at least 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: order must be at least 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

/// Star K_{1,n-1} plus one edge between two pendant vertices: the unique
/// unicyclic graph with a dominating vertex and a triangle through it.
inline LabeledFamilyGraph s3(int n) {
    if (n < 3) throw std::invalid_argument("s3: order must be at least 3");
    Graph g = star(n);
    g.add_edge(1, 2);
    return {std::move(g), {{"center", {0}}, {"triangle", {0, 1, 2}}}};
}

/// Bridge a pendant of K_{1,p} to a pendant of the (q+1)-vertex triangle
/// star. Order p+q+2. Roles v1..v7 follow the structural classes:
///   v1 star pendants (p-1), v2 star center, v3 bridging star pendant,
///   v4 bridging pendant of the far block, v5 far center,
///   v6 triangle degree-2 pair, v7 far pendants (q-3).
inline LabeledFamilyGraph u_pq(int p, int q) {
    if (p < 1) throw std::invalid_argument("u_pq: p must be at least 1");
    if (q < 3) throw std::invalid_argument("u_pq: q must be at least 3");
    const int n = p + q + 2;
    Graph g(n);
    for (int i = 1; i <= p; ++i) g.add_edge(0, i);
    g.add_edge(p, p + 1);
    g.add_edge(p + 1, p + 2);
    g.add_edge(p + 2, p + 3);
    g.add_edge(p + 2, p + 4);
    g.add_edge(p + 3, p + 4);
    for (int j = p + 5; j < n; ++j) g.add_edge(p + 2, j);

    std::map<std::string, std::vector<int>> roles;
    std::vector<int> v1, v7;
    for (int i = 1; i < p; ++i) v1.push_back(i);
    for (int j = p + 5; j < n; ++j) v7.push_back(j);
    roles["v1"] = std::move(v1);
    roles["v2"] = {0};
    roles["v3"] = {p};
    roles["v4"] = {p + 1};
    roles["v5"] = {p + 2};
    roles["v6"] = {p + 3, p + 4};
    roles["v7"] = std::move(v7);
    return {std::move(g), std::move(roles)};
}

/// Bridge a pendant of K_{1,p} to a vertex of C_3. Order p+4. Roles:
///   u1 star pendants (p-1), u2 star center, u3 bridging star pendant,
///   u4 triangle vertex on the bridge, u5 remaining triangle pair.
inline LabeledFamilyGraph u_prime(int p) {
    if (p < 1) throw std::invalid_argument("u_prime: p must be at least 1");
    const int n = p + 4;
    Graph g(n);
    for (int i = 1; i <= p; ++i) g.add_edge(0, i);
    g.add_edge(p, p + 1);
    g.add_edge(p + 1, p + 2);
    g.add_edge(p + 1, p + 3);
    g.add_edge(p + 2, p + 3);

    std::map<std::string, std::vector<int>> roles;
    std::vector<int> u1;
    for (int i = 1; i < p; ++i) u1.push_back(i);
    roles["u1"] = std::move(u1);
    roles["u2"] = {0};
    roles["u3"] = {p};
    roles["u4"] = {p + 1};
    roles["u5"] = {p + 2, p + 3};
    return {std::move(g), std::move(roles)};
}

}  // namespace lamin
