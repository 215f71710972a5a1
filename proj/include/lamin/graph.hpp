// graph.hpp -- simple undirected graphs as bit-adjacency, order <= 64.
//
// Vertices are 0-indexed contiguous integers. Rows are 64-bit neighbor
// masks, so every structural query is a popcount away. Graphs are value
// types: copy freely, share across threads after construction.
#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lamin {

inline constexpr int kMaxOrder = 64;

/// A real vector defined on the vertices of a graph.
using VertexVector = std::vector<double>;

using Edge = std::pair<int, int>;

class Graph {
public:
    explicit Graph(int n) : n_(n), rows_(static_cast<size_t>(check_order(n)), 0) {}

    Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
        for (const auto& [u, v] : edges) add_edge(u, v);
    }

    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::vector<Edge>(edges)) {}

    int order() const { return n_; }

    int edge_count() const {
        int twice = 0;
        for (std::uint64_t r : rows_) twice += std::popcount(r);
        return twice / 2;
    }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (rows_[static_cast<size_t>(u)] >> v) & 1u;
    }

    // Adding an existing edge is a no-op: simple graphs are the only model.
    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loop edge " + std::to_string(u));
        rows_[static_cast<size_t>(u)] |= std::uint64_t{1} << v;
        rows_[static_cast<size_t>(v)] |= std::uint64_t{1} << u;
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        rows_[static_cast<size_t>(u)] &= ~(std::uint64_t{1} << v);
        rows_[static_cast<size_t>(v)] &= ~(std::uint64_t{1} << u);
    }

    /// Neighbor bitmask of v.
    std::uint64_t row(int v) const {
        check_vertex(v);
        return rows_[static_cast<size_t>(v)];
    }

    int degree(int v) const { return std::popcount(row(v)); }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(static_cast<size_t>(edge_count()));
        for (int u = 0; u < n_; ++u) {
            std::uint64_t r = rows_[static_cast<size_t>(u)] >> (u + 1) << (u + 1);
            while (r) {
                int v = std::countr_zero(r);
                out.emplace_back(u, v);
                r &= r - 1;
            }
        }
        return out;
    }

    bool connected() const {
        std::uint64_t reached = 1, frontier = 1;
        const std::uint64_t all = full_mask();
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= rows_[static_cast<size_t>(v)];
            }
            frontier = next & ~reached;
            reached |= frontier;
            if (reached == all) return true;
        }
        return reached == all;
    }

    /// Copy with vertex i renamed to perm[i].
    Graph relabeled(const std::vector<int>& perm) const {
        if (static_cast<int>(perm.size()) != n_)
            throw std::invalid_argument("permutation size mismatch");
        Graph out(n_);
        for (const auto& [u, v] : edges())
            out.add_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
        return out;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    static int check_order(int n) {
        if (n < 1 || n > kMaxOrder)
            throw std::invalid_argument("graph order " + std::to_string(n) +
                                        " outside [1, " + std::to_string(kMaxOrder) + "]");
        return n;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for order " +
                                        std::to_string(n_));
    }

    std::uint64_t full_mask() const {
        return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    int n_;
    std::vector<std::uint64_t> rows_;
};

inline Graph new_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

/// A(G^c) = J - I - A(G).
inline Graph complement(const Graph& g) {
    const int n = g.order();
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

/// Connected with exactly n edges.
inline bool is_unicyclic(const Graph& g) {
    return g.edge_count() == g.order() && g.connected();
}

inline void check_dimension(const Graph& g, const VertexVector& x) {
    if (static_cast<int>(x.size()) != g.order())
        throw std::invalid_argument("vector length " + std::to_string(x.size()) +
                                    " does not match graph order " + std::to_string(g.order()));
}

/// x^T A(g) x = 2 * sum over edges uv of x_u x_v.
inline double quadratic_form(const Graph& g, const VertexVector& x) {
    check_dimension(g, x);
    double s = 0.0;
    for (const auto& [u, v] : g.edges()) s += x[static_cast<size_t>(u)] * x[static_cast<size_t>(v)];
    return 2.0 * s;
}

/// Worst-vertex defect of the eigenequation: max_v |lambda*x_v - sum_{u~v} x_u|.
inline double eigen_residual(const Graph& g, double lambda, const VertexVector& x) {
    check_dimension(g, x);
    bool nonzero = false;
    for (double xi : x) nonzero |= (xi != 0.0);
    if (!nonzero) throw std::invalid_argument("eigen_residual: zero vector");
    double worst = 0.0;
    for (int v = 0; v < g.order(); ++v) {
        double s = 0.0;
        std::uint64_t r = g.row(v);
        while (r) {
            int u = std::countr_zero(r);
            r &= r - 1;
            s += x[static_cast<size_t>(u)];
        }
        double d = lambda * x[static_cast<size_t>(v)] - s;
        if (d < 0) d = -d;
        if (d > worst) worst = d;
    }
    return worst;
}

}  // namespace lamin
