// canonical.hpp -- canonical labelings for isomorphism testing, order <= 32.
//
// Individualization-refinement search: equitable partition refinement,
// branching over every vertex of the first non-singleton cell, keeping the
// lexicographically least packed adjacency string over all leaves. Leaves
// that tie reveal automorphisms, which prune sibling branches whose prefix
// they stabilize. The result depends only on the isomorphism class.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace lamin {

inline constexpr int kMaxCanonicalOrder = 32;

namespace detail {

struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<std::vector<int>> generators;  // automorphisms found so far
    std::vector<int> best;                     // labeling: position -> vertex
    bool have_best = false;

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {}

    using Cells = std::vector<std::vector<int>>;

    std::uint64_t cell_mask(const std::vector<int>& cell) const {
        std::uint64_t m = 0;
        for (int v : cell) m |= std::uint64_t{1} << v;
        return m;
    }

    // Iterate vertex signatures against the current cells to a fixed point.
    void refine(Cells& cells) const {
        for (;;) {
            std::vector<std::uint64_t> masks(cells.size());
            for (size_t k = 0; k < cells.size(); ++k) masks[k] = cell_mask(cells[k]);
            Cells next;
            bool changed = false;
            for (const auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::vector<std::pair<std::vector<int>, int>> tagged;  // (signature, vertex)
                tagged.reserve(cell.size());
                for (int v : cell) {
                    std::vector<int> sig(cells.size());
                    for (size_t k = 0; k < cells.size(); ++k)
                        sig[k] = std::popcount(g.row(v) & masks[k]);
                    tagged.emplace_back(std::move(sig), v);
                }
                std::stable_sort(tagged.begin(), tagged.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                std::vector<int> group{tagged[0].second};
                for (size_t i = 1; i < tagged.size(); ++i) {
                    if (tagged[i].first != tagged[i - 1].first) {
                        changed = true;
                        std::sort(group.begin(), group.end());
                        next.push_back(std::move(group));
                        group.clear();
                    }
                    group.push_back(tagged[i].second);
                }
                std::sort(group.begin(), group.end());
                next.push_back(std::move(group));
            }
            cells.swap(next);
            if (!changed) return;
        }
    }

    // Lexicographic comparison of the packed adjacency string under `lab`
    // against the current best. <0 better, 0 tie, >0 worse.
    int compare_to_best(const std::vector<int>& lab) const {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int a = g.adjacent(lab[i], lab[j]) ? 1 : 0;
                int b = g.adjacent(best[i], best[j]) ? 1 : 0;
                if (a != b) return a - b;
            }
        return 0;
    }

    void at_leaf(const Cells& cells) {
        std::vector<int> lab(static_cast<size_t>(n));
        for (size_t i = 0; i < cells.size(); ++i) lab[i] = cells[i][0];
        if (!have_best) {
            best = lab;
            have_best = true;
            return;
        }
        int cmp = compare_to_best(lab);
        if (cmp < 0) {
            best = lab;
        } else if (cmp == 0) {
            // Same string: lab after best^{-1} is an automorphism.
            std::vector<int> pos(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) pos[static_cast<size_t>(best[i])] = i;
            std::vector<int> gamma(static_cast<size_t>(n));
            for (int v = 0; v < n; ++v) gamma[static_cast<size_t>(v)] = lab[pos[static_cast<size_t>(v)]];
            generators.push_back(std::move(gamma));
        }
    }

    void explore(Cells cells, std::vector<int>& prefix) {
        refine(cells);
        size_t target = cells.size();
        for (size_t k = 0; k < cells.size(); ++k)
            if (cells[k].size() > 1) {
                target = k;
                break;
            }
        if (target == cells.size()) {
            at_leaf(cells);
            return;
        }
        // Orbits under the generators that fix the branch prefix pointwise.
        std::vector<int> root(static_cast<size_t>(n));
        std::iota(root.begin(), root.end(), 0);
        auto find = [&](int v) {
            while (root[static_cast<size_t>(v)] != v) {
                root[static_cast<size_t>(v)] = root[static_cast<size_t>(root[static_cast<size_t>(v)])];
                v = root[static_cast<size_t>(v)];
            }
            return v;
        };
        for (const auto& gamma : generators) {
            bool fixes = true;
            for (int p : prefix)
                if (gamma[static_cast<size_t>(p)] != p) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int v = 0; v < n; ++v) {
                int a = find(v), b = find(gamma[static_cast<size_t>(v)]);
                if (a != b) root[static_cast<size_t>(a)] = b;
            }
        }
        std::vector<int> tried;
        for (int v : cells[target]) {
            bool skip = false;
            for (int u : tried)
                if (find(u) == find(v)) {
                    skip = true;
                    break;
                }
            if (skip) continue;
            tried.push_back(v);
            Cells child;
            child.reserve(cells.size() + 1);
            for (size_t k = 0; k < cells.size(); ++k) {
                if (k != target) {
                    child.push_back(cells[k]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                for (int w : cells[k])
                    if (w != v) rest.push_back(w);
                child.push_back(std::move(rest));
            }
            prefix.push_back(v);
            explore(std::move(child), prefix);
            prefix.pop_back();
        }
    }

    std::vector<int> run() {
        std::vector<int> all(static_cast<size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        std::vector<int> prefix;
        explore(Cells{all}, prefix);
        return best;
    }
};

}  // namespace detail

/// Labeling (position -> vertex) realizing the canonical form.
inline std::vector<int> canonical_labeling(const Graph& g) {
    if (g.order() > kMaxCanonicalOrder)
        throw std::invalid_argument("canonical form limited to order " +
                                    std::to_string(kMaxCanonicalOrder));
    return detail::CanonSearch(g).run();
}

/// The graph relabeled into canonical position.
inline Graph canonical_graph(const Graph& g) {
    auto lab = canonical_labeling(g);
    std::vector<int> perm(lab.size());
    for (size_t i = 0; i < lab.size(); ++i) perm[static_cast<size_t>(lab[i])] = static_cast<int>(i);
    return g.relabeled(perm);
}

/// Isomorphism-class fingerprint: order byte, then the canonical upper
/// triangle packed eight bits per byte, row by row, high bit first.
inline std::string canonical_key(const Graph& g) {
    Graph c = canonical_graph(g);
    const int n = c.order();
    std::string key;
    key.push_back(static_cast<char>(n));
    int acc = 0, nbits = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            acc = (acc << 1) | (c.adjacent(u, v) ? 1 : 0);
            if (++nbits == 8) {
                key.push_back(static_cast<char>(acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) key.push_back(static_cast<char>(acc << (8 - nbits)));
    return key;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_key(a) == canonical_key(b);
}

}  // namespace lamin
