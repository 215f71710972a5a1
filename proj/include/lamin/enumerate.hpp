// enumerate.hpp -- isomorphism-free enumeration of trees and unicyclic
// graphs, plus extremal search over the unicyclic class.
//
// Trees come from the classic level-sequence successor walk over rooted
// trees, deduplicated into free trees by canonical key. Every unicyclic
// graph is a spanning tree plus one extra edge, so adding each non-edge to
// each free tree and deduplicating again is provably complete. Emission
// order is deterministic (first occurrence), and every emitted graph is its
// own canonical representative.
#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "canonical.hpp"
#include "charpoly.hpp"
#include "eigen.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "sturm.hpp"

namespace lamin {

inline constexpr int kMaxEnumerationOrder = 14;

namespace detail {

// Advance s to the next canonical rooted-tree level sequence (root level 1,
// decreasing lexicographic order). Returns false once s is the star.
inline bool next_level_sequence(std::vector<int>& s) {
    const int n = static_cast<int>(s.size());
    int p = -1;
    for (int i = n - 1; i >= 0; --i)
        if (s[static_cast<size_t>(i)] > 2) {
            p = i;
            break;
        }
    if (p < 0) return false;
    int q = -1;
    for (int i = p - 1; i >= 0; --i)
        if (s[static_cast<size_t>(i)] == s[static_cast<size_t>(p)] - 1) {
            q = i;
            break;
        }
    const int d = p - q;
    for (int i = p; i < n; ++i) s[static_cast<size_t>(i)] = s[static_cast<size_t>(i - d)];
    return true;
}

inline Graph level_sequence_graph(const std::vector<int>& s) {
    const int n = static_cast<int>(s.size());
    Graph g(n);
    std::vector<int> last_at_level(static_cast<size_t>(n) + 1, -1);
    last_at_level[1] = 0;
    for (int i = 1; i < n; ++i) {
        const int lvl = s[static_cast<size_t>(i)];
        g.add_edge(last_at_level[static_cast<size_t>(lvl - 1)], i);
        last_at_level[static_cast<size_t>(lvl)] = i;
    }
    return g;
}

inline std::string key_hex(const std::string& key) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(key.size() * 2);
    for (unsigned char c : key) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xF]);
    }
    return out;
}

inline std::string double_text(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace detail

/// Every isomorphism class of trees on n vertices, exactly once, as
/// canonical representatives in deterministic order.
inline std::vector<Graph> free_trees(int n) {
    if (n < 1 || n > kMaxEnumerationOrder)
        throw std::invalid_argument("free_trees: order out of range 1.." +
                                    std::to_string(kMaxEnumerationOrder));
    std::vector<Graph> out;
    std::set<std::string> seen;
    std::vector<int> s(static_cast<size_t>(n));
    std::iota(s.begin(), s.end(), 1);
    do {
        const Graph t = detail::level_sequence_graph(s);
        const Graph c = canonical_graph(t);
        if (seen.insert(canonical_key(c)).second) out.push_back(c);
    } while (detail::next_level_sequence(s));
    return out;
}

/// Every isomorphism class of unicyclic graphs on n vertices, exactly once,
/// as canonical representatives in deterministic order.
inline std::vector<Graph> unicyclic_graphs(int n) {
    if (n < 3) throw std::invalid_argument("unicyclic_graphs: order must be at least 3");
    if (n > kMaxEnumerationOrder)
        throw std::invalid_argument("unicyclic_graphs: order above enumeration bound " +
                                    std::to_string(kMaxEnumerationOrder));
    std::vector<Graph> out;
    std::set<std::string> seen;
    for (const Graph& t : free_trees(n)) {
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (t.adjacent(u, v)) continue;
                Graph g = t;
                g.add_edge(u, v);
                const Graph c = canonical_graph(g);
                if (seen.insert(canonical_key(c)).second) out.push_back(c);
            }
        }
    }
    return out;
}

struct SearchReport {
    struct Minimizer {
        std::string graph6;
        std::string canonical_form;  // canonical key, hex
    };
    int n = 0;
    std::int64_t class_size = 0;
    std::string objective;
    double min_value = 0.0;
    std::vector<Minimizer> minimizers;
    double wall_time_seconds = 0.0;
    double solver_tol = 0.0;
    double gap_tol = 0.0;
    std::string notes;
};

/// Deterministic text form of a report, excluding wall time; equal
/// signatures mean equal reports for reproducibility comparisons.
inline std::string search_signature(const SearchReport& r) {
    std::ostringstream os;
    os << r.n << '|' << r.class_size << '|' << r.objective << '|'
       << detail::double_text(r.min_value) << '|' << detail::double_text(r.solver_tol) << '|'
       << detail::double_text(r.gap_tol) << '|' << r.notes;
    for (const auto& m : r.minimizers) os << '|' << m.graph6 << ':' << m.canonical_form;
    return os.str();
}

/// Scan the whole unicyclic class of order n and minimize the least
/// eigenvalue of either the graph itself ("lamin-direct") or its complement
/// ("lamin-complement"). All graphs within gap_tol of the minimum are
/// reported; when at most three remain, exact characteristic-polynomial
/// root comparison settles uniqueness so floating point never does.
inline SearchReport minimize(int n, const std::string& objective, double tol = 1e-10,
                             double gap_tol = 1e-7, int threads = 1) {
    const bool complement_side = objective == "lamin-complement";
    if (!complement_side && objective != "lamin-direct")
        throw std::invalid_argument("minimize: unknown objective '" + objective + "'");
    if (threads < 1) throw std::invalid_argument("minimize: threads must be at least 1");
    const auto t0 = std::chrono::steady_clock::now();

    const std::vector<Graph> graphs = unicyclic_graphs(n);
    std::vector<double> value(graphs.size(), 0.0);
    std::vector<std::exception_ptr> errors(graphs.size());
    auto work = [&](size_t first, size_t step) {
        for (size_t i = first; i < graphs.size(); i += step) {
            try {
                const Graph target = complement_side ? complement(graphs[i]) : graphs[i];
                value[i] = std::get<0>(least_eigenpair(target, tol, gap_tol));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (threads == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(threads));
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(work, static_cast<size_t>(t), static_cast<size_t>(threads));
        for (auto& th : pool) th.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    double best = std::numeric_limits<double>::infinity();
    for (double v : value) best = std::min(best, v);
    std::vector<size_t> winners;
    for (size_t i = 0; i < value.size(); ++i)
        if (value[i] <= best + gap_tol) winners.push_back(i);

    std::string notes;
    if (winners.size() >= 2 && winners.size() <= 3) {
        std::vector<IntPoly> polys;
        polys.reserve(winners.size());
        for (size_t w : winners)
            polys.push_back(
                char_poly(complement_side ? complement(graphs[w]) : graphs[w]));
        std::vector<size_t> kept;
        for (size_t a = 0; a < winners.size(); ++a) {
            bool beaten = false;
            for (size_t b = 0; b < winners.size() && !beaten; ++b)
                if (b != a && compare_least_roots(polys[b], polys[a]) < 0) beaten = true;
            if (!beaten) kept.push_back(winners[a]);
        }
        if (kept.size() < winners.size())
            notes = "exact root comparison reduced " + std::to_string(winners.size()) +
                    " near-minimal candidates to " + std::to_string(kept.size());
        else
            notes = "exact root comparison confirms a tie among " +
                    std::to_string(kept.size()) + " graphs";
        winners = std::move(kept);
    }

    std::sort(winners.begin(), winners.end(), [&](size_t a, size_t b) {
        return canonical_key(graphs[a]) < canonical_key(graphs[b]);
    });

    SearchReport r;
    r.n = n;
    r.class_size = static_cast<std::int64_t>(graphs.size());
    r.objective = objective;
    r.min_value = best;
    for (size_t w : winners)
        r.minimizers.push_back({to_graph6(graphs[w]), detail::key_hex(canonical_key(graphs[w]))});
    r.solver_tol = tol;
    r.gap_tol = gap_tol;
    r.notes = notes;
    r.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace lamin
