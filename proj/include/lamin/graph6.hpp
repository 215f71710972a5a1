// graph6.hpp -- the ASCII graph6 interchange format.
//
// One printable token per graph: an order header followed by the upper
// triangle of the adjacency matrix, read column by column, packed six
// bits per byte with an offset of 63.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "graph.hpp"

namespace lamin {

inline std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

inline Graph from_graph6(std::string_view s) {
    auto fail = [&](const std::string& why) -> std::invalid_argument {
        return std::invalid_argument("bad graph6 '" + std::string(s) + "': " + why);
    };
    auto sextet = [&](size_t i) -> int {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw fail("byte out of printable range at position " + std::to_string(i));
        return c - 63;
    };
    if (s.empty()) throw fail("empty string");
    size_t pos = 0;
    int n;
    if (static_cast<unsigned char>(s[0]) == 126) {
        if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126)
            throw fail("orders beyond 18 bits are not supported");
        if (s.size() < 4) throw fail("truncated order header");
        n = (sextet(1) << 12) | (sextet(2) << 6) | sextet(3);
        pos = 4;
    } else {
        n = sextet(0);
        pos = 1;
    }
    if (n < 1 || n > kMaxOrder)
        throw fail("order " + std::to_string(n) + " outside [1, " + std::to_string(kMaxOrder) + "]");
    const long long bits = static_cast<long long>(n) * (n - 1) / 2;
    const size_t want = pos + static_cast<size_t>((bits + 5) / 6);
    if (s.size() != want)
        throw fail("expected " + std::to_string(want) + " bytes, got " + std::to_string(s.size()));
    Graph g(n);
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (nbits == 0) {
                acc = sextet(pos++);
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) g.add_edge(u, v);
            --nbits;
        }
    }
    if (nbits > 0 && (acc & ((1 << nbits) - 1)) != 0) throw fail("nonzero padding bits");
    return g;
}

}  // namespace lamin
