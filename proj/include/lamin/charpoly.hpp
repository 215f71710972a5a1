// charpoly.hpp -- exact characteristic polynomials and the reference
// quotient systems for the two bridged-star families.
//
// Convention: char_poly computes det(A - lambda*I), leading coefficient
// (-1)^n, matching the leading terms of the degree-7 and degree-5 reference
// polynomials below.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "intpoly.hpp"

namespace lamin {

using IntMatrix = std::vector<std::vector<Int>>;

/// Reduced eigen-system matrix for a family, of order 7 (bridged star +
/// triangle-star) or 5 (bridged star + triangle).
struct QuotientMatrix {
    int order;
    IntMatrix entries;
};

/// det(A - lambda*I) by the trace recurrence (Faddeev-LeVerrier). Every
/// division in the recurrence must be exact; a remainder is a logic error.
inline IntPoly char_poly_matrix(const IntMatrix& a) {
    const size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("char_poly_matrix: matrix not square");
    if (n == 0) return IntPoly::constant(1);
    // det(lambda*I - A) = lambda^n + c[1] lambda^(n-1) + ... + c[n]
    std::vector<Int> c(n + 1);
    c[0] = 1;
    IntMatrix m = a;  // M_1 = A
    for (size_t k = 1; k <= n; ++k) {
        Int tr = 0;
        for (size_t i = 0; i < n; ++i) tr += m[i][i];
        if (tr % Int(k) != 0) throw std::logic_error("char_poly_matrix: inexact trace division");
        c[k] = -tr / Int(k);
        if (k == n) break;
        // M_{k+1} = A * (M_k + c[k] * I)
        for (size_t i = 0; i < n; ++i) m[i][i] += c[k];
        IntMatrix next(n, std::vector<Int>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t l = 0; l < n; ++l) {
                if (a[i][l] == 0) continue;
                for (size_t j = 0; j < n; ++j) next[i][j] += a[i][l] * m[l][j];
            }
        m = std::move(next);
    }
    const int sgn = (n % 2 == 0) ? 1 : -1;
    std::vector<Int> coeffs(n + 1);
    for (size_t j = 0; j <= n; ++j) coeffs[j] = sgn * c[n - j];
    return IntPoly(std::move(coeffs));
}

inline IntPoly char_poly(const Graph& g) {
    const int n = g.order();
    IntMatrix a(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n)));
    for (const auto& [u, v] : g.edges()) {
        a[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
        a[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1;
    }
    return char_poly_matrix(a);
}

namespace detail {
inline void check_u_params(long long p, long long q) {
    if (p < 1) throw std::invalid_argument("u family: p must be >= 1, got " + std::to_string(p));
    if (q < 3) throw std::invalid_argument("u family: q must be >= 3, got " + std::to_string(q));
}
inline void check_uprime_params(long long p) {
    if (p < 1) throw std::invalid_argument("uprime family: p must be >= 1, got " + std::to_string(p));
}
}  // namespace detail

/// Order-7 reduction of the complement eigen-system of the bridged
/// star/triangle-star graph onto its vertex classes. Rows are the equations
/// for the classes v1..v7; self-class coefficients exclude the vertex itself
/// (the last row's diagonal is q-4: the class has q-3 members).
inline QuotientMatrix quotient_matrix_u(long long p, long long q) {
    detail::check_u_params(p, q);
    const Int P = p, Q = q;
    IntMatrix b = {
        {P - 2, 0, 1, 1, 1, 2, Q - 3},
        {0, 0, 0, 1, 1, 2, Q - 3},
        {P - 1, 0, 0, 0, 1, 2, Q - 3},
        {P - 1, 1, 0, 0, 0, 2, Q - 3},
        {P - 1, 1, 1, 0, 0, 0, 0},
        {P - 1, 1, 1, 1, 0, 0, Q - 3},
        {P - 1, 1, 1, 1, 0, 2, Q - 4},
    };
    return QuotientMatrix{7, std::move(b)};
}

/// Order-5 reduction for the bridged star/triangle graph, classes u1..u5.
/// The bridging pendant's row (u3) has no u4 term: that pair is the bridge.
inline QuotientMatrix quotient_matrix_uprime(long long p) {
    detail::check_uprime_params(p);
    const Int P = p;
    IntMatrix b = {
        {P - 2, 0, 1, 1, 2},
        {0, 0, 0, 1, 2},
        {P - 1, 0, 0, 0, 2},
        {P - 1, 1, 0, 0, 0},
        {P - 1, 1, 1, 0, 0},
    };
    return QuotientMatrix{5, std::move(b)};
}

/// Degree-7 least-root polynomial of the order-(p+q+2) family: the
/// determinant of quotient_matrix_u(p,q) - lambda*I, written out.
inline IntPoly paper_f(long long p, long long q) {
    detail::check_u_params(p, q);
    const Int P = p, Q = q;
    return IntPoly({
        -8 + 2 * P + 2 * Q,
        13 - 11 * P - 7 * Q + 4 * P * Q,
        20 - 6 * Q - 4 * P * Q,
        -1 + 11 * P + 7 * Q - 7 * P * Q,
        -20 + 12 * P + 12 * Q - 2 * P * Q,
        -16 + 6 * P + 6 * Q,
        -6 + P + Q,
        -1,
    });
}

/// Degree-5 least-root polynomial of the order-(p+4) family.
inline IntPoly paper_g(long long p) {
    detail::check_uprime_params(p);
    const Int P = p;
    return IntPoly({-4 + 2 * P, 3 - 5 * P, 6 - P, 1 + 4 * P, -2 + P, -1});
}

/// (lambda+1)^2 * g: shares its least root with g whenever that root < -1.
inline IntPoly paper_g_bar(long long p) {
    return IntPoly({1, 2, 1}) * paper_g(p);
}

}  // namespace lamin
