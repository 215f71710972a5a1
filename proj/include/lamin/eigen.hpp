// eigen.hpp -- dense symmetric eigensolver for adjacency matrices.
//
// Householder reduction to tridiagonal form with accumulated transforms,
// then implicit-shift QL until each off-diagonal dies. Everything is
// deterministic: fixed sweep order, fixed sort, fixed sign convention
// (largest-magnitude entry of each eigenvector is made negative).
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "graph.hpp"

namespace lamin {

struct Spectrum {
    std::vector<double> eigenvalues;       // ascending
    std::vector<VertexVector> vectors;     // vectors[k] pairs with eigenvalues[k], unit norm
    double least_value = 0.0;
    VertexVector least_vector;
    int least_multiplicity = 0;
    double residual = 0.0;                 // eigen_residual of the least pair
};

namespace detail {

using Matrix = std::vector<std::vector<double>>;

inline Matrix adjacency_matrix(const Graph& g) {
    const size_t n = static_cast<size_t>(g.order());
    Matrix a(n, std::vector<double>(n, 0.0));
    for (const auto& [u, v] : g.edges()) {
        a[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1.0;
        a[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1.0;
    }
    return a;
}

// Householder reduction of symmetric a to tridiagonal (d, e); a is replaced
// by the accumulated orthogonal transform.
inline void tridiagonalize(Matrix& a, std::vector<double>& d, std::vector<double>& e) {
    const int n = static_cast<int>(a.size());
    d.assign(static_cast<size_t>(n), 0.0);
    e.assign(static_cast<size_t>(n), 0.0);
    for (int i = n - 1; i >= 1; --i) {
        const int l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k) scale += std::abs(a[i][k]);
            if (scale == 0.0) {
                e[i] = a[i][l];
            } else {
                for (int k = 0; k <= l; ++k) {
                    a[i][k] /= scale;
                    h += a[i][k] * a[i][k];
                }
                double f = a[i][l];
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                a[i][l] = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    a[j][i] = a[i][j] / h;
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += a[j][k] * a[i][k];
                    for (int k = j + 1; k <= l; ++k) g += a[k][j] * a[i][k];
                    e[j] = g / h;
                    f += e[j] * a[i][j];
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = a[i][j];
                    e[j] = g = e[j] - hh * f;
                    for (int k = 0; k <= j; ++k) a[j][k] -= f * e[k] + g * a[i][k];
                }
            }
        } else {
            e[i] = a[i][l];
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) {
        const int l = i - 1;
        if (d[i] != 0.0) {
            for (int j = 0; j <= l; ++j) {
                double g = 0.0;
                for (int k = 0; k <= l; ++k) g += a[i][k] * a[k][j];
                for (int k = 0; k <= l; ++k) a[k][j] -= g * a[k][i];
            }
        }
        d[i] = a[i][i];
        a[i][i] = 1.0;
        for (int j = 0; j <= l; ++j) a[j][i] = a[i][j] = 0.0;
    }
}

// Implicit-shift QL on the tridiagonal (d, e), rotations accumulated into z.
// On return d holds eigenvalues, z columns the eigenvectors.
inline void ql_implicit(std::vector<double>& d, std::vector<double>& e, Matrix& z) {
    const int n = static_cast<int>(d.size());
    constexpr int kMaxSweeps = 64;
    const double eps = std::numeric_limits<double>::epsilon();
    for (int i = 1; i < n; ++i) e[static_cast<size_t>(i - 1)] = e[static_cast<size_t>(i)];
    e[static_cast<size_t>(n - 1)] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd || std::abs(e[m]) < 1e-300) break;
            }
            if (m != l) {
                if (iter++ == kMaxSweeps)
                    throw std::runtime_error("eigensolver: QL sweep cap (" +
                                             std::to_string(kMaxSweeps) +
                                             ") exceeded at eigenvalue " + std::to_string(l));
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i = m - 1;
                for (; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    for (int k = 0; k < n; ++k) {
                        f = z[k][i + 1];
                        z[k][i + 1] = s * z[k][i] + c * f;
                        z[k][i] = c * z[k][i] - s * f;
                    }
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

inline void flip_sign_convention(VertexVector& v) {
    size_t arg = 0;
    for (size_t i = 1; i < v.size(); ++i)
        if (std::abs(v[i]) > std::abs(v[arg])) arg = i;
    if (v[arg] > 0.0)
        for (double& x : v) x = -x;
}

}  // namespace detail

inline double rayleigh(const Graph& g, const VertexVector& x) {
    check_dimension(g, x);
    double nrm2 = 0.0;
    for (double xi : x) nrm2 += xi * xi;
    if (nrm2 == 0.0) throw std::invalid_argument("rayleigh: zero vector");
    return quadratic_form(g, x) / nrm2;
}

/// All eigenpairs of the adjacency matrix. The least pair must reach an
/// eigen_residual of at most tol; failing that is an error, never silence.
inline Spectrum full_spectrum(const Graph& g, double tol = 1e-10, double gap_tol = 1e-7) {
    if (tol <= 0.0) throw std::invalid_argument("full_spectrum: tol must be positive");
    if (gap_tol < tol) throw std::invalid_argument("full_spectrum: gap_tol must be >= tol");
    const int n = g.order();
    detail::Matrix z = detail::adjacency_matrix(g);
    std::vector<double> d, e;
    detail::tridiagonalize(z, d, e);
    detail::ql_implicit(d, e, z);

    std::vector<int> idx(static_cast<size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int i, int j) {
        return d[static_cast<size_t>(i)] != d[static_cast<size_t>(j)]
                   ? d[static_cast<size_t>(i)] < d[static_cast<size_t>(j)]
                   : i < j;
    });

    Spectrum sp;
    sp.eigenvalues.reserve(static_cast<size_t>(n));
    sp.vectors.reserve(static_cast<size_t>(n));
    for (int k : idx) {
        sp.eigenvalues.push_back(d[static_cast<size_t>(k)]);
        VertexVector v(static_cast<size_t>(n));
        double nrm = 0.0;
        for (int r = 0; r < n; ++r) {
            v[static_cast<size_t>(r)] = z[static_cast<size_t>(r)][static_cast<size_t>(k)];
            nrm += v[static_cast<size_t>(r)] * v[static_cast<size_t>(r)];
        }
        nrm = std::sqrt(nrm);
        for (double& x : v) x /= nrm;
        detail::flip_sign_convention(v);
        sp.vectors.push_back(std::move(v));
    }

    // Polish the least pair: Rayleigh update, and if needed a few rounds of
    // inverse iteration on the full matrix.
    sp.least_vector = sp.vectors.front();
    sp.least_value = rayleigh(g, sp.least_vector);
    sp.residual = eigen_residual(g, sp.least_value, sp.least_vector);
    if (sp.residual > tol) {
        detail::Matrix a = detail::adjacency_matrix(g);
        VertexVector v = sp.least_vector;
        double lambda = sp.least_value;
        for (int round = 0; round < 8 && sp.residual > tol; ++round) {
            // Solve (A - shifted I) w = v by Gaussian elimination.
            detail::Matrix m = a;
            const double shift = lambda - 1e-12;
            for (int i = 0; i < n; ++i) m[i][i] -= shift;
            VertexVector w = v;
            std::vector<int> perm(static_cast<size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            for (int col = 0; col < n; ++col) {
                int piv = col;
                for (int r = col + 1; r < n; ++r)
                    if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
                std::swap(m[col], m[piv]);
                std::swap(w[col], w[piv]);
                if (std::abs(m[col][col]) < 1e-300) m[col][col] = 1e-300;
                for (int r = col + 1; r < n; ++r) {
                    const double f = m[r][col] / m[col][col];
                    if (f == 0.0) continue;
                    for (int cc = col; cc < n; ++cc) m[r][cc] -= f * m[col][cc];
                    w[r] -= f * w[col];
                }
            }
            for (int r = n - 1; r >= 0; --r) {
                double s = w[r];
                for (int cc = r + 1; cc < n; ++cc) s -= m[r][cc] * w[cc];
                w[r] = s / m[r][r];
            }
            double nrm = 0.0;
            for (double x : w) nrm += x * x;
            nrm = std::sqrt(nrm);
            if (nrm == 0.0 || !std::isfinite(nrm)) break;
            for (double& x : w) x /= nrm;
            v = w;
            lambda = rayleigh(g, v);
            detail::flip_sign_convention(v);
            const double res = eigen_residual(g, lambda, v);
            if (res < sp.residual) {
                sp.least_vector = v;
                sp.least_value = lambda;
                sp.residual = res;
            }
        }
        if (sp.residual > tol)
            throw std::runtime_error("eigensolver: least-pair residual " +
                                     std::to_string(sp.residual) + " above tolerance");
    }
    sp.eigenvalues.front() = sp.least_value;
    sp.vectors.front() = sp.least_vector;

    sp.least_multiplicity = 0;
    for (double lam : sp.eigenvalues)
        if (lam <= sp.least_value + gap_tol) ++sp.least_multiplicity;
    return sp;
}

inline std::tuple<double, VertexVector, int> least_eigenpair(const Graph& g, double tol = 1e-10,
                                                             double gap_tol = 1e-7) {
    Spectrum sp = full_spectrum(g, tol, gap_tol);
    return {sp.least_value, sp.least_vector, sp.least_multiplicity};
}

}  // namespace lamin
