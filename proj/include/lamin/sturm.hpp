// sturm.hpp -- certified real-root location for integer polynomials.
//
// Sturm chains are built with sign-corrected pseudo-remainders and primitive
// normalization, so every element stays in Z[x] and every sign query is an
// exact integer computation. Bisection midpoints are dyadic; starting from
// integer Cauchy bounds, all bracket endpoints stay dyadic rationals.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "intpoly.hpp"

namespace lamin {

/// Certified bracket: the polynomial has no real root <= lo and at least one
/// real root in (lo, hi].
struct RootBracket {
    Rat lo;
    Rat hi;

    Rat width() const { return hi - lo; }
    double midpoint() const { return static_cast<double>(Rat((lo + hi) / 2)); }
};

namespace detail {

/// Pseudo-remainder of a by b scaled by a positive constant, so the sign
/// pattern of the true remainder is preserved.
inline IntPoly signed_prem(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    const int db = b.degree();
    const Int& lc = b.leading();
    int mults = 0;
    while (!r.is_zero() && r.degree() >= db) {
        const int shift = r.degree() - db;
        const Int lr = r.leading();
        // r <- lc*r - lr*x^shift*b kills the leading term
        r = lc * r - IntPoly::monomial(lr, shift) * b;
        ++mults;
        if (mults > a.degree() + 1) throw std::logic_error("signed_prem: no progress");
    }
    if (lc < 0 && mults % 2 == 1) return -r;
    return r;
}

inline IntPoly poly_gcd(IntPoly a, IntPoly b) {
    a = a.is_zero() ? a : a.primitive_part();
    b = b.is_zero() ? b : b.primitive_part();
    while (!b.is_zero()) {
        IntPoly r = signed_prem(a, b);
        a = std::move(b);
        b = r.is_zero() ? r : r.primitive_part();
    }
    if (!a.is_zero() && a.leading() < 0) return -a;
    return a;
}

}  // namespace detail

/// The polynomial's distinct-root companion: p / gcd(p, p'), primitive.
inline IntPoly squarefree_part(const IntPoly& p) {
    if (p.degree() < 1) return p;
    IntPoly g = detail::poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p.primitive_part();
    return exact_div(p.primitive_part(), g).primitive_part();
}

/// Sturm chain of a squarefree polynomial.
class SturmChain {
public:
    explicit SturmChain(const IntPoly& squarefree) {
        if (squarefree.degree() < 0) throw std::invalid_argument("sturm chain of zero polynomial");
        seq_.push_back(squarefree);
        if (squarefree.degree() == 0) return;
        seq_.push_back(squarefree.derivative());
        while (seq_.back().degree() > 0) {
            IntPoly r = detail::signed_prem(seq_[seq_.size() - 2], seq_.back());
            if (r.is_zero())
                throw std::logic_error("sturm chain collapsed: input was not squarefree");
            seq_.push_back(-r.primitive_part());
        }
    }

    const IntPoly& poly() const { return seq_.front(); }

    int variations(const Rat& x) const {
        int v = 0, prev = 0;
        for (const IntPoly& s : seq_) {
            int sg = s.sign_at(x);
            if (sg == 0) continue;
            if (prev != 0 && sg != prev) ++v;
            prev = sg;
        }
        return v;
    }

    /// Number of distinct real roots in (a, b]; requires poly(a) != 0.
    int count_in(const Rat& a, const Rat& b) const {
        if (seq_.front().sign_at(a) == 0)
            throw std::invalid_argument("count_in: left endpoint is a root");
        return variations(a) - variations(b);
    }

    /// Smallest integer bound M with all real roots inside (-M, M).
    Int cauchy_bound() const {
        const IntPoly& p = seq_.front();
        Int lead = boost::multiprecision::abs(p.leading());
        Int top = 0;
        for (int i = 0; i < p.degree(); ++i) {
            Int a = boost::multiprecision::abs(p.coeff(static_cast<size_t>(i)));
            if (a > top) top = a;
        }
        return 2 + top / lead;  // strictly above 1 + top/lead
    }

    /// Bracket of the least real root, starting fresh. Throws domain_error if
    /// there is none.
    RootBracket least_root_bracket(const Rat& tol) const {
        const Int m = cauchy_bound();
        RootBracket b{-Rat(m), Rat(m)};
        if (count_in(b.lo, b.hi) == 0)
            throw std::domain_error("least_root_bracket: no real root (degree " +
                                    std::to_string(poly().degree()) + ")");
        refine(b, tol);
        return b;
    }

    /// Shrink an existing least-root bracket to width <= tol by bisection.
    void refine(RootBracket& b, const Rat& tol) const {
        while (b.hi - b.lo > tol) {
            Rat mid = (b.lo + b.hi) / 2;
            // If the midpoint lands on a root that is not the least one in the
            // bracket, nudge it left until the count query is decisive.
            while (poly().sign_at(mid) == 0 && count_in(b.lo, mid) > 1) mid = (b.lo + mid) / 2;
            if (count_in(b.lo, mid) >= 1)
                b.hi = mid;
            else
                b.lo = mid;
        }
    }

private:
    std::vector<IntPoly> seq_;
};

/// Bracket of width <= tol around the least real root. Throws domain_error
/// if the polynomial has no real root.
inline RootBracket least_real_root(const IntPoly& poly, const Rat& tol = Rat(1, 1000000000000LL)) {
    if (poly.degree() < 1) throw std::invalid_argument("least_real_root: constant polynomial");
    if (tol <= 0) throw std::invalid_argument("least_real_root: tol must be positive");
    return SturmChain(squarefree_part(poly)).least_root_bracket(tol);
}

inline bool has_real_root(const IntPoly& poly) {
    if (poly.degree() < 1) return false;
    SturmChain chain(squarefree_part(poly));
    const Int m = chain.cauchy_bound();
    return chain.count_in(-Rat(m), Rat(m)) > 0;
}

/// Certified order of the least real roots of a and b: -1, 0, or +1.
/// Equal roots are recognized exactly through the gcd; distinct roots are
/// separated by refining both brackets until they are disjoint.
inline int compare_least_roots(const IntPoly& a, const IntPoly& b) {
    IntPoly sa = squarefree_part(a), sb = squarefree_part(b);
    SturmChain ca(sa), cb(sb);
    Rat tol(1, std::int64_t{1} << 40);
    RootBracket ra = ca.least_root_bracket(tol);
    RootBracket rb = cb.least_root_bracket(tol);
    const IntPoly g = detail::poly_gcd(sa, sb);
    for (int round = 0; round < 64; ++round) {
        if (ra.hi <= rb.lo) return -1;
        if (rb.hi <= ra.lo) return 1;
        if (g.degree() >= 1) {
            // Overlap: the least roots are equal iff each bracket isolates a
            // single root, that root lies in the overlap for both, and the
            // overlap holds a common root. Skip the test (and refine instead)
            // if an endpoint happens to land on the other polynomial's root.
            Rat lo = std::max(ra.lo, rb.lo), hi = std::min(ra.hi, rb.hi);
            if (sa.sign_at(lo) != 0 && sb.sign_at(lo) != 0 && g.sign_at(lo) != 0 &&
                ca.count_in(ra.lo, ra.hi) == 1 && cb.count_in(rb.lo, rb.hi) == 1 &&
                ca.count_in(lo, hi) == 1 && cb.count_in(lo, hi) == 1 &&
                SturmChain(g).count_in(lo, hi) >= 1)
                return 0;
        }
        tol = tol * tol;
        ca.refine(ra, tol);
        cb.refine(rb, tol);
    }
    throw std::logic_error("compare_least_roots: failed to separate roots");
}

}  // namespace lamin
