// intpoly.hpp -- dense univariate polynomials over arbitrary-precision integers.
//
// Coefficients are stored ascending; the representation is normalized so the
// leading coefficient is nonzero (the zero polynomial is an empty vector).
// All arithmetic is exact. Sign evaluation at a rational point is done on the
// homogenized integer form, so no rational arithmetic enters the hot path.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lamin {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class IntPoly {
public:
    IntPoly() = default;

    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

    IntPoly(std::initializer_list<Int> coeffs) : c_(coeffs) { normalize(); }

    static IntPoly constant(Int v) { return IntPoly(std::vector<Int>{std::move(v)}); }

    /// c * lambda^k
    static IntPoly monomial(Int c, int k) {
        std::vector<Int> v(static_cast<size_t>(k) + 1);
        v.back() = std::move(c);
        return IntPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }

    /// Degree; the zero polynomial has degree -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<Int>& coeffs() const { return c_; }

    /// Coefficient of lambda^i (zero beyond the stored range).
    const Int& coeff(size_t i) const {
        static const Int kZero = 0;
        return i < c_.size() ? c_[i] : kZero;
    }

    const Int& leading() const {
        if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<Int> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return IntPoly(std::move(r));
    }

    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<Int> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return IntPoly(std::move(r));
    }

    friend IntPoly operator-(const IntPoly& a) {
        std::vector<Int> r(a.c_.size());
        for (size_t i = 0; i < r.size(); ++i) r[i] = -a.c_[i];
        return IntPoly(std::move(r));
    }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<Int> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return IntPoly(std::move(r));
    }

    friend IntPoly operator*(const Int& k, const IntPoly& a) {
        std::vector<Int> r(a.c_.size());
        for (size_t i = 0; i < r.size(); ++i) r[i] = k * a.c_[i];
        return IntPoly(std::move(r));
    }

    Int eval(const Int& x) const {
        Int acc = 0;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Rat eval(const Rat& x) const {
        Rat acc = 0;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// Sign of the value at num/den (den > 0), via the homogenized integer form.
    int sign_at(const Int& num, const Int& den) const {
        if (den <= 0) throw std::invalid_argument("sign_at: denominator must be positive");
        Int acc = 0, dpow = 1;
        // sum c_i num^i den^(deg-i), Horner from the top
        for (size_t i = c_.size(); i-- > 0;) {
            acc = acc * num + c_[i] * dpow;
            dpow *= den;
        }
        return acc.sign();
    }

    int sign_at(const Rat& x) const {
        return sign_at(boost::multiprecision::numerator(x), boost::multiprecision::denominator(x));
    }

    IntPoly derivative() const {
        if (c_.size() <= 1) return IntPoly();
        std::vector<Int> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = Int(i) * c_[i];
        return IntPoly(std::move(r));
    }

    /// gcd of coefficients, zero for the zero polynomial (always >= 0).
    Int content() const {
        Int g = 0;
        for (const Int& c : c_) {
            g = boost::multiprecision::gcd(g, c);
            if (g == 1) break;
        }
        return g;
    }

    /// Divide out the content, preserving the leading coefficient's sign.
    IntPoly primitive_part() const {
        if (is_zero()) return IntPoly();
        Int g = content();
        std::vector<Int> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] / g;
        return IntPoly(std::move(r));
    }

    /// Human-readable form, highest power first.
    std::string text() const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += c_[i] > 0 ? " + " : " - ";
            else if (c_[i] < 0) s += "-";
            Int a = boost::multiprecision::abs(c_[i]);
            if (a != 1 || i == 0) s += a.str();
            if (i >= 1) s += "x";
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_;
};

/// Quotient of an exact division; throws if b does not divide a over the integers.
inline IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("exact_div: division by zero polynomial");
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree()) throw std::logic_error("exact_div: inexact division");
    std::vector<Rat> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<Rat> q(static_cast<size_t>(a.degree() - b.degree()) + 1);
    const Rat lead = b.leading();
    for (size_t k = q.size(); k-- > 0;) {
        Rat f = rem[k + static_cast<size_t>(b.degree())] / lead;
        q[k] = f;
        for (int i = 0; i <= b.degree(); ++i) rem[k + static_cast<size_t>(i)] -= f * b.coeff(static_cast<size_t>(i));
    }
    for (const Rat& r : rem)
        if (r != 0) throw std::logic_error("exact_div: inexact division");
    std::vector<Int> out(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
        if (boost::multiprecision::denominator(q[i]) != 1)
            throw std::logic_error("exact_div: non-integer quotient");
        out[i] = boost::multiprecision::numerator(q[i]);
    }
    return IntPoly(std::move(out));
}

}  // namespace lamin
