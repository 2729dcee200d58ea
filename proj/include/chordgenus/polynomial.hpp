#pragma once

// Dense univariate polynomials and truncated power series over an exact
// scalar ring. The variable is anonymous: the same type holds polynomials
// in z (generating functions) and in N (genus polynomials).

#include "chordgenus/exact.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace chordgenus {

template <class Scalar>
class Polynomial {
public:
    using scalar_type = Scalar;

    Polynomial() = default;
    Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }
    explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const Scalar& c) { return Polynomial(std::vector<Scalar>{c}); }

    /// c * x^k
    static Polynomial monomial(const Scalar& c, std::size_t k) {
        std::vector<Scalar> v(k + 1, Scalar(0));
        v[k] = c;
        return Polynomial(std::move(v));
    }

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^k; zero beyond the degree.
    Scalar operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(0); }

    const std::vector<Scalar>& coefficients() const { return coeffs_; }

    /// Smallest k with a nonzero coefficient; -1 for the zero polynomial.
    long valuation() const {
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            if (coeffs_[k] != 0) return static_cast<long>(k);
        return -1;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Scalar> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k) v[k] += a.coeffs_[k];
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k) v[k] += b.coeffs_[k];
        return Polynomial(std::move(v));
    }

    friend Polynomial operator-(const Polynomial& a) {
        std::vector<Scalar> v(a.coeffs_);
        for (auto& c : v) c = -c;
        return Polynomial(std::move(v));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Scalar> v(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(v));
    }

    friend Polynomial operator*(const Scalar& s, const Polynomial& a) {
        std::vector<Scalar> v(a.coeffs_);
        for (auto& c : v) c *= s;
        return Polynomial(std::move(v));
    }

    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Scalar> coeffs_;
};

using QPolynomial = Polynomial<BigRational>;
/// Integer-coefficient polynomial in the formal variable N.
using NPolynomial = Polynomial<BigInt>;

template <class Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& p) {
    const auto& c = p.coefficients();
    if (c.size() <= 1) return {};
    std::vector<Scalar> v(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) v[k - 1] = c[k] * Scalar(static_cast<long>(k));
    return Polynomial<Scalar>(std::move(v));
}

/// Horner evaluation; the point may live in a larger ring than the coefficients.
template <class Scalar, class Point>
Point evaluate(const Polynomial<Scalar>& p, const Point& x) {
    Point acc(0);
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Point(*it);
    return acc;
}

/// p * x^k
template <class Scalar>
Polynomial<Scalar> shift_up(const Polynomial<Scalar>& p, std::size_t k) {
    if (p.is_zero()) return p;
    std::vector<Scalar> v(k, Scalar(0));
    v.insert(v.end(), p.coefficients().begin(), p.coefficients().end());
    return Polynomial<Scalar>(std::move(v));
}

/// p / x^k; throws DivisionRemainder unless x^k divides p.
template <class Scalar>
Polynomial<Scalar> divide_by_power(const Polynomial<Scalar>& p, std::size_t k) {
    const auto& c = p.coefficients();
    for (std::size_t i = 0; i < std::min(k, c.size()); ++i)
        if (c[i] != 0) throw DivisionRemainder("polynomial not divisible by x^" + std::to_string(k));
    if (c.size() <= k) return {};
    return Polynomial<Scalar>(std::vector<Scalar>(c.begin() + static_cast<long>(k), c.end()));
}

/// (a*x + b)^e
template <class Scalar>
Polynomial<Scalar> linear_power(const Scalar& a, const Scalar& b, std::size_t e) {
    Polynomial<Scalar> base{b, a};
    Polynomial<Scalar> r = Polynomial<Scalar>::constant(Scalar(1));
    for (std::size_t i = 0; i < e; ++i) r *= base;
    return r;
}

QPolynomial to_rational(const NPolynomial& p);

/// Throws NotIntegral if any coefficient has a denominator.
NPolynomial to_integral(const QPolynomial& p);

/// Human-readable rendering, e.g. "21*z^4 + 21*z^5".
std::string to_string(const QPolynomial& p, const std::string& var = "z");
std::string to_string(const NPolynomial& p, const std::string& var = "N");

// ---------------------------------------------------------------------------
// Truncated power series

template <class Scalar>
class Series {
public:
    using scalar_type = Scalar;

    Series() = default;

    /// Coefficients of z^0..z^order; missing entries are zero, extra ones dropped.
    Series(std::vector<Scalar> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1, Scalar(0));
    }

    static Series from_polynomial(const Polynomial<Scalar>& p, std::size_t order) {
        return Series(p.coefficients(), order);
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    Scalar operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(0); }
    const std::vector<Scalar>& coefficients() const { return coeffs_; }

    friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

    friend Series operator+(const Series& a, const Series& b) {
        const std::size_t t = std::min(a.order(), b.order());
        std::vector<Scalar> v(t + 1);
        for (std::size_t k = 0; k <= t; ++k) v[k] = a.coeffs_[k] + b.coeffs_[k];
        return Series(std::move(v), t);
    }

    friend Series operator-(const Series& a, const Series& b) {
        const std::size_t t = std::min(a.order(), b.order());
        std::vector<Scalar> v(t + 1);
        for (std::size_t k = 0; k <= t; ++k) v[k] = a.coeffs_[k] - b.coeffs_[k];
        return Series(std::move(v), t);
    }

    friend Series operator*(const Series& a, const Series& b) {
        const std::size_t t = std::min(a.order(), b.order());
        std::vector<Scalar> v(t + 1, Scalar(0));
        for (std::size_t i = 0; i <= t; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; i + j <= t; ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Series(std::move(v), t);
    }

    friend Series operator*(const Scalar& s, const Series& a) {
        std::vector<Scalar> v(a.coeffs_);
        for (auto& c : v) c *= s;
        return Series(std::move(v), a.order());
    }

    /// Product with a polynomial, keeping this series' order.
    friend Series operator*(const Polynomial<Scalar>& p, const Series& a) {
        return Series::from_polynomial(p, a.order()) * a;
    }

    /// True iff every coefficient vanishes.
    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c == 0; });
    }

    /// The polynomial made of coefficients 0..k.
    Polynomial<Scalar> truncate(std::size_t k) const {
        std::vector<Scalar> v(coeffs_.begin(), coeffs_.begin() + static_cast<long>(std::min(k + 1, coeffs_.size())));
        return Polynomial<Scalar>(std::move(v));
    }

private:
    std::vector<Scalar> coeffs_{Scalar(0)};
};

using QSeries = Series<BigRational>;

/// Termwise derivative; the result has order one less.
template <class Scalar>
Series<Scalar> derivative(const Series<Scalar>& s) {
    const std::size_t t = s.order();
    if (t == 0) return Series<Scalar>({}, 0);
    std::vector<Scalar> v(t);
    for (std::size_t k = 1; k <= t; ++k) v[k - 1] = s[k] * Scalar(static_cast<long>(k));
    return Series<Scalar>(std::move(v), t - 1);
}

// ---------------------------------------------------------------------------
// (1-4z) machinery

/// (1-4z)^alpha truncated at z^order: a_0 = 1, a_{k+1} = a_k * 4(k - alpha)/(k + 1).
QSeries binomial_series(const BigRational& alpha, std::size_t order);

/// Rewrites p(z) in the basis u = 1 - 4z: the result b has sum b_m u^m = p((1-u)/4).
QPolynomial to_u_basis(const QPolynomial& p);

/// Inverse substitution u = 1 - 4z.
QPolynomial from_u_basis(const QPolynomial& b);

/// Coefficients A_j with q(z)/(1-4z)^k = sum_j A_j/(1-4z)^j. Only nonzero
/// terms are stored; requires degree(q) <= k - 2.
std::map<long, BigRational> partial_fractions(const QPolynomial& q, long k);

/// Series of sum_j A_j (1-4z)^{-j}.
QSeries reconstruct_partial_fractions(const std::map<long, BigRational>& terms, std::size_t order);

/// [z^n] (1-4z)^{-k} = binom(n+k-1, k-1) 4^n, for k >= 1.
BigInt inverse_power_coefficient(long k, long n);

}  // namespace chordgenus
