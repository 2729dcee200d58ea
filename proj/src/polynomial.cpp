#include "chordgenus/polynomial.hpp"

#include <sstream>

namespace chordgenus {

QPolynomial to_rational(const NPolynomial& p) {
    std::vector<BigRational> v;
    v.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) v.emplace_back(c);
    return QPolynomial(std::move(v));
}

NPolynomial to_integral(const QPolynomial& p) {
    std::vector<BigInt> v;
    v.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) v.push_back(to_integer(c));
    return NPolynomial(std::move(v));
}

namespace {

template <class Scalar>
std::string render(const Polynomial<Scalar>& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    const auto& c = p.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        Scalar mag = abs(c[k]);
        if (first) {
            if (c[k] < 0) out << "-";
        } else {
            out << (c[k] < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1;
        if (k == 0 || !unit) out << to_string(Scalar(mag));
        if (k > 0) {
            if (!unit) out << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

}  // namespace

std::string to_string(const QPolynomial& p, const std::string& var) { return render(p, var); }
std::string to_string(const NPolynomial& p, const std::string& var) { return render(p, var); }

QSeries binomial_series(const BigRational& alpha, std::size_t order) {
    std::vector<BigRational> a(order + 1);
    a[0] = 1;
    for (std::size_t k = 0; k < order; ++k) {
        BigRational kk(static_cast<long>(k));
        a[k + 1] = a[k] * 4 * (kk - alpha) / BigRational(static_cast<long>(k + 1));
    }
    return QSeries(std::move(a), order);
}

QPolynomial to_u_basis(const QPolynomial& p) {
    // Horner in the substituted variable: z = 1/4 - u/4.
    const QPolynomial z_of_u{BigRational(1, 4), BigRational(-1, 4)};
    QPolynomial acc;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z_of_u + QPolynomial::constant(*it);
    return acc;
}

QPolynomial from_u_basis(const QPolynomial& b) {
    const QPolynomial u_of_z{BigRational(1), BigRational(-4)};
    QPolynomial acc;
    const auto& c = b.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * u_of_z + QPolynomial::constant(*it);
    return acc;
}

std::map<long, BigRational> partial_fractions(const QPolynomial& q, long k) {
    if (q.degree() > k - 2)
        throw DegreeTooHigh("partial_fractions: degree " + std::to_string(q.degree()) + " exceeds k-2 = " +
                            std::to_string(k - 2));
    // q(z) = sum_m b_m u^m, so q/u^k = sum_m b_m u^{m-k} and A_j = b_{k-j}.
    const QPolynomial b = to_u_basis(q);
    std::map<long, BigRational> terms;
    for (long m = 0; m <= b.degree(); ++m)
        if (b[static_cast<std::size_t>(m)] != 0) terms.emplace(k - m, b[static_cast<std::size_t>(m)]);
    return terms;
}

BigInt inverse_power_coefficient(long k, long n) {
    if (n < 0) return 0;
    if (k == 0) return n == 0 ? 1 : 0;
    return binomial(n + k - 1, k - 1) * pow_int(4, static_cast<unsigned long>(n));
}

QSeries reconstruct_partial_fractions(const std::map<long, BigRational>& terms, std::size_t order) {
    std::vector<BigRational> v(order + 1, BigRational(0));
    for (const auto& [j, a] : terms) {
        if (j >= 0) {
            for (std::size_t n = 0; n <= order; ++n)
                v[n] += a * BigRational(inverse_power_coefficient(j, static_cast<long>(n)));
        } else {
            // (1-4z)^{|j|} is a polynomial.
            const QPolynomial p = linear_power(BigRational(-4), BigRational(1), static_cast<std::size_t>(-j));
            for (std::size_t n = 0; n <= order; ++n) v[n] += a * p[n];
        }
    }
    return QSeries(std::move(v), order);
}

}  // namespace chordgenus
