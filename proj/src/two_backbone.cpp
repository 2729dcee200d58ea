#include "chordgenus/two_backbone.hpp"

#include "chordgenus/one_backbone.hpp"
#include "chordgenus/young.hpp"

#include <stdexcept>

namespace chordgenus {

QPolynomial P2_poly(std::size_t g) {
    QPolynomial p = divide_by_power(P_poly(g + 1), 1);
    for (std::size_t g1 = 1; g1 <= g; ++g1) p -= P_poly(g1) * P_poly(g + 1 - g1);
    return p;
}

BigInt c2_count(std::size_t g, std::size_t n) {
    const QPolynomial p = P2_poly(g);
    const long k = 3 * static_cast<long>(g) + 2;
    BigRational sum = 0;
    for (long i = 0; i <= p.degree() && i <= static_cast<long>(n); ++i) {
        const BigRational& c = p.coefficients()[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        sum += c * BigRational(inverse_power_coefficient(k, static_cast<long>(n) - i));
    }
    return to_integer(sum);
}

NPolynomial genus_poly_Q(std::size_t n) {
    std::vector<BigInt> v(n + 1, BigInt(0));
    for (std::size_t g = 0; 2 * g + 1 <= n; ++g) v[n - 2 * g] = c2_count(g, n);
    return NPolynomial(std::move(v));
}

QSeries u_series(std::size_t g, std::size_t order) {
    std::vector<BigRational> v(order + 1);
    for (std::size_t n = 0; n <= order; ++n)
        v[n] = BigRational(hz_count(g + 1, n + 1) - 2 * hz_count(g + 1, n));
    return QSeries(std::move(v), order);
}

NPolynomial genus_poly_U(std::size_t n) {
    if (n == 0) return {};
    std::vector<BigInt> v(n + 3, BigInt(0));
    for (std::size_t g = 0; 2 * g <= n; ++g) v[n - 2 * g] = to_integer(u_series(g, n)[n]);
    // Pairs with r = n + 2 are two genus-0 one-backbone diagrams side by side;
    // the same relation holds with g = -1.
    v[n + 2] = hz_count(0, n + 1) - 2 * hz_count(0, n);
    return NPolynomial(std::move(v));
}

NPolynomial genus_poly_V(std::size_t n) {
    NPolynomial v;
    for (std::size_t d = 1; d + 1 <= n; ++d) v += genus_poly_P(d) * genus_poly_P(n - d);
    return v;
}

bool u_generating_identity_check(std::size_t order) {
    const auto F = power_series_in_N(order + 1);
    const QPolynomial N{BigRational(0), BigRational(1)};

    std::vector<QPolynomial> lhs(order + 1);
    lhs[0] = QPolynomial::constant(-3);
    if (order >= 1) lhs[1] = BigRational(-4) * N;
    if (order >= 2) lhs[2] = BigRational(-2) * N * N;
    for (std::size_t m = 3; m <= order; ++m) {
        const std::size_t n = m - 2;
        lhs[m] += BigRational(BigInt(2), double_factorial_odd(static_cast<std::int64_t>(n))) *
                  to_rational(charsum_U(n));
    }

    // (z + z^3) F' - 3F: [z^m] = m F_m + (m-2) F_{m-2} - 3 F_m.
    for (std::size_t m = 0; m <= order; ++m) {
        QPolynomial rhs = BigRational(static_cast<long>(m) - 3) * F[m];
        if (m >= 2) rhs += BigRational(static_cast<long>(m) - 2) * F[m - 2];
        if (!(rhs == lhs[m])) return false;
    }
    return true;
}

BigInt closed_form_c2(std::size_t g, std::size_t n) {
    const auto nn = static_cast<long>(n);
    const auto falling = [&](long k) {
        BigInt f = 1;
        for (long i = 0; i < k; ++i) f *= nn - i;
        return f;
    };
    // 4^{e} for possibly negative e, as a rational.
    const auto four_pow = [](long e) {
        return e >= 0 ? BigRational(pow_int(4, static_cast<unsigned long>(e)))
                      : BigRational(BigInt(1), pow_int(4, static_cast<unsigned long>(-e)));
    };
    BigRational v;
    switch (g) {
        case 0:  // n 4^{n-1}
            v = BigRational(BigInt(nn)) * four_pow(nn - 1);
            break;
        case 1:  // (13n+3) n(n-1)(n-2) 4^{n-3} / 12
            v = BigRational(BigInt(13 * nn + 3) * falling(3)) * four_pow(nn - 3) / BigRational(12);
            break;
        case 2:  // (445n^2 - 401n - 210) n(n-1)...(n-4) 4^{n-6} / 180
            v = BigRational(BigInt(445 * nn * nn - 401 * nn - 210) * falling(5)) * four_pow(nn - 6) /
                BigRational(180);
            break;
        default:
            throw std::invalid_argument("closed_form_c2 covers g = 0, 1, 2");
    }
    return to_integer(v);
}

bool corollary_recursion_check(std::size_t g, std::size_t max_n) {
    if (g != 1 && g != 2) throw std::invalid_argument("corollary_recursion_check covers g = 1, 2");
    const std::size_t first = 2 * g + 1;
    if (c2_count(g, first) != (g == 1 ? 21 : 1485)) return false;
    for (std::size_t i = 0; i < first; ++i)
        if (c2_count(g, i) != 0) return false;
    for (std::size_t n = first; n < max_n; ++n) {
        const BigInt x(static_cast<unsigned long>(n));
        BigInt num, den;
        if (g == 1) {
            num = 52 * x * x + 116 * x + 64;
            den = 13 * x * x - 23 * x - 6;
        } else {
            num = 1780 * x * x * x + 3736 * x * x + 1292 * x - 664;
            den = 445 * x * x * x - 2181 * x * x + 1394 * x + 840;
        }
        if (den == 0) continue;
        if (c2_count(g, n + 1) * den != num * c2_count(g, n)) return false;
    }
    return true;
}

BigRational asymptotic_estimate(std::size_t g, std::size_t n) {
    const unsigned long e = 3 * g + 1;
    const BigRational at_quarter = evaluate(P2_poly(g), BigRational(1, 4));
    BigRational v = at_quarter / BigRational(factorial(static_cast<std::int64_t>(e))) *
                    BigRational(pow_int(BigInt(static_cast<unsigned long>(n)), e) * pow_int(4, n));
    v.canonicalize();
    return v;
}

BigRational asymptotic_ratio(std::size_t g, std::size_t n) {
    BigRational r = BigRational(c2_count(g, n)) / asymptotic_estimate(g, n);
    r.canonicalize();
    return r;
}

QPolynomial R2_poly(std::size_t g) { return divide_by_power(P2_poly(g), 2 * g + 1); }

QPolynomial R2_from_R(std::size_t g) {
    QPolynomial sum;
    for (std::size_t g1 = 1; g1 <= g; ++g1) sum += R_poly(g1) * R_poly(g + 1 - g1);
    return R_poly(g + 1) - shift_up(sum, 1);
}

}  // namespace chordgenus
