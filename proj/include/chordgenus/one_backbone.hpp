#pragma once

// One backbone: the Harer–Zagier recursion for c_g(n), the genus polynomial
// P(n, N), and two independent routes to P_g(z) with
// C_g(z) = P_g(z) (1-4z)^{1/2-3g}.

#include "chordgenus/exact.hpp"
#include "chordgenus/polynomial.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace chordgenus {

/// c_g(n), memoized in a process-wide dense table. Zero when 2g > n.
BigInt hz_count(std::size_t g, std::size_t n);

/// P(n, N) = sum_g c_g(n) N^{n+1-2g}
NPolynomial genus_poly_P(std::size_t n);

/// Coefficients [z^0..z^order] of ((1+z)/(1-z))^N, each a polynomial in N,
/// expanded as exp(N log((1+z)/(1-z))).
std::vector<QPolynomial> power_series_in_N(std::size_t order);

/// 1 + 2 sum_n P(n,N)/(2n-1)!! z^{n+1}, coefficients up to z^order.
std::vector<QPolynomial> hz_left_side(std::size_t order);

/// Compares hz_left_side and power_series_in_N coefficient by coefficient.
bool hz_identity_check(std::size_t order);

QSeries C_series(std::size_t g, std::size_t order);

/// P_g = C_g (1-4z)^{3g-1/2} truncated; the tail up to order 3g+8 must vanish.
/// Throws NotPolynomial otherwise. Requires g >= 1.
QPolynomial Pg_via_series(std::size_t g);

/// Intermediate objects of one step of the ODE pipeline, P_g -> P_{g+1}.
struct OdeStep {
    QPolynomial P1, P2, P3;  // numerators of the first three derivatives
    QPolynomial Q;
    std::map<long, BigRational> A;  // partial fraction coefficients, j = 2..3g+4
    QPolynomial next;               // P_{g+1}
};

/// Throws DivisionRemainder if the bracket is not divisible by z.
OdeStep ode_step(const QPolynomial& Pg, std::size_t g);

/// P_g from P_1 = z^2 through repeated ode_step. Requires g >= 1.
QPolynomial Pg_via_ode(std::size_t g);

/// Cached Pg_via_series.
const QPolynomial& P_poly(std::size_t g);

/// R_g = P_g / z^{2g}
QPolynomial R_poly(std::size_t g);

/// P_g(1/4) from the rational recurrence seeded with P_1(1/4) = 1/16.
BigRational Pg_at_quarter(std::size_t g);

/// P_g(1/4) from the Gamma-function closed form, with the Gamma values
/// reduced to rational Pochhammer products through Γ(5/6)Γ(7/6)Γ(3/2) = π^{3/2}/6.
BigRational Pg_at_quarter_gamma(std::size_t g);

/// Explicit c_1, c_2, c_3 formulas; zero when n < 2g. Throws std::invalid_argument for other g.
BigInt closed_form_c(std::size_t g, std::size_t n);

/// z(1-4z) C_g' + (1-2z) C_g - Phi_{g-1} as a series of the given order. g >= 1.
QSeries ode_residual(std::size_t g, std::size_t order);

}  // namespace chordgenus
