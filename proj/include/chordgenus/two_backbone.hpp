#pragma once

// Two backbones: C_g^[2](z) = P_g^[2](z) / (1-4z)^{3g+2} with
// P_g^[2] = z^{-1} P_{g+1} - sum_{g1=1}^{g} P_{g1} P_{g+1-g1}.

#include "chordgenus/exact.hpp"
#include "chordgenus/polynomial.hpp"

#include <cstddef>

namespace chordgenus {

QPolynomial P2_poly(std::size_t g);

/// [z^n] P2_poly(g) / (1-4z)^{3g+2} by binomial convolution.
BigInt c2_count(std::size_t g, std::size_t n);

/// Q(n, N) = sum_g c2_count(g, n) N^{n-2g}
NPolynomial genus_poly_Q(std::size_t n);

/// u_g(n) = c_{g+1}(n+1) - 2 c_{g+1}(n), n = 0..order.
QSeries u_series(std::size_t g, std::size_t order);

/// U(n, N) assembled from u_series coefficients, plus the N^{n+2} term
/// c_0(n+1) - 2 c_0(n) contributed by fully disconnected genus-0 pairs.
NPolynomial genus_poly_U(std::size_t n);

/// V(n, N) = sum_{d=1}^{n-1} P(d, N) P(n-d, N)
NPolynomial genus_poly_V(std::size_t n);

/// Left and right sides of
///   -3 - 4Nz - 2N^2 z^2 + 2 sum_{n>=1} U(n,N)/(2n-1)!! z^{n+2} = (z+z^3) F' - 3F,
/// F = ((1+z)/(1-z))^N, with U taken from charsum_U. Coefficients up to z^order.
bool u_generating_identity_check(std::size_t order);

/// Explicit formulas for g = 0, 1, 2; throws std::invalid_argument otherwise.
BigInt closed_form_c2(std::size_t g, std::size_t n);

/// Checks c2_count against the first-order rational recursions for g = 1, 2
/// for n from 2g+1 up to max_n - 1 (denominators vanishing are skipped).
bool corollary_recursion_check(std::size_t g, std::size_t max_n);

/// P2_poly(g)(1/4) / (3g+1)! * n^{3g+1} * 4^n
BigRational asymptotic_estimate(std::size_t g, std::size_t n);
BigRational asymptotic_ratio(std::size_t g, std::size_t n);

/// P2_poly(g) / z^{2g+1}. Throws DivisionRemainder if the division is not exact.
QPolynomial R2_poly(std::size_t g);

/// R_{g+1} - z sum_{g1=1}^{g} R_{g1} R_{g+1-g1}, computed from R_g = P_g / z^{2g}.
QPolynomial R2_from_R(std::size_t g);

}  // namespace chordgenus
