#include "chordgenus/one_backbone.hpp"
#include "chordgenus/oracle.hpp"

#include <doctest.h>

#include <thread>

using namespace chordgenus;

namespace {

QPolynomial z_pow(std::size_t k) { return QPolynomial::monomial(BigRational(1), k); }

}  // namespace

TEST_CASE("Harer-Zagier counts") {
    CHECK(hz_count(0, 0) == 1);
    CHECK(hz_count(0, 3) == 5);
    CHECK(hz_count(1, 3) == 10);
    CHECK(hz_count(3, 6) == factorial(12) / (64 * factorial(7)));
    CHECK(hz_count(3, 6) == 1485);
    CHECK(hz_count(2, 3) == 0);
    for (std::size_t n = 0; n <= 8; ++n) {
        const auto t = oracle_one_backbone(n);
        for (std::size_t g = 0; g <= 4; ++g) CHECK(hz_count(g, n) == t.at(g));
    }
}

TEST_CASE("closed forms for c_1, c_2, c_3") {
    CHECK(closed_form_c(1, 4) == 70);
    CHECK(closed_form_c(2, 5) == 483);
    CHECK(closed_form_c(3, 6) == 1485);
    CHECK(closed_form_c(2, 3) == 0);
    for (std::size_t g = 1; g <= 3; ++g)
        for (std::size_t n = 0; n <= 40; ++n) CHECK(closed_form_c(g, n) == hz_count(g, n));
    CHECK_THROWS(closed_form_c(4, 10));
}

TEST_CASE("genus polynomials P(n, N)") {
    CHECK(genus_poly_P(1) == NPolynomial::monomial(1, 2));
    CHECK(genus_poly_P(2) == NPolynomial{BigInt(0), BigInt(1), BigInt(0), BigInt(2)});
    CHECK(genus_poly_P(3) == NPolynomial::monomial(5, 4) + NPolynomial::monomial(10, 2));
    for (std::size_t n = 0; n <= 6; ++n) CHECK(genus_poly_P(n) == oracle_P(n));
}

TEST_CASE("Harer-Zagier generating function identity") {
    const auto rhs = power_series_in_N(2);
    CHECK(rhs[1] == QPolynomial{BigRational(0), BigRational(2)});
    CHECK(rhs[2] == QPolynomial{BigRational(0), BigRational(0), BigRational(2)});
    const auto lhs = hz_left_side(2);
    CHECK(lhs[1] == rhs[1]);
    CHECK(lhs[2] == rhs[2]);
    CHECK(hz_identity_check(1));
    CHECK(hz_identity_check(10));
    CHECK(hz_identity_check(16));
}

TEST_CASE("C_g series") {
    CHECK(C_series(0, 3).coefficients() == std::vector<BigRational>{1, 1, 2, 5});
    const QSeries c1 = C_series(1, 4);
    CHECK(c1.coefficients() == std::vector<BigRational>{0, 0, 1, 10, 70});
    const QSeries c2 = C_series(2, 4);
    CHECK(c2[3] == 0);
    CHECK(c2[4] == 21);
}

TEST_CASE("P_g via series fit") {
    CHECK(Pg_via_series(1) == z_pow(2));
    CHECK(Pg_via_series(2) == BigRational(21) * z_pow(4) + BigRational(21) * z_pow(5));
    CHECK(Pg_via_series(3) ==
          BigRational(11) * z_pow(6) * QPolynomial{BigRational(135), BigRational(558), BigRational(158)});
    CHECK_THROWS(Pg_via_series(0));
}

TEST_CASE("one step of the ODE pipeline from P_1") {
    const OdeStep s = ode_step(z_pow(2), 1);
    CHECK(s.Q.degree() <= 5);
    CHECK(s.next == BigRational(21) * z_pow(4) + BigRational(21) * z_pow(5));
    const BigRational q_at_quarter = evaluate(s.Q, BigRational(1, 4));
    // 4^{-4} (12g+6)(12g+2)(12g-2) P_g(1/4) at g = 1
    CHECK(q_at_quarter == make_rational(18 * 14 * 10, 256) * BigRational(1, 16));
    CHECK(s.A.rbegin()->first == 7);
    CHECK(s.A.rbegin()->second == q_at_quarter);
    CHECK(s.A.begin()->first >= 2);
    CHECK(evaluate(s.P3, BigRational(1, 4)) == make_rational(18 * 14 * 10, 16));
}

TEST_CASE("ODE pipeline agrees with the series fit") {
    for (std::size_t g = 1; g <= 6; ++g) CHECK(Pg_via_ode(g) == Pg_via_series(g));
    for (std::size_t g = 1; g <= 6; ++g) CHECK(ode_step(P_poly(g), g).Q.degree() <= 3 * static_cast<long>(g) + 2);
}

TEST_CASE("structure of P_g") {
    for (std::size_t g = 1; g <= 6; ++g) {
        const QPolynomial& p = P_poly(g);
        const auto gg = static_cast<std::int64_t>(g);
        CHECK(p.degree() <= 3 * static_cast<long>(g) - 1);
        CHECK(p.valuation() == 2 * static_cast<long>(g));
        CHECK(p[2 * g] == BigRational(factorial(4 * gg) / (pow_int(4, g) * factorial(2 * gg + 1))));
        for (const auto& c : p.coefficients()) {
            CHECK(is_integer(c));
            CHECK(c >= 0);
        }
        CHECK(R_poly(g).degree() <= static_cast<long>(g) - 1);
        CHECK(evaluate(R_poly(g), BigRational(1, 4)) != 0);
    }
}

TEST_CASE("P_g(1/4)") {
    CHECK(Pg_at_quarter(1) == BigRational(1, 16));
    CHECK(Pg_at_quarter(2) == BigRational(105, 1024));
    CHECK(Pg_at_quarter(2) == BigRational(21, 256) * BigRational(5, 4));
    for (std::size_t g = 1; g <= 6; ++g) {
        CHECK(Pg_at_quarter(g) == evaluate(P_poly(g), BigRational(1, 4)));
        CHECK(Pg_at_quarter(g) == Pg_at_quarter_gamma(g));
        CHECK(Pg_at_quarter(g) != 0);
    }
}

TEST_CASE("ODE residual vanishes") {
    for (std::size_t g = 1; g <= 4; ++g) CHECK(ode_residual(g, 40).is_zero());
}

TEST_CASE("memo tables are safe under concurrent use") {
    std::vector<BigInt> got(4);
    std::vector<std::thread> pool;
    for (int t = 0; t < 4; ++t)
        pool.emplace_back([&, t] { got[static_cast<std::size_t>(t)] = hz_count(5, 60 + 10 * t) - hz_count(5, 60 + 10 * t); });
    for (auto& th : pool) th.join();
    for (const auto& v : got) CHECK(v == 0);
    CHECK(hz_count(2, 90) == closed_form_c(2, 90));
}
