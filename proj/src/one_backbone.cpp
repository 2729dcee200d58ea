#include "chordgenus/one_backbone.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>

namespace chordgenus {

namespace {

// Dense (n, g) table grown on demand. Readers share, growth is exclusive.
class HarerZagierTable {
public:
    BigInt get(std::size_t g, std::size_t n) {
        if (2 * g > n) return 0;
        {
            std::shared_lock lock(mutex_);
            if (n < rows_.size()) return rows_[n][g];
        }
        std::unique_lock lock(mutex_);
        while (rows_.size() <= n) extend();
        return rows_[n][g];
    }

private:
    BigInt at(std::size_t g, long n) const {
        if (n < 0 || 2 * g > static_cast<std::size_t>(n)) return 0;
        return rows_[static_cast<std::size_t>(n)][g];
    }

    // (n+1) c_g(n) = 2(2n-1) c_g(n-1) + (2n-1)(n-1)(2n-3) c_{g-1}(n-2)
    void extend() {
        const long n = static_cast<long>(rows_.size());
        std::vector<BigInt> row(static_cast<std::size_t>(n / 2) + 1, BigInt(0));
        if (n == 0) {
            row[0] = 1;
        } else {
            for (std::size_t g = 0; g < row.size(); ++g) {
                BigInt rhs = BigInt(2 * (2 * n - 1)) * at(g, n - 1);
                if (g > 0) rhs += BigInt((2 * n - 1) * (n - 1) * (2 * n - 3)) * at(g - 1, n - 2);
                row[g] = rhs / BigInt(n + 1);
            }
        }
        rows_.push_back(std::move(row));
    }

    std::shared_mutex mutex_;
    std::vector<std::vector<BigInt>> rows_;
};

HarerZagierTable& hz_table() {
    static HarerZagierTable table;
    return table;
}

}  // namespace

BigInt hz_count(std::size_t g, std::size_t n) { return hz_table().get(g, n); }

NPolynomial genus_poly_P(std::size_t n) {
    std::vector<BigInt> v(n + 2, BigInt(0));
    for (std::size_t g = 0; 2 * g <= n; ++g) v[n + 1 - 2 * g] = hz_count(g, n);
    return NPolynomial(std::move(v));
}

std::vector<QPolynomial> power_series_in_N(std::size_t order) {
    std::vector<BigRational> log_coeffs(order + 1, BigRational(0));
    for (std::size_t k = 1; k <= order; k += 2) log_coeffs[k] = BigRational(2, static_cast<unsigned long>(k));
    const QSeries log_ratio(log_coeffs, order);

    std::vector<QPolynomial> out(order + 1);
    QSeries power(std::vector<BigRational>{BigRational(1)}, order);  // L^k
    BigInt k_factorial = 1;
    for (std::size_t k = 0; k <= order; ++k) {
        if (k > 0) {
            power = power * log_ratio;
            k_factorial *= static_cast<unsigned long>(k);
        }
        for (std::size_t m = k; m <= order; ++m) {
            if (power[m] == 0) continue;
            out[m] += QPolynomial::monomial(power[m] / BigRational(k_factorial), k);
        }
    }
    return out;
}

std::vector<QPolynomial> hz_left_side(std::size_t order) {
    std::vector<QPolynomial> out(order + 1);
    out[0] = QPolynomial::constant(1);
    for (std::size_t m = 1; m <= order; ++m) {
        const std::size_t n = m - 1;
        out[m] = BigRational(BigInt(2), double_factorial_odd(static_cast<std::int64_t>(n))) *
                 to_rational(genus_poly_P(n));
    }
    return out;
}

bool hz_identity_check(std::size_t order) { return hz_left_side(order) == power_series_in_N(order); }

QSeries C_series(std::size_t g, std::size_t order) {
    std::vector<BigRational> v(order + 1);
    for (std::size_t n = 0; n <= order; ++n) v[n] = BigRational(hz_count(g, n));
    return QSeries(std::move(v), order);
}

QPolynomial Pg_via_series(std::size_t g) {
    if (g < 1) throw std::invalid_argument("Pg_via_series requires g >= 1");
    const std::size_t order = 3 * g + 8;
    const QSeries product = C_series(g, order) * binomial_series(BigRational(6 * static_cast<long>(g) - 1, 2), order);
    for (std::size_t k = 3 * g; k <= order; ++k)
        if (product[k] != 0)
            throw NotPolynomial("C_g (1-4z)^{3g-1/2} has a nonzero coefficient at z^" + std::to_string(k));
    return product.truncate(3 * g - 1);
}

OdeStep ode_step(const QPolynomial& Pg, std::size_t g) {
    const auto gg = static_cast<long>(g);
    const QPolynomial u{BigRational(1), BigRational(-4)};  // 1 - 4z
    const auto z_pow = [](std::size_t k) { return QPolynomial::monomial(BigRational(1), k); };

    OdeStep s;
    s.P1 = u * derivative(Pg) + BigRational(12 * gg - 2) * Pg;
    s.P2 = u * derivative(s.P1) + BigRational(12 * gg + 2) * s.P1;
    s.P3 = u * derivative(s.P2) + BigRational(12 * gg + 6) * s.P2;
    s.Q = BigRational(4) * z_pow(5) * s.P3 + BigRational(24) * z_pow(4) * u * s.P2 +
          BigRational(27) * z_pow(3) * u * u * s.P1 + BigRational(3) * z_pow(2) * u * u * u * Pg;

    const long k = 3 * gg + 4;
    s.A = partial_fractions(s.Q, k);

    // Bracket in the variable u: sum_j -A_j/(j-1) u^{k-j} + sum_j A_j/(j-1) u^{k-1}.
    QPolynomial bracket_u;
    for (const auto& [j, a] : s.A) {
        const BigRational w = a / BigRational(j - 1);
        bracket_u += QPolynomial::monomial(-w, static_cast<std::size_t>(k - j));
        bracket_u += QPolynomial::monomial(w, static_cast<std::size_t>(k - 1));
    }
    const QPolynomial bracket = from_u_basis(bracket_u);
    s.next = BigRational(-1, 4) * divide_by_power(bracket, 1);
    return s;
}

QPolynomial Pg_via_ode(std::size_t g) {
    if (g < 1) throw std::invalid_argument("Pg_via_ode requires g >= 1");
    QPolynomial p = QPolynomial::monomial(BigRational(1), 2);
    for (std::size_t h = 1; h < g; ++h) p = ode_step(p, h).next;
    return p;
}

const QPolynomial& P_poly(std::size_t g) {
    static std::shared_mutex mutex;
    static std::map<std::size_t, std::unique_ptr<QPolynomial>> cache;
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(g); it != cache.end()) return *it->second;
    }
    auto value = std::make_unique<QPolynomial>(Pg_via_series(g));
    std::unique_lock lock(mutex);
    auto [it, inserted] = cache.try_emplace(g, std::move(value));
    return *it->second;
}

QPolynomial R_poly(std::size_t g) { return divide_by_power(P_poly(g), 2 * g); }

BigRational Pg_at_quarter(std::size_t g) {
    if (g < 1) throw std::invalid_argument("Pg_at_quarter requires g >= 1");
    BigRational v(1, 16);
    for (std::size_t h = 1; h < g; ++h) {
        const BigRational hh(static_cast<long>(h));
        v *= BigRational(9) * (hh + BigRational(1, 2)) * (hh + BigRational(1, 6)) * (hh - BigRational(1, 6)) /
             (BigRational(4) * (hh + 1));
    }
    return v;
}

BigRational Pg_at_quarter_gamma(std::size_t g) {
    if (g < 1) throw std::invalid_argument("Pg_at_quarter_gamma requires g >= 1");
    // (9/4)^g Γ(g-1/6) Γ(g+1/2) Γ(g+1/6) / (6 π^{3/2} Γ(g+1)), with
    // Γ(g+a) = Γ(1+a) prod_{k=0}^{g-2} (1+a+k).
    BigRational rising = 1;
    for (std::size_t k = 0; k + 2 <= g; ++k) {
        const BigRational kk(static_cast<long>(k));
        rising *= (BigRational(5, 6) + kk) * (BigRational(3, 2) + kk) * (BigRational(7, 6) + kk);
    }
    const BigRational nine_quarters_pow(pow_int(9, g), pow_int(4, g));
    BigRational v = nine_quarters_pow * rising / (BigRational(36) * BigRational(factorial(static_cast<std::int64_t>(g))));
    v.canonicalize();
    return v;
}

BigInt closed_form_c(std::size_t g, std::size_t n) {
    if (g < 1 || g > 3) throw std::invalid_argument("closed_form_c covers g = 1, 2, 3");
    if (n < 2 * g) return 0;
    const auto nn = static_cast<long>(n);
    const BigInt dfact = double_factorial_odd(nn);
    BigRational v;
    switch (g) {
        case 1:  // 2^{n-2} (2n-1)!! / (3 (n-2)!)
            v = BigRational(pow_int(2, n - 2) * dfact) / BigRational(3 * factorial(nn - 2));
            break;
        case 2:  // 2^{n-4} (5n-2) (2n-1)!! / (90 (n-4)!)
            v = BigRational(pow_int(2, n - 4) * (5 * nn - 2) * dfact) / BigRational(90 * factorial(nn - 4));
            break;
        default:  // 2^{n-6} (35n^2 - 77n + 12) (2n-1)!! / (5670 (n-6)!)
            v = BigRational(pow_int(2, n - 6) * BigInt(35 * nn * nn - 77 * nn + 12) * dfact) /
                BigRational(5670 * factorial(nn - 6));
            break;
    }
    return to_integer(v);
}

QSeries ode_residual(std::size_t g, std::size_t order) {
    if (g < 1) throw std::invalid_argument("ode_residual requires g >= 1");
    const std::size_t work = order + 3;
    const QSeries c = C_series(g, work);
    const QSeries prev = C_series(g - 1, work);
    const QSeries d1 = derivative(prev), d2 = derivative(d1), d3 = derivative(d2);
    const auto z_pow = [](std::size_t k) { return QPolynomial::monomial(BigRational(1), k); };

    const QSeries phi = z_pow(2) * (BigRational(4) * (z_pow(3) * d3) + BigRational(24) * (z_pow(2) * d2) +
                                    BigRational(27) * (z_pow(1) * d1) + BigRational(3) * prev);
    const QSeries lhs = QPolynomial{BigRational(0), BigRational(1), BigRational(-4)} * derivative(c) +
                        QPolynomial{BigRational(1), BigRational(-2)} * c;
    const QSeries residual = lhs - phi;
    return QSeries(residual.coefficients(), order);
}

}  // namespace chordgenus
