#include "chordgenus/verify.hpp"

#include "chordgenus/one_backbone.hpp"
#include "chordgenus/permutation.hpp"
#include "chordgenus/two_backbone.hpp"
#include "chordgenus/young.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace chordgenus {

std::string render_factored(const QPolynomial& p) {
    if (p.is_zero()) return "0";
    const long v = p.valuation();
    std::ostringstream out;
    if (v > 0) out << "z" << (v > 1 ? "^" + std::to_string(v) : "");
    const QPolynomial rest = divide_by_power(p, static_cast<std::size_t>(v));
    if (rest.degree() == 0 && rest[0] == 1 && v > 0) return out.str();
    if (v > 0) out << "*(";
    bool first = true;
    for (long k = rest.degree(); k >= 0; --k) {
        const BigRational c = rest[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const BigRational mag = abs(c);
        out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        if (k == 0 || mag != 1) out << to_string(mag) << (k > 0 ? "*" : "");
        if (k > 0) out << "z" << (k > 1 ? "^" + std::to_string(k) : "");
    }
    if (v > 0) out << ")";
    return out.str();
}

const std::vector<std::string>& printed_P2_table() {
    static const std::vector<std::string> table{
        "z",
        "z^3*(20*z + 21)",
        "z^5*(1696*z^2 + 6096*z + 1485)",
        "z^7*(330560*z^3 + 2614896*z^2 + 1954116*z + 225225)",
        "z^9*(118652416*z^4 + 1661701632*z^3 + 2532145536*z^2 + 851296320*z + 59520825)",
        "z^11*(68602726400*z^5 + 1495077259776*z^4 + 3850801696512*z^3 + 2561320295136*z^2 + "
        "505213089300*z + 24325703325)",
    };
    return table;
}

namespace {

class Runner {
public:
    void check(const std::string& name, const std::function<std::string()>& body) {
        const auto start = std::chrono::steady_clock::now();
        Check c{name, false, 0, {}};
        try {
            c.detail = body();
            c.passed = c.detail.empty();
        } catch (const std::exception& e) {
            c.detail = std::string("exception: ") + e.what();
        }
        c.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        checks_.push_back(std::move(c));
    }
    std::vector<Check> take() { return std::move(checks_); }

private:
    std::vector<Check> checks_;
};

std::string mismatch(const std::string& what, const std::string& got, const std::string& want) {
    return what + ": got " + got + ", expected " + want;
}

std::string table_str(const GenusTable& t) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto& [g, c] : t.counts) {
        out << (first ? "" : ", ") << "g" << g << ": " << c.get_str();
        first = false;
    }
    out << "}";
    return out.str();
}

GenusTable formula_table(int backbones, std::size_t n) {
    GenusTable t{backbones, n, {}};
    for (std::size_t g = 0; 2 * g + (backbones == 2 ? 1 : 0) <= n; ++g) {
        BigInt c = backbones == 1 ? hz_count(g, n) : c2_count(g, n);
        if (c != 0) t.counts[g] = c;
    }
    return t;
}

void oracle_suite(Runner& r, std::size_t max_n, const OracleConfig& cfg) {
    const std::size_t top = std::min(max_n, cfg.limit);
    r.check("one-backbone oracle equals Harer-Zagier counts, n <= " + std::to_string(top), [&]() -> std::string {
        for (std::size_t n = 0; n <= top; ++n) {
            const auto got = oracle_one_backbone(n, cfg), want = formula_table(1, n);
            if (!(got == want)) return mismatch("n=" + std::to_string(n), table_str(got), table_str(want));
            if (got.total() != double_factorial_odd(static_cast<std::int64_t>(n))) return "total is not (2n-1)!!";
        }
        return {};
    });
    r.check("two-backbone oracle equals theorem counts, n <= " + std::to_string(top), [&]() -> std::string {
        for (std::size_t n = 0; n <= top; ++n) {
            const auto got = oracle_two_backbone(n, cfg), want = formula_table(2, n);
            if (!(got == want)) return mismatch("n=" + std::to_string(n), table_str(got), table_str(want));
        }
        return {};
    });
    const std::size_t sym = std::min({max_n, cfg.symbolic_limit, std::size_t{5}});
    r.check("oracle Q = U - V and all pairs total (2n-1)(2n-1)!!, n <= " + std::to_string(sym),
            [&]() -> std::string {
                for (std::size_t n = 1; n <= sym; ++n) {
                    const NPolynomial u = oracle_U(n, cfg), q = oracle_Q(n, cfg);
                    if (!(q == u - oracle_V(n, cfg))) return "Q != U - V at n=" + std::to_string(n);
                    if (!(q == genus_poly_Q(n))) return "oracle Q != theorem Q at n=" + std::to_string(n);
                    BigInt total = 0;
                    for (const auto& c : u.coefficients()) total += c;
                    if (total != (2 * static_cast<long>(n) - 1) * double_factorial_odd(static_cast<std::int64_t>(n)))
                        return "pair total wrong at n=" + std::to_string(n);
                }
                return {};
            });
}

void characters_suite(Runner& r, std::size_t max_n) {
    r.check("tau sum vanishes on non-hooks and equals (-1)^p(q-p) on hooks, 2n <= 10", []() -> std::string {
        for (std::size_t n = 1; n <= 5; ++n)
            for (const auto& y : partitions(2 * n))
                if (tau_sum(y, n) != tau_sum_closed_form(y)) return "mismatch at 2n=" + std::to_string(2 * n);
        return {};
    });
    r.check("hook closed forms agree with Murnaghan-Nakayama, 2n <= 12", []() -> std::string {
        for (std::size_t n = 1; n <= 6; ++n) {
            const auto ones = CycleType::from_lengths(std::vector<std::size_t>(2 * n, 1));
            const auto twos = CycleType::from_lengths(std::vector<std::size_t>(n, 2));
            for (std::size_t p = 0; p < 2 * n; ++p) {
                const std::size_t q = 2 * n - 1 - p;
                const auto y = YoungDiagram::hook(p, q);
                if (mn_character(y, ones) != hook_char_identity(p, q)) return "identity class, hook " + std::to_string(p);
                if (mn_character(y, twos) != hook_char_matching(p, q, n)) return "matching class, hook " + std::to_string(p);
            }
        }
        return {};
    });
    r.check("sum of squared dimensions is (2n)!, 2n <= 8", []() -> std::string {
        for (std::size_t m = 1; m <= 8; ++m) {
            BigInt s = 0;
            const auto ones = CycleType::from_lengths(std::vector<std::size_t>(m, 1));
            for (const auto& y : partitions(m)) {
                const BigInt d = mn_character(y, ones);
                s += d * d;
            }
            if (s != factorial(static_cast<std::int64_t>(m))) return "m=" + std::to_string(m);
        }
        return {};
    });
    const std::size_t top = std::min<std::size_t>(max_n, 5);
    r.check("charsum U equals oracle U, n <= " + std::to_string(top), [&]() -> std::string {
        for (std::size_t n = 1; n <= top; ++n) {
            const auto a = charsum_U(n), b = oracle_U(n);
            if (!(a == b)) return mismatch("n=" + std::to_string(n), to_string(a), to_string(b));
        }
        return {};
    });
    const std::size_t orth = std::min<std::size_t>(max_n, 4);
    r.check("orthogonality sum equals charsum U, n <= " + std::to_string(orth), [&]() -> std::string {
        for (std::size_t n = 1; n <= orth; ++n) {
            const auto a = charsum_U_orthogonality(n), b = charsum_U(n);
            if (!(a == b)) return mismatch("n=" + std::to_string(n), to_string(a), to_string(b));
            if (!(charsum_U_orthogonality(n, true) == a)) return "hook restriction changes the sum";
        }
        return {};
    });
}

void hz_suite(Runner& r, std::size_t max_n) {
    const std::size_t order = std::max<std::size_t>(12, max_n);
    r.check("Harer-Zagier generating function identity to z^" + std::to_string(order), [&]() -> std::string {
        return hz_identity_check(order) ? "" : "coefficients differ";
    });
    r.check("U generating function identity to z^" + std::to_string(order), [&]() -> std::string {
        return u_generating_identity_check(order) ? "" : "coefficients differ";
    });
    r.check("closed forms c_1, c_2, c_3 equal the recursion, n <= 40", []() -> std::string {
        for (std::size_t g = 1; g <= 3; ++g)
            for (std::size_t n = 0; n <= 40; ++n)
                if (closed_form_c(g, n) != hz_count(g, n))
                    return "g=" + std::to_string(g) + " n=" + std::to_string(n);
        return {};
    });
    r.check("c_g(2g) = (4g)!/(4^g (2g+1)!), g <= 10", []() -> std::string {
        for (std::size_t g = 0; g <= 10; ++g) {
            const auto gg = static_cast<std::int64_t>(g);
            if (hz_count(g, 2 * g) * pow_int(4, g) * factorial(2 * gg + 1) != factorial(4 * gg))
                return "g=" + std::to_string(g);
        }
        return {};
    });
    r.check("ODE residual vanishes to z^40, g <= 4", []() -> std::string {
        for (std::size_t g = 1; g <= 4; ++g)
            if (!ode_residual(g, 40).is_zero()) return "g=" + std::to_string(g);
        return {};
    });
}

void pipeline_suite(Runner& r) {
    r.check("ODE pipeline equals series fit, g = 2..6", []() -> std::string {
        for (std::size_t g = 2; g <= 6; ++g)
            if (!(Pg_via_ode(g) == Pg_via_series(g)))
                return mismatch("g=" + std::to_string(g), to_string(Pg_via_ode(g)), to_string(Pg_via_series(g)));
        return {};
    });
    r.check("P_1, P_2, P_3 equal the published polynomials", []() -> std::string {
        const QPolynomial p3 = BigRational(11) * QPolynomial::monomial(1, 6) *
                               QPolynomial{BigRational(135), BigRational(558), BigRational(158)};
        if (!(P_poly(1) == QPolynomial::monomial(1, 2))) return "P_1";
        if (!(P_poly(2) == QPolynomial::monomial(21, 4) + QPolynomial::monomial(21, 5))) return "P_2";
        if (!(P_poly(3) == p3)) return "P_3";
        return {};
    });
    r.check("P2 table g = 0..5", []() -> std::string {
        for (std::size_t g = 0; g <= 5; ++g) {
            const std::string got = render_factored(P2_poly(g));
            if (got != printed_P2_table()[g]) return mismatch("g=" + std::to_string(g), got, printed_P2_table()[g]);
        }
        return {};
    });
    r.check("structural claims for P2, g <= 6", []() -> std::string {
        for (std::size_t g = 0; g <= 6; ++g) {
            const QPolynomial p = P2_poly(g);
            const auto gg = static_cast<std::int64_t>(g);
            for (const auto& c : p.coefficients())
                if (!is_integer(c)) return "non-integral coefficient, g=" + std::to_string(g);
            if (p.degree() > 3 * static_cast<long>(g) + 1) return "degree, g=" + std::to_string(g);
            if (p.valuation() != 2 * static_cast<long>(g) + 1) return "valuation, g=" + std::to_string(g);
            const BigRational lead_support(factorial(4 * gg + 4),
                                           pow_int(4, g + 1) * factorial(2 * gg + 3));
            if (p[2 * g + 1] != make_rational(lead_support.get_num(), lead_support.get_den()))
                return "z^{2g+1} coefficient, g=" + std::to_string(g);
            if (evaluate(p, BigRational(1, 4)) <= 0) return "P2(1/4) not positive, g=" + std::to_string(g);
        }
        return {};
    });
    r.check("R2 from P2 equals R2 from R_g relation, degree <= g, R2(1/4) != 0, g = 1..6", []() -> std::string {
        for (std::size_t g = 1; g <= 6; ++g) {
            const QPolynomial a = R2_poly(g);
            if (!(a == R2_from_R(g))) return "routes differ, g=" + std::to_string(g);
            if (a.degree() > static_cast<long>(g)) return "degree, g=" + std::to_string(g);
            if (evaluate(a, BigRational(1, 4)) == 0) return "R2(1/4) = 0, g=" + std::to_string(g);
        }
        return {};
    });
    r.check("P_g(1/4): recurrence, evaluation and Gamma form agree, g <= 6", []() -> std::string {
        if (Pg_at_quarter(2) != BigRational(105, 1024)) return "P_2(1/4) != 105/1024";
        for (std::size_t g = 1; g <= 6; ++g) {
            const BigRational v = Pg_at_quarter(g);
            if (v == 0 || v != evaluate(P_poly(g), BigRational(1, 4))) return "evaluation, g=" + std::to_string(g);
            if (v != Pg_at_quarter_gamma(g)) return "Gamma form, g=" + std::to_string(g);
        }
        return {};
    });
    r.check("closed forms c2_0, c2_1, c2_2 and their recursions, n <= 40", []() -> std::string {
        for (std::size_t g = 0; g <= 2; ++g)
            for (std::size_t n = 0; n <= 40; ++n)
                if (closed_form_c2(g, n) != c2_count(g, n)) return "g=" + std::to_string(g) + " n=" + std::to_string(n);
        if (!corollary_recursion_check(1, 40)) return "g=1 recursion";
        if (!corollary_recursion_check(2, 40)) return "g=2 recursion";
        return {};
    });
    r.check("Q(n,N) = U(n,N) - V(n,N) via characters, n <= 5", []() -> std::string {
        for (std::size_t n = 1; n <= 5; ++n) {
            if (!(genus_poly_Q(n) == charsum_U(n) - genus_poly_V(n))) return "n=" + std::to_string(n);
            if (!(genus_poly_U(n) == charsum_U(n))) return "u_g(n) route, n=" + std::to_string(n);
        }
        return {};
    });
}

void asymptotics_suite(Runner& r) {
    r.check("g = 0 asymptotic ratio is exactly 1, n = 1..60", []() -> std::string {
        for (std::size_t n = 1; n <= 60; ++n)
            if (asymptotic_ratio(0, n) != 1) return "n=" + std::to_string(n);
        return {};
    });
    for (std::size_t g : {1, 2}) {
        r.check("g = " + std::to_string(g) + " ratio approaches 1 (n = 100, 400) and is within 10% at n = 400",
                [g]() -> std::string {
                    const BigRational one(1);
                    const BigRational e100 = abs(asymptotic_ratio(g, 100) - one);
                    const BigRational e400 = abs(asymptotic_ratio(g, 400) - one);
                    if (!(e400 < e100)) return "not closer at n=400";
                    if (!(e400 < BigRational(1, 10))) return "|ratio(400) - 1| = " + std::to_string(e400.get_d());
                    return {};
                });
    }
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"oracle", "characters", "hz", "pipeline", "asymptotics", "all"};
    return names;
}

std::vector<Check> run_suite(const std::string& suite, std::size_t max_n, const OracleConfig& cfg) {
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw std::invalid_argument("unknown suite: " + suite);
    Runner r;
    const bool all = suite == "all";
    if (all || suite == "oracle") oracle_suite(r, max_n, cfg);
    if (all || suite == "characters") characters_suite(r, max_n);
    if (all || suite == "hz") hz_suite(r, max_n);
    if (all || suite == "pipeline") pipeline_suite(r);
    if (all || suite == "asymptotics") asymptotics_suite(r);
    return r.take();
}

}  // namespace chordgenus
