#include "chordgenus/oracle.hpp"
#include "chordgenus/young.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <thread>

using namespace chordgenus;

namespace {

CycleType ones(std::size_t m) { return CycleType::from_lengths(std::vector<std::size_t>(m, 1)); }
CycleType twos(std::size_t n) { return CycleType::from_lengths(std::vector<std::size_t>(n, 2)); }
CycleType as_class(const YoungDiagram& y) { return CycleType::from_lengths(y.rows()); }

// Semistandard tableaux with entries 1..N, filled row by row.
long count_ssyt(const YoungDiagram& y, std::size_t N) {
    const auto& rows = y.rows();
    std::vector<std::vector<std::size_t>> fill;
    for (auto r : rows) fill.emplace_back(r, 0);
    std::function<long(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) -> long {
        if (i == rows.size()) return 1;
        if (j == rows[i]) return rec(i + 1, 0);
        long total = 0;
        std::size_t lo = 1;
        if (j > 0) lo = std::max(lo, fill[i][j - 1]);
        if (i > 0) lo = std::max(lo, fill[i - 1][j] + 1);
        for (std::size_t v = lo; v <= N; ++v) {
            fill[i][j] = v;
            total += rec(i, j + 1);
        }
        return total;
    };
    return rec(0, 0);
}

// Standard tableaux by removing corners.
BigInt count_syt(const std::vector<std::size_t>& rows) {
    if (rows.empty()) return 1;
    BigInt total = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i + 1 < rows.size() && rows[i + 1] == rows[i]) continue;
        auto smaller = rows;
        if (--smaller[i] == 0) smaller.erase(smaller.begin() + static_cast<long>(i));
        total += count_syt(smaller);
    }
    return total;
}

bool edge_connected(const std::vector<std::pair<std::size_t, std::size_t>>& squares) {
    if (squares.empty()) return false;
    std::set<std::pair<std::size_t, std::size_t>> rest(squares.begin(), squares.end());
    std::vector<std::pair<std::size_t, std::size_t>> stack{squares.front()};
    rest.erase(squares.front());
    while (!stack.empty()) {
        auto [r, c] = stack.back();
        stack.pop_back();
        const std::pair<std::size_t, std::size_t> nbrs[] = {{r + 1, c}, {r - 1, c}, {r, c + 1}, {r, c - 1}};
        for (const auto& nb : nbrs)
            if (rest.erase(nb)) stack.push_back(nb);
    }
    return rest.empty();
}

}  // namespace

TEST_CASE("Young diagram basics") {
    CHECK_THROWS(YoungDiagram({1, 2}));
    CHECK_THROWS(YoungDiagram({2, 0}));
    const auto h = YoungDiagram::hook(1, 2);
    CHECK(h.rows() == std::vector<std::size_t>{3, 1});
    CHECK(h.as_hook() == HookShape{1, 2});
    CHECK_FALSE(YoungDiagram({2, 2}).as_hook());
    CHECK(partitions(4).size() == 5);
    CHECK(partitions(4).front() == YoungDiagram({4}));
    CHECK(partitions(4).back() == YoungDiagram({1, 1, 1, 1}));
    CHECK(partitions(10).size() == 42);
    const auto ps = partitions(8);
    CHECK(std::is_sorted(ps.rbegin(), ps.rend()));
}

TEST_CASE("rim hooks are connected border strips leaving a diagram") {
    for (std::size_t m = 1; m <= 9; ++m) {
        for (const auto& y : partitions(m)) {
            for (std::size_t len = 1; len <= m; ++len) {
                for (const auto& h : rim_hooks(y, len)) {
                    CHECK(h.squares.size() == len);
                    CHECK(h.remainder.size() + len == m);
                    CHECK(edge_connected(h.squares));
                    std::set<std::size_t> rows;
                    for (auto [r, c] : h.squares) rows.insert(r);
                    CHECK(rows.size() == h.height);
                    // No 2x2 block inside a border strip.
                    std::set<std::pair<std::size_t, std::size_t>> sq(h.squares.begin(), h.squares.end());
                    for (auto [r, c] : h.squares) CHECK_FALSE((sq.count({r + 1, c}) && sq.count({r, c + 1}) && sq.count({r + 1, c + 1})));
                }
            }
        }
    }
}

TEST_CASE("Murnaghan-Nakayama examples") {
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& y : partitions(2 * n))
            if (y.row_count() == 1) CHECK(mn_character(y, as_class(y)) == 1);
    const auto y12 = YoungDiagram::hook(1, 2);
    CHECK(mn_character(y12, ones(4)) == 3);
    CHECK(mn_character(y12, twos(2)) == -1);
    CHECK(mn_character(YoungDiagram({4}), CycleType::from_lengths({3, 1})) == 1);
    CHECK_THROWS_AS(mn_character(y12, ones(5)), SizeMismatch);
}

TEST_CASE("dimensions equal standard tableaux counts and square-sum to m!") {
    for (std::size_t m = 1; m <= 8; ++m) {
        BigInt sum = 0;
        for (const auto& y : partitions(m)) {
            const BigInt d = mn_character(y, ones(m));
            CHECK(d > 0);
            CHECK(d == count_syt(y.rows()));
            sum += d * d;
        }
        CHECK(sum == factorial(static_cast<std::int64_t>(m)));
    }
}

TEST_CASE("character value does not depend on cycle removal order") {
    std::mt19937 rng(5);
    for (std::size_t m = 2; m <= 9; ++m) {
        for (const auto& y : partitions(m)) {
            for (const auto& cls : partitions(m)) {
                auto lengths = cls.rows();
                std::shuffle(lengths.begin(), lengths.end(), rng);
                CHECK(mn_character_ordered(y, lengths) == mn_character(y, as_class(cls)));
            }
        }
    }
}

TEST_CASE("column orthogonality on class pairs") {
    std::mt19937 rng(11);
    for (std::size_t m = 2; m <= 8; ++m) {
        const auto ps = partitions(m);
        std::uniform_int_distribution<std::size_t> pick(0, ps.size() - 1);
        for (int trial = 0; trial < 12; ++trial) {
            const auto s1 = as_class(ps[pick(rng)]);
            const auto s2 = trial % 3 == 0 ? s1 : as_class(ps[pick(rng)]);
            BigInt sum = 0;
            for (const auto& y : ps) sum += mn_character(y, s1) * mn_character(y, s2);
            const BigInt want = s1 == s2 ? factorial(static_cast<std::int64_t>(m)) / class_size(s1) : BigInt(0);
            CHECK(sum == want);
        }
    }
}

TEST_CASE("hook closed forms") {
    CHECK(hook_char_identity(0, 5) == 1);
    CHECK(hook_char_identity(1, 2) == 3);
    CHECK(hook_char_matching(2, 1, 2) == -1);
    CHECK(hook_char_matching(1, 2, 2) == -1);
    for (std::size_t n = 1; n <= 6; ++n) {
        for (std::size_t p = 0; p < 2 * n; ++p) {
            const std::size_t q = 2 * n - 1 - p;
            const auto y = YoungDiagram::hook(p, q);
            CHECK(hook_char_identity(p, q) == mn_character(y, ones(2 * n)));
            CHECK(hook_char_matching(p, q, n) == mn_character(y, twos(n)));
        }
    }
    CHECK_THROWS_AS(hook_char_matching(1, 1, 2), SizeMismatch);
}

TEST_CASE("tau sums") {
    CHECK(tau_sum(YoungDiagram::hook(1, 2), 2) == -1);
    CHECK(tau_sum(YoungDiagram({2, 2}), 2) == 0);
    for (std::size_t n = 1; n <= 5; ++n) {
        CHECK(tau_sum(YoungDiagram({2 * n}), n) == static_cast<long>(2 * n - 1));
        for (const auto& y : partitions(2 * n)) {
            const BigInt s = tau_sum(y, n);
            if (auto h = y.as_hook()) {
                const long v = static_cast<long>(h->q) - static_cast<long>(h->p);
                CHECK(s == (h->p % 2 == 0 ? v : -v));
            } else {
                CHECK(s == 0);
            }
        }
    }
}

TEST_CASE("Schur values at all-ones") {
    CHECK(schur_all_ones(YoungDiagram({1}), 5) == 5);
    CHECK(schur_all_ones(YoungDiagram::hook(1, 2), 4) == 45);
    CHECK(schur_all_ones(YoungDiagram({2, 2}), 2) == 1);
    for (std::size_t m = 1; m <= 6; ++m) {
        for (const auto& y : partitions(m)) {
            for (std::size_t N = 1; N <= 4; ++N) {
                CHECK(schur_all_ones(y, N) == count_ssyt(y, N));
                CHECK(evaluate(schur_all_ones_poly(y), BigRational(static_cast<long>(N))) ==
                      BigRational(schur_all_ones(y, N)));
            }
        }
    }
    // Hook values: binom(N+q, 2n) binom(2n-1, q).
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t p = 0; p < 2 * n; ++p) {
            const std::size_t q = 2 * n - 1 - p;
            for (std::size_t N = 2 * n; N <= 2 * n + 3; ++N)
                CHECK(schur_all_ones(YoungDiagram::hook(p, q), N) ==
                      binomial(static_cast<long>(N + q), static_cast<long>(2 * n)) *
                          binomial(static_cast<long>(2 * n - 1), static_cast<long>(q)));
        }
}

TEST_CASE("character route to U(n, N)") {
    CHECK(charsum_U(1) == NPolynomial::monomial(1, 1));
    CHECK(charsum_U(2)[2] == 8);
    for (std::size_t n = 1; n <= 5; ++n) CHECK(charsum_U(n) == oracle_U(n));
    for (std::size_t n = 1; n <= 4; ++n) {
        CHECK(charsum_U_orthogonality(n) == charsum_U(n));
        CHECK(charsum_U_orthogonality(n, true) == charsum_U(n));
    }
    CHECK_THROWS_AS(charsum_U_orthogonality(6), LimitExceeded);
}

TEST_CASE("Kronecker class sums match brute force over matchings") {
    for (std::size_t n = 1; n <= 3; ++n) {
        std::vector<Permutation> taus;
        for (std::size_t c = 1; c <= 2 * n; ++c) taus.push_back(Permutation::split_cycle(2 * n, c));
        taus.push_back(Permutation::identity(2 * n));
        for (const auto& tau : taus) {
            std::map<CycleType, long> counted;
            for (const auto& sigma : matchings(n)) counted[cycle_type(compose(tau, sigma))] += 1;
            for (const auto& y : partitions(2 * n)) {
                const auto pi = as_class(y);
                CHECK(matching_class_count(tau, pi) == BigRational(counted[pi]));
            }
        }
    }
}

TEST_CASE("character cache is safe under concurrent use") {
    std::vector<BigInt> results(4);
    std::vector<std::thread> pool;
    for (int t = 0; t < 4; ++t)
        pool.emplace_back([&, t] {
            BigInt acc = 0;
            for (const auto& y : partitions(10)) acc += mn_character(y, twos(5)) * (t + 1);
            results[static_cast<std::size_t>(t)] = acc / (t + 1);
        });
    for (auto& th : pool) th.join();
    for (const auto& r : results) CHECK(r == results[0]);
}
