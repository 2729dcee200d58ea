#include "chordgenus/young.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>

namespace chordgenus {

YoungDiagram::YoungDiagram(std::vector<std::size_t> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] == 0) throw std::invalid_argument("Young diagram rows must be positive");
        if (i > 0 && rows_[i] > rows_[i - 1]) throw std::invalid_argument("Young diagram rows must not increase");
    }
}

YoungDiagram YoungDiagram::hook(std::size_t p, std::size_t q) {
    std::vector<std::size_t> rows{q + 1};
    rows.insert(rows.end(), p, 1);
    return YoungDiagram(std::move(rows));
}

std::size_t YoungDiagram::size() const {
    std::size_t s = 0;
    for (auto r : rows_) s += r;
    return s;
}

std::optional<HookShape> YoungDiagram::as_hook() const {
    if (rows_.empty()) return std::nullopt;
    for (std::size_t i = 1; i < rows_.size(); ++i)
        if (rows_[i] != 1) return std::nullopt;
    return HookShape{rows_.size() - 1, rows_[0] - 1};
}

std::size_t YoungDiagram::column_length(std::size_t j) const {
    std::size_t len = 0;
    while (len < rows_.size() && rows_[len] > j) ++len;
    return len;
}

std::size_t YoungDiagram::hook_length(std::size_t i, std::size_t j) const {
    return (rows_[i] - j - 1) + (column_length(j) - i - 1) + 1;
}

std::vector<RimHook> rim_hooks(const YoungDiagram& y, std::size_t length) {
    std::vector<RimHook> out;
    const auto& rows = y.rows();
    const std::size_t ell = rows.size();
    if (length == 0 || ell == 0) return out;

    // Beta numbers: beta_i = lambda_i + (ell - 1 - i), strictly decreasing.
    std::vector<long> beta(ell);
    for (std::size_t i = 0; i < ell; ++i) beta[i] = static_cast<long>(rows[i] + (ell - 1 - i));
    const long m = static_cast<long>(length);

    for (std::size_t i = 0; i < ell; ++i) {
        const long target = beta[i] - m;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        std::vector<long> moved(beta);
        moved[i] = target;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<std::size_t> new_rows;
        for (std::size_t k = 0; k < ell; ++k) {
            const long part = moved[k] - static_cast<long>(ell - 1 - k);
            if (part > 0) new_rows.push_back(static_cast<std::size_t>(part));
        }
        RimHook h;
        h.length = length;
        h.remainder = YoungDiagram(new_rows);
        for (std::size_t r = 0; r < ell; ++r) {
            const std::size_t kept = r < new_rows.size() ? new_rows[r] : 0;
            if (kept < rows[r]) ++h.height;
            for (std::size_t col = kept; col < rows[r]; ++col) h.squares.emplace_back(r, col);
        }
        out.push_back(std::move(h));
    }
    return out;
}

std::vector<YoungDiagram> partitions(std::size_t m) {
    std::vector<YoungDiagram> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t, std::size_t)> gen = [&](std::size_t remaining, std::size_t max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            gen(remaining - part, part);
            cur.pop_back();
        }
    };
    gen(m, m);
    return out;
}

namespace {

using CharacterKey = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;

class CharacterCache {
public:
    std::optional<BigInt> find(const CharacterKey& key) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        if (it == table_.end()) return std::nullopt;
        return it->second;
    }
    void insert(CharacterKey key, BigInt value) {
        std::unique_lock lock(mutex_);
        table_.emplace(std::move(key), std::move(value));
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<CharacterKey, BigInt> table_;
};

CharacterCache& character_cache() {
    static CharacterCache cache;
    return cache;
}

// lengths sorted non-increasing; consumes from the front.
BigInt mn_recursive(const YoungDiagram& y, const std::vector<std::size_t>& lengths, std::size_t from) {
    if (from == lengths.size()) return y.empty() ? BigInt(1) : BigInt(0);
    CharacterKey key{y.rows(), std::vector<std::size_t>(lengths.begin() + static_cast<long>(from), lengths.end())};
    if (auto hit = character_cache().find(key)) return *hit;
    BigInt total = 0;
    for (const auto& h : rim_hooks(y, lengths[from])) {
        const BigInt sub = mn_recursive(h.remainder, lengths, from + 1);
        if ((h.height - 1) % 2 == 0)
            total += sub;
        else
            total -= sub;
    }
    character_cache().insert(std::move(key), total);
    return total;
}

}  // namespace

BigInt mn_character(const YoungDiagram& y, const CycleType& t) {
    if (y.size() != t.weight())
        throw SizeMismatch("mn_character: diagram has " + std::to_string(y.size()) + " squares, class has weight " +
                           std::to_string(t.weight()));
    return mn_recursive(y, t.lengths(), 0);
}

BigInt mn_character_ordered(const YoungDiagram& y, const std::vector<std::size_t>& cycle_lengths) {
    std::size_t w = 0;
    for (auto k : cycle_lengths) w += k;
    if (y.size() != w) throw SizeMismatch("mn_character_ordered: size mismatch");
    std::function<BigInt(const YoungDiagram&, std::size_t)> rec = [&](const YoungDiagram& d, std::size_t i) -> BigInt {
        if (i == cycle_lengths.size()) return d.empty() ? BigInt(1) : BigInt(0);
        BigInt total = 0;
        for (const auto& h : rim_hooks(d, cycle_lengths[i])) {
            if ((h.height - 1) % 2 == 0)
                total += rec(h.remainder, i + 1);
            else
                total -= rec(h.remainder, i + 1);
        }
        return total;
    };
    return rec(y, 0);
}

BigInt hook_char_identity(std::size_t p, std::size_t q) {
    return binomial(static_cast<std::int64_t>(p + q), static_cast<std::int64_t>(q));
}

BigInt hook_char_matching(std::size_t p, std::size_t q, std::size_t n) {
    if (p + q + 1 != 2 * n) throw SizeMismatch("hook_char_matching: p + q + 1 must equal 2n");
    const auto nm1 = static_cast<std::int64_t>(n) - 1;
    if (p % 2 == 0) {
        BigInt v = binomial(nm1, static_cast<std::int64_t>(p / 2));
        return (p / 2) % 2 == 0 ? v : BigInt(-v);
    }
    BigInt v = binomial(nm1, static_cast<std::int64_t>((p - 1) / 2));
    return ((p + 1) / 2) % 2 == 0 ? v : BigInt(-v);
}

BigInt tau_sum(const YoungDiagram& y, std::size_t n) {
    if (y.size() != 2 * n) throw SizeMismatch("tau_sum: diagram must have 2n squares");
    BigInt total = 0;
    for (std::size_t c = 1; c + 1 <= 2 * n; ++c) total += mn_character(y, CycleType::from_lengths({c, 2 * n - c}));
    return total;
}

BigInt tau_sum_closed_form(const YoungDiagram& y) {
    auto h = y.as_hook();
    if (!h) return 0;
    BigInt v = BigInt(static_cast<long>(h->q)) - BigInt(static_cast<long>(h->p));
    return h->p % 2 == 0 ? v : BigInt(-v);
}

BigInt schur_all_ones(const YoungDiagram& y, std::size_t N) {
    BigInt num = 1, den = 1;
    const auto& rows = y.rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i]; ++j) {
            num *= BigInt(static_cast<long>(N) + static_cast<long>(j) - static_cast<long>(i));
            den *= BigInt(static_cast<unsigned long>(y.hook_length(i, j)));
        }
    }
    return num / den;
}

QPolynomial schur_all_ones_poly(const YoungDiagram& y) {
    QPolynomial acc = QPolynomial::constant(1);
    BigInt den = 1;
    const auto& rows = y.rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i]; ++j) {
            acc *= QPolynomial{BigRational(static_cast<long>(j) - static_cast<long>(i)), BigRational(1)};
            den *= BigInt(static_cast<unsigned long>(y.hook_length(i, j)));
        }
    }
    return BigRational(1, 1) / BigRational(den) * acc;
}

QPolynomial binomial_in_N(long a, std::size_t k) {
    QPolynomial acc = QPolynomial::constant(1);
    for (std::size_t i = 0; i < k; ++i) acc *= QPolynomial{BigRational(a - static_cast<long>(i)), BigRational(1)};
    return BigRational(1) / BigRational(factorial(static_cast<std::int64_t>(k))) * acc;
}

NPolynomial charsum_U(std::size_t n) {
    if (n == 0) return {};
    const auto nn = static_cast<long>(n);
    QPolynomial sum;
    for (long j = 0; j <= nn - 1; ++j) {
        const BigRational sign_binom(j % 2 == 0 ? binomial(nn - 1, j) : BigInt(-binomial(nn - 1, j)));
        const QPolynomial bracket = BigRational(2 * nn - 4 * j - 1) * binomial_in_N(2 * nn - 2 * j - 1, 2 * n) +
                                    BigRational(2 * nn - 4 * j - 3) * binomial_in_N(2 * nn - 2 * j - 2, 2 * n);
        sum += sign_binom * bracket;
    }
    return to_integral(BigRational(double_factorial_odd(nn)) * sum);
}

NPolynomial charsum_U_orthogonality(std::size_t n, bool hooks_only, std::size_t limit) {
    if (n > limit)
        throw LimitExceeded("charsum_U_orthogonality: n = " + std::to_string(n) + " exceeds " + std::to_string(limit));
    if (n == 0) return {};
    const CycleType matching_class = CycleType::from_lengths(std::vector<std::size_t>(n, 2));
    const CycleType identity_class = CycleType::from_lengths(std::vector<std::size_t>(2 * n, 1));
    QPolynomial sum;
    for (const auto& y : partitions(2 * n)) {
        if (hooks_only && !y.as_hook()) continue;
        const BigInt ts = tau_sum(y, n);
        if (ts == 0) continue;
        const BigRational weight(mn_character(y, matching_class) * ts, mn_character(y, identity_class));
        sum += make_rational(weight.get_num(), weight.get_den()) * schur_all_ones_poly(y);
    }
    return to_integral(BigRational(double_factorial_odd(static_cast<std::int64_t>(n))) * sum);
}

BigRational matching_class_count(const Permutation& tau, const CycleType& pi) {
    const std::size_t m = tau.size();
    if (m % 2 != 0 || pi.weight() != m) throw SizeMismatch("matching_class_count: sizes must agree and be even");
    const std::size_t n = m / 2;
    const CycleType matching_class = CycleType::from_lengths(std::vector<std::size_t>(n, 2));
    const CycleType identity_class = CycleType::from_lengths(std::vector<std::size_t>(m, 1));
    const CycleType tau_class = cycle_type(tau);
    BigRational sum = 0;
    for (const auto& y : partitions(m)) {
        sum += BigRational(mn_character(y, matching_class) * mn_character(y, pi) * mn_character(y, tau_class)) /
               BigRational(mn_character(y, identity_class));
    }
    BigInt denom = 1;
    for (const auto& [k, mult] : pi.multiplicities())
        denom *= pow_int(BigInt(static_cast<unsigned long>(k)), mult) * factorial(static_cast<std::int64_t>(mult));
    BigRational r = BigRational(double_factorial_odd(static_cast<std::int64_t>(n))) / BigRational(denom) * sum;
    r.canonicalize();
    return r;
}

}  // namespace chordgenus
