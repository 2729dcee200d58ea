#include "chordgenus/permutation.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace chordgenus {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (Point v : images_) {
        if (v < 1 || v > images_.size() || seen[v]) throw std::invalid_argument("images do not form a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t size) {
    std::vector<Point> v(size);
    std::iota(v.begin(), v.end(), Point{1});
    Permutation p;
    p.images_ = std::move(v);
    return p;
}

Permutation Permutation::from_cycles(std::size_t size, const std::vector<std::vector<Point>>& cycles) {
    std::vector<Point> v(size);
    std::iota(v.begin(), v.end(), Point{1});
    std::vector<bool> used(size + 1, false);
    for (const auto& cyc : cycles) {
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            const Point a = cyc[k];
            if (a < 1 || a > size || used[a]) throw std::invalid_argument("cycles are not disjoint or out of range");
            used[a] = true;
            v[a - 1] = cyc[(k + 1) % cyc.size()];
        }
    }
    return Permutation(std::move(v));
}

Permutation Permutation::split_cycle(std::size_t size, std::size_t c) {
    if (c < 1 || c > size) throw std::invalid_argument("split point out of range");
    std::vector<Point> v(size);
    for (std::size_t i = 1; i <= size; ++i) {
        if (i <= c)
            v[i - 1] = static_cast<Point>(i == c ? 1 : i + 1);
        else
            v[i - 1] = static_cast<Point>(i == size ? c + 1 : i + 1);
    }
    Permutation p;
    p.images_ = std::move(v);
    return p;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw SizeMismatch("compose: permutations of different sizes");
    std::vector<Point> v(p.size());
    for (Point i = 1; i <= p.size(); ++i) v[i - 1] = p(q(i));
    return Permutation(std::move(v));
}

Permutation inverse(const Permutation& p) {
    std::vector<Point> v(p.size());
    for (Point i = 1; i <= p.size(); ++i) v[p(i) - 1] = i;
    return Permutation(std::move(v));
}

namespace {

template <class Map>
std::size_t count_orbits(std::size_t size, Map f) {
    std::size_t cycles = 0;
    if (size <= 64) {
        std::uint64_t seen = 0;
        for (Point i = 1; i <= size; ++i) {
            if (seen >> (i - 1) & 1U) continue;
            ++cycles;
            for (Point j = i; !(seen >> (j - 1) & 1U); j = f(j)) seen |= std::uint64_t{1} << (j - 1);
        }
        return cycles;
    }
    std::vector<bool> seen(size + 1, false);
    for (Point i = 1; i <= size; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (Point j = i; !seen[j]; j = f(j)) seen[j] = true;
    }
    return cycles;
}

}  // namespace

std::size_t cycle_count(const Permutation& p) {
    return count_orbits(p.size(), [&](Point i) { return p(i); });
}

std::size_t product_cycle_count(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw SizeMismatch("product_cycle_count: permutations of different sizes");
    return count_orbits(p.size(), [&](Point i) { return p(q(i)); });
}

CycleType::CycleType(std::map<std::size_t, std::size_t> multiplicities) {
    for (const auto& [k, m] : multiplicities) {
        if (k == 0) throw std::invalid_argument("cycle length must be positive");
        if (m > 0) mult_.emplace(k, m);
    }
}

CycleType CycleType::from_lengths(const std::vector<std::size_t>& lengths) {
    std::map<std::size_t, std::size_t> m;
    for (auto k : lengths) ++m[k];
    return CycleType(std::move(m));
}

std::size_t CycleType::weight() const {
    std::size_t w = 0;
    for (const auto& [k, m] : mult_) w += k * m;
    return w;
}

std::size_t CycleType::cycles() const {
    std::size_t c = 0;
    for (const auto& [k, m] : mult_) c += m;
    return c;
}

std::vector<std::size_t> CycleType::lengths() const {
    std::vector<std::size_t> out;
    for (auto it = mult_.rbegin(); it != mult_.rend(); ++it) out.insert(out.end(), it->second, it->first);
    return out;
}

CycleType cycle_type(const Permutation& p) {
    std::map<std::size_t, std::size_t> m;
    std::vector<bool> seen(p.size() + 1, false);
    for (Point i = 1; i <= p.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (Point j = i; !seen[j]; j = p(j)) {
            seen[j] = true;
            ++len;
        }
        ++m[len];
    }
    return CycleType(std::move(m));
}

BigInt class_size(const CycleType& t) {
    BigInt denom = 1;
    for (const auto& [k, m] : t.multiplicities())
        denom *= pow_int(BigInt(static_cast<unsigned long>(k)), m) * factorial(static_cast<std::int64_t>(m));
    return factorial(static_cast<std::int64_t>(t.weight())) / denom;
}

MatchingStream::MatchingStream(std::size_t n) : n_(n), choice_(n, 0), free_before_(n + 1, 0) {
    if (n > 32) throw LimitExceeded("MatchingStream supports at most 32 chords");
    current_.images_.assign(2 * n, 0);
    free_before_[0] = n == 0 ? 0 : (n == 32 ? ~std::uint64_t{0} : (std::uint64_t{1} << (2 * n)) - 1);
    rebuild(0);
}

void MatchingStream::rebuild(std::size_t from_level) {
    std::uint64_t mask = free_before_[from_level];
    for (std::size_t level = from_level; level < n_; ++level) {
        const int a = std::countr_zero(mask);
        mask &= mask - 1;
        std::uint64_t rest = mask;
        for (std::size_t skip = choice_[level]; skip > 0; --skip) rest &= rest - 1;
        const int b = std::countr_zero(rest);
        mask &= ~(std::uint64_t{1} << b);
        current_.images_[static_cast<std::size_t>(a)] = static_cast<Point>(b + 1);
        current_.images_[static_cast<std::size_t>(b)] = static_cast<Point>(a + 1);
        free_before_[level + 1] = mask;
    }
}

void MatchingStream::advance() {
    if (!valid_) return;
    for (std::size_t level = n_; level-- > 0;) {
        const std::size_t options = 2 * (n_ - level) - 1;
        if (choice_[level] + 1 < options) {
            ++choice_[level];
            std::fill(choice_.begin() + static_cast<long>(level) + 1, choice_.end(), 0);
            rebuild(level);
            return;
        }
    }
    valid_ = false;
}

std::vector<Permutation> matchings(std::size_t n) {
    std::vector<Permutation> out;
    for (MatchingStream s(n); s.valid(); s.advance()) out.push_back(s.current());
    return out;
}

std::size_t TransitivityChecker::find(std::size_t x) {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

bool TransitivityChecker::operator()(std::span<const Permutation* const> gens, std::size_t size) {
    if (size <= 1) return true;
    parent_.resize(size + 1);
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    std::size_t classes = size;
    for (const Permutation* g : gens) {
        if (g->size() != size) throw SizeMismatch("is_transitive: generator of the wrong size");
        for (Point i = 1; i <= size; ++i) {
            const std::size_t a = find(i), b = find((*g)(i));
            if (a != b) {
                parent_[a] = b;
                if (--classes == 1) return true;
            }
        }
    }
    return classes == 1;
}

bool is_transitive(std::span<const Permutation> gens, std::size_t size) {
    std::vector<const Permutation*> ptrs;
    for (const auto& g : gens) ptrs.push_back(&g);
    TransitivityChecker check;
    return check(ptrs, size);
}

}  // namespace chordgenus
