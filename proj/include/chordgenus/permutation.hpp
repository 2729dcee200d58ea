#pragma once

// Permutations of {1..m} with 1-based point labels, cycle bookkeeping,
// perfect-matching enumeration and joint transitivity.

#include "chordgenus/exact.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace chordgenus {

using Point = std::uint32_t;

class Permutation {
public:
    Permutation() = default;

    /// images[i-1] is the image of point i. Throws std::invalid_argument unless bijective.
    explicit Permutation(std::vector<Point> images);

    static Permutation identity(std::size_t size);

    /// Builds a permutation of {1..size} from disjoint cycles written as in (1,3,2)(4,5).
    static Permutation from_cycles(std::size_t size, const std::vector<std::vector<Point>>& cycles);

    /// tau_c = (1,...,c)(c+1,...,size); c == size gives the single long cycle.
    static Permutation split_cycle(std::size_t size, std::size_t c);

    std::size_t size() const { return images_.size(); }
    Point operator()(Point i) const { return images_[i - 1]; }
    const std::vector<Point>& images() const { return images_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    friend class MatchingStream;
    std::vector<Point> images_;
};

/// Right-to-left: compose(p, q)(i) = p(q(i)). Throws SizeMismatch.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

std::size_t cycle_count(const Permutation& p);

/// Number of cycles of p∘q without materializing the product.
std::size_t product_cycle_count(const Permutation& p, const Permutation& q);

/// Multiplicities k -> number of k-cycles; only nonzero entries are stored.
class CycleType {
public:
    CycleType() = default;
    explicit CycleType(std::map<std::size_t, std::size_t> multiplicities);

    /// From a partition given as a list of cycle lengths, in any order.
    static CycleType from_lengths(const std::vector<std::size_t>& lengths);

    const std::map<std::size_t, std::size_t>& multiplicities() const { return mult_; }

    /// sum k * pi_k
    std::size_t weight() const;
    std::size_t cycles() const;

    /// Cycle lengths in non-increasing order.
    std::vector<std::size_t> lengths() const;

    friend bool operator==(const CycleType&, const CycleType&) = default;
    friend auto operator<=>(const CycleType&, const CycleType&) = default;

private:
    std::map<std::size_t, std::size_t> mult_;
};

CycleType cycle_type(const Permutation& p);

/// (2n)! / prod_k (k^{pi_k} pi_k!)
BigInt class_size(const CycleType& t);

/// Streams every fixed-point-free involution of {1..2n} exactly once. The
/// smallest unmatched point is paired with each larger unmatched point in
/// increasing order, recursively. State is O(n); supports n <= 32.
class MatchingStream {
public:
    explicit MatchingStream(std::size_t n);

    /// False once exhausted.
    bool valid() const { return valid_; }
    const Permutation& current() const { return current_; }
    void advance();

private:
    void rebuild(std::size_t from_level);

    std::size_t n_;
    std::vector<std::size_t> choice_;
    std::vector<std::uint64_t> free_before_;
    Permutation current_;
    bool valid_ = true;
};

/// Materialized stream, for small n.
std::vector<Permutation> matchings(std::size_t n);

/// Union-find over the cycles of a set of generators. Reusable across calls.
class TransitivityChecker {
public:
    bool operator()(std::span<const Permutation* const> gens, std::size_t size);

private:
    std::size_t find(std::size_t x);
    std::vector<std::size_t> parent_;
};

/// True iff the generators' combined orbits form a single class on {1..size}.
bool is_transitive(std::span<const Permutation> gens, std::size_t size);

}  // namespace chordgenus
