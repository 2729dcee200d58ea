#pragma once

// Characters of the symmetric group via the Murnaghan–Nakayama rule, Schur
// values at all-ones, and the character-sum route to U(n, N).

#include "chordgenus/exact.hpp"
#include "chordgenus/permutation.hpp"
#include "chordgenus/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace chordgenus {

struct HookShape {
    std::size_t p = 0;  // rows of length one below the first row
    std::size_t q = 0;  // first row has length q + 1
    friend bool operator==(const HookShape&, const HookShape&) = default;
};

class YoungDiagram {
public:
    YoungDiagram() = default;

    /// Throws std::invalid_argument unless rows are positive and weakly decreasing.
    explicit YoungDiagram(std::vector<std::size_t> rows);

    static YoungDiagram hook(std::size_t p, std::size_t q);

    const std::vector<std::size_t>& rows() const { return rows_; }
    std::size_t size() const;
    std::size_t row_count() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }

    std::optional<HookShape> as_hook() const;

    /// Length of column j (0-based).
    std::size_t column_length(std::size_t j) const;

    /// arm + leg + 1 of square (i, j), 0-based.
    std::size_t hook_length(std::size_t i, std::size_t j) const;

    friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
    friend auto operator<=>(const YoungDiagram&, const YoungDiagram&) = default;

private:
    std::vector<std::size_t> rows_;
};

struct RimHook {
    std::vector<std::pair<std::size_t, std::size_t>> squares;  // (row, col), 0-based
    std::size_t length = 0;
    std::size_t height = 0;  // number of rows touched
    YoungDiagram remainder;
};

/// Every rim hook of the given length whose removal leaves a Young diagram.
std::vector<RimHook> rim_hooks(const YoungDiagram& y, std::size_t length);

/// Partitions of m in decreasing lexicographic order, starting with (m).
std::vector<YoungDiagram> partitions(std::size_t m);

/// chi^Y(t), removing cycles largest first, memoized. Throws SizeMismatch.
BigInt mn_character(const YoungDiagram& y, const CycleType& t);

/// Same value, removing cycles in the given order and without the cache.
BigInt mn_character_ordered(const YoungDiagram& y, const std::vector<std::size_t>& cycle_lengths);

/// chi^{p,q}([1^{2n}]) = binom(2n-1, q)
BigInt hook_char_identity(std::size_t p, std::size_t q);

/// chi^{p,q}([2^n]) from the even/odd closed form.
BigInt hook_char_matching(std::size_t p, std::size_t q, std::size_t n);

/// sum_{c=1}^{2n-1} chi^Y(tau_c) by direct character evaluation.
BigInt tau_sum(const YoungDiagram& y, std::size_t n);

/// (-1)^p (q - p) for hooks and 0 otherwise.
BigInt tau_sum_closed_form(const YoungDiagram& y);

/// s_Y(1,...,1) with N ones, by the hook-content formula.
BigInt schur_all_ones(const YoungDiagram& y, std::size_t N);

/// s_Y(1^N) as a polynomial in N.
QPolynomial schur_all_ones_poly(const YoungDiagram& y);

/// binom(N + a, k) as a polynomial in N.
QPolynomial binomial_in_N(long a, std::size_t k);

/// U(n, N) from the reduced hook sum in binomial form.
NPolynomial charsum_U(std::size_t n);

/// U(n, N) = (2n-1)!! sum_Y chi^Y([2^n]) / chi^Y([1^{2n}]) * tau_sum(Y) * s_Y(1^N),
/// over all partitions of 2n (or only hooks). Throws LimitExceeded for n > limit.
NPolynomial charsum_U_orthogonality(std::size_t n, bool hooks_only = false, std::size_t limit = 5);

/// Number of matchings sigma with tau∘sigma in the class pi, from the character formula
/// (2n-1)!!/prod(j^{pi_j} pi_j!) * sum_Y chi^Y([2^n]) chi^Y(pi) chi^Y(tau) / chi^Y([1^{2n}]).
BigRational matching_class_count(const Permutation& tau, const CycleType& pi);

}  // namespace chordgenus
