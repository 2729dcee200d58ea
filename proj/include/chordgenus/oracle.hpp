#pragma once

// Brute-force ground truth. Every labeled chord diagram is visited as a
// permutation pair (tau, iota): tau encodes the collapsed backbones and
// iota the chords. The number of boundary components is the cycle count
// of tau∘iota.

#include "chordgenus/exact.hpp"
#include "chordgenus/polynomial.hpp"

#include <cstddef>
#include <map>

namespace chordgenus {

struct GenusTable {
    int backbones = 1;
    std::size_t n = 0;
    std::map<std::size_t, BigInt> counts;  // genus -> count, zero entries omitted

    BigInt at(std::size_t g) const {
        auto it = counts.find(g);
        return it == counts.end() ? BigInt(0) : it->second;
    }
    BigInt total() const;

    friend bool operator==(const GenusTable&, const GenusTable&) = default;
};

struct OracleConfig {
    std::size_t limit = 8;           // counting oracles
    std::size_t symbolic_limit = 6;  // P/U/Q as polynomials in N
    unsigned threads = 0;            // 0: hardware concurrency
};

GenusTable oracle_one_backbone(std::size_t n, const OracleConfig& cfg = {});

/// Connected pairs (tau_c, iota), c = 1..2n-1, stratified by g = (n - r)/2.
GenusTable oracle_two_backbone(std::size_t n, const OracleConfig& cfg = {});

/// Cycle-count histograms of tau_c∘iota over all split points, with and without
/// the connectivity filter. Index r holds the number of pairs with r cycles.
struct TwoBackboneScan {
    std::vector<std::uint64_t> all;
    std::vector<std::uint64_t> connected;
};
TwoBackboneScan scan_two_backbone(std::size_t n, const OracleConfig& cfg = {});

/// sum over iota of N^{cycles(tau∘iota)}, tau = (1,...,2n).
NPolynomial oracle_P(std::size_t n, const OracleConfig& cfg = {});
/// sum over all (c, iota) of N^{cycles(tau_c∘iota)}, connected or not.
NPolynomial oracle_U(std::size_t n, const OracleConfig& cfg = {});
/// As oracle_U restricted to connected pairs.
NPolynomial oracle_Q(std::size_t n, const OracleConfig& cfg = {});

/// sum_{d=1}^{n-1} P(d,N) P(n-d,N) built from oracle_P.
NPolynomial oracle_V(std::size_t n, const OracleConfig& cfg = {});

}  // namespace chordgenus
