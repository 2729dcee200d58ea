#include "chordgenus/oracle.hpp"

#include "chordgenus/permutation.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <thread>
#include <vector>

namespace chordgenus {

BigInt GenusTable::total() const {
    BigInt t = 0;
    for (const auto& [g, c] : counts) t += c;
    return t;
}

namespace {

void check_limit(std::size_t n, std::size_t limit, const char* what) {
    if (n > limit)
        throw LimitExceeded(std::string(what) + ": n = " + std::to_string(n) + " exceeds oracle limit " +
                            std::to_string(limit));
}

std::vector<std::uint64_t> one_backbone_histogram(std::size_t n) {
    std::vector<std::uint64_t> hist(n + 2, 0);
    if (n == 0) {
        // The bare backbone bounds a disc.
        hist[1] = 1;
        return hist;
    }
    const Permutation tau = Permutation::split_cycle(2 * n, 2 * n);
    for (MatchingStream s(n); s.valid(); s.advance()) ++hist[product_cycle_count(tau, s.current())];
    return hist;
}

struct SplitResult {
    std::vector<std::uint64_t> all, connected;
    bool parity_ok = true;
};

SplitResult scan_split(std::size_t n, std::size_t c) {
    SplitResult out{std::vector<std::uint64_t>(2 * n + 1, 0), std::vector<std::uint64_t>(2 * n + 1, 0)};
    const Permutation tau = Permutation::split_cycle(2 * n, c);
    TransitivityChecker transitive;
    for (MatchingStream s(n); s.valid(); s.advance()) {
        const Permutation& iota = s.current();
        const std::size_t r = product_cycle_count(tau, iota);
        ++out.all[r];
        const std::array<const Permutation*, 2> gens{&tau, &iota};
        if (transitive(gens, 2 * n)) {
            ++out.connected[r];
            if (r > n || (n - r) % 2 != 0) out.parity_ok = false;
        }
    }
    return out;
}

}  // namespace

TwoBackboneScan scan_two_backbone(std::size_t n, const OracleConfig& cfg) {
    TwoBackboneScan scan{std::vector<std::uint64_t>(2 * n + 1, 0), std::vector<std::uint64_t>(2 * n + 1, 0)};
    if (n == 0) return scan;
    const std::size_t splits = 2 * n - 1;
    std::vector<SplitResult> results(splits);
    unsigned workers = cfg.threads ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, splits));

    auto run = [&](unsigned w) {
        for (std::size_t c = 1 + w; c <= splits; c += workers) results[c - 1] = scan_split(n, c);
    };
    if (workers <= 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    // Merge in order of c.
    for (const auto& r : results) {
        if (!r.parity_ok) throw ParityViolation("connected two-backbone pair with odd n - r");
        for (std::size_t k = 0; k <= 2 * n; ++k) {
            scan.all[k] += r.all[k];
            scan.connected[k] += r.connected[k];
        }
    }
    return scan;
}

GenusTable oracle_one_backbone(std::size_t n, const OracleConfig& cfg) {
    check_limit(n, cfg.limit, "oracle_one_backbone");
    const auto hist = one_backbone_histogram(n);
    GenusTable t{1, n, {}};
    for (std::size_t r = 0; r < hist.size(); ++r) {
        if (hist[r] == 0) continue;
        if (r > n + 1 || (n + 1 - r) % 2 != 0) throw ParityViolation("one-backbone matching with odd n + 1 - r");
        t.counts[(n + 1 - r) / 2] += BigInt(static_cast<unsigned long>(hist[r]));
    }
    return t;
}

GenusTable oracle_two_backbone(std::size_t n, const OracleConfig& cfg) {
    check_limit(n, cfg.limit, "oracle_two_backbone");
    const auto scan = scan_two_backbone(n, cfg);
    GenusTable t{2, n, {}};
    for (std::size_t r = 0; r < scan.connected.size(); ++r)
        if (scan.connected[r]) t.counts[(n - r) / 2] += BigInt(static_cast<unsigned long>(scan.connected[r]));
    return t;
}

namespace {

NPolynomial histogram_polynomial(const std::vector<std::uint64_t>& hist) {
    std::vector<BigInt> v;
    v.reserve(hist.size());
    for (auto h : hist) v.emplace_back(static_cast<unsigned long>(h));
    return NPolynomial(std::move(v));
}

}  // namespace

NPolynomial oracle_P(std::size_t n, const OracleConfig& cfg) {
    check_limit(n, cfg.symbolic_limit, "oracle_P");
    return histogram_polynomial(one_backbone_histogram(n));
}

NPolynomial oracle_U(std::size_t n, const OracleConfig& cfg) {
    check_limit(n, cfg.symbolic_limit, "oracle_U");
    return histogram_polynomial(scan_two_backbone(n, cfg).all);
}

NPolynomial oracle_Q(std::size_t n, const OracleConfig& cfg) {
    check_limit(n, cfg.symbolic_limit, "oracle_Q");
    return histogram_polynomial(scan_two_backbone(n, cfg).connected);
}

NPolynomial oracle_V(std::size_t n, const OracleConfig& cfg) {
    NPolynomial v;
    for (std::size_t d = 1; d + 1 <= n; ++d) v += oracle_P(d, cfg) * oracle_P(n - d, cfg);
    return v;
}

}  // namespace chordgenus
