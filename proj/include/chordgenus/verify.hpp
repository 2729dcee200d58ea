#pragma once

// Verification suites shared by the CLI and the test binaries.

#include "chordgenus/oracle.hpp"

#include <string>
#include <vector>

namespace chordgenus {

struct Check {
    std::string name;
    bool passed = false;
    double millis = 0;
    std::string detail;
};

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// "oracle", "characters", "hz", "pipeline", "asymptotics" or "all".
/// Throws std::invalid_argument on an unknown name.
std::vector<Check> run_suite(const std::string& suite, std::size_t max_n, const OracleConfig& cfg = {});

/// Factored rendering z^v*(descending terms), matching the way the
/// two-backbone numerators are usually printed.
std::string render_factored(const QPolynomial& p);

/// Literature values of P_g^[2] for g = 0..5, as render_factored strings.
const std::vector<std::string>& printed_P2_table();

}  // namespace chordgenus
