#pragma once

// Exact integer and rational scalars plus the handful of combinatorial
// functions shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chordgenus {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Error taxonomy. Every failure surfaced by the library derives from Error.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SizeMismatch : Error {
    using Error::Error;
};
struct DegreeTooHigh : Error {
    using Error::Error;
};
struct LimitExceeded : Error {
    using Error::Error;
};
struct ParityViolation : Error {
    using Error::Error;
};
struct NotPolynomial : Error {
    using Error::Error;
};
struct DivisionRemainder : Error {
    using Error::Error;
};
struct NotIntegral : Error {
    using Error::Error;
};

BigInt factorial(std::int64_t n);

/// (2n-1)!! = 1*3*...*(2n-1), with (-1)!! = 1.
BigInt double_factorial_odd(std::int64_t n);

/// binom(n, k) for integer n (possibly negative) and k >= 0; zero for k < 0.
BigInt binomial(std::int64_t n, std::int64_t k);

BigInt pow_int(const BigInt& base, unsigned long exp);

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

/// Throws NotIntegral when q has a non-trivial denominator.
BigInt to_integer(const BigRational& q);

/// "num" for integers, "num/den" otherwise.
std::string to_string(const BigRational& q);
inline std::string to_string(const BigInt& z) { return z.get_str(); }

/// Inverse of to_string for rationals; accepts "a" or "a/b".
BigRational parse_rational(const std::string& text);

}  // namespace chordgenus
