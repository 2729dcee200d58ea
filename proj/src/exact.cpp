#include "chordgenus/exact.hpp"

namespace chordgenus {

BigInt factorial(std::int64_t n) {
    if (n < 0) throw std::domain_error("factorial of a negative number");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt double_factorial_odd(std::int64_t n) {
    if (n <= 0) return 1;
    BigInt r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(2 * n - 1));
    return r;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0) return 0;
    BigInt r;
    BigInt top(static_cast<long>(n));
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

BigInt pow_int(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

BigInt to_integer(const BigRational& q) {
    if (!is_integer(q)) throw NotIntegral("rational " + q.get_str() + " is not an integer");
    return q.get_num();
}

std::string to_string(const BigRational& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigRational parse_rational(const std::string& text) {
    BigRational q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

}  // namespace chordgenus
