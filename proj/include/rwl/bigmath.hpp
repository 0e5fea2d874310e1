#pragma once

#include <cstdint>
#include <deque>
#include <initializer_list>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rwl {

// Every failure in the library is reported through this type (or a subclass).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Labeling counts. Always nonnegative; the alias keeps GMP's operators.
using Count = mpz_class;
// Generating-function coefficients.
using SignedCoefficient = mpz_class;
// Always canonical (lowest terms, positive denominator) after construction
// through the helpers below.
using Rational = mpq_class;

// Factorials are cached in a monotonically growing table. The table is safe
// under concurrent readers and writers; it never shrinks, so callers that
// need bounded memory should own a separate instance.
class FactorialTable {
public:
    Count operator()(std::uint64_t n) const;
    std::size_t cached() const;

private:
    mutable std::shared_mutex mutex_;
    mutable std::deque<Count> values_{Count(1)};
};

// Process-wide factorial table used by the free functions.
FactorialTable& factorial_table();

Count factorial(std::uint64_t n);

// Zero outside 0 <= k <= n.
Count binomial(std::int64_t n, std::int64_t k);

// (sum parts)! / prod(parts!). Throws on a negative part.
Count multinomial(std::span<const std::int64_t> parts);
Count multinomial(std::initializer_list<std::int64_t> parts);

Count double_factorial(std::uint64_t n);

Count pow2(std::uint64_t e);

Rational make_rational(const mpz_class& num, const mpz_class& den);

bool is_integral(const Rational& q);

// Throws "formula integrality violated" unless q is an integer.
mpz_class require_integral(const Rational& q, std::string_view what);

// Plain decimal, no separators or exponent.
std::string to_decimal(const mpz_class& v);
std::string to_decimal(const Rational& q);

// Accepts an optional leading '-' followed by digits only.
mpz_class parse_decimal(std::string_view text);

} // namespace rwl
