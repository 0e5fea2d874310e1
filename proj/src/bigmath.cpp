#include "rwl/bigmath.hpp"

#include <mutex>
#include <vector>

namespace rwl {

Count FactorialTable::operator()(std::uint64_t n) const
{
    {
        std::shared_lock lock(mutex_);
        if (n < values_.size()) {
            return values_[n];
        }
    }
    std::unique_lock lock(mutex_);
    while (values_.size() <= n) {
        Count next = values_.back() * static_cast<unsigned long>(values_.size());
        values_.push_back(std::move(next));
    }
    return values_[n];
}

std::size_t FactorialTable::cached() const
{
    std::shared_lock lock(mutex_);
    return values_.size();
}

FactorialTable& factorial_table()
{
    static FactorialTable table;
    return table;
}

Count factorial(std::uint64_t n)
{
    return factorial_table()(n);
}

Count binomial(std::int64_t n, std::int64_t k)
{
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    Count r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Count multinomial(std::span<const std::int64_t> parts)
{
    Count r = 1;
    std::int64_t total = 0;
    for (std::int64_t p : parts) {
        if (p < 0) {
            throw Error("negative multinomial part");
        }
        total += p;
        r *= binomial(total, p);
    }
    return r;
}

Count multinomial(std::initializer_list<std::int64_t> parts)
{
    return multinomial(std::span<const std::int64_t>(parts.begin(), parts.size()));
}

Count double_factorial(std::uint64_t n)
{
    Count r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Count pow2(std::uint64_t e)
{
    Count r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r;
}

Rational make_rational(const mpz_class& num, const mpz_class& den)
{
    if (den == 0) {
        throw Error("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_integral(const Rational& q)
{
    return q.get_den() == 1;
}

mpz_class require_integral(const Rational& q, std::string_view what)
{
    if (!is_integral(q)) {
        throw Error("formula integrality violated: " + std::string(what));
    }
    return q.get_num();
}

std::string to_decimal(const mpz_class& v)
{
    return v.get_str(10);
}

std::string to_decimal(const Rational& q)
{
    if (is_integral(q)) {
        return q.get_num().get_str(10);
    }
    return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

mpz_class parse_decimal(std::string_view text)
{
    std::size_t i = 0;
    if (!text.empty() && text[0] == '-') {
        i = 1;
    }
    if (i == text.size()) {
        throw Error("invalid decimal: '" + std::string(text) + "'");
    }
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] < '0' || text[j] > '9') {
            throw Error("invalid decimal: '" + std::string(text) + "'");
        }
    }
    return mpz_class(std::string(text), 10);
}

} // namespace rwl
