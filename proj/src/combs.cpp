#include "rwl/combs.hpp"

namespace rwl::combs {

namespace {

constexpr long long kMaxVertices = 1 << 16;

void check_comb(int m, int n, int k)
{
    if (m < 1 || n < 2 || k < 1 || k > n || static_cast<long long>(m) * n > kMaxVertices) {
        throw Error("invalid comb parameters");
    }
}

// No range check on n, so the lemma can use n = 1.
Count spine_product(int m, int n, int k)
{
    Count r;
    mpz_pow_ui(r.get_mpz_t(), binomial(n - 1, k - 1).get_mpz_t(), static_cast<unsigned long>(m));
    for (int l = 1; l <= m - 1; ++l) {
        r *= binomial(static_cast<std::int64_t>(l + 1) * n - 1, n - 1);
    }
    return r;
}

Rational power(const Rational& q, int e)
{
    Rational r = 1;
    for (int i = 0; i < e; ++i) {
        r *= q;
    }
    return r;
}

} // namespace

Count t_spine(int m, int n, int k)
{
    if (m < 0 || n < 2 || k < 1 || k > n || static_cast<long long>(m) * n > kMaxVertices) {
        throw Error("invalid comb parameters");
    }
    return spine_product(m, n, k);
}

Count a_term(int m, int n, int j, int spine, int y)
{
    check_comb(m, n, spine);
    if (j < 1 || j > m || y < 1 || y > n) {
        throw Error("invalid comb parameters");
    }
    return multinomial({static_cast<std::int64_t>(j - 1) * n, n - y, static_cast<std::int64_t>(m - j) * n})
        * binomial(n - y, n - spine) * spine_product(j - 1, n, spine) * spine_product(m - j, n, spine);
}

Count count_from_vertex(int m, int n, int k, int j, int s)
{
    check_comb(m, n, k);
    if (j < 1 || j > m || s < 1 || s > n) {
        throw Error("invalid comb parameters");
    }
    if (s == k) {
        return a_term(m, n, j, k, 1);
    }
    int spine = k;
    int start = s;
    if (s > k) {
        // Reverse every tooth: C_{m,n,k} is isomorphic to C_{m,n,n-k+1}.
        spine = n - k + 1;
        start = n - s + 1;
    }
    Count total = 0;
    for (int y = spine - start + 1; y <= spine; ++y) {
        total += binomial(y - 2, spine - start - 1) * a_term(m, n, j, spine, y);
    }
    return total;
}

Count count_comb(int m, int n, int k)
{
    check_comb(m, n, k);
    const std::int64_t mn = static_cast<std::int64_t>(m) * n;
    Rational prefactor = make_rational(1, factorial(m - 1))
        * power(make_rational(2 * binomial(n - 1, k - 1), factorial(n)), m - 1);

    Rational lower = 0;
    for (int y = 2; y <= k; ++y) {
        lower += make_rational(pow2(y - 2) * factorial(mn - y), factorial(k - y));
    }
    lower /= factorial(n - k);

    Rational upper = 0;
    for (int y = 2; y <= n - k + 1; ++y) {
        upper += make_rational(pow2(y - 2) * factorial(mn - y), factorial(n - k + 1 - y));
    }
    upper /= factorial(k - 1);

    Rational spine = make_rational(factorial(mn - 1), factorial(n - k) * factorial(k - 1));

    Rational value = prefactor * (lower + upper + spine);
    value.canonicalize();
    return require_integral(value, "comb closed form");
}

Count count_comb_by_starts(int m, int n, int k)
{
    check_comb(m, n, k);
    Count total = 0;
    for (int j = 1; j <= m; ++j) {
        for (int s = 1; s <= n; ++s) {
            total += count_from_vertex(m, n, k, j, s);
        }
    }
    return total;
}

CorollaryReport corollary_comb(int m)
{
    if (m < 1) {
        throw Error("invalid comb parameters");
    }
    CorollaryReport r;
    r.printed = Rational(pow2(m - 1) * m * double_factorial(m - 1));
    r.theorem = count_comb(m, 2, 1);
    r.agrees = (r.printed == Rational(r.theorem));
    return r;
}

CorollaryReport corollary_double_comb(int m)
{
    if (m < 1) {
        throw Error("invalid comb parameters");
    }
    Count three_pow;
    mpz_ui_pow_ui(three_pow.get_mpz_t(), 3, static_cast<unsigned long>(m));
    CorollaryReport r;
    r.printed = make_rational(pow2(m - 1) * factorial(3 * m + 1),
                              three_pow * (3 * m - 1) * factorial(m));
    r.theorem = count_comb(m, 3, 2);
    r.agrees = (r.printed == Rational(r.theorem));
    return r;
}

PacSides lemma_pac_sides(int m, int n, int k)
{
    if (m < 0 || n < 1 || k < 1 || k > n || static_cast<long long>(m) * n > kMaxVertices) {
        throw Error("invalid comb parameters");
    }
    PacSides sides;
    sides.lhs = 0;
    for (int j = 0; j <= m; ++j) {
        sides.lhs += make_rational(spine_product(j, n, k), factorial(static_cast<std::uint64_t>(j) * n))
            * make_rational(spine_product(m - j, n, k), factorial(static_cast<std::uint64_t>(m - j) * n));
    }
    sides.lhs.canonicalize();
    sides.rhs = make_rational(1, factorial(m)) * power(make_rational(2 * binomial(n - 1, k - 1), factorial(n)), m);
    sides.rhs.canonicalize();
    return sides;
}

bool lemma_pac_check(int m, int n, int k)
{
    auto sides = lemma_pac_sides(m, n, k);
    return sides.lhs == sides.rhs;
}

} // namespace rwl::combs
