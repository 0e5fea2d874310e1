#include "rwl/twocycles.hpp"

namespace rwl::twocycles {

namespace {

constexpr int kMaxPath = 4096;

// Multinomial shorthands. A negative argument means a summation bound was
// transcribed wrongly, so they throw instead of returning 0.
Count M(std::int64_t a, std::int64_t b)
{
    return multinomial({a, b});
}

Count M(std::int64_t a, std::int64_t b, std::int64_t c)
{
    return multinomial({a, b, c});
}

Count two(std::int64_t e)
{
    if (e < 0) {
        throw Error("negative power of two");
    }
    return pow2(static_cast<std::uint64_t>(e));
}

void check(int a1, int a2, int a3)
{
    if (a1 < 2 || a2 < 2 || a3 < 2 || a1 > kMaxPath || a2 > kMaxPath || a3 > kMaxPath) {
        throw Error("invalid two-cycle parameters");
    }
}

// Green is labeled, `middle_left` middle vertices separate the walk from red,
// and red is labeled only after all of them.
Count red_after_middle(int a1, int a3, std::int64_t middle_left)
{
    Count r = 0;
    for (int k = 0; k <= a1 - 1; ++k) {
        for (int l = 0; l <= a3 - 1; ++l) {
            r += M(middle_left, k, l) * M(a1 - k, a3 - l) * two(a1 - 1 - k + a3 - 1 - l);
        }
    }
    for (int k = 0; k <= a1 - 1; ++k) {
        r += M(middle_left, k, a3) * two(a1 - 1 - k);
    }
    for (int k = 0; k <= a3 - 1; ++k) {
        r += M(middle_left, k, a1) * two(a3 - 1 - k);
    }
    r += M(middle_left, a1, a3);
    return r;
}

} // namespace

Count term_A(int a1, int a2, int a3)
{
    check(a1, a2, a3);
    // Red reached through the middle path.
    Count r = red_after_middle(a1, a3, a2 - 2);
    // Red reached around one of the outer paths before the middle is done.
    for (int k = 0; k <= a1 - 1; ++k) {
        for (int l = 0; l <= a2 - 3; ++l) {
            r += M(a3, k, l) * M(a1 - k, a2 - 2 - l) * two(a1 - 1 - k + a2 - 3 - l);
        }
    }
    for (int l = 0; l <= a2 - 3; ++l) {
        r += M(a1, a3, l) * two(a2 - 3 - l);
    }
    for (int k = 0; k <= a3 - 1; ++k) {
        for (int l = 0; l <= a2 - 3; ++l) {
            r += M(a1, k, l) * M(a3 - k, a2 - 2 - l) * two(a3 - 1 - k + a2 - 3 - l);
        }
    }
    return r;
}

Count term_B(int a1, int a2, int a3, int s)
{
    check(a1, a2, a3);
    if (s < 2 || s > a2 - 1) {
        throw Error("invalid two-cycle parameters");
    }
    Count r = 0;
    // q middle vertices (green included) are labeled when green is.
    for (int q = s; q <= a2 - 1; ++q) {
        r += binomial(q - 2, s - 2) * red_after_middle(a1, a3, a2 - 1 - q);
    }
    for (int q = s; q <= a2 - 2; ++q) {
        Count bracket = 0;
        for (int l = 0; l <= a2 - 2 - q; ++l) {
            for (int k = 0; k <= a1 - 1; ++k) {
                bracket += M(a3, k, l) * M(a1 - k, a2 - 1 - q - l) * two(a1 - 1 - k + a2 - 2 - q - l);
            }
        }
        for (int l = 0; l <= a2 - 2 - q; ++l) {
            for (int k = 0; k <= a3 - 1; ++k) {
                bracket += M(a1, k, l) * M(a3 - k, a2 - 1 - q - l) * two(a3 - 1 - k + a2 - 2 - q - l);
            }
        }
        for (int l = 0; l <= a2 - 2 - q; ++l) {
            bracket += M(a3, a1, l) * two(a2 - 2 - q - l);
        }
        r += binomial(q - 2, s - 2) * bracket;
    }
    return r;
}

Count term_C(int a1, int a2, int a3, int s)
{
    check(a1, a2, a3);
    if (s < 1 || s > a1) {
        throw Error("invalid two-cycle parameters");
    }
    Count r = 0;
    // q top vertices are labeled when green is.
    for (int q = s; q <= a1; ++q) {
        const int top_left = a1 - q;
        Count bracket = 0;
        for (int k = 0; k <= top_left - 1; ++k) {
            for (int l = 0; l <= a3 - 1; ++l) {
                bracket += M(a2 - 2, k, l) * M(top_left - k, a3 - l) * two(top_left - 1 - k + a3 - 1 - l);
            }
        }
        for (int l = 0; l <= a3 - 1; ++l) {
            bracket += M(a2 - 2, top_left, l) * two(a3 - 1 - l);
        }
        for (int k = 0; k <= top_left - 1; ++k) {
            bracket += M(a2 - 2, k, a3) * two(top_left - 1 - k);
        }
        bracket += M(top_left, a2 - 2, a3);
        for (int l = 0; l <= a2 - 3; ++l) {
            for (int k = 0; k <= a3 - 1; ++k) {
                bracket += M(top_left, k, l) * M(a2 - 2 - l, a3 - k) * two(a3 - 1 - k + a2 - 3 - l);
            }
        }
        for (int l = 0; l <= a2 - 3; ++l) {
            bracket += M(top_left, a3, l) * two(a2 - 3 - l);
        }
        for (int l = 0; l <= a2 - 3; ++l) {
            for (int k = 0; k <= top_left - 1; ++k) {
                bracket += M(k, a3, l) * M(a2 - 2 - l, top_left - k) * two(top_left - 1 - k + a2 - 3 - l);
            }
        }
        r += binomial(q - 1, s - 1) * bracket;
    }
    return r;
}

Count count_two_cycles(int a1, int a2, int a3)
{
    check(a1, a2, a3);
    Count total = term_A(a1, a2, a3);
    for (int s = 2; s <= a2 - 1; ++s) {
        total += term_B(a1, a2, a3, s);
    }
    for (int s = 1; s <= a1; ++s) {
        total += term_C(a1, a2, a3, s);
    }
    for (int s = 1; s <= a3; ++s) {
        total += term_C(a3, a2, a1, s);
    }
    return 2 * total;
}

} // namespace rwl::twocycles
