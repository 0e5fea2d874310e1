#include "rwl/torus.hpp"

#include <mutex>

namespace rwl::torus {

namespace {

constexpr int kMaxRecurrenceN = 128;

struct Level {
    std::vector<Count> a;              // a[k], 1 <= k <= n (index 0 unused)
    std::vector<std::vector<Count>> b; // b[s][t], 0 <= s,t <= n-1
};

class RecurrenceCache {
public:
    Count a(int n, int k)
    {
        std::lock_guard lock(mutex_);
        grow(n);
        return levels_[n].a[k];
    }
    Count b(int n, int s, int t)
    {
        std::lock_guard lock(mutex_);
        grow(n);
        return levels_[n].b[s][t];
    }

private:
    void grow(int n)
    {
        if (levels_.empty()) {
            levels_.resize(3);
            levels_[1].a = {0, 1};
            levels_[1].b = {{0}};
            levels_[2].a = {0, 4, 2};
            levels_[2].b = {{2, 1}, {1, 0}};
        }
        while (static_cast<int>(levels_.size()) <= n) {
            levels_.push_back(compute(static_cast<int>(levels_.size())));
        }
    }

    // One level n >= 3 from the levels below it.
    Level compute(int n) const
    {
        auto A = [&](int nn, int k) -> const Count& { return levels_[nn].a[k]; };
        auto B = [&](int nn, int s, int t) -> const Count& { return levels_[nn].b[s][t]; };

        Level cur;
        cur.b.assign(n, std::vector<Count>(n, 0));
        auto& b = cur.b;
        // (q-1)! C(top, q-1) b_{n-q}(...) summed over q = 1..last
        auto shifted_sum = [&](int last, std::int64_t top, auto&& term) {
            Count sum = 0;
            for (int q = 1; q <= last; ++q) {
                sum += binomial(top, q - 1) * factorial(q - 1) * term(q);
            }
            return sum;
        };

        // Larger s+t first: every same-level reference points upward.
        for (int level = 2 * (n - 1); level >= 0; --level) {
            for (int s = 0; s < n; ++s) {
                const int t = level - s;
                if (t < 0 || t >= n) {
                    continue;
                }
                Count v;
                if (s == 0 && t == 0) {
                    v = 4 * b[1][0];
                } else if (s == 0 && t == n - 1) {
                    v = factorial(n - 1);
                } else if (s == 0 && t == n - 2) {
                    v = b[1][n - 2] + b[0][n - 1]
                        + shifted_sum(n - 2, n - 1, [&](int q) { return B(n - q, 0, n - 2 - q); });
                } else if (s == 0 && 1 <= t && t <= n - 3) {
                    v = A(n - 1, t + 1) + b[1][t] + b[0][t + 1]
                        + shifted_sum(t, 2 * n - (t + 3), [&](int q) { return B(n - q, 0, t - q); });
                } else if (s == n - 1 && t == 0) {
                    v = factorial(n - 1);
                } else if (s == n - 2 && t == 0) {
                    v = b[n - 2][1] + b[n - 1][0]
                        + shifted_sum(n - 2, n - 1, [&](int q) { return B(n - q, n - 2 - q, 0); });
                } else if (1 <= s && s <= n - 3 && t == 0) {
                    v = A(n - 1, s + 1) + b[s][1] + b[s + 1][0]
                        + shifted_sum(s, 2 * n - (s + 3), [&](int q) { return B(n - q, s - q, 0); });
                } else if (s > 0 && t > 0 && s + t <= n - 2) {
                    const std::int64_t top = 2 * n - (s + t + 3);
                    v = b[s + 1][t] + shifted_sum(s, top, [&](int q) { return B(n - q, s - q, t); })
                        + b[s][t + 1] + shifted_sum(t, top, [&](int q) { return B(n - q, s, t - q); });
                } else if (s + t == n - 1) {
                    v = factorial(n - 1);
                } else {
                    v = 0;
                }
                b[s][t] = std::move(v);
            }
        }

        cur.a.assign(n + 1, 0);
        auto& a = cur.a;
        for (int k = n; k >= 1; --k) {
            if (k == 1) {
                a[1] = 2 * a[2] + b[0][0];
            } else if (k <= n - 2) {
                a[k] = 2 * a[k + 1] + (k - 2) * A(n - 1, k - 1) + 2 * b[k - 1][0];
            } else if (k == n - 1) {
                a[k] = a[k + 1] + (n - 3) * A(n - 1, k - 1) + 2 * b[k - 1][0];
            } else {
                a[k] = factorial(n);
            }
        }
        return cur;
    }

    std::mutex mutex_;
    std::vector<Level> levels_;
};

RecurrenceCache& cache()
{
    static RecurrenceCache c;
    return c;
}

void check_a(int n, int k, int max_n)
{
    if (n < 1 || n > max_n || k < 1 || k > n) {
        throw Error("invalid torus indices");
    }
}

void check_b(int n, int s, int t, int max_n)
{
    if (n < 1 || n > max_n || s < 0 || t < 0 || s > n - 1 || t > n - 1) {
        throw Error("invalid torus indices");
    }
}

} // namespace

Count a_rec(int n, int k)
{
    check_a(n, k, kMaxRecurrenceN);
    return cache().a(n, k);
}

Count b_rec(int n, int s, int t)
{
    check_b(n, s, t, kMaxRecurrenceN);
    return cache().b(n, s, t);
}

Count a_closed(int n, int k)
{
    check_a(n, k, 1 << 16);
    if (n < 2) {
        throw Error("invalid torus indices");
    }
    if (k == n) {
        return factorial(n);
    }
    Rational v;
    if (k == 1) {
        v = make_rational((n + 2) * factorial(2 * n - 2), 2 * factorial(n - 2));
    } else {
        v = make_rational(binomial(n - k + 2, 2) * factorial(2 * n - k), 2 * factorial(n - k + 1));
    }
    return require_integral(v, "a closed form");
}

Count b_closed(int n, int s, int t)
{
    check_b(n, s, t, 1 << 16);
    if (n < 2) {
        throw Error("invalid torus indices");
    }
    if (s + t >= n) {
        return 0;
    }
    if (s == 0 || t == 0) {
        const int r = s + t;
        if (r == 0) {
            return require_integral(make_rational(factorial(2 * n - 2), factorial(n - 2)), "b closed form");
        }
        if (r <= n - 2) {
            return require_integral(make_rational(factorial(2 * n - 2 - r) * (n - r), 2 * factorial(n - 1 - r)),
                                    "b closed form");
        }
        return factorial(n - 1);
    }
    const int d = n - s - t;
    return require_integral(make_rational(factorial(2 * n - 2 - s - t) * (d * (d + 1) + 2), 4 * factorial(d)),
                            "b closed form");
}

Count count_torus(int n)
{
    if (n < 1 || n > (1 << 16)) {
        throw Error("invalid torus indices");
    }
    if (n == 1) {
        return 2 * a_rec(1, 1);
    }
    return require_integral(make_rational(Count(n) * (n + 2) * factorial(2 * n - 2), factorial(n - 2)),
                            "torus closed form");
}

PartialState torus_partial_state_graph(int n, const Shape& shape)
{
    if (n < 1 || n > 16) {
        throw Error("invalid shape");
    }
    PartialState st{build_family(Torus{n}), {}};
    if (const auto* a = std::get_if<AShape>(&shape)) {
        if (a->k < 1 || a->k > n) {
            throw Error("invalid shape");
        }
        for (int col = 1; col <= a->k; ++col) {
            st.labeled.push_back(vertex_at(st.graph, Coord{1, col}));
        }
        return st;
    }
    const auto& b = std::get<BShape>(shape);
    if (b.s < 0 || b.t < 0 || b.s + b.t >= n) {
        throw Error("invalid shape");
    }
    for (int col = 1; col <= b.s + 1; ++col) {
        st.labeled.push_back(vertex_at(st.graph, Coord{1, col}));
    }
    for (int col = b.s + 1; col <= b.s + b.t + 1; ++col) {
        st.labeled.push_back(vertex_at(st.graph, Coord{2, col}));
    }
    return st;
}

} // namespace rwl::torus
