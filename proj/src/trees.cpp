#include "rwl/trees.hpp"

#include <map>
#include <mutex>

namespace rwl::trees {

namespace {

constexpr long long kMaxVertices = 1 << 16;

long long ipow(long long base, int e)
{
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        r *= base;
    }
    return r;
}

// (m^e - 1)/(m - 1)
long long geo(int m, int e)
{
    return (ipow(m, e) - 1) / (m - 1);
}

void check_tree(int h, int m)
{
    if (m < 2 || h < 0) {
        throw Error("invalid tree parameters");
    }
    long long total = 0;
    long long level = 1;
    for (int d = 0; d <= h; ++d) {
        total += level;
        if (total > kMaxVertices) {
            throw Error("tree too large for exact evaluation");
        }
        level *= m;
    }
}

void check_t(int h, int m, int k)
{
    check_tree(h, m);
    if (k < 0 || k > h) {
        throw Error("invalid tree parameters");
    }
}

void check_s(int h, int m, int k)
{
    check_tree(h, m);
    if (h < 1 || k < 0 || k > h - 1) {
        throw Error("invalid tree parameters");
    }
}

Count equal_parts(long long part, int copies)
{
    std::vector<std::int64_t> parts(static_cast<std::size_t>(copies), part);
    return multinomial(parts);
}

Count power(const Count& base, long long e)
{
    Count r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

// prod_{l=1}^{h-1-j} alpha_l^{(m-1) m^{h-1-j-l}}
Count remaining_alpha_product(int h, int m, int j)
{
    Count r = 1;
    for (int l = 1; l <= h - 1 - j; ++l) {
        r *= power(alpha(l, m), (m - 1) * ipow(m, h - 1 - j - l));
    }
    return r;
}

// Recurrence values for one arity, grown by height.
struct Table {
    std::vector<std::vector<Count>> t; // t[h][k], 0 <= k <= h
    std::vector<std::vector<Count>> s; // s[h][k], 0 <= k <= h-1 (s[0] empty)
};

class RecurrenceCache {
public:
    Count t(int h, int m, int k)
    {
        std::lock_guard lock(mutex_);
        return grow(m, h).t[h][k];
    }
    Count s(int h, int m, int k)
    {
        std::lock_guard lock(mutex_);
        return grow(m, h).s[h][k];
    }

private:
    Table& grow(int m, int h)
    {
        Table& tab = tables_[m];
        if (tab.t.empty()) {
            tab.t.push_back({Count(1)});
            tab.s.emplace_back();
        }
        while (static_cast<int>(tab.t.size()) <= h) {
            const int H = static_cast<int>(tab.t.size());
            const long long size_h = geo(m, H + 1);
            std::vector<Count> s_row(H);
            for (int k = 0; k < H; ++k) {
                if (k == 0) {
                    s_row[0] = power(tab.t[H - 1][0], m - 1) * equal_parts(geo(m, H), m - 1);
                } else {
                    std::vector<std::int64_t> parts(static_cast<std::size_t>(m - 1), geo(m, H - k));
                    parts.push_back((ipow(m, H + 1) - ipow(m, H - k + 1)) / (m - 1));
                    s_row[k] = power(tab.t[H - k - 1][0], m - 1) * s_row[k - 1] * multinomial(parts);
                }
            }
            std::vector<Count> t_row(H + 1);
            for (int k = 0; k <= H; ++k) {
                if (k == 0) {
                    t_row[0] = power(tab.t[H - 1][0], m) * equal_parts(geo(m, H), m);
                } else {
                    t_row[k] = tab.t[H - k][0] * s_row[k - 1] * binomial(size_h - 1, geo(m, H - k + 1) - 1);
                }
            }
            tab.t.push_back(std::move(t_row));
            tab.s.push_back(std::move(s_row));
        }
        return tab;
    }

    std::mutex mutex_;
    std::map<int, Table> tables_;
};

RecurrenceCache& cache()
{
    static RecurrenceCache c;
    return c;
}

} // namespace

long long tree_size(int h, int m)
{
    check_tree(h, m);
    return geo(m, h + 1);
}

Count alpha(int h, int m)
{
    check_tree(h, m);
    if (h < 1) {
        throw Error("invalid tree parameters");
    }
    return equal_parts(geo(m, h), m);
}

Count beta(int h, int m, int k)
{
    check_s(h, m, k);
    std::vector<std::int64_t> parts(static_cast<std::size_t>(m - 1), geo(m, h - k));
    parts.push_back(ipow(m, h - k + 1) * geo(m, k));
    return multinomial(parts);
}

Count gamma(int h, int m, int k)
{
    check_t(h, m, k);
    return binomial(geo(m, h + 1) - 1, geo(m, h + 1 - k) - 1);
}

Count t_rec(int h, int m, int k)
{
    check_t(h, m, k);
    return cache().t(h, m, k);
}

Count s_rec(int h, int m, int k)
{
    check_s(h, m, k);
    return cache().s(h, m, k);
}

Count t_closed(int h, int m, int k)
{
    check_t(h, m, k);
    Count r = gamma(h, m, k);
    for (int j = 1; j <= h - k; ++j) {
        r *= power(alpha(j, m), ipow(m, h - k - j));
    }
    for (int j = 0; j <= k - 1; ++j) {
        r *= beta(h, m, j) * remaining_alpha_product(h, m, j);
    }
    return r;
}

Count s_closed(int h, int m, int k)
{
    check_s(h, m, k);
    Count r = 1;
    for (int j = 0; j <= k; ++j) {
        r *= beta(h, m, j) * remaining_alpha_product(h, m, j);
    }
    return r;
}

Count count_perfect_tree(int h, int m, Method method)
{
    check_tree(h, m);
    Count total = 0;
    for (int k = 0; k <= h; ++k) {
        Count t = (method == Method::recurrence) ? t_rec(h, m, k) : t_closed(h, m, k);
        total += Count(static_cast<long>(ipow(m, k))) * t;
    }
    return total;
}

std::vector<Count> oeis_tree_root_sequence(int limit)
{
    if (limit < 1) {
        throw Error("limit must be at least 1");
    }
    std::vector<Count> seq;
    for (int h = 0; h < limit; ++h) {
        seq.push_back(t_rec(h, 2, 0));
    }
    return seq;
}

} // namespace rwl::trees
