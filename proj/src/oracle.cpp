#include "rwl/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rwl::oracle {

namespace {

using Mask = std::uint32_t;
using Value = unsigned __int128;

struct Precedence {
    Vertex first;
    Vertex second;
};

Count to_count(Value v)
{
    auto hi = static_cast<std::uint64_t>(v >> 64);
    auto lo = static_cast<std::uint64_t>(v);
    Count r = static_cast<unsigned long>(hi);
    r <<= 64;
    r += static_cast<unsigned long>(lo);
    return r;
}

void check_instance(const Graph& g, const Config& cfg)
{
    if (cfg.dp_limit < 1 || cfg.dp_limit > kMaxDpLimit) {
        throw Error("dp limit must be in [1, " + std::to_string(kMaxDpLimit) + "]");
    }
    if (g.size() > cfg.dp_limit) {
        throw Error("instance too large");
    }
    if (!g.connected()) {
        throw Error("graph not connected");
    }
}

void check_vertex(const Graph& g, Vertex v)
{
    if (v < 0 || v >= g.size()) {
        throw Error("vertex index out of range");
    }
}

std::vector<Mask> neighbor_masks(const Graph& g)
{
    std::vector<Mask> nb(g.size(), 0);
    for (Vertex v = 0; v < g.size(); ++v) {
        for (Vertex w : g.neighbors(v)) {
            nb[v] |= Mask{1} << w;
        }
    }
    return nb;
}

bool induces_connected(const std::vector<Mask>& nb, Mask set)
{
    if (set == 0) {
        return false;
    }
    Mask seen = set & (~set + 1);
    Mask grown = seen;
    do {
        seen = grown;
        for (Mask rest = seen; rest; rest &= rest - 1) {
            grown |= nb[std::countr_zero(rest)] & set;
        }
    } while (grown != seen);
    return seen == set;
}

// Extends every state of `layer` one vertex at a time until all n vertices
// are labeled. All states in a layer share the same popcount.
Count run_layers(const Graph& g, std::vector<std::pair<Mask, Value>> layer,
                 std::optional<Precedence> order)
{
    const int n = g.size();
    const Mask full = (n == 32) ? ~Mask{0} : ((Mask{1} << n) - 1);
    const auto nb = neighbor_masks(g);
    if (layer.empty()) {
        return 0;
    }
    int labeled = std::popcount(layer.front().first);

    std::unordered_map<Mask, Value> next;
    while (labeled < n) {
        next.clear();
        next.reserve(layer.size() * 2);
        for (const auto& [set, value] : layer) {
            Mask frontier = 0;
            for (Mask rest = set; rest; rest &= rest - 1) {
                frontier |= nb[std::countr_zero(rest)];
            }
            frontier &= full & ~set;
            if (order && !(set >> order->first & 1U)) {
                frontier &= ~(Mask{1} << order->second);
            }
            for (; frontier; frontier &= frontier - 1) {
                next[set | (frontier & (~frontier + 1))] += value;
            }
        }
        layer.assign(next.begin(), next.end());
        std::sort(layer.begin(), layer.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        ++labeled;
    }
    Value total = 0;
    for (const auto& [set, value] : layer) {
        total += value;
    }
    return to_count(total);
}

bool prefix_adjacent(const std::vector<Mask>& nb, std::span<const Vertex> order)
{
    Mask reach = nb[order[0]];
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (!(reach >> order[i] & 1U)) {
            return false;
        }
        reach |= nb[order[i]];
    }
    return true;
}

void check_perm_instance(const Graph& g)
{
    if (g.size() > kPermLimit) {
        throw Error("instance too large for permutation enumeration");
    }
    if (!g.connected()) {
        throw Error("graph not connected");
    }
}

} // namespace

Count count_labelings(const Graph& g, const Config& cfg)
{
    check_instance(g, cfg);
    std::vector<std::pair<Mask, Value>> layer;
    for (Vertex v = 0; v < g.size(); ++v) {
        layer.emplace_back(Mask{1} << v, 1);
    }
    return run_layers(g, std::move(layer), std::nullopt);
}

Count count_labelings_from(const Graph& g, Vertex start, const Config& cfg)
{
    check_instance(g, cfg);
    check_vertex(g, start);
    return run_layers(g, {{Mask{1} << start, 1}}, std::nullopt);
}

Count count_completions(const Graph& g, std::span<const Vertex> labeled, const Config& cfg)
{
    check_instance(g, cfg);
    Mask set = 0;
    for (Vertex v : labeled) {
        check_vertex(g, v);
        set |= Mask{1} << v;
    }
    if (!induces_connected(neighbor_masks(g), set)) {
        throw Error("labeled set not connected");
    }
    return run_layers(g, {{set, 1}}, std::nullopt);
}

Count count_labelings_from_before(const Graph& g, Vertex start, Vertex first, Vertex second,
                                  const Config& cfg)
{
    check_instance(g, cfg);
    check_vertex(g, start);
    check_vertex(g, first);
    check_vertex(g, second);
    if (first == second) {
        throw Error("precedence needs two distinct vertices");
    }
    if (second == start) {
        return 0;
    }
    return run_layers(g, {{Mask{1} << start, 1}}, Precedence{first, second});
}

Count count_labelings_perm(const Graph& g)
{
    check_perm_instance(g);
    const auto nb = neighbor_masks(g);
    std::vector<Vertex> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    unsigned long long hits = 0;
    do {
        hits += prefix_adjacent(nb, order) ? 1 : 0;
    } while (std::next_permutation(order.begin(), order.end()));
    return Count(static_cast<unsigned long>(hits));
}

Count count_labelings_from_perm(const Graph& g, Vertex start)
{
    check_perm_instance(g);
    check_vertex(g, start);
    const auto nb = neighbor_masks(g);
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < g.size(); ++v) {
        if (v != start) {
            rest.push_back(v);
        }
    }
    std::vector<Vertex> order(g.size());
    order[0] = start;
    unsigned long long hits = 0;
    do {
        std::copy(rest.begin(), rest.end(), order.begin() + 1);
        hits += prefix_adjacent(nb, order) ? 1 : 0;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return Count(static_cast<unsigned long>(hits));
}

} // namespace rwl::oracle
