#pragma once

#include <span>

#include "rwl/bigmath.hpp"
#include "rwl/graph.hpp"

// Ground-truth counting of random walk labelings.
//
// A walk may revisit labeled vertices freely, so from a labeled set S it can
// reach any unlabeled vertex adjacent to S without labeling anything else on
// the way. Conversely the next new vertex of a walk is always adjacent to the
// vertex it came from, which is labeled. Hence the labelings produced by walks
// are exactly the orderings v1..vn of V in which every vi (i >= 2) is adjacent
// to some earlier vj. All functions here count such orderings.
//
// The DP walks subsets layer by layer (popcount ascending). Only subsets that
// can actually occur are stored, and per-subset values are 128-bit: a count
// never exceeds n!, which fits for every admissible n.
namespace rwl::oracle {

inline constexpr int kDefaultDpLimit = 24;
inline constexpr int kMaxDpLimit = 30;
inline constexpr int kPermLimit = 10;

struct Config {
    int dp_limit = kDefaultDpLimit;
};

Count count_labelings(const Graph& g, const Config& cfg = {});

Count count_labelings_from(const Graph& g, Vertex start, const Config& cfg = {});

// Orderings of V \ labeled that extend the given connected labeled set.
Count count_completions(const Graph& g, std::span<const Vertex> labeled, const Config& cfg = {});

// Orderings starting at `start` in which `first` precedes `second`.
Count count_labelings_from_before(const Graph& g, Vertex start, Vertex first, Vertex second,
                                  const Config& cfg = {});

// Independent brute force over all n! permutations (n <= kPermLimit).
Count count_labelings_perm(const Graph& g);
Count count_labelings_from_perm(const Graph& g, Vertex start);

} // namespace rwl::oracle
