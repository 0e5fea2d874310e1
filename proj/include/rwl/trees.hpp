#pragma once

#include <vector>

#include "rwl/bigmath.hpp"

// Perfect m-ary trees T_{h,m}.
//
//   t(h,m,k): labelings of T_{h,m} that start at a given depth-k vertex.
//   s(h,m,k): labelings of T_{h,m} with one child subtree of a depth-k vertex
//             removed, starting at that vertex.
//
// Two evaluation paths are exposed on purpose: the recurrences (memoized,
// bottom-up) and the product closed forms built from alpha/beta/gamma.
namespace rwl::trees {

// Vertex count (m^{h+1}-1)/(m-1).
long long tree_size(int h, int m);

// Multinomial with m parts (m^h-1)/(m-1). Requires h >= 1.
Count alpha(int h, int m);
// Multinomial with m-1 parts (m^{h-k}-1)/(m-1) and one part
// (m^{h+1}-m^{h-k+1})/(m-1). Requires h >= 1, 0 <= k <= h-1.
Count beta(int h, int m, int k);
// binomial((m^{h+1}-m)/(m-1), (m^{h+1-k}-m)/(m-1)), 0 <= k <= h.
Count gamma(int h, int m, int k);

Count t_rec(int h, int m, int k);
Count s_rec(int h, int m, int k);

Count t_closed(int h, int m, int k);
Count s_closed(int h, int m, int k);

enum class Method { recurrence, closed_form };

// sum_k m^k t(h,m,k)
Count count_perfect_tree(int h, int m, Method method = Method::recurrence);

// t(h,2,0) for h = 0..limit-1.
std::vector<Count> oeis_tree_root_sequence(int limit);

} // namespace rwl::trees
