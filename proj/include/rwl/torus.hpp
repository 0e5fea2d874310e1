#pragma once

#include <variant>
#include <vector>

#include "rwl/bigmath.hpp"
#include "rwl/graph.hpp"

// The circular ladder C_2 x C_n.
//
//   a(n,k):   ways to finish a labeling when k consecutive vertices of one
//             row are labeled and nothing else.
//   b(n,s,t): ways to finish when s+1 consecutive vertices of one row and t+1
//             of the other are labeled and exactly one rung joins the two
//             runs. Zero when s+t >= n.
namespace rwl::torus {

Count a_rec(int n, int k);
Count b_rec(int n, int s, int t);

Count a_closed(int n, int k);
Count b_closed(int n, int s, int t);

// n(n+2)(2n-2)!/(n-2)! for n >= 2; 2 for the single rung at n = 1.
Count count_torus(int n);

struct AShape {
    int k = 1;
};
struct BShape {
    int s = 0;
    int t = 0;
};
using Shape = std::variant<AShape, BShape>;

struct PartialState {
    Graph graph;
    std::vector<Vertex> labeled;
};

// Row 1 run occupies columns 1..k (a) or 1..s+1 (b); for b the row 2 run
// occupies columns s+1..s+t+1, so the only rung between the runs is at
// column s+1.
PartialState torus_partial_state_graph(int n, const Shape& shape);

} // namespace rwl::torus
