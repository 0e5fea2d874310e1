#pragma once

#include "rwl/bigmath.hpp"

// The theta-shaped graph S_{a1,a2,a3}: paths P_{a1} (top), P_{a2} (middle)
// and P_{a3} (bottom) whose left ends form a path and whose right ends form
// a path. The middle path's ends are the junctions: green on the left, red
// on the right.
//
// Starting vertices split as follows, each lemma counting the orderings in
// which green precedes red:
//   - a junction itself (term_A, the left one; the right one by mirroring);
//   - middle vertex s, 2 <= s <= a2-1 (term_B);
//   - top vertex s (term_C(a1,a2,a3,s)) or bottom vertex s (term_C(a3,a2,a1,s)).
// Left-right mirroring swaps green and red, so doubling each class counts
// every labeling once.
namespace rwl::twocycles {

// Labelings starting at the left middle junction.
Count term_A(int a1, int a2, int a3);

// Start at middle vertex s (counted from the green end), green before red.
Count term_B(int a1, int a2, int a3, int s);

// Start at top vertex s (counted from the left), green before red.
Count term_C(int a1, int a2, int a3, int s);

// 2A + 2 sum_s B(s) + 2 sum_s C_{a1,a2,a3}(s) + 2 sum_s C_{a3,a2,a1}(s)
Count count_two_cycles(int a1, int a2, int a3);

} // namespace rwl::twocycles
