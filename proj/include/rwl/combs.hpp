#pragma once

#include "rwl/bigmath.hpp"

// Generalized combs C_{m,n,k}: m copies of the path P_n whose k-th vertices
// are joined into a spine path. Vertices are (i, j), tooth i, position j.
namespace rwl::combs {

// Labelings of C_{m,n,k} starting at the spine end (1, k). t_spine(0,n,k) = 1.
Count t_spine(int m, int n, int k);

// Labelings starting on tooth j below the spine in which the spine vertex
// (j, spine) receives label y, without the choice of how the walk reached
// it. `spine` is k or its mirror n-k+1.
Count a_term(int m, int n, int j, int spine, int y);

// Labelings starting at vertex (j, s).
Count count_from_vertex(int m, int n, int k, int j, int s);

// Closed form, evaluated in exact rationals and checked to be integral.
Count count_comb(int m, int n, int k);

// The same total, assembled from count_from_vertex over every start.
Count count_comb_by_starts(int m, int n, int k);

struct CorollaryReport {
    Rational printed;  // the closed expression as stated
    Count theorem;     // count_comb at the matching (n, k)
    bool agrees = false;
};

// Combs (n=2, k=1): 2^{m-1} m (m-1)!!
CorollaryReport corollary_comb(int m);
// Double combs (n=3, k=2): 2^{m-1} (3m+1)! / (3^m (3m-1) m!)
CorollaryReport corollary_double_comb(int m);

struct PacSides {
    Rational lhs;
    Rational rhs;
};

// sum_{j=0}^m t_j/(jn)! * t_{m-j}/((m-j)n)!  versus  (1/m!) (2/n! C(n-1,k-1))^m
PacSides lemma_pac_sides(int m, int n, int k);
bool lemma_pac_check(int m, int n, int k);

} // namespace rwl::combs
