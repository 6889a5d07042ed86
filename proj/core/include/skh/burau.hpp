#pragma once

// Unreduced Burau representation.  A positive generator sigma_i acts by the
// 2x2 block [[1-t, t], [1, 0]] at rows/columns (i, i+1) of the n x n
// identity, a negative one by [[0, 1], [t^-1, 1-t^-1]]; a word maps to the
// left-to-right product of its generator matrices.

#include "skh/braid.hpp"
#include "skh/poly_matrix.hpp"

namespace skh {

// sign is +1 or -1; 1 <= index <= strands-1.
PolyMatrix burau_generator(int strands, int index, int sign);

PolyMatrix burau_matrix(const BraidWord& w);

LaurentPolynomial burau_trace(const BraidWord& w);

// Closed form for sigma_1^k (k >= 1): the top-left block is
//   [ sum_{m=0}^{k} (-t)^m          sum_{m=1}^{k} (-1)^{m+1} t^m   ]
//   [ sum_{m=0}^{k-1} (-t)^m        sum_{m=1}^{k-1} (-1)^{m+1} t^m ] .
PolyMatrix burau_sigma1_power(int strands, int k);

}  // namespace skh
