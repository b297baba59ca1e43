// Copyright 2026 The Sinkeval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SINKEVAL_ALGEBRA_H_
#define SINKEVAL_ALGEBRA_H_

#include <cstddef>

#include "sinkeval/int_matrix.h"

namespace sinkeval {

// Kronecker product; result is (a.rows*b.rows) x (a.cols*b.cols).
IntMatrix Kronecker(const IntMatrix& a, const IntMatrix& b);

// 1 e_k^T A - A^T e_k e_k^T A for a square 0/1 best-response adjacency
// matrix A. Row r of the result is row k of A when a_kr = 0 and zero when
// a_kr = 1. Throws kNonSquare or kIndexOutOfRange.
IntMatrix AbarK(const IntMatrix& best_response_adjacency, std::size_t k);

// Joint strictly-best-response adjacency assembled from the best-response
// adjacency alone:
//
//   sum_k ( e_k e_k^T (x) Abar_k  +  Abar_k (x) e_k e_k^T )
//
// under joint indexing r = i * n + j. Throws kNonSquare, or
// kNonBinaryResult when the sum is not a 0/1 matrix (the input was not the
// adjacency of a best-response digraph).
IntMatrix JointStrictAdjacencyFromFormula(
    const IntMatrix& best_response_adjacency);

// Adjacency of the digraph Cartesian product: I (x) a2 + a1 (x) I.
// Throws kNonSquare.
IntMatrix CartesianProductAdjacency(const IntMatrix& a1, const IntMatrix& a2);

}  // namespace sinkeval

#endif  // SINKEVAL_ALGEBRA_H_
