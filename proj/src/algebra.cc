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

#include "sinkeval/algebra.h"

#include "sinkeval/errors.h"

namespace sinkeval {
namespace {

void RequireSquare(const IntMatrix& m, const char* what) {
  if (!m.is_square()) {
    throw SinkevalError(ErrorCode::kNonSquare,
                        std::string(what) + " is " + std::to_string(m.rows()) +
                            "x" + std::to_string(m.cols()));
  }
}

IntMatrix OnesColumn(std::size_t n) {
  IntMatrix m(n, 1);
  for (std::size_t i = 0; i < n; ++i) m(i, 0) = 1;
  return m;
}

IntMatrix BasisColumn(std::size_t n, std::size_t k) {
  IntMatrix m(n, 1);
  m(k, 0) = 1;
  return m;
}

}  // namespace

IntMatrix Kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const std::int64_t aij = a(i, j);
      if (aij == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p) {
        for (std::size_t q = 0; q < b.cols(); ++q) {
          out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
      }
    }
  }
  return out;
}

IntMatrix AbarK(const IntMatrix& best_response_adjacency, std::size_t k) {
  const IntMatrix& a = best_response_adjacency;
  RequireSquare(a, "best-response adjacency");
  const std::size_t n = a.rows();
  if (k >= n) {
    throw SinkevalError(ErrorCode::kIndexOutOfRange,
                        "k = " + std::to_string(k) + " with n = " +
                            std::to_string(n));
  }
  // Evaluated literally as matrix products.
  const IntMatrix ek = BasisColumn(n, k);
  const IntMatrix ek_t = ek.Transposed();
  const IntMatrix ones = OnesColumn(n);
  return ones * ek_t * a - a.Transposed() * ek * ek_t * a;
}

IntMatrix JointStrictAdjacencyFromFormula(
    const IntMatrix& best_response_adjacency) {
  RequireSquare(best_response_adjacency, "best-response adjacency");
  const std::size_t n = best_response_adjacency.rows();
  IntMatrix sum(n * n, n * n);
  for (std::size_t k = 0; k < n; ++k) {
    const IntMatrix abar = AbarK(best_response_adjacency, k);
    const IntMatrix projector = IntMatrix::BasisProjector(n, k);
    sum += Kronecker(projector, abar);
    sum += Kronecker(abar, projector);
  }
  if (!sum.IsBinary()) {
    throw SinkevalError(ErrorCode::kNonBinaryResult,
                        "formula produced entries outside {0, 1}; input is "
                        "not a best-response adjacency matrix");
  }
  return sum;
}

IntMatrix CartesianProductAdjacency(const IntMatrix& a1, const IntMatrix& a2) {
  RequireSquare(a1, "first factor");
  RequireSquare(a2, "second factor");
  return Kronecker(IntMatrix::Identity(a1.rows()), a2) +
         Kronecker(a1, IntMatrix::Identity(a2.rows()));
}

}  // namespace sinkeval
