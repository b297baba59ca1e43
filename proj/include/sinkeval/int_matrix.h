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

#ifndef SINKEVAL_INT_MATRIX_H_
#define SINKEVAL_INT_MATRIX_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace sinkeval {

// Dense row-major matrix of signed 64-bit integers. Used for adjacency
// matrices (entries 0/1) and for intermediate integer products.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  // Rows must all have the same length; throws kDimensionMismatch.
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static IntMatrix FromRows(const std::vector<std::vector<std::int64_t>>& rows);

  static IntMatrix Identity(std::size_t n);
  // n x n matrix with a single 1 at (k, k), i.e. e_k e_k^T.
  static IntMatrix BasisProjector(std::size_t n, std::size_t k);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  std::int64_t operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntMatrix Transposed() const;
  bool IsBinary() const;
  bool IsZero() const;
  // Number of entries that differ; dimensions must match.
  std::size_t CountDifferences(const IntMatrix& other) const;

  IntMatrix& operator+=(const IntMatrix& other);
  IntMatrix& operator-=(const IntMatrix& other);

  std::string ToString() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

IntMatrix operator+(IntMatrix a, const IntMatrix& b);
IntMatrix operator-(IntMatrix a, const IntMatrix& b);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

}  // namespace sinkeval

#endif  // SINKEVAL_INT_MATRIX_H_
