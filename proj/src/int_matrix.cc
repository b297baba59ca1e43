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

#include "sinkeval/int_matrix.h"

#include <algorithm>
#include <sstream>

#include "sinkeval/errors.h"

namespace sinkeval {
namespace {

void RequireSameShape(const IntMatrix& a, const IntMatrix& b,
                      const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream msg;
    msg << op << " of " << a.rows() << "x" << a.cols() << " and " << b.rows()
        << "x" << b.cols();
    throw SinkevalError(ErrorCode::kDimensionMismatch, msg.str());
  }
}

}  // namespace

IntMatrix::IntMatrix(
    std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw SinkevalError(ErrorCode::kDimensionMismatch, "ragged matrix rows");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::FromRows(
    const std::vector<std::vector<std::int64_t>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) {
      throw SinkevalError(ErrorCode::kDimensionMismatch, "ragged matrix rows");
    }
    std::copy(rows[r].begin(), rows[r].end(),
              m.data_.begin() + r * m.cols_);
  }
  return m;
}

IntMatrix IntMatrix::Identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::BasisProjector(std::size_t n, std::size_t k) {
  if (k >= n) {
    throw SinkevalError(ErrorCode::kIndexOutOfRange,
                        "basis index " + std::to_string(k) +
                            " out of range for dimension " +
                            std::to_string(n));
  }
  IntMatrix m(n, n);
  m(k, k) = 1;
  return m;
}

IntMatrix IntMatrix::Transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool IntMatrix::IsBinary() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](std::int64_t v) { return v == 0 || v == 1; });
}

bool IntMatrix::IsZero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](std::int64_t v) { return v == 0; });
}

std::size_t IntMatrix::CountDifferences(const IntMatrix& other) const {
  RequireSameShape(*this, other, "comparison");
  std::size_t count = 0;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (data_[i] != other.data_[i]) ++count;
  }
  return count;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& other) {
  RequireSameShape(*this, other, "sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& other) {
  RequireSameShape(*this, other, "difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

std::string IntMatrix::ToString() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r == 0 ? "[" : ",[");
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c > 0) out << ",";
      out << (*this)(r, c);
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    std::ostringstream msg;
    msg << "product of " << a.rows() << "x" << a.cols() << " and " << b.rows()
        << "x" << b.cols();
    throw SinkevalError(ErrorCode::kDimensionMismatch, msg.str());
  }
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

}  // namespace sinkeval
