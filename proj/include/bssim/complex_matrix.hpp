// Copyright 2026 The bs-sim authors
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

#ifndef BSSIM_COMPLEX_MATRIX_HPP
#define BSSIM_COMPLEX_MATRIX_HPP

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "bssim/errors.hpp"

namespace bssim {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Carrier for interferometers, reduced
/// matrices and unitary dilations; small enough that no BLAS is warranted.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {}

  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw dimension_error("entry count does not match rows*cols");
    }
  }

  /// Construction from nested braces, row by row.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw dimension_error("ragged initializer");
      entries_.insert(entries_.end(), r.begin(), r.end());
    }
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  const std::vector<Complex>& entries() const { return entries_; }

  ComplexMatrix transpose() const {
    ComplexMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  ComplexMatrix conjugate() const {
    ComplexMatrix m = *this;
    for (auto& z : m.entries_) z = std::conj(z);
    return m;
  }

  ComplexMatrix adjoint() const { return transpose().conjugate(); }

  ComplexMatrix operator*(const ComplexMatrix& rhs) const {
    if (cols_ != rhs.rows_) {
      throw dimension_error("matrix product shape mismatch");
    }
    ComplexMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const Complex a = (*this)(i, k);
        if (a == Complex(0.0, 0.0)) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
          out(i, j) += a * rhs(k, j);
        }
      }
    }
    return out;
  }

  ComplexMatrix operator-(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
      throw dimension_error("matrix difference shape mismatch");
    }
    ComplexMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      out.entries_[i] -= rhs.entries_[i];
    }
    return out;
  }

  ComplexMatrix operator+(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
      throw dimension_error("matrix sum shape mismatch");
    }
    ComplexMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      out.entries_[i] += rhs.entries_[i];
    }
    return out;
  }

  ComplexMatrix scaled(Complex factor) const {
    ComplexMatrix out = *this;
    for (auto& z : out.entries_) z *= factor;
    return out;
  }

  /// Largest entry modulus.
  double max_abs() const {
    double m = 0.0;
    for (const auto& z : entries_) m = std::max(m, std::abs(z));
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

/// Max-entry deviation of A†A from the identity.
inline double unitarity_defect(const ComplexMatrix& a) {
  if (!a.is_square()) throw dimension_error("unitarity defect needs a square matrix");
  const ComplexMatrix gram = a.adjoint() * a;
  double defect = 0.0;
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    for (std::size_t j = 0; j < gram.cols(); ++j) {
      const Complex want = (i == j) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
      defect = std::max(defect, std::abs(gram(i, j) - want));
    }
  }
  return defect;
}

inline bool is_unitary(const ComplexMatrix& a, double tol) {
  if (!a.is_square()) return false;
  return unitarity_defect(a) < tol;
}

/// Block-diagonal concatenation diag(A, B).
inline ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

}  // namespace bssim

#endif  // BSSIM_COMPLEX_MATRIX_HPP
