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

#ifndef BSSIM_EMBEDDING_HPP
#define BSSIM_EMBEDDING_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "bssim/complex_matrix.hpp"

namespace bssim {

namespace detail {

// Dense real symmetric matrix helpers on flat row-major storage, sized for
// the desk-scale dilations (N <= a handful).
struct RealMatrix {
  std::size_t n = 0;
  std::vector<double> a;
  RealMatrix() = default;
  explicit RealMatrix(std::size_t dim) : n(dim), a(dim * dim, 0.0) {}
  double& at(std::size_t r, std::size_t c) { return a[r * n + c]; }
  double at(std::size_t r, std::size_t c) const { return a[r * n + c]; }
};

// Cyclic Jacobi diagonalization of a symmetric matrix. Returns eigenvalues;
// columns of `vecs` hold the eigenvectors.
inline std::vector<double> jacobi_eigensymmetric(RealMatrix s, RealMatrix& vecs) {
  const std::size_t n = s.n;
  vecs = RealMatrix(n);
  for (std::size_t i = 0; i < n; ++i) vecs.at(i, i) = 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += s.at(p, q) * s.at(p, q);
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(s.at(p, q)) < 1e-300) continue;
        const double theta = (s.at(q, q) - s.at(p, p)) / (2.0 * s.at(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double skp = s.at(k, p), skq = s.at(k, q);
          s.at(k, p) = c * skp - sn * skq;
          s.at(k, q) = sn * skp + c * skq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double spk = s.at(p, k), sqk = s.at(q, k);
          s.at(p, k) = c * spk - sn * sqk;
          s.at(q, k) = sn * spk + c * sqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = vecs.at(k, p), vkq = vecs.at(k, q);
          vecs.at(k, p) = c * vkp - sn * vkq;
          vecs.at(k, q) = sn * vkp + c * vkq;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = s.at(i, i);
  return eig;
}

// Square root of a positive semidefinite symmetric matrix. Eigenvalues that
// are zero up to the resolution of the norm estimate are clamped to exactly
// zero, so the two defect blocks of a dilation stay consistent.
inline RealMatrix psd_sqrt(const RealMatrix& s) {
  RealMatrix vecs;
  const std::vector<double> eig = jacobi_eigensymmetric(s, vecs);
  const std::size_t n = s.n;
  std::vector<double> root(n);
  for (std::size_t i = 0; i < n; ++i) {
    root[i] = eig[i] < 1e-12 ? 0.0 : std::sqrt(eig[i]);
  }
  RealMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        acc += vecs.at(r, k) * root[k] * vecs.at(c, k);
      }
      out.at(r, c) = acc;
    }
  }
  return out;
}

inline RealMatrix real_part_of(const ComplexMatrix& m) {
  RealMatrix out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = m(r, c).real();
  return out;
}

}  // namespace detail

/// Spectral norm (largest singular value) by power iteration on X^T X,
/// restarted from every basis vector so no start is orthogonal to the top
/// singular direction. Converges to 1e-14 relative.
inline double spectral_norm(const ComplexMatrix& x) {
  const std::size_t rows = x.rows(), cols = x.cols();
  double best = 0.0;
  for (std::size_t start = 0; start < cols; ++start) {
    std::vector<Complex> v(cols, Complex(0.0, 0.0));
    v[start] = 1.0;
    double lambda = 0.0;
    for (int it = 0; it < 200000; ++it) {
      // w = X v, v' = X^dag w.
      std::vector<Complex> w(rows, Complex(0.0, 0.0));
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) w[r] += x(r, c) * v[c];
      std::vector<Complex> next(cols, Complex(0.0, 0.0));
      double w2 = 0.0;
      for (std::size_t r = 0; r < rows; ++r) w2 += std::norm(w[r]);
      for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t r = 0; r < rows; ++r)
          next[c] += std::conj(x(r, c)) * w[r];
      double n2 = 0.0;
      for (const auto& z : next) n2 += std::norm(z);
      if (n2 == 0.0) {
        lambda = w2;  // v was in the kernel of X^dag X after one step
        break;
      }
      const double inv = 1.0 / std::sqrt(n2);
      for (auto& z : next) z *= inv;
      v = std::move(next);
      if (std::abs(w2 - lambda) <= 1e-14 * std::max(w2, 1e-300) && it > 2) {
        lambda = w2;
        break;
      }
      lambda = w2;
    }
    best = std::max(best, lambda);
  }
  return std::sqrt(best);
}

/// A matrix embedded into a unitary: the top-left block of `unitary` equals
/// epsilon times the embedded matrix.
struct EmbeddingResult {
  ComplexMatrix unitary;  // 2N x 2N
  double epsilon = 0.0;   // 1 / spectral norm of the embedded matrix
};

/// Unitary dilation of a real N x N matrix X: with T = X/||X||,
///
///   U = [ T                  sqrt(I - T T^T) ]
///       [ sqrt(I - T^T T)   -T^T             ]
///
/// so the rescaled matrix sits verbatim in the upper-left corner. Scaling X
/// by any positive constant leaves the dilation unchanged.
inline EmbeddingResult embed_matrix(const ComplexMatrix& x) {
  if (!x.is_square()) throw dimension_error("embedding needs a square matrix");
  for (const auto& z : x.entries()) {
    if (z.imag() != 0.0) throw domain_error("embedding is defined for real matrices");
  }
  const double norm = spectral_norm(x);
  if (norm == 0.0) throw domain_error("cannot embed the zero matrix");
  const double eps = 1.0 / norm;
  const std::size_t n = x.rows();

  detail::RealMatrix t(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) t.at(r, c) = eps * x(r, c).real();

  detail::RealMatrix left(n), right(n);  // I - T T^T and I - T^T T
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      double tt = 0.0, ttt = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        tt += t.at(r, k) * t.at(c, k);
        ttt += t.at(k, r) * t.at(k, c);
      }
      left.at(r, c) = (r == c ? 1.0 : 0.0) - tt;
      right.at(r, c) = (r == c ? 1.0 : 0.0) - ttt;
    }
  }
  const detail::RealMatrix defect_left = detail::psd_sqrt(left);
  const detail::RealMatrix defect_right = detail::psd_sqrt(right);

  ComplexMatrix u(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      u(r, c) = t.at(r, c);
      u(r, n + c) = defect_left.at(r, c);
      u(n + r, c) = defect_right.at(r, c);
      u(n + r, n + c) = -t.at(c, r);
    }
  }
  return {std::move(u), eps};
}

}  // namespace bssim

#endif  // BSSIM_EMBEDDING_HPP
