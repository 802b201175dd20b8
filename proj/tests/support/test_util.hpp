#pragma once

#include <cstdint>
#include <random>

#include "uecsm/complex_matrix.hpp"

namespace uecsm::testing {

using Rng = std::mt19937_64;

inline Complex random_complex(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double re = gauss(rng);
  const double im = gauss(rng);
  return {re, im};
}

inline Matrix random_matrix(std::size_t n, Rng& rng) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_complex(rng);
  return m;
}

inline Matrix random_hermitian(std::size_t n, Rng& rng) {
  const Matrix a = random_matrix(n, rng);
  return Complex(0.5) * (a + adjoint(a));
}

inline Matrix random_complex_symmetric(std::size_t n, Rng& rng) {
  const Matrix a = random_matrix(n, rng);
  return Complex(0.5) * (a + transpose(a));
}

/// Haar-ish unitary by modified Gram-Schmidt on a Gaussian matrix.
inline Matrix random_unitary(std::size_t n, Rng& rng) {
  Matrix a = random_matrix(n, rng);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t m = 0; m < j; ++m) {
      Complex coeff = 0.0;
      for (std::size_t i = 0; i < n; ++i) coeff += a(i, j) * std::conj(a(i, m));
      for (std::size_t i = 0; i < n; ++i) a(i, j) -= coeff * a(i, m);
    }
    double nrm = 0.0;
    for (std::size_t i = 0; i < n; ++i) nrm += std::norm(a(i, j));
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i < n; ++i) a(i, j) /= nrm;
  }
  return a;
}

/// W W^t is both symmetric and unitary for unitary W.
inline Matrix random_symmetric_unitary(std::size_t n, Rng& rng) {
  const Matrix w = random_unitary(n, rng);
  return w * transpose(w);
}

inline Vector random_unit_vector(std::size_t n, Rng& rng) {
  Vector x(n);
  for (auto& z : x) z = random_complex(rng);
  const double nrm = norm2(x);
  for (auto& z : x) z /= nrm;
  return x;
}

/// A (+) B on the block diagonal; used for the external-direct-sum checks.
inline Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix s(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) s(a.rows() + i, a.cols() + j) = b(i, j);
  return s;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) { return max_abs(a - b); }

inline Matrix conjugate_by(const Matrix& w, const Matrix& t) { return w * t * adjoint(w); }

}  // namespace uecsm::testing
