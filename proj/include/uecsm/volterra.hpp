#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>

#include "uecsm/certificate.hpp"
#include "uecsm/complex_matrix.hpp"
#include "uecsm/modulus_test.hpp"

namespace uecsm {
namespace volterra {

// Desk-scale demonstration for the integration operator [Tf](x) = int_0^x f.
// Its singular pairs have closed forms, so the gram-matrix conditions and the
// phase recovery can be exercised without any eigensolver in the loop.

inline constexpr double pi = std::numbers::pi;

/// n-th eigenvalue of T*T (and TT*): 2/((2n+1) pi), strictly decreasing.
inline double eigenvalue(std::size_t n) { return 2.0 / ((2.0 * n + 1.0) * pi); }

/// Singular functions: u_n = sqrt(2) cos((n+1/2) pi x), v_n = sqrt(2) sin((n+1/2) pi x).
inline double u_fn(std::size_t n, double x) { return std::sqrt(2.0) * std::cos((n + 0.5) * pi * x); }
inline double v_fn(std::size_t n, double x) { return std::sqrt(2.0) * std::sin((n + 0.5) * pi * x); }

/// Closed form of <u_i, v_j> on L^2[0,1].
inline double inner_uv(std::size_t i, std::size_t j) {
  if (i == j) return 2.0 / (pi * (1.0 + 2.0 * i));
  const double si = 2.0 * i + 1.0;
  const double sj = 2.0 * j + 1.0;
  const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
  const double di = double(i), dj = double(j);
  return (sign * si - sj) / (pi * (di - dj + di * di - dj * dj));
}

/// The leading N x N gram block, indexed by n = 0..N-1 in the natural order:
/// gram(i,j) = <u_j, v_i>, matching the convention of SpectralPair.
inline Matrix gram_block(std::size_t n) {
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = inner_uv(j, i);
  return g;
}

/// Modulus conditions on the N x N gram block. The eigenvalues are known in
/// closed form, so the gap entering the report is exact.
inline ModulusReport modulus_check(std::size_t n, const Tolerances& tol = {}) {
  if (n < 2) throw DimensionMismatch("volterra::modulus_check: need N >= 2");
  std::vector<double> ascending(n);
  for (std::size_t k = 0; k < n; ++k) ascending[k] = eigenvalue(n - 1 - k);
  return modulus_report_from_gram(gram_block(n), min_relative_gap(ascending), tol);
}

/// Phase recovery on the gram block; the result is (-1)^n once the first
/// phase is normalized to 1.
inline PhaseVector alpha(std::size_t n, const Tolerances& tol = {}) {
  return alpha_phases(gram_block(n), tol);
}

/// Matrix of T in the conjugation-fixed orthonormal basis
/// e_n = exp(2 pi i n (x - 1/2)), n = -N..N, as a (2N+1) x (2N+1) truncation.
///
/// Antidifferentiating e_n gives [T e_n](x) = (e_n(x) - (-1)^n)/(2 pi i n) for
/// n != 0 and [T e_0](x) = x, whence
///   <T e_n, e_m> = (delta_mn - (-1)^n delta_m0) / (2 pi i n)   for n != 0,
///   <T e_0, e_m> = (-1)^m i / (2 pi m)                         for m != 0,
///   <T e_0, e_0> = 1/2.
/// The result is complex symmetric by inspection: only the diagonal and the
/// central row/column are populated, and both cross entries agree.
inline Matrix fourier_matrix(std::size_t half_width) {
  const std::ptrdiff_t nn = std::ptrdiff_t(half_width);
  Matrix a(2 * half_width + 1, 2 * half_width + 1);
  for (std::ptrdiff_t m = -nn; m <= nn; ++m) {
    for (std::ptrdiff_t n = -nn; n <= nn; ++n) {
      Complex value = 0.0;
      if (n == 0 && m == 0) {
        value = 0.5;
      } else if (n == 0) {
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        value = Complex(0.0, sign / (2.0 * pi * double(m)));
      } else if (m == 0) {
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        value = Complex(0.0, sign / (2.0 * pi * double(n)));
      } else if (m == n) {
        value = Complex(0.0, -1.0 / (2.0 * pi * double(n)));
      }
      a(std::size_t(m + nn), std::size_t(n + nn)) = value;
    }
  }
  return a;
}

}  // namespace volterra
}  // namespace uecsm
