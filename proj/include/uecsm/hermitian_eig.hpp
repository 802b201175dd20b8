#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <vector>

#include "uecsm/complex_matrix.hpp"

namespace uecsm {

/// Eigenvalues ascending; column k of `eigenvectors` pairs with eigenvalue k.
struct EigDecomposition {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;
};

namespace detail {

// One two-sided rotation G^* A G zeroing A(p,q), A Hermitian, |A(p,q)| = ab > 0.
// G is the identity except G(p,p) = G(q,q) = c, G(p,q) = -s*phi, G(q,p) = s*conj(phi)
// with phi = A(p,q)/ab. Diagonal updates are a +/- t*ab exactly; trace is preserved.
inline void jacobi_rotate(Matrix& a, Matrix& q, std::size_t p, std::size_t r, double ab) {
  const std::size_t n = a.rows();
  const Complex phi = a(p, r) / ab;
  const double tau = (a(p, p).real() - a(r, r).real()) / (2.0 * ab);

  double t;
  if (std::abs(tau) > 1e150) {
    t = 1.0 / (2.0 * tau);  // asymptotic root, avoids overflow in tau*tau
  } else {
    const double root = std::sqrt(1.0 + tau * tau);
    t = (tau >= 0.0) ? 1.0 / (tau + root) : 1.0 / (tau - root);
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const double app = a(p, p).real() + t * ab;
  const double arr = a(r, r).real() - t * ab;
  a(p, p) = app;
  a(r, r) = arr;
  a(p, r) = 0.0;
  a(r, p) = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == r) continue;
    const Complex akp = a(k, p);
    const Complex akr = a(k, r);
    const Complex nkp = c * akp + s * std::conj(phi) * akr;
    const Complex nkr = -s * phi * akp + c * akr;
    a(k, p) = nkp;
    a(p, k) = std::conj(nkp);
    a(k, r) = nkr;
    a(r, k) = std::conj(nkr);
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex qkp = q(k, p);
    const Complex qkr = q(k, r);
    q(k, p) = c * qkp + s * std::conj(phi) * qkr;
    q(k, r) = -s * phi * qkp + c * qkr;
  }
}

inline double max_offdiag(const Matrix& a) {
  double r = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) r = std::max(r, std::abs(a(i, j)));
  return r;
}

}  // namespace detail

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// Deterministic: fixed sweep order (row by row over the strict upper triangle),
/// no pivot search, so identical input bits give identical output bits. Ascending
/// eigenvalue order, ties kept in pre-sort column order. Intended scale is
/// n up to a few hundred.
///
/// Throws NotHermitian when ||H - H*||_max exceeds eig_residual * ||H||_max and
/// NoConvergence if the sweep budget is exhausted (not observed in practice).
inline EigDecomposition hermitian_eig(const Matrix& h, const Tolerances& tol = {}) {
  if (!h.square()) throw DimensionMismatch("hermitian_eig: matrix not square");
  check_finite(h, "hermitian_eig");
  const std::size_t n = h.rows();

  const double scale = max_abs(h);
  if (scale == 0.0)
    return {std::vector<double>(n, 0.0), Matrix::identity(n)};

  double herm = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      herm = std::max(herm, std::abs(h(i, j) - std::conj(h(j, i))));
  if (herm > tol.eig_residual * scale)
    throw NotHermitian("hermitian_eig: input is not Hermitian within tolerance");

  // Work on the exactly Hermitian part; rotations then keep the invariant.
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = 0.5 * (h(i, i) + std::conj(h(i, i)));
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (h(i, j) + std::conj(h(j, i)));
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }
  Matrix q = Matrix::identity(n);

  const double stop = 50.0 * std::numeric_limits<double>::epsilon() * scale;
  const double skip = 0.05 * stop;
  const int max_sweeps = 64;

  bool converged = n < 2;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t r = p + 1; r < n; ++r) {
        const double ab = std::abs(a(p, r));
        if (ab > skip) detail::jacobi_rotate(a, q, p, r, ab);
      }
    converged = detail::max_offdiag(a) <= stop;
  }
  if (!converged) throw NoConvergence("hermitian_eig: sweep budget exhausted");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigDecomposition out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = q(i, order[k]);
  }
  return out;
}

}  // namespace uecsm
