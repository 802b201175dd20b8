#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "uecsm/complex_matrix.hpp"
#include "uecsm/modulus_test.hpp"

namespace uecsm {

/// Unimodular phases alpha with gram(j,i) = alpha_j * conj(alpha_i) * gram(i,j).
using PhaseVector = Vector;

struct CertificateResiduals {
  double s_symmetric = 0.0;   // ||S - S^t||_max
  double s_unitary = 0.0;     // ||S*S - I||_max
  double alpha = 0.0;         // worst violation of the phase relation on the gram
  double fixed_point = 0.0;   // max_k ||S conj(q_k) - q_k||_2
  double intertwining = 0.0;  // ||T - S T^t conj(S)||_max, i.e. T = C T* C with C = SJ
  double m_symmetric = 0.0;   // ||M - M^t||_max

  double max() const {
    double r = s_symmetric;
    for (double v : {s_unitary, alpha, fixed_point, intertwining, m_symmetric}) r = std::max(r, v);
    return r;
  }
};

/// Everything needed to re-check the symmetrization independently:
/// M = Q*TQ is the complex symmetric representative, Q the basis fixed by the
/// conjugation C = SJ, S the symmetric unitary built from the phases.
struct Certificate {
  PhaseVector alphas;
  Matrix S;
  Matrix Q;
  Matrix M;
  CertificateResiduals residuals;
};

/// C = SJ applied to x, that is S * conj(x).
inline Vector apply_conjugation(const Matrix& s, std::span<const Complex> x) {
  if (!s.square() || s.rows() != x.size())
    throw DimensionMismatch("apply_conjugation: shape mismatch");
  Vector cx(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) cx[k] = std::conj(x[k]);
  return s * cx;
}

inline double alpha_residual(const Matrix& gram, std::span<const Complex> alphas) {
  const std::size_t n = gram.rows();
  if (alphas.size() != n) throw DimensionMismatch("alpha_residual: length mismatch");
  double r = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      r = std::max(r, std::abs(gram(j, i) - alphas[j] * std::conj(alphas[i]) * gram(i, j)));
  return r;
}

/// Residual of T = C T* C with C = SJ, as plain matrix algebra:
/// C T* C = S conj(T*) conj(S) = S T^t conj(S).
inline double intertwining_residual(const Matrix& t, const Matrix& s) {
  return max_abs(t - s * transpose(t) * conj_entrywise(s));
}

inline double fixed_point_residual(const Matrix& s, const Matrix& q) {
  double r = 0.0;
  for (std::size_t k = 0; k < q.cols(); ++k) {
    Vector col = q.column(k);
    Vector image = apply_conjugation(s, col);
    for (std::size_t i = 0; i < col.size(); ++i) image[i] -= col[i];
    r = std::max(r, norm2(image));
  }
  return r;
}

/// Recovers unimodular phases satisfying gram(j,i) = alpha_j conj(alpha_i) gram(i,j).
///
/// Indices form a graph with an edge wherever both gram(i,j) and gram(j,i)
/// exceed zero_tol; the phase ratio beta_ij = gram(j,i)/gram(i,j) is then
/// well conditioned. Each connected component gets root phase 1 and the rest
/// propagate along a maximum-weight spanning tree (strongest edges first, so
/// propagation never divides by a near-zero entry when a better route exists).
/// Cross-component constraints are vacuous: both gram entries vanish there.
///
/// Throws PhaseInconsistency when a non-tree edge violates the propagated
/// relation beyond 10 * test_tol, which signals a marginal modulus verdict.
inline PhaseVector alpha_phases(const Matrix& gram, const Tolerances& tol = {}) {
  if (!gram.square()) throw DimensionMismatch("alpha_phases: gram not square");
  const std::size_t n = gram.rows();

  auto weight = [&](std::size_t i, std::size_t j) {
    return std::min(std::abs(gram(i, j)), std::abs(gram(j, i)));
  };

  PhaseVector alphas(n, 1.0);
  std::vector<bool> in_tree(n, false);

  for (std::size_t root = 0; root < n; ++root) {
    if (in_tree[root]) continue;
    // Prim's method over this component, deterministic tie-breaks by index.
    in_tree[root] = true;
    alphas[root] = 1.0;
    std::vector<double> best_w(n, 0.0);
    std::vector<std::size_t> best_from(n, root);
    for (std::size_t j = 0; j < n; ++j)
      if (!in_tree[j]) best_w[j] = weight(root, j);

    while (true) {
      std::size_t next = n;
      for (std::size_t j = 0; j < n; ++j)
        if (!in_tree[j] && best_w[j] > tol.zero_tol && (next == n || best_w[j] > best_w[next]))
          next = j;
      if (next == n) break;  // component exhausted

      const std::size_t i = best_from[next];
      const Complex beta = gram(next, i) / gram(i, next);
      const Complex a = alphas[i] * beta;
      alphas[next] = a / std::abs(a);  // keep exactly unimodular
      in_tree[next] = true;

      for (std::size_t j = 0; j < n; ++j) {
        if (in_tree[j]) continue;
        const double w = weight(next, j);
        if (w > best_w[j]) {
          best_w[j] = w;
          best_from[j] = next;
        }
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (weight(i, j) <= tol.zero_tol) continue;
      const double r = std::abs(gram(j, i) - alphas[j] * std::conj(alphas[i]) * gram(i, j));
      if (r > 10.0 * tol.test_tol)
        throw PhaseInconsistency("alpha_phases: edge (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + ") violates the phase relation");
    }
  return alphas;
}

/// S = V diag(alpha) U^t. Symmetry of S is equivalent to the phase relation
/// on the gram matrix, so a valid alpha makes S a symmetric unitary.
inline Matrix build_symmetric_unitary(const SpectralPair& sp, std::span<const Complex> alphas,
                                      const Tolerances& tol = {}) {
  const std::size_t n = sp.u.rows();
  if (alphas.size() != n) throw DimensionMismatch("build_symmetric_unitary: length mismatch");
  Matrix va = sp.v;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) va(i, j) *= alphas[j];
  Matrix s = va * transpose(sp.u);
  if (symmetry_residual(s) > 10.0 * tol.test_tol || unitarity_residual(s) > 10.0 * tol.test_tol)
    throw SymmetryFailure("build_symmetric_unitary: S failed the symmetry/unitarity bound");
  return s;
}

/// Orthonormal basis fixed by the conjugation C = SJ, as matrix columns.
///
/// Averaging construction: take the first standard basis vector with a
/// nonnegligible projection onto the orthogonal complement of the columns
/// built so far, set w = x + Cx (or w = i(x - Cx) when that nearly cancels;
/// the two cannot both vanish since their norms square-sum to 4), and
/// normalize. C-fixedness of the built columns makes w orthogonal to them
/// automatically; one re-orthogonalization pass cleans up rounding.
inline Matrix conjugation_fixed_basis(const Matrix& s, const Tolerances& tol = {}) {
  if (!s.square()) throw DimensionMismatch("conjugation_fixed_basis: matrix not square");
  if (symmetry_residual(s) > 10.0 * tol.test_tol || unitarity_residual(s) > 10.0 * tol.test_tol)
    throw ConstructionFailure("conjugation_fixed_basis: S is not a symmetric unitary");
  const std::size_t n = s.rows();
  constexpr double kDegenerate = 1e-6;

  Matrix q(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    Vector x;
    double xn = 0.0;
    for (std::size_t b = 0; b < n && xn <= kDegenerate; ++b) {
      x.assign(n, 0.0);
      x[b] = 1.0;
      for (std::size_t m = 0; m < k; ++m) {
        const Complex coeff = std::conj(q(b, m));  // <e_b, q_m>
        for (std::size_t i = 0; i < n; ++i) x[i] -= coeff * q(i, m);
      }
      xn = norm2(x);
    }
    if (xn <= kDegenerate)
      throw ConstructionFailure("conjugation_fixed_basis: no usable seed vector");
    for (Complex& z : x) z /= xn;

    Vector cx = apply_conjugation(s, x);
    Vector w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = x[i] + cx[i];
    if (norm2(w) < kDegenerate)
      for (std::size_t i = 0; i < n; ++i) w[i] = Complex(0.0, 1.0) * (x[i] - cx[i]);

    for (std::size_t m = 0; m < k; ++m) {
      const Complex coeff = inner(w, q.column(m));
      for (std::size_t i = 0; i < n; ++i) w[i] -= coeff * q(i, m);
    }
    const double wn = norm2(w);
    if (wn < kDegenerate)
      throw ConstructionFailure("conjugation_fixed_basis: averaging degenerated");
    for (std::size_t i = 0; i < n; ++i) q(i, k) = w[i] / wn;
  }
  return q;
}

namespace detail {

/// Shared tail of the certification pipeline. `sp` may belong to a shifted
/// copy T + cI of `t`; the conjugation it produces works for `t` unchanged,
/// and all residuals are measured against `t` itself.
inline Certificate certify_from_pair(const Matrix& t, const SpectralPair& sp,
                                     const Tolerances& tol) {
  Certificate cert;
  cert.alphas = alpha_phases(sp.gram, tol);
  cert.S = build_symmetric_unitary(sp, cert.alphas, tol);
  cert.Q = conjugation_fixed_basis(cert.S, tol);
  cert.M = adjoint(cert.Q) * t * cert.Q;

  cert.residuals.s_symmetric = symmetry_residual(cert.S);
  cert.residuals.s_unitary = unitarity_residual(cert.S);
  cert.residuals.alpha = alpha_residual(sp.gram, cert.alphas);
  cert.residuals.fixed_point = fixed_point_residual(cert.S, cert.Q);
  cert.residuals.intertwining = intertwining_residual(t, cert.S);
  cert.residuals.m_symmetric = symmetry_residual(cert.M);

  if (cert.residuals.max() > 10.0 * tol.test_tol)
    throw NotCertified("certificate residuals exceed 10 * test_tol");
  return cert;
}

}  // namespace detail

/// Runs the full constructive pipeline on a matrix whose modulus verdict is
/// UECSM and returns a verified certificate. Throws NotCertified when the
/// verdict is not UECSM or a residual bound fails.
inline Certificate symmetrize(const Matrix& t, const Tolerances& tol = {}) {
  const SpectralPair sp = spectral_pair(t, tol);
  const ModulusReport rep = modulus_report_from_gram(sp.gram, sp.min_rel_gap, tol);
  if (rep.verdict != Verdict::UECSM)
    throw NotCertified(std::string("symmetrize: modulus verdict is ") + to_string(rep.verdict));
  return detail::certify_from_pair(t, sp, tol);
}

/// Recomputes every certificate residual from scratch and returns the worst
/// one. Pure measurement: no thresholds, no exceptions beyond shape checks.
inline double verify_certificate(const Matrix& t, const Certificate& cert) {
  if (!t.square() || cert.Q.rows() != t.rows() || cert.S.rows() != t.rows() ||
      cert.M.rows() != t.rows() || cert.alphas.size() != t.rows())
    throw DimensionMismatch("verify_certificate: shapes disagree");

  double r = unitarity_residual(cert.Q);
  r = std::max(r, symmetry_residual(cert.M));
  r = std::max(r, max_abs(cert.M - adjoint(cert.Q) * t * cert.Q));
  r = std::max(r, symmetry_residual(cert.S));
  r = std::max(r, unitarity_residual(cert.S));
  r = std::max(r, intertwining_residual(t, cert.S));
  r = std::max(r, fixed_point_residual(cert.S, cert.Q));
  for (Complex a : cert.alphas) r = std::max(r, std::abs(std::abs(a) - 1.0));
  return r;
}

}  // namespace uecsm
