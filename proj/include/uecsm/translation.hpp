#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "uecsm/certificate.hpp"
#include "uecsm/complex_matrix.hpp"
#include "uecsm/modulus_test.hpp"

namespace uecsm {

struct ShiftAttempt {
  Complex shift;
  double min_rel_gap;
};

/// Outcome of the translation trick. `report` is INAPPLICABLE only when every
/// attempted shift left the spectrum degenerate; otherwise `shift` is the
/// first schedule entry whose shifted spectrum had distinct values, and the
/// verdict transfers to the original matrix because membership in the unitary
/// orbit of the complex symmetric matrices is invariant under X -> X + cI.
struct TranslationResult {
  Complex shift = 0.0;
  ModulusReport report;
  std::vector<ShiftAttempt> attempts;
};

/// k-th entry (k >= 1) of the deterministic shift schedule, before scaling:
/// the nonzero points of the first-quadrant integer lattice enumerated as
/// 1, i, 1+i, 2, 2i, 1+2i, 2+i, 2+2i, 3, 3i, ...
inline Complex shift_schedule_entry(std::size_t k) {
  for (std::size_t r = 1;; ++r) {
    std::size_t count = 2 * r + 1;  // points with max coordinate == r
    if (k > count) {
      k -= count;
      continue;
    }
    if (k == 1) return Complex(double(r), 0.0);
    if (k == 2) return Complex(0.0, double(r));
    if (k == count) return Complex(double(r), double(r));
    const std::size_t m = (k - 1) / 2;  // 1..r-1
    return (k % 2 == 1) ? Complex(double(m), double(r)) : Complex(double(r), double(m));
  }
}

/// Applies the modulus test to T, then to T + cI along the shift schedule
/// (scaled by ||T||_max) until the shifted spectrum has distinct singular
/// values or max_attempts nonzero shifts are exhausted. Exhaustion is reported
/// honestly as INAPPLICABLE; the attempt log keeps every (shift, gap) pair.
inline TranslationResult translate_and_test(const Matrix& t, const Tolerances& tol = {},
                                            std::size_t max_attempts = 16) {
  if (!t.square()) throw DimensionMismatch("translate_and_test: matrix not square");
  const double scale = max_abs(t) > 0.0 ? max_abs(t) : 1.0;

  TranslationResult result;
  std::optional<TranslationResult> best;  // the attempt with the widest gap so far

  for (std::size_t k = 0; k <= max_attempts; ++k) {
    const Complex c = (k == 0) ? Complex(0.0) : scale * shift_schedule_entry(k);
    const ModulusReport rep = modulus_test(add_scaled_identity(t, c), tol);
    result.attempts.push_back({c, rep.min_rel_gap});
    if (rep.verdict != Verdict::INAPPLICABLE) {
      result.shift = c;
      result.report = rep;
      return result;
    }
    if (!best || rep.min_rel_gap > best->report.min_rel_gap) {
      best = TranslationResult{c, rep, {}};
    }
  }
  result.shift = best->shift;
  result.report = best->report;
  return result;
}

/// A translation run plus, when the verdict is UECSM, a certificate valid for
/// the original matrix.
struct CertifiedRun {
  TranslationResult translation;
  std::optional<Certificate> certificate;
};

/// Certification through the translation trick. The conjugation C built for
/// T + cI satisfies T + cI = C(T + cI)*C, which is equivalent to T = CT*C,
/// so S and Q carry over to T as they are and M = Q*TQ = Q*(T + cI)Q - cI.
/// All certificate residuals are therefore measured against the original T.
inline CertifiedRun certify_with_translation(const Matrix& t, const Tolerances& tol = {},
                                             std::size_t max_attempts = 16) {
  CertifiedRun run;
  run.translation = translate_and_test(t, tol, max_attempts);
  if (run.translation.report.verdict == Verdict::UECSM) {
    const Matrix shifted = add_scaled_identity(t, run.translation.shift);
    run.certificate = detail::certify_from_pair(t, spectral_pair(shifted, tol), tol);
  }
  return run;
}

}  // namespace uecsm
