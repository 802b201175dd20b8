#include "uecsm/modulus_test.hpp"

#include <gtest/gtest.h>

#include "support/test_util.hpp"

using namespace uecsm;
namespace tu = uecsm::testing;

namespace {

const Matrix kEx33 = Matrix::from_rows({{0, 0, 0}, {1, 2, 0}, {1, 0, 2}});
const Matrix kEx32 = Matrix::from_rows({{0, 1, 0}, {0, 0, 2}, {0, 0, 0}});
const Matrix kTable1Yes =
    Matrix::from_rows({{1, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}});
const Matrix kTable1No =
    Matrix::from_rows({{1, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 1, 0}});
const Matrix kPuzzleYes =
    Matrix::from_rows({{5, 1, 1, 3}, {1, 1, 1, -1}, {1, -3, 5, -1}, {-1, -1, -1, 1}});
const Matrix kPuzzleNo =
    Matrix::from_rows({{5, -1, 3, 3}, {1, 3, -1, -1}, {1, -1, 3, -1}, {-1, 1, -3, 1}});

}  // namespace

TEST(SpectralPair, NilpotentWeightedShift) {
  // T e1 = 0, T e2 = a e1, T e3 = b e2 with a = 1, b = 2: the u and v bases
  // are permutations of the standard basis.
  const SpectralPair sp = spectral_pair(kEx32);
  ASSERT_EQ(sp.eigenvalues.size(), 3u);
  EXPECT_NEAR(sp.eigenvalues[0], 0.0, 1e-12);
  EXPECT_NEAR(sp.eigenvalues[1], 1.0, 1e-12);
  EXPECT_NEAR(sp.eigenvalues[2], 4.0, 1e-12);
  // ascending order: u columns are e1, e2, e3 and v columns are e3, e1, e2
  EXPECT_NEAR(std::abs(sp.u(0, 0)), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(sp.u(1, 1)), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(sp.u(2, 2)), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(sp.v(2, 0)), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(sp.v(0, 1)), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(sp.v(1, 2)), 1.0, 1e-12);
}

TEST(SpectralPair, PositiveDiagonal) {
  Matrix t(3, 3);
  t(0, 0) = 1.0;
  t(1, 1) = 2.0;
  t(2, 2) = 3.0;
  const SpectralPair sp = spectral_pair(t);
  EXPECT_NEAR(sp.eigenvalues[0], 1.0, 1e-13);
  EXPECT_NEAR(sp.eigenvalues[1], 4.0, 1e-13);
  EXPECT_NEAR(sp.eigenvalues[2], 9.0, 1e-13);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_NEAR(std::abs(sp.u(k, k)), 1.0, 1e-13);
    EXPECT_NEAR(std::abs(sp.v(k, k)), 1.0, 1e-13);
  }
}

TEST(SpectralPair, UnitaryInputIsDegenerate) {
  tu::Rng rng(31);
  const Matrix w = tu::random_unitary(4, rng);
  const SpectralPair sp = spectral_pair(w);
  for (double lam : sp.eigenvalues) EXPECT_NEAR(lam, 1.0, 1e-12);
  EXPECT_LE(sp.min_rel_gap, 1e-12);
  EXPECT_EQ(modulus_test(w).verdict, Verdict::INAPPLICABLE);
}

TEST(SpectralPair, Invariants) {
  tu::Rng rng(32);
  const Tolerances tol;
  const Matrix t = tu::random_matrix(5, rng);
  const SpectralPair sp = spectral_pair(t, tol);
  EXPECT_LE(unitarity_residual(sp.u), tol.eig_residual);
  EXPECT_LE(unitarity_residual(sp.v), tol.eig_residual);
  EXPECT_LE(max_abs(sp.gram - adjoint(sp.v) * sp.u), tol.eig_residual);
  for (double lam : sp.eigenvalues) EXPECT_GE(lam, 0.0);
}

TEST(ModulusTest, GoldenVerdicts) {
  EXPECT_EQ(modulus_test(kEx33).verdict, Verdict::UECSM);
  EXPECT_EQ(modulus_test(kEx32).verdict, Verdict::NOT_UECSM);
  EXPECT_EQ(modulus_test(kTable1Yes).verdict, Verdict::UECSM);
  EXPECT_EQ(modulus_test(kTable1No).verdict, Verdict::NOT_UECSM);
  EXPECT_EQ(modulus_test(kPuzzleYes).verdict, Verdict::UECSM);
  EXPECT_EQ(modulus_test(kPuzzleNo).verdict, Verdict::NOT_UECSM);
}

TEST(ModulusTest, NilpotentFailureIsTheFirstPair) {
  // the magnitude condition fails with <u1,v2> = 0 against <u2,v1> = 1
  const ModulusReport rep = modulus_test(kEx32);
  EXPECT_EQ(rep.verdict, Verdict::NOT_UECSM);
  EXPECT_NEAR(rep.max_magnitude_residual, 1.0, 1e-10);
  ASSERT_TRUE(rep.worst_pair.has_value());
  EXPECT_EQ(*rep.worst_pair, (std::pair<std::size_t, std::size_t>{1, 2}));
}

TEST(ModulusTest, OneByOneIsAlwaysUECSM) {
  const ModulusReport rep = modulus_test(Matrix::from_rows({{Complex(2.0, 3.0)}}));
  EXPECT_EQ(rep.verdict, Verdict::UECSM);
  EXPECT_EQ(rep.min_rel_gap, 1.0);
  EXPECT_FALSE(rep.worst_pair.has_value());
  EXPECT_FALSE(rep.worst_triple.has_value());
}

TEST(ModulusTest, GaugeInvariance) {
  // multiplying u_j or v_i by unimodular phases must not move the residuals:
  // each index appears once on each side of both conditions
  tu::Rng rng(33);
  const SpectralPair sp = spectral_pair(tu::random_matrix(5, rng));
  const ModulusReport base = modulus_report_from_gram(sp.gram, sp.min_rel_gap);

  std::uniform_real_distribution<double> angle(0.0, 6.28);
  Matrix phased = sp.gram;
  for (std::size_t j = 0; j < 5; ++j) {
    const Complex cu = std::polar(1.0, angle(rng));
    const Complex cv = std::polar(1.0, angle(rng));
    for (std::size_t i = 0; i < 5; ++i) {
      phased(i, j) *= cu;             // column phase: u_j -> cu * u_j
      phased(j, i) *= std::conj(cv);  // row phase: v_j -> cv * v_j
    }
  }
  const ModulusReport moved = modulus_report_from_gram(phased, sp.min_rel_gap);
  EXPECT_EQ(moved.verdict, base.verdict);
  EXPECT_NEAR(moved.max_magnitude_residual, base.max_magnitude_residual, 1e-14);
  EXPECT_NEAR(moved.max_cocycle_residual, base.max_cocycle_residual, 1e-14);
}

TEST(ModulusTest, Every2x2WithDistinctSingularValuesIsUECSM) {
  tu::Rng rng(34);
  int tested = 0;
  int skipped = 0;
  for (int rep = 0; rep < 1200 && tested < 1000; ++rep) {
    const Matrix t = tu::random_matrix(2, rng);
    const ModulusReport r = modulus_test(t);
    if (r.min_rel_gap <= 1e-6) {
      ++skipped;
      continue;
    }
    ++tested;
    EXPECT_EQ(r.verdict, Verdict::UECSM) << "failed at draw " << rep;
  }
  EXPECT_GE(tested, 1000);
  EXPECT_LE(skipped, 200);
}

TEST(ModulusTest, UnitaryOrbitInvariance) {
  tu::Rng rng(35);
  for (const Matrix* t : {&kEx33, &kEx32, &kTable1Yes, &kTable1No}) {
    const Verdict expected = modulus_test(*t).verdict;
    for (int rep = 0; rep < 3; ++rep) {
      const Matrix w = tu::random_unitary(t->rows(), rng);
      EXPECT_EQ(modulus_test(tu::conjugate_by(w, *t)).verdict, expected);
    }
  }
}

TEST(ModulusTest, TranslationConsistency) {
  for (const Matrix* t : {&kEx33, &kEx32, &kPuzzleYes, &kPuzzleNo}) {
    const ModulusReport base = modulus_test(*t);
    ASSERT_NE(base.verdict, Verdict::INAPPLICABLE);
    for (Complex c : {Complex(1.0), Complex(0.0, 1.0), Complex(0.5, -0.3)}) {
      const ModulusReport shifted = modulus_test(add_scaled_identity(*t, c));
      if (shifted.verdict != Verdict::INAPPLICABLE) {
        EXPECT_EQ(shifted.verdict, base.verdict);
      }
    }
  }
}

TEST(ModulusTest, UpperPairsEqualAllOrderedPairs) {
  // | |G(i,j)| - |G(j,i)| | is symmetric in (i,j) and zero on the diagonal,
  // so scanning i < j only loses nothing
  tu::Rng rng(36);
  const SpectralPair sp = spectral_pair(tu::random_matrix(6, rng));
  const ModulusReport rep = modulus_report_from_gram(sp.gram, sp.min_rel_gap);
  double all_pairs = 0.0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      all_pairs = std::max(
          all_pairs, std::abs(std::abs(sp.gram(i, j)) - std::abs(sp.gram(j, i))));
  EXPECT_DOUBLE_EQ(rep.max_magnitude_residual, all_pairs);
}

TEST(ModulusTest, VerdictMatchesReportInvariant) {
  tu::Rng rng(37);
  const Tolerances tol;
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = 2 + rep % 5;
    const ModulusReport r = modulus_test(tu::random_matrix(n, rng), tol);
    const bool applicable = r.min_rel_gap > tol.gap_rel;
    const bool passes = r.max_magnitude_residual <= tol.test_tol &&
                        r.max_cocycle_residual <= tol.test_tol;
    if (!applicable)
      EXPECT_EQ(r.verdict, Verdict::INAPPLICABLE);
    else
      EXPECT_EQ(r.verdict, passes ? Verdict::UECSM : Verdict::NOT_UECSM);
  }
}
