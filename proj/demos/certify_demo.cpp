// Builds a certificate for a small lower-triangular matrix and prints every
// piece of it, then re-checks the certificate from scratch.

#include <cstdio>

#include "uecsm/uecsm.hpp"

using namespace uecsm;

static void print(const char* name, const Matrix& m) {
  std::printf("%s =\n", name);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      std::printf("  %9.6f%+9.6fi", m(i, j).real(), m(i, j).imag());
    std::printf("\n");
  }
}

int main() {
  const Matrix t = Matrix::from_rows({{0, 0, 0}, {1, 2, 0}, {1, 0, 2}});
  print("T", t);

  const ModulusReport report = modulus_test(t);
  std::printf("verdict: %s (min_rel_gap %.3g)\n", to_string(report.verdict), report.min_rel_gap);

  const Certificate cert = symmetrize(t);
  std::printf("alphas:");
  for (Complex a : cert.alphas) std::printf(" %+.3f%+.3fi", a.real(), a.imag());
  std::printf("\n");
  print("S", cert.S);
  print("Q", cert.Q);
  print("M = Q*TQ", cert.M);
  std::printf("worst certificate residual: %.3e\n", cert.residuals.max());
  std::printf("independent re-check:       %.3e\n", verify_certificate(t, cert));
  return 0;
}
