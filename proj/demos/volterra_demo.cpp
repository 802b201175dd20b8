// The integration operator [Tf](x) = int_0^x f on L^2[0,1] in closed form:
// singular values, gram-block conditions, recovered phases, and the complex
// symmetric matrix in the exponential basis e_n = exp(2 pi i n (x - 1/2)).

#include <cstdio>

#include "uecsm/uecsm.hpp"

using namespace uecsm;

int main() {
  std::printf("singular values of T (squares are eigenvalues of T*T):\n ");
  for (std::size_t n = 0; n < 8; ++n) std::printf(" %.6f", std::sqrt(volterra::eigenvalue(n)));
  std::printf("\n");

  const std::size_t block = 12;
  const ModulusReport rep = volterra::modulus_check(block);
  std::printf("gram block N=%zu: verdict %s, residuals %.2e / %.2e\n", block,
              to_string(rep.verdict), rep.max_magnitude_residual, rep.max_cocycle_residual);

  std::printf("phases:");
  for (Complex a : volterra::alpha(block)) std::printf(" %+.0f", a.real());
  std::printf("  (alternating signs)\n");

  const Matrix f = volterra::fourier_matrix(3);
  std::printf("matrix in the exponential basis (n = -3..3), times 2*pi, imaginary parts:\n");
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j)
      std::printf(" %8.4f", 2.0 * volterra::pi * f(i, j).imag());
    std::printf("\n");
  }
  std::printf("symmetry residual: %.2e, central entry: %.2f\n", symmetry_residual(f),
              f(3, 3).real());
  return 0;
}
