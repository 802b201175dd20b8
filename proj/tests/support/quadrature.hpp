#pragma once

// Composite Gauss-Legendre quadrature, used only as an independent oracle for
// the closed-form integrals; never part of the library path.

#include <cmath>
#include <cstddef>
#include <vector>

namespace uecsm::testing {

class GaussLegendre {
 public:
  explicit GaussLegendre(int order = 24) : nodes_(order), weights_(order) {
    // Roots of the Legendre polynomial by Newton iteration from the usual
    // Chebyshev-like initial guesses; symmetric pairs filled together.
    const int k = order;
    for (int i = 0; i < (k + 1) / 2; ++i) {
      double x = std::cos(M_PI * (i + 0.75) / (k + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int j = 2; j <= k; ++j) {
          const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
          p0 = p1;
          p1 = p2;
        }
        dp = k * (x * p1 - p0) / (x * x - 1.0);
        const double dx = -p1 / dp;
        x += dx;
        if (std::abs(dx) < 1e-15) break;
      }
      const double w = 2.0 / ((1.0 - x * x) * dp * dp);
      nodes_[i] = -x;
      weights_[i] = w;
      nodes_[k - 1 - i] = x;
      weights_[k - 1 - i] = w;
    }
  }

  /// Integral of f over [a, b] split into `panels` equal panels.
  template <class F>
  auto integrate(F&& f, double a, double b, int panels = 8) const {
    using R = decltype(f(a));
    R total{};
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
      const double lo = a + p * h;
      for (std::size_t k = 0; k < nodes_.size(); ++k)
        total += R(0.5 * h * weights_[k]) * f(lo + 0.5 * h * (nodes_[k] + 1.0));
    }
    return total;
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

}  // namespace uecsm::testing
