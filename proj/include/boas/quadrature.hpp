#pragma once

#include <vector>

namespace boas {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] (Newton iteration on P_n).
QuadratureRule gauss_legendre(int n);

/// Composite Gauss-Legendre on [lo, hi] with `panels` equal panels.
QuadratureRule composite_gauss_legendre(double lo, double hi, int panels, int nodes_per_panel);

}  // namespace boas
