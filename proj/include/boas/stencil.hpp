#pragma once

#include <cstdint>
#include <vector>

#include "boas/sinc_kernel.hpp"

namespace boas {

/// A finite linear functional on a trajectory: sum_i weights[i] * e^{offsets[i] D} v.
struct Stencil {
  std::vector<double> weights;
  std::vector<double> offsets;

  std::size_t size() const { return weights.size(); }
  /// Same weights, every offset moved by t.
  Stencil shifted(double t) const;
  double mass() const;
};

/// Stencil whose offsets lie on a uniform lattice:
/// offset(i) = step * (first + i + shift).
///
/// Composition of two lattice stencils with the same step is again a lattice
/// stencil (weights convolve, shifts add), which is how operator powers are
/// formed without nesting evaluations.
struct LatticeStencil {
  double step = 1.0;
  double shift = 0.0;
  std::int64_t first = 0;
  std::vector<double> weights;

  Stencil materialize() const;
};

LatticeStencil lattice_stencil(const CoefficientTable& table);

/// Throws InvalidArgument if the steps differ.
LatticeStencil compose(const LatticeStencil& a, const LatticeStencil& b);

/// a composed with itself `times` times (times >= 1).
LatticeStencil power(const LatticeStencil& a, int times);

}  // namespace boas
