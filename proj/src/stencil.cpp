#include "boas/stencil.hpp"

#include <cmath>

#include "boas/errors.hpp"

namespace boas {

Stencil Stencil::shifted(double t) const {
  Stencil out = *this;
  if (t == 0.0) return out;
  for (double& o : out.offsets) o += t;
  return out;
}

double Stencil::mass() const {
  long double m = 0.0L;
  for (double w : weights) m += std::fabs(w);
  return static_cast<double>(m);
}

Stencil LatticeStencil::materialize() const {
  Stencil s;
  s.weights = weights;
  s.offsets.resize(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    s.offsets[i] = step * (static_cast<double>(first + static_cast<std::int64_t>(i)) + shift);
  }
  return s;
}

LatticeStencil lattice_stencil(const CoefficientTable& table) {
  LatticeStencil s;
  s.step = table.step();
  s.shift = table.shift();
  s.first = -table.half_width();
  s.weights.reserve(table.entries().size());
  for (const CoefficientEntry& e : table.entries()) s.weights.push_back(e.weight);
  return s;
}

LatticeStencil compose(const LatticeStencil& a, const LatticeStencil& b) {
  if (a.step != b.step) throw InvalidArgument("compose: lattice steps differ");
  LatticeStencil out;
  out.step = a.step;
  out.shift = a.shift + b.shift;
  out.first = a.first + b.first;
  if (a.weights.empty() || b.weights.empty()) return out;
  // Convolution accumulated in long double; index sums are exact.
  std::vector<long double> acc(a.weights.size() + b.weights.size() - 1, 0.0L);
  for (std::size_t i = 0; i < a.weights.size(); ++i) {
    const long double wa = a.weights[i];
    if (wa == 0.0L) continue;
    for (std::size_t j = 0; j < b.weights.size(); ++j) acc[i + j] += wa * b.weights[j];
  }
  out.weights.assign(acc.begin(), acc.end());
  return out;
}

LatticeStencil power(const LatticeStencil& a, int times) {
  if (times < 1) throw InvalidArgument("power: times must be >= 1");
  LatticeStencil out = a;
  for (int i = 1; i < times; ++i) out = compose(out, a);
  return out;
}

}  // namespace boas
