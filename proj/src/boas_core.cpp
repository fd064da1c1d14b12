#include "boas/boas_core.hpp"

#include <cmath>
#include <numbers>

#include "boas/quadrature.hpp"

namespace boas {

QStencil q_stencil(int n, double sigma, std::int64_t half_width, double t) {
  if (n < 1) throw InvalidArgument("q_stencil: order n must be >= 1");
  if (n - 1 > kMaxSincDerivativeOrder) {
    throw UnsupportedOrderError("q_stencil: order " + std::to_string(n) + " exceeds " +
                                std::to_string(kMaxSincDerivativeOrder + 1));
  }
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw InvalidArgument("q_stencil: sigma must be positive and finite");
  }
  if (half_width < 1) throw InvalidArgument("q_stencil: N must be >= 1");

  const double pi = std::numbers::pi;
  const double h = pi / sigma;
  const double scale = n * std::pow(sigma / pi, n - 1);
  if (!std::isfinite(scale)) throw RangeError("q_stencil: scale factor overflows");

  QStencil qs;
  long double identity = 0.0L;
  qs.translates.weights.reserve(static_cast<std::size_t>(2 * half_width + 1));
  qs.translates.offsets.reserve(static_cast<std::size_t>(2 * half_width + 1));
  for (std::int64_t k = -half_width; k <= half_width; ++k) {
    if (k == 0) continue;
    const double kd = static_cast<double>(k);
    const double c = scale * sinc_derivative(n - 1, -kd);
    const double w = c / (kd * h);
    if (w == 0.0) continue;
    qs.translates.weights.push_back(w);
    qs.translates.offsets.push_back(t + kd * h);
    identity -= w;
  }
  const double id = static_cast<double>(identity);
  if (t == 0.0) {
    qs.identity_weight = id;
  } else if (id != 0.0) {
    qs.translates.weights.push_back(id);
    qs.translates.offsets.push_back(t);
  }
  qs.derivative_weight = scale * sinc_derivative(n - 1, 0.0);

  // |sinc^(j)(k)| <= 2 pi^(j-1) / |k| for j >= 1, so |w_k| <= 2 n sigma^n / (pi k)^2.
  if (n > 1) {
    qs.tail_mass = 4.0 * n * std::pow(sigma, n) / (pi * pi * static_cast<double>(half_width));
  }
  return qs;
}

double smoothing_normalizer() { return 96.0 / std::numbers::pi; }

double smoothing_constant() { return 1.0 + 12.0 * std::numbers::ln2 / std::numbers::pi; }

double smoothing_kernel(double t) {
  const double at = std::fabs(t);
  double q;
  if (at < 1e-4) {
    q = 0.25 * (1.0 - t * t / 96.0);
  } else {
    q = std::sin(0.25 * t) / t;
  }
  const double q2 = q * q;
  return smoothing_normalizer() * q2 * q2;
}

double smoothing_tail_bound(double truncation) {
  if (!(truncation > 0.0)) return 1.0;
  return 2.0 * smoothing_normalizer() / (3.0 * truncation * truncation * truncation);
}

namespace {

int panel_count(double truncation) {
  return static_cast<int>(std::ceil(2.0 * truncation / std::numbers::pi));
}

}  // namespace

SmoothingKernelSpec make_smoothing_spec(double tail_tol, int nodes_per_panel) {
  if (!(tail_tol > 0.0) || tail_tol >= 1.0) {
    throw InvalidArgument("make_smoothing_spec: tail tolerance must lie in (0, 1)");
  }
  if (nodes_per_panel < 1) throw InvalidArgument("make_smoothing_spec: nodes_per_panel must be >= 1");
  SmoothingKernelSpec spec;
  spec.tail_tolerance = tail_tol;
  spec.truncation = std::cbrt(2.0 * spec.normalizer / (3.0 * tail_tol));
  const double panels = std::ceil(2.0 * spec.truncation / std::numbers::pi);
  if (panels * nodes_per_panel > 1e8) {
    throw QuadratureError("make_smoothing_spec: tail tolerance needs more than 1e8 nodes");
  }
  spec.node_count = static_cast<int>(panels) * nodes_per_panel;
  return spec;
}

Stencil smoothing_stencil(const SmoothingKernelSpec& spec, double sigma) {
  if (!(sigma > 0.0)) throw InvalidArgument("smoothing_stencil: sigma must be positive");
  if (!(spec.truncation > 0.0) || !std::isfinite(spec.truncation)) {
    throw QuadratureError("smoothing spec: truncation T must be positive and finite");
  }
  if (!(spec.tail_tolerance > 0.0)) {
    throw QuadratureError("smoothing spec: tail tolerance must be positive");
  }
  if (smoothing_tail_bound(spec.truncation) > spec.tail_tolerance * (1.0 + 1e-12)) {
    throw QuadratureError("smoothing spec: truncation T leaves kernel tail " +
                          std::to_string(smoothing_tail_bound(spec.truncation)) +
                          " above tolerance " + std::to_string(spec.tail_tolerance));
  }
  const int panels = panel_count(spec.truncation);
  const int per_panel = spec.node_count / panels;
  if (per_panel < kMinNodesPerPanel) {
    throw QuadratureError("smoothing spec: " + std::to_string(spec.node_count) +
                          " nodes over " + std::to_string(panels) +
                          " panels is below the minimum of " +
                          std::to_string(kMinNodesPerPanel) + " per panel");
  }
  const QuadratureRule rule =
      composite_gauss_legendre(-spec.truncation, spec.truncation, panels, per_panel);
  const double scale = spec.normalizer / smoothing_normalizer();
  Stencil s;
  s.weights.resize(rule.nodes.size());
  s.offsets.resize(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    s.weights[i] = scale * smoothing_kernel(rule.nodes[i]) * rule.weights[i];
    s.offsets[i] = rule.nodes[i] / sigma;
  }
  return s;
}

}  // namespace boas
