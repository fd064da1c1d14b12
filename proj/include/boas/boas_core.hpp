#pragma once

// Boas-type operators over an arbitrary one-parameter isometry group.
//
// Every operator here is a finite stencil applied along the group orbit of a
// vector: the truncated Boas series B^(r)(sigma, N), its trajectory version,
// r-fold powers of B^(1), the Q operator built from divided differences, the
// smoothing integral R_h^sigma and the probe-grid modulus of continuity.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>

#include "boas/errors.hpp"
#include "boas/group.hpp"
#include "boas/sinc_kernel.hpp"
#include "boas/stencil.hpp"

namespace boas {

template <class V>
struct BoasResult {
  V value;
  /// Absolute weight mass left out by truncation.
  double tail_mass = 0.0;
  /// tail_mass scaled by the norm of the input: bounds the truncation error.
  double tail_bound = 0.0;
};

/// Throws CertificateError unless G certifies v at a type <= sigma.
template <OneParameterGroup G>
void require_certificate(const G& g, const typename G::vector_type& v, double sigma) {
  const std::optional<BernsteinCertificate> cert = g.certificate(v);
  if (!cert) {
    throw CertificateError(std::string(g.name()) +
                           ": vector has no Bernstein certificate; the Boas formula "
                           "only holds on a Bernstein space");
  }
  if (cert->sigma > sigma * (1.0 + kCertificateTolerance)) {
    throw CertificateError(std::string(g.name()) + ": certified type " +
                           std::to_string(cert->sigma) + " exceeds bandwidth " +
                           std::to_string(sigma));
  }
}

/// sum_k weight(k) e^{offset(k) D} v, approximating D^r v.
template <OneParameterGroup G>
BoasResult<typename G::vector_type> boas_apply(const G& g, const typename G::vector_type& v,
                                               const CoefficientTable& table) {
  require_certificate(g, v, table.bandwidth());
  const Stencil s = lattice_stencil(table).materialize();
  const double tail = tail_mass(table);
  return {superpose(g, s, v), tail, tail * g.norm(v)};
}

/// sum_k weight(k) e^{(t + offset(k)) D} v, approximating e^{tD} D^r v.
template <OneParameterGroup G>
BoasResult<typename G::vector_type> trajectory_derivative(const G& g,
                                                          const typename G::vector_type& v,
                                                          const CoefficientTable& table,
                                                          double t) {
  require_certificate(g, v, table.bandwidth());
  const Stencil s = lattice_stencil(table).materialize().shifted(t);
  const double tail = tail_mass(table);
  return {superpose(g, s, v), tail, tail * g.norm(v)};
}

/// B(sigma, N) composed r times, using the group law to merge the r nested
/// sums into one stencil.
template <OneParameterGroup G>
BoasResult<typename G::vector_type> boas_power(const G& g, const typename G::vector_type& v,
                                               double sigma, std::int64_t half_width, int r) {
  if (r < 1) throw InvalidArgument("boas_power: r must be >= 1");
  const CoefficientTable first = build_table(1, sigma, half_width);
  require_certificate(g, v, sigma);
  const Stencil s = power(lattice_stencil(first), r).materialize();
  // D^r - B_N^r = sum_j B_N^j (D - B_N) D^{r-1-j} on B_sigma.
  const double tail1 = tail_mass(first);
  const double tail = r * std::pow(sigma, r - 1) * tail1;
  return {superpose(g, s, v), tail, tail * g.norm(v)};
}

/// Coefficients of the truncated Q operator: a stencil over k != 0, the
/// coefficient of v itself, and the coefficient of the auxiliary Dv.
struct QStencil {
  Stencil translates;
  double identity_weight = 0.0;
  double derivative_weight = 0.0;
  /// sum_{|k| > N} |translate weight|, bounding the dropped terms.
  double tail_mass = 0.0;
};

/// Truncated trajectory Q formula at parameter t, order n >= 1.
QStencil q_stencil(int n, double sigma, std::int64_t half_width, double t = 0.0);

namespace detail {

template <OneParameterGroup G>
BoasResult<typename G::vector_type> q_eval(const G& g, const typename G::vector_type& v,
                                           const QStencil& qs,
                                           const std::optional<typename G::vector_type>& dv,
                                           int n) {
  using V = typename G::vector_type;
  V value = superpose(g, qs.translates, v);
  if (qs.identity_weight != 0.0) value = value + qs.identity_weight * v;
  if (qs.derivative_weight != 0.0) {
    if (!dv) {
      throw MissingAuxiliaryError("q_apply: order " + std::to_string(n) +
                                  " needs the first derivative Dv for the k = 0 term");
    }
    if (qs.translates.size() == 0 && qs.identity_weight == 0.0 && qs.derivative_weight == 1.0) {
      value = *dv;
    } else {
      value = value + qs.derivative_weight * (*dv);
    }
  }
  // |e^{sD}v - v| <= 2|v| for every dropped divided difference
  return {value, qs.tail_mass, 2.0 * qs.tail_mass * g.norm(v)};
}

}  // namespace detail

/// Q_D^n(sigma, N) v. For odd n the k = 0 term needs Dv, supplied through
/// `first_derivative`; without it MissingAuxiliaryError is thrown.
template <OneParameterGroup G>
BoasResult<typename G::vector_type> q_apply(
    const G& g, const typename G::vector_type& v, int n, double sigma, std::int64_t half_width,
    const std::optional<typename G::vector_type>& first_derivative = std::nullopt) {
  require_certificate(g, v, sigma);
  return detail::q_eval(g, v, q_stencil(n, sigma, half_width, 0.0), first_derivative, n);
}

/// As q_apply, with Dv computed by the order-1 Boas series when needed.
template <OneParameterGroup G>
BoasResult<typename G::vector_type> q_apply_with_boas_auxiliary(const G& g,
                                                                const typename G::vector_type& v,
                                                                int n, double sigma,
                                                                std::int64_t half_width) {
  require_certificate(g, v, sigma);
  const QStencil qs = q_stencil(n, sigma, half_width, 0.0);
  std::optional<typename G::vector_type> dv;
  if (qs.derivative_weight != 0.0) dv = boas_apply(g, v, build_table(1, sigma, half_width)).value;
  return detail::q_eval(g, v, qs, dv, n);
}

/// Trajectory form of Q: approximates e^{tD} D^n v.
template <OneParameterGroup G>
BoasResult<typename G::vector_type> q_trajectory(
    const G& g, const typename G::vector_type& v, int n, double sigma, std::int64_t half_width,
    double t, const std::optional<typename G::vector_type>& first_derivative = std::nullopt) {
  require_certificate(g, v, sigma);
  return detail::q_eval(g, v, q_stencil(n, sigma, half_width, t), first_derivative, n);
}

// ---------------------------------------------------------------------------
// Smoothing operator and modulus of continuity

/// Quadrature description of h(t) = a (sin(t/4)/t)^4 on [-T, T].
struct SmoothingKernelSpec {
  double normalizer = 96.0 / std::numbers::pi;
  double truncation = 0.0;
  int node_count = 0;
  /// Requested bound on the kernel mass outside [-T, T].
  double tail_tolerance = 0.0;
};

/// Fewest Gauss-Legendre nodes per quadrature panel that smooth() accepts.
inline constexpr int kMinNodesPerPanel = 6;

/// a = (int (sin(t/4)/t)^4 dt)^{-1} = 96 / pi.
double smoothing_normalizer();
/// C_h = int h(t)(1 + |t|) dt = 1 + 12 ln 2 / pi.
double smoothing_constant();
/// h(t) = a (sin(t/4)/t)^4.
double smoothing_kernel(double t);
/// int_{|t| > T} h <= 2a / (3 T^3).
double smoothing_tail_bound(double truncation);

/// Smallest T whose tail bound is <= tail_tol, with `nodes_per_panel`
/// Gauss-Legendre nodes on each panel of width <= pi.
SmoothingKernelSpec make_smoothing_spec(double tail_tol, int nodes_per_panel = 12);

/// Quadrature weights h(t_i) w_i at offsets t_i / sigma. Throws
/// QuadratureError when the spec cannot meet its own tail tolerance.
Stencil smoothing_stencil(const SmoothingKernelSpec& spec, double sigma);

template <class V>
struct SmoothResult {
  V value;
  /// Kernel mass not captured by the quadrature (1 - sum of weights).
  double missing_mass = 0.0;
};

/// Quadrature approximation of int h(t) e^{(t/sigma) D} v dt. The result
/// carries a Bernstein certificate at sigma when the vector type can hold one.
template <OneParameterGroup G>
SmoothResult<typename G::vector_type> smooth(const G& g, const typename G::vector_type& v,
                                             double sigma, const SmoothingKernelSpec& spec) {
  if (!(sigma > 0.0)) throw InvalidArgument("smooth: sigma must be positive");
  const Stencil s = smoothing_stencil(spec, sigma);
  auto value = superpose(g, s, v);
  if constexpr (requires { value.with_certificate(BernsteinCertificate{sigma}); }) {
    value = value.with_certificate(BernsteinCertificate{sigma});
  }
  return {value, 1.0 - s.mass()};
}

/// A posteriori quadrature slack of smooth(): the distance to the same
/// integral with twice the nodes per panel, plus the missing kernel mass and
/// the requested tail tolerance, both scaled by norm(v).
template <OneParameterGroup G>
double smoothing_slack(const G& g, const typename G::vector_type& v, double sigma,
                       const SmoothingKernelSpec& spec,
                       const SmoothResult<typename G::vector_type>& coarse) {
  SmoothingKernelSpec fine = spec;
  fine.node_count = 2 * spec.node_count;
  const auto refined = smooth(g, v, sigma, fine);
  return g.norm(coarse.value - refined.value) +
         (std::fabs(coarse.missing_mass) + spec.tail_tolerance) * g.norm(v);
}

/// max over tau in {s j / M : |j| <= M}, M = probes / 2, of |v - e^{tau D} v|.
/// A lower bound for the modulus of continuity; grids for s and 2s nest when
/// the probe count doubles.
template <OneParameterGroup G>
double modulus(const G& g, const typename G::vector_type& v, double s, int probes) {
  if (probes < 16) throw InvalidArgument("modulus: at least 16 probes required");
  if (!(s >= 0.0)) throw InvalidArgument("modulus: s must be nonnegative");
  if (s == 0.0) return 0.0;
  const int half = probes / 2;
  double best = 0.0;
  for (int j = -half; j <= half; ++j) {
    if (j == 0) continue;
    const double tau = s * static_cast<double>(j) / half;
    best = std::max(best, g.norm(v - g.apply(tau, v)));
  }
  return best;
}

}  // namespace boas
