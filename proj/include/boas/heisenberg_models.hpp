#pragma once

// The Heisenberg fields X = d/dx - (y/2) d/dt, Y = d/dy + (x/2) d/dt and
// T = d/dt on R^3 as shear-translation groups, acting on separable fixtures
// f(x, y, t) = g(x) h(y) w(t).

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "boas/boas_core.hpp"
#include "boas/line_models.hpp"

namespace boas {

using Point3 = std::array<double, 3>;

/// A sinc series or a constant.
class Factor {
 public:
  explicit Factor(double constant = 1.0) : constant_(constant) {}
  explicit Factor(SincSeriesSignal signal) : signal_(std::move(signal)) {}

  bool is_constant() const { return !signal_; }
  double operator()(double s) const { return signal_ ? (*signal_)(s) : constant_; }
  double derivative(int r, double s) const;
  /// Exponential type (0 for a constant).
  double band() const { return signal_ ? signal_->band() : 0.0; }
  /// Upper bound on sup |factor|.
  double sup_bound() const { return signal_ ? signal_->sup_bound() : std::fabs(constant_); }
  /// Upper bound on sup |factor'| (Bernstein inequality).
  double derivative_bound() const { return band() * sup_bound(); }
  /// Upper bound on sup |s factor(s)|; nullopt for a nonzero constant.
  std::optional<double> moment_bound() const;

 private:
  std::optional<SincSeriesSignal> signal_;
  double constant_ = 1.0;
};

/// f(x, y, t) = g(x) h(y) w(t).
class HeisenbergFunction {
 public:
  HeisenbergFunction(Factor g, Factor h, Factor w)
      : g_(std::move(g)), h_(std::move(h)), w_(std::move(w)) {}

  const Factor& g() const { return g_; }
  const Factor& h() const { return h_; }
  const Factor& w() const { return w_; }

  double operator()(const Point3& p) const { return g_(p[0]) * h_(p[1]) * w_(p[2]); }
  double dx(const Point3& p) const { return g_.derivative(1, p[0]) * h_(p[1]) * w_(p[2]); }
  double dy(const Point3& p) const { return g_(p[0]) * h_.derivative(1, p[1]) * w_(p[2]); }
  double dt(const Point3& p) const { return g_(p[0]) * h_(p[1]) * w_.derivative(1, p[2]); }
  double sup_bound() const { return g_.sup_bound() * h_.sup_bound() * w_.sup_bound(); }

 private:
  Factor g_;
  Factor h_;
  Factor w_;
};

enum class HeisenbergField { X, Y, T };

HeisenbergField parse_heisenberg_field(const std::string& name);
std::string to_string(HeisenbergField field);

/// X: (x + tau, y, t - y tau / 2); Y: (x, y + tau, t + x tau / 2); T: (x, y, t + tau).
Point3 heisenberg_flow(HeisenbergField field, double tau, const Point3& p);

/// f evaluated at the flowed point.
double heisenberg_action(HeisenbergField field, double tau, const HeisenbergFunction& f,
                         const Point3& p);

/// (Xf)(p), (Yf)(p) or (Tf)(p) from the factor derivatives.
double heisenberg_oracle(HeisenbergField field, const HeisenbergFunction& f, const Point3& p);

/// Type of the orbit trajectory through p: sigma_g + |y| sigma_w / 2 for X,
/// sigma_h + |x| sigma_w / 2 for Y, sigma_w for T.
double point_bandwidth(HeisenbergField field, const HeisenbergFunction& f, const Point3& p);

/// Order-1 truncated Boas series along the orbit through p at the point
/// bandwidth, or at `sigma` when given (CertificateError below the point
/// bandwidth). tail_bound = tail_mass * sup_bound(f).
BoasResult<double> heisenberg_boas_point(HeisenbergField field, const HeisenbergFunction& f,
                                         const Point3& p, std::int64_t half_width,
                                         double sigma = 0.0);

struct CommutatorCheck {
  /// X(Yf)(p) - Y(Xf)(p) with both levels computed by Boas series.
  double value = 0.0;
  /// (Tf)(p).
  double oracle = 0.0;
  /// Outer truncation of each term plus the outer-weighted inner truncation.
  double tail_bound = 0.0;
};

/// Nested Boas commutator [X, Y] f at p. Throws CertificateError when the
/// inner fields produce unbounded orbit trajectories (a constant g or h
/// paired with a non-constant w).
CommutatorCheck heisenberg_commutator(const HeisenbergFunction& f, const Point3& p,
                                      std::int64_t half_width);

}  // namespace boas
