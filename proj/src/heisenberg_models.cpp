#include "boas/heisenberg_models.hpp"

#include <cmath>
#include <numbers>

#include "boas/errors.hpp"
#include "boas/sinc_kernel.hpp"

namespace boas {

namespace {

using HeisenbergGroup = PointGroup<Point3, double>;
using HeisenbergVector = Function<Point3, double>;

// Orbit group of a field; the norm is a supplied sup bound, which is all the
// truncation bound needs.
HeisenbergGroup orbit_group(HeisenbergField field, double sup_bound) {
  return HeisenbergGroup(
      "heisenberg-" + to_string(field),
      [field](double tau, const Point3& p) { return heisenberg_flow(field, tau, p); },
      [sup_bound](const HeisenbergVector&) { return sup_bound; });
}

// Order-1 Boas value of `v` along the orbit through p at bandwidth sigma.
BoasResult<double> orbit_boas(HeisenbergField field, const HeisenbergVector& v, double sup_bound,
                              const Point3& p, double sigma, std::int64_t half_width) {
  if (sigma == 0.0) return {0.0, 0.0, 0.0};
  const HeisenbergGroup g = orbit_group(field, sup_bound);
  const auto r = boas_apply(g, v.with_certificate(BernsteinCertificate{sigma}),
                            build_table(1, sigma, half_width));
  return {r.value(p), r.tail_mass, r.tail_bound};
}

}  // namespace

double Factor::derivative(int r, double s) const {
  if (signal_) return signal_->derivative(r, s);
  return r == 0 ? constant_ : 0.0;
}

std::optional<double> Factor::moment_bound() const {
  if (signal_) return signal_->moment_bound();
  if (constant_ == 0.0) return 0.0;
  return std::nullopt;
}

HeisenbergField parse_heisenberg_field(const std::string& name) {
  if (name == "X") return HeisenbergField::X;
  if (name == "Y") return HeisenbergField::Y;
  if (name == "T") return HeisenbergField::T;
  throw InvalidArgument("unknown Heisenberg field '" + name + "' (expected X, Y or T)");
}

std::string to_string(HeisenbergField field) {
  switch (field) {
    case HeisenbergField::X: return "X";
    case HeisenbergField::Y: return "Y";
    case HeisenbergField::T: return "T";
  }
  return "?";
}

Point3 heisenberg_flow(HeisenbergField field, double tau, const Point3& p) {
  if (tau == 0.0) return p;
  switch (field) {
    case HeisenbergField::X: return {p[0] + tau, p[1], p[2] - 0.5 * p[1] * tau};
    case HeisenbergField::Y: return {p[0], p[1] + tau, p[2] + 0.5 * p[0] * tau};
    case HeisenbergField::T: return {p[0], p[1], p[2] + tau};
  }
  return p;
}

double heisenberg_action(HeisenbergField field, double tau, const HeisenbergFunction& f,
                         const Point3& p) {
  return f(heisenberg_flow(field, tau, p));
}

double heisenberg_oracle(HeisenbergField field, const HeisenbergFunction& f, const Point3& p) {
  switch (field) {
    case HeisenbergField::X: return f.dx(p) - 0.5 * p[1] * f.dt(p);
    case HeisenbergField::Y: return f.dy(p) + 0.5 * p[0] * f.dt(p);
    case HeisenbergField::T: return f.dt(p);
  }
  return 0.0;
}

double point_bandwidth(HeisenbergField field, const HeisenbergFunction& f, const Point3& p) {
  switch (field) {
    case HeisenbergField::X: return f.g().band() + std::fabs(p[1]) * f.w().band() / 2.0;
    case HeisenbergField::Y: return f.h().band() + std::fabs(p[0]) * f.w().band() / 2.0;
    case HeisenbergField::T: return f.w().band();
  }
  return 0.0;
}

BoasResult<double> heisenberg_boas_point(HeisenbergField field, const HeisenbergFunction& f,
                                         const Point3& p, std::int64_t half_width,
                                         double sigma) {
  auto shared = std::make_shared<const HeisenbergFunction>(f);
  const double local = point_bandwidth(field, f, p);
  const HeisenbergVector v([shared](const Point3& q) { return (*shared)(q); },
                           BernsteinCertificate{local});
  if (sigma == 0.0) return orbit_boas(field, v, f.sup_bound(), p, local, half_width);
  const HeisenbergGroup g = orbit_group(field, f.sup_bound());
  const auto r = boas_apply(g, v, build_table(1, sigma, half_width));
  return {r.value(p), r.tail_mass, r.tail_bound};
}

CommutatorCheck heisenberg_commutator(const HeisenbergFunction& f, const Point3& p,
                                      std::int64_t half_width) {
  const bool w_moves = !f.w().is_constant();
  const auto mg = f.g().moment_bound();
  const auto mh = f.h().moment_bound();
  if (w_moves && (!mg || !mh)) {
    throw CertificateError(
        "heisenberg_commutator: with a non-constant w, the factors g and h must be sinc "
        "series so that x g(x) and y h(y) stay bounded along the orbits");
  }
  const double sup_f = f.sup_bound();
  const double sup_w1 = f.w().derivative_bound();
  // sup bounds of Yf along X orbits and of Xf along Y orbits
  const double sup_yf = f.g().sup_bound() * f.h().derivative_bound() * f.w().sup_bound() +
                        (w_moves ? 0.5 * *mg * f.h().sup_bound() * sup_w1 : 0.0);
  const double sup_xf = f.g().derivative_bound() * f.h().sup_bound() * f.w().sup_bound() +
                        (w_moves ? 0.5 * *mh * f.g().sup_bound() * sup_w1 : 0.0);
  const double unit_tail = tail_mass(build_table(1, 1.0, half_width));

  auto shared = std::make_shared<const HeisenbergFunction>(f);
  const HeisenbergVector yf([shared, half_width](const Point3& q) {
    return heisenberg_boas_point(HeisenbergField::Y, *shared, q, half_width).value;
  });
  const HeisenbergVector xf([shared, half_width](const Point3& q) {
    return heisenberg_boas_point(HeisenbergField::X, *shared, q, half_width).value;
  });

  const double sx = point_bandwidth(HeisenbergField::X, f, p);
  const double sy = point_bandwidth(HeisenbergField::Y, f, p);
  const auto xy = orbit_boas(HeisenbergField::X, yf, sup_yf, p, sx, half_width);
  const auto yx = orbit_boas(HeisenbergField::Y, xf, sup_xf, p, sy, half_width);

  // the order-1 tail mass is linear in sigma, so the inner bound at q is
  // unit_tail * sigma(q) * sup |f|
  double inner = 0.0;
  if (sx > 0.0) {
    for (const CoefficientEntry& e : build_table(1, sx, half_width).entries()) {
      const double sq = f.h().band() + std::fabs(p[0] + e.offset) * f.w().band() / 2.0;
      inner += std::fabs(e.weight) * unit_tail * sq * sup_f;
    }
  }
  if (sy > 0.0) {
    for (const CoefficientEntry& e : build_table(1, sy, half_width).entries()) {
      const double sq = f.g().band() + std::fabs(p[1] + e.offset) * f.w().band() / 2.0;
      inner += std::fabs(e.weight) * unit_tail * sq * sup_f;
    }
  }

  CommutatorCheck out;
  out.value = xy.value - yx.value;
  out.oracle = f.dt(p);
  out.tail_bound = xy.tail_bound + yx.tail_bound + inner;
  return out;
}

}  // namespace boas
