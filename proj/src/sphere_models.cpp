#include "boas/sphere_models.hpp"

#include <cmath>
#include <numbers>

#include "boas/circle_models.hpp"
#include "boas/errors.hpp"
#include "boas/quadrature.hpp"
#include "boas/random.hpp"

namespace boas {

namespace {

constexpr double kPi = std::numbers::pi;

void check_lm(int l, int m) {
  if (l < 0 || m < -l || m > l) {
    throw InvalidArgument("spherical harmonic index (" + std::to_string(l) + ", " +
                          std::to_string(m) + ") out of range");
  }
}

void check_order(int r) {
  if (r < 1) throw InvalidArgument("field derivative: order must be >= 1");
  if (r > kMaxFieldOrder) {
    throw UnsupportedOrderError("field derivative: order " + std::to_string(r) + " > " +
                                std::to_string(kMaxFieldOrder));
  }
}

}  // namespace

Vec3 from_angles(double theta, double phi) {
  const double s = std::sin(theta);
  return {s * std::cos(phi), s * std::sin(phi), std::cos(theta)};
}

void require_unit(const Vec3& x) {
  const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  if (!(std::fabs(r - 1.0) <= 1e-12)) {
    throw DomainError("spherical harmonics are evaluated on unit vectors; |x| = " +
                      std::to_string(r));
  }
}

void real_harmonics(int cap, const Vec3& x, std::vector<double>& out) {
  if (cap < 0) throw InvalidArgument("real_harmonics: cap must be >= 0");
  out.assign(static_cast<std::size_t>((cap + 1) * (cap + 1)), 0.0);
  const double z = x[2];
  // (x1 + i x2)^m carries the sin^m(theta) factor of P_l^m
  double re = 1.0;
  double im = 0.0;
  double qmm = 1.0 / std::sqrt(4.0 * kPi);
  for (int m = 0; m <= cap; ++m) {
    if (m > 0) {
      qmm *= std::sqrt((2.0 * m + 1.0) / (2.0 * m));
      const double nre = re * x[0] - im * x[1];
      const double nim = re * x[1] + im * x[0];
      re = nre;
      im = nim;
    }
    const double cs = m == 0 ? 1.0 : std::sqrt(2.0) * re;
    const double sn = std::sqrt(2.0) * im;
    double q2 = 0.0;
    double q1 = qmm;
    for (int l = m; l <= cap; ++l) {
      double q;
      if (l == m) {
        q = qmm;
      } else if (l == m + 1) {
        q = std::sqrt(2.0 * m + 3.0) * z * qmm;
      } else {
        const double a = std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l) * l - m * m));
        const double b = std::sqrt(((l - 1.0) * (l - 1.0) - m * m) / (4.0 * (l - 1.0) * (l - 1.0) - 1.0));
        q = a * (z * q1 - b * q2);
      }
      if (l > m) {
        q2 = q1;
        q1 = q;
      }
      out[harmonic_index(l, m)] = q * cs;
      if (m > 0) out[harmonic_index(l, -m)] = q * sn;
    }
  }
}

double real_harmonic(int l, int m, const Vec3& x) {
  check_lm(l, m);
  std::vector<double> y;
  real_harmonics(l, x, y);
  return y[harmonic_index(l, m)];
}

SphericalHarmonicExpansion::SphericalHarmonicExpansion(int cap)
    : cap_(cap), coeffs_(static_cast<std::size_t>((cap + 1) * (cap + 1)), 0.0) {
  if (cap < 0) throw InvalidArgument("SphericalHarmonicExpansion: cap must be >= 0");
}

SphericalHarmonicExpansion SphericalHarmonicExpansion::basis(int l, int m, int cap) {
  check_lm(l, m);
  if (cap < 0) cap = l;
  if (cap < l) throw InvalidArgument("basis: cap below l");
  SphericalHarmonicExpansion e(cap);
  e.set_coeff(l, m, 1.0);
  return e;
}

int SphericalHarmonicExpansion::degree() const {
  for (int l = cap_; l > 0; --l) {
    for (int m = -l; m <= l; ++m) {
      if (coeffs_[harmonic_index(l, m)] != 0.0) return l;
    }
  }
  return 0;
}

double SphericalHarmonicExpansion::coeff(int l, int m) const {
  check_lm(l, m);
  return l <= cap_ ? coeffs_[harmonic_index(l, m)] : 0.0;
}

void SphericalHarmonicExpansion::set_coeff(int l, int m, double value) {
  check_lm(l, m);
  if (l > cap_) throw InvalidArgument("set_coeff: l above the degree cap");
  coeffs_[harmonic_index(l, m)] = value;
}

double SphericalHarmonicExpansion::operator()(const Vec3& x) const {
  require_unit(x);
  thread_local std::vector<double> y;
  real_harmonics(cap_, x, y);
  double acc = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) acc += coeffs_[i] * y[i];
  return acc;
}

SphereFunction SphericalHarmonicExpansion::function() const {
  auto self = std::make_shared<const SphericalHarmonicExpansion>(*this);
  return SphereFunction([self](const Vec3& x) { return (*self)(x); },
                        BernsteinCertificate{static_cast<double>(cap_)});
}

double SphericalHarmonicExpansion::coefficient_norm() const { return norm_above(-1); }

double SphericalHarmonicExpansion::norm_above(int degree) const {
  double s = 0.0;
  for (int l = std::max(0, degree + 1); l <= cap_; ++l) {
    for (int m = -l; m <= l; ++m) s += coeffs_[harmonic_index(l, m)] * coeffs_[harmonic_index(l, m)];
  }
  return std::sqrt(s);
}

SphericalHarmonicExpansion random_expansion(int degree, std::uint64_t seed) {
  SphericalHarmonicExpansion e(degree);
  Rng rng(seed);
  for (int l = 0; l <= degree; ++l) {
    for (int m = -l; m <= l; ++m) e.set_coeff(l, m, rng.uniform(-1.0, 1.0));
  }
  return e;
}

SphereQuadrature make_sphere_quadrature(int n) {
  if (n < 0) throw InvalidArgument("make_sphere_quadrature: n must be >= 0");
  SphereQuadrature q;
  q.n = n;
  const QuadratureRule gl = gauss_legendre(n + 1);
  const int az = 2 * n + 1;
  q.nodes.reserve(gl.nodes.size() * static_cast<std::size_t>(az));
  q.weights.reserve(q.nodes.capacity());
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    const double z = gl.nodes[i];
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    for (int j = 0; j < az; ++j) {
      const double phi = 2.0 * kPi * j / az;
      q.nodes.push_back({rho * std::cos(phi), rho * std::sin(phi), z});
      q.weights.push_back(gl.weights[i] * 2.0 * kPi / az);
    }
  }
  return q;
}

double sphere_l2_norm(const SphereFunction& f, const SphereQuadrature& quad) {
  double s = 0.0;
  for (std::size_t i = 0; i < quad.nodes.size(); ++i) {
    const double v = f(quad.nodes[i]);
    s += quad.weights[i] * v * v;
  }
  return std::sqrt(s);
}

double sphere_sup_on_nodes(const SphereFunction& f, const SphereQuadrature& quad) {
  double m = 0.0;
  for (const Vec3& x : quad.nodes) m = std::max(m, std::fabs(f(x)));
  return m;
}

SphericalHarmonicExpansion project(const std::function<double(const Vec3&)>& f, int cap,
                                   const SphereQuadrature& quad) {
  if (cap < 0) throw InvalidArgument("project: cap must be >= 0");
  if (2 * cap > quad.exactness()) {
    throw QuadratureError("project: degree cap " + std::to_string(cap) +
                          " needs exactness " + std::to_string(2 * cap) +
                          " but the rule is exact to degree " + std::to_string(quad.exactness()));
  }
  SphericalHarmonicExpansion e(cap);
  std::vector<double> acc(e.coeffs().size(), 0.0);
  std::vector<double> y;
  for (std::size_t i = 0; i < quad.nodes.size(); ++i) {
    const double w = quad.weights[i] * f(quad.nodes[i]);
    if (w == 0.0) continue;
    real_harmonics(cap, quad.nodes[i], y);
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += w * y[k];
  }
  for (int l = 0; l <= cap; ++l) {
    for (int m = -l; m <= l; ++m) e.set_coeff(l, m, acc[harmonic_index(l, m)]);
  }
  return e;
}

SphericalHarmonicExpansion project(const std::function<double(const Vec3&)>& f, int cap) {
  if (cap > kMaxProjectionCap) {
    throw QuadratureError("project: degree cap " + std::to_string(cap) + " exceeds " +
                          std::to_string(kMaxProjectionCap));
  }
  return project(f, cap, make_sphere_quadrature(2 * std::max(cap, 0)));
}

std::string RotationField::label() const {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

RotationField make_field(int i, int j) {
  if (!(1 <= i && i < j && j <= 3)) {
    throw InvalidArgument("rotation field needs 1 <= i < j <= 3, got (" + std::to_string(i) +
                          "," + std::to_string(j) + ")");
  }
  return {i, j};
}

const std::array<RotationField, 3>& all_fields() {
  static const std::array<RotationField, 3> fields{RotationField{1, 2}, RotationField{1, 3},
                                                   RotationField{2, 3}};
  return fields;
}

Vec3 rotate(const RotationField& field, double tau, const Vec3& x) {
  if (tau == 0.0) return x;
  const double c = std::cos(tau);
  const double s = std::sin(tau);
  Vec3 y = x;
  const double xi = x[static_cast<std::size_t>(field.i - 1)];
  const double xj = x[static_cast<std::size_t>(field.j - 1)];
  y[static_cast<std::size_t>(field.i - 1)] = xi * c + xj * s;
  y[static_cast<std::size_t>(field.j - 1)] = -xi * s + xj * c;
  return y;
}

SphereGroup rotation_group(const RotationField& field, int n_quad) {
  auto quad = std::make_shared<const SphereQuadrature>(make_sphere_quadrature(n_quad));
  return SphereGroup(
      "sphere-rotation" + field.label(),
      [field](double tau, const Vec3& x) { return rotate(field, tau, x); },
      [quad](const SphereFunction& f) { return sphere_l2_norm(f, *quad); });
}

int certified_degree(const SphereFunction& f) {
  if (!f.certificate()) throw CertificateError("sphere function carries no degree certificate");
  return static_cast<int>(std::ceil(f.certificate()->sigma - 1e-9));
}

BoasResult<double> field_derivative_boas(const SphereFunction& f, const RotationField& field,
                                         const Vec3& x, int r, std::int64_t half_width,
                                         double sigma) {
  check_order(r);
  const int n = certified_degree(f);
  if (sigma == 0.0) sigma = std::max(n, 1);
  const SphereGroup g = rotation_group(field, std::max(n, 1));
  const auto res = boas_apply(g, f, build_table(r, sigma, half_width));
  return {res.value(x), res.tail_mass, res.tail_bound};
}

double field_derivative(const SphereFunction& f, const RotationField& field, const Vec3& x, int r,
                        const SphereMethod& method) {
  check_order(r);
  if (method.kind == SphereMethod::Kind::boas) {
    return field_derivative_boas(f, field, x, r, method.half_width, method.sigma).value;
  }
  const int n = certified_degree(f);
  if (n == 0) return 0.0;
  const Stencil s = power(riesz_stencil(n), r).materialize();
  double acc = 0.0;
  for (std::size_t k = 0; k < s.size(); ++k) acc += s.weights[k] * f(rotate(field, s.offsets[k], x));
  return acc;
}

double field_derivative(const SphericalHarmonicExpansion& e, const RotationField& field,
                        const Vec3& x, int r, const SphereMethod& method) {
  require_unit(x);
  return field_derivative(e.function(), field, x, r, method);
}

SphereFunction field_derivative_function(const SphereFunction& f, const RotationField& field,
                                         int r, const SphereMethod& method) {
  check_order(r);
  const int n = certified_degree(f);
  return SphereFunction(
      [f, field, r, method](const Vec3& x) { return field_derivative(f, field, x, r, method); },
      BernsteinCertificate{static_cast<double>(n)});
}

double laplace_beltrami(const SphereFunction& f, const Vec3& x, const SphereMethod& method) {
  double acc = 0.0;
  for (const RotationField& field : all_fields()) acc += field_derivative(f, field, x, 2, method);
  return -acc;
}

double laplace_beltrami(const SphericalHarmonicExpansion& e, const Vec3& x,
                        const SphereMethod& method) {
  require_unit(x);
  return laplace_beltrami(e.function(), x, method);
}

SphereFunction laplace_beltrami_function(const SphereFunction& f, const SphereMethod& method) {
  const int n = certified_degree(f);
  return SphereFunction([f, method](const Vec3& x) { return laplace_beltrami(f, x, method); },
                        BernsteinCertificate{static_cast<double>(n)});
}

double commutator_residual(const SphereFunction& f) {
  const int n = certified_degree(f);
  const RotationField d12{1, 2};
  const RotationField d13{1, 3};
  const RotationField d23{2, 3};
  const SphereFunction f23 = field_derivative_function(f, d23, 1);
  const SphereFunction f12 = field_derivative_function(f, d12, 1);
  const SphereFunction residual(
      [=](const Vec3& x) {
        return field_derivative(f23, d12, x, 1) - field_derivative(f12, d23, x, 1) +
               field_derivative(f, d13, x, 1);
      },
      BernsteinCertificate{static_cast<double>(n)});
  return sphere_l2_norm(residual, make_sphere_quadrature(std::max(n, 1)));
}

double commutator_residual(const SphericalHarmonicExpansion& e) {
  return commutator_residual(e.function());
}

double vector_field_apply(const std::function<Vec3(const Vec3&)>& a, const SphereFunction& f,
                          const Vec3& x) {
  const Vec3 c = a(x);
  double acc = 0.0;
  for (std::size_t j = 0; j < 3; ++j) {
    if (c[j] == 0.0) continue;
    acc += c[j] * field_derivative(f, all_fields()[j], x, 1);
  }
  return acc;
}

SphereFunction product(const SphereFunction& f, const SphereFunction& g) {
  const int n = certified_degree(f) + certified_degree(g);
  return SphereFunction([f, g](const Vec3& x) { return f(x) * g(x); },
                        BernsteinCertificate{static_cast<double>(n)});
}

}  // namespace boas
