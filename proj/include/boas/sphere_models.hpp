#pragma once

// Spherical harmonics on S^2 under the three rotation groups exp(tau X_ij),
// X_ij = x_j d/dx_i - x_i d/dx_j.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "boas/boas_core.hpp"
#include "boas/group.hpp"

namespace boas {

using Vec3 = std::array<double, 3>;
using SphereFunction = Function<Vec3, double>;
using SphereGroup = PointGroup<Vec3, double>;

/// Unit vector with colatitude theta and azimuth phi.
Vec3 from_angles(double theta, double phi);

/// Throws DomainError unless | |x| - 1 | <= 1e-12.
void require_unit(const Vec3& x);

/// Real orthonormal harmonics Y_{l,m}, |m| <= l, without the Condon-Shortley
/// phase: m > 0 pairs with cos(m phi), m < 0 with sin(|m| phi).
/// Writes Y_{l,m}(x) at index l^2 + l + m for l = 0..cap.
void real_harmonics(int cap, const Vec3& x, std::vector<double>& out);
double real_harmonic(int l, int m, const Vec3& x);

inline std::size_t harmonic_index(int l, int m) {
  return static_cast<std::size_t>(l * l + l + m);
}

class SphericalHarmonicExpansion {
 public:
  explicit SphericalHarmonicExpansion(int cap = 0);

  /// Unit coefficient at (l, m) with the given degree cap (>= l).
  static SphericalHarmonicExpansion basis(int l, int m, int cap = -1);

  int degree_cap() const { return cap_; }
  /// Largest l with a nonzero coefficient (0 for the zero expansion).
  int degree() const;
  double coeff(int l, int m) const;
  void set_coeff(int l, int m, double value);
  const std::vector<double>& coeffs() const { return coeffs_; }

  /// Throws DomainError for non-unit x.
  double operator()(const Vec3& x) const;

  /// Pointwise evaluator certified at the degree cap.
  SphereFunction function() const;

  /// Euclidean norm of the coefficients (the L^2 norm on S^2).
  double coefficient_norm() const;
  /// Norm of the coefficients with l > degree.
  double norm_above(int degree) const;

 private:
  int cap_;
  std::vector<double> coeffs_;
};

/// Coefficients uniform in [-1, 1) for every l <= degree, drawn from Rng(seed).
SphericalHarmonicExpansion random_expansion(int degree, std::uint64_t seed);

/// Tensor quadrature: (n + 1) Gauss-Legendre nodes in cos(theta) times
/// (2n + 1) uniform azimuths; exact for polynomials of degree <= 2n.
struct SphereQuadrature {
  int n = 0;
  std::vector<Vec3> nodes;
  std::vector<double> weights;
  int exactness() const { return 2 * n; }
};
SphereQuadrature make_sphere_quadrature(int n);

double sphere_l2_norm(const SphereFunction& f, const SphereQuadrature& quad);
double sphere_sup_on_nodes(const SphereFunction& f, const SphereQuadrature& quad);

/// Coefficients of f for l <= cap by quadrature with n = 2 cap. Throws
/// QuadratureError when cap exceeds kMaxProjectionCap.
inline constexpr int kMaxProjectionCap = 64;
SphericalHarmonicExpansion project(const std::function<double(const Vec3&)>& f, int cap);
/// As above on a given rule; throws QuadratureError if 2 cap > its exactness.
SphericalHarmonicExpansion project(const std::function<double(const Vec3&)>& f, int cap,
                                   const SphereQuadrature& quad);

/// The plane (i, j), 1 <= i < j <= 3.
struct RotationField {
  int i = 1;
  int j = 2;
  std::string label() const;
};
RotationField make_field(int i, int j);
/// (1,2), (1,3), (2,3).
const std::array<RotationField, 3>& all_fields();

/// Flow of X_ij: x_i -> x_i cos tau + x_j sin tau, x_j -> -x_i sin tau + x_j cos tau.
Vec3 rotate(const RotationField& field, double tau, const Vec3& x);

/// (e^{tau D_ij} f)(x) = f(rotate(field, tau, x)), L^2 norm on a quadrature of order n_quad.
SphereGroup rotation_group(const RotationField& field, int n_quad = 32);

struct SphereMethod {
  enum class Kind { riesz, boas };
  Kind kind = Kind::riesz;
  std::int64_t half_width = 0;
  /// Boas bandwidth; 0 selects the certified degree.
  double sigma = 0.0;

  static SphereMethod riesz() { return {}; }
  static SphereMethod boas(std::int64_t half_width, double sigma = 0.0) {
    return {Kind::boas, half_width, sigma};
  }
};

inline constexpr int kMaxFieldOrder = 4;

/// Degree implied by the certificate of f. Throws CertificateError when uncertified.
int certified_degree(const SphereFunction& f);

/// D_ij^r f (x), 1 <= r <= 4. The Riesz path applies the 2n-node formula r
/// times along the orbit (exact for degree <= n); the Boas path uses the
/// order-r table at sigma = n (or the given sigma).
double field_derivative(const SphereFunction& f, const RotationField& field, const Vec3& x, int r,
                        const SphereMethod& method = SphereMethod::riesz());
double field_derivative(const SphericalHarmonicExpansion& e, const RotationField& field,
                        const Vec3& x, int r, const SphereMethod& method = SphereMethod::riesz());

/// Boas path with its truncation bound tail_mass * ||f||_2.
BoasResult<double> field_derivative_boas(const SphereFunction& f, const RotationField& field,
                                         const Vec3& x, int r, std::int64_t half_width,
                                         double sigma = 0.0);

/// x -> D_ij^r f (x), certified at the degree of f.
SphereFunction field_derivative_function(const SphereFunction& f, const RotationField& field,
                                         int r, const SphereMethod& method = SphereMethod::riesz());

/// L f (x) = -sum_{i<j} D_ij^2 f (x); equals l (l + 1) Y on degree-l harmonics.
double laplace_beltrami(const SphereFunction& f, const Vec3& x,
                        const SphereMethod& method = SphereMethod::riesz());
double laplace_beltrami(const SphericalHarmonicExpansion& e, const Vec3& x,
                        const SphereMethod& method = SphereMethod::riesz());
SphereFunction laplace_beltrami_function(const SphereFunction& f,
                                         const SphereMethod& method = SphereMethod::riesz());

/// L^2 norm of ([D12, D23] + D13) f on a quadrature exact for its square.
double commutator_residual(const SphereFunction& f);
double commutator_residual(const SphericalHarmonicExpansion& e);

/// sum_j a_j(x) D_j f (x) over the fields (1,2), (1,3), (2,3) with the Riesz path.
double vector_field_apply(const std::function<Vec3(const Vec3&)>& a, const SphereFunction& f,
                          const Vec3& x);

/// Pointwise product, certified at the sum of the degrees.
SphereFunction product(const SphereFunction& f, const SphereFunction& g);

}  // namespace boas
