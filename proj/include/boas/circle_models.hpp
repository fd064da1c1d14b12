#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "boas/group.hpp"
#include "boas/stencil.hpp"

namespace boas {

/// P(t) = a_0 + sum_{k=1}^{n} (a_k cos kt + b_k sin kt).
class TrigPolynomial {
 public:
  /// The zero polynomial of degree 0.
  TrigPolynomial() : a_(1, 0.0), b_(1, 0.0) {}
  /// `a` holds a_0..a_n and `b` holds b_1..b_n.
  TrigPolynomial(std::vector<double> a, std::vector<double> b);

  static TrigPolynomial cosine(int k, double amplitude = 1.0);
  static TrigPolynomial sine(int k, double amplitude = 1.0);

  int degree() const { return static_cast<int>(a_.size()) - 1; }
  double a(int k) const { return k <= degree() ? a_[static_cast<std::size_t>(k)] : 0.0; }
  double b(int k) const { return k >= 1 && k <= degree() ? b_[static_cast<std::size_t>(k)] : 0.0; }

  double operator()(double t) const;
  /// Exact derivative by coefficient shift.
  TrigPolynomial derivative() const;
  /// t -> P(t + tau), computed on the coefficients.
  TrigPolynomial rotated(double tau) const;
  /// max |P| over 16 (n + 1) equispaced points of one period (at least 64).
  double grid_sup() const;

  friend TrigPolynomial operator+(const TrigPolynomial& p, const TrigPolynomial& q);
  friend TrigPolynomial operator-(const TrigPolynomial& p, const TrigPolynomial& q);
  friend TrigPolynomial operator*(double s, const TrigPolynomial& p);

 private:
  std::vector<double> a_;
  // b_[0] is unused and kept at 0 so b_[k] pairs with a_[k].
  std::vector<double> b_;
};

/// Coefficients uniform in [-1, 1) drawn from Rng(seed).
TrigPolynomial random_trig_polynomial(int degree, std::uint64_t seed);

/// Parses {"a": [a_0, ..., a_n], "b": [b_1, ..., b_n]}.
TrigPolynomial parse_trig_json(const std::string& text);

/// The 2n Riesz nodes t_k = (2k - 1) pi / (2n), k = 1..2n, with weights
/// (-1)^{k+1} / (4n sin^2(t_k / 2)). Throws InvalidArgument for n < 1.
LatticeStencil riesz_stencil(int n);

/// P'(t) from 2n samples of P; exact for degree <= n. A constant has
/// derivative 0, returned without sampling.
double riesz_derivative(const TrigPolynomial& p, double t);

/// Riesz formula applied to an arbitrary trajectory assumed to be a trig
/// polynomial of degree <= n.
double riesz_derivative(const std::function<double(double)>& trajectory, int n, double t);

/// Rotations of the circle acting on trig polynomials, certified at their degree.
class CircleRotationGroup {
 public:
  using vector_type = TrigPolynomial;

  std::string name() const { return "circle-rotation"; }
  TrigPolynomial apply(double t, const TrigPolynomial& p) const {
    return t == 0.0 ? p : p.rotated(t);
  }
  double norm(const TrigPolynomial& p) const { return p.grid_sup(); }
  std::optional<BernsteinCertificate> certificate(const TrigPolynomial& p) const {
    return BernsteinCertificate{static_cast<double>(p.degree())};
  }
};

inline CircleRotationGroup rotation_group() { return {}; }

}  // namespace boas
