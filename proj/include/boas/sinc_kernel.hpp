#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace boas {

/// Highest derivative order accepted by sinc_derivative.
inline constexpr int kMaxSincDerivativeOrder = 64;

/// Normalized sinc: sin(pi x)/(pi x), with sinc(0) = 1.
/// Throws DomainError for non-finite x.
double sinc(double x);

/// n-th derivative of the normalized sinc at x.
///
/// For |x| < 1/2 the Taylor series of sinc about 0 is differentiated term by
/// term. Elsewhere the integral form sinc^(n)(x) = pi^n Re[i^n J_n(pi x)],
/// J_n(z) = int_0^1 u^n e^{izu} du, is evaluated by a confluent hypergeometric
/// series when |pi x| <= n + 1 and by the upward recurrence
/// J_n = (e^{iz} - n J_{n-1}) / (iz) otherwise; both are forward stable in
/// their regime.
double sinc_derivative(int n, double x);

/// Odd-order Boas coefficient A_{m,k}, m >= 1.
double coeff_A(int m, std::int64_t k);

/// Even-order Boas coefficient B_{m,k}, m >= 1 (k = 0 uses the closed form
/// (-1)^{m+1} pi^{2m} / (2m+1)).
double coeff_B(int m, std::int64_t k);

/// Constant C_m with |A_{m,k}| <= C_m / k^2 for all |k| >= 1.
double decay_constant_A(int m);

/// Constant C_m with |B_{m,k}| <= C_m / k^2 for all |k| >= 1.
double decay_constant_B(int m);

/// n! in double precision; exact up to 20!, log-gamma beyond.
double factorial(int n);

struct CoefficientEntry {
  std::int64_t k;
  double weight;
  double offset;
};

/// Signed, bandwidth-scaled slice k = -N..N of the order-r Boas weights.
///
/// Odd r = 2m-1: weight = (sigma/pi)^r (-1)^{k+1} A_{m,k} at offset
/// (pi/sigma)(k - 1/2). Even r = 2m: weight = (sigma/pi)^r (-1)^{k+1} B_{m,k}
/// at offset pi k / sigma. Entries are stored in increasing k.
class CoefficientTable {
 public:
  int order() const { return order_; }
  double bandwidth() const { return bandwidth_; }
  std::int64_t half_width() const { return half_width_; }
  std::span<const CoefficientEntry> entries() const { return entries_; }

  /// Lattice description of the offsets: offset(k) = step * (k + shift).
  double step() const;
  double shift() const { return order_ % 2 == 1 ? -0.5 : 0.0; }

  const CoefficientEntry& at(std::int64_t k) const;

 private:
  friend CoefficientTable build_table(int, double, std::int64_t);
  CoefficientTable(int order, double bandwidth, std::int64_t half_width,
                   std::vector<CoefficientEntry> entries)
      : order_(order), bandwidth_(bandwidth), half_width_(half_width),
        entries_(std::move(entries)) {}

  int order_;
  double bandwidth_;
  std::int64_t half_width_;
  std::vector<CoefficientEntry> entries_;
};

/// Throws InvalidArgument on r < 1, sigma <= 0 or half_width < 1, and
/// RangeError if (sigma/pi)^r or any weight overflows.
CoefficientTable build_table(int r, double sigma, std::int64_t half_width);

/// Sum of |weight| accumulated outward (k = 0, 1, -1, 2, -2, ...), so the
/// value is nondecreasing in half_width.
double table_mass(const CoefficientTable& table);

/// sigma^r - table_mass: the absolute weight mass outside k = -N..N.
double tail_mass(const CoefficientTable& table);

}  // namespace boas
