#pragma once

// Models on the real line: bandlimited sinc series under translation,
// compactly supported and periodic fixtures, and the Schrodinger groups
// s -> exp(2 pi i s (pD + qX)).

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "boas/boas_core.hpp"
#include "boas/group.hpp"

namespace boas {

using RealFunction = Function<double, double>;
using ComplexFunction = Function<double, std::complex<double>>;
using LineGroup = PointGroup<double, double>;
using SchrodingerGroup = PointGroup<double, std::complex<double>>;

/// f(t) = sum_j c_j sinc(sigma0 t / pi - j) over a contiguous window of j.
class SincSeriesSignal {
 public:
  SincSeriesSignal(double band, std::int64_t first, std::vector<double> coeffs);

  double band() const { return band_; }
  std::int64_t first() const { return first_; }
  std::int64_t last() const { return first_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  /// c_j, or 0 outside the window.
  double coeff(std::int64_t j) const;

  double operator()(double t) const;
  /// Exact r-th derivative (any r the sinc kernel supports).
  double derivative(int r, double t) const;

  /// sum |c_j| >= sup |f|.
  double sup_bound() const;
  /// Upper bound on sup |t f(t)|.
  double moment_bound() const;

  /// Pointwise evaluator certified at the band.
  RealFunction function() const;

 private:
  double band_;
  std::int64_t first_;
  std::vector<double> coeffs_;
};

/// Throws InvalidArgument on a nonpositive band or when no coefficient is nonzero.
SincSeriesSignal make_sinc_signal(double sigma0, const std::map<std::int64_t, double>& coeffs);

/// Coefficients uniform in [-1, 1) on the window [lo, hi], drawn from Rng(seed).
SincSeriesSignal random_sinc_signal(double sigma0, std::uint64_t seed, std::int64_t lo = -8,
                                    std::int64_t hi = 8);

/// Exact r-th derivative of a sinc series at t, r <= 6.
double derivative_oracle(const SincSeriesSignal& sig, int r, double t);

/// Parses {"band": number, "coeffs": {"j": number, ...}}.
SincSeriesSignal parse_signal_json(const std::string& text);
SincSeriesSignal load_signal_file(const std::string& path);

/// A line fixture with the certificates it is allowed to claim.
struct LineSignal {
  std::string name;
  /// Pointwise evaluator; its certificate is the translation type when banded.
  RealFunction f;
  /// Exponential type under translation.
  std::optional<double> band;
  /// Radius L with f = 0 outside [-L, L].
  std::optional<double> support;
  /// Upper bound on sup |f|.
  double sup_bound = 0.0;
  /// Exact derivative, when known in closed form.
  std::optional<RealFunction> derivative;

  double operator()(double x) const { return f(x); }
};

LineSignal line_signal(const SincSeriesSignal& sig, std::string name = "sinc-series");
/// max(0, 1 - |x| / L).
LineSignal hat_signal(double radius = 1.0);
/// (1 + cos(pi x / L)) / 2 on [-L, L], zero outside.
LineSignal bump_signal(double radius = 1.0);
/// Period-2 triangle wave with values in [-1, 1], equal to 1 - 2|x| on [-1, 1].
LineSignal triangle_wave();
/// sin(sigma x), type sigma under translation.
LineSignal sine_signal(double sigma);
/// Band pi, coefficients {-1: 0.5, 0: 1, 1: -0.25}.
SincSeriesSignal sinc_pulse();

/// Names accepted by catalog_signal.
std::vector<std::string> catalog_names();
/// hat, bump, sinc-pulse, triangle or sine. Throws InvalidArgument otherwise.
LineSignal catalog_signal(const std::string& name);

/// f restricted to [-L, L]: gains a support certificate and loses any band.
LineSignal truncate(const LineSignal& sig, double radius);

/// Throws CertificateError when a nonzero signal claims both a band and a
/// compact support; no nonzero function is bandlimited and compactly supported.
void check_certificates(const LineSignal& sig);

/// Uniform probe grid on [-32, 32] with step 1/16.
std::vector<double> default_line_probes();

/// (e^{tD} f)(x) = f(x + t), sup-norm on the probe grid.
LineGroup translation_group(std::vector<double> probes = default_line_probes());

/// (e^{sD} f)(x) = exp(2 pi i s q x + pi i s^2 p q) f(x + s p).
/// Throws InvalidArgument when p = q = 0.
SchrodingerGroup schrodinger_group(double p, double q,
                                   std::vector<double> probes = default_line_probes());

/// Complex vector for schrodinger_group(p, q). Certified at |p| band when
/// q = 0, at 2 pi |q| L when p = 0, and uncertified otherwise.
ComplexFunction schrodinger_vector(const LineSignal& sig, double p, double q);

/// x f(x) from the order-1 Boas formula for the modulation group at
/// sigma = 2 pi L, divided by 2 pi i. Requires a support certificate.
BoasResult<ComplexFunction> position_multiply_via_boas(const LineSignal& sig,
                                                       std::int64_t half_width);

}  // namespace boas
