#include "boas/sinc_kernel.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "boas/errors.hpp"

namespace boas {
namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(what) + ": argument must be finite");
  }
}

// sin(pi x) and cos(pi x) with exact zeros at integers / half-integers.
struct SinCosPi {
  double sin;
  double cos;
};

SinCosPi sincos_pi(double x) {
  double r = std::remainder(x, 2.0);  // exact, r in [-1, 1]
  double sign = 1.0;
  if (r > 0.5) {
    r = 1.0 - r;  // sin(pi(1-r)) = sin(pi r), cos flips
    sign = -1.0;
  } else if (r < -0.5) {
    r = -1.0 - r;
    sign = -1.0;
  }
  // r in [-1/2, 1/2]
  if (r == 0.5) return {1.0, 0.0};
  if (r == -0.5) return {-1.0, 0.0};
  return {std::sin(kPi * r), sign * std::cos(kPi * r)};
}

double pow_int(double base, int e) {
  double result = 1.0;
  for (int i = 0; i < e; ++i) result *= base;
  return result;
}

double sinc_derivative_taylor(int n, double x) {
  // sinc^(n)(x) = sum_{p >= 0, p = n mod 2} (-1)^{(n+p)/2} pi^n (pi x)^p / ((n+p+1) p!)
  const double px = kPi * x;
  const double px2 = px * px;
  const double pin = pow_int(kPi, n);
  int p = n % 2;
  double q = (p == 0) ? 1.0 : px;  // (pi x)^p / p!
  double sum = 0.0;
  for (int iter = 0; iter < 200; ++iter) {
    const int j = (n + p) / 2;
    const double term = ((j % 2 == 0) ? 1.0 : -1.0) * pin * q / (n + p + 1);
    sum += term;
    if (q == 0.0 || (iter > 2 && std::abs(term) <= 1e-18 * std::abs(sum))) break;
    q *= px2 / ((p + 1.0) * (p + 2.0));
    p += 2;
  }
  return sum;
}

// J_n(z) = int_0^1 u^n e^{izu} du for real z.
std::complex<double> moment_integral(int n, double z, const SinCosPi& e) {
  const std::complex<double> eiz(e.cos, e.sin);
  const std::complex<double> iz(0.0, z);
  if (std::abs(z) <= n + 1.0) {
    // Kummer: J_n = e^{iz} sum_k (-iz)^k / ((n+1)(n+2)...(n+k+1))
    std::complex<double> term(1.0 / (n + 1.0), 0.0);
    std::complex<double> sum = term;
    for (int k = 1; k < 400; ++k) {
      term *= -iz / (n + k + 1.0);
      sum += term;
      if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    }
    return eiz * sum;
  }
  std::complex<double> j = (eiz - 1.0) / iz;
  for (int m = 1; m <= n; ++m) {
    j = (eiz - static_cast<double>(m) * j) / iz;
  }
  return j;
}

}  // namespace

double factorial(int n) {
  static constexpr std::array<double, 21> table = [] {
    std::array<double, 21> t{};
    t[0] = 1.0;
    for (int i = 1; i < 21; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  if (n < 0) throw InvalidArgument("factorial: negative argument");
  if (n <= 20) return table[n];
  return std::exp(std::lgamma(n + 1.0));
}

double sinc(double x) {
  require_finite(x, "sinc");
  if (x == 0.0) return 1.0;
  return sincos_pi(x).sin / (kPi * x);
}

double sinc_derivative(int n, double x) {
  if (n < 0 || n > kMaxSincDerivativeOrder) {
    throw UnsupportedOrderError("sinc_derivative: order " + std::to_string(n) +
                                " outside [0, " +
                                std::to_string(kMaxSincDerivativeOrder) + "]");
  }
  require_finite(x, "sinc_derivative");
  if (n == 0) return sinc(x);
  if (std::abs(x) < 0.5) return sinc_derivative_taylor(n, x);

  const SinCosPi e = sincos_pi(x);
  const std::complex<double> j = moment_integral(n, kPi * x, e);
  // Re[i^n J]
  double re = 0.0;
  switch (n % 4) {
    case 0: re = j.real(); break;
    case 1: re = -j.imag(); break;
    case 2: re = -j.real(); break;
    default: re = j.imag(); break;
  }
  return pow_int(kPi, n) * re;
}

double coeff_A(int m, std::int64_t k) {
  if (m < 1) throw InvalidArgument("coeff_A: m must be >= 1");
  const double y = static_cast<double>(k) - 0.5;
  const double z = kPi * y;
  const double fact = factorial(2 * m - 1);
  if (std::abs(z) < 2.0 * m) {
    // cos(pi y) = 0, so the finite sum equals minus the cosine tail:
    // A = -(2m-1)!/pi sum_{j>=m} (-1)^j pi^{2j} y^{2j-2m} / (2j)!
    double term = pow_int(kPi, 2 * m) / factorial(2 * m);  // j = m, y^0
    double sum = 0.0;
    for (int j = m; j < m + 200; ++j) {
      sum += ((j % 2 == 0) ? 1.0 : -1.0) * term;
      const double next = term * z * z / ((2.0 * j + 1.0) * (2.0 * j + 2.0));
      if (std::abs(next) <= 1e-18 * std::abs(sum)) break;
      term = next;
    }
    return -fact / kPi * sum;
  }
  // Direct closed form.
  double sum = 0.0;
  double term = 1.0;  // z^{2j} / (2j)!
  for (int j = 0; j < m; ++j) {
    sum += ((j % 2 == 0) ? 1.0 : -1.0) * term;
    term *= z * z / ((2.0 * j + 1.0) * (2.0 * j + 2.0));
  }
  return fact / (kPi * pow_int(y, 2 * m)) * sum;
}

double coeff_B(int m, std::int64_t k) {
  if (m < 1) throw InvalidArgument("coeff_B: m must be >= 1");
  if (k == 0) {
    return ((m % 2 == 1) ? 1.0 : -1.0) * pow_int(kPi, 2 * m) / (2.0 * m + 1.0);
  }
  const double kk = static_cast<double>(k);
  const double z = kPi * kk;
  const double fact = factorial(2 * m);
  if (std::abs(z) < 2.0 * m + 1.0) {
    // sin(pi k) = 0:  B = -(2m)!/pi sum_{j>=m} (-1)^j pi^{2j+1} k^{2j-2m} / (2j+1)!
    double term = pow_int(kPi, 2 * m + 1) / factorial(2 * m + 1);
    double sum = 0.0;
    for (int j = m; j < m + 200; ++j) {
      sum += ((j % 2 == 0) ? 1.0 : -1.0) * term;
      const double next = term * z * z / ((2.0 * j + 2.0) * (2.0 * j + 3.0));
      if (std::abs(next) <= 1e-18 * std::abs(sum)) break;
      term = next;
    }
    return -fact / kPi * sum;
  }
  double sum = 0.0;
  double term = z;  // z^{2j+1} / (2j+1)!
  for (int j = 0; j < m; ++j) {
    sum += ((j % 2 == 0) ? 1.0 : -1.0) * term;
    term *= z * z / ((2.0 * j + 2.0) * (2.0 * j + 3.0));
  }
  return fact / (kPi * pow_int(kk, 2 * m + 1)) * sum;
}

double decay_constant_A(int m) {
  if (m < 1) throw InvalidArgument("decay_constant_A: m must be >= 1");
  double c = 0.0;
  for (int j = 0; j < m; ++j) {
    c += factorial(2 * m - 1) / factorial(2 * j) * std::pow(kPi, 2 * j - 1) *
         std::pow(2.0, 2 * m - 2 - 2 * j);
  }
  return 4.0 * c;
}

double decay_constant_B(int m) {
  if (m < 1) throw InvalidArgument("decay_constant_B: m must be >= 1");
  double c = 0.0;
  for (int j = 0; j < m; ++j) {
    c += factorial(2 * m) / factorial(2 * j + 1) * pow_int(kPi, 2 * j);
  }
  return c;
}

double CoefficientTable::step() const { return kPi / bandwidth_; }

const CoefficientEntry& CoefficientTable::at(std::int64_t k) const {
  if (k < -half_width_ || k > half_width_) {
    throw InvalidArgument("CoefficientTable::at: index outside table");
  }
  return entries_[static_cast<std::size_t>(k + half_width_)];
}

CoefficientTable build_table(int r, double sigma, std::int64_t half_width) {
  if (r < 1) throw InvalidArgument("build_table: order must be >= 1");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw InvalidArgument("build_table: bandwidth must be positive and finite");
  }
  if (half_width < 1) throw InvalidArgument("build_table: half_width must be >= 1");

  const double scale = std::pow(sigma / kPi, r);
  if (!std::isfinite(scale) || scale == 0.0) {
    throw RangeError("build_table: (sigma/pi)^r is not representable");
  }
  const bool odd = (r % 2 == 1);
  const int m = odd ? (r + 1) / 2 : r / 2;
  const double step = kPi / sigma;

  std::vector<CoefficientEntry> entries;
  entries.reserve(static_cast<std::size_t>(2 * half_width + 1));
  for (std::int64_t k = -half_width; k <= half_width; ++k) {
    const double sign = (k % 2 == 0) ? -1.0 : 1.0;  // (-1)^{k+1}
    const double c = odd ? coeff_A(m, k) : coeff_B(m, k);
    const double w = scale * sign * c;
    if (!std::isfinite(w)) throw RangeError("build_table: weight overflow");
    const double offset = odd ? step * (static_cast<double>(k) - 0.5)
                              : step * static_cast<double>(k);
    entries.push_back({k, w, offset});
  }
  return CoefficientTable(r, sigma, half_width, std::move(entries));
}

double table_mass(const CoefficientTable& table) {
  const std::int64_t n = table.half_width();
  long double mass = std::abs(table.at(0).weight);
  for (std::int64_t j = 1; j <= n; ++j) {
    mass += std::abs(table.at(j).weight);
    mass += std::abs(table.at(-j).weight);
  }
  return static_cast<double>(mass);
}

double tail_mass(const CoefficientTable& table) {
  const long double total =
      std::pow(static_cast<long double>(table.bandwidth()), table.order());
  const std::int64_t n = table.half_width();
  long double mass = std::abs(table.at(0).weight);
  for (std::int64_t j = 1; j <= n; ++j) {
    mass += std::abs(table.at(j).weight);
    mass += std::abs(table.at(-j).weight);
  }
  const long double tail = total - mass;
  return tail > 0 ? static_cast<double>(tail) : 0.0;
}

}  // namespace boas
