#include "boas/circle_models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "json.hpp"

#include "boas/errors.hpp"
#include "boas/random.hpp"

namespace boas {

namespace {

constexpr double kPi = std::numbers::pi;

// sin and cos of k * tau, exact when tau is a multiple of pi / 2.
void sincos_multiple(int k, double tau, double& s, double& c) {
  const double reduced = std::remainder(tau, 2.0 * kPi);
  const double quarter = reduced / (0.5 * kPi);
  if (quarter == std::round(quarter)) {
    const long long turns = static_cast<long long>(std::round(quarter)) * k;
    switch (((turns % 4) + 4) % 4) {
      case 0: s = 0.0; c = 1.0; return;
      case 1: s = 1.0; c = 0.0; return;
      case 2: s = 0.0; c = -1.0; return;
      default: s = -1.0; c = 0.0; return;
    }
  }
  s = std::sin(k * reduced);
  c = std::cos(k * reduced);
}

TrigPolynomial combine(const TrigPolynomial& p, const TrigPolynomial& q, double sign) {
  const int n = std::max(p.degree(), q.degree());
  std::vector<double> a(static_cast<std::size_t>(n + 1));
  std::vector<double> b(static_cast<std::size_t>(n));
  for (int k = 0; k <= n; ++k) a[static_cast<std::size_t>(k)] = p.a(k) + sign * q.a(k);
  for (int k = 1; k <= n; ++k) b[static_cast<std::size_t>(k - 1)] = p.b(k) + sign * q.b(k);
  return TrigPolynomial(std::move(a), std::move(b));
}

}  // namespace

TrigPolynomial::TrigPolynomial(std::vector<double> a, std::vector<double> b) : a_(std::move(a)) {
  if (a_.empty()) throw InvalidArgument("TrigPolynomial: need a_0");
  if (b.size() + 1 != a_.size()) {
    throw InvalidArgument("TrigPolynomial: expected " + std::to_string(a_.size() - 1) +
                          " sine coefficients, got " + std::to_string(b.size()));
  }
  b_.assign(1, 0.0);
  b_.insert(b_.end(), b.begin(), b.end());
}

TrigPolynomial TrigPolynomial::cosine(int k, double amplitude) {
  if (k < 0) throw InvalidArgument("TrigPolynomial::cosine: k must be >= 0");
  std::vector<double> a(static_cast<std::size_t>(k + 1), 0.0);
  a[static_cast<std::size_t>(k)] = amplitude;
  return TrigPolynomial(std::move(a), std::vector<double>(static_cast<std::size_t>(k), 0.0));
}

TrigPolynomial TrigPolynomial::sine(int k, double amplitude) {
  if (k < 1) throw InvalidArgument("TrigPolynomial::sine: k must be >= 1");
  std::vector<double> b(static_cast<std::size_t>(k), 0.0);
  b[static_cast<std::size_t>(k - 1)] = amplitude;
  return TrigPolynomial(std::vector<double>(static_cast<std::size_t>(k + 1), 0.0), std::move(b));
}

double TrigPolynomial::operator()(double t) const {
  double acc = a_[0];
  for (int k = 1; k <= degree(); ++k) {
    double s = 0.0;
    double c = 0.0;
    sincos_multiple(k, t, s, c);
    acc += a_[static_cast<std::size_t>(k)] * c + b_[static_cast<std::size_t>(k)] * s;
  }
  return acc;
}

TrigPolynomial TrigPolynomial::derivative() const {
  const int n = degree();
  std::vector<double> a(static_cast<std::size_t>(n + 1), 0.0);
  std::vector<double> b(static_cast<std::size_t>(n), 0.0);
  for (int k = 1; k <= n; ++k) {
    a[static_cast<std::size_t>(k)] = k * b_[static_cast<std::size_t>(k)];
    b[static_cast<std::size_t>(k - 1)] = -k * a_[static_cast<std::size_t>(k)];
  }
  return TrigPolynomial(std::move(a), std::move(b));
}

TrigPolynomial TrigPolynomial::rotated(double tau) const {
  const int n = degree();
  std::vector<double> a(static_cast<std::size_t>(n + 1));
  std::vector<double> b(static_cast<std::size_t>(n));
  a[0] = a_[0];
  for (int k = 1; k <= n; ++k) {
    double s = 0.0;
    double c = 0.0;
    sincos_multiple(k, tau, s, c);
    const double ak = a_[static_cast<std::size_t>(k)];
    const double bk = b_[static_cast<std::size_t>(k)];
    a[static_cast<std::size_t>(k)] = ak * c + bk * s;
    b[static_cast<std::size_t>(k - 1)] = bk * c - ak * s;
  }
  return TrigPolynomial(std::move(a), std::move(b));
}

double TrigPolynomial::grid_sup() const {
  const int m = std::max(64, 16 * (degree() + 1));
  double best = 0.0;
  for (int i = 0; i < m; ++i) best = std::max(best, std::fabs((*this)(2.0 * kPi * i / m)));
  return best;
}

TrigPolynomial operator+(const TrigPolynomial& p, const TrigPolynomial& q) {
  return combine(p, q, 1.0);
}

TrigPolynomial operator-(const TrigPolynomial& p, const TrigPolynomial& q) {
  return combine(p, q, -1.0);
}

TrigPolynomial operator*(double s, const TrigPolynomial& p) {
  std::vector<double> a(p.a_);
  std::vector<double> b(p.b_.begin() + 1, p.b_.end());
  for (double& x : a) x *= s;
  for (double& x : b) x *= s;
  return TrigPolynomial(std::move(a), std::move(b));
}

TrigPolynomial random_trig_polynomial(int degree, std::uint64_t seed) {
  if (degree < 0) throw InvalidArgument("random_trig_polynomial: degree must be >= 0");
  Rng rng(seed);
  std::vector<double> a(static_cast<std::size_t>(degree + 1));
  std::vector<double> b(static_cast<std::size_t>(degree));
  for (double& x : a) x = rng.uniform(-1.0, 1.0);
  for (double& x : b) x = rng.uniform(-1.0, 1.0);
  return TrigPolynomial(std::move(a), std::move(b));
}

TrigPolynomial parse_trig_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("trig polynomial: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("a") || !doc["a"].is_array()) {
    throw InvalidArgument("trig polynomial: expected {\"a\": [...], \"b\": [...]}");
  }
  std::vector<double> a;
  std::vector<double> b;
  try {
    a = doc["a"].get<std::vector<double>>();
    if (doc.contains("b")) b = doc["b"].get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("trig polynomial: ") + e.what());
  }
  return TrigPolynomial(std::move(a), std::move(b));
}

LatticeStencil riesz_stencil(int n) {
  if (n < 1) throw InvalidArgument("riesz_stencil: degree must be >= 1");
  LatticeStencil s;
  s.step = kPi / n;
  s.shift = -0.5;
  s.first = 1;
  s.weights.resize(static_cast<std::size_t>(2 * n));
  for (int k = 1; k <= 2 * n; ++k) {
    const double half = 0.5 * (2 * k - 1) * kPi / (2.0 * n);
    const double sh = std::sin(half);
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    s.weights[static_cast<std::size_t>(k - 1)] = sign / (4.0 * n * sh * sh);
  }
  return s;
}

double riesz_derivative(const std::function<double(double)>& trajectory, int n, double t) {
  const Stencil s = riesz_stencil(n).materialize();
  double acc = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) acc += s.weights[i] * trajectory(t + s.offsets[i]);
  return acc;
}

double riesz_derivative(const TrigPolynomial& p, double t) {
  if (p.degree() == 0) return 0.0;
  return riesz_derivative([&p](double u) { return p(u); }, p.degree(), t);
}

}  // namespace boas
