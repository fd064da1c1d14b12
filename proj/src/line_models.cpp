#include "boas/line_models.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"

#include "boas/errors.hpp"
#include "boas/random.hpp"
#include "boas/sinc_kernel.hpp"

namespace boas {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

SincSeriesSignal::SincSeriesSignal(double band, std::int64_t first, std::vector<double> coeffs)
    : band_(band), first_(first), coeffs_(std::move(coeffs)) {
  if (!(band > 0.0) || !std::isfinite(band)) {
    throw InvalidArgument("sinc signal: band must be positive and finite");
  }
  if (coeffs_.empty()) throw InvalidArgument("sinc signal: coefficient window is empty");
}

double SincSeriesSignal::coeff(std::int64_t j) const {
  if (j < first_ || j > last()) return 0.0;
  return coeffs_[static_cast<std::size_t>(j - first_)];
}

double SincSeriesSignal::operator()(double t) const {
  const double u = band_ * t / kPi;
  double acc = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0.0) continue;
    acc += coeffs_[i] * sinc(u - static_cast<double>(first_ + static_cast<std::int64_t>(i)));
  }
  return acc;
}

double SincSeriesSignal::derivative(int r, double t) const {
  if (r == 0) return (*this)(t);
  const double u = band_ * t / kPi;
  double acc = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0.0) continue;
    acc += coeffs_[i] *
           sinc_derivative(r, u - static_cast<double>(first_ + static_cast<std::int64_t>(i)));
  }
  return std::pow(band_ / kPi, r) * acc;
}

double SincSeriesSignal::sup_bound() const {
  double s = 0.0;
  for (double c : coeffs_) s += std::fabs(c);
  return s;
}

double SincSeriesSignal::moment_bound() const {
  // |t sinc(sigma t / pi - j)| <= (pi / sigma) (1 / pi + |j|)
  double s = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const double j = static_cast<double>(first_ + static_cast<std::int64_t>(i));
    s += std::fabs(coeffs_[i]) * (1.0 / kPi + std::fabs(j));
  }
  return kPi / band_ * s;
}

RealFunction SincSeriesSignal::function() const {
  auto self = std::make_shared<const SincSeriesSignal>(*this);
  return RealFunction([self](const double& t) { return (*self)(t); },
                      BernsteinCertificate{band_});
}

SincSeriesSignal make_sinc_signal(double sigma0, const std::map<std::int64_t, double>& coeffs) {
  bool nonzero = false;
  for (const auto& [j, c] : coeffs) nonzero = nonzero || c != 0.0;
  if (!nonzero) throw InvalidArgument("make_sinc_signal: at least one nonzero coefficient required");
  const std::int64_t first = coeffs.begin()->first;
  const std::int64_t last = coeffs.rbegin()->first;
  std::vector<double> window(static_cast<std::size_t>(last - first + 1), 0.0);
  for (const auto& [j, c] : coeffs) window[static_cast<std::size_t>(j - first)] = c;
  return SincSeriesSignal(sigma0, first, std::move(window));
}

SincSeriesSignal random_sinc_signal(double sigma0, std::uint64_t seed, std::int64_t lo,
                                    std::int64_t hi) {
  if (hi < lo) throw InvalidArgument("random_sinc_signal: empty window");
  Rng rng(seed);
  std::vector<double> c(static_cast<std::size_t>(hi - lo + 1));
  for (double& x : c) x = rng.uniform(-1.0, 1.0);
  return SincSeriesSignal(sigma0, lo, std::move(c));
}

double derivative_oracle(const SincSeriesSignal& sig, int r, double t) {
  if (r < 0) throw InvalidArgument("derivative_oracle: order must be nonnegative");
  if (r > 6) throw UnsupportedOrderError("derivative_oracle: order " + std::to_string(r) + " > 6");
  return sig.derivative(r, t);
}

SincSeriesSignal parse_signal_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("signal file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("band") || !doc["band"].is_number() ||
      !doc.contains("coeffs") || !doc["coeffs"].is_object()) {
    throw InvalidArgument("signal file: expected {\"band\": number, \"coeffs\": {\"j\": number}}");
  }
  std::map<std::int64_t, double> coeffs;
  for (const auto& [key, value] : doc["coeffs"].items()) {
    std::size_t used = 0;
    std::int64_t j = 0;
    try {
      j = std::stoll(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || key.empty()) {
      throw InvalidArgument("signal file: coefficient key '" + key + "' is not an integer");
    }
    if (!value.is_number()) {
      throw InvalidArgument("signal file: coefficient '" + key + "' is not a number");
    }
    coeffs[j] = value.get<double>();
  }
  if (coeffs.empty()) throw InvalidArgument("signal file: no coefficients");
  return make_sinc_signal(doc["band"].get<double>(), coeffs);
}

SincSeriesSignal load_signal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("signal file: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_signal_json(ss.str());
}

LineSignal line_signal(const SincSeriesSignal& sig, std::string name) {
  LineSignal out;
  out.name = std::move(name);
  out.f = sig.function();
  out.band = sig.band();
  out.sup_bound = sig.sup_bound();
  auto self = std::make_shared<const SincSeriesSignal>(sig);
  out.derivative = RealFunction([self](const double& t) { return self->derivative(1, t); });
  return out;
}

LineSignal hat_signal(double radius) {
  if (!(radius > 0.0)) throw InvalidArgument("hat_signal: radius must be positive");
  LineSignal out;
  out.name = "hat";
  out.f = RealFunction([radius](const double& x) {
    return std::max(0.0, 1.0 - std::fabs(x) / radius);
  });
  out.support = radius;
  out.sup_bound = 1.0;
  return out;
}

LineSignal bump_signal(double radius) {
  if (!(radius > 0.0)) throw InvalidArgument("bump_signal: radius must be positive");
  LineSignal out;
  out.name = "bump";
  out.f = RealFunction([radius](const double& x) {
    if (std::fabs(x) >= radius) return 0.0;
    return 0.5 * (1.0 + std::cos(kPi * x / radius));
  });
  out.support = radius;
  out.sup_bound = 1.0;
  out.derivative = RealFunction([radius](const double& x) {
    if (std::fabs(x) >= radius) return 0.0;
    return -0.5 * kPi / radius * std::sin(kPi * x / radius);
  });
  return out;
}

LineSignal triangle_wave() {
  LineSignal out;
  out.name = "triangle";
  out.f = RealFunction([](const double& x) {
    const double r = x - 2.0 * std::round(0.5 * x);
    return 1.0 - 2.0 * std::fabs(r);
  });
  out.sup_bound = 1.0;
  return out;
}

LineSignal sine_signal(double sigma) {
  if (!(sigma > 0.0)) throw InvalidArgument("sine_signal: sigma must be positive");
  LineSignal out;
  out.name = "sine";
  out.f = RealFunction([sigma](const double& x) { return std::sin(sigma * x); },
                       BernsteinCertificate{sigma});
  out.band = sigma;
  out.sup_bound = 1.0;
  out.derivative = RealFunction([sigma](const double& x) { return sigma * std::cos(sigma * x); });
  return out;
}

SincSeriesSignal sinc_pulse() { return make_sinc_signal(kPi, {{-1, 0.5}, {0, 1.0}, {1, -0.25}}); }

std::vector<std::string> catalog_names() { return {"hat", "bump", "sinc-pulse", "triangle", "sine"}; }

LineSignal catalog_signal(const std::string& name) {
  if (name == "hat") return hat_signal(1.0);
  if (name == "bump") return bump_signal(1.0);
  if (name == "sinc-pulse") return line_signal(sinc_pulse(), "sinc-pulse");
  if (name == "triangle") return triangle_wave();
  if (name == "sine") return sine_signal(kPi);
  throw InvalidArgument("unknown signal '" + name +
                        "' (expected hat, bump, sinc-pulse, triangle or sine)");
}

LineSignal truncate(const LineSignal& sig, double radius) {
  if (!(radius > 0.0)) throw InvalidArgument("truncate: radius must be positive");
  LineSignal out;
  out.name = sig.name + "-truncated";
  const RealFunction f = sig.f;
  out.f = RealFunction([f, radius](const double& x) { return std::fabs(x) <= radius ? f(x) : 0.0; });
  out.support = sig.support ? std::min(*sig.support, radius) : radius;
  out.sup_bound = sig.sup_bound;
  return out;
}

void check_certificates(const LineSignal& sig) {
  if (sig.band && sig.support && sig.sup_bound > 0.0) {
    throw CertificateError("signal '" + sig.name +
                           "' claims both a band and a compact support; only the zero "
                           "function has both");
  }
  if (sig.band && !sig.f.certificate()) {
    throw CertificateError("signal '" + sig.name + "' claims a band its evaluator does not carry");
  }
}

std::vector<double> default_line_probes() { return uniform_grid(-32.0, 32.0, 1025); }

LineGroup translation_group(std::vector<double> probes) {
  return LineGroup(
      "line-translation", [](double t, const double& x) { return x + t; },
      probe_sup_norm<double, double>(std::move(probes)));
}

SchrodingerGroup schrodinger_group(double p, double q, std::vector<double> probes) {
  if (p == 0.0 && q == 0.0) throw InvalidArgument("schrodinger_group: (p, q) must be nonzero");
  SchrodingerGroup::Multiplier mult;
  if (q != 0.0) {
    mult = [p, q](double s, const double& x) {
      const double phase = 2.0 * kPi * s * q * x + kPi * s * s * p * q;
      return std::polar(1.0, phase);
    };
  }
  std::ostringstream name;
  name << "schrodinger(p=" << p << ",q=" << q << ")";
  return SchrodingerGroup(
      name.str(), [p](double s, const double& x) { return x + s * p; },
      probe_sup_norm<double, std::complex<double>>(std::move(probes)), std::move(mult));
}

ComplexFunction schrodinger_vector(const LineSignal& sig, double p, double q) {
  std::optional<BernsteinCertificate> cert;
  if (q == 0.0 && sig.band) cert = BernsteinCertificate{std::fabs(p) * *sig.band};
  if (p == 0.0 && sig.support) cert = BernsteinCertificate{2.0 * kPi * std::fabs(q) * *sig.support};
  const RealFunction f = sig.f;
  return ComplexFunction([f](const double& x) { return std::complex<double>(f(x), 0.0); }, cert);
}

BoasResult<ComplexFunction> position_multiply_via_boas(const LineSignal& sig,
                                                       std::int64_t half_width) {
  if (!sig.support) {
    throw CertificateError("position_multiply_via_boas: signal '" + sig.name +
                           "' has no support certificate");
  }
  const double sigma = 2.0 * kPi * *sig.support;
  const SchrodingerGroup g = schrodinger_group(0.0, 1.0);
  const auto r = boas_apply(g, schrodinger_vector(sig, 0.0, 1.0), build_table(1, sigma, half_width));
  const ComplexFunction d = r.value;
  const std::complex<double> scale(0.0, -1.0 / (2.0 * kPi));
  ComplexFunction value([d, scale](const double& x) { return scale * d(x); }, d.certificate());
  return {value, r.tail_mass, r.tail_bound / (2.0 * kPi)};
}

}  // namespace boas
