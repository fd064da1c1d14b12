#include "boas/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <fstream>
#include <functional>
#include <future>
#include <memory>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "boas/boas_core.hpp"
#include "boas/circle_models.hpp"
#include "boas/errors.hpp"
#include "boas/heisenberg_models.hpp"
#include "boas/line_models.hpp"
#include "boas/sinc_kernel.hpp"
#include "boas/sphere_models.hpp"

namespace boas::cli {

namespace {

using std::numbers::pi;

// ---------------------------------------------------------------------------
// Argument helpers

std::vector<double> parse_doubles(const std::string& text, const std::string& flag,
                                  std::size_t expected = 0) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || !std::isfinite(v)) {
      throw InvalidArgument(flag + ": cannot parse '" + item + "' as a number");
    }
    out.push_back(v);
  }
  if (out.empty()) throw InvalidArgument(flag + ": expected a comma-separated list");
  if (expected != 0 && out.size() != expected) {
    throw InvalidArgument(flag + ": expected " + std::to_string(expected) + " values");
  }
  return out;
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

Json row(Json inputs, double value, std::optional<double> oracle = std::nullopt,
         std::optional<double> tail_bound = std::nullopt) {
  Json r = std::move(inputs);
  r["value"] = value;
  if (oracle) {
    const double abs_error = std::fabs(value - *oracle);
    r["oracle"] = *oracle;
    r["abs_error"] = abs_error;
    r["rel_error"] = *oracle != 0.0 ? Json(abs_error / std::fabs(*oracle)) : Json(nullptr);
  }
  if (tail_bound) r["tail_bound"] = *tail_bound;
  return r;
}

template <class F>
auto parallel_map(std::size_t n, F f) {
  using T = decltype(f(std::size_t{0}));
  std::vector<std::future<T>> jobs;
  jobs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) jobs.push_back(std::async(std::launch::async, f, i));
  std::vector<T> out;
  out.reserve(n);
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

// ---------------------------------------------------------------------------
// Signals

struct BandedSignal {
  RealFunction f;
  double band = 0.0;
  std::function<double(int, double)> derivative;
};

BandedSignal banded_signal(const std::string& name, const std::string& file) {
  if (!file.empty() || name == "sinc-pulse") {
    auto sig = std::make_shared<const SincSeriesSignal>(file.empty() ? sinc_pulse()
                                                                     : load_signal_file(file));
    return {sig->function(), sig->band(),
            [sig](int r, double t) { return sig->derivative(r, t); }};
  }
  const LineSignal sig = catalog_signal(name);
  if (name == "sine") {
    const double s = *sig.band;
    return {sig.f, s, [s](int r, double t) {
              return std::pow(s, r) * std::sin(s * t + 0.5 * r * pi);
            }};
  }
  throw CertificateError("signal '" + name +
                         "' is not bandlimited; Boas differentiation needs a band certificate");
}

Factor heisenberg_factor(const std::string& name, std::uint64_t seed) {
  if (name == "sinc-pulse") return Factor(sinc_pulse());
  if (name == "one") return Factor(1.0);
  if (name == "random") return Factor(random_sinc_signal(1.0, seed, -3, 3));
  throw InvalidArgument("unknown factor '" + name + "' (sinc-pulse, one, random)");
}

// ---------------------------------------------------------------------------
// Options

struct Options {
  std::string format = "json";
  int order = 1;
  double sigma = 0.0;
  long long half_width = 0;
  std::string signal;
  std::string signal_file;
  std::string points;
  std::string sweep;
  std::uint64_t seed = 1;
  int degree = 0;
  std::string point;
  std::string coeffs_file;
  std::optional<int> l;
  std::optional<int> m;
  std::string method = "riesz";
  double tol = 0.0;
  double p = 0.0;
  double q = 0.0;
  std::string field;
  std::string g = "sinc-pulse";
  std::string h = "one";
  std::string w = "sinc-pulse";
  bool commutator = false;
  std::string methods = "boas,fd2,fd4";
};

// ---------------------------------------------------------------------------
// Commands

void cmd_coeffs(const Options& o, RunReport& rep) {
  rep.parameters = {{"order", o.order}, {"sigma", o.sigma}, {"half_width", o.half_width}};
  const CoefficientTable table = build_table(o.order, o.sigma, o.half_width);
  double mass = 0.0;
  for (const auto& e : table.entries()) {
    mass += std::fabs(e.weight);
    rep.rows.push_back({{"k", e.k}, {"weight", e.weight}, {"offset", e.offset}, {"mass", mass}});
  }
}

void cmd_line_diff(const Options& o, RunReport& rep) {
  if (o.points.empty() && o.sweep.empty()) {
    throw InvalidArgument("line-diff: one of --points or --sweep is required");
  }
  const BandedSignal sig = banded_signal(o.signal, o.signal_file);
  const std::vector<double> ts =
      o.points.empty() ? std::vector<double>{0.3} : parse_doubles(o.points, "--points");
  rep.parameters = {{"signal", o.signal_file.empty() ? o.signal : o.signal_file},
                    {"order", o.order},
                    {"sigma", o.sigma},
                    {"points", ts}};
  std::vector<long long> ns;
  if (o.sweep.empty()) {
    const long long n = o.half_width > 0 ? o.half_width : 1024;
    rep.parameters["half_width"] = n;
    ns.push_back(n);
  } else {
    rep.parameters["sweep"] = o.sweep;
    ns = parse_sweep(o.sweep);
  }
  const LineGroup g = translation_group();
  auto blocks = parallel_map(ns.size(), [&](std::size_t i) {
    const auto r = boas_apply(g, sig.f, build_table(o.order, o.sigma, ns[i]));
    std::vector<Json> rows;
    double worst = 0.0;
    for (double t : ts) {
      const double oracle = sig.derivative(o.order, t);
      const double value = r.value(t);
      worst = std::max(worst, std::fabs(value - oracle));
      rows.push_back(row({{"half_width", ns[i]}, {"t", t}}, value, oracle, r.tail_bound));
    }
    return std::make_pair(rows, worst);
  });
  std::vector<std::pair<double, double>> fit;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    for (auto& r : blocks[i].first) rep.rows.push_back(std::move(r));
    fit.emplace_back(static_cast<double>(ns[i]), blocks[i].second);
  }
  if (!o.sweep.empty()) rep.fitted_slope = fit_slope(fit);
}

void cmd_circle_riesz(const Options& o, RunReport& rep) {
  TrigPolynomial p;
  if (!o.coeffs_file.empty()) {
    std::ifstream in(o.coeffs_file);
    if (!in) throw InvalidArgument("cannot open " + o.coeffs_file);
    std::ostringstream ss;
    ss << in.rdbuf();
    p = parse_trig_json(ss.str());
    rep.parameters = {{"coeffs_file", o.coeffs_file}};
  } else {
    if (o.degree < 1) throw InvalidArgument("circle-riesz: --degree must be >= 1");
    p = random_trig_polynomial(o.degree, o.seed);
    rep.parameters = {{"degree", o.degree}, {"seed", o.seed}};
  }
  const std::vector<double> ts = parse_doubles(o.point, "--point");
  rep.parameters["point"] = ts;
  const TrigPolynomial dp = p.derivative();
  for (double t : ts) rep.rows.push_back(row({{"t", t}}, riesz_derivative(p, t), dp(t)));
}

SphereMethod sphere_method(const Options& o) {
  if (o.method == "riesz") return SphereMethod::riesz();
  if (o.half_width < 1) throw InvalidArgument("--method boas needs --half-width");
  return SphereMethod::boas(o.half_width);
}

void cmd_sphere_lap(const Options& o, RunReport& rep) {
  if (o.l.has_value() != o.m.has_value()) {
    throw InvalidArgument("sphere-lap: --l and --m go together");
  }
  const std::vector<double> angles = parse_doubles(o.point, "--point", 2);
  const Vec3 x = from_angles(angles[0], angles[1]);
  rep.parameters = {{"degree", o.degree}};
  SphericalHarmonicExpansion e(o.degree);
  if (o.l) {
    if (*o.l < 0 || *o.l > o.degree || std::abs(*o.m) > *o.l) {
      throw InvalidArgument("sphere-lap: need |m| <= l <= degree");
    }
    e = SphericalHarmonicExpansion::basis(*o.l, *o.m, o.degree);
    rep.parameters["l"] = *o.l;
    rep.parameters["m"] = *o.m;
  } else {
    e = random_expansion(o.degree, o.seed);
    rep.parameters["seed"] = o.seed;
  }
  rep.parameters["point"] = angles;
  rep.parameters["method"] = o.method;
  if (o.method == "boas") rep.parameters["half_width"] = o.half_width;

  SphericalHarmonicExpansion scaled(o.degree);
  for (int l = 0; l <= o.degree; ++l) {
    for (int m = -l; m <= l; ++m) scaled.set_coeff(l, m, l * (l + 1.0) * e.coeff(l, m));
  }
  const double value = laplace_beltrami(e, x, sphere_method(o));
  Json r = row({{"theta", angles[0]}, {"phi", angles[1]}}, value, scaled(x));
  const double fx = e(x);
  if (o.l) r["ratio"] = fx != 0.0 ? Json(value / fx) : Json(nullptr);
  rep.rows.push_back(std::move(r));
}

void cmd_sphere_commutator(const Options& o, RunReport& rep) {
  rep.parameters = {{"degree", o.degree}, {"seed", o.seed}};
  const SphericalHarmonicExpansion e = random_expansion(o.degree, o.seed);
  rep.rows.push_back(row({{"degree", o.degree}}, commutator_residual(e), 0.0));
}

void cmd_smooth(const Options& o, RunReport& rep) {
  rep.parameters = {{"signal", o.signal}, {"sigma", o.sigma}, {"tol", o.tol}};
  const LineSignal sig = catalog_signal(o.signal);
  const LineGroup g = translation_group();
  const SmoothingKernelSpec spec = make_smoothing_spec(o.tol);
  const auto sm = smooth(g, sig.f, o.sigma, spec);
  const double error = g.norm(sig.f - sm.value);
  const double omega = modulus(g, sig.f, 1.0 / o.sigma, 64);
  const double slack = smoothing_slack(g, sig.f, o.sigma, spec, sm);
  const double bound = smoothing_constant() * omega + slack;
  Json r = row({{"sigma", o.sigma}}, error);
  r["modulus"] = omega;
  r["slack"] = slack;
  r["bound"] = bound;
  r["within_bound"] = error <= bound;
  rep.rows.push_back(std::move(r));
}

void cmd_schrodinger(const Options& o, RunReport& rep) {
  const std::vector<double> xs = parse_doubles(o.points, "--points");
  rep.parameters = {{"p", o.p},           {"q", o.q},       {"signal", o.signal},
                    {"half_width", o.half_width}, {"points", xs}};
  const LineSignal sig = catalog_signal(o.signal);
  check_certificates(sig);
  const SchrodingerGroup g = schrodinger_group(o.p, o.q);
  const ComplexFunction v = schrodinger_vector(sig, o.p, o.q);
  const auto cert = g.certificate(v);
  if (!cert) {
    throw CertificateError(
        "schrodinger: no Bernstein certificate for this (p, q, signal); "
        "q = 0 needs a bandlimited signal, p = 0 a compactly supported one, and "
        "p, q both nonzero is never certified");
  }
  const double sigma = std::max(cert->sigma, 1e-300);
  rep.parameters["sigma"] = sigma;
  const auto r = boas_apply(g, v, build_table(1, sigma, o.half_width));
  for (double x : xs) {
    const std::complex<double> value = r.value(x);
    Json out = {{"x", x}, {"value_re", value.real()}, {"value_im", value.imag()}};
    if (o.p == 0.0 || sig.derivative) {
      const double fp = o.p == 0.0 ? 0.0 : (*sig.derivative)(x);
      const std::complex<double> oracle =
          std::complex<double>(0.0, 2.0 * pi * o.q * x) * sig(x) + o.p * fp;
      out["oracle_re"] = oracle.real();
      out["oracle_im"] = oracle.imag();
      out["abs_error"] = std::abs(value - oracle);
    }
    out["tail_bound"] = r.tail_bound;
    rep.rows.push_back(std::move(out));
  }
}

void cmd_heisenberg(const Options& o, RunReport& rep) {
  const HeisenbergField field = parse_heisenberg_field(o.field);
  const std::vector<double> pv = parse_doubles(o.point, "--point", 3);
  const Point3 p{pv[0], pv[1], pv[2]};
  rep.parameters = {{"field", o.field}, {"point", pv},     {"half_width", o.half_width},
                    {"g", o.g},         {"h", o.h},        {"w", o.w},
                    {"seed", o.seed}};
  const HeisenbergFunction f(heisenberg_factor(o.g, o.seed), heisenberg_factor(o.h, o.seed + 1),
                             heisenberg_factor(o.w, o.seed + 2));
  const Json where = {{"x", p[0]}, {"y", p[1]}, {"t", p[2]}};
  const auto r = heisenberg_boas_point(field, f, p, o.half_width);
  Json first = {{"field", to_string(field)}};
  first.update(where);
  first["sigma"] = point_bandwidth(field, f, p);
  rep.rows.push_back(row(first, r.value, heisenberg_oracle(field, f, p), r.tail_bound));
  if (o.commutator) {
    const CommutatorCheck c = heisenberg_commutator(f, p, o.half_width);
    Json second = {{"field", "[X,Y]"}};
    second.update(where);
    rep.rows.push_back(row(second, c.value, c.oracle, c.tail_bound));
  }
}

Stencil fd_stencil(const std::string& method, double h) {
  if (method == "fd2") return {{-0.5 / h, 0.5 / h}, {-h, h}};
  return {{1.0 / (12.0 * h), -8.0 / (12.0 * h), 8.0 / (12.0 * h), -1.0 / (12.0 * h)},
          {-2.0 * h, -h, h, 2.0 * h}};
}

void cmd_bench(const Options& o, RunReport& rep) {
  const std::vector<std::string> methods = split_names(o.methods);
  for (const auto& m : methods) {
    if (m != "boas" && m != "fd2" && m != "fd4") {
      throw InvalidArgument("bench: unknown method '" + m + "' (boas, fd2, fd4)");
    }
  }
  if (methods.empty()) throw InvalidArgument("bench: --methods is empty");
  const BandedSignal sig = banded_signal(o.signal, o.signal_file);
  const std::vector<double> ts =
      o.points.empty() ? std::vector<double>{0.3} : parse_doubles(o.points, "--points");
  const std::vector<long long> ns = parse_sweep(o.sweep);
  rep.parameters = {{"methods", methods},
                    {"signal", o.signal_file.empty() ? o.signal : o.signal_file},
                    {"sweep", o.sweep},
                    {"points", ts}};
  const LineGroup g = translation_group();
  const double sigma = sig.band;

  struct Cell {
    Json row;
    double error;
  };
  const std::size_t cells = ns.size() * methods.size();
  auto results = parallel_map(cells, [&](std::size_t idx) {
    const long long n = ns[idx / methods.size()];
    const std::string& method = methods[idx % methods.size()];
    auto counter = std::make_shared<std::atomic<long long>>(0);
    const RealFunction base = sig.f;
    const RealFunction counted(
        [base, counter](const double& x) {
          counter->fetch_add(1, std::memory_order_relaxed);
          return base(x);
        },
        base.certificate());
    Stencil s;
    Json inputs = {{"method", method}, {"half_width", n}};
    if (method == "boas") {
      require_certificate(g, counted, sigma);
      s = lattice_stencil(build_table(1, sigma, n)).materialize();
      inputs["step"] = nullptr;
    } else {
      const double h = 1.0 / static_cast<double>(n);
      s = fd_stencil(method, h);
      inputs["step"] = h;
    }
    const RealFunction d = superpose(g, s, counted);
    double worst = 0.0;
    for (double t : ts) worst = std::max(worst, std::fabs(d(t) - sig.derivative(1, t)));
    Json r = std::move(inputs);
    r["abs_error"] = worst;
    r["evaluations"] = counter->load();
    return Cell{r, worst};
  });
  Json slopes = Json::object();
  for (std::size_t mi = 0; mi < methods.size(); ++mi) {
    std::vector<std::pair<double, double>> fit;
    for (std::size_t ni = 0; ni < ns.size(); ++ni) {
      fit.emplace_back(static_cast<double>(ns[ni]), results[ni * methods.size() + mi].error);
    }
    slopes[methods[mi]] = fit_slope(fit);
  }
  for (auto& c : results) rep.rows.push_back(std::move(c.row));
  rep.fitted_slope = slopes;
}

std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  if (!v.is_string()) return v.dump();
  const std::string s = v.get<std::string>();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

// ---------------------------------------------------------------------------

Json to_json(const RunReport& report) {
  Json j;
  j["command"] = report.command;
  j["parameters"] = report.parameters;
  j["rows"] = report.rows;
  if (report.fitted_slope) j["fitted_slope"] = *report.fitted_slope;
  j["runtime_ms"] = report.runtime_ms;
  return j;
}

std::string to_csv(const RunReport& report) {
  std::ostringstream out;
  out << "# command: " << report.command << '\n';
  out << "# parameters: " << report.parameters.dump() << '\n';
  if (report.fitted_slope) out << "# fitted_slope: " << report.fitted_slope->dump() << '\n';
  out << "# runtime_ms: " << Json(report.runtime_ms).dump() << '\n';
  std::vector<std::string> columns;
  for (const auto& r : report.rows) {
    for (const auto& [key, _] : r.items()) {
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
    }
  }
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  for (const auto& r : report.rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      out << (i ? "," : "");
      if (r.contains(columns[i])) out << csv_cell(r[columns[i]]);
    }
    out << '\n';
  }
  return out.str();
}

double fit_slope(const std::vector<std::pair<double, double>>& points) {
  std::vector<std::pair<double, double>> logs;
  for (const auto& [n, e] : points) {
    if (!(n > 0.0) || !(e >= 0.0) || !std::isfinite(e)) {
      throw InvalidArgument("fit_slope: need N > 0 and finite errors >= 0");
    }
    if (e == 0.0) continue;
    logs.emplace_back(std::log2(n), std::log2(e));
  }
  if (logs.size() < 4) {
    throw InsufficientDataError("fit_slope: " + std::to_string(logs.size()) +
                                " usable points, at least 4 required");
  }
  double mx = 0.0;
  double my = 0.0;
  for (const auto& [x, y] : logs) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(logs.size());
  my /= static_cast<double>(logs.size());
  double sxy = 0.0;
  double sxx = 0.0;
  for (const auto& [x, y] : logs) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
  }
  if (sxx == 0.0) throw InsufficientDataError("fit_slope: all N are equal");
  return sxy / sxx;
}

std::vector<long long> parse_sweep(const std::string& text) {
  const auto colon = text.find(':');
  long long lo = 0;
  long long hi = 0;
  try {
    if (colon == std::string::npos) throw std::invalid_argument("");
    std::size_t a = 0;
    std::size_t b = 0;
    lo = std::stoll(text.substr(0, colon), &a);
    hi = std::stoll(text.substr(colon + 1), &b);
    if (a != colon || b != text.size() - colon - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw InvalidArgument("--sweep: expected NMIN:NMAX, got '" + text + "'");
  }
  if (lo < 1 || hi < lo) throw InvalidArgument("--sweep: need 1 <= NMIN <= NMAX");
  std::vector<long long> out;
  for (long long n = lo; n <= hi; n *= 2) out.push_back(n);
  return out;
}

const std::string& grammar() {
  static const std::string text =
      "usage: boas <command> [options] [--format json|csv]\n"
      "  coeffs --order R --sigma S --half-width N\n"
      "  line-diff --signal NAME|--signal-file PATH --order R --sigma S\n"
      "            (--points t1,t2,...|--sweep NMIN:NMAX) [--half-width N] [--seed K]\n"
      "  circle-riesz --degree N --seed K --point T | --coeffs-file PATH --point T\n"
      "  sphere-lap --degree N (--l L --m M | --seed K) --point THETA,PHI\n"
      "             [--method riesz|boas --half-width N]\n"
      "  sphere-commutator --degree N --seed K\n"
      "  smooth --signal NAME --sigma S --tol EPS\n"
      "  schrodinger --p P --q Q --signal NAME --half-width N --points x1,...\n"
      "  heisenberg --field X|Y|T --point x,y,t --half-width N\n"
      "             [--g F --h F --w F] [--seed K] [--commutator]\n"
      "  bench --methods boas,fd2,fd4 --signal NAME --sweep NMIN:NMAX [--points t1,...]\n"
      "signals: hat, bump, sinc-pulse, triangle, sine; factors: sinc-pulse, one, random\n";
  return text;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Boas-type derivative formulas over one-parameter groups", "boas"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* coeffs = app.add_subcommand("coeffs", "Boas weight table");
  coeffs->add_option("--order", o.order)->required();
  coeffs->add_option("--sigma", o.sigma)->required();
  coeffs->add_option("--half-width", o.half_width)->required();

  auto add_signal = [&](CLI::App* sub) {
    auto* name = sub->add_option("--signal", o.signal);
    auto* file = sub->add_option("--signal-file", o.signal_file);
    name->excludes(file);
  };

  auto* line = app.add_subcommand("line-diff", "Boas derivative of a line signal");
  add_signal(line);
  line->add_option("--order", o.order)->required();
  line->add_option("--sigma", o.sigma)->required();
  line->add_option("--points", o.points);
  line->add_option("--sweep", o.sweep);
  line->add_option("--half-width", o.half_width);
  line->add_option("--seed", o.seed);

  auto* circle = app.add_subcommand("circle-riesz", "Riesz derivative of a trig polynomial");
  circle->add_option("--degree", o.degree);
  circle->add_option("--seed", o.seed);
  circle->add_option("--coeffs-file", o.coeffs_file);
  circle->add_option("--point", o.point)->required();

  auto* lap = app.add_subcommand("sphere-lap", "Laplace-Beltrami operator on a harmonic");
  lap->add_option("--degree", o.degree)->required();
  lap->add_option("--l", o.l);
  lap->add_option("--m", o.m);
  lap->add_option("--seed", o.seed);
  lap->add_option("--point", o.point)->required();
  lap->add_option("--method", o.method)->check(CLI::IsMember({"riesz", "boas"}));
  lap->add_option("--half-width", o.half_width);

  auto* comm = app.add_subcommand("sphere-commutator", "[D12, D23] + D13 residual");
  comm->add_option("--degree", o.degree)->required();
  comm->add_option("--seed", o.seed)->required();

  auto* sm = app.add_subcommand("smooth", "smoothing operator against the modulus bound");
  sm->add_option("--signal", o.signal)->required();
  sm->add_option("--sigma", o.sigma)->required();
  sm->add_option("--tol", o.tol)->required();

  auto* sch = app.add_subcommand("schrodinger", "Boas generator of a Schrodinger group");
  sch->add_option("--p", o.p)->required();
  sch->add_option("--q", o.q)->required();
  sch->add_option("--signal", o.signal)->required();
  sch->add_option("--half-width", o.half_width)->required();
  sch->add_option("--points", o.points)->required();

  auto* hei = app.add_subcommand("heisenberg", "Boas derivative along a Heisenberg field");
  hei->set_help_flag("--help", "print help");
  hei->add_option("--field", o.field)->required()->check(CLI::IsMember({"X", "Y", "T"}));
  hei->add_option("--point", o.point)->required();
  hei->add_option("--half-width", o.half_width)->required();
  hei->add_option("--g", o.g);
  hei->add_option("--h", o.h);
  hei->add_option("--w", o.w);
  hei->add_option("--seed", o.seed);
  hei->add_flag("--commutator", o.commutator);

  auto* bench = app.add_subcommand("bench", "accuracy and cost of Boas and finite differences");
  bench->add_option("--methods", o.methods)->required();
  add_signal(bench);
  bench->add_option("--sweep", o.sweep)->required();
  bench->add_option("--points", o.points);

  auto usage = [&](const std::string& message) {
    err << "error: " << message << '\n' << grammar();
    return 2;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help() << grammar();
    return 0;
  } catch (const CLI::ParseError& e) {
    return usage(e.what());
  }

  RunReport rep;
  const auto start = std::chrono::steady_clock::now();
  try {
    const CLI::App* sub = app.get_subcommands().front();
    rep.command = sub->get_name();
    if ((sub == line || sub == bench) && o.signal.empty() && o.signal_file.empty()) {
      return usage(rep.command + ": --signal or --signal-file is required");
    }
    if (sub == lap && o.method == "riesz" && o.half_width != 0) {
      return usage("sphere-lap: --half-width applies to --method boas");
    }
    if (sub == coeffs) cmd_coeffs(o, rep);
    else if (sub == line) cmd_line_diff(o, rep);
    else if (sub == circle) cmd_circle_riesz(o, rep);
    else if (sub == lap) cmd_sphere_lap(o, rep);
    else if (sub == comm) cmd_sphere_commutator(o, rep);
    else if (sub == sm) cmd_smooth(o, rep);
    else if (sub == sch) cmd_schrodinger(o, rep);
    else if (sub == hei) cmd_heisenberg(o, rep);
    else cmd_bench(o, rep);
  } catch (const CertificateError& e) {
    err << "validation error: " << e.what() << '\n';
    return 1;
  } catch (const QuadratureError& e) {
    err << "validation error: " << e.what() << '\n';
    return 1;
  } catch (const MissingAuxiliaryError& e) {
    err << "validation error: " << e.what() << '\n';
    return 1;
  } catch (const InsufficientDataError& e) {
    err << "validation error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    return usage(e.what());
  } catch (const std::domain_error& e) {
    return usage(e.what());
  } catch (const std::range_error& e) {
    return usage(e.what());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  rep.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (o.format == "csv") {
    out << to_csv(rep);
  } else {
    out << to_json(rep).dump(2) << '\n';
  }
  return 0;
}

}  // namespace boas::cli
