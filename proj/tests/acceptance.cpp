// Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "boas/boas_core.hpp"
#include "boas/circle_models.hpp"
#include "boas/cli.hpp"
#include "boas/errors.hpp"
#include "boas/heisenberg_models.hpp"
#include "boas/line_models.hpp"
#include "boas/sinc_kernel.hpp"
#include "boas/sphere_models.hpp"
#include "oracles.hpp"

using namespace boas;
using std::numbers::pi;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double rel_err(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }

// Derivative of a sinc series computed in long double by a 25-point
// finite-difference stencil.
double series_derivative(const SincSeriesSignal& s, int r, double t) {
  const long double band = s.band();
  auto f = [&](long double x) {
    long double acc = 0.0L;
    for (std::int64_t j = s.first(); j <= s.last(); ++j) {
      acc += s.coeff(j) * oracle::sinc_ld(band * x / oracle::kPiL - static_cast<long double>(j));
    }
    return acc;
  };
  return static_cast<double>(oracle::fd_derivative(f, r, t));
}

std::vector<std::int64_t> sweep() {
  std::vector<std::int64_t> ns;
  for (std::int64_t n = 16; n <= 4096; n *= 2) ns.push_back(n);
  return ns;
}

Verdict mass_identity() {
  Verdict v;
  double worst = 0.0;
  for (int r = 1; r <= 4; ++r) {
    for (double sigma : {1.0, pi, 10.0}) {
      double prev = 0.0;
      for (std::int64_t n : {1, 10, 100, 1000, 10000, 100000}) {
        const double m = table_mass(build_table(r, sigma, n));
        v.require(m >= prev, "monotone r=" + std::to_string(r));
        prev = m;
      }
      const double m = table_mass(build_table(r, sigma, 1000000));
      v.require(m >= prev, "monotone at 1e6");
      worst = std::max(worst, std::fabs(m * std::pow(sigma, -r) - 1.0));
    }
  }
  v.require(worst <= 1e-4, "relative gap " + fmt(worst));
  v.note("max relative gap " + fmt(worst));
  return v;
}

Verdict dual_path() {
  Verdict v;
  double worst = 0.0;
  for (int m = 1; m <= 5; ++m) {
    for (std::int64_t k = -100; k <= 100; ++k) {
      const double sign = (k % 2 == 0) ? -1.0 : 1.0;
      worst = std::max(worst, rel_err(coeff_A(m, k),
                                      sign * sinc_derivative(2 * m - 1, 0.5 - static_cast<double>(k))));
      worst = std::max(worst,
                       rel_err(coeff_B(m, k), sign * sinc_derivative(2 * m, -static_cast<double>(k))));
    }
  }
  v.require(worst <= 1e-10, "relative gap " + fmt(worst));
  v.note("max relative gap " + fmt(worst));
  return v;
}

double riesz_with_constant(const TrigPolynomial& p, int n, double t, double constant) {
  double acc = 0.0;
  for (int k = 1; k <= 2 * n; ++k) {
    const double tk = (2.0 * k - 1.0) * pi / (2.0 * n);
    const double s = std::sin(tk / 2.0);
    acc += ((k % 2 == 1) ? 1.0 : -1.0) / (s * s) * p(t + tk);
  }
  return constant * acc;
}

Verdict riesz_exactness() {
  Verdict v;
  oracle::Uniform u(2024);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int degree = 1 + static_cast<int>(u(0.0, 32.0));
    const TrigPolynomial p = random_trig_polynomial(degree, 7000 + i);
    const double t = u(-pi, pi);
    const TrigPolynomial dp = p.derivative();
    const double err = std::fabs(riesz_derivative(p, t) - dp(t)) / (1.0 + dp.grid_sup());
    worst = std::max(worst, err);
  }
  v.require(worst <= 1e-10, "scaled error " + fmt(worst));
  const double printed = riesz_with_constant(TrigPolynomial::sine(1), 1, 0.0, 1.0 / (4.0 * pi));
  v.require(std::fabs(printed - 1.0) > 0.1, "1/(4 pi) constant did not fail");
  v.note("max scaled error " + fmt(worst) + ", 1/(4 pi) gives " + fmt(printed) + " instead of 1");
  return v;
}

Verdict convergence() {
  Verdict v;
  const LineGroup g = translation_group();
  const std::vector<SincSeriesSignal> fixtures = {sinc_pulse(), random_sinc_signal(pi, 5, -4, 4)};
  for (std::size_t fi = 0; fi < fixtures.size(); ++fi) {
    const SincSeriesSignal& sig = fixtures[fi];
    const RealFunction f = sig.function();
    for (int r : {1, 2}) {
      // non-grid evaluation point for both lattices
      const double t = 0.3;
      const double exact = series_derivative(sig, r, t);
      std::vector<std::pair<double, double>> pts;
      for (std::int64_t n : sweep()) {
        const double value = boas_apply(g, f, build_table(r, pi, n)).value(t);
        pts.emplace_back(static_cast<double>(n), std::fabs(value - exact));
      }
      const double slope = cli::fit_slope(pts);
      v.require(slope <= -1.5, "decaying fixture " + std::to_string(fi) + " order " +
                                   std::to_string(r) + " slope " + fmt(slope));
      v.note("decaying f" + std::to_string(fi) + " r" + std::to_string(r) + " slope " + fmt(slope));
    }
  }
  for (double sigma : {1.0, 3.0}) {
    const LineSignal s = sine_signal(sigma);
    std::vector<std::pair<double, double>> pts;
    bool bounded = true;
    for (std::int64_t n : sweep()) {
      const double err = std::fabs(boas_apply(g, s.f, build_table(1, sigma, n)).value(0.0) - sigma);
      bounded = bounded && err <= 1.1 * (2.0 * sigma / (pi * pi)) / static_cast<double>(n);
      pts.emplace_back(static_cast<double>(n), err);
    }
    const double slope = cli::fit_slope(pts);
    v.require(slope >= -1.3 && slope <= -0.8, "resonant slope " + fmt(slope));
    v.require(bounded, "resonant error above 1.1 (2 sigma / pi^2) / N");
    v.note("resonant sigma=" + fmt(sigma) + " slope " + fmt(slope));
  }
  return v;
}

Verdict power_formula() {
  Verdict v;
  const std::int64_t n = 10000;
  const LineGroup g = translation_group();
  const SincSeriesSignal sig = sinc_pulse();
  const RealFunction f = sig.function();
  const auto composed = boas_power(g, f, pi, n, 2);
  const auto table = boas_apply(g, f, build_table(2, pi, n));
  double worst = 0.0;
  for (double x : {-1.7, -0.4, 0.3, 1.25}) {
    worst = std::max(worst, rel_err(composed.value(x), table.value(x)));
  }

  // the merged stencil equals the literal double application
  const CoefficientTable t1 = build_table(1, pi, 200);
  const RealFunction inner = boas_apply(g, f, t1).value;
  const RealFunction nested = boas_apply(g, inner, t1).value;
  const auto merged = boas_power(g, f, pi, 200, 2);
  double nest_gap = 0.0;
  for (double x : {-0.4, 0.3}) nest_gap = std::max(nest_gap, std::fabs(nested(x) - merged.value(x)));
  v.require(nest_gap <= 1e-12, "merged vs nested " + fmt(nest_gap));

  const SphericalHarmonicExpansion e = random_expansion(2, 77);
  const SphereFunction sf = e.function();
  double sphere_worst = 0.0;
  for (const RotationField& field : all_fields()) {
    const SphereGroup sg = rotation_group(field, 4);
    const auto sc = boas_power(sg, sf, 2.0, n, 2);
    const auto st = boas_apply(sg, sf, build_table(2, 2.0, n));
    for (const Vec3& x : {from_angles(0.4, 0.2), from_angles(1.9, -2.3)}) {
      const double exact = field_derivative(sf, field, x, 2);
      if (std::fabs(exact) < 0.05) continue;
      sphere_worst = std::max(sphere_worst, std::fabs(sc.value(x) - st.value(x)) / std::fabs(exact));
    }
  }
  v.require(worst <= 1e-4, "line relative gap " + fmt(worst));
  v.require(sphere_worst <= 1e-4, "sphere relative gap " + fmt(sphere_worst));
  v.note("line " + fmt(worst) + ", sphere " + fmt(sphere_worst) + ", nested " + fmt(nest_gap));
  return v;
}

Verdict q_operator() {
  Verdict v;
  const LineGroup g = translation_group();
  double worst = 0.0;
  for (const SincSeriesSignal& sig : {sinc_pulse(), random_sinc_signal(pi, 9, -4, 4)}) {
    const RealFunction f = sig.function();
    const auto q = q_apply(g, f, 2, pi, 10000);
    const auto b = boas_apply(g, f, build_table(2, pi, 10000));
    for (double x : {0.0, 0.37, -1.2, 2.6}) {
      const double bx = b.value(x);
      if (std::fabs(bx) < 1e-3) continue;
      worst = std::max(worst, rel_err(q.value(x), bx));
    }
  }
  const double series = static_cast<double>(oracle::alternating_inverse_squares(1000000));
  const double gap = std::fabs(series - pi * pi / 6.0);
  v.require(worst <= 1e-4, "Q vs B relative gap " + fmt(worst));
  v.require(gap <= 1e-8, "pi^2/6 gap " + fmt(gap));
  v.note("Q vs B " + fmt(worst) + ", pi^2/6 gap " + fmt(gap));
  return v;
}

Verdict sphere_spectra() {
  Verdict v;
  oracle::Uniform u(31);
  double worst = 0.0;
  for (int l = 0; l <= 16; ++l) {
    for (int m = -l; m <= l; ++m) {
      const SphericalHarmonicExpansion y = SphericalHarmonicExpansion::basis(l, m);
      int checked = 0;
      while (checked < 2) {
        const Vec3 x = from_angles(std::acos(u(-1.0, 1.0)), u(0.0, 2.0 * pi));
        const double value = y(x);
        if (std::fabs(value) < 0.05) continue;
        const double lap = laplace_beltrami(y, x);
        const double err = l == 0 ? std::fabs(lap) : std::fabs(lap / value - l * (l + 1.0)) / (l * (l + 1.0));
        worst = std::max(worst, err);
        ++checked;
      }
    }
  }
  double comm = 0.0;
  for (int degree = 1; degree <= 8; ++degree) {
    comm = std::max(comm, commutator_residual(random_expansion(degree, 300 + degree)));
  }
  const SphericalHarmonicExpansion e = random_expansion(8, 31);
  const SphereFunction f = e.function();
  const SphereQuadrature q = make_sphere_quadrature(8);
  double commute = 0.0;
  for (const RotationField& field : all_fields()) {
    const SphereGroup g = rotation_group(field, 8);
    for (double tau : {0.3, 1.1}) {
      const SphereFunction a = laplace_beltrami_function(g.apply(tau, f));
      const SphereFunction b = g.apply(tau, laplace_beltrami_function(f));
      commute = std::max(commute, sphere_l2_norm(a - b, q));
    }
  }
  v.require(worst <= 1e-8, "eigenvalue error " + fmt(worst));
  v.require(comm <= 1e-8, "commutator residual " + fmt(comm));
  v.require(commute <= 1e-8, "rotation commutation " + fmt(commute));
  v.note("eigen " + fmt(worst) + ", commutator " + fmt(comm) + ", commutation " + fmt(commute));
  return v;
}

Verdict product_theorem() {
  Verdict v;
  const SphereFunction f = random_expansion(2, 41).function();
  const SphereFunction h = random_expansion(2, 42).function();
  const SphereFunction fh = product(f, h);
  // projection evaluates the product pointwise, independent of its certificate
  const SphericalHarmonicExpansion pr =
      project([&](const Vec3& x) { return f(x) * h(x); }, 8);
  const double above = pr.norm_above(4);
  const Vec3 c{0.3, -0.7, 1.1};
  auto D = [&c](const SphereFunction& s, const Vec3& x) {
    double acc = 0.0;
    for (std::size_t j = 0; j < 3; ++j) acc += c[j] * field_derivative(s, all_fields()[j], x, 1);
    return acc;
  };
  oracle::Uniform u(10);
  double leibniz = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Vec3 x = from_angles(std::acos(u(-1.0, 1.0)), u(0.0, 2.0 * pi));
    leibniz = std::max(leibniz, std::fabs(D(fh, x) - (f(x) * D(h, x) + h(x) * D(f, x))));
  }
  v.require(above <= 1e-10, "norm above degree 4 " + fmt(above));
  v.require(leibniz <= 1e-8, "Leibniz " + fmt(leibniz));
  v.note("above-4 norm " + fmt(above) + ", Leibniz " + fmt(leibniz));
  return v;
}

Verdict smoothing() {
  Verdict v;
  const double a_gap = rel_err(smoothing_normalizer(), 1.0 / oracle::kernel_integral());
  const double c_gap =
      rel_err(smoothing_constant(), oracle::kernel_first_moment(smoothing_normalizer()));
  v.require(a_gap <= 1e-6, "normalizer " + fmt(a_gap));
  v.require(c_gap <= 1e-6, "C_h " + fmt(c_gap));
  const LineGroup g = translation_group(uniform_grid(-4.0, 4.0, 257));
  const LineSignal tri = triangle_wave();
  const SmoothingKernelSpec spec = make_smoothing_spec(1e-5);
  double ratio = 0.0;
  for (double sigma : {1.0, 2.0, 4.0, 8.0, 16.0}) {
    const auto sm = smooth(g, tri.f, sigma, spec);
    const double slack = smoothing_slack(g, tri.f, sigma, spec, sm);
    const double dist = g.norm(tri.f - sm.value);
    const double bound = smoothing_constant() * modulus(g, tri.f, 1.0 / sigma, 64) + slack;
    v.require(dist <= bound, "sigma " + fmt(sigma) + ": " + fmt(dist) + " > " + fmt(bound));
    ratio = std::max(ratio, dist / bound);
  }
  v.note("a gap " + fmt(a_gap) + ", C_h gap " + fmt(c_gap) + ", max distance/bound " + fmt(ratio));
  return v;
}

Verdict schrodinger() {
  Verdict v;
  const LineSignal hat = hat_signal(1.0);
  double law = 0.0;
  oracle::Uniform u(50);
  for (const auto& [p, q] : std::vector<std::pair<double, double>>{{0.3, -1.2}, {1.0, 0.0}, {0.0, 0.7}}) {
    const SchrodingerGroup g = schrodinger_group(p, q);
    const ComplexFunction hv = schrodinger_vector(hat, p, q);
    for (int i = 0; i < 50; ++i) {
      const double s = u(-2.0, 2.0);
      const double s2 = u(-2.0, 2.0);
      const double x = u(-1.5, 1.5);
      const std::complex<double> composed = g.apply(s, g.apply(s2, hv))(x);
      const double st = s + s2;
      const std::complex<double> closed =
          std::exp(std::complex<double>(0.0, 2.0 * pi * st * q * x + pi * st * st * p * q)) *
          hat(x + st * p);
      law = std::max(law, std::abs(composed - closed));
      law = std::max(law, std::abs(composed - g.apply(st, hv)(x)));
    }
  }
  const auto r = position_multiply_via_boas(hat, 10000);
  double err = 0.0;
  for (double x : default_line_probes()) err = std::max(err, std::abs(r.value(x) - x * hat(x)));
  bool rejected = true;
  for (const std::string& name : catalog_names()) {
    LineSignal forged = catalog_signal(name);
    if (!forged.band) forged.band = 1.0;
    if (!forged.support) forged.support = 1.0;
    try {
      check_certificates(forged);
      rejected = false;
    } catch (const CertificateError&) {
    }
  }
  v.require(law <= 1e-12, "group law " + fmt(law));
  v.require(err <= 1e-3, "position multiplication " + fmt(err));
  v.require(rejected, "a forged dual certificate was accepted");
  v.note("group law " + fmt(law) + ", x f(x) sup error " + fmt(err));
  return v;
}

Verdict heisenberg() {
  Verdict v;
  const SincSeriesSignal g = sinc_pulse();
  const SincSeriesSignal w = random_sinc_signal(1.0, 3, -2, 2);
  const HeisenbergFunction gw(Factor(g), Factor(1.0), Factor(w));
  const HeisenbergFunction full(Factor(random_sinc_signal(1.0, 1, -2, 2)),
                                Factor(random_sinc_signal(1.5, 2, -2, 2)), Factor(w));
  struct Pinned {
    HeisenbergField field;
    const HeisenbergFunction* f;
    Point3 p;
  };
  const std::vector<Pinned> pinned = {
      {HeisenbergField::X, &gw, {0.0, 2.0, 0.0}},
      {HeisenbergField::Y, &full, {0.5, -1.0, 0.25}},
      {HeisenbergField::T, &full, {-1.2, 0.7, 1.5}},
      {HeisenbergField::X, &full, {1.1, 1.3, -0.6}},
      {HeisenbergField::Y, &gw, {-2.0, 0.4, 0.9}},
  };
  double ratio = 0.0;
  for (const Pinned& pin : pinned) {
    const auto r = heisenberg_boas_point(pin.field, *pin.f, pin.p, 10000);
    const double lib = heisenberg_oracle(pin.field, *pin.f, pin.p);
    auto along = [&](long double tau) {
      return static_cast<long double>(
          (*pin.f)(heisenberg_flow(pin.field, static_cast<double>(tau), pin.p)));
    };
    const double fd = static_cast<double>(oracle::fd_derivative(along, 1, 0.0L));
    v.require(std::fabs(lib - fd) <= 1e-9, "factor oracle vs orbit difference " + fmt(lib - fd));
    v.require(std::fabs(r.value - lib) <= r.tail_bound,
              to_string(pin.field) + " error " + fmt(std::fabs(r.value - lib)));
    ratio = std::max(ratio, std::fabs(r.value - lib) / r.tail_bound);
  }
  double comm = 0.0;
  for (const Point3& p : {Point3{0.0, 0.0, 0.0}, Point3{0.7, -0.4, 1.1}}) {
    const CommutatorCheck c = heisenberg_commutator(full, p, 300);
    v.require(std::fabs(c.value - c.oracle) <= 10.0 * c.tail_bound, "nested commutator");
    comm = std::max(comm, std::fabs(c.value - c.oracle) / c.tail_bound);
  }
  v.note("max error/tail " + fmt(ratio) + ", nested residual/bound " + fmt(comm));
  return v;
}

Verdict determinism() {
  Verdict v;
  const std::vector<std::vector<std::string>> commands = {
      {"coeffs", "--order", "2", "--sigma", "3", "--half-width", "10"},
      {"line-diff", "--signal", "sinc-pulse", "--order", "1", "--sigma", "3.1415926535", "--sweep",
       "16:4096"},
      {"circle-riesz", "--degree", "12", "--seed", "5", "--point", "0.7"},
      {"sphere-lap", "--degree", "4", "--l", "2", "--m", "0", "--point", "0.7,1.3"},
      {"sphere-commutator", "--degree", "6", "--seed", "2"},
      {"smooth", "--signal", "triangle", "--sigma", "2", "--tol", "1e-5"},
      {"schrodinger", "--p", "0", "--q", "1", "--signal", "hat", "--half-width", "1000",
       "--points", "0.1,0.5"},
      {"heisenberg", "--field", "X", "--point", "0.3,2,0", "--half-width", "1000"},
      {"bench", "--methods", "boas,fd2,fd4", "--signal", "sinc-pulse", "--sweep", "16:1024"},
      {"bench", "--methods", "boas,fd2", "--signal", "sine", "--sweep", "16:256", "--format",
       "csv"},
  };
  auto strip = [](const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::string out;
    while (std::getline(in, line)) {
      if (line.find("runtime_ms") == std::string::npos) out += line + '\n';
    }
    return out;
  };
  for (const auto& c : commands) {
    std::ostringstream a;
    std::ostringstream b;
    std::ostringstream err;
    const int ca = cli::run(c, a, err);
    const int cb = cli::run(c, b, err);
    v.require(ca == 0 && cb == 0, c[0] + " exit code");
    v.require(strip(a.str()) == strip(b.str()), c[0] + " output differs");
  }
  v.note(std::to_string(commands.size()) + " commands");
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Verdict()> check;
  };
  const std::vector<Criterion> criteria = {
      {"coefficient mass identity", mass_identity},
      {"dual-path coefficients", dual_path},
      {"Riesz exactness", riesz_exactness},
      {"Boas convergence regimes", convergence},
      {"power formula", power_formula},
      {"Q operator", q_operator},
      {"sphere spectra", sphere_spectra},
      {"product theorem", product_theorem},
      {"smoothing and density", smoothing},
      {"Schrodinger model", schrodinger},
      {"Heisenberg model", heisenberg},
      {"CLI determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].check();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!v.pass) ++failures;
    std::printf("%s %2zu %-28s %6.2fs  %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                secs, v.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
