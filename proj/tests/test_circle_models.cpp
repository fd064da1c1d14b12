#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "boas/boas_core.hpp"
#include "boas/circle_models.hpp"
#include "boas/errors.hpp"
#include "oracles.hpp"

using namespace boas;
using std::numbers::pi;

namespace {

// Riesz sum with an arbitrary leading constant, evaluated directly from the
// node formula.
double riesz_with_constant(const TrigPolynomial& p, int n, double t, double constant) {
  double acc = 0.0;
  for (int k = 1; k <= 2 * n; ++k) {
    const double tk = (2.0 * k - 1.0) * pi / (2.0 * n);
    const double s = std::sin(tk / 2.0);
    acc += ((k % 2 == 1) ? 1.0 : -1.0) / (s * s) * p(t + tk);
  }
  return constant * acc;
}

constexpr double kGridSlack = 1.01;

}  // namespace

TEST_CASE("Riesz formula examples") {
  CHECK(riesz_derivative(TrigPolynomial::sine(1), 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(riesz_derivative(TrigPolynomial::cosine(1), 0.0)) <= 1e-15);
  CHECK(riesz_derivative(TrigPolynomial::cosine(3), pi / 6.0) ==
        doctest::Approx(-3.0).epsilon(1e-14));
}

TEST_CASE("the 1/(4 pi) constant fails and 1/(4n) holds") {
  const TrigPolynomial s = TrigPolynomial::sine(1);
  CHECK(riesz_with_constant(s, 1, 0.0, 1.0 / 4.0) == doctest::Approx(1.0).epsilon(1e-14));
  const double printed = riesz_with_constant(s, 1, 0.0, 1.0 / (4.0 * pi));
  CHECK(printed == doctest::Approx(1.0 / pi).epsilon(1e-14));
  CHECK(std::abs(printed - 1.0) > 0.5);
}

TEST_CASE("Riesz exactness on the monomial basis") {
  oracle::Uniform u(3);
  for (int n = 1; n <= 32; ++n) {
    for (int m = 0; m <= n; ++m) {
      const double t = u(-pi, pi);
      // riesz_derivative uses the degree of P, so pad to degree n
      const TrigPolynomial pad = 0.0 * TrigPolynomial::cosine(n);
      const TrigPolynomial c = TrigPolynomial::cosine(m) + pad;
      CHECK(std::abs(riesz_derivative(c, t) + m * std::sin(m * t)) <= 1e-10 * (1.0 + m));
      if (m >= 1) {
        const TrigPolynomial s = TrigPolynomial::sine(m) + pad;
        CHECK(std::abs(riesz_derivative(s, t) - m * std::cos(m * t)) <= 1e-10 * (1.0 + m));
      }
    }
  }
}

TEST_CASE("Riesz exactness on seeded polynomials") {
  oracle::Uniform u(77);
  for (int i = 0; i < 100; ++i) {
    const int degree = 1 + i % 32;
    const TrigPolynomial p = random_trig_polynomial(degree, 1000 + i);
    const double t = u(-pi, pi);
    const TrigPolynomial dp = p.derivative();
    CHECK(std::abs(riesz_derivative(p, t) - dp(t)) <= 1e-10 * (1.0 + dp.grid_sup()));
  }
}

TEST_CASE("degenerate degree") {
  const TrigPolynomial c({2.0}, {});
  CHECK(c.degree() == 0);
  CHECK(riesz_derivative(c, 1.0) == 0.0);
  CHECK_THROWS_AS(riesz_stencil(0), InvalidArgument);
  CHECK_THROWS_AS(riesz_derivative([](double) { return 1.0; }, 0, 0.0), InvalidArgument);
}

TEST_CASE("trig polynomial algebra and derivative") {
  const TrigPolynomial p({1.0, 2.0, -1.0}, {0.5, 3.0});
  CHECK(p.degree() == 2);
  CHECK(p(0.0) == doctest::Approx(2.0));
  const TrigPolynomial dp = p.derivative();
  for (double t : {0.3, 1.9}) {
    const double exact = -2.0 * std::sin(t) + 2.0 * std::sin(2 * t) + 0.5 * std::cos(t) +
                         6.0 * std::cos(2 * t);
    CHECK(dp(t) == doctest::Approx(exact).epsilon(1e-14));
  }
  const TrigPolynomial q = TrigPolynomial::sine(4, 2.0);
  const TrigPolynomial sum = p + q;
  CHECK(sum.degree() == 4);
  CHECK(sum(0.7) == doctest::Approx(p(0.7) + q(0.7)).epsilon(1e-14));
  CHECK((p - p).grid_sup() == 0.0);
  CHECK((3.0 * p)(0.4) == doctest::Approx(3.0 * p(0.4)).epsilon(1e-14));
  CHECK_THROWS_AS(TrigPolynomial({1.0, 2.0}, {}), InvalidArgument);

  const TrigPolynomial parsed = parse_trig_json(R"({"a": [1, 2, -1], "b": [0.5, 3]})");
  CHECK((parsed - p).grid_sup() == 0.0);
  CHECK_THROWS_AS(parse_trig_json(R"({"a": [1, 2], "b": []})"), InvalidArgument);
  CHECK_THROWS_AS(parse_trig_json("[]"), InvalidArgument);
}

TEST_CASE("rotation group") {
  const auto g = rotation_group();
  const TrigPolynomial p = random_trig_polynomial(6, 4);
  const TrigPolynomial full = g.apply(2.0 * pi, p);
  for (int k = 0; k <= 6; ++k) {
    CHECK(full.a(k) == p.a(k));
    CHECK(full.b(k) == p.b(k));
  }
  const TrigPolynomial s = TrigPolynomial::sine(1);
  const TrigPolynomial flipped = g.apply(pi, s);
  CHECK(flipped.b(1) == -1.0);
  CHECK(flipped.a(1) == 0.0);
  for (double tau : {0.3, -2.2}) {
    const TrigPolynomial r = g.apply(tau, p);
    for (double t : {0.0, 1.1}) CHECK(r(t) == doctest::Approx(p(t + tau)).epsilon(1e-13));
  }
  const TrigPolynomial ab = g.apply(0.4, g.apply(1.3, p));
  CHECK((ab - g.apply(1.7, p)).grid_sup() <= 1e-13);
  CHECK(g.certificate(p)->sigma == 6.0);
}

TEST_CASE("Boas on rotations converges to the Riesz value") {
  const auto g = rotation_group();
  for (int n : {2, 5, 9}) {
    const TrigPolynomial p = random_trig_polynomial(n, 50 + n);
    const TrigPolynomial dp = p.derivative();
    double prev = 1e300;
    for (std::int64_t big : {10, 100, 1000}) {
      const auto r = boas_apply(g, p, build_table(1, n, big));
      const double err = (r.value - dp).grid_sup();
      CHECK(err <= kGridSlack * r.tail_bound);
      const double gap = std::abs(r.value(0.9) - riesz_derivative(p, 0.9));
      CHECK(gap < prev);
      prev = gap;
    }
  }
}

TEST_CASE("Bernstein inequality for trig polynomials") {
  // the grid sup of a degree-n polynomial sampled at 16 (n + 1) points is
  // within a factor 1.01 of the true sup
  for (int i = 0; i < 40; ++i) {
    const int n = 1 + i % 12;
    const TrigPolynomial p = random_trig_polynomial(n, 500 + i);
    CHECK(p.derivative().grid_sup() <= kGridSlack * n * p.grid_sup());
  }
}
