#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "boas/errors.hpp"
#include "boas/heisenberg_models.hpp"
#include "oracles.hpp"

using namespace boas;
using std::numbers::pi;

namespace {

HeisenbergFunction separable() {
  return HeisenbergFunction(Factor(random_sinc_signal(1.0, 1, -2, 2)),
                            Factor(random_sinc_signal(1.5, 2, -2, 2)),
                            Factor(random_sinc_signal(0.5, 3, -2, 2)));
}

// X(Yf) - Y(Xf) expanded by hand from the field definitions, using second
// derivatives of the factors.
double symbolic_commutator(const HeisenbergFunction& f, const Point3& p) {
  const double x = p[0];
  const double y = p[1];
  auto d = [&](int a, int b, int c) {
    return f.g().derivative(a, p[0]) * f.h().derivative(b, p[1]) * f.w().derivative(c, p[2]);
  };
  const double xy = d(1, 1, 0) + 0.5 * d(0, 0, 1) + 0.5 * x * d(1, 0, 1) - 0.5 * y * d(0, 1, 1) -
                    0.25 * x * y * d(0, 0, 2);
  const double yx = d(1, 1, 0) - 0.5 * d(0, 0, 1) - 0.5 * y * d(0, 1, 1) + 0.5 * x * d(1, 0, 1) -
                    0.25 * x * y * d(0, 0, 2);
  return xy - yx;
}

}  // namespace

TEST_CASE("actions") {
  const HeisenbergFunction f = separable();
  const Point3 p{0.3, -1.2, 0.8};
  for (auto field : {HeisenbergField::X, HeisenbergField::Y, HeisenbergField::T}) {
    CHECK(heisenberg_action(field, 0.0, f, p) == f(p));
  }
  const HeisenbergFunction flat(Factor(random_sinc_signal(1.0, 4)), Factor(2.0), Factor(3.0));
  CHECK(heisenberg_action(HeisenbergField::T, 1.7, flat, p) == flat(p));
  CHECK(heisenberg_flow(HeisenbergField::X, 0.5, p)[2] == doctest::Approx(0.8 + 0.3));
  CHECK(heisenberg_flow(HeisenbergField::Y, 0.5, p)[2] == doctest::Approx(0.8 + 0.075));

  oracle::Uniform u(12);
  for (auto field : {HeisenbergField::X, HeisenbergField::Y, HeisenbergField::T}) {
    for (int i = 0; i < 20; ++i) {
      const double a = u(-3.0, 3.0);
      const double b = u(-3.0, 3.0);
      const Point3 q{u(-2.0, 2.0), u(-2.0, 2.0), u(-2.0, 2.0)};
      const Point3 composed = heisenberg_flow(field, b, heisenberg_flow(field, a, q));
      const Point3 direct = heisenberg_flow(field, a + b, q);
      for (int k = 0; k < 3; ++k) CHECK(std::abs(composed[k] - direct[k]) <= 1e-14);
    }
  }
  CHECK(parse_heisenberg_field("Y") == HeisenbergField::Y);
  CHECK_THROWS_AS(parse_heisenberg_field("Z"), InvalidArgument);
}

TEST_CASE("the commutator of X and Y is T") {
  const HeisenbergFunction f = separable();
  oracle::Uniform u(13);
  for (int i = 0; i < 10; ++i) {
    const Point3 p{u(-2.0, 2.0), u(-2.0, 2.0), u(-2.0, 2.0)};
    CHECK(symbolic_commutator(f, p) == doctest::Approx(f.dt(p)).epsilon(1e-12));
  }
}

TEST_CASE("pointwise Boas along the fields") {
  const SincSeriesSignal g = random_sinc_signal(1.0, 7, -3, 3);
  const HeisenbergFunction only_g(Factor(g), Factor(2.0), Factor(-0.5));
  const Point3 p{0.4, 1.0, -0.3};
  const auto rx = heisenberg_boas_point(HeisenbergField::X, only_g, p, 10000);
  CHECK(std::abs(rx.value - g.derivative(1, 0.4) * 2.0 * -0.5) <= rx.tail_bound);

  const SincSeriesSignal w = sinc_pulse();
  const HeisenbergFunction gw(Factor(g), Factor(1.0), Factor(w));
  const Point3 q{0.0, 2.0, 0.0};
  const double oracle = g.derivative(1, 0.0) * w(0.0) - 1.0 * g(0.0) * w.derivative(1, 0.0);
  CHECK(heisenberg_oracle(HeisenbergField::X, gw, q) == doctest::Approx(oracle).epsilon(1e-14));
  CHECK(point_bandwidth(HeisenbergField::X, gw, q) == doctest::Approx(1.0 + pi));
  const auto r = heisenberg_boas_point(HeisenbergField::X, gw, q, 10000);
  CHECK(std::abs(r.value - oracle) <= r.tail_bound);

  const HeisenbergFunction only_w(Factor(1.0), Factor(1.0), Factor(w));
  for (double t : {-0.7, 0.0, 1.3}) {
    const auto rt = heisenberg_boas_point(HeisenbergField::T, only_w, {5.0, -3.0, t}, 10000);
    CHECK(std::abs(rt.value - w.derivative(1, t)) <= rt.tail_bound);
  }

  const HeisenbergFunction f = separable();
  oracle::Uniform u(14);
  for (int i = 0; i < 5; ++i) {
    const Point3 s{u(-2.0, 2.0), u(-2.0, 2.0), u(-2.0, 2.0)};
    for (auto field : {HeisenbergField::X, HeisenbergField::Y, HeisenbergField::T}) {
      const auto b = heisenberg_boas_point(field, f, s, 4000);
      CHECK(std::abs(b.value - heisenberg_oracle(field, f, s)) <= b.tail_bound);
    }
  }
}

TEST_CASE("bandwidth above the point bandwidth leaves the value unchanged") {
  const HeisenbergFunction f = separable();
  const Point3 p{0.5, -1.5, 0.2};
  const double local = point_bandwidth(HeisenbergField::X, f, p);
  const auto a = heisenberg_boas_point(HeisenbergField::X, f, p, 20000);
  for (double scale : {1.5, 3.0}) {
    const auto b = heisenberg_boas_point(HeisenbergField::X, f, p, 20000, scale * local);
    CHECK(std::abs(a.value - b.value) <= a.tail_bound + b.tail_bound);
  }
  CHECK_THROWS_AS(heisenberg_boas_point(HeisenbergField::X, f, p, 100, 0.5 * local),
                  CertificateError);
}

TEST_CASE("nested Boas commutator") {
  const HeisenbergFunction f = separable();
  for (const Point3& p : {Point3{0.0, 0.0, 0.0}, Point3{0.7, -0.4, 1.1}}) {
    const CommutatorCheck c = heisenberg_commutator(f, p, 200);
    CHECK(std::abs(c.value - c.oracle) <= 10.0 * c.tail_bound);
    CHECK(c.oracle == f.dt(p));
  }
  const HeisenbergFunction bad(Factor(1.0), Factor(random_sinc_signal(1.0, 5)), Factor(sinc_pulse()));
  CHECK_THROWS_AS(heisenberg_commutator(bad, {0.0, 0.0, 0.0}, 10), CertificateError);
}
