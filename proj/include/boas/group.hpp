#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "boas/stencil.hpp"

namespace boas {

/// Certified upper bound on the exponential type of t -> e^{tD} v.
struct BernsteinCertificate {
  double sigma = 0.0;
};

/// Relative slack when comparing a certified type against a bandwidth, so a
/// band of pi is accepted by a table built from a truncated decimal of pi.
inline constexpr double kCertificateTolerance = 1e-9;

template <class V>
concept VectorSpace = requires(const V& a, const V& b, double s) {
  { a + b } -> std::convertible_to<V>;
  { a - b } -> std::convertible_to<V>;
  { s * a } -> std::convertible_to<V>;
};

/// A strongly continuous one-parameter group acting on `vector_type`, with
/// the norm it is (approximately) isometric for.
template <class G>
concept OneParameterGroup =
    VectorSpace<typename G::vector_type> &&
    requires(const G& g, const typename G::vector_type& v, double t) {
      { g.name() } -> std::convertible_to<std::string>;
      { g.apply(t, v) } -> std::convertible_to<typename G::vector_type>;
      { g.norm(v) } -> std::convertible_to<double>;
      { g.certificate(v) } -> std::convertible_to<std::optional<BernsteinCertificate>>;
    };

/// Sum of group translates sum_i w_i e^{o_i D} v. Groups may provide a
/// `superpose` member that does this without building intermediate vectors.
template <OneParameterGroup G>
typename G::vector_type superpose(const G& g, const Stencil& s,
                                  const typename G::vector_type& v) {
  if constexpr (requires { g.superpose(s, v); }) {
    return g.superpose(s, v);
  } else {
    using V = typename G::vector_type;
    V acc = 0.0 * v;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s.weights[i] == 0.0) continue;
      acc = acc + s.weights[i] * g.apply(s.offsets[i], v);
    }
    return acc;
  }
}

/// Immutable, cheaply copyable pointwise-evaluable function, optionally
/// carrying a Bernstein certificate for the group it is paired with.
template <class Domain, class Value>
class Function {
 public:
  using domain_type = Domain;
  using value_type = Value;
  using Evaluator = std::function<Value(const Domain&)>;

  /// The zero function (certified at type 0).
  Function()
      : eval_(std::make_shared<const Evaluator>([](const Domain&) { return Value{}; })),
        certificate_(BernsteinCertificate{0.0}) {}

  explicit Function(Evaluator f, std::optional<BernsteinCertificate> cert = std::nullopt)
      : eval_(std::make_shared<const Evaluator>(std::move(f))), certificate_(cert) {}

  Value operator()(const Domain& x) const { return (*eval_)(x); }

  const std::optional<BernsteinCertificate>& certificate() const { return certificate_; }

  Function with_certificate(std::optional<BernsteinCertificate> cert) const {
    Function copy = *this;
    copy.certificate_ = cert;
    return copy;
  }

  friend Function operator+(const Function& a, const Function& b) {
    auto ea = a.eval_;
    auto eb = b.eval_;
    return Function([ea, eb](const Domain& x) { return (*ea)(x) + (*eb)(x); },
                    join(a.certificate_, b.certificate_));
  }

  friend Function operator-(const Function& a, const Function& b) {
    auto ea = a.eval_;
    auto eb = b.eval_;
    return Function([ea, eb](const Domain& x) { return (*ea)(x) - (*eb)(x); },
                    join(a.certificate_, b.certificate_));
  }

  friend Function operator*(double s, const Function& a) {
    auto ea = a.eval_;
    return Function([ea, s](const Domain& x) { return s * (*ea)(x); }, a.certificate_);
  }

 private:
  static std::optional<BernsteinCertificate> join(const std::optional<BernsteinCertificate>& a,
                                                  const std::optional<BernsteinCertificate>& b) {
    if (!a || !b) return std::nullopt;
    return BernsteinCertificate{std::max(a->sigma, b->sigma)};
  }

  std::shared_ptr<const Evaluator> eval_;
  std::optional<BernsteinCertificate> certificate_;
};

/// A group acting on functions through a flow on the domain and an optional
/// multiplier:  (e^{tD} f)(x) = m(t, x) f(phi_t(x)).
template <class Domain, class Value>
class PointGroup {
 public:
  using vector_type = Function<Domain, Value>;
  using Flow = std::function<Domain(double, const Domain&)>;
  using Multiplier = std::function<Value(double, const Domain&)>;
  using Norm = std::function<double(const vector_type&)>;

  PointGroup(std::string name, Flow flow, Norm norm, Multiplier multiplier = {})
      : name_(std::move(name)),
        flow_(std::make_shared<const Flow>(std::move(flow))),
        multiplier_(multiplier ? std::make_shared<const Multiplier>(std::move(multiplier))
                               : nullptr),
        norm_(std::move(norm)) {}

  const std::string& name() const { return name_; }

  Domain move(double t, const Domain& x) const { return (*flow_)(t, x); }

  Value multiplier(double t, const Domain& x) const {
    return multiplier_ ? (*multiplier_)(t, x) : Value(1);
  }

  vector_type apply(double t, const vector_type& v) const {
    if (t == 0.0) return v;
    auto flow = flow_;
    auto mult = multiplier_;
    return vector_type(
        [flow, mult, t, v](const Domain& x) {
          const Value fx = v((*flow)(t, x));
          return mult ? (*mult)(t, x) * fx : fx;
        },
        v.certificate());
  }

  vector_type superpose(const Stencil& s, const vector_type& v) const {
    auto flow = flow_;
    auto mult = multiplier_;
    auto stencil = std::make_shared<const Stencil>(s);
    return vector_type(
        [flow, mult, stencil, v](const Domain& x) {
          Value acc{};
          for (std::size_t i = 0; i < stencil->size(); ++i) {
            const double w = stencil->weights[i];
            if (w == 0.0) continue;
            const double t = stencil->offsets[i];
            const Value fx = v((*flow)(t, x));
            acc += w * (mult ? (*mult)(t, x) * fx : fx);
          }
          return acc;
        },
        v.certificate());
  }

  double norm(const vector_type& v) const { return norm_(v); }

  std::optional<BernsteinCertificate> certificate(const vector_type& v) const {
    return v.certificate();
  }

 private:
  std::string name_;
  std::shared_ptr<const Flow> flow_;
  std::shared_ptr<const Multiplier> multiplier_;
  Norm norm_;
};

/// Sup of |f| over a fixed set of probe points.
template <class Domain, class Value>
std::function<double(const Function<Domain, Value>&)> probe_sup_norm(std::vector<Domain> probes) {
  auto pts = std::make_shared<const std::vector<Domain>>(std::move(probes));
  return [pts](const Function<Domain, Value>& f) {
    double m = 0.0;
    for (const auto& x : *pts) m = std::max(m, static_cast<double>(std::abs(f(x))));
    return m;
  };
}

/// `count` equispaced points covering [lo, hi].
std::vector<double> uniform_grid(double lo, double hi, int count);

}  // namespace boas
