#pragma once

#include <stdexcept>
#include <string>

namespace boas {

/// Input outside the mathematical domain of an operation (non-finite
/// argument, point off the unit sphere).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Derivative order above what an evaluator supports.
class UnsupportedOrderError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Structurally invalid arguments (non-positive bandwidth, empty data...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Scale factor or weight not representable in double precision.
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// A vector is missing a Bernstein certificate, or its certified type
/// exceeds the bandwidth the formula was built for.
class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Odd-order Q operator evaluated without the auxiliary first derivative.
class MissingAuxiliaryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Quadrature rule too coarse for the requested accuracy.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Too few usable samples for a regression.
class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace boas
