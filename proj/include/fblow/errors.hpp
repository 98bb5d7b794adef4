#pragma once

#include <stdexcept>
#include <string>

namespace fblow {

/// Base class for every error raised by the library. Each subclass names one
/// failure mode so callers (and the CLI exit-code mapping) can tell them apart.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input violating a documented precondition (zero generator,
/// inconsistent dimensions, non-prime characteristic, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class NotPointed : public ValidationError {
 public:
  NotPointed()
      : ValidationError(
            "monoid is not pointed: its cone contains a line (standing "
            "assumption: the monoid must contain no nontrivial group)") {}
};

class NotGroupGenerating : public ValidationError {
 public:
  NotGroupGenerating()
      : ValidationError(
            "generators do not generate Z^d as a group (standing assumption: "
            "the monoid must generate the ambient lattice M)") {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DimensionUnsupported : public Error {
 public:
  using Error::Error;
};

/// Two distinct elements of one coset attain the minimal weight: the weight
/// lies on a chamber wall.
class WeightNotGeneric : public Error {
 public:
  using Error::Error;
};

class UncertifiedInput : public Error {
 public:
  using Error::Error;
};

class ConstantTermPresent : public Error {
 public:
  ConstantTermPresent()
      : Error("polynomial has a constant term; the criterion needs f in the "
              "maximal ideal") {}
};

/// A checked 64-bit lattice computation left the representable range.
class ArithmeticOverflow : public Error {
 public:
  ArithmeticOverflow() : Error("integer overflow in lattice arithmetic") {}
};

}  // namespace fblow
