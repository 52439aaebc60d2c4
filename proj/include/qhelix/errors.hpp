#pragma once

#include <stdexcept>
#include <string>

namespace qhelix {

/// Base of every error the library raises.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Input that has no meaningful answer (zero polynomial, both-zero gcd, W ≡ 0, ...).
class DegenerateInput : public Error {
  public:
    using Error::Error;
};

/// The Frenet frame is undefined because α′ ∧ α″ vanishes identically.
class LineDegeneracy : public DegenerateInput {
  public:
    using DegenerateInput::DegenerateInput;
};

/// The curve is not 2-PH, so its Frenet frame is not rational.
class NotRationalFrame : public Error {
  public:
    using Error::Error;
};

class PreconditionError : public Error {
  public:
    using Error::Error;
};

class UnsupportedDegree : public PreconditionError {
  public:
    using PreconditionError::PreconditionError;
};

/// Two independent computations disagreed. Must never be observed.
class InternalInconsistency : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    using Error::Error;
};

}  // namespace qhelix
