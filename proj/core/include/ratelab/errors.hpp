#pragma once

#include <stdexcept>
#include <string>

namespace ratelab {

/// An argument lies outside the mathematical domain of an operation
/// (negative loss, probability outside [0,1], ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Inputs are individually valid but the requested quantity falls outside
/// the validity region of the model formulas.
class ModelDomainError : public std::runtime_error {
 public:
  explicit ModelDomainError(const std::string& what) : std::runtime_error(what) {}
};

/// There are no events to condition on (zero yield, zero gain).
class DegenerateInputError : public ModelDomainError {
 public:
  explicit DegenerateInputError(const std::string& what) : ModelDomainError(what) {}
};

/// A rate ratio was requested at a point where one of the rates is not positive.
class UndefinedRatioError : public ModelDomainError {
 public:
  explicit UndefinedRatioError(const std::string& what) : ModelDomainError(what) {}
};

/// The endpoints handed to a root search do not straddle a sign change.
class BracketError : public std::runtime_error {
 public:
  enum class Kind {
    NoPositiveRateAtStart,  ///< rate is already non-positive at the low end
    NoSignChangeByEnd,      ///< rate is still positive at the high end
  };

  BracketError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace ratelab
