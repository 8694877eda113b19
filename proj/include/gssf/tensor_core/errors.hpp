#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gssf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VarianceMismatchError : public Error {
 public:
  using Error::Error;
};

class NumericInversionError : public Error {
 public:
  NumericInversionError(const std::string& what, double condition)
      : Error(what + " (condition number " + std::to_string(condition) + ")"),
        condition_(condition) {}
  double condition_number() const { return condition_; }

 private:
  double condition_;
};

class EvaluationError : public Error {
 public:
  EvaluationError(const std::string& what, std::span<const double> point);
  const std::vector<double>& point() const { return point_; }

 private:
  std::vector<double> point_;
};

class CatalogError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DegeneratePlaneError : public Error {
 public:
  using Error::Error;
};

class InvalidNormalError : public Error {
 public:
  using Error::Error;
};

class ImmersionError : public Error {
 public:
  using Error::Error;
};

}  // namespace gssf
