#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace trilie {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A coboundary fell outside the cocycle span.
class ContainmentViolation : public Error {
 public:
  using Error::Error;
};

/// An input failed the validator required by a construction.
class ValidationFailure : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class NotAdmissible : public Error {
 public:
  using Error::Error;
};

class NotNijenhuis : public Error {
 public:
  using Error::Error;
};

class NotTrace : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// Two independent evaluations of the same differential disagree.
class FormulaDisagreement : public Error {
 public:
  FormulaDisagreement(const std::string& what, std::vector<std::size_t> tuple)
      : Error(what), tuple_(std::move(tuple)) {}
  [[nodiscard]] const std::vector<std::size_t>& tuple() const { return tuple_; }

 private:
  std::vector<std::size_t> tuple_;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string location)
      : Error(location.empty() ? what : location + ": " + what), location_(std::move(location)) {}
  [[nodiscard]] const std::string& location() const { return location_; }

 private:
  std::string location_;
};

class UnresolvedReference : public Error {
 public:
  using Error::Error;
};

}  // namespace trilie
