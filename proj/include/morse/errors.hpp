#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace morse {

/// Malformed molecule parameter or reference file.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A parsed value violates a physical invariant (e.g. non-positive V0).
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// The Pekeris-mode potential has no bound spectrum for this rotational state.
class NoBoundSpectrumError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested vibrational level lies at or above the dissociation limit.
class NotBoundError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved_error)
      : std::runtime_error(what), achieved_error_(achieved_error) {}

  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

/// Finite-difference eigenvalues failed to agree across grid resolutions.
class UnconvergedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace morse
