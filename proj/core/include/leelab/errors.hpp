#pragma once

#include <stdexcept>
#include <string>

namespace leelab {

/// Thrown when a computation would exceed a configured size cap. Never a
/// silent truncation.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by searches that exhaust their range without a certificate.
class SearchFailure : public std::runtime_error {
 public:
  SearchFailure(const std::string& what, std::string counterexample)
      : std::runtime_error(what), counterexample_(std::move(counterexample)) {}

  const std::string& counterexample() const noexcept { return counterexample_; }

 private:
  std::string counterexample_;
};

}  // namespace leelab
