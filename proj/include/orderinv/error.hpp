#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orderinv {

enum class ErrorKind {
  invalid_argument,
  not_closed,
  not_associative,
  no_identity,
  no_inverse,
  order_cap_exceeded,
  parameter_out_of_range,
  coprimality_violated,
  parity_violated,
  frobenius_violated,
  parameter_domain_violated,
  precondition_violated,
  missing_divisor,
  inexact_parameters,
  unknown_family,
  parse_error,
  io_error,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `indices()` carries the offending
/// element indices or divisors when the failure is about specific values.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        std::vector<std::uint64_t> indices = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        indices_(std::move(indices)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::uint64_t>& indices() const noexcept {
    return indices_;
  }

 private:
  ErrorKind kind_;
  std::vector<std::uint64_t> indices_;
};

}  // namespace orderinv
