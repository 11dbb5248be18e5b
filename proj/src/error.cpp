#include "orderinv/error.hpp"

namespace orderinv {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::not_closed: return "NotClosed";
    case ErrorKind::not_associative: return "NotAssociative";
    case ErrorKind::no_identity: return "NoIdentity";
    case ErrorKind::no_inverse: return "NoInverse";
    case ErrorKind::order_cap_exceeded: return "OrderCapExceeded";
    case ErrorKind::parameter_out_of_range: return "ParameterOutOfRange";
    case ErrorKind::coprimality_violated: return "CoprimalityViolated";
    case ErrorKind::parity_violated: return "ParityViolated";
    case ErrorKind::frobenius_violated: return "FrobeniusViolated";
    case ErrorKind::parameter_domain_violated: return "ParameterDomainViolated";
    case ErrorKind::precondition_violated: return "PreconditionViolated";
    case ErrorKind::missing_divisor: return "MissingDivisor";
    case ErrorKind::inexact_parameters: return "InexactParameters";
    case ErrorKind::unknown_family: return "UnknownFamily";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::io_error: return "IoError";
  }
  return "Unknown";
}

}  // namespace orderinv
