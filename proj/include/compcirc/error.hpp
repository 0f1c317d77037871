#pragma once

// Error kinds shared by every pass, evaluator and parser.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace compcirc
{

enum class ErrorKind
{
  input_arity,
  negation_not_supported,
  bad_shape,
  index_out_of_range,
  too_many_gates,
  too_many_wires,
  too_large,
  not_feasible,
  has_stars,
  internal_bound_violation,
  not_all_up,
  has_negations,
  edge_not_in_graph,
  degree_too_high,
  not_square,
  precondition_violated,
  not_lipschitz,
  unknown_suite,
  parse_error
};

inline const char* error_name( ErrorKind kind )
{
  switch ( kind )
  {
  case ErrorKind::input_arity: return "InputArity";
  case ErrorKind::negation_not_supported: return "NegationNotSupported";
  case ErrorKind::bad_shape: return "BadShape";
  case ErrorKind::index_out_of_range: return "IndexOutOfRange";
  case ErrorKind::too_many_gates: return "TooManyGates";
  case ErrorKind::too_many_wires: return "TooManyWires";
  case ErrorKind::too_large: return "TooLarge";
  case ErrorKind::not_feasible: return "NotFeasible";
  case ErrorKind::has_stars: return "HasStars";
  case ErrorKind::internal_bound_violation: return "InternalBoundViolation";
  case ErrorKind::not_all_up: return "NotAllUp";
  case ErrorKind::has_negations: return "HasNegations";
  case ErrorKind::edge_not_in_graph: return "EdgeNotInGraph";
  case ErrorKind::degree_too_high: return "DegreeTooHigh";
  case ErrorKind::not_square: return "NotSquare";
  case ErrorKind::precondition_violated: return "PreconditionViolated";
  case ErrorKind::not_lipschitz: return "NotLipschitz";
  case ErrorKind::unknown_suite: return "UnknownSuite";
  case ErrorKind::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Base exception; `kind()` identifies the failed contract.
class Error : public std::runtime_error
{
public:
  Error( ErrorKind kind, const std::string& message )
      : std::runtime_error( std::string( error_name( kind ) ) + ": " + message ), kind_( kind )
  {
  }

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Raised by the text-format parsers. Line numbers are 1-based.
class ParseError : public Error
{
public:
  ParseError( std::size_t line, const std::string& message )
      : Error( ErrorKind::parse_error, "line " + std::to_string( line ) + ": " + message ),
        line_( line ), message_( message )
  {
  }

  std::size_t line() const noexcept { return line_; }
  const std::string& message() const noexcept { return message_; }

private:
  std::size_t line_;
  std::string message_;
};

namespace detail
{

[[noreturn]] inline void fail( ErrorKind kind, const std::string& message )
{
  throw Error( kind, message );
}

inline void require( bool condition, ErrorKind kind, const std::string& message )
{
  if ( !condition )
  {
    fail( kind, message );
  }
}

// avoids building a std::string on the success path
inline void require( bool condition, ErrorKind kind, const char* message )
{
  if ( !condition )
  {
    fail( kind, message );
  }
}

} // namespace detail

} // namespace compcirc
