#ifndef LALG_ERRORS_HPP
#define LALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lalg {

// Base class for everything this library throws on purpose.
struct lalg_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A table or document is not well-formed (out-of-range entry, bad unit,
// shape mismatch). Distinct from an axiom failure, which is a valid
// verdict, not an error.
struct structural_error : lalg_error {
  using lalg_error::lalg_error;
};

// An input exceeds a configured bound (carrier width, enumeration order,
// exhaustive-subset bound).
struct capacity_error : lalg_error {
  using lalg_error::lalg_error;
};

// A precondition stated by an operation's contract does not hold, e.g.
// psi() on a subset that is not an ideal.
struct contract_error : lalg_error {
  using lalg_error::lalg_error;
};

// Diagnostic codes for document parsing.
enum class parse_code {
  json_syntax,    // not valid JSON
  document_shape, // missing field, wrong type, or ragged table
  size_value,     // size < 1 or size > kMaxCarrier
  unit_range,     // unit outside [0, size)
  entry_range,    // table entry outside [0, size)
};

const char* parse_code_name(parse_code c);

struct parse_error : lalg_error {
  parse_error(parse_code c, const std::string& where, const std::string& what)
      : lalg_error(std::string(parse_code_name(c)) + " at " + where + ": " + what),
        code(c),
        location(where) {}
  parse_code code;
  std::string location;
};

}  // namespace lalg

#endif
