#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtrit/circuit.hpp"

namespace qtrit {

// OPENQASM 2.0 subset frontend.
//
// Accepted statements: the OPENQASM 2.0 header, include (ignored), qreg,
// creg, the gates x h t tdg s sdg cx ccx, measure, barrier, and // comments.
// Registers are flattened into one contiguous wire space in declaration
// order. Three extension statements carry the ternary gates:
//
//   tcx_inc(c) q[i],q[j];   control value c in {1,2}; target += 1 (mod 3)
//   tcx_dec(c) q[i],q[j];   target -= 1 (mod 3)
//   tcx_x(c)   q[i],q[j];   target swaps |0> and |1>
//
// Parsing a tcx_* statement promotes the target wire to radix 3. That is
// the only way the dialect can mark a ternary wire, so a circuit whose
// ternary wires are never tcx targets will not survive a QASM round trip;
// the JSON format stores radices explicitly and has no such limit.

struct SourceSpan {
  int line = 1;
  int column = 1;
  int length = 1;
};

enum class ParseErrorKind {
  Syntax,
  UnsupportedStatement,
  UndeclaredRegister,
  IndexOutOfRange,
  ArityMismatch,
};

struct ParseError {
  ParseErrorKind kind = ParseErrorKind::Syntax;
  SourceSpan span;
  std::string message;
};

/// Any error suppresses the circuit; the parser still recovers at each ';'
/// so one pass reports every problem it can find.
struct ParseResult {
  std::optional<Circuit> circuit;
  std::vector<ParseError> errors;

  bool ok() const { return circuit.has_value(); }
};

ParseResult parse_qasm(std::string_view text);

/// Canonical emission: header, one flattened register q (plus creg c when
/// the circuit measures), one statement per line. parse_qasm(emit_qasm(c))
/// reproduces a valid c structurally (radices and gates; labels and the
/// circuit name live only in JSON). Emission is byte-deterministic.
std::string emit_qasm(const Circuit& c);

std::string to_string(ParseErrorKind kind);

}  // namespace qtrit
