#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qtrit {

/// Gate vocabulary. Wires may have radix 2 or 3; H, T, Tdg, S, Sdg and CCX
/// are qubit-only, everything else is defined on either radix. X and the
/// target of CX act as Flip01 on a radix-3 wire (swap |0> and |1>, fix |2>).
enum class GateKind { X, H, T, Tdg, S, Sdg, CX, CCX, TernaryCX, Measure, Barrier };

/// Action applied by TernaryCX to its target when the control matches.
/// Increment/Decrement are mod-3 shifts and need a radix-3 target; Flip01
/// also works on a radix-2 target, where it degenerates to X.
enum class TernaryAction { Increment, Decrement, Flip01 };

struct WireSpec {
  int id = 0;
  int radix = 2;
  std::string label;  // optional, empty when unset

  friend bool operator==(const WireSpec&, const WireSpec&) = default;
};

/// One gate application. Wires are listed controls first, target last.
/// control_value and action are meaningful only for TernaryCX and keep
/// their defaults elsewhere so that plain equality works.
struct Gate {
  GateKind kind = GateKind::X;
  std::vector<int> wires;
  int control_value = 1;
  TernaryAction action = TernaryAction::Flip01;

  friend bool operator==(const Gate&, const Gate&) = default;
};

struct Circuit {
  std::string name;
  std::vector<WireSpec> wires;
  std::vector<Gate> gates;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Number of wires the kind acts on.
int arity(GateKind kind);

Gate make_gate(GateKind kind, std::vector<int> wires);
Gate make_ternary_cx(int control, int target, int control_value, TernaryAction action);

/// A broken validation rule. gate_index is -1 for wire-table problems.
struct Violation {
  int gate_index = -1;
  std::string rule;
};

/// Checks wire table (ids contiguous from 0, radix 2 or 3) and every gate
/// (known wires, distinct wires, arity, radix compatibility, measure
/// ordering). Returns an empty list for a valid circuit.
std::vector<Violation> validate(const Circuit& c);

bool is_valid(const Circuit& c);

/// Throws std::invalid_argument("validation failed: ...") when invalid.
void require_valid(const Circuit& c);

/// Greedy layering depth: each gate sits one layer after the latest gate
/// touching any of its wires. Barrier and Measure occupy a layer like any
/// other gate. Empty circuit has depth 0.
int depth(const Circuit& c);

struct CountReport {
  std::int64_t toffoli = 0;       // CCX
  std::int64_t t = 0;             // T plus Tdg
  std::int64_t cnot = 0;          // CX
  std::int64_t h = 0;             // H
  std::int64_t ternary_cnot = 0;  // TernaryCX
  std::int64_t one_wire = 0;      // X, H, T, Tdg, S, Sdg
  std::int64_t two_wire = 0;      // CX, TernaryCX
  int depth = 0;

  friend bool operator==(const CountReport&, const CountReport&) = default;
};

/// Tallies gates by family. Measure and Barrier contribute to no counter
/// (they are not resource gates), though they still affect depth.
CountReport gate_counts(const Circuit& c);

/// Radix of every wire, indexed by wire id.
std::vector<int> wire_dims(const Circuit& c);

/// Product of all wire radices. Throws when it would exceed limit.
std::size_t total_dimension(const std::vector<int>& dims, std::size_t limit);

/// Equality that ignores names and labels: same radix sequence, same gates.
/// This is what survives a round trip through the QASM dialect, which has
/// no way to spell labels.
bool same_structure(const Circuit& a, const Circuit& b);

}  // namespace qtrit
