#include "qtrit/circuit.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace qtrit {

int arity(GateKind kind) {
  switch (kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::Measure:
    case GateKind::Barrier:
      return 1;
    case GateKind::CX:
    case GateKind::TernaryCX:
      return 2;
    case GateKind::CCX:
      return 3;
  }
  throw std::invalid_argument("unknown gate kind");
}

Gate make_gate(GateKind kind, std::vector<int> wires) {
  Gate g;
  g.kind = kind;
  g.wires = std::move(wires);
  return g;
}

Gate make_ternary_cx(int control, int target, int control_value, TernaryAction action) {
  Gate g;
  g.kind = GateKind::TernaryCX;
  g.wires = {control, target};
  g.control_value = control_value;
  g.action = action;
  return g;
}

namespace {

bool qubit_only(GateKind kind) {
  switch (kind) {
    case GateKind::H:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::CCX:
      return true;
    default:
      return false;
  }
}

}  // namespace

std::vector<Violation> validate(const Circuit& c) {
  std::vector<Violation> out;
  const int n = static_cast<int>(c.wires.size());

  for (int i = 0; i < n; ++i) {
    if (c.wires[i].id != i) {
      out.push_back({-1, "wire ids must be contiguous from zero"});
      break;
    }
  }
  for (const WireSpec& w : c.wires) {
    if (w.radix != 2 && w.radix != 3) {
      out.push_back({-1, "wire radix must be 2 or 3"});
      break;
    }
  }
  if (!out.empty()) return out;  // gate checks need a sane wire table

  auto radix = [&](int wire) { return c.wires[wire].radix; };

  std::vector<bool> measured(n, false);
  for (std::size_t gi = 0; gi < c.gates.size(); ++gi) {
    const Gate& g = c.gates[gi];
    const int idx = static_cast<int>(gi);

    if (static_cast<int>(g.wires.size()) != arity(g.kind)) {
      out.push_back({idx, "arity mismatch"});
      continue;
    }
    bool wires_ok = true;
    for (int w : g.wires) {
      if (w < 0 || w >= n) {
        out.push_back({idx, "unknown wire id"});
        wires_ok = false;
        break;
      }
    }
    if (!wires_ok) continue;
    for (std::size_t i = 0; i < g.wires.size() && wires_ok; ++i) {
      for (std::size_t j = i + 1; j < g.wires.size(); ++j) {
        if (g.wires[i] == g.wires[j]) {
          out.push_back({idx, "non-distinct wires"});
          wires_ok = false;
          break;
        }
      }
    }
    if (!wires_ok) continue;

    if (qubit_only(g.kind)) {
      for (int w : g.wires) {
        if (radix(w) != 2) {
          out.push_back({idx, "qubit-only gate on ternary wire"});
          break;
        }
      }
    }
    if (g.kind == GateKind::TernaryCX) {
      if (g.control_value != 1 && g.control_value != 2) {
        out.push_back({idx, "control value must be 1 or 2"});
      } else if (g.control_value == 2 && radix(g.wires[0]) != 3) {
        out.push_back({idx, "control value 2 requires a ternary control"});
      }
      if (g.action != TernaryAction::Flip01 && radix(g.wires[1]) != 3) {
        out.push_back({idx, "increment/decrement target must have radix 3"});
      }
    }

    for (int w : g.wires) {
      if (measured[w] && g.kind != GateKind::Measure) {
        out.push_back({idx, "gate follows measurement on the same wire"});
        break;
      }
    }
    if (g.kind == GateKind::Measure) measured[g.wires[0]] = true;
  }
  return out;
}

bool is_valid(const Circuit& c) { return validate(c).empty(); }

void require_valid(const Circuit& c) {
  std::vector<Violation> v = validate(c);
  if (v.empty()) return;
  std::string msg = "validation failed: " + v.front().rule;
  if (v.front().gate_index >= 0) {
    msg += " (gate " + std::to_string(v.front().gate_index) + ")";
  }
  throw std::invalid_argument(msg);
}

int depth(const Circuit& c) {
  require_valid(c);
  std::vector<int> last(c.wires.size(), 0);
  int d = 0;
  for (const Gate& g : c.gates) {
    int layer = 0;
    for (int w : g.wires) layer = std::max(layer, last[w]);
    ++layer;
    for (int w : g.wires) last[w] = layer;
    d = std::max(d, layer);
  }
  return d;
}

CountReport gate_counts(const Circuit& c) {
  CountReport r;
  r.depth = depth(c);  // validates
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::CCX:
        ++r.toffoli;
        break;
      case GateKind::T:
      case GateKind::Tdg:
        ++r.t;
        ++r.one_wire;
        break;
      case GateKind::CX:
        ++r.cnot;
        ++r.two_wire;
        break;
      case GateKind::H:
        ++r.h;
        ++r.one_wire;
        break;
      case GateKind::TernaryCX:
        ++r.ternary_cnot;
        ++r.two_wire;
        break;
      case GateKind::X:
      case GateKind::S:
      case GateKind::Sdg:
        ++r.one_wire;
        break;
      case GateKind::Measure:
      case GateKind::Barrier:
        break;
    }
  }
  return r;
}

std::vector<int> wire_dims(const Circuit& c) {
  std::vector<int> dims;
  dims.reserve(c.wires.size());
  for (const WireSpec& w : c.wires) dims.push_back(w.radix);
  return dims;
}

std::size_t total_dimension(const std::vector<int>& dims, std::size_t limit) {
  std::size_t total = 1;
  for (int d : dims) {
    if (total > limit / static_cast<std::size_t>(d)) {
      throw std::invalid_argument("state dimension exceeds " + std::to_string(limit));
    }
    total *= static_cast<std::size_t>(d);
  }
  return total;
}

bool same_structure(const Circuit& a, const Circuit& b) {
  if (a.wires.size() != b.wires.size()) return false;
  for (std::size_t i = 0; i < a.wires.size(); ++i) {
    if (a.wires[i].radix != b.wires[i].radix) return false;
  }
  return a.gates == b.gates;
}

}  // namespace qtrit
