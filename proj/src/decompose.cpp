#include "qtrit/decompose.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtrit {

namespace {

struct Step {
  GateKind kind;
  int wire;        // 0 = first control, 1 = second control, 2 = target
  int other = -1;  // CX partner, -1 for one-wire gates
};

// The three networks come from the phase-polynomial form of CCZ
// (T on a, b, c and on the parity a^b^c; T-dagger on the pairwise
// parities), conjugated by H on the target. They differ in how the parity
// legs are routed and scheduled: A keeps the whole chain on the target
// wire, B spends a seventh CNOT to shorten it, C interleaves legs across
// all three wires so the greedy layering packs to depth 8.

const Step kVariantA[] = {
    {GateKind::H, 2},   {GateKind::CX, 1, 2},  {GateKind::Tdg, 2}, {GateKind::CX, 0, 2},
    {GateKind::T, 2},   {GateKind::CX, 1, 2},  {GateKind::Tdg, 2}, {GateKind::CX, 0, 2},
    {GateKind::T, 2},   {GateKind::T, 1},      {GateKind::T, 0},   {GateKind::CX, 0, 1},
    {GateKind::Tdg, 1}, {GateKind::CX, 0, 1},  {GateKind::H, 2},
};

const Step kVariantB[] = {
    {GateKind::H, 2},   {GateKind::CX, 0, 1}, {GateKind::Tdg, 1}, {GateKind::CX, 2, 0},
    {GateKind::Tdg, 0}, {GateKind::CX, 2, 1}, {GateKind::T, 2},   {GateKind::T, 1},
    {GateKind::CX, 0, 1}, {GateKind::T, 1},   {GateKind::CX, 2, 0}, {GateKind::T, 0},
    {GateKind::CX, 2, 1}, {GateKind::Tdg, 1}, {GateKind::CX, 2, 1}, {GateKind::H, 2},
};

const Step kVariantC[] = {
    {GateKind::CX, 1, 0}, {GateKind::H, 2},   {GateKind::Tdg, 0}, {GateKind::CX, 2, 1},
    {GateKind::CX, 2, 0}, {GateKind::Tdg, 1}, {GateKind::T, 0},   {GateKind::CX, 2, 1},
    {GateKind::CX, 1, 0}, {GateKind::T, 2},   {GateKind::Tdg, 0}, {GateKind::T, 1},
    {GateKind::CX, 2, 0}, {GateKind::T, 0},   {GateKind::H, 2},
};

template <std::size_t N>
void expand_clifford_t(std::vector<Gate>& out, const Gate& ccx, const Step (&steps)[N]) {
  for (const Step& s : steps) {
    if (s.kind == GateKind::CX) {
      out.push_back(make_gate(GateKind::CX, {ccx.wires[static_cast<std::size_t>(s.wire)],
                                             ccx.wires[static_cast<std::size_t>(s.other)]}));
    } else {
      out.push_back(make_gate(s.kind, {ccx.wires[static_cast<std::size_t>(s.wire)]}));
    }
  }
}

void expand_qutrit(std::vector<Gate>& out, const Gate& ccx) {
  const int c0 = ccx.wires[0];
  const int c1 = ccx.wires[1];
  const int t = ccx.wires[2];
  out.push_back(make_ternary_cx(c0, c1, 1, TernaryAction::Increment));
  out.push_back(make_ternary_cx(c1, t, 2, TernaryAction::Flip01));
  out.push_back(make_ternary_cx(c0, c1, 1, TernaryAction::Decrement));
}

}  // namespace

Circuit decompose_toffoli(const Circuit& c, DecompositionVariant variant) {
  require_valid(c);
  if (variant != DecompositionVariant::qutrit) {
    for (const WireSpec& w : c.wires) {
      if (w.radix == 3) throw std::invalid_argument("qutrit wires present");
    }
  }

  Circuit out;
  out.name = c.name;
  out.wires = c.wires;
  out.gates.reserve(c.gates.size());
  for (const Gate& g : c.gates) {
    if (g.kind != GateKind::CCX) {
      out.gates.push_back(g);
      continue;
    }
    switch (variant) {
      case DecompositionVariant::clifford_t_A:
        expand_clifford_t(out.gates, g, kVariantA);
        break;
      case DecompositionVariant::clifford_t_B:
        expand_clifford_t(out.gates, g, kVariantB);
        break;
      case DecompositionVariant::clifford_t_C:
        expand_clifford_t(out.gates, g, kVariantC);
        break;
      case DecompositionVariant::qutrit:
        expand_qutrit(out.gates, g);
        out.wires[static_cast<std::size_t>(g.wires[1])].radix = 3;
        break;
    }
  }
  return out;
}

std::vector<int> promoted_wires(const Circuit& before, const Circuit& after) {
  Circuit expect = decompose_toffoli(before, DecompositionVariant::qutrit);
  if (!(expect.wires == after.wires) || !(expect.gates == after.gates)) {
    throw std::invalid_argument("circuits are not related by the qutrit rewrite");
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < before.wires.size(); ++i) {
    if (before.wires[i].radix == 2 && after.wires[i].radix == 3) {
      out.push_back(static_cast<int>(i));
    }
  }
  return out;
}

}  // namespace qtrit
