#pragma once

// Shared fixtures: tiny circuits, classical arithmetic oracles, basis-state
// decoding, and the random circuit generator used by the round-trip tests.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtrit/circuit.hpp"
#include "qtrit/sim.hpp"

namespace qtrit::testing {

inline Circuit single_ccx() {
  Circuit c;
  c.name = "ccx";
  c.wires = {{0, 2, ""}, {1, 2, ""}, {2, 2, ""}};
  c.gates = {make_gate(GateKind::CCX, {0, 1, 2})};
  return c;
}

/// Little-endian bit expansion, bit i of value at position i.
inline std::vector<int> bits_of(std::uint64_t value, int n_bits) {
  std::vector<int> bits(static_cast<std::size_t>(n_bits), 0);
  for (int i = 0; i < n_bits; ++i) bits[static_cast<std::size_t>(i)] = (value >> i) & 1;
  return bits;
}

inline std::vector<int> adder_input(std::uint64_t a, std::uint64_t b, int n) {
  std::vector<int> digits = bits_of(a, n);
  const std::vector<int> bb = bits_of(b, n);
  digits.insert(digits.end(), bb.begin(), bb.end());
  digits.push_back(0);
  return digits;
}

inline std::vector<int> adder_expected(std::uint64_t a, std::uint64_t b, int n) {
  std::vector<int> digits = bits_of(a, n);
  const std::uint64_t sum = a + b;
  const std::vector<int> bb = bits_of(sum & ((1ull << n) - 1), n);
  digits.insert(digits.end(), bb.begin(), bb.end());
  digits.push_back(static_cast<int>((sum >> n) & 1));
  return digits;
}

inline std::vector<int> multiplier_input(std::uint64_t a, std::uint64_t b, int na, int nb) {
  std::vector<int> digits = bits_of(a, na);
  const std::vector<int> bb = bits_of(b, nb);
  digits.insert(digits.end(), bb.begin(), bb.end());
  digits.resize(digits.size() + static_cast<std::size_t>(na + nb + na), 0);
  return digits;
}

inline std::vector<int> multiplier_expected(std::uint64_t a, std::uint64_t b, int na, int nb) {
  std::vector<int> digits = bits_of(a, na);
  const std::vector<int> bb = bits_of(b, nb);
  digits.insert(digits.end(), bb.begin(), bb.end());
  const std::vector<int> pp = bits_of(a * b, na + nb);
  digits.insert(digits.end(), pp.begin(), pp.end());
  digits.resize(digits.size() + static_cast<std::size_t>(na), 0);
  return digits;
}

/// Runs the circuit on a basis input and decodes the single surviving basis
/// state. Throws when the output is not a basis state to within tol.
inline std::vector<int> run_to_basis(const Circuit& c, const std::vector<int>& input,
                                     double tol = 1e-9) {
  const StateVector psi = run(c, input);
  std::size_t hit = psi.size();
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (std::abs(psi[i]) > tol) {
      if (hit != psi.size()) throw std::runtime_error("output is not a basis state");
      hit = i;
    }
  }
  if (hit == psi.size()) throw std::runtime_error("output state is empty");
  if (std::abs(std::abs(psi[hit]) - 1.0) > tol) {
    throw std::runtime_error("output basis amplitude is not unit");
  }
  return psi.digits_of(hit);
}

/// Random valid circuit for serialization tests. Mixed radix; every
/// radix-3 wire is the target of at least one ternary gate, because that
/// is the only radix marker the QASM dialect has. Measures, if any, come
/// last. Deterministic for a given rng state.
inline Circuit random_circuit(std::mt19937& rng) {
  std::uniform_int_distribution<int> wire_count(1, 6);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  Circuit c;
  const int n = wire_count(rng);
  for (int i = 0; i < n; ++i) {
    const int radix = n >= 2 && coin(rng) < 0.35 ? 3 : 2;
    c.wires.push_back({i, radix, ""});
  }
  auto radix_of = [&](int w) { return c.wires[static_cast<std::size_t>(w)].radix; };
  auto pick_other = [&](int w) {
    std::uniform_int_distribution<int> d(0, n - 2);
    const int r = d(rng);
    return r >= w ? r + 1 : r;
  };
  auto random_tcx = [&](int target) {
    const int control = pick_other(target);
    const int cv = radix_of(control) == 3 && coin(rng) < 0.5 ? 2 : 1;
    TernaryAction action = TernaryAction::Flip01;
    if (radix_of(target) == 3) {
      const double r = coin(rng);
      action = r < 0.4   ? TernaryAction::Increment
               : r < 0.8 ? TernaryAction::Decrement
                         : TernaryAction::Flip01;
    }
    return make_ternary_cx(control, target, cv, action);
  };

  for (int w = 0; w < n; ++w) {
    if (radix_of(w) == 3) c.gates.push_back(random_tcx(w));
  }

  std::vector<int> qubit_wires, ternary_wires;
  for (int w = 0; w < n; ++w) {
    (radix_of(w) == 2 ? qubit_wires : ternary_wires).push_back(w);
  }

  std::uniform_int_distribution<int> gate_count(0, 25);
  std::uniform_int_distribution<int> any_wire(0, n - 1);
  const int extra = gate_count(rng);
  for (int g = 0; g < extra; ++g) {
    const double r = coin(rng);
    if (r < 0.18) {
      c.gates.push_back(make_gate(GateKind::X, {any_wire(rng)}));
    } else if (r < 0.40 && !qubit_wires.empty()) {
      static const GateKind one_qubit[] = {GateKind::H, GateKind::T, GateKind::Tdg,
                                           GateKind::S, GateKind::Sdg};
      std::uniform_int_distribution<int> pick_kind(0, 4);
      std::uniform_int_distribution<int> pick_wire(0, static_cast<int>(qubit_wires.size()) - 1);
      c.gates.push_back(make_gate(one_qubit[pick_kind(rng)],
                                  {qubit_wires[static_cast<std::size_t>(pick_wire(rng))]}));
    } else if (r < 0.60 && n >= 2) {
      const int target = any_wire(rng);
      c.gates.push_back(make_gate(GateKind::CX, {pick_other(target), target}));
    } else if (r < 0.75 && !ternary_wires.empty()) {
      // A ternary gate on a radix-2 target would read back as a promotion,
      // so only ternary wires ever appear as targets here.
      std::uniform_int_distribution<int> pick(0, static_cast<int>(ternary_wires.size()) - 1);
      c.gates.push_back(random_tcx(ternary_wires[static_cast<std::size_t>(pick(rng))]));
    } else if (r < 0.90 && qubit_wires.size() >= 3) {
      std::vector<int> pool = qubit_wires;
      std::shuffle(pool.begin(), pool.end(), rng);
      c.gates.push_back(make_gate(GateKind::CCX, {pool[0], pool[1], pool[2]}));
    } else {
      c.gates.push_back(make_gate(GateKind::Barrier, {any_wire(rng)}));
    }
  }

  for (int w = 0; w < n; ++w) {
    if (coin(rng) < 0.2) c.gates.push_back(make_gate(GateKind::Measure, {w}));
  }
  return c;
}

}  // namespace qtrit::testing
