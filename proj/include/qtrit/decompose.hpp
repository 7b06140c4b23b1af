#pragma once

#include <vector>

#include "qtrit/circuit.hpp"

namespace qtrit {

/// Toffoli replacement strategies. The three Clifford+T variants trade
/// depth against CNOT count at a fixed T-count of 7:
///
///   clifford_t_A: depth 12, 7 T, 6 CNOT, 2 H
///   clifford_t_B: depth 10, 7 T, 7 CNOT, 2 H
///   clifford_t_C: depth  8, 7 T, 6 CNOT, 2 H
///
/// qutrit replaces each CCX(c0,c1,t) by three ternary gates of depth 3:
/// a |1>-controlled increment c0->c1, a |2>-controlled Flip01 c1->t, and a
/// |1>-controlled decrement c0->c1. The middle control c1 is promoted to
/// radix 3 (and stays promoted); the |2> level is used only between the
/// first and third gate, so routing through it leaves no residue.
enum class DecompositionVariant { clifford_t_A, clifford_t_B, clifford_t_C, qutrit };

/// Rewrites every CCX in place, leaving all other gates untouched. The
/// result never contains CCX, so running any variant twice is the same as
/// running it once. Clifford+T variants refuse circuits that contain
/// radix-3 wires ("qutrit wires present"): T and H have no meaning there.
Circuit decompose_toffoli(const Circuit& c, DecompositionVariant variant);

/// Ids of the wires the qutrit pass promoted from radix 2 to 3, in
/// increasing order. `after` must be exactly decompose_toffoli(before,
/// qutrit); anything else is an error.
std::vector<int> promoted_wires(const Circuit& before, const Circuit& after);

}  // namespace qtrit
