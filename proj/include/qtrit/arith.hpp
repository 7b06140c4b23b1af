#pragma once

#include <cstdint>

#include "qtrit/circuit.hpp"

namespace qtrit {

/// How the bits of a register split into integer and fraction when a
/// register is read as a fixed-point number: value = raw / 2^frac_bits.
struct FixedPointFormat {
  int total_bits = 0;
  int frac_bits = 0;
};

bool is_valid_format(const FixedPointFormat& f);
double fixed_point_value(std::uint64_t raw, const FixedPointFormat& f);

/// A classical operand to load into a register: bit i of value goes on
/// wire wire_offset + i (wire_offset holds the least significant bit).
struct OperandEncoding {
  std::uint64_t value = 0;
  int n_bits = 0;
  int wire_offset = 0;
};

/// In-place ripple-carry adder |a>|b>|0> -> |a>|(a+b) mod 2^n>|carry>,
/// 1 <= n <= 8, over exactly 2n+1 wires: A on 0..n-1, B on n..2n-1, the
/// carry on wire 2n, least significant bits first. Gates are X, CX, CCX
/// only. Carries ripple through the A register and are uncomputed on the
/// return pass, so A is restored.
Circuit build_adder(int n);

/// Shift-and-add multiplier |a>|b>|0...> -> |a>|b>|a*b>, 1 <= n_a,n_b <= 4.
/// Wires: A on [0, n_a), B on [n_a, n_a+n_b), product on
/// [n_a+n_b, 2(n_a+n_b)), and n_a work wires after that. For each bit j of
/// B the partial product A*b_j is materialized on the work wires with CCX,
/// ripple-added into product bits j..j+n_a (the wire above is provably
/// clear and absorbs the carry), then uncomputed. Operands are restored
/// and the work wires end clear.
Circuit build_multiplier(int n_a, int n_b);

/// Prepends one X per set bit of enc.value so later gates still follow the
/// preparation. Errors when the encoding runs past the wire table, a set
/// bit lands on a non radix-2 wire, or a set bit's wire was already
/// prepared by an earlier call.
void prepare_operand(Circuit& c, const OperandEncoding& enc);

}  // namespace qtrit
