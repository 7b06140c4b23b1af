#include "qtrit/arith.hpp"

#include <stdexcept>
#include <string>

namespace qtrit {

bool is_valid_format(const FixedPointFormat& f) {
  return f.total_bits > 0 && f.frac_bits >= 0 && f.frac_bits <= f.total_bits &&
         f.total_bits <= 64;
}

double fixed_point_value(std::uint64_t raw, const FixedPointFormat& f) {
  if (!is_valid_format(f)) throw std::invalid_argument("invalid fixed-point format");
  if (f.total_bits < 64 && raw >> f.total_bits) {
    throw std::invalid_argument("raw value does not fit the format");
  }
  return static_cast<double>(raw) / static_cast<double>(1ULL << f.frac_bits);
}

namespace {

void cx(Circuit& c, int a, int b) { c.gates.push_back(make_gate(GateKind::CX, {a, b})); }
void ccx(Circuit& c, int a, int b, int t) {
  c.gates.push_back(make_gate(GateKind::CCX, {a, b, t}));
}

// In-place ripple add of the n-bit register a into the n-bit register b,
// with the final carry landing on wire z (which must be |0> on entry).
// Carries are rippled through the a wires: a CNOT prefix chain links
// neighbours, a CCX sweep turns wire a_i into a_i xor c_i, the carry-out
// is computed onto z, and a mirrored sweep uncomputes the carries while
// folding them into b. The closing CX row adds a_i back so b_i ends as
// the sum bit. Wire lists are parameters so the multiplier can reuse the
// block on its own registers.
void ripple_add(Circuit& c, const std::vector<int>& a, const std::vector<int>& b, int z) {
  const int n = static_cast<int>(a.size());
  if (n == 1) {
    ccx(c, a[0], b[0], z);
    cx(c, a[0], b[0]);
    return;
  }
  for (int i = 1; i < n; ++i) cx(c, a[i], b[i]);
  cx(c, a[n - 1], z);
  for (int i = n - 2; i >= 1; --i) cx(c, a[i], a[i + 1]);
  for (int i = 0; i <= n - 2; ++i) ccx(c, a[i], b[i], a[i + 1]);
  ccx(c, a[n - 1], b[n - 1], z);
  for (int i = n - 1; i >= 1; --i) {
    cx(c, a[i], b[i]);
    ccx(c, a[i - 1], b[i - 1], a[i]);
  }
  for (int i = 1; i <= n - 2; ++i) cx(c, a[i], a[i + 1]);
  for (int i = 0; i < n; ++i) cx(c, a[i], b[i]);
}

}  // namespace

Circuit build_adder(int n) {
  if (n < 1 || n > 8) {
    throw std::invalid_argument("adder width must be between 1 and 8, got " + std::to_string(n));
  }
  Circuit c;
  c.name = "adder_" + std::to_string(n);
  std::vector<int> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    a[static_cast<std::size_t>(i)] = i;
    b[static_cast<std::size_t>(i)] = n + i;
    c.wires.push_back({i, 2, "a" + std::to_string(i)});
  }
  for (int i = 0; i < n; ++i) c.wires.push_back({n + i, 2, "b" + std::to_string(i)});
  c.wires.push_back({2 * n, 2, "cout"});
  ripple_add(c, a, b, 2 * n);
  return c;
}

Circuit build_multiplier(int n_a, int n_b) {
  if (n_a < 1 || n_a > 4 || n_b < 1 || n_b > 4) {
    throw std::invalid_argument("multiplier operand widths must be between 1 and 4, got " +
                                std::to_string(n_a) + "x" + std::to_string(n_b));
  }
  Circuit c;
  c.name = "multiplier_" + std::to_string(n_a) + "x" + std::to_string(n_b);
  const int np = n_a + n_b;
  for (int i = 0; i < n_a; ++i) c.wires.push_back({i, 2, "a" + std::to_string(i)});
  for (int j = 0; j < n_b; ++j) c.wires.push_back({n_a + j, 2, "b" + std::to_string(j)});
  for (int k = 0; k < np; ++k) c.wires.push_back({np + k, 2, "p" + std::to_string(k)});
  for (int i = 0; i < n_a; ++i) c.wires.push_back({2 * np + i, 2, "w" + std::to_string(i)});

  auto A = [&](int i) { return i; };
  auto B = [&](int j) { return n_a + j; };
  auto P = [&](int k) { return np + k; };
  auto W = [&](int i) { return 2 * np + i; };

  for (int j = 0; j < n_b; ++j) {
    for (int i = 0; i < n_a; ++i) ccx(c, A(i), B(j), W(i));
    std::vector<int> row(static_cast<std::size_t>(n_a)), seg(static_cast<std::size_t>(n_a));
    for (int i = 0; i < n_a; ++i) {
      row[static_cast<std::size_t>(i)] = W(i);
      seg[static_cast<std::size_t>(i)] = P(j + i);
    }
    // Bits above j + n_a are still clear at step j (the partial sum is
    // bounded by 2^(n_a + j)), so P(j + n_a) can take the carry.
    ripple_add(c, row, seg, P(j + n_a));
    for (int i = 0; i < n_a; ++i) ccx(c, A(i), B(j), W(i));
  }
  return c;
}

void prepare_operand(Circuit& c, const OperandEncoding& enc) {
  if (enc.n_bits < 0 || enc.n_bits > 64 || enc.wire_offset < 0) {
    throw std::invalid_argument("invalid operand encoding");
  }
  if (enc.wire_offset + enc.n_bits > static_cast<int>(c.wires.size())) {
    throw std::invalid_argument("operand encoding runs past the wire table");
  }
  if (enc.n_bits < 64 && enc.value >> enc.n_bits) {
    throw std::invalid_argument("operand value does not fit in " + std::to_string(enc.n_bits) +
                                " bits");
  }

  // The preparation prefix is the maximal leading run of X gates; a second
  // preparation touching one of those wires would not commute with it.
  std::size_t prefix = 0;
  while (prefix < c.gates.size() && c.gates[prefix].kind == GateKind::X) ++prefix;

  std::vector<Gate> prep;
  for (int i = 0; i < enc.n_bits; ++i) {
    if (!((enc.value >> i) & 1)) continue;
    const int wire = enc.wire_offset + i;
    if (c.wires[static_cast<std::size_t>(wire)].radix != 2) {
      throw std::invalid_argument("operand bit on a non-qubit wire");
    }
    for (std::size_t g = 0; g < prefix; ++g) {
      if (c.gates[g].wires[0] == wire) {
        throw std::invalid_argument("wire " + std::to_string(wire) + " is already prepared");
      }
    }
    prep.push_back(make_gate(GateKind::X, {wire}));
  }
  c.gates.insert(c.gates.begin(), prep.begin(), prep.end());
}

}  // namespace qtrit
