// End-to-end acceptance checks. Each check prints exactly one PASS/FAIL
// line; the process exits nonzero when any of them fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "qtrit/arith.hpp"
#include "qtrit/decompose.hpp"
#include "qtrit/estimator.hpp"
#include "qtrit/noise.hpp"
#include "qtrit/qasm.hpp"
#include "qtrit/sim.hpp"

using namespace qtrit;
using namespace qtrit::testing;

namespace {

struct Reporter {
  int failures = 0;

  void run(int id, const std::string& label, const std::function<void()>& body,
           long long budget_ms = 0) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      body();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    if (ok && budget_ms > 0 && ms > budget_ms) {
      ok = false;
      detail = "took " + std::to_string(ms) + " ms, budget " + std::to_string(budget_ms);
    }
    std::printf("criterion %2d %s (%5lld ms)  %s%s%s\n", id, ok ? "PASS" : "FAIL",
                static_cast<long long>(ms), label.c_str(), detail.empty() ? "" : ": ",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

void require(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error(what);
}

// Each Clifford+T variant expansion of one CCX, by decomposition pass.
Circuit expand(DecompositionVariant v) { return decompose_toffoli(single_ccx(), v); }

void check_metrics(DecompositionVariant v, int depth_want, int64_t t_want, int64_t cx_want) {
  const CountReport r = gate_counts(expand(v));
  require(r.depth == depth_want, "depth " + std::to_string(r.depth) + ", wanted " +
                                     std::to_string(depth_want));
  require(r.t == t_want, "T count " + std::to_string(r.t));
  require(r.cnot == cx_want, "CNOT count " + std::to_string(r.cnot));
  require(r.toffoli == 0, "CCX left behind");
}

void check_arith_circuit(const Circuit& base, const std::vector<int>& input,
                         const std::vector<int>& expected) {
  require(run_to_basis(base, input) == expected, "plain circuit wrong");
  const Circuit ct = decompose_toffoli(base, DecompositionVariant::clifford_t_C);
  require(run_to_basis(ct, input) == expected, "clifford+t route wrong");
  const Circuit qt = decompose_toffoli(base, DecompositionVariant::qutrit);
  std::vector<int> qt_input = input;
  require(run_to_basis(qt, qt_input) == expected, "qutrit route wrong");
}

Circuit random_noise_subject(std::mt19937& rng, int n_gates) {
  std::uniform_int_distribution<int> wire_count(2, 4);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Circuit c;
  const int n = wire_count(rng);
  for (int i = 0; i < n; ++i) c.wires.push_back({i, coin(rng) < 0.4 ? 3 : 2, ""});

  std::vector<int> qubits;
  for (int i = 0; i < n; ++i) {
    if (c.wires[static_cast<std::size_t>(i)].radix == 2) qubits.push_back(i);
  }
  std::uniform_int_distribution<int> any_wire(0, n - 1);
  auto pick_other = [&](int w) {
    std::uniform_int_distribution<int> d(0, n - 2);
    const int r = d(rng);
    return r >= w ? r + 1 : r;
  };
  while (static_cast<int>(c.gates.size()) < n_gates) {
    const double r = coin(rng);
    const int w = any_wire(rng);
    const int radix = c.wires[static_cast<std::size_t>(w)].radix;
    if (r < 0.25) {
      c.gates.push_back(make_gate(GateKind::X, {w}));
    } else if (r < 0.45 && radix == 2) {
      static const GateKind kinds[] = {GateKind::H, GateKind::T, GateKind::S, GateKind::Tdg};
      c.gates.push_back(make_gate(kinds[c.gates.size() % 4], {w}));
    } else if (r < 0.7) {
      c.gates.push_back(make_gate(GateKind::CX, {pick_other(w), w}));
    } else if (r < 0.9) {
      const int control = pick_other(w);
      const int cv = c.wires[static_cast<std::size_t>(control)].radix == 3 ? 2 : 1;
      const TernaryAction action =
          radix == 3 ? TernaryAction::Increment : TernaryAction::Flip01;
      c.gates.push_back(make_ternary_cx(control, w, cv, action));
    } else if (qubits.size() >= 3) {
      c.gates.push_back(make_gate(GateKind::CCX, {qubits[0], qubits[1], qubits[2]}));
    } else {
      c.gates.push_back(make_gate(GateKind::Barrier, {w}));
    }
  }
  return c;
}

}  // namespace

int main() {
  Reporter rep;
  const NoiseParams defaults;

  rep.run(1, "toffoli expansions hit their metric targets", [] {
    check_metrics(DecompositionVariant::clifford_t_A, 12, 7, 6);
    check_metrics(DecompositionVariant::clifford_t_B, 10, 7, 7);
    check_metrics(DecompositionVariant::clifford_t_C, 8, 7, 6);
    const CountReport r = gate_counts(expand(DecompositionVariant::qutrit));
    require(r.depth == 3, "qutrit depth " + std::to_string(r.depth));
    require(r.ternary_cnot == 3, "ternary count " + std::to_string(r.ternary_cnot));
  });

  rep.run(2, "clifford+t expansions equal CCX up to global phase", [] {
    const Eigen::MatrixXcd ccx = unitary_of(single_ccx());
    for (DecompositionVariant v :
         {DecompositionVariant::clifford_t_A, DecompositionVariant::clifford_t_B,
          DecompositionVariant::clifford_t_C}) {
      require(equivalent_up_to_global_phase(unitary_of(expand(v)), ccx, 1e-10),
              "variant unitary differs");
    }
  });

  rep.run(3, "qutrit expansion matches the CCX truth table, no |2> residue", [] {
    const Circuit out = expand(DecompositionVariant::qutrit);
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        for (int t = 0; t < 2; ++t) {
          const StateVector psi = run(out, {a, b, t});
          const std::size_t want = psi.index_of({a, b, t ^ (a & b)});
          require(std::abs(psi[want] - std::complex<double>(1.0)) < 1e-12,
                  "wrong image of a basis state");
          require(psi.level_population(1, 2) < 1e-12, "|2> residue on the promoted wire");
        }
      }
    }
  });

  rep.run(4, "adders and multipliers are exhaustively correct on every route", [] {
    for (int n = 1; n <= 3; ++n) {
      const Circuit c = build_adder(n);
      for (std::uint64_t a = 0; a < (1ull << n); ++a) {
        for (std::uint64_t b = 0; b < (1ull << n); ++b) {
          check_arith_circuit(c, adder_input(a, b, n), adder_expected(a, b, n));
        }
      }
    }
    for (int na = 1; na <= 3; ++na) {
      for (int nb = 1; nb <= 2; ++nb) {
        const Circuit c = build_multiplier(na, nb);
        for (std::uint64_t a = 0; a < (1ull << na); ++a) {
          for (std::uint64_t b = 0; b < (1ull << nb); ++b) {
            check_arith_circuit(c, multiplier_input(a, b, na, nb),
                                multiplier_expected(a, b, na, nb));
          }
        }
      }
    }
    // the named five-times-three case
    const Circuit c = build_multiplier(3, 2);
    require(run_to_basis(c, multiplier_input(5, 3, 3, 2)) ==
                multiplier_expected(5, 3, 3, 2),
            "5 x 3 != 15");
  }, 30000);

  rep.run(5, "closed-form companions are exact multiples of the toffoli count", [] {
    struct Span {
      OperationKind kind;
      int from;
    };
    for (const Span s : {Span{OperationKind::add_sub, 8}, Span{OperationKind::mul_div, 1},
                         Span{OperationKind::sqrt, 2}}) {
      for (int n = s.from; n <= 64; ++n) {
        const ResourceEstimate ct = estimate(s.kind, n, Route::clifford_t);
        const ResourceEstimate qt = estimate(s.kind, n, Route::qutrit);
        require(std::abs(qt.ternary_cnot - 3.0 * ct.toffoli) <= 1e-9, "ternary != 3x");
        require(std::abs(qt.total_depth - 3.0 * ct.toffoli) <= 1e-9, "qutrit depth != 3x");
        require(std::abs(ct.total_depth - 8.0 * ct.toffoli) <= 1e-9, "depth != 8x");
        require(std::abs(ct.cnot - 6.0 * ct.toffoli) <= 1e-9, "cnot != 6x");
        require(std::abs(ct.t - 7.0 * ct.toffoli) <= 1e-9, "t != 7x");
        require(std::abs(ct.h - 2.0 * ct.toffoli) <= 1e-9, "h != 2x");
      }
    }
  }, 1000);

  rep.run(6, "channels are trace preserving on the grid and in long runs", [] {
    const std::vector<double> grid{0.0, 0.1, 0.3, 1.0};
    for (double eps : grid) {
      for (const auto& dims :
           {std::vector<int>{2}, std::vector<int>{3}, std::vector<int>{2, 2},
            std::vector<int>{2, 3}, std::vector<int>{3, 2}, std::vector<int>{3, 3}}) {
        require(completeness_defect(depolarizing_channel(dims, eps)) <= 1e-12,
                "depolarizing incomplete");
      }
    }
    for (double l1 : grid) {
      require(completeness_defect(amplitude_damping_channel(2, l1, 0.0)) <= 1e-12,
              "qubit damping incomplete");
      for (double l2 : grid) {
        require(completeness_defect(amplitude_damping_channel(3, l1, l2)) <= 1e-12,
                "qutrit damping incomplete");
      }
    }
    std::mt19937 rng(20260817);
    for (int trial = 0; trial < 5; ++trial) {
      const Circuit c = random_noise_subject(rng, 100);
      const DensityMatrix rho =
          run_density(c, std::vector<int>(c.wires.size(), 0), NoiseParams{});
      require(std::abs(rho.trace().real() - 1.0) <= 1e-12 &&
                  std::abs(rho.trace().imag()) <= 1e-12,
              "trace drifted after 100 noisy gates");
    }
  }, 30000);

  rep.run(7, "two-qutrit depolarizing has exactly 80 error terms", [] {
    const KrausChannel ch = depolarizing_channel({3, 3}, 0.5);
    int traceless = 0, traceful = 0;
    for (const auto& k : ch.operators) {
      (std::abs(k.trace()) < 1e-9 ? traceless : traceful)++;
    }
    require(traceful == 1, "identity term count " + std::to_string(traceful));
    require(traceless == 80, "error term count " + std::to_string(traceless));
  });

  rep.run(8, "single-toffoli success probabilities match the model", [&] {
    ResourceEstimate conv;
    conv.route = Route::clifford_t;
    conv.toffoli = 1;
    conv.total_depth = 8;
    conv.cnot = 6;
    conv.t = 7;
    conv.h = 2;
    const double p_conv = success_probability(conv, defaults).p_success;
    require(std::abs(p_conv - 0.86832) <= 1e-4,
            "conventional " + std::to_string(p_conv));

    ResourceEstimate qt;
    qt.route = Route::qutrit;
    qt.toffoli = 1;
    qt.total_depth = 3;
    qt.ternary_cnot = 3;
    const double p_qt = success_probability(qt, defaults).p_success;
    require(std::abs(p_qt - 0.87796) <= 1e-4, "qutrit " + std::to_string(p_qt));
  });

  rep.run(9, "qutrit route dominates and both curves fall with n", [&] {
    struct Span {
      OperationKind kind;
      int from;
    };
    for (const Span s : {Span{OperationKind::add_sub, 8}, Span{OperationKind::mul_div, 1},
                         Span{OperationKind::sqrt, 2}}) {
      const auto rows = sweep(s.kind, s.from, 64, defaults);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        require(rows[i].p_success_qutrit >= rows[i].p_success_conventional,
                "dominance broken at n=" + std::to_string(rows[i].n));
        if (i > 0) {
          require(rows[i].p_success_conventional <= rows[i - 1].p_success_conventional,
                  "conventional curve rose");
          require(rows[i].p_success_qutrit <= rows[i - 1].p_success_qutrit,
                  "qutrit curve rose");
        }
      }
    }
    const auto twenty = sweep(OperationKind::add_sub, 20, 20, defaults);
    require(twenty[0].error_decrease_percent > 0.0, "no error decrease at n=20");
  }, 5000);

  rep.run(10, "noisy simulation favors the qutrit expansion", [&] {
    const Circuit qt = expand(DecompositionVariant::qutrit);
    const Circuit ct = expand(DecompositionVariant::clifford_t_C);
    const std::vector<int> input{1, 1, 0};
    const double f_qt = fidelity(run_density(qt, input, defaults), run(qt, input));
    const double f_ct = fidelity(run_density(ct, input, defaults), run(ct, input));
    require(f_qt > f_ct, "fidelities " + std::to_string(f_qt) + " vs " + std::to_string(f_ct));
  }, 5000);

  rep.run(11, "a thousand random circuits round-trip byte-identically", [] {
    std::mt19937 rng(424243);
    for (int i = 0; i < 1000; ++i) {
      const Circuit c = random_circuit(rng);
      const std::string first = emit_qasm(c);
      const ParseResult back = parse_qasm(first);
      require(back.ok(), "emitted text failed to parse (circuit " + std::to_string(i) + ")");
      require(emit_qasm(*back.circuit) == first,
              "second emission differs (circuit " + std::to_string(i) + ")");
      require(same_structure(c, *back.circuit),
              "structure changed (circuit " + std::to_string(i) + ")");
    }
  }, 10000);

  if (rep.failures == 0) {
    std::printf("all %d criteria passed\n", 11);
    return 0;
  }
  std::printf("%d criteria FAILED\n", rep.failures);
  return 1;
}
