#pragma once

#include <vector>

#include "qtrit/noise.hpp"

namespace qtrit {

enum class OperationKind { add_sub, mul_div, sqrt };
enum class Route { clifford_t, qutrit };

/// Closed-form resource counts for an n-bit arithmetic block. Values are
/// real (log2 terms are not floored); `floor_counts` in estimate() floors
/// them when whole-gate numbers are wanted. Toffoli is the base quantity;
/// on the clifford_t route depth/cnot/t/h are its fixed multiples
/// (8, 6, 7, 2) and ternary_cnot is 0; on the qutrit route ternary_cnot
/// and total_depth are 3x toffoli and t = h = cnot = 0.
struct ResourceEstimate {
  OperationKind kind = OperationKind::add_sub;
  int n = 0;
  Route route = Route::clifford_t;
  double toffoli = 0;
  double total_depth = 0;
  double cnot = 0;
  double t = 0;
  double h = 0;
  double ternary_cnot = 0;
};

/// Toffolis needed for one n-bit op:
///   add_sub:  4n - 3 log2 n - 3 log2(n-1) - 10     (n >= 8)
///   mul_div:  1.5 n^2 + 4.5 n                      (n >= 1)
///   sqrt:     n^2/2 + 3n - 4                       (n >= 2)
/// The add_sub formula goes negative below n = 8, hence its bound.
double toffoli_count(OperationKind kind, int n);

ResourceEstimate estimate(OperationKind kind, int n, Route route, bool floor_counts = false);

struct SuccessReport {
  double p_success = 1;
  double p_error = 0;
  double one_wire_factor = 1;
  double two_wire_factor = 1;
  double relaxation_factor = 1;
};

/// p = (1-eps1)^(t+h) * (1-eps2)^(cnot+ternary_cnot)
///       * exp(-total_depth * gate_time / T1),
/// with T1 picked by route (t1_qubit for clifford_t, t1_qutrit for qutrit).
SuccessReport success_probability(const ResourceEstimate& est, const NoiseParams& noise);

struct SweepRow {
  int n = 0;
  double p_success_conventional = 0;
  double p_success_qutrit = 0;
  /// 100 * (p_err_conv - p_err_qutrit) / p_err_conv, or 0 when the
  /// conventional route is already error-free.
  double error_decrease_percent = 0;
};

std::vector<SweepRow> sweep(OperationKind kind, int n_from, int n_to, const NoiseParams& noise);

const char* to_string(OperationKind kind);
const char* to_string(Route route);

}  // namespace qtrit
