#include "qtrit/estimator.hpp"

#include <cmath>
#include <stdexcept>

namespace qtrit {

double toffoli_count(OperationKind kind, int n) {
  switch (kind) {
    case OperationKind::add_sub:
      if (n < 8) throw std::invalid_argument("add_sub estimate requires n >= 8");
      return 4.0 * n - 3.0 * std::log2(static_cast<double>(n)) -
             3.0 * std::log2(static_cast<double>(n - 1)) - 10.0;
    case OperationKind::mul_div:
      if (n < 1) throw std::invalid_argument("mul_div estimate requires n >= 1");
      return 1.5 * n * n + 4.5 * n;
    case OperationKind::sqrt:
      if (n < 2) throw std::invalid_argument("sqrt estimate requires n >= 2");
      return 0.5 * n * n + 3.0 * n - 4.0;
  }
  throw std::invalid_argument("unknown operation kind");
}

ResourceEstimate estimate(OperationKind kind, int n, Route route, bool floor_counts) {
  ResourceEstimate est;
  est.kind = kind;
  est.n = n;
  est.route = route;
  est.toffoli = toffoli_count(kind, n);
  if (route == Route::clifford_t) {
    est.total_depth = 8.0 * est.toffoli;
    est.cnot = 6.0 * est.toffoli;
    est.t = 7.0 * est.toffoli;
    est.h = 2.0 * est.toffoli;
    est.ternary_cnot = 0.0;
  } else {
    est.total_depth = 3.0 * est.toffoli;
    est.cnot = 0.0;
    est.t = 0.0;
    est.h = 0.0;
    est.ternary_cnot = 3.0 * est.toffoli;
  }
  if (floor_counts) {
    est.toffoli = std::floor(est.toffoli);
    est.total_depth = std::floor(est.total_depth);
    est.cnot = std::floor(est.cnot);
    est.t = std::floor(est.t);
    est.h = std::floor(est.h);
    est.ternary_cnot = std::floor(est.ternary_cnot);
  }
  return est;
}

SuccessReport success_probability(const ResourceEstimate& est, const NoiseParams& noise) {
  SuccessReport rep;
  const double t1 = est.route == Route::qutrit ? noise.t1_qutrit : noise.t1_qubit;
  rep.one_wire_factor = std::pow(1.0 - noise.eps1, est.t + est.h);
  rep.two_wire_factor = std::pow(1.0 - noise.eps2, est.cnot + est.ternary_cnot);
  rep.relaxation_factor = std::exp(-est.total_depth * noise.gate_time / t1);
  rep.p_success = rep.one_wire_factor * rep.two_wire_factor * rep.relaxation_factor;
  rep.p_error = 1.0 - rep.p_success;
  return rep;
}

std::vector<SweepRow> sweep(OperationKind kind, int n_from, int n_to,
                            const NoiseParams& noise) {
  if (n_from > n_to) throw std::invalid_argument("sweep range is empty");
  std::vector<SweepRow> rows;
  for (int n = n_from; n <= n_to; ++n) {
    SweepRow row;
    row.n = n;
    row.p_success_conventional =
        success_probability(estimate(kind, n, Route::clifford_t), noise).p_success;
    row.p_success_qutrit =
        success_probability(estimate(kind, n, Route::qutrit), noise).p_success;
    const double err_conv = 1.0 - row.p_success_conventional;
    const double err_qut = 1.0 - row.p_success_qutrit;
    row.error_decrease_percent = err_conv > 0.0 ? 100.0 * (err_conv - err_qut) / err_conv : 0.0;
    rows.push_back(row);
  }
  return rows;
}

const char* to_string(OperationKind kind) {
  switch (kind) {
    case OperationKind::add_sub:
      return "add";
    case OperationKind::mul_div:
      return "mul";
    case OperationKind::sqrt:
      return "sqrt";
  }
  return "?";
}

const char* to_string(Route route) {
  return route == Route::qutrit ? "qutrit" : "clifford_t";
}

}  // namespace qtrit
