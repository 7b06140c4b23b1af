#pragma once

#include <vector>

#include <Eigen/Dense>

namespace qtrit {

/// Error-model knobs. Depolarizing strengths are per gate (eps1 one-wire,
/// eps2 two-wire); T1 times and the gate time feed the per-layer
/// relaxation lambda = 1 - exp(-gate_time/T1). Times share one unit
/// (microseconds in all defaults). lambda1/lambda2 are only read when a
/// damping channel is built directly rather than derived from T1.
struct NoiseParams {
  double eps1 = 1e-4;
  double eps2 = 1e-2;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double t1_qubit = 100.0;
  double t1_qutrit = 30.0;
  double gate_time = 1.0;
};

struct KrausChannel {
  std::vector<Eigen::MatrixXcd> operators;

  int dimension() const;
};

/// max |sum K^dag K - I|; a channel is trace preserving when this is ~0.
double completeness_defect(const KrausChannel& ch);
bool is_complete(const KrausChannel& ch, double tol = 1e-12);

/// Uniform depolarizing over the generalized Pauli products of the given
/// wire dims (clock and shift, X^j Z^k per wire). The identity term gets
/// weight sqrt(1-eps_total) and each of the prod(d^2)-1 others
/// sqrt(eps_total/(prod(d^2)-1)). Zero-weight terms are dropped, so
/// eps_total = 0 yields the identity channel. eps_total must lie in [0,1].
KrausChannel depolarizing_channel(const std::vector<int>& dims, double eps_total);

/// Energy relaxation toward |0>. radix 2: K0 = diag(1, sqrt(1-l1)) plus
/// the jump sqrt(l1)|0><1|. radix 3 adds the second level: K0 =
/// diag(1, sqrt(1-l1), sqrt(1-l2)) with jumps sqrt(l1)|0><1| and
/// sqrt(l2)|0><2|. Zero-probability jumps are dropped. l1, l2 in [0,1].
KrausChannel amplitude_damping_channel(int radix, double lambda1, double lambda2);

}  // namespace qtrit
