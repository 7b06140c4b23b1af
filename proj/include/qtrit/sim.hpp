#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "qtrit/circuit.hpp"
#include "qtrit/noise.hpp"

namespace qtrit {

// Exact mixed-radix simulation. Basis states are indexed with wire 0 as
// the most significant digit: index = sum_i digit_i * prod_{j>i} radix_j.

class StateVector {
 public:
  /// |0...0> over the given per-wire radices.
  explicit StateVector(std::vector<int> dims);

  /// Basis state from one digit per wire (digit i < dims[i]).
  static StateVector basis(std::vector<int> dims, const std::vector<int>& digits);

  const std::vector<int>& dims() const { return dims_; }
  std::size_t size() const { return amps_.size(); }

  std::complex<double>& operator[](std::size_t i) { return amps_[i]; }
  const std::complex<double>& operator[](std::size_t i) const { return amps_[i]; }
  const std::vector<std::complex<double>>& amplitudes() const { return amps_; }

  double norm() const;

  std::size_t index_of(const std::vector<int>& digits) const;
  std::vector<int> digits_of(std::size_t index) const;

  /// Probability that wire `wire` is found at `level`.
  double level_population(int wire, int level) const;

 private:
  std::vector<int> dims_;
  std::vector<std::complex<double>> amps_;
};

/// Dense matrix of a gate on its local space; dims are the radices of the
/// gate's wires in gate order (controls first).
Eigen::MatrixXcd gate_matrix(const Gate& g, const std::vector<int>& local_dims);

/// Applies one gate in place. Measure and Barrier are no-ops here.
void apply_gate(StateVector& state, const Gate& g);

/// Validates, prepares the basis state, applies every gate.
StateVector run(const Circuit& c, const std::vector<int>& input_digits);

/// Full circuit unitary by columns; total dimension capped at 256.
Eigen::MatrixXcd unitary_of(const Circuit& c);

/// True when max |U - phi*V| <= tol for the unit scalar phi fixed by the
/// first entry of V (row-major) with nonnegligible magnitude.
bool equivalent_up_to_global_phase(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v,
                                   double tol);

class DensityMatrix {
 public:
  explicit DensityMatrix(std::vector<int> dims);  // |0...0><0...0|
  static DensityMatrix from_state(const StateVector& psi);

  const std::vector<int>& dims() const { return dims_; }
  std::size_t size() const { return static_cast<std::size_t>(rho_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return rho_; }
  Eigen::MatrixXcd& matrix() { return rho_; }

  std::complex<double> trace() const;
  double hermiticity_defect() const;  // max |rho - rho^dag|
  double min_eigenvalue() const;

 private:
  std::vector<int> dims_;
  Eigen::MatrixXcd rho_;
};

void apply_unitary(DensityMatrix& rho, const Gate& g);
void apply_channel(DensityMatrix& rho, const KrausChannel& ch, const std::vector<int>& wires);

/// Noisy run: gates are placed into greedy layers exactly as depth() does;
/// each gate applies its ideal unitary followed by a depolarizing channel
/// on its wires (eps1 one-wire, eps2 wider), and after every layer each
/// wire relaxes with lambda = 1 - exp(-gate_time/T1), reading t1_qubit or
/// t1_qutrit from the wire radix. Total dimension capped at 81.
DensityMatrix run_density(const Circuit& c, const std::vector<int>& input_digits,
                          const NoiseParams& noise);

/// <psi| rho |psi>.
double fidelity(const DensityMatrix& rho, const StateVector& psi);

}  // namespace qtrit
