#include "qtrit/sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qtrit {

namespace {

std::size_t dimension_of(const std::vector<int>& dims) {
  std::size_t n = 1;
  for (int d : dims) n *= static_cast<std::size_t>(d);
  return n;
}

std::size_t wire_stride(const std::vector<int>& dims, int wire) {
  std::size_t s = 1;
  for (std::size_t j = dims.size(); j-- > static_cast<std::size_t>(wire) + 1;) {
    s *= static_cast<std::size_t>(dims[j]);
  }
  return s;
}

// Lifts a local operator on the given wires to the full space. Row and
// column share the digits of every other wire.
Eigen::MatrixXcd embed(const Eigen::MatrixXcd& op, const std::vector<int>& wires,
                       const std::vector<int>& dims) {
  std::vector<int> local_dims;
  std::vector<std::size_t> strides;
  for (int w : wires) {
    local_dims.push_back(dims[static_cast<std::size_t>(w)]);
    strides.push_back(wire_stride(dims, w));
  }
  const auto k = static_cast<std::size_t>(op.rows());

  std::vector<std::size_t> offsets(k, 0);
  for (std::size_t l = 0; l < k; ++l) {
    std::size_t rem = l;
    for (std::size_t i = local_dims.size(); i-- > 0;) {
      const auto d = static_cast<std::size_t>(local_dims[i]);
      offsets[l] += (rem % d) * strides[i];
      rem /= d;
    }
  }

  std::vector<std::size_t> rest_strides;
  std::vector<int> rest_dims;
  for (std::size_t w = 0; w < dims.size(); ++w) {
    bool in_gate = false;
    for (int gw : wires) {
      if (static_cast<std::size_t>(gw) == w) in_gate = true;
    }
    if (in_gate) continue;
    rest_strides.push_back(wire_stride(dims, static_cast<int>(w)));
    rest_dims.push_back(dims[w]);
  }

  const auto n = static_cast<Eigen::Index>(dimension_of(dims));
  Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(n, n);
  std::vector<int> digits(rest_dims.size(), 0);
  bool more = true;
  while (more) {
    std::size_t base = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      base += static_cast<std::size_t>(digits[i]) * rest_strides[i];
    }
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) {
        full(static_cast<Eigen::Index>(base + offsets[r]),
             static_cast<Eigen::Index>(base + offsets[c])) =
            op(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
      }
    }
    more = false;
    for (std::size_t i = digits.size(); i-- > 0;) {
      if (++digits[i] < rest_dims[i]) {
        more = true;
        break;
      }
      digits[i] = 0;
    }
  }
  return full;
}

}  // namespace

DensityMatrix::DensityMatrix(std::vector<int> dims) : dims_(std::move(dims)) {
  for (int d : dims_) {
    if (d != 2 && d != 3) throw std::invalid_argument("wire dimension must be 2 or 3");
  }
  if (dims_.empty()) throw std::invalid_argument("state needs at least one wire");
  const auto n = static_cast<Eigen::Index>(dimension_of(dims_));
  rho_ = Eigen::MatrixXcd::Zero(n, n);
  rho_(0, 0) = 1.0;
}

DensityMatrix DensityMatrix::from_state(const StateVector& psi) {
  DensityMatrix rho(psi.dims());
  const auto n = static_cast<Eigen::Index>(psi.size());
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = psi[static_cast<std::size_t>(i)];
  rho.rho_ = v * v.adjoint();
  return rho;
}

std::complex<double> DensityMatrix::trace() const { return rho_.trace(); }

double DensityMatrix::hermiticity_defect() const {
  return (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (rho_ + rho_.adjoint()));
  return solver.eigenvalues().minCoeff();
}

void apply_unitary(DensityMatrix& rho, const Gate& g) {
  if (g.kind == GateKind::Measure || g.kind == GateKind::Barrier) return;
  std::vector<int> local_dims;
  for (int w : g.wires) local_dims.push_back(rho.dims()[static_cast<std::size_t>(w)]);
  const Eigen::MatrixXcd u = embed(gate_matrix(g, local_dims), g.wires, rho.dims());
  rho.matrix() = u * rho.matrix() * u.adjoint();
}

void apply_channel(DensityMatrix& rho, const KrausChannel& ch, const std::vector<int>& wires) {
  std::size_t local = 1;
  for (int w : wires) {
    if (w < 0 || static_cast<std::size_t>(w) >= rho.dims().size()) {
      throw std::invalid_argument("unknown wire id");
    }
    local *= static_cast<std::size_t>(rho.dims()[static_cast<std::size_t>(w)]);
  }
  if (ch.operators.empty() || static_cast<std::size_t>(ch.dimension()) != local) {
    throw std::invalid_argument("channel dimension does not match the wires");
  }
  Eigen::MatrixXcd next = Eigen::MatrixXcd::Zero(rho.matrix().rows(), rho.matrix().cols());
  for (const Eigen::MatrixXcd& k : ch.operators) {
    const Eigen::MatrixXcd full = embed(k, wires, rho.dims());
    next += full * rho.matrix() * full.adjoint();
  }
  rho.matrix() = next;
}

DensityMatrix run_density(const Circuit& c, const std::vector<int>& input_digits,
                          const NoiseParams& noise) {
  require_valid(c);
  const std::vector<int> dims = wire_dims(c);
  total_dimension(dims, 81);
  DensityMatrix rho = DensityMatrix::from_state(StateVector::basis(dims, input_digits));

  // Same greedy placement as depth(): a gate starts right after the latest
  // layer touching any of its wires.
  std::vector<int> last_layer(dims.size(), 0);
  std::vector<std::vector<const Gate*>> layers;
  for (const Gate& g : c.gates) {
    int start = 0;
    for (int w : g.wires) start = std::max(start, last_layer[static_cast<std::size_t>(w)]);
    if (static_cast<std::size_t>(start) >= layers.size()) layers.resize(start + 1);
    layers[static_cast<std::size_t>(start)].push_back(&g);
    for (int w : g.wires) last_layer[static_cast<std::size_t>(w)] = start + 1;
  }

  const double lambda_qubit = 1.0 - std::exp(-noise.gate_time / noise.t1_qubit);
  const double lambda_qutrit = 1.0 - std::exp(-noise.gate_time / noise.t1_qutrit);
  const KrausChannel damp_qubit = amplitude_damping_channel(2, lambda_qubit, 0.0);
  const KrausChannel damp_qutrit =
      amplitude_damping_channel(3, lambda_qutrit, lambda_qutrit);

  for (const auto& layer : layers) {
    for (const Gate* g : layer) {
      if (g->kind == GateKind::Measure || g->kind == GateKind::Barrier) continue;
      apply_unitary(rho, *g);
      const double eps = g->wires.size() == 1 ? noise.eps1 : noise.eps2;
      if (eps > 0.0) {
        std::vector<int> gate_dims;
        for (int w : g->wires) gate_dims.push_back(dims[static_cast<std::size_t>(w)]);
        apply_channel(rho, depolarizing_channel(gate_dims, eps), g->wires);
      }
    }
    for (std::size_t w = 0; w < dims.size(); ++w) {
      const KrausChannel& damp = dims[w] == 3 ? damp_qutrit : damp_qubit;
      if (damp.operators.size() > 1) apply_channel(rho, damp, {static_cast<int>(w)});
    }
  }
  return rho;
}

double fidelity(const DensityMatrix& rho, const StateVector& psi) {
  if (rho.dims() != psi.dims()) throw std::invalid_argument("state shapes differ");
  const auto n = static_cast<Eigen::Index>(psi.size());
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = psi[static_cast<std::size_t>(i)];
  return std::real((v.adjoint() * rho.matrix() * v)(0, 0));
}

}  // namespace qtrit
