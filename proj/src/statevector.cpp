#include "qtrit/sim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qtrit {

namespace {

void check_dims(const std::vector<int>& dims) {
  if (dims.empty()) throw std::invalid_argument("state needs at least one wire");
  for (int d : dims) {
    if (d != 2 && d != 3) throw std::invalid_argument("wire dimension must be 2 or 3");
  }
}

std::size_t dimension_of(const std::vector<int>& dims) {
  std::size_t n = 1;
  for (int d : dims) n *= static_cast<std::size_t>(d);
  return n;
}

}  // namespace

StateVector::StateVector(std::vector<int> dims) : dims_(std::move(dims)) {
  check_dims(dims_);
  amps_.assign(dimension_of(dims_), 0.0);
  amps_[0] = 1.0;
}

StateVector StateVector::basis(std::vector<int> dims, const std::vector<int>& digits) {
  StateVector s(std::move(dims));
  const std::size_t i = s.index_of(digits);
  s.amps_[0] = 0.0;
  s.amps_[i] = 1.0;
  return s;
}

double StateVector::norm() const {
  double acc = 0.0;
  for (const auto& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

std::size_t StateVector::index_of(const std::vector<int>& digits) const {
  if (digits.size() != dims_.size()) throw std::invalid_argument("one digit per wire required");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (digits[i] < 0 || digits[i] >= dims_[i]) {
      throw std::invalid_argument("digit exceeds wire radix");
    }
    idx = idx * static_cast<std::size_t>(dims_[i]) + static_cast<std::size_t>(digits[i]);
  }
  return idx;
}

std::vector<int> StateVector::digits_of(std::size_t index) const {
  std::vector<int> digits(dims_.size(), 0);
  for (std::size_t i = dims_.size(); i-- > 0;) {
    const auto d = static_cast<std::size_t>(dims_[i]);
    digits[i] = static_cast<int>(index % d);
    index /= d;
  }
  return digits;
}

double StateVector::level_population(int wire, int level) const {
  if (wire < 0 || static_cast<std::size_t>(wire) >= dims_.size()) {
    throw std::invalid_argument("unknown wire id");
  }
  if (level < 0 || level >= dims_[static_cast<std::size_t>(wire)]) {
    throw std::invalid_argument("digit exceeds wire radix");
  }
  std::size_t stride = 1;
  for (std::size_t j = dims_.size(); j-- > static_cast<std::size_t>(wire) + 1;) {
    stride *= static_cast<std::size_t>(dims_[j]);
  }
  const auto d = static_cast<std::size_t>(dims_[static_cast<std::size_t>(wire)]);
  double p = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i / stride) % d == static_cast<std::size_t>(level)) p += std::norm(amps_[i]);
  }
  return p;
}

namespace {

Eigen::MatrixXcd x_matrix(int d) {
  // On a qutrit the X of this gate set swaps the two computational levels
  // and leaves |2> alone.
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(d, d);
  m(0, 0) = m(1, 1) = 0.0;
  m(0, 1) = m(1, 0) = 1.0;
  return m;
}

Eigen::MatrixXcd phase_gate(std::complex<double> p1) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2);
  m(1, 1) = p1;
  return m;
}

Eigen::MatrixXcd ternary_action_matrix(TernaryAction action, int dt) {
  if (action == TernaryAction::Flip01) return x_matrix(dt);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(3, 3);
  if (action == TernaryAction::Increment) {
    m(1, 0) = m(2, 1) = m(0, 2) = 1.0;
  } else {
    m(0, 1) = m(1, 2) = m(2, 0) = 1.0;
  }
  return m;
}

Eigen::MatrixXcd controlled(int dc, int fire_value, const Eigen::MatrixXcd& target) {
  const auto dt = target.rows();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dc * dt, dc * dt);
  m.block(fire_value * dt, fire_value * dt, dt, dt) = target;
  return m;
}

}  // namespace

Eigen::MatrixXcd gate_matrix(const Gate& g, const std::vector<int>& local_dims) {
  if (local_dims.size() != static_cast<std::size_t>(arity(g.kind))) {
    throw std::invalid_argument("arity mismatch");
  }
  const double is = 1.0 / std::numbers::sqrt2;
  const std::complex<double> t_phase(is, is);
  switch (g.kind) {
    case GateKind::X:
      return x_matrix(local_dims[0]);
    case GateKind::H: {
      Eigen::MatrixXcd m(2, 2);
      m << is, is, is, -is;
      return m;
    }
    case GateKind::T:
      return phase_gate(t_phase);
    case GateKind::Tdg:
      return phase_gate(std::conj(t_phase));
    case GateKind::S:
      return phase_gate({0.0, 1.0});
    case GateKind::Sdg:
      return phase_gate({0.0, -1.0});
    case GateKind::CX:
      return controlled(local_dims[0], 1, x_matrix(local_dims[1]));
    case GateKind::TernaryCX:
      return controlled(local_dims[0], g.control_value,
                        ternary_action_matrix(g.action, local_dims[1]));
    case GateKind::CCX: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(8, 8);
      m(6, 6) = m(7, 7) = 0.0;
      m(6, 7) = m(7, 6) = 1.0;
      return m;
    }
    case GateKind::Measure:
    case GateKind::Barrier:
      throw std::invalid_argument("measure and barrier have no matrix");
  }
  throw std::invalid_argument("unknown gate kind");
}

void apply_gate(StateVector& state, const Gate& g) {
  if (g.kind == GateKind::Measure || g.kind == GateKind::Barrier) return;

  const std::vector<int>& dims = state.dims();
  std::vector<int> local_dims;
  std::vector<std::size_t> strides;
  for (int w : g.wires) {
    local_dims.push_back(dims[static_cast<std::size_t>(w)]);
    std::size_t s = 1;
    for (std::size_t j = dims.size(); j-- > static_cast<std::size_t>(w) + 1;) {
      s *= static_cast<std::size_t>(dims[j]);
    }
    strides.push_back(s);
  }
  const Eigen::MatrixXcd m = gate_matrix(g, local_dims);
  const auto k = static_cast<std::size_t>(m.rows());

  // Offset of each local basis state inside the full index space.
  std::vector<std::size_t> offsets(k, 0);
  for (std::size_t l = 0; l < k; ++l) {
    std::size_t rem = l;
    for (std::size_t i = local_dims.size(); i-- > 0;) {
      const auto d = static_cast<std::size_t>(local_dims[i]);
      offsets[l] += (rem % d) * strides[i];
      rem /= d;
    }
  }

  // Walk the complement space with an odometer over non-gate wires.
  std::vector<std::size_t> rest_strides;
  std::vector<int> rest_dims;
  for (std::size_t w = 0; w < dims.size(); ++w) {
    if (std::find(g.wires.begin(), g.wires.end(), static_cast<int>(w)) != g.wires.end()) continue;
    std::size_t s = 1;
    for (std::size_t j = dims.size(); j-- > w + 1;) s *= static_cast<std::size_t>(dims[j]);
    rest_strides.push_back(s);
    rest_dims.push_back(dims[w]);
  }

  std::vector<std::complex<double>> in(k), out(k);
  std::vector<int> digits(rest_dims.size(), 0);
  bool more = true;
  while (more) {
    std::size_t base = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      base += static_cast<std::size_t>(digits[i]) * rest_strides[i];
    }
    for (std::size_t l = 0; l < k; ++l) in[l] = state[base + offsets[l]];
    for (std::size_t r = 0; r < k; ++r) {
      std::complex<double> acc = 0.0;
      for (std::size_t c = 0; c < k; ++c) acc += m(static_cast<Eigen::Index>(r),
                                                   static_cast<Eigen::Index>(c)) * in[c];
      out[r] = acc;
    }
    for (std::size_t l = 0; l < k; ++l) state[base + offsets[l]] = out[l];

    more = false;
    for (std::size_t i = digits.size(); i-- > 0;) {
      if (++digits[i] < rest_dims[i]) {
        more = true;
        break;
      }
      digits[i] = 0;
    }
  }
}

StateVector run(const Circuit& c, const std::vector<int>& input_digits) {
  require_valid(c);
  StateVector s = StateVector::basis(wire_dims(c), input_digits);
  for (const Gate& g : c.gates) apply_gate(s, g);
  return s;
}

Eigen::MatrixXcd unitary_of(const Circuit& c) {
  require_valid(c);
  const std::vector<int> dims = wire_dims(c);
  const auto n = static_cast<Eigen::Index>(total_dimension(dims, 256));
  Eigen::MatrixXcd u(n, n);
  const StateVector probe(dims);
  for (Eigen::Index col = 0; col < n; ++col) {
    StateVector s =
        StateVector::basis(dims, probe.digits_of(static_cast<std::size_t>(col)));
    for (const Gate& g : c.gates) apply_gate(s, g);
    for (Eigen::Index row = 0; row < n; ++row) {
      u(row, col) = s[static_cast<std::size_t>(row)];
    }
  }
  return u;
}

bool equivalent_up_to_global_phase(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v,
                                   double tol) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) return false;
  std::complex<double> phase = 1.0;
  bool anchored = false;
  for (Eigen::Index r = 0; r < v.rows() && !anchored; ++r) {
    for (Eigen::Index c = 0; c < v.cols() && !anchored; ++c) {
      if (std::abs(v(r, c)) > 1e-14) {
        const std::complex<double> ratio = u(r, c) / v(r, c);
        const double mag = std::abs(ratio);
        phase = mag > 0.0 ? ratio / mag : 1.0;
        anchored = true;
      }
    }
  }
  return (u - phase * v).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace qtrit
