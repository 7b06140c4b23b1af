#include "qtrit/noise.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace qtrit {

int KrausChannel::dimension() const {
  return operators.empty() ? 0 : static_cast<int>(operators.front().rows());
}

double completeness_defect(const KrausChannel& ch) {
  if (ch.operators.empty()) return 1.0;
  const auto n = ch.operators.front().rows();
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n, n);
  for (const Eigen::MatrixXcd& k : ch.operators) sum += k.adjoint() * k;
  sum -= Eigen::MatrixXcd::Identity(n, n);
  return sum.cwiseAbs().maxCoeff();
}

bool is_complete(const KrausChannel& ch, double tol) { return completeness_defect(ch) <= tol; }

namespace {

// Shift and clock on one d-level wire: X|m> = |m+1 mod d>, Z = diag(w^m).
Eigen::MatrixXcd shift_op(int d) {
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(d, d);
  for (int m = 0; m < d; ++m) x((m + 1) % d, m) = 1.0;
  return x;
}

Eigen::MatrixXcd clock_op(int d) {
  Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(d, d);
  for (int m = 0; m < d; ++m) {
    const double phase = 2.0 * std::numbers::pi * m / d;
    z(m, m) = std::complex<double>(std::cos(phase), std::sin(phase));
  }
  return z;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace

KrausChannel depolarizing_channel(const std::vector<int>& dims, double eps_total) {
  if (dims.empty()) throw std::invalid_argument("depolarizing channel needs at least one wire");
  for (int d : dims) {
    if (d != 2 && d != 3) throw std::invalid_argument("wire dimension must be 2 or 3");
  }
  if (!(eps_total >= 0.0 && eps_total <= 1.0)) {
    throw std::invalid_argument("depolarizing strength must lie in [0, 1]");
  }

  long n_terms = 1;
  for (int d : dims) n_terms *= static_cast<long>(d) * d;

  KrausChannel ch;
  const double w_id = std::sqrt(1.0 - eps_total);
  const double w_err =
      n_terms > 1 ? std::sqrt(eps_total / static_cast<double>(n_terms - 1)) : 0.0;

  // Enumerate (j, k) exponents per wire, building X^j Z^k products.
  std::vector<int> exp(2 * dims.size(), 0);
  for (long term = 0; term < n_terms; ++term) {
    const double w = term == 0 ? w_id : w_err;
    if (w != 0.0) {
      Eigen::MatrixXcd op = Eigen::MatrixXcd::Identity(1, 1);
      for (std::size_t i = 0; i < dims.size(); ++i) {
        const int d = dims[i];
        Eigen::MatrixXcd local = Eigen::MatrixXcd::Identity(d, d);
        for (int r = 0; r < exp[2 * i]; ++r) local = shift_op(d) * local;
        for (int r = 0; r < exp[2 * i + 1]; ++r) local = clock_op(d) * local;
        op = kron(op, local);
      }
      ch.operators.push_back(w * op);
    }
    // odometer over the exponent digits
    for (std::size_t i = exp.size(); i-- > 0;) {
      const int d = dims[i / 2];
      if (++exp[i] < d) break;
      exp[i] = 0;
    }
  }
  return ch;
}

KrausChannel amplitude_damping_channel(int radix, double lambda1, double lambda2) {
  if (radix != 2 && radix != 3) throw std::invalid_argument("radix must be 2 or 3");
  auto check = [](double l) {
    if (!(l >= 0.0 && l <= 1.0)) {
      throw std::invalid_argument("damping probability must lie in [0, 1]");
    }
  };
  check(lambda1);
  if (radix == 3) check(lambda2);

  KrausChannel ch;
  if (radix == 2) {
    Eigen::MatrixXcd k0 = Eigen::MatrixXcd::Zero(2, 2);
    k0(0, 0) = 1.0;
    k0(1, 1) = std::sqrt(1.0 - lambda1);
    ch.operators.push_back(k0);
    if (lambda1 > 0.0) {
      Eigen::MatrixXcd k1 = Eigen::MatrixXcd::Zero(2, 2);
      k1(0, 1) = std::sqrt(lambda1);
      ch.operators.push_back(k1);
    }
    return ch;
  }
  Eigen::MatrixXcd k0 = Eigen::MatrixXcd::Zero(3, 3);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - lambda1);
  k0(2, 2) = std::sqrt(1.0 - lambda2);
  ch.operators.push_back(k0);
  if (lambda1 > 0.0) {
    Eigen::MatrixXcd k1 = Eigen::MatrixXcd::Zero(3, 3);
    k1(0, 1) = std::sqrt(lambda1);
    ch.operators.push_back(k1);
  }
  if (lambda2 > 0.0) {
    Eigen::MatrixXcd k2 = Eigen::MatrixXcd::Zero(3, 3);
    k2(0, 2) = std::sqrt(lambda2);
    ch.operators.push_back(k2);
  }
  return ch;
}

}  // namespace qtrit
