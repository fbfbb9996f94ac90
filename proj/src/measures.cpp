#include "qtel/measures.hpp"

#include "qtel/states.hpp"

#include <cmath>
#include <stdexcept>

namespace qtel {

namespace {

const QubitIndexMap kTwoQubits{1, 2};

void require_two_qubit(const cmat& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw std::invalid_argument("expected a two-qubit (4x4) state");
  }
}

}  // namespace

double entanglement(const cmat& rho) {
  require_two_qubit(rho);
  const cmat pt = partial_transpose(rho, 2, kTwoQubits);
  const Eigen::VectorXd ev = hermitian_eigenvalues(pt);
  double sum_neg = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < -1e-12) sum_neg += ev(i);
  }
  return std::clamp(-2.0 * sum_neg, 0.0, 1.0);
}

double total_information(const cmat& rho) {
  return (2.0 / 3.0) * (4.0 * purity(rho) - 1.0);
}

double individual_information(const cmat& rho, int which) {
  require_two_qubit(rho);
  if (which != 0 && which != 1) {
    throw std::invalid_argument("marginal selector must be 0 or 1");
  }
  const cmat marg = partial_trace(rho, {which == 0 ? 1 : 2}, kTwoQubits);
  return 2.0 * (marg * marg).trace().real() - 1.0;
}

double correlation_information(const cmat& rho) {
  require_two_qubit(rho);
  const cmat ma = partial_trace(rho, {1}, kTwoQubits);
  const cmat mb = partial_trace(rho, {2}, kTwoQubits);
  const double by_definition =
      total_information(rho) - total_information(kron(ma, mb));

  const BlochRep rep = bloch_decompose(rho);
  const double by_bloch =
      (2.0 / 3.0) * (rep.c.squaredNorm() -
                     rep.a.squaredNorm() * rep.b.squaredNorm());
  if (std::abs(by_definition - by_bloch) > 1e-12) {
    throw std::runtime_error("correlation information cross-check failed");
  }
  return by_definition;
}

InformationBreakdown information_breakdown(const cmat& rho) {
  return InformationBreakdown{
      total_information(rho),
      individual_information(rho, 0),
      individual_information(rho, 1),
      correlation_information(rho),
  };
}

double fidelity(const cvec& pure, const cmat& rho) {
  if (pure.size() != rho.rows()) {
    throw std::invalid_argument("fidelity operands do not conform");
  }
  const cplx f = pure.adjoint() * rho * pure;
  return f.real();
}

double purity(const cmat& rho) { return (rho * rho).trace().real(); }

double singlet_fraction(const cmat& rho) {
  require_two_qubit(rho);
  return fidelity(singlet(), rho);
}

}  // namespace qtel
