#include "qtel/teleport.hpp"

#include <cmath>
#include <stdexcept>

namespace qtel {

namespace {

cvec bell_vec(int i0, int i1, double sign) {
  cvec v = cvec::Zero(4);
  const double r = 1.0 / std::sqrt(2.0);
  v(i0) = r;
  v(i1) = sign * r;
  return v;
}

const cmat& swap4() {
  static const cmat s = [] {
    cmat m = cmat::Zero(4, 4);
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) m(a * 2 + b, b * 2 + a) = 1.0;
    }
    return m;
  }();
  return s;
}

}  // namespace

const std::array<cvec, 4>& bell_basis() {
  static const std::array<cvec, 4> basis = {
      bell_vec(1, 2, -1.0),  // Psi-
      bell_vec(1, 2, +1.0),  // Psi+
      bell_vec(0, 3, -1.0),  // Phi-
      bell_vec(0, 3, +1.0),  // Phi+
  };
  return basis;
}

const std::array<cmat, 4>& correction_table() {
  static const std::array<cmat, 4> table = {identity2(), pauli(2), pauli(0),
                                            pauli(1)};
  return table;
}

TeleportResult teleport_one(const cmat& rho_in, int particle,
                            WernerChannel channel) {
  if (rho_in.rows() != 4 || rho_in.cols() != 4) {
    throw std::invalid_argument("teleport_one requires a two-qubit state");
  }
  if (particle != 1 && particle != 2) {
    throw std::invalid_argument("particle index must be 1 or 2");
  }
  const cmat w = werner(channel.phi);
  const cmat joint = kron(rho_in, w);
  // particle 1: map [1,2,3,5], Bell on (1,3), correction on 5, keep (5,2)
  // particle 2: map [1,2,4,6], Bell on (2,4), correction on 6, keep (1,6)
  const QubitIndexMap map = (particle == 1) ? QubitIndexMap{1, 2, 3, 5}
                                            : QubitIndexMap{1, 2, 4, 6};
  const int measured = particle;
  const int near = (particle == 1) ? 3 : 4;
  const auto& bells = bell_basis();
  const auto& corrs = correction_table();

  TeleportResult result;
  result.state = cmat::Zero(4, 4);
  for (int alpha = 0; alpha < 4; ++alpha) {
    cmat reduced = contract_bra(joint, bells[alpha], measured, near, map);
    const double prob = reduced.trace().real();
    // remaining order: particle 1 -> (2,5); particle 2 -> (1,6)
    const cmat u = kron(identity2(), corrs[alpha]);
    cmat corrected = u * reduced * u.adjoint();
    if (particle == 1) {
      corrected = swap4() * corrected * swap4();  // reorder to (5,2)
    }
    result.state += corrected;
    result.outcomes.push_back(
        TeleportOutcome{alpha, -1, prob, corrected / prob});
  }
  return result;
}

TeleportResult teleport_two(const cmat& rho12, WernerChannel ch1,
                            WernerChannel ch2) {
  if (rho12.rows() != 4 || rho12.cols() != 4) {
    throw std::invalid_argument("teleport_two requires a two-qubit state");
  }
  const cmat joint = kron(kron(rho12, werner(ch1.phi)), werner(ch2.phi));
  const QubitIndexMap map{1, 2, 3, 5, 4, 6};
  const auto& bells = bell_basis();
  const auto& corrs = correction_table();

  TeleportResult result;
  result.state = cmat::Zero(4, 4);
  for (int alpha = 0; alpha < 4; ++alpha) {
    const cmat after_a = contract_bra(joint, bells[alpha], 1, 3, map);
    const QubitIndexMap map_a = map.without({1, 3});  // [2,5,4,6]
    for (int beta = 0; beta < 4; ++beta) {
      cmat reduced = contract_bra(after_a, bells[beta], 2, 4, map_a);  // (5,6)
      const double prob = reduced.trace().real();
      const cmat u = kron(corrs[alpha], corrs[beta]);
      const cmat corrected = u * reduced * u.adjoint();
      result.state += corrected;
      result.outcomes.push_back(
          TeleportOutcome{alpha, beta, prob, corrected / prob});
    }
  }
  return result;
}

BlochRep teleport_closed_form(const BlochRep& rep, double kappa1,
                              double kappa2) {
  BlochRep out;
  out.a = kappa1 * rep.a;
  out.b = kappa2 * rep.b;
  out.c = kappa1 * kappa2 * rep.c;
  return out;
}

}  // namespace qtel
