#pragma once

#include "qtel/linalg.hpp"

namespace qtel {

/// Negativity-based entanglement of a two-qubit state: -2 times the sum
/// of the negative eigenvalues of the partial transpose over qubit 2.
/// Eigenvalues above -1e-12 are treated as numerical noise; the result
/// is clamped to [0, 1].
double entanglement(const cmat& rho);

/// Total information in bits, (2/3)(4 Tr rho^2 - 1); a pure two-qubit
/// state carries 2 bits.
double total_information(const cmat& rho);

/// Individual information of one marginal, 2 Tr(rho_a^2) - 1.
/// which: 0 for the first qubit, 1 for the second.
double individual_information(const cmat& rho, int which);

/// Correlation information: total information minus that of the product
/// of marginals. Cross-checked internally against the Bloch closed form
/// (2/3)(sum c_nm^2 - |a|^2 |b|^2); throws on disagreement beyond 1e-12.
double correlation_information(const cmat& rho);

struct InformationBreakdown {
  double total;
  double individual_a;
  double individual_b;
  double correlation;
};

InformationBreakdown information_breakdown(const cmat& rho);

/// Overlap Tr(|psi><psi| rho) between a pure reference and a state.
double fidelity(const cvec& pure, const cmat& rho);

double purity(const cmat& rho);

/// Overlap with the singlet projector; (phi+1)/2 for werner(phi).
double singlet_fraction(const cmat& rho);

}  // namespace qtel
