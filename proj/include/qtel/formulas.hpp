#pragma once

namespace qtel {

/// Channel contraction factor kappa = (2 E_w + 1)/3.
/// Each teleportation scales local Bloch vectors by kappa and the
/// correlation matrix by one kappa per teleported qubit.
double kappa(double ew);

/// Fidelity of the double-teleported replica against a pure input with
/// entanglement e12: (ew+2)^2/9 + (2ew+1)(ew-1)/9 * e12^2.
double fidelity_formula(double e12, double ew);

/// Replica entanglement, clamped at zero:
/// max{0, [(2ew^2 + 2ew - 4) + (1+2ew)^2 e12] / 9}.
double replica_entanglement_formula(double e12, double ew);

/// Minimum channel entanglement needed to transfer any entanglement:
/// (3 - sqrt(2 e12 + 1)) / (2 sqrt(2 e12 + 1)). Returns 1 at e12 = 0
/// (no entanglement to transfer).
double critical_channel_entanglement(double e12);

/// Correlation information surviving double teleportation:
/// kappa(ew)^4 * ic12.
double correlation_transfer(double ic12, double ew);

/// Correlation information of the intermediate state rho_72, expressed
/// through its measured entanglement e72. With
/// Y = e72 (e72 + 1 - kappa) / (ew (2 + ew)), returns 2 kappa^2 (4-3Y) Y.
/// Throws std::domain_error at ew = 0.
double intermediate_correlation(double e72, double ew);

/// Entanglement of rho_72 for a pure input of entanglement e12 teleported
/// through a channel of entanglement ew: the positive root of
/// e72^2 + (1 - kappa) e72 - ew (2 + ew) e12^2 / 3 = 0.
double intermediate_entanglement(double e12, double ew);

}  // namespace qtel
