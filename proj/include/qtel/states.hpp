#pragma once

#include "qtel/linalg.hpp"

#include <cstdint>

namespace qtel {

/// Pauli matrices; n in {0,1,2} for sigma_x, sigma_y, sigma_z.
const cmat& pauli(int n);
const cmat& identity2();

/// Singlet (|01> - |10>)/sqrt(2).
const cvec& singlet();

cmat projector(const cvec& psi);

/// Throws std::invalid_argument unless rho is Hermitian (1e-10),
/// unit-trace (1e-12) and PSD (min eigenvalue >= -PSD_TOL).
void assert_density(const cmat& rho);

/// One-parameter noisy channel family, PSD exactly for phi in [-1, 1].
/// Entanglement of the state is max(0, phi); singlet fraction (phi+1)/2.
struct WernerChannel {
  double phi;
};

/// 4x4 Werner density matrix. Throws std::domain_error outside [-1, 1].
cmat werner(double phi);

/// cos(theta)|00> + sin(theta)|11>. The Schmidt angle theta is this
/// implementation's handle on the input entanglement: E = sin(2 theta).
cvec schmidt_pure(double theta);

/// Haar-random two-qubit pure state, deterministic for a fixed seed.
cvec random_pure(std::uint64_t seed);

/// Local Bloch vectors and correlation matrix of a two-qubit state:
/// rho = (1/4)(I + a.sigma x I + I x b.sigma + sum c_nm sigma_n x sigma_m).
struct BlochRep {
  Eigen::Vector3d a = Eigen::Vector3d::Zero();
  Eigen::Vector3d b = Eigen::Vector3d::Zero();
  Eigen::Matrix3d c = Eigen::Matrix3d::Zero();
};

BlochRep bloch_decompose(const cmat& rho);

/// Inverse of bloch_decompose. Throws std::invalid_argument if the
/// resulting matrix is not PSD within PSD_TOL.
cmat bloch_compose(const BlochRep& rep);

}  // namespace qtel
