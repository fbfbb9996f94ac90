#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace qtel {

using cplx = std::complex<double>;
using cmat = Eigen::MatrixXcd;
using cvec = Eigen::VectorXcd;

// Tolerances shared across modules; acceptance tests reference these.
inline constexpr double HERMITICITY_TOL = 1e-10;
inline constexpr double EIG_TOL = 1e-13;
inline constexpr double PSD_TOL = 1e-10;

/// Maps particle labels to tensor slots. Slot 0 is the most significant
/// bit of the computational-basis index.
struct QubitIndexMap {
  std::vector<int> labels;

  QubitIndexMap() = default;
  QubitIndexMap(std::initializer_list<int> ls) : labels(ls) {}
  explicit QubitIndexMap(std::vector<int> ls) : labels(std::move(ls)) {}

  int size() const { return static_cast<int>(labels.size()); }

  // Throws std::invalid_argument on an unknown label.
  int slot(int label) const;
  bool contains(int label) const;

  /// Map with the given labels removed, remaining slot order preserved.
  QubitIndexMap without(std::initializer_list<int> removed) const;
};

cmat kron(const cmat& a, const cmat& b);

/// Trace out all qubits not listed in `keep`. The result's qubit order
/// follows the order of `keep` (keep[0] is the most significant bit).
cmat partial_trace(const cmat& rho, const std::vector<int>& keep,
                   const QubitIndexMap& map);

/// Transpose the indices of a single labeled qubit.
cmat partial_transpose(const cmat& rho, int label, const QubitIndexMap& map);

/// Ascending eigenvalues of a Hermitian matrix via cyclic Jacobi
/// rotations. Throws if the input deviates from Hermiticity by more
/// than HERMITICITY_TOL, or if 100 sweeps fail to converge.
Eigen::VectorXd hermitian_eigenvalues(const cmat& h);

/// Contract a two-qubit bra <psi| against the qubits `label0`, `label1`
/// on both sides of rho: out = <psi| rho |psi> as an operator on the
/// remaining qubits. The trace of the result is the outcome probability
/// when psi is normalized.
cmat contract_bra(const cmat& rho, const cvec& psi, int label0, int label1,
                  const QubitIndexMap& map);

}  // namespace qtel
