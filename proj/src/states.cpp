#include "qtel/states.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qtel {

const cmat& pauli(int n) {
  static const cmat sx = [] {
    cmat m(2, 2);
    m << 0, 1, 1, 0;
    return m;
  }();
  static const cmat sy = [] {
    cmat m(2, 2);
    m << cplx(0, 0), cplx(0, -1), cplx(0, 1), cplx(0, 0);
    return m;
  }();
  static const cmat sz = [] {
    cmat m(2, 2);
    m << 1, 0, 0, -1;
    return m;
  }();
  switch (n) {
    case 0: return sx;
    case 1: return sy;
    case 2: return sz;
    default: throw std::invalid_argument("pauli index must be 0, 1 or 2");
  }
}

const cmat& identity2() {
  static const cmat i2 = cmat::Identity(2, 2);
  return i2;
}

const cvec& singlet() {
  static const cvec s = [] {
    cvec v = cvec::Zero(4);
    const double r = 1.0 / std::sqrt(2.0);
    v(1) = r;
    v(2) = -r;
    return v;
  }();
  return s;
}

cmat projector(const cvec& psi) { return psi * psi.adjoint(); }

void assert_density(const cmat& rho) {
  if (rho.rows() != rho.cols()) {
    throw std::invalid_argument("density matrix must be square");
  }
  const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm > HERMITICITY_TOL) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(rho.trace().real() - 1.0) > 1e-12 ||
      std::abs(rho.trace().imag()) > 1e-12) {
    throw std::invalid_argument("density matrix does not have unit trace");
  }
  const Eigen::VectorXd ev = hermitian_eigenvalues(rho);
  if (ev(0) < -PSD_TOL) {
    throw std::invalid_argument("density matrix is not positive semidefinite");
  }
}

cmat werner(double phi) {
  if (phi < -1.0 || phi > 1.0) {
    throw std::domain_error("Werner parameter must lie in [-1, 1]");
  }
  const double p = (2.0 * phi + 1.0) / 3.0;
  cmat rho = cmat::Identity(4, 4);
  for (int n = 0; n < 3; ++n) {
    rho -= p * kron(pauli(n), pauli(n));
  }
  return rho / 4.0;
}

cvec schmidt_pure(double theta) {
  cvec v = cvec::Zero(4);
  v(0) = std::cos(theta);
  v(3) = std::sin(theta);
  return v;
}

cvec random_pure(std::uint64_t seed) {
  // Box-Muller over mt19937_64 uniforms keeps the draw bit-reproducible
  // across standard libraries (std::normal_distribution is not).
  std::mt19937_64 gen(seed);
  auto uniform = [&gen] {
    return (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53;
  };
  double gauss[8];
  for (int i = 0; i < 8; i += 2) {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    gauss[i] = r * std::cos(2.0 * std::numbers::pi * u2);
    gauss[i + 1] = r * std::sin(2.0 * std::numbers::pi * u2);
  }
  cvec v(4);
  for (int i = 0; i < 4; ++i) v(i) = cplx(gauss[2 * i], gauss[2 * i + 1]);
  return v / v.norm();
}

BlochRep bloch_decompose(const cmat& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw std::invalid_argument("Bloch decomposition requires a 4x4 matrix");
  }
  BlochRep rep;
  double max_imag = 0.0;
  auto tr = [&](const cmat& op) {
    const cplx t = (rho * op).trace();
    max_imag = std::max(max_imag, std::abs(t.imag()));
    return t.real();
  };
  for (int n = 0; n < 3; ++n) {
    rep.a(n) = tr(kron(pauli(n), identity2()));
    rep.b(n) = tr(kron(identity2(), pauli(n)));
    for (int m = 0; m < 3; ++m) {
      rep.c(n, m) = tr(kron(pauli(n), pauli(m)));
    }
  }
  if (max_imag > 1e-10) {
    throw std::invalid_argument("Bloch coefficients have imaginary residue; input not Hermitian");
  }
  return rep;
}

cmat bloch_compose(const BlochRep& rep) {
  cmat rho = cmat::Identity(4, 4);
  for (int n = 0; n < 3; ++n) {
    rho += rep.a(n) * kron(pauli(n), identity2());
    rho += rep.b(n) * kron(identity2(), pauli(n));
    for (int m = 0; m < 3; ++m) {
      rho += rep.c(n, m) * kron(pauli(n), pauli(m));
    }
  }
  rho /= 4.0;
  const Eigen::VectorXd ev = hermitian_eigenvalues(rho);
  if (ev(0) < -PSD_TOL) {
    throw std::invalid_argument("Bloch representation does not describe a state");
  }
  return rho;
}

}  // namespace qtel
