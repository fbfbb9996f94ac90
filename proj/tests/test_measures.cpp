#include "qtel/measures.hpp"
#include "qtel/states.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace qtel;

TEST_CASE("entanglement of reference states") {
  cmat zero_state = cmat::Zero(4, 4);
  zero_state(0, 0) = 1.0;
  CHECK(entanglement(zero_state) == 0.0);
  CHECK(entanglement(projector(schmidt_pure(std::numbers::pi / 8.0))) ==
        doctest::Approx(std::sin(std::numbers::pi / 4.0)).epsilon(1e-10));
}

TEST_CASE("entanglement is independent of the transposed side") {
  std::mt19937_64 gen(43);
  const QubitIndexMap pair{1, 2};
  for (int trial = 0; trial < 50; ++trial) {
    const cmat rho = test::random_mixed_two_qubit(gen);
    const Eigen::VectorXd ev1 =
        hermitian_eigenvalues(partial_transpose(rho, 1, pair));
    const Eigen::VectorXd ev2 =
        hermitian_eigenvalues(partial_transpose(rho, 2, pair));
    CHECK((ev1 - ev2).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("entanglement stays within [0, 1] on random mixed states") {
  std::mt19937_64 gen(47);
  for (int trial = 0; trial < 10000; ++trial) {
    const double e = entanglement(test::random_mixed_two_qubit(gen));
    CHECK(e >= 0.0);
    CHECK(e <= 1.0);
  }
}

TEST_CASE("total information of reference states") {
  std::mt19937_64 gen(53);
  CHECK(total_information(projector(test::haar_vector(4, gen))) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(total_information(cmat::Identity(4, 4) / 4.0) ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  CHECK(total_information(werner(1.0)) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("individual information of reference states") {
  const cmat s = projector(singlet());
  CHECK(individual_information(s, 0) ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  CHECK(individual_information(s, 1) ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-12));

  cmat zero_state = cmat::Zero(4, 4);
  zero_state(0, 0) = 1.0;
  CHECK(individual_information(zero_state, 0) == doctest::Approx(1.0));

  CHECK(individual_information(projector(schmidt_pure(std::numbers::pi / 8.0)),
                               0) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("correlation information of reference states") {
  CHECK(correlation_information(projector(singlet())) ==
        doctest::Approx(2.0).epsilon(1e-12));

  std::mt19937_64 gen(59);
  const cmat prod = kron(projector(test::haar_vector(2, gen)),
                         projector(test::haar_vector(2, gen)));
  CHECK(correlation_information(prod) ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
}

TEST_CASE("Werner correlation information is quadratic in entanglement") {
  // I^c = 2((2E+1)/3)^2, i.e. alpha = 2/9, beta = 8/9, gamma = 8/9.
  for (double e = 0.0; e <= 1.0 + 1e-9; e += 0.1) {
    const double p = (2.0 * e + 1.0) / 3.0;
    CHECK(correlation_information(werner(e)) ==
          doctest::Approx(2.0 * p * p).epsilon(1e-12));
    CHECK(2.0 * p * p ==
          doctest::Approx(2.0 / 9.0 + 8.0 / 9.0 * e + 8.0 / 9.0 * e * e));
  }
}

TEST_CASE("pure-state correlation information is exhausted by entanglement") {
  for (double theta = 0.0; theta <= std::numbers::pi / 4.0 + 1e-9;
       theta += std::numbers::pi / 60.0) {
    const cmat rho = projector(schmidt_pure(theta));
    const double e = entanglement(rho);
    const double expected =
        2.0 - (2.0 / 3.0) * (4.0 * (1.0 - e * e / 2.0) * (1.0 - e * e / 2.0) - 1.0);
    CHECK(correlation_information(rho) ==
          doctest::Approx(expected).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("correlation information cross-check holds on random states") {
  std::mt19937_64 gen(61);
  for (int trial = 0; trial < 100; ++trial) {
    CHECK_NOTHROW(correlation_information(test::random_mixed_two_qubit(gen)));
  }
}

TEST_CASE("fidelity of reference pairs") {
  std::mt19937_64 gen(67);
  const cvec psi = test::haar_vector(4, gen);
  CHECK(fidelity(psi, projector(psi)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fidelity(cvec::Unit(4, 0), cmat::Identity(4, 4) / 4.0) ==
        doctest::Approx(0.25).epsilon(1e-12));
  for (double phi : {-0.6, 0.0, 0.5, 1.0}) {
    CHECK(fidelity(singlet(), werner(phi)) ==
          doctest::Approx((phi + 1.0) / 2.0).epsilon(1e-12).scale(1.0));
    CHECK(singlet_fraction(werner(phi)) ==
          doctest::Approx((phi + 1.0) / 2.0).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("purity of reference states") {
  std::mt19937_64 gen(71);
  CHECK(purity(projector(test::haar_vector(4, gen))) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(purity(werner(-0.5)) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(singlet_fraction(werner(0.5)) == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("measures are invariant under local unitaries") {
  std::mt19937_64 gen(73);
  for (int trial = 0; trial < 100; ++trial) {
    const cmat rho = test::random_mixed_two_qubit(gen);
    const cmat u = kron(test::random_su2(gen), test::random_su2(gen));
    const cmat rot = u * rho * u.adjoint();
    CHECK(std::abs(entanglement(rot) - entanglement(rho)) < 1e-10);
    CHECK(std::abs(total_information(rot) - total_information(rho)) < 1e-10);
    CHECK(std::abs(individual_information(rot, 0) -
                   individual_information(rho, 0)) < 1e-10);
    CHECK(std::abs(individual_information(rot, 1) -
                   individual_information(rho, 1)) < 1e-10);
    CHECK(std::abs(correlation_information(rot) -
                   correlation_information(rho)) < 1e-10);
    CHECK(std::abs(purity(rot) - purity(rho)) < 1e-10);
  }
}

TEST_CASE("information breakdown is internally consistent") {
  std::mt19937_64 gen(79);
  const cmat rho = test::random_mixed_two_qubit(gen);
  const InformationBreakdown b = information_breakdown(rho);
  CHECK(b.total == doctest::Approx(total_information(rho)));
  CHECK(b.individual_a >= -1e-12);
  CHECK(b.individual_a <= 1.0 + 1e-12);
  CHECK(b.individual_b >= -1e-12);
  CHECK(b.individual_b <= 1.0 + 1e-12);
  CHECK(b.correlation >= -1e-12);
  CHECK(b.correlation <= 2.0 + 1e-12);
}
