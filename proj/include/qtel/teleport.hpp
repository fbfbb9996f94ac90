#pragma once

#include "qtel/states.hpp"

#include <array>
#include <vector>

namespace qtel {

/// Bell states indexed alpha in {0..3}: Psi-, Psi+, Phi-, Phi+.
/// Paired corrections: I, sigma_z, sigma_x, sigma_y. This assignment is
/// pinned; it reproduces any input exactly through a phi = 1 channel.
const std::array<cvec, 4>& bell_basis();
const std::array<cmat, 4>& correction_table();

struct TeleportOutcome {
  int alpha;
  int beta;  // -1 for single-pair teleportation
  double probability;
  cmat conditional_state;
};

struct TeleportResult {
  cmat state;  // probability-weighted average over outcomes
  std::vector<TeleportOutcome> outcomes;
};

/// Teleport one particle (1 or 2) of a two-qubit state through a Werner
/// channel. The returned state replaces the teleported particle by the
/// channel's far qubit, ordered (left, right) of the logical pair.
/// Every outcome probability is 1/4.
TeleportResult teleport_one(const cmat& rho_in, int particle,
                            WernerChannel channel);

/// Teleport both particles through independent Werner channels
/// (particle layout [1,2,3,5,4,6]; Bell measurements on (1,3) and
/// (2,4), corrections on 5 and 6). Every outcome probability is 1/16.
TeleportResult teleport_two(const cmat& rho12, WernerChannel ch1,
                            WernerChannel ch2);

/// Closed-form contraction map on Bloch representations:
/// a -> kappa1 a, b -> kappa2 b, c_nm -> kappa1 kappa2 c_nm.
/// kappa2 = 1 gives the single-teleportation (particle 1) map.
BlochRep teleport_closed_form(const BlochRep& rep, double kappa1,
                              double kappa2);

}  // namespace qtel
