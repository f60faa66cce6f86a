// The verification suites behind the CLI subcommands. Every suite is
// deterministic for a fixed seed and returns a Report with one entry per
// property checked.
#ifndef TETRAGAUGE_VERIFICATION_HPP
#define TETRAGAUGE_VERIFICATION_HPP

#include <cstdint>

#include "tetragauge/field_catalog.hpp"
#include "tetragauge/report.hpp"

namespace tetragauge {

/// Exhaustive integer identities: permutation-symbol antisymmetry, the
/// epsilon pair contraction, pair encode/decode, the signature table, and
/// the symbolic chain behind the vanishing pulled-back Hamiltonian.
Report run_identities();

/// Randomized proposition suite: Legendre round-trips, immersion ranks and
/// Jacobian cross-check, vanishing Hamiltonian on immersed frames, the
/// pull-back identity, both Theta_h coefficient routes, structure-constant
/// checks and Lorentz equivariance.
Report run_propositions(std::uint64_t seed, int trials);

/// Legendre round-trips only.
Report run_legendre_roundtrip(std::uint64_t seed, int trials);

/// Closed-form Lagrangian vs its Legendre form, and the Legendre map as the
/// finite-difference gradient of the Lagrangian.
Report run_lagrangian_consistency(std::uint64_t seed, int trials);

/// Admissibility plus vacuum residuals of a catalog field at sampled points.
/// With expect_fail the Einstein-sector checks are negative controls: they
/// must exceed 0.01 for the run to succeed.
Report run_check_solution(const AnalyticField& field, int points, std::uint64_t seed,
                          bool expect_fail);

}  // namespace tetragauge

#endif  // TETRAGAUGE_VERIFICATION_HPP
