// Covariant Hamiltonian side of the theory: phase-space momenta, so(1,3)
// structure constants, the quadratic Hamiltonian, the Legendre pair, the
// associated Lagrangians, the coefficients of the Hamiltonian 4-form and
// the Hamilton-De Donder residuals.
#ifndef TETRAGAUGE_GAUGE_PHASE_HPP
#define TETRAGAUGE_GAUGE_PHASE_HPP

#include <array>

#include "tetragauge/frame_geometry.hpp"
#include "tetragauge/tensor_core.hpp"

namespace tetragauge {

/// Momenta Pi^{ij}_{mu nu}, antisymmetric in (i,j) and (mu,nu),
/// stored per ordered pair i<j, mu<nu.
class Momenta {
 public:
  Momenta() = default;

  double& at(int ijpair, int munupair) noexcept {
    return p_[static_cast<std::size_t>(ijpair * kPairCount + munupair)];
  }
  double at(int ijpair, int munupair) const noexcept {
    return p_[static_cast<std::size_t>(ijpair * kPairCount + munupair)];
  }

  // Full-range component Pi^{ij}_{mu nu}.
  double operator()(int i, int j, int mu, int nu) const noexcept {
    if (i == j || mu == nu) return 0.0;
    double sign = 1.0;
    if (i > j) {
      std::swap(i, j);
      sign = -sign;
    }
    if (mu > nu) {
      std::swap(mu, nu);
      sign = -sign;
    }
    return sign * at(detail::pair_code(i, j), detail::pair_code(mu, nu));
  }

 private:
  std::array<double, 36> p_{};
};

/// Partial derivatives of momenta: (k, ijpair, munupair) = dPi / dx^k.
struct MomentaGradient {
  std::array<double, 144> d{};

  double& at(int k, int ijpair, int munupair) noexcept {
    return d[static_cast<std::size_t>((k * kPairCount + ijpair) * kPairCount + munupair)];
  }
  double at(int k, int ijpair, int munupair) const noexcept {
    return d[static_cast<std::size_t>((k * kPairCount + ijpair) * kPairCount + munupair)];
  }

  // Full-range dPi^{ij}_{mu nu} / dx^k.
  double operator()(int k, int i, int j, int mu, int nu) const noexcept {
    if (i == j || mu == nu) return 0.0;
    double sign = 1.0;
    if (i > j) {
      std::swap(i, j);
      sign = -sign;
    }
    if (mu > nu) {
      std::swap(mu, nu);
      sign = -sign;
    }
    return sign * at(k, detail::pair_code(i, j), detail::pair_code(mu, nu));
  }
};

/// Structure coefficients C^{mu nu}_{rho beta, lambda sigma} of so(1,3) in
/// the antisymmetric-pair basis, generated from commutators of the
/// defining-representation generators (never hand-typed):
///   [J_{rho beta}, J_{lambda sigma}] = 1/2 C^{mu nu}_{rho beta, lambda sigma} J_{mu nu}
/// with the upper pair summed over its full range.
class StructureConstants {
 public:
  double& at(int upper, int lower1, int lower2) noexcept {
    return c_[static_cast<std::size_t>((upper * kPairCount + lower1) * kPairCount + lower2)];
  }
  double at(int upper, int lower1, int lower2) const noexcept {
    return c_[static_cast<std::size_t>((upper * kPairCount + lower1) * kPairCount + lower2)];
  }

  // Full-range component C^{mu nu}_{rho beta, lambda sigma}.
  double operator()(int mu, int nu, int rho, int beta, int lambda, int sigma) const noexcept {
    if (mu == nu || rho == beta || lambda == sigma) return 0.0;
    double sign = 1.0;
    if (mu > nu) {
      std::swap(mu, nu);
      sign = -sign;
    }
    if (rho > beta) {
      std::swap(rho, beta);
      sign = -sign;
    }
    if (lambda > sigma) {
      std::swap(lambda, sigma);
      sign = -sign;
    }
    return sign * at(detail::pair_code(mu, nu), detail::pair_code(rho, beta),
                     detail::pair_code(lambda, sigma));
  }

 private:
  std::array<double, 216> c_{};
};

/// A point sample of the phase-space sector: connection, momenta, first
/// derivatives. Input to the Hamilton-De Donder residuals.
struct PhaseJet {
  Vec4 x{};
  SpinConnection omega;
  ConnectionGradient domega;
  Momenta pi;
  MomentaGradient dpi;
};

/// Coefficients of the Hamiltonian 4-form Theta_h in the basis {ds, dw_i^{mu nu} ^ ds_j}.
/// The ds coefficient is computed along two routes that must agree: once
/// through the structure-constant table and once with the connection
/// products written out.
struct ThetaCoefficients {
  double ds_structure = 0.0;  // -H - 1/16 Pi w w C
  double ds_direct = 0.0;     // -H - 1/2 Pi w^mu_l w^{l nu}
  // Coefficient of dw_i^{mu nu} ^ ds_j on the mu<nu basis: -Pi^{ij}_{mu nu}
  // (identical in both routes).
  std::array<double, 96> domega{};

  double& domega_at(int i, int j, int pair) noexcept {
    return domega[static_cast<std::size_t>((i * 4 + j) * kPairCount + pair)];
  }
  double domega_at(int i, int j, int pair) const noexcept {
    return domega[static_cast<std::size_t>((i * 4 + j) * kPairCount + pair)];
  }
};

/// Residuals of the Hamilton-De Donder equations. r_omega is the momentum
/// equation (free indices one coordinate pair, one frame pair); r_pi is the
/// covariant divergence equation (free coordinate index, frame pair).
struct HddResiduals {
  std::array<double, 36> r_omega{};  // [ijpair][alphabetapair]
  std::array<double, 24> r_pi{};     // [i][munupair]

  double& r_omega_at(int ijpair, int abpair) noexcept {
    return r_omega[static_cast<std::size_t>(ijpair * kPairCount + abpair)];
  }
  double r_omega_at(int ijpair, int abpair) const noexcept {
    return r_omega[static_cast<std::size_t>(ijpair * kPairCount + abpair)];
  }
  double& r_pi_at(int i, int munupair) noexcept {
    return r_pi[static_cast<std::size_t>(i * kPairCount + munupair)];
  }
  double r_pi_at(int i, int munupair) const noexcept {
    return r_pi[static_cast<std::size_t>(i * kPairCount + munupair)];
  }
  double max_abs_omega() const noexcept;
  double max_abs_pi() const noexcept;
};

/// so(1,3) structure constants from the defining representation
/// (J_{mu nu})^a_b = delta^a_mu eta_{nu b} - delta^a_nu eta_{mu b}.
StructureConstants structure_constants();

/// H = Pi^{ij}_{mu nu} Pi^{pq}_{lambda sigma} eta^{mu lambda} eta^{nu sigma} eps_{ijpq},
/// all eight indices over their full range.
double hamiltonian(const Momenta& pi);

/// Inverse Legendre map R_{st}^{ab} = dH/dPi^{st}_{ab}
///                               = 8 Pi^{pq}_{ls} eta^{al} eta^{bs} eps_{stpq}.
Curvature inverse_legendre(const Momenta& pi);

/// Legendre map Pi^{ij}_{ls} = 1/32 R_{st}^{ab} eta_{al} eta_{bs} eps^{stij};
/// inverse of inverse_legendre, and the gradient of the closed-form Lagrangian.
Momenta legendre(const Curvature& r);

/// L = 1/256 R_{st}^{ab} R_{ij}^{ls} eta_{al} eta_{bs} eps^{stij}.
double lagrangian_closed_form(const Curvature& r);

/// L = 1/4 Pi^{ij}_{ls} R_{ij}^{ls} - H(Pi). Matches the closed form when
/// Pi = legendre(R).
double lagrangian_hamiltonian_form(const Momenta& pi, const Curvature& r);

/// Both coefficient routes of Theta_h at (Pi, omega).
ThetaCoefficients theta_h_coefficients(const Momenta& pi, const SpinConnection& omega);

/// Left sides of the Hamilton-De Donder equations at a phase jet. dH/dPi is
/// taken analytically (it equals inverse_legendre); dH/domega = 0 since the
/// Hamiltonian does not depend on the connection.
HddResiduals hdd_residuals(const PhaseJet& jet);

}  // namespace tetragauge

#endif  // TETRAGAUGE_GAUGE_PHASE_HPP
