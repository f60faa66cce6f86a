// The constraint map from frame data into the gauge phase space: the
// momentum immersion, its Jacobian and rank, the pull-back of the
// Hamiltonian 4-form onto the frame sector, and the Lorentz covariance
// checks that make the constrained problem well defined.
#ifndef TETRAGAUGE_CONSTRAINT_IMMERSION_HPP
#define TETRAGAUGE_CONSTRAINT_IMMERSION_HPP

#include <Eigen/Dense>

#include "tetragauge/frame_geometry.hpp"
#include "tetragauge/gauge_phase.hpp"

namespace tetragauge {

/// A proper Lorentz transformation. Construction verifies L^T eta L = eta
/// and det L = +1 to 1e-10 and throws std::invalid_argument otherwise.
class LorentzTransform {
 public:
  explicit LorentzTransform(const Mat4& lambda);
  static LorentzTransform identity();

  const Mat4& matrix() const noexcept { return lambda_; }
  /// Exact inverse eta L^T eta (valid for any Lorentz matrix).
  Mat4 inverse_matrix() const noexcept;

 private:
  Mat4 lambda_;
};

/// Result of the pull-back comparison between the Hamiltonian 4-form at the
/// immersed momenta and the frame-side variational 4-form.
struct PullbackCheck {
  bool match = false;
  double max_dev = 0.0;
};

/// Result of the covariance check of the immersion and the Hamiltonian.
struct EquivarianceCheck {
  double max_dev = 0.0;
};

/// The 36x16 matrix dPi/de: rows ordered (ijpair*6 + munupair), columns (alpha*4 + k).
struct ImmersionJacobian {
  Eigen::Matrix<double, 36, 16> j;
  /// Rank by singular values above 1e-8 times the largest one.
  int rank() const;
};

/// The constraint map Pi^{ij}_{ls} = -1/2 e^m_q e^n_p eps^{qpij} eps_{mn ls}.
/// The connection slots pass through unchanged, so the map acts on tetrads.
Momenta immerse(const Tetrad& e);

/// dPi^{ij}_{ls} / de^a_k = -e^m_p eps^{kpij} eps_{am ls}; rank 16 away from
/// degenerate frames.
ImmersionJacobian immersion_jacobian(const Tetrad& e);

/// Compares all Theta_h coefficient slots at (immerse(e), omega) against the
/// frame-side 4-form coefficients evaluated directly from (e, omega).
PullbackCheck pullback_theta_check(const Tetrad& e, const SpinConnection& omega);

/// Verifies immerse(L e) against the momentum transformation law applied to
/// immerse(e) (trivial chart change), and that the Hamiltonian is unchanged.
EquivarianceCheck lorentz_equivariance_check(const Tetrad& e, const LorentzTransform& lambda);

/// Exhaustive integer verification of the two contraction identities behind
/// the vanishing of the pulled-back Hamiltonian:
///   eps^{xh ab} eps_{ab ls} = 2 (delta^x_l delta^h_s - delta^x_s delta^h_l)
///   sum eps_{mnls} eta^{ml} eta^{ns} = 0.
bool vanishing_hamiltonian_identities();

/// Frame transformed on its frame index: (L e)^mu_i = L^mu_s e^s_i.
Tetrad transformed(const Tetrad& e, const LorentzTransform& lambda);

/// Momenta transformed per the phase-space law with identity chart Jacobian:
/// Pi'^{pq}_{ls} = Pi^{pq}_{mn} (L^-1)^m_l (L^-1)^n_s.
Momenta transformed(const Momenta& pi, const LorentzTransform& lambda);

}  // namespace tetragauge

#endif  // TETRAGAUGE_CONSTRAINT_IMMERSION_HPP
