// Tetrad-level geometry: frame metric, spin connection, curvature, and the
// residuals of the frame field equations (kinematic admissibility, the
// frame form of the Einstein equations).
#ifndef TETRAGAUGE_FRAME_GEOMETRY_HPP
#define TETRAGAUGE_FRAME_GEOMETRY_HPP

#include <Eigen/Dense>
#include <array>

#include "tetragauge/tensor_core.hpp"

namespace tetragauge {

using Mat4 = Eigen::Matrix4d;
using Vec4 = std::array<double, 4>;

/// Frame field e^mu_i: row = frame index mu, column = coordinate index i.
/// Construction rejects |det e| <= 1e-12.
class Tetrad {
 public:
  explicit Tetrad(const Mat4& components);
  static Tetrad identity();

  double operator()(int mu, int i) const noexcept { return e_(mu, i); }
  const Mat4& matrix() const noexcept { return e_; }
  double det() const noexcept { return det_; }

 private:
  Mat4 e_;
  double det_;
};

/// Partial derivatives d(mu,i,j) = de^mu_i / dx^j.
struct TetradGradient {
  std::array<double, 64> d{};

  double& operator()(int mu, int i, int j) noexcept {
    return d[static_cast<std::size_t>((mu * 4 + i) * 4 + j)];
  }
  double operator()(int mu, int i, int j) const noexcept {
    return d[static_cast<std::size_t>((mu * 4 + i) * 4 + j)];
  }
};

/// Connection coefficients w_i^{mu nu}, antisymmetric in (mu,nu);
/// one value stored per coordinate index and frame pair mu<nu.
class SpinConnection {
 public:
  SpinConnection() = default;

  double& at(int i, int pair) noexcept { return w_[static_cast<std::size_t>(i * kPairCount + pair)]; }
  double at(int i, int pair) const noexcept { return w_[static_cast<std::size_t>(i * kPairCount + pair)]; }

  // Full-range component w_i^{mu nu}; zero on mu == nu.
  double operator()(int i, int mu, int nu) const noexcept {
    if (mu == nu) return 0.0;
    return mu < nu ? w_[static_cast<std::size_t>(i * kPairCount + detail::pair_code(mu, nu))]
                   : -w_[static_cast<std::size_t>(i * kPairCount + detail::pair_code(nu, mu))];
  }

  // Mixed component w_i^mu_rho = w_i^{mu sigma} eta_{sigma rho}.
  double mixed(int i, int mu, int rho) const noexcept {
    return (*this)(i, mu, rho) * detail::eta_diag(rho);
  }

 private:
  std::array<double, 24> w_{};
};

/// Partial derivatives of the connection: (j,i,pair) = dw_i^{pair} / dx^j.
struct ConnectionGradient {
  std::array<double, 96> d{};

  double& at(int j, int i, int pair) noexcept {
    return d[static_cast<std::size_t>((j * 4 + i) * kPairCount + pair)];
  }
  double at(int j, int i, int pair) const noexcept {
    return d[static_cast<std::size_t>((j * 4 + i) * kPairCount + pair)];
  }

  // Full-range dw_i^{mu nu} / dx^j.
  double operator()(int j, int i, int mu, int nu) const noexcept {
    if (mu == nu) return 0.0;
    return mu < nu ? at(j, i, detail::pair_code(mu, nu)) : -at(j, i, detail::pair_code(nu, mu));
  }
};

/// Curvature R_{ab}^{mu nu}, antisymmetric in (a,b) and (mu,nu), stored per
/// ordered pair a<b, mu<nu. The first coordinate slot is the derivative
/// index: R_{ab} = d_a w_b - d_b w_a + [w_a, w_b].
class Curvature {
 public:
  Curvature() = default;

  double& at(int ijpair, int munupair) noexcept {
    return r_[static_cast<std::size_t>(ijpair * kPairCount + munupair)];
  }
  double at(int ijpair, int munupair) const noexcept {
    return r_[static_cast<std::size_t>(ijpair * kPairCount + munupair)];
  }

  // Full-range component R_{ab}^{mu nu}.
  double operator()(int a, int b, int mu, int nu) const noexcept {
    if (a == b || mu == nu) return 0.0;
    double sign = 1.0;
    if (a > b) {
      std::swap(a, b);
      sign = -sign;
    }
    if (mu > nu) {
      std::swap(mu, nu);
      sign = -sign;
    }
    return sign * at(detail::pair_code(a, b), detail::pair_code(mu, nu));
  }

 private:
  std::array<double, 36> r_{};
};

/// A point sample of the frame sector: chart point, tetrad, connection and
/// their first derivatives. Input to every frame-side residual.
struct FieldJet {
  Vec4 x{};
  Tetrad e = Tetrad::identity();
  TetradGradient de;
  SpinConnection omega;
  ConnectionGradient domega;
};

/// Residual of the kinematic admissibility equation, 24 components A[i][pair].
struct AdmissibilityResidual {
  std::array<std::array<double, kPairCount>, 4> a{};
  double max_abs() const noexcept;
};

/// Residual of the frame field (Einstein) equation, 16 components B[p][nu].
struct FrameFieldResidual {
  std::array<std::array<double, 4>, 4> b{};
  double max_abs() const noexcept;
};

/// Einstein form contracted from a curvature, 16 components G[q][nu].
struct EinsteinResidual {
  std::array<std::array<double, 4>, 4> g{};
  double max_abs() const noexcept;
};

/// g_ij = eta_{mu nu} e^mu_i e^nu_j.
Mat4 metric_from_tetrad(const Tetrad& e);

/// Inverse frame E(i,mu) = e^i_mu with e^mu_i e^i_nu = delta^mu_nu.
/// Throws std::domain_error("degenerate tetrad") near det = 0.
Mat4 inverse_tetrad(const Tetrad& e);

/// The unique metric spin connection for the frame (e, de): Christoffel
/// symbols of g(e) first, then w_i^{mu nu} = eta^{nu rho} e^mu_j
/// (dE^j_rho/dx^i + Gamma^j_{ik} E^k_rho), antisymmetrized in (mu,nu).
SpinConnection spin_connection(const Tetrad& e, const TetradGradient& de);

/// R_{ab}^{mu nu} = d_a w_b - d_b w_a + w_a^mu_eta w_b^{eta nu} - w_b^mu_eta w_a^{eta nu}.
Curvature curvature_from_connection(const SpinConnection& omega, const ConnectionGradient& domega);

/// A[i][ls] = eps^{qpij} eps_{mnls} e^m_q (de^n_p/dx^j + w_j^n_r e^r_p).
/// Vanishes exactly when omega is the spin connection of (e, de).
AdmissibilityResidual admissibility_residual(const FieldJet& jet);

/// B[p][n] = 1/2 eps^{qpij} eps_{mnls} e^m_q (dw_i^{ls}/dx^j + w_j^l_h w_i^{hs}).
FrameFieldResidual frame_field_residual(const FieldJet& jet);

/// G[q][n] = 1/4 eps^{qpij} eps_{mnls} e^m_p R_{ji}^{ls}. Equals minus the
/// frame field residual when R comes from the same connection data.
EinsteinResidual einstein_residual(const Tetrad& e, const Curvature& r);

}  // namespace tetragauge

#endif  // TETRAGAUGE_FRAME_GEOMETRY_HPP
