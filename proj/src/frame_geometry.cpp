#include "tetragauge/frame_geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace tetragauge {

namespace {

constexpr double kDetThreshold = 1e-12;

using detail::eps;
using detail::eps_terms;
using detail::eta_diag;
using detail::pair_code;

}  // namespace

Tetrad::Tetrad(const Mat4& components) : e_(components), det_(components.determinant()) {
  if (!(std::abs(det_) > kDetThreshold)) throw std::domain_error("degenerate tetrad");
}

Tetrad Tetrad::identity() { return Tetrad(Mat4::Identity()); }

double AdmissibilityResidual::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& row : a)
    for (double v : row) m = std::max(m, std::abs(v));
  return m;
}

double FrameFieldResidual::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& row : b)
    for (double v : row) m = std::max(m, std::abs(v));
  return m;
}

double EinsteinResidual::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& row : g)
    for (double v : row) m = std::max(m, std::abs(v));
  return m;
}

Mat4 metric_from_tetrad(const Tetrad& e) {
  Mat4 g = Mat4::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double acc = 0.0;
      for (int mu = 0; mu < 4; ++mu) acc += eta_diag(mu) * e(mu, i) * e(mu, j);
      g(i, j) = acc;
    }
  return g;
}

Mat4 inverse_tetrad(const Tetrad& e) {
  if (!(std::abs(e.det()) > kDetThreshold)) throw std::domain_error("degenerate tetrad");
  return e.matrix().inverse();
}

SpinConnection spin_connection(const Tetrad& e, const TetradGradient& de) {
  const Mat4 E = inverse_tetrad(e);  // E(i, mu) = e^i_mu
  const Mat4 g = metric_from_tetrad(e);
  const Mat4 ginv = g.inverse();

  // dg(i,j,k) = d g_ij / dx^k, assembled from the frame and its gradient.
  double dg[4][4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        double acc = 0.0;
        for (int mu = 0; mu < 4; ++mu)
          acc += eta_diag(mu) * (de(mu, i, k) * e(mu, j) + e(mu, i) * de(mu, j, k));
        dg[i][j][k] = acc;
      }

  // Levi-Civita Christoffel symbols Gamma^l_{ik}.
  double gamma[4][4][4];
  for (int l = 0; l < 4; ++l)
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) {
        double acc = 0.0;
        for (int m = 0; m < 4; ++m)
          acc += ginv(l, m) * (dg[m][i][k] + dg[m][k][i] - dg[i][k][m]);
        gamma[l][i][k] = 0.5 * acc;
      }

  // dE(j,rho,i) = d e^j_rho / dx^i = -E (de) E.
  double dE[4][4][4];
  for (int j = 0; j < 4; ++j)
    for (int rho = 0; rho < 4; ++rho)
      for (int i = 0; i < 4; ++i) {
        double acc = 0.0;
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) acc += E(j, a) * de(a, b, i) * E(b, rho);
        dE[j][rho][i] = -acc;
      }

  // w_i^mu_rho = e^mu_j (dE^j_rho/dx^i + Gamma^j_{ik} E^k_rho), then raise
  // the second frame index with eta and antisymmetrize.
  SpinConnection w;
  for (int i = 0; i < 4; ++i) {
    double mixed[4][4];
    for (int mu = 0; mu < 4; ++mu)
      for (int rho = 0; rho < 4; ++rho) {
        double acc = 0.0;
        for (int j = 0; j < 4; ++j) {
          double cov = dE[j][rho][i];
          for (int k = 0; k < 4; ++k) cov += gamma[j][i][k] * E(k, rho);
          acc += e(mu, j) * cov;
        }
        mixed[mu][rho] = acc;
      }
    for (int p = 0; p < kPairCount; ++p) {
      const int mu = detail::kPairFirst[p];
      const int nu = detail::kPairSecond[p];
      const double up_mn = mixed[mu][nu] * eta_diag(nu);
      const double up_nm = mixed[nu][mu] * eta_diag(mu);
      w.at(i, p) = 0.5 * (up_mn - up_nm);
    }
  }
  return w;
}

Curvature curvature_from_connection(const SpinConnection& w, const ConnectionGradient& dw) {
  Curvature r;
  for (int cp = 0; cp < kPairCount; ++cp) {
    const int a = detail::kPairFirst[cp];
    const int b = detail::kPairSecond[cp];
    for (int fp = 0; fp < kPairCount; ++fp) {
      const int mu = detail::kPairFirst[fp];
      const int nu = detail::kPairSecond[fp];
      double quad = 0.0;
      for (int h = 0; h < 4; ++h)
        quad += w.mixed(a, mu, h) * w(b, h, nu) - w.mixed(b, mu, h) * w(a, h, nu);
      r.at(cp, fp) = dw(a, b, mu, nu) - dw(b, a, mu, nu) + quad;
    }
  }
  return r;
}

AdmissibilityResidual admissibility_residual(const FieldJet& jet) {
  const Tetrad& e = jet.e;

  // D(nu,p,j) = de^nu_p/dx^j + w_j^nu_rho e^rho_p
  double D[4][4][4];
  for (int nu = 0; nu < 4; ++nu)
    for (int p = 0; p < 4; ++p)
      for (int j = 0; j < 4; ++j) {
        double acc = jet.de(nu, p, j);
        for (int rho = 0; rho < 4; ++rho) acc += jet.omega.mixed(j, nu, rho) * e(rho, p);
        D[nu][p][j] = acc;
      }

  double full[4][4][4] = {};  // [i][lambda][sigma]
  for (const auto& c : eps_terms())      // (q,p,i,j)
    for (const auto& f : eps_terms()) {  // (mu,nu,lambda,sigma)
      full[c.c][f.c][f.d] += c.sign * f.sign * e(f.a, c.a) * D[f.b][c.b][c.d];
    }

  AdmissibilityResidual out;
  for (int i = 0; i < 4; ++i)
    for (int p = 0; p < kPairCount; ++p)
      out.a[i][p] = full[i][detail::kPairFirst[p]][detail::kPairSecond[p]];
  return out;
}

FrameFieldResidual frame_field_residual(const FieldJet& jet) {
  const Tetrad& e = jet.e;

  // Q(j,i,l,s) = dw_i^{ls}/dx^j + w_j^l_h w_i^{hs}
  double Q[4][4][4][4];
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i)
      for (int l = 0; l < 4; ++l)
        for (int s = 0; s < 4; ++s) {
          double acc = jet.domega(j, i, l, s);
          for (int h = 0; h < 4; ++h) acc += jet.omega.mixed(j, l, h) * jet.omega(i, h, s);
          Q[j][i][l][s] = acc;
        }

  FrameFieldResidual out;
  for (const auto& c : eps_terms())      // (q,p,i,j)
    for (const auto& f : eps_terms()) {  // (mu,nu,lambda,sigma)
      out.b[c.b][f.b] += 0.5 * c.sign * f.sign * e(f.a, c.a) * Q[c.d][c.c][f.c][f.d];
    }
  return out;
}

EinsteinResidual einstein_residual(const Tetrad& e, const Curvature& r) {
  EinsteinResidual out;
  for (const auto& c : eps_terms())      // (q,p,i,j)
    for (const auto& f : eps_terms()) {  // (mu,nu,lambda,sigma)
      out.g[c.a][f.b] += 0.25 * c.sign * f.sign * e(f.a, c.b) * r(c.d, c.c, f.c, f.d);
    }
  return out;
}

}  // namespace tetragauge
