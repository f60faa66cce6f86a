#include "tetragauge/constraint_immersion.hpp"

#include <cmath>
#include <stdexcept>

namespace tetragauge {

namespace {

using detail::eps;
using detail::eps_terms;
using detail::eta_diag;
using detail::kPairFirst;
using detail::kPairSecond;

Mat4 minkowski_eta() {
  Mat4 m = Mat4::Identity();
  m(0, 0) = -1.0;
  return m;
}

}  // namespace

LorentzTransform::LorentzTransform(const Mat4& lambda) : lambda_(lambda) {
  const Mat4 eta = minkowski_eta();
  const double orth_dev = (lambda.transpose() * eta * lambda - eta).cwiseAbs().maxCoeff();
  const double det_dev = std::abs(lambda.determinant() - 1.0);
  if (orth_dev > 1e-10 || det_dev > 1e-10)
    throw std::invalid_argument("matrix is not a proper Lorentz transformation");
}

LorentzTransform LorentzTransform::identity() { return LorentzTransform(Mat4::Identity()); }

Mat4 LorentzTransform::inverse_matrix() const noexcept {
  const Mat4 eta = minkowski_eta();
  return eta * lambda_.transpose() * eta;
}

Momenta immerse(const Tetrad& e) {
  double full[4][4][4][4] = {};  // [i][j][lambda][sigma]
  for (const auto& c : eps_terms())      // (q,p,i,j)
    for (const auto& f : eps_terms()) {  // (mu,nu,lambda,sigma)
      full[c.c][c.d][f.c][f.d] += -0.5 * c.sign * f.sign * e(f.a, c.a) * e(f.b, c.b);
    }
  Momenta pi;
  for (int cp = 0; cp < kPairCount; ++cp)
    for (int fp = 0; fp < kPairCount; ++fp)
      pi.at(cp, fp) = full[kPairFirst[cp]][kPairSecond[cp]][kPairFirst[fp]][kPairSecond[fp]];
  return pi;
}

int ImmersionJacobian::rank() const {
  Eigen::JacobiSVD<Eigen::Matrix<double, 36, 16>> svd(j);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double threshold = 1e-8 * sv(0);
  int rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > threshold) ++rank;
  return rank;
}

ImmersionJacobian immersion_jacobian(const Tetrad& e) {
  ImmersionJacobian out;
  out.j.setZero();
  for (int cp = 0; cp < kPairCount; ++cp) {
    const int i = kPairFirst[cp], j = kPairSecond[cp];
    for (int fp = 0; fp < kPairCount; ++fp) {
      const int lam = kPairFirst[fp], sig = kPairSecond[fp];
      const int row = cp * kPairCount + fp;
      for (int al = 0; al < 4; ++al)
        for (int k = 0; k < 4; ++k) {
          double acc = 0.0;
          for (int p = 0; p < 4; ++p)
            for (int mu = 0; mu < 4; ++mu)
              acc += e(mu, p) * eps(k, p, i, j) * eps(al, mu, lam, sig);
          out.j(row, al * 4 + k) = -acc;
        }
    }
  }
  return out;
}

PullbackCheck pullback_theta_check(const Tetrad& e, const SpinConnection& w) {
  // Frame-side coefficients of the variational 4-form, evaluated directly:
  //   ds slot:  1/4 eps^{qpij} eps_{mnls} e^m_q e^n_p w_j^l_h w_i^{hs}
  //   dw slot:  1/2 eps^{qpij} eps_{mnls} e^m_q e^n_p   (l<s basis)
  double ds_frame = 0.0;
  double dw_frame[4][4][kPairCount] = {};
  for (const auto& c : eps_terms())      // (q,p,i,j)
    for (const auto& f : eps_terms()) {  // (mu,nu,lambda,sigma)
      const double ee = c.sign * f.sign * e(f.a, c.a) * e(f.b, c.b);
      double quad = 0.0;
      for (int h = 0; h < 4; ++h) quad += w.mixed(c.d, f.c, h) * w(c.c, h, f.d);
      ds_frame += 0.25 * ee * quad;
      if (f.c < f.d) dw_frame[c.c][c.d][detail::pair_code(f.c, f.d)] += 0.5 * ee;
    }

  const Momenta pi = immerse(e);
  const ThetaCoefficients th = theta_h_coefficients(pi, w);

  double dev = std::max(std::abs(th.ds_direct - ds_frame), std::abs(th.ds_structure - ds_frame));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int p = 0; p < kPairCount; ++p)
        dev = std::max(dev, std::abs(th.domega_at(i, j, p) - dw_frame[i][j][p]));

  return PullbackCheck{dev <= 1e-10, dev};
}

Tetrad transformed(const Tetrad& e, const LorentzTransform& lambda) {
  return Tetrad(lambda.matrix() * e.matrix());
}

Momenta transformed(const Momenta& pi, const LorentzTransform& lambda) {
  const Mat4 inv = lambda.inverse_matrix();  // inv(m, l) = (L^-1)^m_l
  Momenta out;
  for (int cp = 0; cp < kPairCount; ++cp) {
    const int p = kPairFirst[cp], q = kPairSecond[cp];
    for (int fp = 0; fp < kPairCount; ++fp) {
      const int lam = kPairFirst[fp], sig = kPairSecond[fp];
      double acc = 0.0;
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) acc += pi(p, q, mu, nu) * inv(mu, lam) * inv(nu, sig);
      out.at(cp, fp) = acc;
    }
  }
  return out;
}

EquivarianceCheck lorentz_equivariance_check(const Tetrad& e, const LorentzTransform& lambda) {
  const Momenta direct = immerse(transformed(e, lambda));
  const Momenta mapped = transformed(immerse(e), lambda);

  double dev = 0.0;
  for (int cp = 0; cp < kPairCount; ++cp)
    for (int fp = 0; fp < kPairCount; ++fp)
      dev = std::max(dev, std::abs(direct.at(cp, fp) - mapped.at(cp, fp)));

  dev = std::max(dev, std::abs(hamiltonian(direct) - hamiltonian(immerse(e))));
  return EquivarianceCheck{dev};
}

bool vanishing_hamiltonian_identities() {
  // eps^{xh ab} eps_{ab ls} = 2 (delta delta - delta delta), all 256 tuples.
  for (int x = 0; x < 4; ++x)
    for (int h = 0; h < 4; ++h)
      for (int l = 0; l < 4; ++l)
        for (int s = 0; s < 4; ++s) {
          int acc = 0;
          for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) acc += eps(x, h, a, b) * eps(a, b, l, s);
          const int expected = 2 * ((x == l && h == s) - (x == s && h == l));
          if (acc != expected) return false;
        }

  // sum eps_{mnls} eta^{ml} eta^{ns} = 0 (antisymmetric against symmetric).
  int trace = 0;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      for (int l = 0; l < 4; ++l)
        for (int s = 0; s < 4; ++s) trace += eps(m, n, l, s) * detail::eta(m, l) * detail::eta(n, s);
  return trace == 0;
}

}  // namespace tetragauge
