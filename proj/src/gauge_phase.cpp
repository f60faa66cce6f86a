#include "tetragauge/gauge_phase.hpp"

#include <cmath>

namespace tetragauge {

namespace {

using detail::eps;
using detail::eps_terms;
using detail::eta_diag;
using detail::kPairFirst;
using detail::kPairSecond;

// Defining-representation generator (J_{mu nu})^a_b.
double generator(int mu, int nu, int a, int b) {
  return (a == mu ? detail::eta(nu, b) : 0.0) - (a == nu ? detail::eta(mu, b) : 0.0);
}

const StructureConstants& cached_structure_constants() {
  static const StructureConstants c = structure_constants();
  return c;
}

}  // namespace

double HddResiduals::max_abs_omega() const noexcept {
  double m = 0.0;
  for (double v : r_omega) m = std::max(m, std::abs(v));
  return m;
}

double HddResiduals::max_abs_pi() const noexcept {
  double m = 0.0;
  for (double v : r_pi) m = std::max(m, std::abs(v));
  return m;
}

StructureConstants structure_constants() {
  StructureConstants c;
  for (int q = 0; q < kPairCount; ++q) {
    const int rho = kPairFirst[q], beta = kPairSecond[q];
    for (int s = 0; s < kPairCount; ++s) {
      const int lam = kPairFirst[s], sig = kPairSecond[s];
      // K = [J_{rho beta}, J_{lambda sigma}] in the defining representation.
      double K[4][4];
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          double acc = 0.0;
          for (int m = 0; m < 4; ++m)
            acc += generator(rho, beta, a, m) * generator(lam, sig, m, b) -
                   generator(lam, sig, a, m) * generator(rho, beta, m, b);
          K[a][b] = acc;
        }
      // Expand K over the pair basis: with the first index lowered the
      // (mu,nu) entry of J_{mu' nu'} is eta_mu eta_nu on the matching pair
      // and zero on every other ordered pair, so the coefficient reads off
      // componentwise.
      for (int u = 0; u < kPairCount; ++u) {
        const int mu = kPairFirst[u], nu = kPairSecond[u];
        double lowered = 0.0;
        for (int m = 0; m < 4; ++m) lowered += detail::eta(mu, m) * K[m][nu];
        c.at(u, q, s) = eta_diag(mu) * eta_diag(nu) * lowered;
      }
    }
  }
  return c;
}

double hamiltonian(const Momenta& pi) {
  double acc = 0.0;
  for (const auto& t : eps_terms())  // (i,j,p,q)
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        acc += t.sign * eta_diag(mu) * eta_diag(nu) * pi(t.a, t.b, mu, nu) *
               pi(t.c, t.d, mu, nu);
  return acc;
}

Curvature inverse_legendre(const Momenta& pi) {
  Curvature r;
  for (int cp = 0; cp < kPairCount; ++cp) {
    const int s = kPairFirst[cp], t = kPairSecond[cp];
    for (int fp = 0; fp < kPairCount; ++fp) {
      const int al = kPairFirst[fp], be = kPairSecond[fp];
      double acc = 0.0;
      for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q)
          acc += pi(p, q, al, be) * eta_diag(al) * eta_diag(be) * eps(s, t, p, q);
      r.at(cp, fp) = 8.0 * acc;
    }
  }
  return r;
}

Momenta legendre(const Curvature& r) {
  Momenta pi;
  for (int cp = 0; cp < kPairCount; ++cp) {
    const int i = kPairFirst[cp], j = kPairSecond[cp];
    for (int fp = 0; fp < kPairCount; ++fp) {
      const int lam = kPairFirst[fp], sig = kPairSecond[fp];
      double acc = 0.0;
      for (int s = 0; s < 4; ++s)
        for (int t = 0; t < 4; ++t)
          acc += r(s, t, lam, sig) * eta_diag(lam) * eta_diag(sig) * eps(s, t, i, j);
      pi.at(cp, fp) = acc / 32.0;
    }
  }
  return pi;
}

double lagrangian_closed_form(const Curvature& r) {
  double acc = 0.0;
  for (const auto& t : eps_terms())  // (s,t,i,j)
    for (int al = 0; al < 4; ++al)
      for (int be = 0; be < 4; ++be)
        acc += t.sign * eta_diag(al) * eta_diag(be) * r(t.a, t.b, al, be) *
               r(t.c, t.d, al, be);
  return acc / 256.0;
}

double lagrangian_hamiltonian_form(const Momenta& pi, const Curvature& r) {
  double acc = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int l = 0; l < 4; ++l)
        for (int s = 0; s < 4; ++s) acc += pi(i, j, l, s) * r(i, j, l, s);
  return 0.25 * acc - hamiltonian(pi);
}

ThetaCoefficients theta_h_coefficients(const Momenta& pi, const SpinConnection& w) {
  const StructureConstants& c = cached_structure_constants();
  const double h = hamiltonian(pi);

  ThetaCoefficients out;

  // Structure-constant route: -H - 1/16 Pi^{ij}_{mu nu} w_i^{ls} w_j^{rb} C^{mu nu}_{rb, ls}.
  double quad_structure = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
          const double p = pi(i, j, mu, nu);
          if (p == 0.0) continue;
          double acc = 0.0;
          for (int l = 0; l < 4; ++l)
            for (int s = 0; s < 4; ++s) {
              const double wi = w(i, l, s);
              if (wi == 0.0) continue;
              for (int r = 0; r < 4; ++r)
                for (int b = 0; b < 4; ++b) acc += wi * w(j, r, b) * c(mu, nu, r, b, l, s);
            }
          quad_structure += p * acc;
        }
  out.ds_structure = -h - quad_structure / 16.0;

  // Direct route: -H - 1/2 Pi^{ij}_{mu nu} w_j^mu_l w_i^{l nu}.
  double quad_direct = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
          const double p = pi(i, j, mu, nu);
          if (p == 0.0) continue;
          double acc = 0.0;
          for (int l = 0; l < 4; ++l) acc += w.mixed(j, mu, l) * w(i, l, nu);
          quad_direct += p * acc;
        }
  out.ds_direct = -h - 0.5 * quad_direct;

  // dw_i^{mu nu} ^ ds_j coefficient on the mu<nu basis (common to both
  // routes): the full-range sum collapses to -Pi^{ij}_{mu nu}.
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int p = 0; p < kPairCount; ++p)
        out.domega_at(i, j, p) = -pi(i, j, kPairFirst[p], kPairSecond[p]);

  return out;
}

HddResiduals hdd_residuals(const PhaseJet& jet) {
  const StructureConstants& c = cached_structure_constants();
  const Curvature dh = inverse_legendre(jet.pi);  // dH/dPi^{ij}_{ab}

  HddResiduals out;

  // Momentum-side equation:
  // -dH/dPi^{ij}_{ab} - dw_i^{ab}/dx^j + dw_j^{ab}/dx^i - 1/4 w_i^{nm} w_j^{rl} C^{ab}_{rl,nm}.
  for (int cp = 0; cp < kPairCount; ++cp) {
    const int i = kPairFirst[cp], j = kPairSecond[cp];
    for (int fp = 0; fp < kPairCount; ++fp) {
      const int al = kPairFirst[fp], be = kPairSecond[fp];
      double quad = 0.0;
      for (int n = 0; n < 4; ++n)
        for (int m = 0; m < 4; ++m)
          for (int r = 0; r < 4; ++r)
            for (int l = 0; l < 4; ++l)
              quad += jet.omega(i, n, m) * jet.omega(j, r, l) * c(al, be, r, l, n, m);
      out.r_omega_at(cp, fp) = -dh.at(cp, fp) - jet.domega(j, i, al, be) +
                               jet.domega(i, j, al, be) - 0.25 * quad;
    }
  }

  // Divergence-side equation:
  // -dPi^{ji}_{mu nu}/dx^j + 1/4 Pi^{ji}_{ls} w_j^{ga} C^{ls}_{ga,mu nu}
  // (dH/dw = 0 for the quadratic Hamiltonian).
  for (int i = 0; i < 4; ++i)
    for (int fp = 0; fp < kPairCount; ++fp) {
      const int mu = kPairFirst[fp], nu = kPairSecond[fp];
      double acc = 0.0;
      for (int j = 0; j < 4; ++j) {
        acc -= jet.dpi(j, j, i, mu, nu);
        double quad = 0.0;
        for (int l = 0; l < 4; ++l)
          for (int s = 0; s < 4; ++s)
            for (int g = 0; g < 4; ++g)
              for (int a = 0; a < 4; ++a)
                quad += jet.pi(j, i, l, s) * jet.omega(j, g, a) * c(l, s, g, a, mu, nu);
        acc += 0.25 * quad;
      }
      out.r_pi_at(i, fp) = acc;
    }

  return out;
}

}  // namespace tetragauge
