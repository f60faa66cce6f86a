#include "tetragauge/verification.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "tetragauge/constraint_immersion.hpp"
#include "tetragauge/sampling.hpp"

namespace tetragauge {

namespace {

using detail::eps;
using detail::eps_terms;
using detail::kPairFirst;
using detail::kPairSecond;

constexpr double kPi = 3.14159265358979323846;

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

CheckResult check(const std::string& name, double dev, double tol, bool expect_fail = false) {
  return CheckResult{name, dev <= tol, dev, tol, expect_fail};
}

// Defining-representation generator, written out independently of the
// structure-constant construction so the suite cross-checks it.
double gen(int mu, int nu, int a, int b) {
  const auto eta = [](int x, int y) { return x == y ? (x == 0 ? -1.0 : 1.0) : 0.0; };
  return (a == mu ? eta(nu, b) : 0.0) - (a == nu ? eta(mu, b) : 0.0);
}

double momenta_max_abs(const Momenta& a, const Momenta& b) {
  double dev = 0.0;
  for (int cp = 0; cp < kPairCount; ++cp)
    for (int fp = 0; fp < kPairCount; ++fp)
      dev = std::max(dev, std::abs(a.at(cp, fp) - b.at(cp, fp)));
  return dev;
}

Vec4 sample_point(const AnalyticField& field, Rng& rng) {
  switch (field.kind()) {
    case FieldKind::kMinkowski:
      return {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
              rng.uniform(-1.0, 1.0)};
    case FieldKind::kSchwarzschild: {
      const double m = field.parameter();
      return {rng.uniform(-1.0, 1.0), rng.uniform(3.0 * m, 10.0 * m),
              rng.uniform(kPi / 4.0, 3.0 * kPi / 4.0), rng.uniform(0.0, 2.0 * kPi)};
    }
    case FieldKind::kConformal: {
      // Keep the conformal factor away from zero across the stencil.
      const double a = field.parameter();
      double lo = -1.0, hi = 1.0;
      if (a > 0.0) lo = std::max(lo, -0.7 / a);
      if (a < 0.0) hi = std::min(hi, -0.7 / a);
      return {rng.uniform(-1.0, 1.0), rng.uniform(lo, hi), rng.uniform(-1.0, 1.0),
              rng.uniform(-1.0, 1.0)};
    }
  }
  throw std::logic_error("unreachable field kind");
}

}  // namespace

Report run_identities() {
  Stopwatch watch;
  Report report;
  report.command = "identities";
  report.seed = 0;
  report.trials = 0;

  // Total antisymmetry of the permutation symbol over all tuples and all
  // 24 slot permutations.
  double dev = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) {
          const int base = eps(i, j, p, q);
          const int tuple[4] = {i, j, p, q};
          for (const auto& perm : eps_terms()) {
            const int permuted =
                eps(tuple[perm.a], tuple[perm.b], tuple[perm.c], tuple[perm.d]);
            dev = std::max(dev, std::abs(static_cast<double>(permuted - perm.sign * base)));
          }
        }
  report.checks.push_back(check("levi-civita-antisymmetry", dev, 0.0));

  dev = 0.0;
  for (int x = 0; x < 4; ++x)
    for (int h = 0; h < 4; ++h)
      for (int l = 0; l < 4; ++l)
        for (int s = 0; s < 4; ++s) {
          const int got = epsilon_pair_contraction(Index(x), Index(h), Index(l), Index(s));
          const int expected = 2 * ((x == l && h == s) - (x == s && h == l));
          dev = std::max(dev, std::abs(static_cast<double>(got - expected)));
        }
  report.checks.push_back(check("epsilon-pair-contraction", dev, 0.0));

  dev = 0.0;
  for (int code = 0; code < kPairCount; ++code) {
    const auto [a, b] = pair_decode(code);
    const PairIndex re = pair_encode(a, b);
    dev = std::max(dev, std::abs(static_cast<double>(re.code - code)));
    dev = std::max(dev, std::abs(re.sign - 1.0));
  }
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      if (m == n) {
        try {
          pair_encode(Index(m), Index(n));
          dev = std::max(dev, 1.0);  // must have thrown
        } catch (const std::invalid_argument&) {
        }
        continue;
      }
      const PairIndex fwd = pair_encode(Index(m), Index(n));
      const PairIndex rev = pair_encode(Index(n), Index(m));
      dev = std::max(dev, std::abs(static_cast<double>(fwd.code - rev.code)));
      dev = std::max(dev, std::abs(fwd.sign + rev.sign));
    }
  report.checks.push_back(check("pair-roundtrip", dev, 0.0));

  dev = 0.0;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      int prod = 0;
      for (int k = 0; k < 4; ++k) prod += eta(Index(m), Index(k)) * eta(Index(k), Index(n));
      dev = std::max(dev, std::abs(static_cast<double>(prod - (m == n ? 1 : 0))));
      if (m != n) dev = std::max(dev, std::abs(static_cast<double>(eta(Index(m), Index(n)))));
    }
  report.checks.push_back(check("eta-involution", dev, 0.0));

  report.checks.push_back(check("vanishing-hamiltonian-identities", vanishing_hamiltonian_identities() ? 0.0 : 1.0, 0.0));

  report.runtime_ms = watch.elapsed_ms();
  return report;
}

Report run_legendre_roundtrip(std::uint64_t seed, int trials) {
  Stopwatch watch;
  Report report;
  report.command = "legendre-roundtrip";
  report.seed = seed;
  report.trials = trials;

  Rng rng(seed);
  double dev_m = 0.0, dev_c = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Momenta pi = random_momenta(rng);
    dev_m = std::max(dev_m, momenta_max_abs(legendre(inverse_legendre(pi)), pi));

    const Curvature r = random_curvature(rng);
    const Curvature back = inverse_legendre(legendre(r));
    for (int cp = 0; cp < kPairCount; ++cp)
      for (int fp = 0; fp < kPairCount; ++fp)
        dev_c = std::max(dev_c, std::abs(back.at(cp, fp) - r.at(cp, fp)));
  }
  report.checks.push_back(check("legendre-roundtrip-momenta", dev_m, 1e-12));
  report.checks.push_back(check("legendre-roundtrip-curvature", dev_c, 1e-12));

  report.runtime_ms = watch.elapsed_ms();
  return report;
}

Report run_propositions(std::uint64_t seed, int trials) {
  Stopwatch watch;
  Report report;
  report.command = "propositions";
  report.seed = seed;
  report.trials = trials;

  const int small_trials = std::max(1, trials / 10);
  Rng rng(seed);

  {  // Legendre round-trips (regularity of the Hamiltonian).
    const Report sub = run_legendre_roundtrip(seed, trials);
    report.checks.insert(report.checks.end(), sub.checks.begin(), sub.checks.end());
  }

  {  // Immersion rank and the Jacobian against finite differences.
    double rank_dev = 0.0, fd_dev = 0.0;
    const double h = 1e-3;
    for (int t = 0; t < small_trials; ++t) {
      const Tetrad e = random_tetrad(rng);
      const ImmersionJacobian jac = immersion_jacobian(e);
      rank_dev = std::max(rank_dev, std::abs(static_cast<double>(jac.rank() - 16)));

      double scale = 1.0;
      for (int row = 0; row < 36; ++row)
        for (int col = 0; col < 16; ++col) scale = std::max(scale, std::abs(jac.j(row, col)));
      for (int a = 0; a < 4; ++a)
        for (int k = 0; k < 4; ++k) {
          Mat4 ep = e.matrix(), em = e.matrix();
          ep(a, k) += h;
          em(a, k) -= h;
          const Momenta pp = immerse(Tetrad(ep));
          const Momenta pm = immerse(Tetrad(em));
          for (int cp = 0; cp < kPairCount; ++cp)
            for (int fp = 0; fp < kPairCount; ++fp) {
              const double fd = (pp.at(cp, fp) - pm.at(cp, fp)) / (2.0 * h);
              fd_dev = std::max(
                  fd_dev, std::abs(fd - jac.j(cp * kPairCount + fp, a * 4 + k)) / scale);
            }
        }
    }
    report.checks.push_back(check("immersion-rank", rank_dev, 0.0));
    report.checks.push_back(check("immersion-jacobian-fd", fd_dev, 1e-6));
  }

  {  // Vanishing Hamiltonian on immersed frames.
    double dev = 0.0;
    for (int t = 0; t < trials; ++t)
      dev = std::max(dev, std::abs(hamiltonian(immerse(random_tetrad(rng)))));
    report.checks.push_back(check("hamiltonian-vanishes-on-immersion", dev, 1e-10));
  }

  {  // Pull-back identity and the frame-sign fiber.
    double pull_dev = 0.0, fiber_dev = 0.0;
    for (int t = 0; t < trials; ++t) {
      const Tetrad e = random_tetrad(rng);
      const SpinConnection w = random_connection(rng);
      pull_dev = std::max(pull_dev, pullback_theta_check(e, w).max_dev);

      const Tetrad minus(Mat4(-e.matrix()));
      fiber_dev = std::max(fiber_dev, momenta_max_abs(immerse(e), immerse(minus)));
      const ThetaCoefficients tp = theta_h_coefficients(immerse(e), w);
      const ThetaCoefficients tm = theta_h_coefficients(immerse(minus), w);
      fiber_dev = std::max(fiber_dev, std::abs(tp.ds_structure - tm.ds_structure));
      fiber_dev = std::max(fiber_dev, std::abs(tp.ds_direct - tm.ds_direct));
      for (std::size_t s = 0; s < tp.domega.size(); ++s)
        fiber_dev = std::max(fiber_dev, std::abs(tp.domega[s] - tm.domega[s]));
    }
    report.checks.push_back(check("pullback-identity", pull_dev, 1e-10));
    report.checks.push_back(check("pullback-sign-fiber", fiber_dev, 0.0));
  }

  {  // Both coefficient routes of Theta_h agree on random phase points.
    double dev = 0.0;
    for (int t = 0; t < trials; ++t) {
      const ThetaCoefficients th = theta_h_coefficients(random_momenta(rng), random_connection(rng));
      dev = std::max(dev, std::abs(th.ds_structure - th.ds_direct));
    }
    report.checks.push_back(check("theta-equivalence", dev, 1e-12));
  }

  {  // Structure constants reproduce the defining-representation brackets.
    const StructureConstants c = structure_constants();
    double dev = 0.0;
    for (int q = 0; q < kPairCount; ++q)
      for (int s = 0; s < kPairCount; ++s) {
        const int rho = kPairFirst[q], beta = kPairSecond[q];
        const int lam = kPairFirst[s], sig = kPairSecond[s];
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) {
            double bracket = 0.0;
            for (int m = 0; m < 4; ++m)
              bracket += gen(rho, beta, a, m) * gen(lam, sig, m, b) -
                         gen(lam, sig, a, m) * gen(rho, beta, m, b);
            double expansion = 0.0;
            for (int mu = 0; mu < 4; ++mu)
              for (int nu = 0; nu < 4; ++nu)
                expansion += 0.5 * c(mu, nu, rho, beta, lam, sig) * gen(mu, nu, a, b);
            dev = std::max(dev, std::abs(bracket - expansion));
          }
      }
    report.checks.push_back(check("structure-brackets", dev, 0.0));

    // Jacobi identity in coefficient form over all independent pair triples.
    double jac_dev = 0.0;
    for (int A = 0; A < kPairCount; ++A)
      for (int B = 0; B < kPairCount; ++B)
        for (int C = 0; C < kPairCount; ++C) {
          const int a1 = kPairFirst[A], a2 = kPairSecond[A];
          const int b1 = kPairFirst[B], b2 = kPairSecond[B];
          const int c1 = kPairFirst[C], c2 = kPairSecond[C];
          for (int Q = 0; Q < kPairCount; ++Q) {
            const int q1 = kPairFirst[Q], q2 = kPairSecond[Q];
            double acc = 0.0;
            for (int p1 = 0; p1 < 4; ++p1)
              for (int p2 = 0; p2 < 4; ++p2) {
                if (p1 == p2) continue;
                acc += c(p1, p2, b1, b2, c1, c2) * c(q1, q2, a1, a2, p1, p2) +
                       c(p1, p2, c1, c2, a1, a2) * c(q1, q2, b1, b2, p1, p2) +
                       c(p1, p2, a1, a2, b1, b2) * c(q1, q2, c1, c2, p1, p2);
              }
            jac_dev = std::max(jac_dev, std::abs(acc));
          }
        }
    report.checks.push_back(check("structure-jacobi", jac_dev, 0.0));
  }

  {  // Lorentz equivariance of the immersion and the Hamiltonian.
    double dev = 0.0;
    for (int t = 0; t < small_trials; ++t) {
      const Tetrad e = random_tetrad(rng);
      dev = std::max(dev, lorentz_equivariance_check(e, random_lorentz(rng)).max_dev);
    }
    report.checks.push_back(check("lorentz-equivariance", dev, 1e-9));
  }

  report.runtime_ms = watch.elapsed_ms();
  return report;
}

Report run_lagrangian_consistency(std::uint64_t seed, int trials) {
  Stopwatch watch;
  Report report;
  report.command = "lagrangian-consistency";
  report.seed = seed;
  report.trials = trials;

  Rng rng(seed);

  double dev = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Curvature r = random_curvature(rng);
    dev = std::max(dev,
                   std::abs(lagrangian_closed_form(r) - lagrangian_hamiltonian_form(legendre(r), r)));
  }
  report.checks.push_back(check("lagrangian-forms-agree", dev, 1e-12));

  // The Legendre map as the gradient of the closed-form Lagrangian over the
  // independent curvature components.
  const int grad_trials = std::max(1, trials / 10);
  const double h = 1e-5;
  double grad_dev = 0.0;
  for (int t = 0; t < grad_trials; ++t) {
    const Curvature r = random_curvature(rng);
    const Momenta pi = legendre(r);
    double scale = 1.0;
    for (int cp = 0; cp < kPairCount; ++cp)
      for (int fp = 0; fp < kPairCount; ++fp) scale = std::max(scale, std::abs(pi.at(cp, fp)));
    for (int cp = 0; cp < kPairCount; ++cp)
      for (int fp = 0; fp < kPairCount; ++fp) {
        Curvature rp = r, rm = r;
        rp.at(cp, fp) += h;
        rm.at(cp, fp) -= h;
        const double fd = (lagrangian_closed_form(rp) - lagrangian_closed_form(rm)) / (2.0 * h);
        grad_dev = std::max(grad_dev, std::abs(fd - pi.at(cp, fp)) / scale);
      }
  }
  report.checks.push_back(check("legendre-gradient", grad_dev, 1e-6));

  report.runtime_ms = watch.elapsed_ms();
  return report;
}

Report run_check_solution(const AnalyticField& field, int points, std::uint64_t seed,
                          bool expect_fail) {
  if (points < 1) throw std::invalid_argument("points must be positive");

  Stopwatch watch;
  Report report;
  report.command = "check-solution";
  report.seed = seed;
  report.trials = points;
  report.field = field.spec_string();

  const bool fd = field.mode() == DerivativeMode::kFiniteDifference;
  const double adm_tol = fd ? 1e-8 : 1e-10;
  const double vac_tol = fd ? 1e-4 : 1e-6;
  // Negative controls must violate the field equations by a clear margin.
  const double control_tol = 0.01;

  Rng rng(seed);
  double adm = 0.0, ff = 0.0, ein = 0.0, hdd = 0.0;
  for (int t = 0; t < points; ++t) {
    const Vec4 x = sample_point(field, rng);
    const FieldJet jet = field.sample_jet(x);
    adm = std::max(adm, admissibility_residual(jet).max_abs());
    ff = std::max(ff, frame_field_residual(jet).max_abs());
    const Curvature r = curvature_from_connection(jet.omega, jet.domega);
    ein = std::max(ein, einstein_residual(jet.e, r).max_abs());
    hdd = std::max(hdd, hdd_residuals(field.sample_phase_jet(x)).max_abs_pi());
  }

  report.checks.push_back(check("admissibility", adm, adm_tol));
  report.checks.push_back(
      check("frame-field-residual", ff, expect_fail ? control_tol : vac_tol, expect_fail));
  report.checks.push_back(
      check("einstein-residual", ein, expect_fail ? control_tol : vac_tol, expect_fail));
  report.checks.push_back(check("hdd-pi-residual", hdd, vac_tol));

  report.runtime_ms = watch.elapsed_ms();
  return report;
}

}  // namespace tetragauge
