#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "tetragauge/constraint_immersion.hpp"
#include "tetragauge/sampling.hpp"

using namespace tetragauge;

TEST_CASE("lorentz transform validation") {
  CHECK_NOTHROW(LorentzTransform::identity());

  SUBCASE("a random boost-rotation passes and inverts exactly") {
    Rng rng(80);
    Mat4 eta = Mat4::Identity();
    eta(0, 0) = -1.0;
    for (int t = 0; t < 100; ++t) {
      const LorentzTransform lam = random_lorentz(rng);
      CHECK((lam.matrix().transpose() * eta * lam.matrix() - eta).cwiseAbs().maxCoeff() <= 1e-10);
      CHECK((lam.matrix() * lam.inverse_matrix() - Mat4::Identity()).cwiseAbs().maxCoeff() <=
            1e-10);
    }
  }

  SUBCASE("non-Lorentz and improper matrices are rejected") {
    Mat4 scaled = Mat4::Identity() * 2.0;
    CHECK_THROWS_AS(LorentzTransform{scaled}, std::invalid_argument);
    Mat4 eta = Mat4::Identity();
    eta(0, 0) = -1.0;  // eta preserves the metric but has det -1
    CHECK_THROWS_AS(LorentzTransform{eta}, std::invalid_argument);
  }
}

TEST_CASE("immersion of the identity frame") {
  const Momenta pi = immerse(Tetrad::identity());
  // Pi^{ij}_{ls} = -1/2 eps^{mn ij} eps_{mn ls} = -(delta^i_l delta^j_s - delta^i_s delta^j_l)
  CHECK(pi(0, 1, 0, 1) == -1.0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int l = 0; l < 4; ++l)
        for (int s = 0; s < 4; ++s) {
          const double expected =
              -0.5 * epsilon_pair_contraction(Index(i), Index(j), Index(l), Index(s));
          CHECK(pi(i, j, l, s) == expected);
        }
}

TEST_CASE("immersion is even in the frame") {
  Rng rng(81);
  for (int t = 0; t < 50; ++t) {
    const Tetrad e = random_tetrad(rng);
    const Momenta plus = immerse(e);
    const Momenta minus = immerse(Tetrad(Mat4(-e.matrix())));
    for (int a = 0; a < kPairCount; ++a)
      for (int b = 0; b < kPairCount; ++b) CHECK(plus.at(a, b) == minus.at(a, b));
  }
}

TEST_CASE("pulled-back Hamiltonian vanishes on 1000 seeded frames") {
  Rng rng(82);
  double dev = 0.0;
  for (int t = 0; t < 1000; ++t)
    dev = std::max(dev, std::abs(hamiltonian(immerse(random_tetrad(rng)))));
  CHECK(dev <= 1e-10);
}

TEST_CASE("immersion jacobian") {
  SUBCASE("identity frame has rank 16") {
    CHECK(immersion_jacobian(Tetrad::identity()).rank() == 16);
  }

  SUBCASE("rank 16 on 100 seeded frames") {
    Rng rng(83);
    for (int t = 0; t < 100; ++t)
      CHECK(immersion_jacobian(random_tetrad(rng)).rank() == 16);
  }

  SUBCASE("matches central differences of the immersion") {
    Rng rng(84);
    const double h = 1e-3;
    for (int t = 0; t < 10; ++t) {
      const Tetrad e = random_tetrad(rng);
      const ImmersionJacobian jac = immersion_jacobian(e);
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
              CHECK(std::abs(fd - jac.j(cp * kPairCount + fp, a * 4 + k)) <= 1e-7 * scale);
            }
        }
    }
  }
}

TEST_CASE("pull-back of the Hamiltonian form is the frame form") {
  SUBCASE("zero connection matches trivially") {
    Rng rng(85);
    const PullbackCheck res = pullback_theta_check(random_tetrad(rng), SpinConnection{});
    CHECK(res.match);
  }

  SUBCASE("1000 seeded random frame-connection points match") {
    Rng rng(86);
    double dev = 0.0;
    for (int t = 0; t < 1000; ++t) {
      const PullbackCheck res = pullback_theta_check(random_tetrad(rng), random_connection(rng));
      CHECK(res.match);
      dev = std::max(dev, res.max_dev);
    }
    CHECK(dev <= 1e-10);
  }

  SUBCASE("opposite frames induce identical coefficient sets") {
    Rng rng(87);
    for (int t = 0; t < 20; ++t) {
      const Tetrad e = random_tetrad(rng);
      const SpinConnection w = random_connection(rng);
      const Tetrad minus(Mat4(-e.matrix()));
      const ThetaCoefficients a = theta_h_coefficients(immerse(e), w);
      const ThetaCoefficients b = theta_h_coefficients(immerse(minus), w);
      CHECK(a.ds_structure == b.ds_structure);
      CHECK(a.ds_direct == b.ds_direct);
      for (std::size_t s = 0; s < a.domega.size(); ++s) CHECK(a.domega[s] == b.domega[s]);
    }
  }
}

TEST_CASE("lorentz equivariance of the immersion") {
  SUBCASE("identity transformation gives zero deviation") {
    Rng rng(88);
    const EquivarianceCheck res =
        lorentz_equivariance_check(random_tetrad(rng), LorentzTransform::identity());
    CHECK(res.max_dev == 0.0);
  }

  SUBCASE("100 seeded random transformations") {
    Rng rng(89);
    double dev = 0.0;
    for (int t = 0; t < 100; ++t)
      dev = std::max(dev,
                     lorentz_equivariance_check(random_tetrad(rng), random_lorentz(rng)).max_dev);
    CHECK(dev <= 1e-9);
  }

  SUBCASE("the Hamiltonian vanishes in every gauge") {
    Rng rng(90);
    for (int t = 0; t < 20; ++t) {
      const Tetrad e = random_tetrad(rng);
      const LorentzTransform lam = random_lorentz(rng);
      CHECK(std::abs(hamiltonian(immerse(transformed(e, lam)))) <= 1e-10);
      CHECK(std::abs(hamiltonian(immerse(e))) <= 1e-10);
    }
  }
}

TEST_CASE("symbolic contraction chain") {
  CHECK(vanishing_hamiltonian_identities());

  // the intermediate contraction at a reference tuple
  CHECK(epsilon_pair_contraction(Index(0), Index(1), Index(0), Index(1)) == 2);

  // the trace term vanishes for any symmetric table, not just eta
  int with_identity = 0;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      for (int l = 0; l < 4; ++l)
        for (int s = 0; s < 4; ++s)
          with_identity +=
              levi_civita(Index(m), Index(n), Index(l), Index(s)) * (m == l) * (n == s);
  CHECK(with_identity == 0);
}
