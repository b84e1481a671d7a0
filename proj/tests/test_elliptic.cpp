#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "spincm/elliptic.hpp"
#include "spincm/rng.hpp"

using namespace spincm;

namespace {

const Complex kI{0.0, 1.0};

// random point in the (centered) fundamental cell, away from the lattice
Complex random_cell_point(const Lattice& lat, Rng& rng, double margin = 0.08) {
  for (int tries = 0; tries < 200; ++tries) {
    const double a = rng.uniform(-0.45, 0.45);
    const double b = rng.uniform(-0.45, 0.45);
    const Complex z = 2.0 * a * lat.omega1() + 2.0 * b * lat.omega2();
    if (lat.lattice_distance(z) > margin) return z;
  }
  return 0.3 * lat.omega1() + 0.2 * lat.omega2();
}

}  // namespace

TEST_CASE("lattice construction and validation") {
  CHECK_THROWS_AS(Lattice(1.0, Complex(1.0, 0.05)), std::invalid_argument);
  CHECK_THROWS_AS(Lattice(1.0, Complex(1.0, -1.0)), std::invalid_argument);
  const Lattice lat(1.0, kI);
  CHECK(std::abs(lat.g2() * lat.g2() * lat.g2() -
                 27.0 * lat.g3() * lat.g3()) > 1e-3);  // nondegenerate
  CHECK(std::abs(lat.g3()) < 1e-13);                   // square lattice
}

TEST_CASE("Eisenstein invariants match the resummed lattice sums") {
  for (auto [w1, w2] : {std::pair<Complex, Complex>{1.0, kI},
                        {1.1, Complex(0.3, 0.8)}}) {
    CAPTURE(w1);
    CAPTURE(w2);
    const Lattice lat(w1, w2);
    const Complex g2o = 60.0 * oracle::eisenstein_g4(w1, w2);
    const Complex g3o = 140.0 * oracle::eisenstein_g6(w1, w2);
    CHECK(std::abs(lat.g2() - g2o) < 1e-12 * std::max(1.0, std::abs(g2o)));
    CHECK(std::abs(lat.g3() - g3o) < 1e-12 * std::max(1.0, std::abs(g2o)));
  }
}

TEST_CASE("resummed Eisenstein constants agree with direct truncated sums") {
  // guards the oracle itself against algebra slips in the resummation
  const Complex w1 = 1.0, w2 = kI;
  const Complex direct4 = oracle::eisenstein_direct(w1, w2, 4, 60);
  const Complex direct6 = oracle::eisenstein_direct(w1, w2, 6, 60);
  CHECK(std::abs(oracle::eisenstein_g4(w1, w2) - direct4) <
        2e-2 * std::abs(direct4));
  CHECK(std::abs(oracle::eisenstein_g6(w1, w2) - direct6) <
        2e-2 * std::abs(direct6) + 1e-10);
}

TEST_CASE("sigma: oddness, behavior at zero, quasi-periodicity") {
  const Lattice lat(1.0, kI);
  Rng rng(7101);
  CHECK(std::abs(lat.sigma(0.0)) < 1e-14);

  for (int i = 0; i < 30; ++i) {
    const Complex z = random_cell_point(lat, rng);
    CHECK(std::abs(lat.sigma(z) + lat.sigma(-z)) < 1e-12);
  }
  // sigma(z) = z + O(z^5)
  const Complex z_small = 1e-3;
  CHECK(std::abs(lat.sigma(z_small) / z_small - 1.0) < 1e-11);

  // quasi-periodicity with eta_1 taken from the independent lattice sum
  const Complex eta1o = oracle::eta1_sum(1.0, kI);
  for (int i = 0; i < 20; ++i) {
    const Complex z = random_cell_point(lat, rng);
    const Complex lhs = lat.sigma(z + 2.0 * lat.omega1());
    const Complex rhs = -std::exp(2.0 * eta1o * (z + lat.omega1())) * lat.sigma(z);
    CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("zeta: parity, principal part, lattice-sum oracle") {
  const Lattice lat(1.0, kI);
  Rng rng(7102);
  for (int i = 0; i < 30; ++i) {
    const Complex z = random_cell_point(lat, rng);
    CHECK(std::abs(lat.zeta(z) + lat.zeta(-z)) < 1e-11);
  }
  const Complex z_small = 1e-3 * lat.omega1();
  CHECK(std::abs(z_small * lat.zeta(z_small) - 1.0) < 1e-5);

  for (int i = 0; i < 20; ++i) {
    const Complex z = random_cell_point(lat, rng);
    const Complex want = oracle::zeta_sum(1.0, kI, z);
    CHECK(std::abs(lat.zeta(z) - want) < 1e-8);
  }
  CHECK_THROWS_AS(lat.zeta(Complex(2.0, 2.0)), PoleError);
  CHECK_THROWS_AS(lat.zeta(0.0), PoleError);
}

TEST_CASE("p: parity, periodicity, differential equation with oracle invariants") {
  const Lattice lat(1.0, kI);
  Rng rng(7103);
  const Complex g2o = 60.0 * oracle::eisenstein_g4(1.0, kI);
  const Complex g3o = 140.0 * oracle::eisenstein_g6(1.0, kI);
  for (int i = 0; i < 50; ++i) {
    const Complex z = random_cell_point(lat, rng);
    const Complex p = lat.p(z);
    const Complex pp = lat.p_prime(z);
    CHECK(std::abs(p - lat.p(-z)) < 1e-11);
    CHECK(std::abs(p - lat.p(z + 2.0 * lat.omega1())) < 1e-9);
    CHECK(std::abs(p - lat.p(z + 2.0 * lat.omega2())) < 1e-9);
    CHECK(std::abs(pp * pp - 4.0 * p * p * p + g2o * p + g3o) < 1e-9);
  }
}

TEST_CASE("zeta' equals -p by central differences") {
  const Lattice lat(1.0, kI);
  Rng rng(7104);
  const double h = 1e-5;
  for (int i = 0; i < 25; ++i) {
    const Complex z = random_cell_point(lat, rng, 0.15);
    const Complex fd = (lat.zeta(z + h) - lat.zeta(z - h)) / (2.0 * h);
    CHECK(std::abs(fd + lat.p(z)) < 1e-6);
  }
}

TEST_CASE("analyticity: Cauchy-Riemann residual by finite differences") {
  const Lattice lat(1.0, kI);
  Rng rng(7105);
  // step small enough that the O(h^2 f''') truncation stays below tolerance
  // even with p''' ~ 1/d^5 at distance d from the pole
  const double h = 1e-6;
  auto cr_residual = [&](auto f, Complex z) {
    const Complex dx = (f(z + h) - f(z - h)) / (2.0 * h);
    const Complex dy = (f(z + kI * h) - f(z - kI * h)) / (2.0 * kI * h);
    return std::abs(dx - dy);
  };
  for (int i = 0; i < 20; ++i) {
    const Complex z = random_cell_point(lat, rng, 0.2);
    CHECK(cr_residual([&](Complex w) { return lat.sigma(w); }, z) < 1e-6);
    CHECK(cr_residual([&](Complex w) { return lat.zeta(w); }, z) < 1e-6);
    CHECK(cr_residual([&](Complex w) { return lat.p(w); }, z) < 1e-6);
  }
}

TEST_CASE("Legendre relation") {
  for (auto [w1, w2] : {std::pair<Complex, Complex>{1.0, kI},
                        {1.1, Complex(0.3, 0.8)},
                        {Complex(0.9, 0.1), Complex(-0.2, 1.3)}}) {
    CAPTURE(w1);
    CAPTURE(w2);
    const Lattice lat(w1, w2);
    const Complex relation =
        lat.eta1() * lat.omega2() - lat.eta2() * lat.omega1();
    CHECK(std::abs(relation - kI * oracle::kPi / 2.0) < 1e-9);
  }
}

TEST_CASE("kernel l(x,z): residue, parity, oracle value") {
  const Lattice lat(1.0, kI);
  const Complex x = 0.37;
  // z l(x,z) -> -1 linearly (slope -zeta(x)), so extrapolate once
  const Complex f1 = 1e-3 * elliptic_l(lat, x, 1e-3);
  const Complex f2 = 5e-4 * elliptic_l(lat, x, 5e-4);
  CHECK(std::abs(2.0 * f2 - f1 + 1.0) < 1e-5);

  Rng rng(7106);
  for (int i = 0; i < 20; ++i) {
    const Complex a = random_cell_point(lat, rng);
    const Complex b = random_cell_point(lat, rng);
    CHECK(std::abs(elliptic_l(lat, a, -b) + elliptic_l(lat, -a, b)) < 1e-10);
  }

  const Complex value = elliptic_l(lat, 0.3, 0.7);
  const Complex want = -oracle::sigma_product(1.0, kI, 1.0) /
                       (oracle::sigma_product(1.0, kI, 0.3) *
                        oracle::sigma_product(1.0, kI, 0.7));
  CHECK(std::abs(value - want) < 1e-8);

  CHECK_THROWS_AS(elliptic_l(lat, 0.0, 0.5), PoleError);
  CHECK_THROWS_AS(elliptic_l(lat, 0.5, Complex(2.0, 0.0)), PoleError);
}

TEST_CASE("l_dx matches finite differences") {
  const Lattice lat(1.0, kI);
  Rng rng(7107);
  const double h = 1e-5;
  for (int i = 0; i < 15; ++i) {
    const Complex x = random_cell_point(lat, rng, 0.15);
    const Complex z = random_cell_point(lat, rng, 0.15);
    if (lat.lattice_distance(x + z) < 0.1) continue;
    const Complex fd =
        (elliptic_l(lat, x + h, z) - elliptic_l(lat, x - h, z)) / (2.0 * h);
    const Complex an = elliptic_l_dx(lat, x, z);
    CHECK(std::abs(fd - an) < 1e-6 * std::max(1.0, std::abs(an)));
  }
}

TEST_CASE("oracle self-check: resummed 1D rows against direct sums") {
  const oracle::C a(0.3, 0.7);
  oracle::C direct4 = 0.0, direct6 = 0.0;
  for (int m = -20000; m <= 20000; ++m) {
    direct4 += std::pow(a + double(m), -4);
    direct6 += std::pow(a + double(m), -6);
  }
  CHECK(std::abs(oracle::s4_row(a) - direct4) < 1e-10);
  CHECK(std::abs(oracle::s6_row(a) - direct6) < 1e-10);
}
