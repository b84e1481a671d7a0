#ifndef SPINCM_ELLIPTIC_HPP
#define SPINCM_ELLIPTIC_HPP

#include "spincm/types.hpp"

namespace spincm {

/// Period lattice 2ω₁Z + 2ω₂Z with precomputed nome, eta constants and
/// Eisenstein invariants. σ, ζ, ℘ are evaluated through the θ₁ q-series
/// after reducing the argument to the fundamental cell, so they stay
/// accurate for arbitrary arguments.
class Lattice {
 public:
  /// Requires Im(ω₂/ω₁) ≥ 0.1; extreme aspect ratios are rejected.
  Lattice(Complex omega1, Complex omega2);

  Complex omega1() const { return omega1_; }
  Complex omega2() const { return omega2_; }
  Complex tau() const { return tau_; }
  Complex nome() const { return q_; }
  Complex eta1() const { return eta1_; }   ///< ζ(ω₁)
  Complex eta2() const { return eta2_; }   ///< ζ(ω₂)
  Complex g2() const { return g2_; }
  Complex g3() const { return g3_; }

  /// |z - nearest lattice point| below this counts as a pole.
  double pole_cutoff() const { return 1e-12 * std::abs(omega1_); }

  struct Reduced {
    Complex z0;   ///< z - 2mω₁ - 2nω₂ in the centered fundamental cell
    long m = 0, n = 0;
  };
  Reduced reduce(Complex z) const;

  /// Distance from z to the nearest lattice point.
  double lattice_distance(Complex z) const;

  Complex sigma(Complex z) const;
  Complex zeta(Complex z) const;          ///< throws PoleError on lattice points
  Complex p(Complex z) const;             ///< Weierstrass ℘
  Complex p_prime(Complex z) const;

 private:
  struct Theta {  // θ₁ and its first three derivatives at v
    Complex t0, t1, t2, t3;
  };
  Theta theta1(Complex v) const;
  Complex zeta_reduced(Complex z0) const;

  Complex omega1_, omega2_, tau_, q_;
  Complex theta1p0_, theta1ppp0_;  // θ₁'(0), θ₁'''(0)
  Complex eta1_, eta2_, g2_, g3_;
};

Complex weierstrass_sigma(const Lattice& lat, Complex z);
Complex weierstrass_zeta(const Lattice& lat, Complex z);
Complex weierstrass_p(const Lattice& lat, Complex z);
Complex weierstrass_p_prime(const Lattice& lat, Complex z);

/// Kernel l(x, z) = -σ(x+z)/(σ(x)σ(z)); simple pole with residue -1 at z = 0.
Complex elliptic_l(const Lattice& lat, Complex x, Complex z);

/// ∂l/∂x = l(x, z)(ζ(x+z) - ζ(x)).
Complex elliptic_l_dx(const Lattice& lat, Complex x, Complex z);

}  // namespace spincm

#endif
