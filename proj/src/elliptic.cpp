#include "spincm/elliptic.hpp"

#include <cmath>

namespace spincm {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr int kMaxTerms = 500;

}  // namespace

Lattice::Lattice(Complex omega1, Complex omega2)
    : omega1_(omega1), omega2_(omega2) {
  if (std::abs(omega1) == 0.0)
    throw std::invalid_argument("lattice: omega1 must be nonzero");
  tau_ = omega2_ / omega1_;
  if (tau_.imag() < 0.1)
    throw std::invalid_argument(
        "lattice: Im(omega2/omega1) must be at least 0.1");
  q_ = std::exp(kImaginaryUnit * kPi * tau_);

  // theta1'(0) and theta1'''(0)
  {
    Complex a = std::pow(q_, 0.25);  // q^{(k+1/2)^2}, k = 0
    Complex r = q_ * q_;             // ratio a_{k+1}/a_k = q^{2k+2}
    Complex t1 = 0.0, t3 = 0.0;
    double sign = 1.0;
    for (int k = 0; k < kMaxTerms; ++k) {
      const double odd = 2.0 * k + 1.0;
      t1 += sign * odd * a;
      t3 += sign * odd * odd * odd * a;
      if (std::abs(a) < 1e-20 * std::abs(t1) && k > 2) break;
      a *= r;
      r *= q_ * q_;
      sign = -sign;
    }
    theta1p0_ = 2.0 * t1;
    theta1ppp0_ = -2.0 * t3;
  }
  eta1_ = -kPi * kPi * theta1ppp0_ / (12.0 * omega1_ * theta1p0_);

  // Eisenstein invariants from the Lambert series in q^2.
  {
    const Complex q2 = q_ * q_;
    Complex qp = q2;  // q^{2k}
    Complex s4 = 0.0, s6 = 0.0;
    for (int k = 1; k < kMaxTerms; ++k) {
      const double kd = k;
      const Complex term = qp / (1.0 - qp);
      s4 += kd * kd * kd * term;
      s6 += kd * kd * kd * kd * kd * term;
      if (std::abs(qp) < 1e-20) break;
      qp *= q2;
    }
    const Complex c = kPi / (2.0 * omega1_);
    const Complex c2 = c * c;
    g2_ = (4.0 / 3.0) * c2 * c2 * (1.0 + 240.0 * s4);
    g3_ = (8.0 / 27.0) * c2 * c2 * c2 * (1.0 - 504.0 * s6);
  }

  eta2_ = zeta_reduced(omega2_);
}

Lattice::Theta Lattice::theta1(Complex v) const {
  const double log_q = std::log(std::abs(q_));
  const double abs_im_v = std::abs(v.imag());
  const Complex s2v = std::sin(2.0 * v), c2v = std::cos(2.0 * v);

  Complex a = std::pow(q_, 0.25);
  Complex r = q_ * q_;
  Complex s = std::sin(v), c = std::cos(v);
  Theta th{0.0, 0.0, 0.0, 0.0};
  double sign = 1.0;
  for (int k = 0; k < kMaxTerms; ++k) {
    const double odd = 2.0 * k + 1.0;
    th.t0 += sign * a * s;
    th.t1 += sign * odd * a * c;
    th.t2 -= sign * odd * odd * a * s;
    th.t3 -= sign * odd * odd * odd * a * c;
    // term magnitude relative to the leading one decays like
    // exp(k(k+1) log|q| + 2k |Im v|)
    if (double(k) * (k + 1.0) * log_q + 2.0 * k * abs_im_v < -46.0) break;
    a *= r;
    r *= q_ * q_;
    sign = -sign;
    const Complex sn = s * c2v + c * s2v;
    const Complex cn = c * c2v - s * s2v;
    s = sn;
    c = cn;
  }
  th.t0 *= 2.0;
  th.t1 *= 2.0;
  th.t2 *= 2.0;
  th.t3 *= 2.0;
  return th;
}

Lattice::Reduced Lattice::reduce(Complex z) const {
  const Complex p1 = 2.0 * omega1_, p2 = 2.0 * omega2_;
  const double det = p1.real() * p2.imag() - p1.imag() * p2.real();
  const double a = (z.real() * p2.imag() - z.imag() * p2.real()) / det;
  const double b = (p1.real() * z.imag() - p1.imag() * z.real()) / det;
  Reduced r;
  r.m = std::llround(a);
  r.n = std::llround(b);
  r.z0 = z - double(r.m) * p1 - double(r.n) * p2;
  return r;
}

double Lattice::lattice_distance(Complex z) const {
  const Reduced r = reduce(z);
  double best = std::abs(r.z0);
  for (int dm = -1; dm <= 1; ++dm)
    for (int dn = -1; dn <= 1; ++dn)
      best = std::min(best, std::abs(r.z0 - 2.0 * double(dm) * omega1_ -
                                     2.0 * double(dn) * omega2_));
  return best;
}

Complex Lattice::zeta_reduced(Complex z0) const {
  const Complex v = kPi * z0 / (2.0 * omega1_);
  const Theta th = theta1(v);
  return eta1_ * z0 / omega1_ + kPi / (2.0 * omega1_) * th.t1 / th.t0;
}

Complex Lattice::sigma(Complex z) const {
  const Reduced r = reduce(z);
  const Complex v = kPi * r.z0 / (2.0 * omega1_);
  const Theta th = theta1(v);
  Complex s0 = (2.0 * omega1_ / kPi) *
               std::exp(eta1_ * r.z0 * r.z0 / (2.0 * omega1_)) * th.t0 /
               theta1p0_;
  if (r.m == 0 && r.n == 0) return s0;
  const Complex cell = 2.0 * double(r.m) * omega1_ + 2.0 * double(r.n) * omega2_;
  const Complex w = 2.0 * double(r.m) * eta1_ + 2.0 * double(r.n) * eta2_;
  const bool odd = ((r.m + r.n + r.m * r.n) % 2) != 0;
  const double eps = odd ? -1.0 : 1.0;
  return eps * std::exp(w * (r.z0 + 0.5 * cell)) * s0;
}

Complex Lattice::zeta(Complex z) const {
  const Reduced r = reduce(z);
  if (std::abs(r.z0) < pole_cutoff())
    throw PoleError("zeta evaluated at a lattice point");
  return zeta_reduced(r.z0) + 2.0 * double(r.m) * eta1_ +
         2.0 * double(r.n) * eta2_;
}

Complex Lattice::p(Complex z) const {
  const Reduced r = reduce(z);
  if (std::abs(r.z0) < pole_cutoff())
    throw PoleError("p evaluated at a lattice point");
  const Complex v = kPi * r.z0 / (2.0 * omega1_);
  const Theta th = theta1(v);
  const Complex k = kPi / (2.0 * omega1_);
  const Complex l1 = th.t1 / th.t0;
  return -eta1_ / omega1_ - k * k * (th.t2 / th.t0 - l1 * l1);
}

Complex Lattice::p_prime(Complex z) const {
  const Reduced r = reduce(z);
  if (std::abs(r.z0) < pole_cutoff())
    throw PoleError("p_prime evaluated at a lattice point");
  const Complex v = kPi * r.z0 / (2.0 * omega1_);
  const Theta th = theta1(v);
  const Complex k = kPi / (2.0 * omega1_);
  const Complex l1 = th.t1 / th.t0;
  return -k * k * k *
         (th.t3 / th.t0 - 3.0 * l1 * (th.t2 / th.t0) + 2.0 * l1 * l1 * l1);
}

Complex weierstrass_sigma(const Lattice& lat, Complex z) { return lat.sigma(z); }
Complex weierstrass_zeta(const Lattice& lat, Complex z) { return lat.zeta(z); }
Complex weierstrass_p(const Lattice& lat, Complex z) { return lat.p(z); }
Complex weierstrass_p_prime(const Lattice& lat, Complex z) { return lat.p_prime(z); }

Complex elliptic_l(const Lattice& lat, Complex x, Complex z) {
  if (lat.lattice_distance(x) < lat.pole_cutoff())
    throw PoleError("elliptic_l: x on the lattice");
  if (lat.lattice_distance(z) < lat.pole_cutoff())
    throw PoleError("elliptic_l: z on the lattice");
  return -lat.sigma(x + z) / (lat.sigma(x) * lat.sigma(z));
}

Complex elliptic_l_dx(const Lattice& lat, Complex x, Complex z) {
  return elliptic_l(lat, x, z) * (lat.zeta(x + z) - lat.zeta(x));
}

}  // namespace spincm
