#ifndef SPINCM_RMATRIX_HPP
#define SPINCM_RMATRIX_HPP

#include <memory>
#include <optional>
#include <vector>

#include "spincm/elliptic.hpp"
#include "spincm/representation.hpp"
#include "spincm/types.hpp"

namespace spincm {

enum class RFamily { Rational, Trigonometric, Elliptic };

std::string rfamily_name(RFamily f);
RFamily rfamily_from_string(const std::string& s);

/// One of the three canonical dynamical r-matrices with spectral parameter.
///
/// All three families share the shape
///   r(q, z) = K_c(z) Σ_i h_i⊗h_i + Σ_{α∈Δ} K_α((α,q), z) e_α⊗e_{-α}
/// with a Cartan kernel K_c and per-root kernels K_α; the associated Lax
/// operator and Hamiltonian reuse the same kernels.
struct RMatrixSpec {
  std::shared_ptr<const Algebra> algebra;
  RFamily family = RFamily::Rational;

  // rational: closed subset Δ'
  std::vector<int> delta_prime;
  std::vector<bool> in_delta_prime;

  // trigonometric: polarization Δ = Δ+ ∪ Δ- and simple subset Π'
  std::vector<bool> positive_mask;
  std::vector<int> pi_prime;
  std::vector<bool> in_span;         ///< Δ(Π') membership per root

  // elliptic
  std::optional<Lattice> lattice;

  /// Validates closure of Δ'.
  static RMatrixSpec rational(std::shared_ptr<const Algebra> alg,
                              std::vector<int> delta_prime);
  /// No closure validation; for negative controls in the check suites.
  static RMatrixSpec rational_unchecked(std::shared_ptr<const Algebra> alg,
                                        std::vector<int> delta_prime);
  /// Standard polarization (the built root order) unless a mask is given.
  static RMatrixSpec trigonometric(std::shared_ptr<const Algebra> alg,
                                   std::vector<int> pi_prime);
  static RMatrixSpec trigonometric(std::shared_ptr<const Algebra> alg,
                                   std::vector<int> pi_prime,
                                   std::vector<bool> positive_mask);
  static RMatrixSpec elliptic(std::shared_ptr<const Algebra> alg, Lattice lat);
};

/// Element of g⊗g as an n²×n² matrix in the defining representation.
struct TensorValue {
  Matrix mat;
};

/// Coefficient of basis(j)⊗basis(k) in the tensor, extracted by form pairing.
Complex tensor_coefficient(const Algebra& alg, const TensorValue& tv, int j, int k);

/// Scalar kernels. root_kernel returns the value and the u-derivative at
/// u = (α, q); u is ignored by families for which the root does not couple
/// to the position.
Complex cartan_kernel(const RMatrixSpec& spec, Complex z);
struct KernelEval {
  Complex value;
  Complex du;
};
KernelEval root_kernel(const RMatrixSpec& spec, int root_index, Complex u, Complex z);

/// Spin-potential weight W_α(u) in H = ½Σp² − ½Σ W_α((α,q)) ξ_α ξ_{-α},
/// with its u-derivative.
KernelEval spin_potential(const RMatrixSpec& spec, int root_index, Complex u);

/// Throws SingularConfiguration if (α, q) sits on the family's divisor.
void guard_root(const RMatrixSpec& spec, int root_index, Complex u);
/// Throws SingularConfiguration if the spectral parameter is singular.
void guard_z(const RMatrixSpec& spec, Complex z);
/// Smallest distance of q to the singular set, in the family's gauge
/// (|(α,q)|, |sin(α,q)| or lattice distance over the coupled roots).
double singular_margin(const RMatrixSpec& spec, const Vector& q);

TensorValue eval_r(const RMatrixSpec& spec, const Vector& q, Complex z);

/// Directional derivative of r in q along an h*-vector.
TensorValue dq_derivative(const RMatrixSpec& spec, const Vector& q, Complex z,
                          const Vector& direction);

/// ‖extrapolated limit of z·r(q,z) − Ω‖, Richardson from z = 1e-2 downward.
double residue_check(const RMatrixSpec& spec, const Vector& q);

/// max over the Cartan basis h of ‖[h⊗1 + 1⊗h, r(q,z)]‖.
double zero_weight_check(const RMatrixSpec& spec, const Vector& q, Complex z);

/// ‖r(q,z) + swap(r(q,−z))‖.
double unitarity_check(const RMatrixSpec& spec, const Vector& q, Complex z);

/// Norm of Alt(d_h r) + [r¹²,r¹³] + [r¹²,r²³] + [r¹³,r²³] in g⊗g⊗g at
/// pairwise differences of (z1, z2, z3).
double cdybe_residual(const RMatrixSpec& spec, const Vector& q, Complex z1,
                      Complex z2, Complex z3);

}  // namespace spincm

#endif
