#ifndef SPINCM_REPRESENTATION_HPP
#define SPINCM_REPRESENTATION_HPP

#include <memory>
#include <utility>
#include <vector>

#include "spincm/root_system.hpp"
#include "spincm/types.hpp"

namespace spincm {

/// Defining matrix realization of the algebra: orthonormal Cartan basis
/// h_1..h_N under (X,Y) = κ·tr(XY), and root vectors e_α scaled so that
/// (e_α, e_{-α}) = 1. κ is fixed per family so long roots have (α,α) = 2.
struct Representation {
  int n = 0;                          ///< matrix size
  double form_scale = 1.0;            ///< κ
  std::vector<Matrix> cartan;         ///< h_1..h_N
  std::vector<Matrix> root_vectors;   ///< e_α aligned with RootSystem::roots
};

/// Sparse structure constants c_{ab}^c for the canonical basis ordering.
struct StructureConstants {
  int dim = 0;
  std::vector<std::vector<std::pair<int, Complex>>> table;  ///< [a*dim+b]

  const std::vector<std::pair<int, Complex>>& at(int a, int b) const {
    return table[static_cast<std::size_t>(a) * dim + b];
  }
};

/// Root system plus matrix realization plus derived tables, with the basis
/// ordering contract (h_1..h_N, e_α over positive roots, then e_{-α}).
struct Algebra {
  RootSystem root_system;
  Representation rep;
  StructureConstants constants;

  int cartan_dim() const { return root_system.ambient_dim; }
  int dim() const { return cartan_dim() + root_system.root_count(); }

  /// Basis element at slot j of the ordering contract.
  const Matrix& basis(int j) const;
  /// Form-dual of basis(j): h_i ↦ h_i, e_α ↦ e_{-α}.
  const Matrix& dual_basis(int j) const;
  /// Slot of e_α in the basis ordering.
  int slot_of_root(int root_index) const;
  /// Root index held at slot j, or -1 for Cartan slots.
  int root_at_slot(int j) const;

  /// ξ-coordinates (pairings with the dual basis) to the matrix Σ_j ξ_j b_j.
  Matrix coordinates_to_matrix(const Vector& xi) const;
  /// Inverse of coordinates_to_matrix via the invariant form.
  Vector matrix_to_coordinates(const Matrix& x) const;
};

/// Defining representation for the given root system.
Representation build_representation(const RootSystem& rs);

/// κ·tr(XY). Throws ShapeError on dimension mismatch.
Complex invariant_form(const Representation& rep, const Matrix& x, const Matrix& y);

struct CasimirTensor {
  Matrix omega;  ///< n² × n² matrix of Σ_i h_i⊗h_i + Σ_α e_α⊗e_{-α}
};

CasimirTensor casimir_tensor(const Algebra& alg);

/// Root system, representation and structure constants in one build.
std::shared_ptr<const Algebra> build_algebra(AlgebraFamily family, int rank);

}  // namespace spincm

#endif
