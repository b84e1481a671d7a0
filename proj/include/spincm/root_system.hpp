#ifndef SPINCM_ROOT_SYSTEM_HPP
#define SPINCM_ROOT_SYSTEM_HPP

#include <string>
#include <vector>

#include "spincm/types.hpp"

namespace spincm {

enum class AlgebraFamily { A, B, C, D };

AlgebraFamily algebra_family_from_char(char c);
char to_char(AlgebraFamily f);
std::string algebra_name(AlgebraFamily f, int rank);

/// Root system of a classical simple Lie algebra, with root coordinates
/// expressed in an orthonormal basis of the Cartan subalgebra of the
/// defining matrix realization. The induced pairing on h* is then the
/// standard dot product and long roots satisfy (α, α) = 2.
struct RootSystem {
  AlgebraFamily family;
  int rank = 0;
  int ambient_dim = 0;                ///< dim h (= rank for A..D)
  std::vector<RealVector> roots;      ///< all roots, positives first
  std::vector<int> positive_roots;    ///< indices into roots
  std::vector<int> simple_roots;      ///< indices into roots
  RealMatrix pairing;                 ///< Gram matrix on h*; identity here
  std::vector<int> negative_of;       ///< index of -roots[k]

  int root_count() const { return static_cast<int>(roots.size()); }
  bool is_positive(int k) const;
  /// Index of the root equal to v, or -1.
  int index_of(const RealVector& v) const;
  /// Index of roots[j] + roots[k] if it is a root, else -1.
  int sum_index(int j, int k) const;
  /// (α, q) for root index k and a complex h*-vector q.
  Complex pair_with(int k, const Vector& q) const;
};

/// Builds the root system of A_n, B_n, C_n or D_n (rank ≥ 1; D needs ≥ 2).
RootSystem build_root_system(AlgebraFamily family, int rank);

enum class RootSubsetKind { Closed, SpannedBySimple };

/// A distinguished subset of roots: either a closed subset Δ' or the set
/// Δ(Π') spanned by a choice of simple roots.
struct RootSubset {
  RootSubsetKind kind = RootSubsetKind::Closed;
  std::vector<int> members;  ///< indices into RootSystem::roots
};

/// True iff the subset is closed under negation and root addition.
bool closed_subset_check(const RootSystem& rs, const std::vector<int>& subset);

/// All roots lying in the integer span of the given simple roots.
std::vector<int> roots_spanned_by(const RootSystem& rs,
                                  const std::vector<int>& simple_subset);

}  // namespace spincm

#endif
