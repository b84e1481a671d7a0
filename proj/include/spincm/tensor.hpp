#ifndef SPINCM_TENSOR_HPP
#define SPINCM_TENSOR_HPP

#include "spincm/types.hpp"

namespace spincm {

/// Kronecker product, rows/cols of A indexing the leading tensor slot.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Permutation matrix P on C^n ⊗ C^n with P(u ⊗ v) = v ⊗ u.
inline Matrix swap_matrix(int n) {
  Matrix p = Matrix::Zero(n * n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) p(b * n + a, a * n + b) = 1.0;
  return p;
}

/// Exchanges the two tensor factors of X ∈ g ⊗ g.
inline Matrix swap_factors(const Matrix& x) {
  const int n = static_cast<int>(std::lround(std::sqrt(double(x.rows()))));
  const Matrix p = swap_matrix(n);
  return p * x * p;
}

/// Embeddings of a two-factor tensor into slots of C^n ⊗ C^n ⊗ C^n.
inline Matrix embed12(const Matrix& x, int n) {
  return kron(x, Matrix::Identity(n, n));
}

inline Matrix embed23(const Matrix& x, int n) {
  return kron(Matrix::Identity(n, n), x);
}

inline Matrix embed13(const Matrix& x, int n) {
  const Matrix ip = kron(Matrix::Identity(n, n), swap_matrix(n));
  return ip * embed12(x, n) * ip;
}

/// First factor of x into slot 3, second factor into slot 1.
inline Matrix embed31(const Matrix& x, int n) {
  return embed13(swap_factors(x), n);
}

}  // namespace spincm

#endif
