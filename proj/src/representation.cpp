#include "spincm/representation.hpp"

#include <cmath>

#include "spincm/tensor.hpp"

namespace spincm {

namespace {

Matrix unit_matrix(int n, int a, int b) {  // E_ab, 1-based
  Matrix e = Matrix::Zero(n, n);
  e(a - 1, b - 1) = 1.0;
  return e;
}

}  // namespace

const Matrix& Algebra::basis(int j) const {
  const int nc = cartan_dim();
  if (j < nc) return rep.cartan[j];
  return rep.root_vectors[j - nc];
}

const Matrix& Algebra::dual_basis(int j) const {
  const int nc = cartan_dim();
  if (j < nc) return rep.cartan[j];
  return rep.root_vectors[root_system.negative_of[j - nc]];
}

int Algebra::slot_of_root(int root_index) const {
  return cartan_dim() + root_index;
}

int Algebra::root_at_slot(int j) const {
  return j >= cartan_dim() ? j - cartan_dim() : -1;
}

Matrix Algebra::coordinates_to_matrix(const Vector& xi) const {
  if (xi.size() != dim()) throw ShapeError("xi coordinate vector has wrong length");
  Matrix x = Matrix::Zero(rep.n, rep.n);
  for (int j = 0; j < dim(); ++j) x += xi(j) * basis(j);
  return x;
}

Vector Algebra::matrix_to_coordinates(const Matrix& x) const {
  Vector xi(dim());
  for (int j = 0; j < dim(); ++j) xi(j) = invariant_form(rep, x, dual_basis(j));
  return xi;
}

Complex invariant_form(const Representation& rep, const Matrix& x, const Matrix& y) {
  if (x.rows() != rep.n || x.cols() != rep.n || y.rows() != rep.n || y.cols() != rep.n)
    throw ShapeError("invariant_form: operands must be n x n");
  return rep.form_scale * (x * y).trace();
}

Representation build_representation(const RootSystem& rs) {
  Representation rep;
  const int n = rs.rank;

  switch (rs.family) {
    case AlgebraFamily::A: {
      const int m = n + 1;
      rep.n = m;
      rep.form_scale = 1.0;
      for (int k = 1; k <= n; ++k) {
        Matrix h = Matrix::Zero(m, m);
        const double c = 1.0 / std::sqrt(double(k) * (k + 1));
        for (int i = 1; i <= k; ++i) h(i - 1, i - 1) = c;
        h(k, k) = -double(k) * c;
        rep.cartan.push_back(h);
      }
      std::vector<Matrix> pos;
      for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) pos.push_back(unit_matrix(m, i, j));
      rep.root_vectors = pos;
      for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
          rep.root_vectors.push_back(unit_matrix(m, j, i));
      break;
    }
    case AlgebraFamily::B:
    case AlgebraFamily::D: {
      const int m = (rs.family == AlgebraFamily::B) ? 2 * n + 1 : 2 * n;
      rep.n = m;
      rep.form_scale = 0.5;
      auto conj_index = [m](int a) { return m + 1 - a; };
      auto gen = [&](int a, int b) {  // E_ab - E_{b'a'}
        return Matrix(unit_matrix(m, a, b) - unit_matrix(m, conj_index(b), conj_index(a)));
      };
      for (int i = 1; i <= n; ++i) rep.cartan.push_back(gen(i, i));
      std::vector<Matrix> pos, neg;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          pos.push_back(gen(i, j));              // ε_i - ε_j
          neg.push_back(gen(j, i));
        }
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          pos.push_back(gen(i, conj_index(j)));  // ε_i + ε_j
          neg.push_back(gen(conj_index(j), i));
        }
      if (rs.family == AlgebraFamily::B) {
        for (int i = 1; i <= n; ++i) {
          pos.push_back(gen(i, n + 1));          // ε_i
          neg.push_back(gen(n + 1, i));
        }
      }
      rep.root_vectors = pos;
      rep.root_vectors.insert(rep.root_vectors.end(), neg.begin(), neg.end());
      break;
    }
    case AlgebraFamily::C: {
      const int m = 2 * n;
      rep.n = m;
      rep.form_scale = 1.0;
      auto conj_index = [m](int a) { return m + 1 - a; };
      auto sgn = [n](int a) { return a <= n ? 1.0 : -1.0; };
      auto gen = [&](int a, int b) {  // E_ab - σ_a σ_b E_{b'a'}
        return Matrix(unit_matrix(m, a, b) -
                      sgn(a) * sgn(b) * unit_matrix(m, conj_index(b), conj_index(a)));
      };
      const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
      for (int i = 1; i <= n; ++i)
        rep.cartan.push_back(Matrix(inv_sqrt2 * gen(i, i)));
      std::vector<Matrix> pos, neg;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          pos.push_back(Matrix(inv_sqrt2 * gen(i, j)));
          neg.push_back(Matrix(inv_sqrt2 * gen(j, i)));
        }
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          pos.push_back(Matrix(inv_sqrt2 * gen(i, conj_index(j))));
          neg.push_back(Matrix(inv_sqrt2 * gen(conj_index(j), i)));
        }
      for (int i = 1; i <= n; ++i) {
        pos.push_back(unit_matrix(m, i, conj_index(i)));   // 2ε_i
        neg.push_back(unit_matrix(m, conj_index(i), i));
      }
      rep.root_vectors = pos;
      rep.root_vectors.insert(rep.root_vectors.end(), neg.begin(), neg.end());
      break;
    }
  }
  return rep;
}

CasimirTensor casimir_tensor(const Algebra& alg) {
  const int n = alg.rep.n;
  Matrix omega = Matrix::Zero(n * n, n * n);
  for (const Matrix& h : alg.rep.cartan) omega += kron(h, h);
  for (int k = 0; k < alg.root_system.root_count(); ++k)
    omega += kron(alg.rep.root_vectors[k],
                  alg.rep.root_vectors[alg.root_system.negative_of[k]]);
  return {omega};
}

namespace {

StructureConstants compute_structure_constants(const Algebra& alg) {
  StructureConstants sc;
  sc.dim = alg.dim();
  sc.table.resize(static_cast<std::size_t>(sc.dim) * sc.dim);
  for (int a = 0; a < sc.dim; ++a)
    for (int b = 0; b < sc.dim; ++b) {
      const Matrix comm = alg.basis(a) * alg.basis(b) - alg.basis(b) * alg.basis(a);
      const Vector coords = alg.matrix_to_coordinates(comm);
      auto& cell = sc.table[static_cast<std::size_t>(a) * sc.dim + b];
      for (int c = 0; c < sc.dim; ++c)
        if (std::abs(coords(c)) > 1e-12) cell.emplace_back(c, coords(c));
    }
  return sc;
}

}  // namespace

std::shared_ptr<const Algebra> build_algebra(AlgebraFamily family, int rank) {
  auto alg = std::make_shared<Algebra>();
  alg->root_system = build_root_system(family, rank);
  alg->rep = build_representation(alg->root_system);
  alg->constants = compute_structure_constants(*alg);
  return alg;
}

}  // namespace spincm
