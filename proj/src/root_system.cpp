#include "spincm/root_system.hpp"

#include <algorithm>
#include <cmath>

namespace spincm {

namespace {

constexpr double kMatchTol = 1e-9;

void append_with_negatives(std::vector<RealVector>& positives,
                           RootSystem& rs) {
  const int p = static_cast<int>(positives.size());
  rs.roots = positives;
  rs.roots.reserve(2 * p);
  for (int t = 0; t < p; ++t) rs.roots.push_back(-positives[t]);
  rs.positive_roots.resize(p);
  rs.negative_of.resize(2 * p);
  for (int t = 0; t < p; ++t) {
    rs.positive_roots[t] = t;
    rs.negative_of[t] = p + t;
    rs.negative_of[p + t] = t;
  }
}

}  // namespace

AlgebraFamily algebra_family_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return AlgebraFamily::A;
    case 'B': case 'b': return AlgebraFamily::B;
    case 'C': case 'c': return AlgebraFamily::C;
    case 'D': case 'd': return AlgebraFamily::D;
    default:
      throw UnsupportedAlgebra(std::string("unknown algebra family '") + c + "'");
  }
}

char to_char(AlgebraFamily f) {
  switch (f) {
    case AlgebraFamily::A: return 'A';
    case AlgebraFamily::B: return 'B';
    case AlgebraFamily::C: return 'C';
    default: return 'D';
  }
}

std::string algebra_name(AlgebraFamily f, int rank) {
  return std::string(1, to_char(f)) + std::to_string(rank);
}

bool RootSystem::is_positive(int k) const {
  return k < static_cast<int>(positive_roots.size());
}

int RootSystem::index_of(const RealVector& v) const {
  for (int k = 0; k < root_count(); ++k)
    if ((roots[k] - v).lpNorm<Eigen::Infinity>() < kMatchTol) return k;
  return -1;
}

int RootSystem::sum_index(int j, int k) const {
  return index_of(roots[j] + roots[k]);
}

Complex RootSystem::pair_with(int k, const Vector& q) const {
  Complex out = 0.0;
  for (Eigen::Index i = 0; i < q.size(); ++i) out += roots[k](i) * q(i);
  return out;
}

RootSystem build_root_system(AlgebraFamily family, int rank) {
  if (rank < 1) throw UnsupportedAlgebra("rank must be at least 1");
  if (family == AlgebraFamily::D && rank < 2)
    throw UnsupportedAlgebra("D family needs rank >= 2");

  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  rs.ambient_dim = rank;
  rs.pairing = RealMatrix::Identity(rank, rank);

  const int n = rank;
  std::vector<RealVector> positives;
  std::vector<RealVector> simples;

  auto unit = [n](int i) {
    RealVector v = RealVector::Zero(n);
    v(i) = 1.0;
    return v;
  };

  switch (family) {
    case AlgebraFamily::A: {
      // Orthonormal Cartan basis of sl(n+1) under (X,Y) = tr(XY):
      // h_k = diag(1,...,1,-k,0,...,0)/sqrt(k(k+1)) with k leading ones.
      auto diag_entry = [](int k, int m) {  // (h_k)_{mm}, all 1-based
        const double c = 1.0 / std::sqrt(double(k) * (k + 1));
        if (m <= k) return c;
        if (m == k + 1) return -double(k) * c;
        return 0.0;
      };
      auto coords = [&](int i, int j) {  // root of E_ij
        RealVector v(n);
        for (int k = 1; k <= n; ++k) v(k - 1) = diag_entry(k, i) - diag_entry(k, j);
        return v;
      };
      for (int i = 1; i <= n + 1; ++i)
        for (int j = i + 1; j <= n + 1; ++j) positives.push_back(coords(i, j));
      for (int i = 1; i <= n; ++i) simples.push_back(coords(i, i + 1));
      break;
    }
    case AlgebraFamily::B: {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) positives.push_back(unit(i) - unit(j));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) positives.push_back(unit(i) + unit(j));
      for (int i = 0; i < n; ++i) positives.push_back(unit(i));
      for (int i = 0; i + 1 < n; ++i) simples.push_back(unit(i) - unit(i + 1));
      simples.push_back(unit(n - 1));
      break;
    }
    case AlgebraFamily::C: {
      const double s = 1.0 / std::sqrt(2.0);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) positives.push_back(s * (unit(i) - unit(j)));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) positives.push_back(s * (unit(i) + unit(j)));
      for (int i = 0; i < n; ++i) positives.push_back(std::sqrt(2.0) * unit(i));
      for (int i = 0; i + 1 < n; ++i) simples.push_back(s * (unit(i) - unit(i + 1)));
      simples.push_back(std::sqrt(2.0) * unit(n - 1));
      break;
    }
    case AlgebraFamily::D: {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) positives.push_back(unit(i) - unit(j));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) positives.push_back(unit(i) + unit(j));
      for (int i = 0; i + 1 < n; ++i) simples.push_back(unit(i) - unit(i + 1));
      simples.push_back(unit(n - 2) + unit(n - 1));
      break;
    }
  }

  append_with_negatives(positives, rs);
  for (const RealVector& s : simples) {
    const int k = rs.index_of(s);
    if (k < 0) throw UnsupportedAlgebra("internal: simple root not found");
    rs.simple_roots.push_back(k);
  }
  return rs;
}

bool closed_subset_check(const RootSystem& rs, const std::vector<int>& subset) {
  std::vector<char> in(rs.root_count(), 0);
  for (int k : subset) {
    if (k < 0 || k >= rs.root_count())
      throw ShapeError("root index out of range in subset");
    in[k] = 1;
  }
  for (int k : subset)
    if (!in[rs.negative_of[k]]) return false;
  for (int j : subset)
    for (int k : subset) {
      const int s = rs.sum_index(j, k);
      if (s >= 0 && !in[s]) return false;
    }
  return true;
}

std::vector<int> roots_spanned_by(const RootSystem& rs,
                                  const std::vector<int>& simple_subset) {
  for (int k : simple_subset) {
    if (std::find(rs.simple_roots.begin(), rs.simple_roots.end(), k) ==
        rs.simple_roots.end())
      throw ShapeError("subset member is not a simple root");
  }
  const int m = static_cast<int>(rs.simple_roots.size());
  RealMatrix s(rs.ambient_dim, m);
  for (int t = 0; t < m; ++t) s.col(t) = rs.roots[rs.simple_roots[t]];
  const auto solver = s.colPivHouseholderQr();

  std::vector<char> allowed(m, 0);
  for (int k : simple_subset) {
    for (int t = 0; t < m; ++t)
      if (rs.simple_roots[t] == k) allowed[t] = 1;
  }

  std::vector<int> out;
  for (int k = 0; k < rs.root_count(); ++k) {
    const RealVector c = solver.solve(rs.roots[k]);
    bool ok = (s * c - rs.roots[k]).norm() < 1e-9;
    for (int t = 0; t < m && ok; ++t)
      if (!allowed[t] && std::abs(c(t)) > 1e-6) ok = false;
    if (ok) out.push_back(k);
  }
  return out;
}

}  // namespace spincm
