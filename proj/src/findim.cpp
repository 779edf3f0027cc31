#include "kwj/findim.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace kwj {

Vec FinDimAlgebra::basis(std::size_t i) const {
  Vec v = zero();
  v[i] = CycElem(order, 1L);
  return v;
}

Vec FinDimAlgebra::mul_basis(std::size_t i, std::size_t j) const {
  Vec v = zero();
  for (const auto& [k, c] : table[i][j]) v[k] += c;
  return v;
}

Vec FinDimAlgebra::mul(const Vec& u, const Vec& v) const {
  Vec out = zero();
  for (std::size_t i = 0; i < dim; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (v[j].is_zero()) continue;
      CycElem s = u[i] * v[j];
      for (const auto& [k, c] : table[i][j]) out[k] += s * c;
    }
  }
  return out;
}

Matrix FinDimAlgebra::left_mult(const Vec& u) const {
  Matrix m(dim, dim, order);
  for (std::size_t j = 0; j < dim; ++j) {
    Vec col = mul(u, basis(j));
    for (std::size_t k = 0; k < dim; ++k) m(k, j) = col[k];
  }
  return m;
}

Matrix FinDimAlgebra::right_mult(const Vec& u) const {
  Matrix m(dim, dim, order);
  for (std::size_t j = 0; j < dim; ++j) {
    Vec col = mul(basis(j), u);
    for (std::size_t k = 0; k < dim; ++k) m(k, j) = col[k];
  }
  return m;
}

bool check_unit(const FinDimAlgebra& A) {
  for (std::size_t i = 0; i < A.dim; ++i) {
    if (A.mul_basis(A.unit, i) != A.basis(i)) return false;
    if (A.mul_basis(i, A.unit) != A.basis(i)) return false;
  }
  return true;
}

bool check_associative(const FinDimAlgebra& A, std::size_t samples, unsigned seed) {
  auto triple = [&](std::size_t i, std::size_t j, std::size_t k) {
    return A.mul(A.mul_basis(i, j), A.basis(k)) == A.mul(A.basis(i), A.mul_basis(j, k));
  };
  if (samples == 0) {
    for (std::size_t i = 0; i < A.dim; ++i)
      for (std::size_t j = 0; j < A.dim; ++j)
        for (std::size_t k = 0; k < A.dim; ++k)
          if (!triple(i, j, k)) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, A.dim - 1);
  for (std::size_t s = 0; s < samples; ++s)
    if (!triple(pick(rng), pick(rng), pick(rng))) return false;
  return true;
}

std::vector<Vec> row_basis(const std::vector<Vec>& vs, std::size_t dim, unsigned order) {
  if (vs.empty()) return {};
  Matrix m(vs.size(), dim, order);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = vs[i][j];
  auto piv = rref(m);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < piv.size(); ++i) {
    Vec v(dim);
    for (std::size_t j = 0; j < dim; ++j) v[j] = m(i, j);
    out.push_back(std::move(v));
  }
  return out;
}

bool in_span(const std::vector<Vec>& basis, const Vec& v, unsigned order) {
  std::vector<Vec> all = basis;
  all.push_back(v);
  return row_basis(all, v.size(), order).size() == row_basis(basis, v.size(), order).size();
}

std::vector<Vec> centre_basis(const FinDimAlgebra& A) {
  std::vector<std::size_t> gens = A.generators;
  if (gens.empty())
    for (std::size_t i = 0; i < A.dim; ++i) gens.push_back(i);
  Matrix m(gens.size() * A.dim, A.dim, A.order);
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t i = 0; i < A.dim; ++i) {
      Vec d = A.mul_basis(i, gens[g]);
      for (const auto& [k, c] : A.table[gens[g]][i]) d[k] -= c;
      for (std::size_t k = 0; k < A.dim; ++k) m(g * A.dim + k, i) = d[k];
    }
  return nullspace(m);
}

std::vector<Vec> radical(const FinDimAlgebra& A) {
  // Dickson: rad = {x : Tr(L_{xy}) = 0 for all y} in characteristic 0.
  Vec tr = A.zero();
  for (std::size_t k = 0; k < A.dim; ++k)
    for (std::size_t i = 0; i < A.dim; ++i)
      for (const auto& [m, c] : A.table[k][i])
        if (m == i) tr[k] += c;
  Matrix gram(A.dim, A.dim, A.order);  // gram(j, i) = T(b_i, b_j)
  for (std::size_t i = 0; i < A.dim; ++i)
    for (std::size_t j = 0; j < A.dim; ++j)
      for (const auto& [k, c] : A.table[i][j])
        if (!tr[k].is_zero()) gram(j, i) += c * tr[k];
  return nullspace(gram);
}

std::optional<std::size_t> nilpotency_index(const FinDimAlgebra& A, const std::vector<Vec>& ideal) {
  std::vector<Vec> base = row_basis(ideal, A.dim, A.order);
  if (base.empty()) return 1;
  std::vector<Vec> cur = base;
  for (std::size_t k = 2; k <= A.dim + 1; ++k) {
    std::vector<Vec> prods;
    for (const auto& u : cur)
      for (const auto& v : base) prods.push_back(A.mul(u, v));
    cur = row_basis(prods, A.dim, A.order);
    if (cur.empty()) return k;
  }
  return std::nullopt;
}

bool is_two_sided_ideal(const FinDimAlgebra& A, const std::vector<Vec>& span) {
  std::vector<Vec> base = row_basis(span, A.dim, A.order);
  for (const auto& v : base)
    for (std::size_t i = 0; i < A.dim; ++i) {
      if (!in_span(base, A.mul(A.basis(i), v), A.order)) return false;
      if (!in_span(base, A.mul(v, A.basis(i)), A.order)) return false;
    }
  return true;
}

std::vector<Vec> ideal_closure(const FinDimAlgebra& A, const std::vector<Vec>& gens) {
  std::vector<Vec> cur = row_basis(gens, A.dim, A.order);
  while (true) {
    std::vector<Vec> all = cur;
    for (const auto& v : cur)
      for (std::size_t i = 0; i < A.dim; ++i) {
        all.push_back(A.mul(A.basis(i), v));
        all.push_back(A.mul(v, A.basis(i)));
      }
    std::vector<Vec> next = row_basis(all, A.dim, A.order);
    if (next.size() == cur.size()) return next;
    cur = std::move(next);
  }
}

FinDimAlgebra quotient(const FinDimAlgebra& A, const std::vector<Vec>& ideal) {
  // Eliminate with the unit column last so the unit survives as a basis vector.
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < A.dim; ++i)
    if (i != A.unit) perm.push_back(i);
  perm.push_back(A.unit);
  std::vector<Vec> permuted;
  for (const auto& v : ideal) {
    Vec w(A.dim);
    for (std::size_t j = 0; j < A.dim; ++j) w[j] = v[perm[j]];
    permuted.push_back(std::move(w));
  }
  std::vector<Vec> rows = row_basis(permuted, A.dim, A.order);
  std::vector<bool> pivot(A.dim, false);
  std::vector<std::size_t> pivot_col;
  for (const auto& r : rows) {
    std::size_t c = 0;
    while (r[c].is_zero()) ++c;
    pivot[perm[c]] = true;
    pivot_col.push_back(perm[c]);
  }
  if (pivot[A.unit]) throw std::invalid_argument("quotient by the whole algebra");
  std::vector<std::size_t> keep;
  std::vector<long> pos(A.dim, -1);
  for (std::size_t i = 0; i < A.dim; ++i)
    if (!pivot[i]) {
      pos[i] = static_cast<long>(keep.size());
      keep.push_back(i);
    }
  auto reduce = [&](Vec v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      CycElem f = v[pivot_col[r]];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < A.dim; ++j)
        if (!rows[r][j].is_zero()) v[perm[j]] -= f * rows[r][j];
    }
    return v;
  };
  FinDimAlgebra Q;
  Q.dim = keep.size();
  Q.order = A.order;
  Q.unit = static_cast<std::size_t>(pos[A.unit]);
  for (auto k : keep) Q.names.push_back(k < A.names.size() ? A.names[k] : "b" + std::to_string(k));
  Q.table.assign(Q.dim, std::vector<SparseVec>(Q.dim));
  for (std::size_t a = 0; a < Q.dim; ++a)
    for (std::size_t b = 0; b < Q.dim; ++b) {
      Vec v = reduce(A.mul_basis(keep[a], keep[b]));
      for (std::size_t k = 0; k < A.dim; ++k)
        if (!v[k].is_zero()) Q.table[a][b].emplace_back(static_cast<std::size_t>(pos[k]), v[k]);
    }
  for (auto g : A.generators)
    if (pos[g] >= 0) Q.generators.push_back(static_cast<std::size_t>(pos[g]));
  if (Q.generators.size() != A.generators.size()) Q.generators.clear();
  return Q;
}

bool is_perfect_square(std::size_t n) {
  std::size_t r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  return r * r == n;
}

bool is_central_simple(const FinDimAlgebra& A) {
  return radical(A).empty() && centre_basis(A).size() == 1 && is_perfect_square(A.dim);
}

FibreClass classify(const FinDimAlgebra& A) {
  FibreClass fc{};
  fc.dim = A.dim;
  auto rad = radical(A);
  fc.radical_dim = rad.size();
  fc.semisimple_dim = A.dim - rad.size();
  fc.centre_dim = centre_basis(A).size();
  if (rad.empty()) {
    fc.quotient_centre_dim = fc.centre_dim;
  } else {
    fc.quotient_centre_dim = centre_basis(quotient(A, rad)).size();
  }
  bool csa = rad.empty() && fc.centre_dim == 1 && is_perfect_square(A.dim);
  fc.kind = csa ? FibreKind::Azumaya : FibreKind::Ramified;
  return fc;
}

bool check_isomorphism(const FinDimAlgebra& B, const FinDimAlgebra& A, const std::vector<Vec>& images) {
  if (B.dim != A.dim || images.size() != B.dim) return false;
  if (row_basis(images, A.dim, A.order).size() != A.dim) return false;
  if (images[B.unit] != A.basis(A.unit)) return false;
  for (std::size_t i = 0; i < B.dim; ++i)
    for (std::size_t j = 0; j < B.dim; ++j) {
      Vec lhs = A.zero();
      for (const auto& [k, c] : B.table[i][j])
        for (std::size_t m = 0; m < A.dim; ++m) lhs[m] += c * images[k][m];
      if (lhs != A.mul(images[i], images[j])) return false;
    }
  return true;
}

std::string to_string(FibreKind k) { return k == FibreKind::Azumaya ? "Azumaya" : "Ramified"; }

}  // namespace kwj
