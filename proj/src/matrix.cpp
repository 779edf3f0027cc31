#include "kwj/matrix.hpp"

#include <stdexcept>

namespace kwj {

Matrix::Matrix(std::size_t rows, std::size_t cols, unsigned order)
    : rows_(rows), cols_(cols), order_(order), a_(rows * cols, CycElem(order)) {}

Matrix Matrix::identity(std::size_t n, unsigned order) {
  Matrix m(n, n, order);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycElem(order, 1L);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::embed(unsigned order) const {
  Matrix m = *this;
  m.order_ = order;
  for (auto& x : m.a_) x = x.embed(order);
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
  Matrix m = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] += o.a_[k];
  m.order_ = m.a_.empty() ? lcm_u(order_, o.order_) : m.a_[0].order();
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
  Matrix m = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] -= o.a_[k];
  m.order_ = m.a_.empty() ? lcm_u(order_, o.order_) : m.a_[0].order();
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix size mismatch");
  unsigned ord = lcm_u(order_, o.order_);
  Matrix m(rows_, o.cols_, ord);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const CycElem& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const CycElem& y = o(k, j);
        if (!y.is_zero()) m(i, j) += x * y;
      }
    }
  return m;
}

Matrix Matrix::operator*(const CycElem& s) const {
  Matrix m = *this;
  for (auto& x : m.a_) x *= s;
  m.order_ = lcm_u(order_, s.order());
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (a_[k] != o.a_[k]) return false;
  return true;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  std::size_t n = rows_;
  Matrix aug(n, 2 * n, order_);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = CycElem(order_, 1L);
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw DivisionByZero();
  Matrix inv(n, n, order_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    CycElem inv = m(r, c).inv();
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      CycElem f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::vector<std::vector<CycElem>> nullspace(Matrix m) {
  auto piv = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<CycElem>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<CycElem> v(m.cols(), CycElem(m.order()));
    v[f] = CycElem(m.order(), 1L);
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -m(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace kwj
