// Dense matrices over a cyclotomic field and exact elimination.
#pragma once

#include <cstddef>
#include <vector>

#include "kwj/cyclotomic.hpp"

namespace kwj {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, unsigned order);

  static Matrix identity(std::size_t n, unsigned order);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  unsigned order() const { return order_; }

  CycElem& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const CycElem& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const;
  Matrix embed(unsigned order) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const CycElem& s) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix inverse() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  unsigned order_ = 1;
  std::vector<CycElem> a_;
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
// Basis of {v : m v = 0}, one vector per free column.
std::vector<std::vector<CycElem>> nullspace(Matrix m);

}  // namespace kwj
