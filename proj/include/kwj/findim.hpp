// Finite-dimensional associative algebras given by structure constants.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kwj/cyclotomic.hpp"
#include "kwj/matrix.hpp"

namespace kwj {

using Vec = std::vector<CycElem>;
using SparseVec = std::vector<std::pair<std::size_t, CycElem>>;

struct FinDimAlgebra {
  std::size_t dim = 0;
  unsigned order = 1;
  std::vector<std::string> names;
  std::vector<std::vector<SparseVec>> table;  // b_i b_j
  std::size_t unit = 0;                       // index of the unit basis vector
  std::vector<std::size_t> generators;        // basis indices generating the algebra; empty = all

  Vec zero() const { return Vec(dim, CycElem(order)); }
  Vec basis(std::size_t i) const;
  Vec mul(const Vec& u, const Vec& v) const;
  Vec mul_basis(std::size_t i, std::size_t j) const;
  Matrix left_mult(const Vec& u) const;
  Matrix right_mult(const Vec& u) const;
};

bool check_unit(const FinDimAlgebra& A);
// Full associativity check on all basis triples when samples == 0, else `samples` random triples.
bool check_associative(const FinDimAlgebra& A, std::size_t samples = 0, unsigned seed = 1);

std::vector<Vec> centre_basis(const FinDimAlgebra& A);
std::vector<Vec> radical(const FinDimAlgebra& A);
// Smallest k with rad^k = 0, or nullopt if the span is not nilpotent within dim steps.
std::optional<std::size_t> nilpotency_index(const FinDimAlgebra& A, const std::vector<Vec>& ideal);
bool is_two_sided_ideal(const FinDimAlgebra& A, const std::vector<Vec>& span);
// Quotient by an ideal, on a complement basis of coordinate vectors.
FinDimAlgebra quotient(const FinDimAlgebra& A, const std::vector<Vec>& ideal);
// Two-sided ideal generated by a set of elements.
std::vector<Vec> ideal_closure(const FinDimAlgebra& A, const std::vector<Vec>& gens);
bool is_central_simple(const FinDimAlgebra& A);
bool is_perfect_square(std::size_t n);

enum class FibreKind { Azumaya, Ramified };

struct FibreClass {
  FibreKind kind;
  std::size_t dim;
  std::size_t radical_dim;
  std::size_t semisimple_dim;
  std::size_t centre_dim;
  std::size_t quotient_centre_dim;
};

FibreClass classify(const FinDimAlgebra& A);
std::string to_string(FibreKind k);

// images[i] is the image in A of basis vector i of B; true iff this is an algebra isomorphism B -> A.
bool check_isomorphism(const FinDimAlgebra& B, const FinDimAlgebra& A, const std::vector<Vec>& images);

// Span utilities shared with other modules.
std::vector<Vec> row_basis(const std::vector<Vec>& vs, std::size_t dim, unsigned order);
bool in_span(const std::vector<Vec>& basis, const Vec& v, unsigned order);

}  // namespace kwj
