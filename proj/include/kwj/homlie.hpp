// Hom-Lie algebras from twisted derivations.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "kwj/cyclotomic.hpp"
#include "kwj/ncalg.hpp"

namespace kwj {

using Vec = std::vector<CycElem>;

// y_i y_j = sum_k a[i][j][k] y_k
struct CommAlgebra {
  std::size_t dim = 0;
  unsigned order = 1;
  std::vector<std::string> names;
  std::vector<std::vector<Vec>> a;

  Vec mul(const Vec& u, const Vec& v) const;
  bool is_commutative() const;
  bool is_associative() const;
};

// B[t]/(t^n - x) on the basis 1, t, ..., t^{n-1}.
CommAlgebra kummer_extension(unsigned n, const CycElem& x);
// R[t]/(t^n).
CommAlgebra truncated_line(unsigned n, unsigned order);

struct TwistData {
  Vec sigma_diag;
  CycElem alpha;
  CycElem q_sigma;
};

struct TwistedAlgebra {
  CommAlgebra algebra;
  TwistData twist;
};

// Random commutative algebra of dimension <= max_dim with a diagonal algebra automorphism:
// a truncated monomial algebra in one or two variables, or a Kummer extension t^m = x.
TwistedAlgebra random_twisted_algebra(std::mt19937_64& rng, std::size_t max_dim = 6);

struct HomLieAlgebra {
  std::size_t dim = 0;
  unsigned order = 1;
  std::vector<std::vector<Vec>> c;  // <e_i, e_j> = sum_k c[i][j][k] e_k
  Vec twist_diag;
  CycElem q_sigma;

  Vec bracket(const Vec& u, const Vec& v) const;
  Vec basis(std::size_t i) const;
};

HomLieAlgebra twisted_bracket(const CommAlgebra& A, const TwistData& tw);
HomLieAlgebra infinitesimal_homlie(unsigned n, const CycElem& q, const CycElem& a);
HomLieAlgebra kummer_witt_homlie(unsigned n, int r, const CycElem& x);

struct JacobiDefect {
  std::size_t i, j, k;
  Vec defect;
};

// Cyclic sum <sigma(a),<b,c>> + q_sigma <a,<b,c>> over basis triples; nonzero entries only.
std::vector<JacobiDefect> check_hom_jacobi(const HomLieAlgebra& h);
Vec hom_jacobi(const HomLieAlgebra& h, std::size_t i, std::size_t j, std::size_t k);
// Plain Jacobi sum: identity twist, q_sigma = 1, halved.
Vec jacobi_probe(const HomLieAlgebra& h, std::size_t i, std::size_t j, std::size_t k);
// Antisymmetry and hL1 on basis pairs.
bool check_antisymmetry(const HomLieAlgebra& h);

Presentation enveloping(const HomLieAlgebra& h, const std::string& family = "enveloping");

nlohmann::json homlie_to_json(const HomLieAlgebra& h);

}  // namespace kwj
