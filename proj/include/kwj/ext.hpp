// Ext^1 between finite-dimensional representations as derivations modulo inner derivations.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kwj/modules.hpp"

namespace kwj {

// D_g in Hom(M, N) for every generator g; each matrix is dim N x dim M.
using Derivation = std::vector<Matrix>;

struct ExtResult {
  std::size_t dim = 0;
  std::size_t solution_dim = 0;  // derivations satisfying every relation
  std::size_t inner_dim = 0;
  std::vector<Derivation> basis;  // lifts of a basis of the quotient
};

ExtResult ext1(const Presentation& p, const Representation& M, const Representation& N);

// dim of {X : X rho_M(g) = rho_N(g) X for all g}
std::size_t hom_dim(const Representation& M, const Representation& N);

// ad_theta(g) = rho_N(g) theta - theta rho_M(g)
Derivation inner_derivation(const Representation& M, const Representation& N, const Matrix& theta);
// Block representation [[rho_N, D], [0, rho_M]].
Representation extension(const Representation& M, const Representation& N, const Derivation& D);

struct OracleReport {
  bool basis_extensions = false;  // every basis derivation gives a verified extension
  bool basis_independent = false; // basis stays independent modulo inner derivations
  bool inner_split = false;       // inner extensions are conjugate to the direct sum
  bool ok() const { return basis_extensions && basis_independent && inner_split; }
};

OracleReport ext1_oracle(const Presentation& p, const Representation& M, const Representation& N,
                         const ExtResult& result);

struct SweepRow {
  std::string family;   // "x!=0, q^2!=1" and similar
  std::string label;    // case row
  std::array<CycElem, 3> m, n;
  std::size_t claimed = 0;  // dimension stated for this case row
  std::size_t dim = 0;
  std::size_t inner_dim = 0;
  bool oracle = false;
  bool matches() const { return dim == claimed; }
};

struct SweepTable {
  unsigned n = 0;
  int r = 0;
  CycElem x;
  std::vector<SweepRow> rows;
  bool all_match() const;
};

// Deterministic grid of one-dimensional pairs covering every case row of the one-dimensional Ext tables.
SweepTable ext1_sweep_one_dim(unsigned n, int r, const CycElem& x);

struct TableReport {
  std::vector<std::vector<std::size_t>> dims;    // Ext^1(M_i, M_j)
  std::vector<std::vector<CycElem>> characters;  // central character of M_i
  std::vector<std::vector<std::size_t>> homs;    // dim Hom(M_i, M_j)
  bool oracle = false;
  std::size_t control_dim = 0;                   // Ext^1(M_0, control)
  std::vector<CycElem> control_character;
};

// n = 3, r = 1, x = 1: M_i = M(e0, c = z, b = 2 z^i) and a control module over another central character.
TableReport ext1_family_table();

struct MullerReport {
  std::size_t modules = 0;
  std::size_t unequal_pairs = 0;
  std::size_t unequal_nonzero = 0;  // violations of the vanishing direction
  std::size_t equal_pairs = 0;
  std::size_t equal_nonzero = 0;    // equal characters with Ext^1 != 0
  bool oracle = false;
  bool ok() const { return unequal_pairs >= 30 && unequal_nonzero == 0 && oracle; }
};

// Ext^1 over pairs of family modules of jackson(3, 1, 1).
MullerReport muller_sampling();

nlohmann::json ext_to_json(const ExtResult& r);
nlohmann::json sweep_to_json(const SweepTable& t);

}  // namespace kwj
