// Named presentations, the Jackson change of basis, symbol algebras and fibres.
#pragma once

#include <string>
#include <vector>

#include "kwj/cyclotomic.hpp"
#include "kwj/findim.hpp"
#include "kwj/ncalg.hpp"

namespace kwj {

// e0 e1 = q e1 e0
Presentation quantum_plane(const CycElem& q);
// e0 e1 = q e1 e0, e0 e2 = q^2 e2 e0, e1 e2 = q e2 e1
Presentation quantum_a3(const CycElem& q);
Presentation commutative_poly(int generators, unsigned order);

Presentation jackson(unsigned n, int r, const CycElem& x);
// Generators e0, e1, e_{n-1} relabelled 0, 1, 2.
Presentation jackson_prime(unsigned n, int r, const CycElem& x);

struct IsoReport {
  bool ok = false;
  std::vector<NcPoly> images;  // normal forms of the substituted relations
};
// e0 -> (1 - zeta^{2r})^{-1} e0 + 1 applied to the primed relations, reduced in jackson(n, r, x).
IsoReport jackson_iso_check(unsigned n, int r, const CycElem& x);

Presentation kummer_witt(unsigned n, int r, const CycElem& x);

enum class ReductionBranch { ZetaOne, XZero, Generic };
// Residue-field shapes of the Kummer-Witt relations.
Presentation kummer_witt_reduction(unsigned n, int r, const CycElem& x, ReductionBranch b);

// v w - q w v - 1 with v = e0, w = e1.
Presentation quantum_weyl(const CycElem& q);

// Family names: jackson, jackson_prime, kummerwitt, quantum_plane, quantum_a3, quantum_weyl
// (q = zeta_n^r for the quantum families). Throws std::invalid_argument on an unknown name.
Presentation named_presentation(const std::string& family, unsigned n, int r, const CycElem& x);
// jackson(n, r, x) / (e0) on the generators e1, e2 (relabelled 0, 1).
Presentation jackson_e0_quotient(unsigned n, int r, const CycElem& x);

struct MapReport {
  bool forward = false;   // relations of the source vanish in the target
  bool backward = false;  // and conversely under the inverse map
  bool ok() const { return forward && backward; }
};
// A_1(zeta^{2r}) versus jackson/(e0) via v -> (x(1 - zeta^{2r}))^{-1} e2, w -> e1.
MapReport weyl_quotient_check(unsigned n, int r, const CycElem& x);
// Renaming (e0, e1, e2) -> (e2, e0, e1) between quantum_a3(zeta^r) and jackson(n, r, 0).
MapReport jackson_a3_check(unsigned n, int r);

// x y = zeta_n^k y x, x^n = a, y^n = b on the basis x^i y^j (index i n + j).
FinDimAlgebra symbol_algebra(unsigned n, long k, const CycElem& a, const CycElem& b);

struct RebaseReport {
  bool ok = false;
  long m = 1;          // inverse of k modulo n
  CycElem b_rebased;   // parameter b^m of the target (a, b^m)_zeta
};
// (a, b)_{zeta^k} is matched with (a, b^m)_zeta through X -> x, Y -> y^m.
RebaseReport symbol_rebase_check(unsigned n, long k, const CycElem& a, const CycElem& b);

// Multi-exponents below N, e0 most significant.
std::size_t fibre_index(const std::vector<unsigned>& exps, unsigned N);
bool powers_central(const Presentation& p, unsigned N);
// Image of a polynomial in the fibre with e_i^N = values[i].
Vec fibre_vector(const NcPoly& f, const Presentation& p, const std::vector<CycElem>& values, unsigned N);
// p / (e_i^N - values[i]); N = 0 means the ambient order of p.
FinDimAlgebra fibre(const Presentation& p, const std::vector<CycElem>& values, unsigned N = 0);

FibreClass classify_fibre(const Presentation& p, const std::vector<CycElem>& character, unsigned N = 0);

struct HyperbolaSample {
  CycElem b, c;
  bool on_curve = false;  // bc = (1 - zeta^2)^{-l}
  FibreClass cls;
};

struct HyperbolaReport {
  unsigned n = 0;
  unsigned l = 0;  // least l with 2l = 0 mod n
  CycElem target;  // (1 - zeta^2)^{-l}
  std::vector<HyperbolaSample> samples;
  bool ok = false;  // Ramified exactly on the curve
};

// Central quotients A_1(zeta^2)/(v^l - b, w^l - c) on and off bc = (1 - zeta^2)^{-l}.
HyperbolaReport weyl_hyperbola_check(unsigned n);

struct DownUpReport {
  bool applicable = true;  // false when zeta^{2r} = 1
  bool ok = false;
  std::string assignment;  // "d=e1,u=e2" or "d=e2,u=e1"
  std::vector<NcPoly> defects;  // normal forms for the last assignment tried
};
// Down-up relations with their scalar a read as x.
DownUpReport verify_downup(unsigned n, int r, const CycElem& x);

}  // namespace kwj
