// Finite-dimensional representations of the Jackson algebras: one-dimensional points,
// torsion and torsion-free families, central characters and simplicity.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "kwj/centre.hpp"
#include "kwj/ncalg.hpp"

namespace kwj {

struct RepCheck {
  bool ok = false;
  std::vector<Matrix> defects;  // one per relation, in rule order
};

RepCheck verify_rep(const Presentation& p, const Representation& rep);

// The 1x1 representation e0 -> a0, e1 -> b, e2 -> c.
Representation point_rep(const std::array<CycElem, 3>& pt);

// Closed-form description of the one-dimensional locus of jackson(n, r, x).
bool one_dim_points(unsigned n, int r, const CycElem& x, const std::array<CycElem, 3>& pt);

// psi^t_i(a) = x(a [i]_{zeta^r} zeta^{r(i-1)} + 1 - zeta^{2ri})
CycElem psi_torsion(unsigned n, int r, const CycElem& x, const CycElem& a, unsigned i);
// psi^tf_i(a, b) = zeta^{2r(i-1)} b + x(a zeta^{r(i-1)} (1 - zeta^r)^{-1} + 1)
CycElem psi_torsion_free(unsigned n, int r, const CycElem& x, const CycElem& a, const CycElem& b, unsigned i);

struct TorsionMinimality {
  // Least d' with psi^t_{d'}(a) = 0, i.e. a [d']_{zeta^r} zeta^{r(d'-1)} + 1 - zeta^{2rd'} = 0.
  std::optional<unsigned> d;
  bool vacuous = false;       // x = 0: the condition holds for every d
  bool free_at_d = false;     // the condition holds at d for every a
};

TorsionMinimality torsion_minimality(unsigned n, int r, const CycElem& x, const CycElem& a);

// The value of a forced by the condition at d, none when every a satisfies it.
std::optional<CycElem> torsion_forced_a(unsigned n, int r, unsigned d);

// Basis v_i = e1^i, i < d. Throws std::invalid_argument on an inconsistent or non-minimal a.
Representation torsion_module(unsigned n, int r, unsigned d, const CycElem& x, std::optional<CycElem> a = {});

enum class TorsionFreeVariant { BZero, BNonzero };

// Orbit length of (e0 - a) under e0 -> zeta^{-r} e0.
unsigned tau_orbit(unsigned n, int r, const CycElem& a);
// d for b = 0, lcm(d, l) otherwise.
unsigned torsion_free_size(unsigned n, int r, const CycElem& a, const CycElem& b);
Representation torsion_free_module(unsigned n, int r, const CycElem& x, const CycElem& a, const CycElem& b,
                                   const CycElem& c);
Representation torsion_free_module(unsigned n, int r, const CycElem& x, const CycElem& a, const CycElem& b,
                                   const CycElem& c, TorsionFreeVariant variant);

struct CentralCharacter {
  std::vector<CycElem> values;  // u0, u1, u2, and u3 = (e1 e2)^t when x = 0
};

// Throws std::runtime_error when some u_i does not act by a scalar.
CentralCharacter central_character(const Presentation& p, const Representation& rep, const CentreParams& cp);

enum class Simplicity { AbsolutelySimple, SimpleByEigenanalysis, NotSimple, Undetermined };
std::string to_string(Simplicity s);

// Dimension of the span of all products of the generator matrices.
std::size_t burnside_span(const Representation& rep);
Simplicity simplicity(const Representation& rep);

Representation direct_sum(const Representation& a, const Representation& b);
// g rep g^{-1} for an invertible g.
Representation conjugate(const Representation& rep, const Matrix& g);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, unsigned order);
nlohmann::json rep_to_json(const Representation& rep);
Representation rep_from_json(const nlohmann::json& j, unsigned order);

}  // namespace kwj
