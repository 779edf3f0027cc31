// Centre generators of the Jackson algebras, the Bell-Smith automorphism and normal elements.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kwj/algebras.hpp"

namespace kwj {

struct CentreParams {
  unsigned n = 1;
  int r = 0;
  unsigned l = 1;                 // least l >= 1 with l r = 0 mod n
  unsigned t = 1;                 // least t >= 1 with 2 t r = 0 mod n
  std::optional<unsigned> a_exp;  // t r / n when that is a positive integer
};

CentreParams centre_params(unsigned n, int r);

struct GeneratorCheck {
  std::string name;
  bool central = false;
};

struct CentreReport {
  CentreParams params;
  std::vector<GeneratorCheck> checks;  // e0^l, e1^l, e2^l, then w^t
  bool powers_central = false;
  bool w_central = false;
  bool ok = false;  // powers central, and w^t central exactly when x = 0
};

CentreReport verify_centre(const Presentation& jack, const CentreParams& params);

// Commutes with `count` random words of degree <= max_degree.
bool central_on_random_words(const NcPoly& z, const Presentation& p, std::size_t count, std::size_t max_degree,
                             unsigned seed);

// sigma on span{w, e0, 1}: coefficients (w, e0, 1).
using SigmaImage = std::array<CycElem, 3>;

struct BellSmithReport {
  CycElem a, b;
  bool sigma_w_is_e2e1 = false;  // zeta^{2r}(w - a e0 - b) = e2 e1 in the algebra
  bool twisted_e1 = false;       // u e1 = e1 sigma(u) on a monomial basis of W up to degree 2
  bool twisted_e2 = false;       // e2 u = sigma(u) e2 on the same elements
  bool closed_form = false;      // closed form of sigma^k(w) for 1 <= k <= order
  std::optional<unsigned> order; // ord(sigma), none when larger than the search bound
  bool order_is_l = false;
  bool ok() const { return sigma_w_is_e2e1 && twisted_e1 && twisted_e2 && closed_form && order_is_l; }
};

BellSmithReport bell_smith_check(unsigned n, int r, const CycElem& x);

struct PresentationIdentityReport {
  CentreParams params;
  unsigned k_max = 0;
  bool w_powers = false;               // w^k = zeta^{k(k-1)r} e1^k e2^k for 1 <= k <= k_max
  std::optional<bool> u3_relation;     // u3^r = u1^a u2^a; none when a is undefined
  bool t_equals_l = false;
};

PresentationIdentityReport centre_presentation_check(unsigned n, int r);

struct NormalElement {
  std::array<CycElem, 3> coeffs;
  NcPoly omega;
  std::array<CycElem, 3> gamma_diag;
  long variant = 1;             // exponent e in zeta^{-e}
  std::vector<NcPoly> defects;  // nf(omega g - gamma(g) omega) per generator
  bool normal() const;
};

NormalElement omega(unsigned n, int r, const CycElem& x, const std::array<CycElem, 3>& a, long variant);
std::vector<NcPoly> normality_defects(const NcPoly& z, const Presentation& p, const std::array<CycElem, 3>& gamma);

struct VariantResolution {
  std::vector<long> tried;
  std::vector<long> zero_defect;  // variants that are normal
  NormalElement resolved;         // first zero-defect variant, else the last tried
  bool ok() const { return !zero_defect.empty(); }
};
// Tries the exponents 1, r and 2r.
VariantResolution resolve_omega(unsigned n, int r, const CycElem& x, const std::array<CycElem, 3>& a);

// Polynomial in commuting u0, u1, u2, keyed by exponent triples.
struct CommPoly {
  std::map<std::array<unsigned, 3>, CycElem> terms;
  std::string str() const;
};

struct CentralImage {
  CommPoly quadric;
  bool generators_central = false;  // each u_i = e_i^l central
};

CentralImage omega_central_image(unsigned n, int r, const CycElem& x, const std::array<CycElem, 3>& a,
                                 long variant = 1);

}  // namespace kwj
