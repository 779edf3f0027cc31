#include "kwj/centre.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace kwj {

CentreParams centre_params(unsigned n, int r) {
  if (n < 1 || r < 0 || static_cast<unsigned>(r) >= n) throw std::invalid_argument("level r must satisfy 0 <= r < n");
  CentreParams p;
  p.n = n;
  p.r = r;
  if (r == 0) return p;
  unsigned ur = static_cast<unsigned>(r);
  while ((p.l * ur) % n) ++p.l;
  while ((2 * p.t * ur) % n) ++p.t;
  if ((p.t * ur) % n == 0) p.a_exp = p.t * ur / n;
  return p;
}

CentreReport verify_centre(const Presentation& jack, const CentreParams& params) {
  CentreReport rep;
  rep.params = params;
  rep.powers_central = true;
  for (int i = 0; i < 3; ++i) {
    bool c = is_central(power(jack.gen(i), params.l, jack), jack);
    rep.checks.push_back({"e" + std::to_string(i) + "^" + std::to_string(params.l), c});
    rep.powers_central = rep.powers_central && c;
  }
  NcPoly w = jack.gen(1) * jack.gen(2);
  rep.w_central = is_central(power(w, params.t, jack), jack);
  rep.checks.push_back({"w^" + std::to_string(params.t), rep.w_central});
  rep.ok = rep.powers_central && (rep.w_central == jack.x.is_zero());
  return rep;
}

bool central_on_random_words(const NcPoly& z, const Presentation& p, std::size_t count, std::size_t max_degree,
                             unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> gen(0, p.generators() - 1);
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  for (std::size_t s = 0; s < count; ++s) {
    Word w;
    for (std::size_t k = deg(rng); k > 0; --k) w.push_back(gen(rng));
    NcPoly m(w, CycElem(p.order, 1L));
    if (!commutator(z, m, p).is_zero()) return false;
  }
  return true;
}

namespace {

SigmaImage apply_sigma(const SigmaImage& v, const CycElem& zr, const CycElem& z2r, const CycElem& a,
                       const CycElem& b) {
  // sigma(w) = z2r w - z2r a e0 - z2r b, sigma(e0) = zr e0, sigma(1) = 1
  return {v[0] * z2r, v[1] * zr - v[0] * z2r * a, v[2] - v[0] * z2r * b};
}

}  // namespace

BellSmithReport bell_smith_check(unsigned n, int r, const CycElem& x) {
  Presentation J = jackson(n, r, x);
  unsigned o = J.order;
  CycElem one(o, 1L), zr = zeta(n, r).embed(o), z2r = zeta(n, 2L * r).embed(o);
  CycElem zm2r = z2r.inv();
  BellSmithReport rep;
  rep.a = -(x * zm2r);
  rep.b = x * (one - zm2r);
  const CycElem& a = rep.a;
  const CycElem& b = rep.b;
  NcPoly e0 = J.gen(0), e1 = J.gen(1), e2 = J.gen(2);
  NcPoly w = e1 * e2;
  NcPoly sw = (w - e0 * a - J.one() * b) * z2r;
  NcPoly se0 = e0 * zr;
  rep.sigma_w_is_e2e1 = nf(sw - e2 * e1, J).is_zero();

  // monomials e0^i w^j with i + j <= 2 and their sigma images
  rep.twisted_e1 = rep.twisted_e2 = true;
  for (unsigned i = 0; i <= 2; ++i)
    for (unsigned j = 0; i + j <= 2; ++j) {
      NcPoly u = J.one(), su = J.one();
      for (unsigned k = 0; k < i; ++k) {
        u = u * e0;
        su = su * se0;
      }
      for (unsigned k = 0; k < j; ++k) {
        u = u * w;
        su = su * sw;
      }
      rep.twisted_e1 = rep.twisted_e1 && nf(u * e1 - e1 * su, J).is_zero();
      rep.twisted_e2 = rep.twisted_e2 && nf(e2 * u - su * e2, J).is_zero();
    }

  CentreParams cp = centre_params(n, r);
  SigmaImage wv{one, CycElem(o), CycElem(o)};
  SigmaImage cur = wv;
  CycElem zk_e0 = one;  // sigma^k(e0) = zr^k e0
  const unsigned bound = 4 * n + 4;
  for (unsigned k = 1; k <= bound; ++k) {
    cur = apply_sigma(cur, zr, z2r, a, b);
    zk_e0 *= zr;
    if (cur == wv && zk_e0.is_one()) {
      rep.order = k;
      break;
    }
  }
  rep.order_is_l = rep.order && *rep.order == cp.l;
  unsigned kmax = rep.order ? *rep.order : cp.l;
  rep.closed_form = true;
  cur = wv;
  for (unsigned k = 1; k <= kmax; ++k) {
    cur = apply_sigma(cur, zr, z2r, a, b);
    SigmaImage expect{zeta(n, 2L * k * r).embed(o), -(a * zeta(n, long(k + 1) * r) * q_int(k, zr)),
                      -(z2r * q_int(k, z2r) * b)};
    if (cur != expect) rep.closed_form = false;
  }
  return rep;
}

PresentationIdentityReport centre_presentation_check(unsigned n, int r) {
  PresentationIdentityReport rep;
  rep.params = centre_params(n, r);
  const auto& cp = rep.params;
  rep.t_equals_l = cp.t == cp.l;
  Presentation J = jackson(n, r, CycElem(n));
  NcPoly w = J.gen(1) * J.gen(2);
  rep.k_max = std::max(cp.t * static_cast<unsigned>(r), 2u);
  rep.w_powers = true;
  NcPoly wk = J.one();
  for (unsigned k = 1; k <= rep.k_max; ++k) {
    wk = mul(wk, w, J);
    NcPoly rhs = mul(power(J.gen(1), k, J), power(J.gen(2), k, J), J) * zeta(n, long(k) * (k - 1) * r);
    if (wk != nf(rhs, J)) rep.w_powers = false;
  }
  if (cp.a_exp) {
    NcPoly u3 = power(w, cp.t, J);
    NcPoly lhs = power(u3, static_cast<unsigned>(r), J);
    NcPoly u1a = power(power(J.gen(1), cp.l, J), *cp.a_exp, J);
    NcPoly u2a = power(power(J.gen(2), cp.l, J), *cp.a_exp, J);
    rep.u3_relation = lhs == mul(u1a, u2a, J);
  }
  return rep;
}

bool NormalElement::normal() const {
  for (const auto& d : defects)
    if (!d.is_zero()) return false;
  return true;
}

std::vector<NcPoly> normality_defects(const NcPoly& z, const Presentation& p, const std::array<CycElem, 3>& gamma) {
  std::vector<NcPoly> out;
  for (int g = 0; g < 3; ++g) out.push_back(nf(z * p.gen(g) - (p.gen(g) * gamma[g]) * z, p));
  return out;
}

NormalElement omega(unsigned n, int r, const CycElem& x, const std::array<CycElem, 3>& a, long variant) {
  CycElem zr = zeta(n, r);
  if (zr.is_one()) throw std::invalid_argument("omega needs zeta^r != 1");
  Presentation J = jackson(n, r, x);
  unsigned o = J.order;
  CycElem one(o, 1L);
  NormalElement ne;
  ne.coeffs = a;
  ne.variant = variant;
  ne.gamma_diag = {one, zeta(n, 2L * r).embed(o), zeta(n, -2L * r).embed(o)};
  NcPoly e0 = J.gen(0), e1 = J.gen(1), e2 = J.gen(2);
  CycElem lin = x * (a[0] - a[1] * zeta(n, -variant)) / (one - zr);
  ne.omega = (e2 * e1) * a[0] - (e1 * e2) * a[1] + (e0 * e0) * a[2] - e0 * lin - J.one() * (x * (a[0] - a[1]));
  ne.omega = nf(ne.omega, J);
  ne.defects = normality_defects(ne.omega, J, ne.gamma_diag);
  return ne;
}

VariantResolution resolve_omega(unsigned n, int r, const CycElem& x, const std::array<CycElem, 3>& a) {
  VariantResolution res;
  for (long e : {1L, long(r), 2L * r})
    if (std::find(res.tried.begin(), res.tried.end(), e) == res.tried.end()) res.tried.push_back(e);
  bool found = false;
  for (long e : res.tried) {
    NormalElement ne = omega(n, r, x, a, e);
    if (ne.normal()) {
      res.zero_defect.push_back(e);
      if (!found) res.resolved = ne;
      found = true;
    } else if (!found) {
      res.resolved = ne;
    }
  }
  return res;
}

std::string CommPoly::str() const {
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    if (c.is_zero()) continue;
    std::string mono;
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "u" + std::to_string(i) + (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    }
    std::string coef = "(" + c.str() + ")";
    if (!out.empty()) out += " + ";
    out += mono.empty() ? coef : (c.is_one() ? mono : coef + "*" + mono);
  }
  return out.empty() ? "0" : out;
}

CentralImage omega_central_image(unsigned n, int r, const CycElem& x, const std::array<CycElem, 3>& a,
                                 long variant) {
  CycElem zr = zeta(n, r);
  if (zr.is_one()) throw std::invalid_argument("omega needs zeta^r != 1");
  unsigned o = lcm_u(n, x.order());
  CycElem one(o, 1L);
  CentralImage img;
  auto put = [&](std::array<unsigned, 3> e, const CycElem& c) {
    if (!c.is_zero()) img.quadric.terms[e] = c;
  };
  put({0, 1, 1}, a[0] - a[1]);
  put({2, 0, 0}, a[2]);
  put({1, 0, 0}, -(x * (a[0] - a[1] * zeta(n, -variant)) / (one - zr)));
  put({0, 0, 0}, -(x * (a[0] - a[1])));
  Presentation J = jackson(n, r, x);
  CentreParams cp = centre_params(n, r);
  img.generators_central = true;
  for (int i = 0; i < 3; ++i)
    img.generators_central = img.generators_central && is_central(power(J.gen(i), cp.l, J), J);
  return img;
}

}  // namespace kwj
