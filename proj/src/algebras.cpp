#include "kwj/algebras.hpp"

#include <numeric>
#include <stdexcept>

namespace kwj {

namespace {

std::vector<std::string> gen_names(int g) {
  std::vector<std::string> names;
  for (int i = 0; i < g; ++i) names.push_back("e" + std::to_string(i));
  return names;
}

NcPoly mono(Word w, const CycElem& c) { return NcPoly(std::move(w), c); }

void check_level(unsigned n, int r) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  if (r < 0 || static_cast<unsigned>(r) >= n) throw std::invalid_argument("level r must satisfy 0 <= r < n");
}

Presentation build(const std::string& family, unsigned order, int r, const CycElem& x, int g, std::vector<Rule> rules) {
  Presentation p(family, order, r, x.embed(order), RewriteSystem(gen_names(g), std::move(rules)));
  p.pbw = diamond_check(p).empty();
  return p;
}

unsigned ambient(unsigned n, const CycElem& x) { return lcm_u(n, x.order()); }

}  // namespace

Presentation quantum_plane(const CycElem& q) {
  unsigned o = q.order();
  if (q.is_zero()) throw std::invalid_argument("q must be nonzero");
  return build("quantumplane", o, 0, CycElem(o), 2, {{1, 0, mono({0, 1}, q.inv())}});
}

Presentation quantum_a3(const CycElem& q) {
  unsigned o = q.order();
  if (q.is_zero()) throw std::invalid_argument("q must be nonzero");
  CycElem qi = q.inv();
  return build("quantuma3", o, 0, CycElem(o), 3,
               {{1, 0, mono({0, 1}, qi)}, {2, 0, mono({0, 2}, qi * qi)}, {2, 1, mono({1, 2}, qi)}});
}

Presentation commutative_poly(int generators, unsigned order) {
  std::vector<Rule> rules;
  for (int j = 0; j < generators; ++j)
    for (int i = 0; i < j; ++i) rules.push_back({j, i, mono({i, j}, CycElem(order, 1L))});
  return build("commutative", order, 0, CycElem(order), generators, std::move(rules));
}

Presentation jackson(unsigned n, int r, const CycElem& x) {
  if (n < 2) throw std::invalid_argument("jackson needs n >= 2");
  check_level(n, r);
  unsigned o = ambient(n, x);
  CycElem zr = zeta(n, r), z2r = zeta(n, 2L * r), one(o, 1L);
  NcPoly r21 = mono({1, 2}, z2r);
  r21.add_term({0}, x);
  r21.add_term({}, x * (one - z2r));
  return build("jackson", o, r, x, 3, {{1, 0, mono({0, 1}, zr.inv())}, {2, 0, mono({0, 2}, zr)}, {2, 1, r21}});
}

Presentation jackson_prime(unsigned n, int r, const CycElem& x) {
  if (n < 3) throw std::invalid_argument("jackson_prime needs n >= 3");
  check_level(n, r);
  unsigned o = ambient(n, x);
  CycElem zr = zeta(n, r), z2r = zeta(n, 2L * r), one(o, 1L);
  // e0 e1 - zr e1 e0 - (1 - zr) e1 = 0
  NcPoly r10 = mono({0, 1}, zr.inv());
  r10.add_term({1}, -(zr.inv() * (one - zr)));
  // e2 e0 - zr e0 e2 - (1 - zr) e2 = 0
  NcPoly r20 = mono({0, 2}, zr);
  r20.add_term({2}, one - zr);
  // e2 e1 - z2r e1 e2 - x (1 - z2r) e0 = 0
  NcPoly r21 = mono({1, 2}, z2r);
  r21.add_term({0}, x * (one - z2r));
  return build("jacksonprime", o, r, x, 3, {{1, 0, r10}, {2, 0, r20}, {2, 1, r21}});
}

IsoReport jackson_iso_check(unsigned n, int r, const CycElem& x) {
  check_level(n, r);
  CycElem z2r = zeta(n, 2L * r);
  if (z2r.is_one()) throw std::invalid_argument("zeta^{2r} = 1: the primed and unprimed algebras are not isomorphic");
  Presentation src = jackson_prime(n, r, x);
  Presentation dst = jackson(n, r, x);
  CycElem one(dst.order, 1L);
  NcPoly e0 = dst.gen(0) * (one - z2r).inv() + dst.one();
  std::vector<NcPoly> images{e0, dst.gen(1), dst.gen(2)};
  IsoReport rep;
  rep.ok = true;
  for (const auto& rel : relations(*src.sys, src.order)) {
    NcPoly im = substitute(rel, images, dst);
    rep.ok = rep.ok && im.is_zero();
    rep.images.push_back(std::move(im));
  }
  return rep;
}

Presentation kummer_witt(unsigned n, int r, const CycElem& x) {
  if (n < 2) throw std::invalid_argument("kummer_witt needs n >= 2");
  check_level(n, r);
  unsigned o = ambient(n, x);
  CycElem one(o, 1L);
  std::vector<Rule> rules;
  // e_i e_j - z^{r(j-i)} e_j e_i - (1 - z^{r(j-i)}) x^[i+j>=n] e_{i+j mod n} = 0, i < j
  for (int j = 0; j < int(n); ++j)
    for (int i = 0; i < j; ++i) {
      CycElem q = zeta(n, long(r) * (j - i));
      CycElem qi = q.inv();
      NcPoly rhs = mono({i, j}, qi);
      CycElem lin = -(qi * (one - q));
      if (i + j >= int(n)) lin *= x;
      rhs.add_term({(i + j) % int(n)}, lin);
      rules.push_back({j, i, rhs});
    }
  return build("kummerwitt", o, r, x, int(n), std::move(rules));
}

Presentation kummer_witt_reduction(unsigned n, int r, const CycElem& x, ReductionBranch b) {
  check_level(n, r);
  switch (b) {
    case ReductionBranch::ZetaOne: {
      Presentation p = commutative_poly(int(n), ambient(n, x));
      p.family = "kummerwitt-zeta1";
      return p;
    }
    case ReductionBranch::XZero: {
      unsigned o = ambient(n, x);
      std::vector<Rule> rules;
      for (int j = 0; j < int(n); ++j)
        for (int i = 0; i < j; ++i) rules.push_back({j, i, mono({i, j}, zeta(n, long(r) * (i - j)))});
      return build("kummerwitt-x0", o, r, CycElem(o), int(n), std::move(rules));
    }
    case ReductionBranch::Generic:
      break;
  }
  return kummer_witt(n, r, x);
}

Presentation quantum_weyl(const CycElem& q) {
  if (q.is_zero()) throw std::invalid_argument("q must be nonzero");
  unsigned o = q.order();
  CycElem qi = q.inv();
  NcPoly rhs = mono({0, 1}, qi);
  rhs.add_term({}, -qi);
  return build("quantumweyl", o, 0, CycElem(o), 2, {{1, 0, rhs}});
}

Presentation jackson_e0_quotient(unsigned n, int r, const CycElem& x) {
  check_level(n, r);
  unsigned o = ambient(n, x);
  CycElem z2r = zeta(n, 2L * r), one(o, 1L);
  NcPoly rhs = mono({0, 1}, z2r);
  rhs.add_term({}, x * (one - z2r));
  return build("jackson-e0-quotient", o, r, x, 2, {{1, 0, rhs}});
}

MapReport weyl_quotient_check(unsigned n, int r, const CycElem& x) {
  check_level(n, r);
  CycElem z2r = zeta(n, 2L * r);
  if (z2r.is_one() || x.is_zero()) throw std::invalid_argument("needs zeta^{2r} != 1 and x != 0");
  Presentation J = jackson_e0_quotient(n, r, x);
  Presentation A = quantum_weyl(z2r.embed(J.order));
  CycElem s = x * (CycElem(J.order, 1L) - z2r);
  MapReport rep;
  // A -> J: v -> s^{-1} e2, w -> e1
  std::vector<NcPoly> fwd{J.gen(1) * s.inv(), J.gen(0)};
  rep.forward = true;
  for (const auto& rel : relations(*A.sys, A.order)) rep.forward = rep.forward && substitute(rel, fwd, J).is_zero();
  // J -> A: e1 -> w, e2 -> s v
  std::vector<NcPoly> bwd{A.gen(1), A.gen(0) * s};
  rep.backward = true;
  for (const auto& rel : relations(*J.sys, J.order)) rep.backward = rep.backward && substitute(rel, bwd, A).is_zero();
  return rep;
}

MapReport jackson_a3_check(unsigned n, int r) {
  check_level(n, r);
  Presentation J = jackson(n, r, CycElem(n));
  Presentation Q = quantum_a3(zeta(n, r).embed(J.order));
  MapReport rep;
  std::vector<NcPoly> fwd{J.gen(2), J.gen(0), J.gen(1)};
  rep.forward = true;
  for (const auto& rel : relations(*Q.sys, Q.order)) rep.forward = rep.forward && substitute(rel, fwd, J).is_zero();
  std::vector<NcPoly> bwd{Q.gen(1), Q.gen(2), Q.gen(0)};
  rep.backward = true;
  for (const auto& rel : relations(*J.sys, J.order)) rep.backward = rep.backward && substitute(rel, bwd, Q).is_zero();
  return rep;
}

FinDimAlgebra symbol_algebra(unsigned n, long k, const CycElem& a, const CycElem& b) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("symbol algebra parameters must be nonzero");
  unsigned o = lcm_u(n, lcm_u(a.order(), b.order()));
  CycElem xi = zeta(n, k).embed(o);
  FinDimAlgebra A;
  A.dim = std::size_t(n) * n;
  A.order = o;
  A.unit = 0;
  A.table.assign(A.dim, std::vector<SparseVec>(A.dim));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) A.names.push_back("x^" + std::to_string(i) + "*y^" + std::to_string(j));
  // x^i y^j x^k y^l = xi^{-jk} x^{i+k} y^{j+l}
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      for (unsigned p = 0; p < n; ++p)
        for (unsigned q = 0; q < n; ++q) {
          CycElem c = xi.pow(-long(j) * long(p));
          if (i + p >= n) c *= a;
          if (j + q >= n) c *= b;
          A.table[i * n + j][p * n + q].emplace_back(((i + p) % n) * n + (j + q) % n, c);
        }
  if (n > 1) A.generators = {std::size_t(n), 1};
  return A;
}

RebaseReport symbol_rebase_check(unsigned n, long k, const CycElem& a, const CycElem& b) {
  long kk = ((k % long(n)) + long(n)) % long(n);
  if (std::gcd(kk, long(n)) != 1) throw std::invalid_argument("rebasing needs gcd(n, k) = 1");
  RebaseReport rep;
  for (long m = 1; m <= long(n); ++m)
    if ((m * kk) % long(n) == 1 % long(n)) {
      rep.m = m;
      break;
    }
  FinDimAlgebra A = symbol_algebra(n, k, a, b);
  rep.b_rebased = b.pow(rep.m);
  FinDimAlgebra B = symbol_algebra(n, 1, a, rep.b_rebased);
  Vec y = A.basis(1 % A.dim);
  Vec ym = A.basis(A.unit);
  for (long t = 0; t < rep.m; ++t) ym = A.mul(ym, y);
  std::vector<Vec> images;
  for (unsigned i = 0; i < n; ++i) {
    Vec xi = A.basis(std::size_t(i) * n);
    Vec cur = xi;
    for (unsigned j = 0; j < n; ++j) {
      images.push_back(cur);
      cur = A.mul(cur, ym);
    }
  }
  rep.ok = check_isomorphism(B, A, images);
  return rep;
}

std::size_t fibre_index(const std::vector<unsigned>& exps, unsigned N) {
  std::size_t idx = 0;
  for (unsigned e : exps) idx = idx * N + e;
  return idx;
}

bool powers_central(const Presentation& p, unsigned N) {
  for (int g = 0; g < p.generators(); ++g)
    if (!is_central(power(p.gen(g), N, p), p)) return false;
  return true;
}

namespace {

// Adds c * (ordered word reduced by e_i^N = values[i]) into out.
void accumulate_ordered(const Word& w, const CycElem& c, int g, const std::vector<CycElem>& values, unsigned N,
                        Vec& out) {
  std::vector<unsigned> cnt(static_cast<std::size_t>(g), 0);
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (t > 0 && w[t] < w[t - 1]) throw std::logic_error("normal form is not an ordered monomial");
    ++cnt[static_cast<std::size_t>(w[t])];
  }
  CycElem f = c;
  for (int i = 0; i < g; ++i) {
    unsigned q = cnt[i] / N;
    if (q) f *= values[i].pow(q);
    cnt[i] %= N;
  }
  if (!f.is_zero()) out[fibre_index(cnt, N)] += f;
}

}  // namespace

Vec fibre_vector(const NcPoly& f, const Presentation& p, const std::vector<CycElem>& values, unsigned N) {
  int g = p.generators();
  unsigned o = p.order;
  for (const auto& v : values) o = lcm_u(o, v.order());
  std::size_t dim = 1;
  for (int i = 0; i < g; ++i) dim *= N;
  Vec out(dim, CycElem(o));
  NcPoly red = nf(f, p);
  for (const auto& [w, c] : red.terms()) accumulate_ordered(w, c, g, values, N, out);
  return out;
}

FinDimAlgebra fibre(const Presentation& p, const std::vector<CycElem>& values, unsigned N) {
  if (N == 0) N = p.order;
  int g = p.generators();
  if (values.size() != static_cast<std::size_t>(g)) throw std::invalid_argument("one value per generator required");
  bool pbw = p.pbw ? *p.pbw : diamond_check(p).empty();
  if (!pbw) throw std::invalid_argument("presentation has no PBW basis");
  if (!powers_central(p, N)) throw std::invalid_argument("power elements not central");
  FinDimAlgebra A;
  A.order = p.order;
  for (const auto& v : values) A.order = lcm_u(A.order, v.order());
  A.dim = 1;
  for (int i = 0; i < g; ++i) A.dim *= N;
  A.unit = 0;
  std::vector<Word> words(A.dim);
  for (std::size_t idx = 0; idx < A.dim; ++idx) {
    std::vector<unsigned> exps(static_cast<std::size_t>(g));
    std::size_t rest = idx;
    for (int i = g - 1; i >= 0; --i) {
      exps[i] = static_cast<unsigned>(rest % N);
      rest /= N;
    }
    std::string name;
    for (int i = 0; i < g; ++i) {
      for (unsigned e = 0; e < exps[i]; ++e) words[idx].push_back(i);
      if (exps[i] == 0) continue;
      if (!name.empty()) name += "*";
      name += p.sys->generator_names()[i] + (exps[i] > 1 ? "^" + std::to_string(exps[i]) : "");
    }
    A.names.push_back(name.empty() ? "1" : name);
  }
  A.table.assign(A.dim, std::vector<SparseVec>(A.dim));
  for (std::size_t a = 0; a < A.dim; ++a)
    for (std::size_t b = 0; b < A.dim; ++b) {
      Word w = words[a];
      w.insert(w.end(), words[b].begin(), words[b].end());
      Vec v(A.dim, CycElem(A.order));
      for (const auto& [t, c] : p.red->nf_word(w).terms()) accumulate_ordered(t, c, g, values, N, v);
      for (std::size_t k = 0; k < A.dim; ++k)
        if (!v[k].is_zero()) A.table[a][b].emplace_back(k, v[k]);
    }
  if (N > 1) {
    for (int i = 0; i < g; ++i) {
      std::vector<unsigned> e(static_cast<std::size_t>(g), 0);
      e[i] = 1;
      A.generators.push_back(fibre_index(e, N));
    }
  }
  return A;
}

DownUpReport verify_downup(unsigned n, int r, const CycElem& x) {
  check_level(n, r);
  DownUpReport rep;
  CycElem z2r = zeta(n, 2L * r);
  if (z2r.is_one()) {
    rep.applicable = false;
    return rep;
  }
  Presentation J = jackson(n, r, x);
  CycElem one(J.order, 1L), zr = zeta(n, r);
  CycElem c1 = zr * (one + zr), c3 = zeta(n, 3L * r), c0 = x * (one - z2r) * (one - zr);
  auto relation = [&](const NcPoly& d, const NcPoly& u) {
    std::vector<NcPoly> out;
    out.push_back(d * d * u - c1 * (d * u * d) + c3 * (u * d * d) - c0 * d);
    out.push_back(d * u * u - c1 * (u * d * u) + c3 * (u * u * d) - c0 * u);
    return out;
  };
  const std::pair<int, int> trials[2] = {{1, 2}, {2, 1}};
  for (auto [di, ui] : trials) {
    rep.defects.clear();
    bool ok = true;
    for (const auto& rel : relation(J.gen(di), J.gen(ui))) {
      NcPoly d = nf(rel, J);
      ok = ok && d.is_zero();
      rep.defects.push_back(std::move(d));
    }
    rep.assignment = "d=e" + std::to_string(di) + ",u=e" + std::to_string(ui);
    if (ok) {
      rep.ok = true;
      return rep;
    }
  }
  return rep;
}

FibreClass classify_fibre(const Presentation& p, const std::vector<CycElem>& character, unsigned N) {
  return classify(fibre(p, character, N));
}

HyperbolaReport weyl_hyperbola_check(unsigned n) {
  CycElem z2 = zeta(n, 2);
  if (z2.is_one()) throw std::invalid_argument("weyl_hyperbola_check needs zeta^2 != 1");
  HyperbolaReport rep;
  rep.n = n;
  rep.l = 1;
  while ((2 * rep.l) % n) ++rep.l;
  CycElem one(n, 1L);
  rep.target = (one - z2).pow(-static_cast<long>(rep.l));
  Presentation A = quantum_weyl(z2);
  std::vector<std::pair<CycElem, CycElem>> pts = {
      {one, rep.target},
      {CycElem(n, 2L), rep.target / CycElem(n, 2L)},
      {zeta(n, 1), rep.target * zeta(n, -1)},
      {one, one},
      {CycElem(n, 2L), CycElem(n, 3L)},
      {-one, rep.target},
      {one, CycElem(n)},
  };
  rep.ok = true;
  for (const auto& [b, c] : pts) {
    HyperbolaSample s;
    s.b = b;
    s.c = c;
    s.on_curve = b * c == rep.target;
    s.cls = classify_fibre(A, {b, c}, rep.l);
    rep.ok = rep.ok && ((s.cls.kind == FibreKind::Ramified) == s.on_curve);
    rep.samples.push_back(std::move(s));
  }
  return rep;
}

Presentation named_presentation(const std::string& family, unsigned n, int r, const CycElem& x) {
  if (family == "jackson") return jackson(n, r, x);
  if (family == "jackson_prime") return jackson_prime(n, r, x);
  if (family == "kummerwitt") return kummer_witt(n, r, x);
  if (family == "quantum_plane") return quantum_plane(zeta(n, r));
  if (family == "quantum_a3") return quantum_a3(zeta(n, r));
  if (family == "quantum_weyl") return quantum_weyl(zeta(n, r));
  throw std::invalid_argument("unknown family '" + family + "'");
}

}  // namespace kwj
