#include "kwj/report.hpp"

#include <functional>
#include <random>
#include <stdexcept>

#include "kwj/algebras.hpp"
#include "kwj/centre.hpp"
#include "kwj/ext.hpp"
#include "kwj/findim.hpp"
#include "kwj/homlie.hpp"
#include "kwj/modules.hpp"

namespace kwj {

using nlohmann::json;

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    default:
      return "skipped";
  }
}

void Report::add(const std::string& name, bool ok, json details) {
  checks.push_back({name, ok ? Status::Pass : Status::Fail, std::move(details)});
}

void Report::skip(const std::string& name, json details) {
  checks.push_back({name, Status::Skipped, std::move(details)});
}

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (c.status == Status::Fail) return false;
  return true;
}

std::size_t Report::count(Status s) const {
  std::size_t k = 0;
  for (const auto& c : checks) k += c.status == s;
  return k;
}

json Report::to_json() const {
  json cs = json::array();
  for (const auto& c : checks) cs.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"details", c.details}});
  return {{"schema", kReportSchema},
          {"command", command},
          {"params", params},
          {"checks", cs},
          {"data", data},
          {"summary",
           {{"pass", count(Status::Pass)}, {"fail", count(Status::Fail)}, {"skipped", count(Status::Skipped)}}},
          {"ok", all_pass()}};
}

namespace {

using Body = std::function<bool(json&)>;

// Runs one check; an exception is a failure carrying its message.
void run(Report& R, const std::string& name, const Body& body) {
  json d = json::object();
  bool ok = false;
  try {
    ok = body(d);
  } catch (const std::exception& e) {
    d["error"] = e.what();
  }
  R.add(name, ok, std::move(d));
}

CycElem lit(const char* s, unsigned n) { return CycElem::parse(s, n); }
CycElem num(unsigned n, long v) { return CycElem(n, v); }

NcPoly term(std::initializer_list<int> w, const CycElem& c) { return NcPoly(Word(w), c); }

json strs(const std::vector<CycElem>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

std::string rule_str(const Presentation& p, int j, int i) {
  const NcPoly* rhs = p.sys->rule_for(j, i);
  return rhs ? rhs->str(p.sys->generator_names()) : std::string("none");
}

bool rule_is(const Presentation& p, int j, int i, const NcPoly& expected) {
  const NcPoly* rhs = p.sys->rule_for(j, i);
  return rhs && *rhs == expected;
}

bool same_rules(const Presentation& a, const Presentation& b) {
  if (a.generators() != b.generators() || a.sys->rules().size() != b.sys->rules().size()) return false;
  for (const auto& r : a.sys->rules()) {
    const NcPoly* other = b.sys->rule_for(r.j, r.i);
    if (!other || *other != r.rhs) return false;
  }
  return true;
}

// Relations of `from` vanish in `to` under the generator images.
bool relations_vanish(const Presentation& from, const Presentation& to, const std::vector<NcPoly>& images) {
  for (const auto& rel : relations(*from.sys, from.order))
    if (!substitute(rel, images, to).is_zero()) return false;
  return true;
}

// images[i] spans a subalgebra of A on which multiplication matches B.
bool embeds(const FinDimAlgebra& B, const FinDimAlgebra& A, const std::vector<Vec>& images) {
  if (row_basis(images, A.dim, A.order).size() != B.dim) return false;
  for (std::size_t i = 0; i < B.dim; ++i)
    for (std::size_t j = 0; j < B.dim; ++j) {
      Vec lhs = A.zero();
      for (const auto& [k, c] : B.table[i][j])
        for (std::size_t m = 0; m < A.dim; ++m) lhs[m] += c * images[k][m];
      if (lhs != A.mul(images[i], images[j])) return false;
    }
  return true;
}

json class_json(const FibreClass& c) {
  return {{"kind", to_string(c.kind)},       {"dim", c.dim},
          {"radical_dim", c.radical_dim},    {"semisimple_dim", c.semisimple_dim},
          {"centre_dim", c.centre_dim},      {"quotient_centre_dim", c.quotient_centre_dim}};
}

CycElem random_elem(std::mt19937_64& rng, unsigned n) {
  std::uniform_int_distribution<long> num_d(-9, 9), den_d(1, 5);
  std::vector<Rational> c;
  for (unsigned k = 0; k < euler_phi(n); ++k) c.emplace_back(num_d(rng), den_d(rng));
  for (auto& x : c) x.canonicalize();
  return CycElem(n, c);
}

NcPoly random_poly(std::mt19937_64& rng, int gens, unsigned order, std::size_t max_deg, std::size_t terms) {
  std::uniform_int_distribution<std::size_t> deg_d(0, max_deg);
  std::uniform_int_distribution<int> gen_d(0, gens - 1);
  NcPoly p;
  for (std::size_t t = 0; t < terms; ++t) {
    Word w(deg_d(rng));
    for (auto& g : w) g = gen_d(rng);
    p.add_term(w, random_elem(rng, order));
  }
  return p;
}

void cyclotomic_fixtures(Report& R) {
  run(R, "cyclotomic.q_int_zero_one", [](json& d) {
    bool ok = true;
    for (unsigned n = 2; n <= 8; ++n) {
      CycElem q = zeta(n, 1);
      ok = ok && q_int(0, q).is_zero() && q_int(1, q).is_one();
    }
    d["orders"] = "2..8";
    return ok;
  });
}

void ncalg_fixtures(Report& R) {
  const unsigned n = 3;
  CycElem z = zeta(n, 1), one = num(n, 1);
  run(R, "ncalg.jackson_nf_e2e1", [&](json& d) {
    bool ok = true;
    for (long xv : {1L, 2L}) {
      CycElem x = num(n, xv);
      Presentation J = jackson(n, 1, x);
      NcPoly got = nf(term({2, 1}, one), J);
      NcPoly want = term({1, 2}, z * z) + term({0}, x) + NcPoly(x * (one - z * z));
      d["x=" + x.str()] = got.str(J.sys->generator_names());
      ok = ok && got == want;
    }
    return ok;
  });
  run(R, "ncalg.jackson_x0_quantum_affine", [&](json& d) {
    Presentation J = jackson(n, 1, CycElem(n));
    NcPoly got = mul(J.gen(2), J.gen(1), J);
    d["e2*e1"] = got.str(J.sys->generator_names());
    return got == term({1, 2}, z * z);
  });
  run(R, "ncalg.twisted_commutation_w", [&](json& d) {
    Presentation J = jackson(n, 1, one);
    NcPoly w = term({2, 1}, one) - term({0}, (one - z).inv()) - J.one();
    NcPoly lhs = mul(w, J.gen(1), J), rhs = mul(J.gen(1), w, J) * (z * z);
    d["w*e1"] = lhs.str(J.sys->generator_names());
    d["z^2*e1*w"] = rhs.str(J.sys->generator_names());
    return lhs == rhs;
  });
  run(R, "ncalg.eval_torsion_e0", [&](json& d) {
    CycElem a = num(n, 5);
    Representation T = torsion_module(n, 1, 3, one, a);
    Matrix m = eval_rep(NcPoly::gen(0, n), T);
    Matrix want(3, 3, m.order());
    for (unsigned i = 0; i < 3; ++i) want(i, i) = zeta(n, i) * a;
    d["rho(e0)"] = matrix_to_json(m);
    return m == want;
  });
}

void homlie_fixtures(Report& R) {
  const unsigned n = 3;
  CycElem q = zeta(n, 1), a = num(n, 2), one = num(n, 1), zero(n);
  auto unit = [&](std::size_t dim, std::size_t k, const CycElem& c) {
    Vec v(dim, zero);
    v[k] = c;
    return v;
  };
  run(R, "homlie.truncated_line_n2", [&](json& d) {
    HomLieAlgebra h = twisted_bracket(truncated_line(2, n), {{one, q}, a / (one - q), one});
    Vec got = h.bracket(h.basis(0), h.basis(1));
    d["<e0,e1>"] = strs(got);
    return got == unit(2, 1, a);
  });
  run(R, "homlie.truncated_line_n3", [&](json& d) {
    HomLieAlgebra h = twisted_bracket(truncated_line(3, n), {{one, q, q * q}, a / (one - q), one});
    Vec b02 = h.bracket(h.basis(0), h.basis(2)), b12 = h.bracket(h.basis(1), h.basis(2));
    d["<e0,e2>"] = strs(b02);
    d["<e1,e2>"] = strs(b12);
    return b02 == unit(3, 2, a * q_int(2, q)) && b12 == Vec(3, zero);
  });
  run(R, "homlie.kummer_twisted_bracket_n3", [&](json& d) {
    CycElem x = num(n, 2);
    HomLieAlgebra h = twisted_bracket(kummer_extension(3, x), {{one, q, q * q}, one, one});
    HomLieAlgebra k = kummer_witt_homlie(3, 1, x);
    d["x"] = x.str();
    return h.c == k.c;
  });
  run(R, "homlie.infinitesimal_n2", [&](json& d) {
    HomLieAlgebra h = infinitesimal_homlie(2, q, a);
    d["<e0,e1>"] = strs(h.c[0][1]);
    return h.c[0][1] == unit(2, 1, a) && h.c[1][0] == unit(2, 1, -a) && h.c[0][0] == Vec(2, zero) &&
           h.c[1][1] == Vec(2, zero);
  });
  run(R, "homlie.kummer_witt_level0_abelian", [&](json& d) {
    bool ok = true;
    for (unsigned m = 2; m <= 5; ++m) {
      HomLieAlgebra h = kummer_witt_homlie(m, 0, CycElem(m, 1L));
      for (const auto& row : h.c)
        for (const auto& v : row)
          for (const auto& c : v) ok = ok && c.is_zero();
    }
    d["orders"] = "2..5";
    return ok;
  });
  run(R, "homlie.infinitesimal_n4_jacobi_probe", [&](json& d) {
    const unsigned o = 7;
    CycElem q7 = zeta(o, 1), a7(o, 2L);
    HomLieAlgebra h = infinitesimal_homlie(4, q7, a7);
    Vec got = jacobi_probe(h, 0, 1, 2);
    Vec claimed(4, CycElem(o));
    claimed[3] = a7 * a7 * q7 * (q7 - CycElem(o, 1L));
    d["q"] = q7.str();
    d["a"] = a7.str();
    d["computed"] = strs(got);
    d["claimed"] = strs(claimed);
    return got == claimed;
  });
  run(R, "homlie.infinitesimal_n3_lie", [&](json& d) {
    HomLieAlgebra h = infinitesimal_homlie(3, q, a);
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k)
          if (jacobi_probe(h, i, j, k) != Vec(3, zero)) ++nonzero;
    d["nonzero_triples"] = nonzero;
    return nonzero == 0;
  });
  // e0 -> e0 + a/(q - 1) turns the enveloping algebras into quantum affine spaces.
  CycElem t = a / (q - one);
  run(R, "homlie.enveloping_infinitesimal_n2", [&](json& d) {
    Presentation E = enveloping(infinitesimal_homlie(2, q, a));
    Presentation Q = quantum_plane(q);
    bool pbw = diamond_check(E).empty();
    bool fwd = relations_vanish(Q, E, {E.gen(0) + E.scalar(t), E.gen(1)});
    bool bwd = relations_vanish(E, Q, {Q.gen(0) - Q.scalar(t), Q.gen(1)});
    d["rule e1e0"] = rule_str(E, 1, 0);
    d["pbw"] = pbw;
    d["shift"] = t.str();
    return pbw && fwd && bwd;
  });
  run(R, "homlie.enveloping_infinitesimal_n3", [&](json& d) {
    Presentation E = enveloping(infinitesimal_homlie(3, q, a));
    Presentation Q = quantum_a3(q);
    bool pbw = diamond_check(E).empty();
    bool fwd = relations_vanish(Q, E, {E.gen(0) + E.scalar(t), E.gen(1), E.gen(2)});
    bool bwd = relations_vanish(E, Q, {Q.gen(0) - Q.scalar(t), Q.gen(1), Q.gen(2)});
    d["rules"] = {rule_str(E, 1, 0), rule_str(E, 2, 0), rule_str(E, 2, 1)};
    d["pbw"] = pbw;
    return pbw && fwd && bwd;
  });
  run(R, "homlie.enveloping_kummer_witt", [&](json& d) {
    bool ok = true;
    for (auto [m, r, xv] : {std::tuple{3u, 1, 1L}, {4u, 1, 2L}, {5u, 2, 1L}}) {
      CycElem x(m, xv);
      bool same = same_rules(enveloping(kummer_witt_homlie(m, r, x)), kummer_witt(m, r, x));
      d["n=" + std::to_string(m) + ",r=" + std::to_string(r)] = same;
      ok = ok && same;
    }
    return ok;
  });
}

void algebra_fixtures(Report& R) {
  const unsigned n = 3;
  CycElem z = zeta(n, 1), one = num(n, 1);
  run(R, "algebras.jackson_relations_n3_r1", [&](json& d) {
    Presentation J = jackson(n, 1, one);
    d["rules"] = {rule_str(J, 1, 0), rule_str(J, 2, 0), rule_str(J, 2, 1)};
    return rule_is(J, 1, 0, term({0, 1}, z.inv())) && rule_is(J, 2, 0, term({0, 2}, z)) &&
           rule_is(J, 2, 1, term({1, 2}, z * z) + term({0}, one) + NcPoly(one - z * z));
  });
  run(R, "algebras.jackson_relations_n4_r2", [&](json& d) {
    CycElem x(4, 3L), m1(4, -1L), p1(4, 1L);
    Presentation J = jackson(4, 2, x);
    d["rules"] = {rule_str(J, 1, 0), rule_str(J, 2, 0), rule_str(J, 2, 1)};
    return rule_is(J, 1, 0, term({0, 1}, m1)) && rule_is(J, 2, 0, term({0, 2}, m1)) &&
           rule_is(J, 2, 1, term({1, 2}, p1) + term({0}, x));
  });
  run(R, "algebras.jackson_level0_x0_commutative", [&](json& d) {
    Presentation J = jackson(n, 0, CycElem(n));
    bool ok = true;
    for (const auto& r : J.sys->rules()) ok = ok && r.rhs == term({r.i, r.j}, one);
    d["rules"] = {rule_str(J, 1, 0), rule_str(J, 2, 0), rule_str(J, 2, 1)};
    return ok;
  });
  run(R, "algebras.jackson_prime_iso", [&](json& d) {
    bool a = jackson_iso_check(3, 1, one).ok, b = jackson_iso_check(4, 1, CycElem(4, 2L)).ok;
    d["n=3,r=1,x=1"] = a;
    d["n=4,r=1,x=2"] = b;
    return a && b;
  });
  run(R, "algebras.jackson_iso_rejects_q2_one", [&](json& d) {
    try {
      jackson_iso_check(4, 2, CycElem(4, 1L));
    } catch (const std::invalid_argument& e) {
      d["error"] = e.what();
      return true;
    }
    return false;
  });
  run(R, "algebras.reduction_zeta_one", [&](json& d) {
    Presentation P = kummer_witt_reduction(n, 1, one, ReductionBranch::ZetaOne);
    bool ok = true;
    for (const auto& r : P.sys->rules()) ok = ok && r.rhs == term({r.i, r.j}, CycElem(P.order, 1L));
    d["rules"] = P.sys->rules().size();
    return ok;
  });
  run(R, "algebras.reduction_x_zero", [&](json& d) {
    Presentation P = kummer_witt_reduction(n, 1, CycElem(n), ReductionBranch::XZero);
    bool ok = true;
    for (const auto& r : P.sys->rules())
      ok = ok && r.rhs.terms().size() == 1 && r.rhs.terms().begin()->first == Word{r.i, r.j};
    d["rules"] = P.sys->rules().size();
    return ok;
  });
  run(R, "algebras.reduction_generic", [&](json&) {
    return same_rules(kummer_witt_reduction(n, 1, one, ReductionBranch::Generic), kummer_witt(n, 1, one));
  });
  run(R, "algebras.quantum_weyl_relation", [&](json& d) {
    CycElem q = z * z;
    Presentation W = quantum_weyl(q);
    d["rule e1e0"] = rule_str(W, 1, 0);
    return rule_is(W, 1, 0, term({0, 1}, q.inv()) - NcPoly(q.inv()));
  });
  run(R, "algebras.jackson_quotient_weyl", [&](json&) { return weyl_quotient_check(n, 1, one).ok(); });
  run(R, "algebras.symbol_algebra_central_simple", [&](json& d) {
    FinDimAlgebra S = symbol_algebra(n, 1, one, one);
    d["dim"] = S.dim;
    d["centre_dim"] = centre_basis(S).size();
    return S.dim == 9 && centre_basis(S).size() == 1 && is_central_simple(S);
  });
  run(R, "algebras.symbol_rebase", [&](json& d) {
    RebaseReport rb = symbol_rebase_check(n, 2, one, one);
    d["m"] = rb.m;
    d["b_rebased"] = rb.b_rebased.str();
    return rb.ok && rb.b_rebased.is_one();
  });
}

void fibre_fixtures(Report& R) {
  const unsigned n = 3;
  CycElem z = zeta(n, 1), one = num(n, 1), zero(n);
  Presentation J = jackson(n, 1, one), J0 = jackson(n, 1, zero);
  run(R, "fibres.jackson_x0_symbol_subalgebra", [&](json& d) {
    FinDimAlgebra F = fibre(J0, {one, one, one});
    FinDimAlgebra S = symbol_algebra(n, 1, one, one);
    std::vector<Vec> images;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) images.push_back(F.basis(fibre_index({i, j, 0}, n)));
    d["dim"] = F.dim;
    return F.dim == 27 && embeds(S, F, images);
  });
  run(R, "fibres.radical_contains_e0", [&](json& d) {
    bool ok = true;
    for (auto [b, c] : {std::pair{1L, 1L}, {2L, 3L}}) {
      std::vector<CycElem> vals{zero, num(n, b), num(n, c)};
      FinDimAlgebra F = fibre(J, vals);
      std::vector<Vec> rad = radical(F);
      std::vector<Vec> ideal = ideal_closure(F, {fibre_vector(J.gen(0), J, vals, n)});
      bool inside = true;
      for (const auto& v : ideal) inside = inside && in_span(rad, v, F.order);
      d["(0," + std::to_string(b) + "," + std::to_string(c) + ")"] = {
          {"radical_dim", rad.size()}, {"ideal_dim", row_basis(ideal, F.dim, F.order).size()}};
      ok = ok && F.dim == 27 && inside;
    }
    return ok;
  });
  run(R, "fibres.azumaya_111", [&](json& d) {
    FibreClass c = classify_fibre(J, {one, one, one});
    d["class"] = class_json(c);
    return c.kind == FibreKind::Azumaya && c.radical_dim == 0 && c.centre_dim == 1 && c.dim == 27;
  });
  run(R, "fibres.central_simple_sampled", [&](json& d) {
    bool ok = true;
    std::vector<std::array<CycElem, 3>> pts{{one, one, one}, {num(n, 2), one, num(n, 3)}, {num(n, -1), num(n, 2), z}};
    for (const auto& p : pts) {
      bool cs = is_central_simple(fibre(J, {p[0], p[1], p[2]}));
      d[p[0].str() + "," + p[1].str() + "," + p[2].str()] = cs;
      ok = ok && cs;
    }
    return ok;
  });
  run(R, "fibres.ramified_011", [&](json& d) {
    FibreClass c = classify_fibre(J, {zero, one, one});
    d["class"] = class_json(c);
    return c.kind == FibreKind::Ramified && !is_central_simple(fibre(J, {zero, one, one}));
  });
  run(R, "fibres.one_dim_quotient_101", [&](json& d) {
    FibreClass c = classify_fibre(J, {one, zero, one});
    d["class"] = class_json(c);
    return c.kind == FibreKind::Ramified && c.semisimple_dim == 1;
  });
  run(R, "fibres.jackson_x0_symbol_quotient_101", [&](json& d) {
    FibreClass c = classify_fibre(J0, {one, zero, one});
    d["class"] = class_json(c);
    return c.kind == FibreKind::Ramified && c.semisimple_dim == 9 && c.quotient_centre_dim == 1;
  });
  run(R, "fibres.weyl_hyperbola", [&](json& d) {
    bool ok = true;
    for (unsigned m : {3u, 4u}) {
      HyperbolaReport h = weyl_hyperbola_check(m);
      json samples = json::array();
      for (const auto& s : h.samples)
        samples.push_back({{"b", s.b.str()}, {"c", s.c.str()}, {"on_curve", s.on_curve}, {"kind", to_string(s.cls.kind)}});
      d["n=" + std::to_string(m)] = {{"target", h.target.str()}, {"samples", samples}, {"ok", h.ok}};
      ok = ok && h.ok;
    }
    return ok;
  });
}

void centre_fixtures(Report& R) {
  const unsigned n = 3;
  CycElem one = num(n, 1);
  run(R, "centre.jackson_x1", [&](json& d) {
    CentreReport c = verify_centre(jackson(n, 1, one), centre_params(n, 1));
    d["powers_central"] = c.powers_central;
    d["w_central"] = c.w_central;
    return c.powers_central && !c.w_central;
  });
  run(R, "centre.jackson_x0", [&](json& d) {
    CentreReport c = verify_centre(jackson(n, 1, CycElem(n)), centre_params(n, 1));
    d["powers_central"] = c.powers_central;
    d["w_central"] = c.w_central;
    return c.powers_central && c.w_central;
  });
  run(R, "centre.bell_smith", [&](json& d) {
    BellSmithReport b = bell_smith_check(n, 1, one);
    d["a"] = b.a.str();
    d["b"] = b.b.str();
    d["order"] = b.order ? json(*b.order) : json(nullptr);
    return b.ok() && b.order == 3u;
  });
  run(R, "centre.omega_variant", [&](json& d) {
    bool ok = true;
    for (auto [m, r] : {std::pair{3u, 1}, {4u, 1}, {5u, 2}}) {
      VariantResolution v = resolve_omega(m, r, CycElem(m, 1L), {CycElem(m, 1L), CycElem(m, 2L), CycElem(m, 3L)});
      d["n=" + std::to_string(m) + ",r=" + std::to_string(r)] = v.zero_defect;
      ok = ok && v.ok() && v.resolved.variant == r;
    }
    return ok;
  });
}

void module_fixtures(Report& R) {
  const unsigned n = 3;
  CycElem z = zeta(n, 1), one = num(n, 1), zero(n);
  Presentation J = jackson(n, 1, one);
  CentreParams cp = centre_params(n, 1);
  run(R, "modules.one_dim_points", [&](json& d) {
    bool ok = one_dim_points(n, 1, one, {zero, num(n, 2), lit("1/2", n)}) &&
              one_dim_points(n, 1, one, {z * z - one, zero, zero});
    for (const CycElem& b : {one, num(n, 3), z}) ok = ok && one_dim_points(n, 1, one, {zero, b, b.inv()});
    bool control = one_dim_points(n, 1, one, {zero, one, lit("1/2", n)});
    d["off_conic_control"] = control;
    return ok && !control;
  });
  run(R, "modules.torsion_display", [&](json& d) {
    bool ok = true;
    for (const CycElem& a : {num(n, 5), num(n, -2), lit("1/3", n), z}) {
      Representation T = torsion_module(n, 1, 3, one, a);
      Matrix e0(3, 3, T.order), e1(3, 3, T.order), e2(3, 3, T.order);
      for (unsigned i = 0; i < 3; ++i) e0(i, i) = zeta(n, i) * a;
      e1(1, 0) = one;
      e1(2, 1) = one;
      e2(0, 1) = a + z + num(n, 2);
      e2(1, 2) = one - a - z;
      auto cc = central_character(J, T, cp).values;
      bool good = verify_rep(J, T).ok && T.gens[0] == e0 && T.gens[1] == e1 && T.gens[2] == e2 &&
                  cc == std::vector<CycElem>{a.pow(3), zero, zero};
      if (a == num(n, 5)) d["a=5"] = rep_to_json(T);
      d["character a=" + a.str()] = strs(cc);
      ok = ok && good;
    }
    return ok;
  });
  run(R, "modules.torsion_x0_e2_zero", [&](json&) {
    Representation T = torsion_module(n, 1, 3, zero, num(n, 5));
    return T.gens[2].is_zero() && verify_rep(jackson(n, 1, zero), T).ok;
  });
  run(R, "modules.torsion_d1_point", [&](json& d) {
    auto a = torsion_forced_a(n, 1, 1);
    Representation T = torsion_module(n, 1, 1, one);
    d["a"] = a ? a->str() : "none";
    return a && *a == -(one - z) * (one + z) && T.gens[0](0, 0) == *a &&
           one_dim_points(n, 1, one, {T.gens[0](0, 0), T.gens[1](0, 0), T.gens[2](0, 0)}) && verify_rep(J, T).ok;
  });
  run(R, "modules.torsion_free_psi", [&](json& d) {
    CycElem k1 = lit("1/3*z + 2/3", n), k2 = lit("1/3*z - 1/3", n), k3 = lit("-z - 1", n);
    std::size_t checked = 0;
    bool ok = true;
    for (const CycElem& a : {num(n, -1), zero, num(n, 2), lit("1/2", n), z})
      for (const CycElem& b : {num(n, -1), zero, num(n, 2), lit("1/2", n), z}) {
        ok = ok && psi_torsion_free(n, 1, one, a, b, 1) == k1 * a + b + one &&
             psi_torsion_free(n, 1, one, a, b, 2) == k2 * a + k3 * b + one;
        ++checked;
      }
    d["grid_points"] = checked;
    return ok;
  });
  run(R, "modules.torsion_free_matrices", [&](json& d) {
    bool ok = true;
    for (auto [a, b, c] : {std::tuple{num(n, 5), num(n, 2), num(n, 7)}, {one, one, z}, {num(n, 2), lit("1/3", n), num(n, -4)}}) {
      Representation M = torsion_free_module(n, 1, one, a, b, c);
      if (M.dim != 3) return false;
      Matrix e0(3, 3, M.order), e1(3, 3, M.order), e2(3, 3, M.order);
      for (unsigned i = 0; i < 3; ++i) e0(i, i) = zeta(n, i) * a;
      e1(1, 0) = one;
      e1(2, 1) = one;
      e1(0, 2) = c;
      e2(0, 1) = psi_torsion_free(n, 1, one, a, b, 1);
      e2(1, 2) = psi_torsion_free(n, 1, one, a, b, 2);
      e2(2, 0) = c.inv() * psi_torsion_free(n, 1, one, a, b, 3);
      ok = ok && verify_rep(J, M).ok && M.gens[0] == e0 && M.gens[1] == e1 && M.gens[2] == e2;
      if (a == num(n, 5)) d["a=5,b=2,c=7"] = rep_to_json(M);
    }
    return ok;
  });
  run(R, "modules.torsion_free_z_coordinate", [&](json& d) {
    CycElem k3 = lit("-1/9*z + 1/9", n), kb = lit("-z - 1", n), kab = lit("2*z + 1", n), k0 = lit("z + 1", n);
    std::size_t points = 0, mismatches = 0, degenerate = 0;
    for (long a : {0L, 1L, 2L, 5L})
      for (long b : {0L, 1L, 3L, 2L})
        for (long c : {1L, 2L, 7L, -3L}) {
          CycElem A = num(n, a), B = num(n, b), C = num(n, c), Ci = C.inv();
          Representation M = torsion_free_module(n, 1, one, A, B, C);
          // the closed form describes the three-dimensional modules
          if (M.dim != 3) {
            ++degenerate;
            continue;
          }
          auto cc = central_character(J, M, cp).values;
          CycElem claimed = Ci * (k3 * A.pow(3) + kb * B.pow(3) + kab * A * B - k0);
          ++points;
          if (cc[2] != claimed) {
            if (mismatches == 0)
              d["first_mismatch"] = {{"a", a}, {"b", b}, {"c", c}, {"computed", cc[2].str()}, {"claimed", claimed.str()}};
            ++mismatches;
          }
        }
    d["points"] = points;
    d["degenerate_points"] = degenerate;
    d["mismatches"] = mismatches;
    return mismatches == 0;
  });
  run(R, "modules.torsion_free_x0", [&](json& d) {
    CycElem a = num(n, 5), b = num(n, 2), c = num(n, 7);
    Representation M = torsion_free_module(n, 1, zero, a, b, c);
    d["dim"] = M.dim;
    if (M.dim != 3) return false;
    Matrix e2(3, 3, M.order);
    e2(0, 1) = b;
    e2(1, 2) = zeta(n, 2) * b;
    e2(2, 0) = c.inv() * zeta(n, 4) * b;
    return M.gens[2] == e2 && verify_rep(jackson(n, 1, zero), M).ok;
  });
}

void ext_fixtures(Report& R) {
  const unsigned n = 3;
  CycElem z = zeta(n, 1), one = num(n, 1), zero(n);
  json tables = json::array();
  for (auto [m, r, xv] : {std::tuple{3u, 1, 1L}, {3u, 1, 0L}, {4u, 1, 1L}, {5u, 2, 1L}, {2u, 1, 1L}, {2u, 1, 0L}}) {
    std::string name = "ext.one_dim_table.n" + std::to_string(m) + "_r" + std::to_string(r) + "_x" + std::to_string(xv);
    run(R, name, [&, m = m, r = r, xv = xv](json& d) {
      SweepTable t = ext1_sweep_one_dim(m, r, CycElem(m, xv));
      bool oracle = true, inner = true;
      json mism = json::array();
      for (const auto& row : t.rows) {
        oracle = oracle && row.oracle;
        inner = inner && row.inner_dim == (row.m == row.n ? 0u : 1u);
        if (!row.matches())
          mism.push_back({{"case", row.label},
                          {"m", strs({row.m.begin(), row.m.end()})},
                          {"n", strs({row.n.begin(), row.n.end()})},
                          {"claimed", row.claimed},
                          {"dim", row.dim}});
      }
      d["rows"] = t.rows.size();
      d["mismatches"] = mism;
      d["oracle"] = oracle;
      d["inner_dim_rule"] = inner;
      return t.all_match() && oracle && inner;
    });
  }
  auto pair_dim = [&](const Presentation& J, std::array<CycElem, 3> a, std::array<CycElem, 3> b, json& d) {
    Representation M = point_rep(a), N = point_rep(b);
    if (!verify_rep(J, M).ok || !verify_rep(J, N).ok) throw std::invalid_argument("pair is not on the module locus");
    ExtResult e = ext1(J, M, N);
    d["m"] = strs({a.begin(), a.end()});
    d["n"] = strs({b.begin(), b.end()});
    d["dim"] = e.dim;
    d["oracle"] = ext1_oracle(J, M, N, e).ok();
    return e.dim;
  };
  Presentation J = jackson(n, 1, one);
  run(R, "ext.pair_shifted", [&](json& d) {
    return pair_dim(J, {zero, num(n, 2), lit("1/2", n)}, {zero, num(n, 2) * z.inv(), z / num(n, 2)}, d) == 1;
  });
  run(R, "ext.pair_equal", [&](json& d) {
    return pair_dim(J, {zero, num(n, 2), lit("1/2", n)}, {zero, num(n, 2), lit("1/2", n)}, d) == 1;
  });
  run(R, "ext.pair_unrelated", [&](json& d) {
    return pair_dim(J, {zero, num(n, 2), lit("1/2", n)}, {zero, num(n, 5), lit("1/5", n)}, d) == 0;
  });
  run(R, "ext.origin_x0", [&](json& d) {
    return pair_dim(jackson(n, 1, zero), {zero, zero, zero}, {zero, zero, zero}, d) == 2;
  });
  run(R, "ext.sign_pair_n2_x0", [&](json& d) {
    CycElem b(2, 2L), c(2, 3L), o(2);
    return pair_dim(jackson(2, 1, o), {o, b, c}, {o, -b, -c}, d) == 1;
  });
  TableReport tr = ext1_family_table();
  json dims = tr.dims, homs = tr.homs;
  run(R, "ext.family_table_diagonal", [&](json& d) {
    d["dims"] = dims;
    d["homs"] = homs;
    d["character"] = strs(tr.characters[0]);
    return tr.dims[0][0] == 2 && tr.dims[1][1] == 2 && tr.dims[2][2] == 2;
  });
  run(R, "ext.family_table_offdiagonal", [&](json& d) {
    d["dims"] = dims;
    bool ok = true;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (i != j) ok = ok && tr.dims[i][j] == 1;
    return ok;
  });
  run(R, "ext.family_other_character", [&](json& d) {
    d["control_character"] = strs(tr.control_character);
    d["dim"] = tr.control_dim;
    d["oracle"] = tr.oracle;
    return tr.control_dim == 0 && tr.control_character != tr.characters[0] && tr.oracle;
  });
  run(R, "ext.muller_vanishing", [&](json& d) {
    MullerReport m = muller_sampling();
    d["modules"] = m.modules;
    d["unequal_pairs"] = m.unequal_pairs;
    d["unequal_nonzero"] = m.unequal_nonzero;
    d["equal_pairs"] = m.equal_pairs;
    d["equal_nonzero"] = m.equal_nonzero;
    d["oracle"] = m.oracle;
    return m.ok();
  });
}

bool field_axioms(json& d) {
  std::mt19937_64 rng(2024);
  std::size_t trials = 0;
  for (unsigned n : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 12u})
    for (int k = 0; k < 25; ++k) {
      CycElem a = random_elem(rng, n), b = random_elem(rng, n), c = random_elem(rng, n);
      CycElem zero(n), one(n, 1L);
      bool ok = (a + b) + c == a + (b + c) && a + b == b + a && (a * b) * c == a * (b * c) && a * b == b * a &&
                a * (b + c) == a * b + a * c && a + zero == a && a * one == a && a - a == zero;
      if (!a.is_zero()) ok = ok && a * a.inv() == one && (b / a) * a == b;
      ++trials;
      if (!ok) {
        d["failure"] = {{"order", n}, {"a", a.str()}, {"b", b.str()}, {"c", c.str()}};
        return false;
      }
    }
  for (int k = 0; k < 25; ++k) {
    CycElem a = random_elem(rng, 3), b = random_elem(rng, 4);
    if (a * b != b * a || (a + b).embed(12) != a.embed(12) + b.embed(12) || (a * b).order() != 12) return false;
    ++trials;
  }
  d["trials"] = trials;
  return true;
}

bool round_trips(json& d) {
  std::mt19937_64 rng(11);
  std::size_t literals = 0;
  for (unsigned n : {1u, 3u, 4u, 5u, 8u})
    for (int k = 0; k < 20; ++k) {
      CycElem a = random_elem(rng, n);
      CycElem back = CycElem::parse(a.str(), n);
      if (back != a || back.str() != a.str()) {
        d["failure"] = a.str();
        return false;
      }
      ++literals;
    }
  std::vector<Presentation> ps{jackson(3, 1, CycElem(3, 1L)), kummer_witt(4, 1, CycElem(4, 2L)),
                               jackson(5, 2, CycElem::parse("1/3*z^2 - 2*z + 1", 5)), quantum_weyl(zeta(3, 2))};
  for (const auto& p : ps) {
    json j = presentation_to_json(p);
    if (presentation_to_json(presentation_from_json(j)).dump() != j.dump()) {
      d["failure"] = p.family;
      return false;
    }
    for (int k = 0; k < 5; ++k) {
      NcPoly f = random_poly(rng, p.generators(), p.order, 4, 5);
      if (poly_from_json(poly_to_json(f), p.order) != f) return false;
    }
  }
  Representation T = torsion_free_module(3, 1, CycElem(3, 1L), CycElem(3, 5L), CycElem(3, 2L), zeta(3, 1));
  Representation T2 = rep_from_json(rep_to_json(T), T.order);
  bool reps = T2.dim == T.dim && T2.gens == T.gens;
  d["literals"] = literals;
  d["presentations"] = ps.size();
  return reps;
}

bool nf_linearity(json& d) {
  std::mt19937_64 rng(5);
  std::vector<Presentation> ps{jackson(3, 1, CycElem(3, 1L)), jackson(4, 1, CycElem(4, 2L)),
                               kummer_witt(4, 1, CycElem(4, 2L)), quantum_weyl(zeta(3, 2))};
  std::size_t trials = 0;
  for (const auto& p : ps)
    for (int k = 0; k < 15; ++k) {
      NcPoly f = random_poly(rng, p.generators(), p.order, 4, 4), g = random_poly(rng, p.generators(), p.order, 4, 4);
      CycElem al = random_elem(rng, p.order), be = random_elem(rng, p.order);
      NcPoly lhs = nf(f * al + g * be, p), rhs = nf(f, p) * al + nf(g, p) * be;
      if (lhs != rhs || nf(lhs, p) != lhs) {
        d["failure"] = p.family;
        return false;
      }
      ++trials;
    }
  d["trials"] = trials;
  return true;
}

bool fibre_associativity(json& d) {
  struct Case {
    std::string name;
    Presentation p;
    std::vector<CycElem> values;
    unsigned N;
  };
  CycElem one(3, 1L), zero(3);
  std::vector<Case> cases{{"jackson(2,1,1) at (1,1,1)", jackson(2, 1, CycElem(2, 1L)), {CycElem(2, 1L), CycElem(2, 1L), CycElem(2, 1L)}, 0},
                          {"jackson(3,1,1) at (1,1,1)", jackson(3, 1, one), {one, one, one}, 0},
                          {"jackson(3,1,1) at (0,1,1)", jackson(3, 1, one), {zero, one, one}, 0},
                          {"jackson(3,1,0) at (1,0,1)", jackson(3, 1, zero), {one, zero, one}, 0},
                          {"quantum_weyl(z^2) at (1,1)", quantum_weyl(zeta(3, 2)), {one, one}, 3}};
  for (const auto& c : cases) {
    FinDimAlgebra F = fibre(c.p, c.values, c.N);
    bool ok = check_unit(F) && check_associative(F, 0);
    d[c.name] = {{"dim", F.dim}, {"associative", ok}};
    if (!ok) return false;
  }
  return true;
}

json determinism_sample() {
  return {{"sweep", sweep_to_json(ext1_sweep_one_dim(3, 1, CycElem(3, 1L)))},
          {"presentation", presentation_to_json(jackson(4, 1, CycElem(4, 2L)))},
          {"fibre", class_json(classify_fibre(jackson(3, 1, CycElem(3, 1L)), {CycElem(3), CycElem(3, 1L), CycElem(3, 1L)}))}};
}

}  // namespace

Report property_suite() {
  Report R;
  R.command = "property-suite";
  run(R, "property.field_axioms", field_axioms);
  run(R, "property.canonical_round_trips", round_trips);
  run(R, "property.nf_linearity", nf_linearity);
  run(R, "property.fibre_associativity", fibre_associativity);
  run(R, "property.report_determinism", [](json& d) {
    std::string a = determinism_sample().dump(), b = determinism_sample().dump();
    d["bytes"] = a.size();
    return a == b;
  });
  return R;
}

Report regression_report() {
  Report R;
  R.command = "report --paper-regression";
  cyclotomic_fixtures(R);
  ncalg_fixtures(R);
  homlie_fixtures(R);
  algebra_fixtures(R);
  fibre_fixtures(R);
  centre_fixtures(R);
  module_fixtures(R);
  ext_fixtures(R);
  Report P = property_suite();
  for (auto& c : P.checks) R.checks.push_back(std::move(c));
  return R;
}

}  // namespace kwj
