// kwj command-line front end. Every subcommand maps flags to one library call and prints a JSON report.
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kwj/algebras.hpp"
#include "kwj/centre.hpp"
#include "kwj/cyclotomic.hpp"
#include "kwj/ext.hpp"
#include "kwj/findim.hpp"
#include "kwj/homlie.hpp"
#include "kwj/modules.hpp"
#include "kwj/ncalg.hpp"
#include "kwj/report.hpp"

using nlohmann::json;
using namespace kwj;

namespace {

// Usage or input error: exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
  json extra = json::object();
};

struct Opts {
  unsigned field_order = 0;
  std::string family = "jackson";
  unsigned n = 3;
  int r = 1;
  std::string x = "1";

  unsigned order() const { return field_order ? lcm_u(field_order, n) : n; }
};

CycElem literal(const std::string& flag, const std::string& text, unsigned order) {
  try {
    return CycElem::parse(text, order);
  } catch (const ParseError& e) {
    UsageError u(flag + ": " + e.what());
    u.extra = {{"flag", flag}, {"literal", text}, {"position", e.position()}};
    throw u;
  }
}

std::vector<CycElem> literal_list(const std::string& flag, const std::string& text, unsigned order) {
  std::vector<CycElem> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(literal(flag, item, order));
  return out;
}

json strs(const std::vector<CycElem>& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(c.str());
  return a;
}

json algebra_params(const Opts& o) {
  return {{"family", o.family}, {"n", o.n}, {"r", o.r}, {"x", o.x}, {"field_order", o.order()}};
}

Presentation presentation(const Opts& o) {
  return named_presentation(o.family, o.n, o.r, literal("--x", o.x, o.order()));
}

json overlaps_json(const std::vector<Overlap>& ov, const Presentation& p) {
  json a = json::array();
  for (const auto& o : ov) a.push_back({{"word", o.word}, {"difference", o.difference.str(p.sys->generator_names())}});
  return a;
}

json polys_json(const std::vector<NcPoly>& ps, const Presentation& p) {
  json a = json::array();
  for (const auto& q : ps) a.push_back(q.str(p.sys->generator_names()));
  return a;
}

Report cmd_algebra(const Opts& o, const std::string& verify) {
  Report R;
  R.command = "algebra build";
  R.params = algebra_params(o);
  R.params["verify"] = verify;
  Presentation p = presentation(o);
  R.data["presentation"] = presentation_to_json(p);
  CycElem x = literal("--x", o.x, o.order());
  if (verify == "pbw") {
    auto ov = diamond_check(p);
    R.add("pbw", ov.empty(), {{"overlaps", overlaps_json(ov, p)}});
  } else if (verify == "iso") {
    IsoReport iso = jackson_iso_check(o.n, o.r, x);
    R.add("iso", iso.ok, {{"images", polys_json(iso.images, jackson(o.n, o.r, x))}});
  } else if (verify == "downup") {
    DownUpReport du = verify_downup(o.n, o.r, x);
    if (!du.applicable)
      R.skip("downup", {{"reason", "zeta^{2r} = 1"}});
    else
      R.add("downup", du.ok,
            {{"assignment", du.assignment}, {"a_read_as", "x"}, {"defects", polys_json(du.defects, jackson(o.n, o.r, x))}});
  }
  return R;
}

Report cmd_pbw(const Opts& o) {
  Report R;
  R.command = "pbw";
  R.params = algebra_params(o);
  Presentation p = presentation(o);
  auto ov = diamond_check(p);
  R.add("pbw", ov.empty(), {{"overlaps", overlaps_json(ov, p)}, {"rules", p.sys->rules().size()}});
  return R;
}

Report cmd_homlie(const Opts& o, const std::string& kind, const std::string& q_text, const std::string& a_text,
                  const std::vector<std::size_t>& probe) {
  Report R;
  R.command = "homlie";
  R.params = algebra_params(o);
  R.params["kind"] = kind;
  HomLieAlgebra h;
  if (kind == "infinitesimal") {
    R.params["q"] = q_text;
    R.params["a"] = a_text;
    h = infinitesimal_homlie(o.n, literal("--q", q_text, o.order()), literal("--a", a_text, o.order()));
  } else if (kind == "kummerwitt") {
    h = kummer_witt_homlie(o.n, o.r, literal("--x", o.x, o.order()));
  } else {
    throw UsageError("--kind must be infinitesimal or kummerwitt");
  }
  R.data["algebra"] = homlie_to_json(h);
  R.add("antisymmetry", check_antisymmetry(h));
  json defects = json::array();
  auto ds = check_hom_jacobi(h);
  for (const auto& d : ds) defects.push_back({{"triple", {d.i, d.j, d.k}}, {"defect", strs(d.defect)}});
  R.add("hom_jacobi", ds.empty(), {{"defects", defects}});
  if (!probe.empty()) {
    if (probe.size() != 3 || probe[0] >= h.dim || probe[1] >= h.dim || probe[2] >= h.dim)
      throw UsageError("--probe needs three basis indices below the dimension");
    R.data["jacobi_probe"] = {{"triple", probe}, {"value", strs(jacobi_probe(h, probe[0], probe[1], probe[2]))}};
  }
  return R;
}

json centre_params_json(const CentreParams& cp) {
  return {{"n", cp.n}, {"r", cp.r}, {"l", cp.l}, {"t", cp.t}, {"a_exp", cp.a_exp ? json(*cp.a_exp) : json(nullptr)}};
}

Report cmd_centre(const Opts& o) {
  Report R;
  R.command = "centre";
  R.params = algebra_params(o);
  if (o.family != "jackson") throw UsageError("centre supports --family jackson only");
  CycElem x = literal("--x", o.x, o.order());
  CentreParams cp = centre_params(o.n, o.r);
  CentreReport c = verify_centre(jackson(o.n, o.r, x), cp);
  R.data["params"] = centre_params_json(cp);
  json gens = json::array();
  for (const auto& g : c.checks) gens.push_back({{"name", g.name}, {"central", g.central}});
  R.data["generator_checks"] = gens;
  R.add("generator_checks", c.ok, {{"powers_central", c.powers_central}, {"w_central", c.w_central}});
  BellSmithReport b = bell_smith_check(o.n, o.r, x);
  R.data["bell_smith"] = {{"a", b.a.str()},
                          {"b", b.b.str()},
                          {"sigma_w_is_e2e1", b.sigma_w_is_e2e1},
                          {"twisted_e1", b.twisted_e1},
                          {"twisted_e2", b.twisted_e2},
                          {"closed_form", b.closed_form},
                          {"order", b.order ? json(*b.order) : json(nullptr)},
                          {"order_is_l", b.order_is_l}};
  R.add("bell_smith", b.ok());
  PresentationIdentityReport pi = centre_presentation_check(o.n, o.r);
  R.data["presentation_identity"] = {
      {"k_max", pi.k_max},
      {"w_powers", pi.w_powers},
      {"u3_relation", pi.u3_relation ? json(*pi.u3_relation) : json(nullptr)},
      {"t_equals_l", pi.t_equals_l}};
  R.add("w_powers", pi.w_powers);
  if (pi.u3_relation)
    R.add("u3_relation", *pi.u3_relation);
  else
    R.skip("u3_relation", {{"reason", "a_exp undefined"}});
  return R;
}

Report cmd_normal(const Opts& o, const std::string& a0, const std::string& a1, const std::string& a2) {
  Report R;
  R.command = "normal";
  R.params = algebra_params(o);
  R.params["a"] = {a0, a1, a2};
  unsigned ord = o.order();
  CycElem x = literal("--x", o.x, ord);
  VariantResolution v =
      resolve_omega(o.n, o.r, x, {literal("--a0", a0, ord), literal("--a1", a1, ord), literal("--a2", a2, ord)});
  Presentation J = jackson(o.n, o.r, x);
  R.data["tried"] = v.tried;
  R.data["zero_defect"] = v.zero_defect;
  R.data["variant"] = v.resolved.variant;
  R.data["omega"] = v.resolved.omega.str(J.sys->generator_names());
  R.data["gamma"] = strs({v.resolved.gamma_diag.begin(), v.resolved.gamma_diag.end()});
  R.add("normal", v.ok(), {{"defects", polys_json(v.resolved.defects, J)}});
  if (v.ok()) {
    CentralImage ci = omega_central_image(o.n, o.r, x, v.resolved.coeffs, v.resolved.variant);
    R.data["central_image"] = ci.quadric.str();
  }
  return R;
}

json class_json(const FibreClass& c) {
  return {{"kind", to_string(c.kind)},    {"dim", c.dim},
          {"radical_dim", c.radical_dim}, {"semisimple_dim", c.semisimple_dim},
          {"centre_dim", c.centre_dim},   {"quotient_centre_dim", c.quotient_centre_dim}};
}

Report cmd_fibre(const Opts& o, const std::string& chr, unsigned N) {
  Report R;
  R.command = "fibre";
  R.params = algebra_params(o);
  R.params["char"] = chr;
  R.params["N"] = N;
  Presentation p = presentation(o);
  std::vector<CycElem> vals = literal_list("--char", chr, o.order());
  if (vals.size() != static_cast<std::size_t>(p.generators()))
    throw UsageError("--char needs " + std::to_string(p.generators()) + " comma-separated values");
  FibreClass c = classify_fibre(p, vals, N);
  R.data["classification"] = class_json(c);
  R.add("classified", true);
  return R;
}

json module_data(const Opts& o, const Presentation& J, const Representation& rep) {
  json d;
  d["algebra"] = algebra_params(o);
  d["rep"] = rep_to_json(rep);
  d["simplicity"] = to_string(simplicity(rep));
  try {
    d["central_character"] = strs(central_character(J, rep, centre_params(o.n, o.r)).values);
  } catch (const std::runtime_error& e) {
    d["central_character"] = nullptr;
    d["central_character_error"] = e.what();
  }
  return d;
}

Report cmd_module_torsion(const Opts& o, unsigned d, const std::string& a_text) {
  Report R;
  R.command = "module torsion";
  R.params = algebra_params(o);
  R.params["d"] = d;
  R.params["a"] = a_text;
  CycElem x = literal("--x", o.x, o.order());
  std::optional<CycElem> a;
  if (!a_text.empty()) a = literal("--a", a_text, o.order());
  Presentation J = jackson(o.n, o.r, x);
  Representation rep = torsion_module(o.n, o.r, d, x, a);
  R.data = module_data(o, J, rep);
  TorsionMinimality tm = torsion_minimality(o.n, o.r, x, rep.gens[0](0, 0));
  R.data["minimality"] = {{"d", tm.d ? json(*tm.d) : json(nullptr)}, {"vacuous", tm.vacuous}, {"free_at_d", tm.free_at_d}};
  R.add("verify_rep", verify_rep(J, rep).ok);
  return R;
}

Report cmd_module_torsionfree(const Opts& o, const std::string& a, const std::string& b, const std::string& c) {
  Report R;
  R.command = "module torsionfree";
  R.params = algebra_params(o);
  R.params["a"] = a;
  R.params["b"] = b;
  R.params["c"] = c;
  unsigned ord = o.order();
  CycElem x = literal("--x", o.x, ord);
  Presentation J = jackson(o.n, o.r, x);
  Representation rep = torsion_free_module(o.n, o.r, x, literal("--a", a, ord), literal("--b", b, ord), literal("--c", c, ord));
  R.data = module_data(o, J, rep);
  R.add("verify_rep", verify_rep(J, rep).ok);
  return R;
}

json read_json_file(const std::string& flag, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError(flag + ": cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

// Accepts either a bare representation or the output of `module`.
Representation rep_from_file(const std::string& flag, const std::string& path, unsigned order) {
  json j = read_json_file(flag, path);
  if (j.contains("data") && j["data"].contains("rep")) j = j["data"]["rep"];
  try {
    return rep_from_json(j, lcm_u(order, j.value("order", 1u)));
  } catch (const ParseError& e) {
    UsageError u(flag + ": " + e.what());
    u.extra = {{"flag", flag}, {"position", e.position()}};
    throw u;
  } catch (const json::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

Report cmd_ext(const Opts& o, const std::string& m_path, const std::string& n_path) {
  Report R;
  R.command = "ext";
  R.params = algebra_params(o);
  R.params["m"] = m_path;
  R.params["n"] = n_path;
  Presentation J = presentation(o);
  Representation M = rep_from_file("--m", m_path, o.order()), N = rep_from_file("--n", n_path, o.order());
  if (M.gens.size() != static_cast<std::size_t>(J.generators()) || N.gens.size() != M.gens.size())
    throw UsageError("module matrices do not match the generators of the algebra");
  R.add("verify_m", verify_rep(J, M).ok);
  R.add("verify_n", verify_rep(J, N).ok);
  ExtResult e = ext1(J, M, N);
  R.data = ext_to_json(e);
  OracleReport orc = ext1_oracle(J, M, N, e);
  R.add("oracle", orc.ok(),
        {{"basis_extensions", orc.basis_extensions},
         {"basis_independent", orc.basis_independent},
         {"inner_split", orc.inner_split}});
  return R;
}

Report cmd_ext_sweep(const Opts& o, bool paper_props) {
  Report R;
  R.command = "ext sweep";
  R.params = {{"n", o.n}, {"r", o.r}, {"x", o.x}, {"paper_props", paper_props}};
  SweepTable t = ext1_sweep_one_dim(o.n, o.r, literal("--x", o.x, o.order()));
  R.data["one_dim"] = sweep_to_json(t);
  for (const auto& row : t.rows) {
    std::string name = row.family + ": " + row.label + " [" + row.m[1].str() + "," + row.m[2].str() + " | " +
                       row.n[0].str() + "," + row.n[1].str() + "," + row.n[2].str() + "]";
    R.add(name, row.matches() && row.oracle, {{"claimed", row.claimed}, {"dim", row.dim}, {"inner_dim", row.inner_dim}});
  }
  if (paper_props) {
    TableReport tr = ext1_family_table();
    json chars = json::array();
    for (const auto& c : tr.characters) chars.push_back(strs(c));
    R.data["family_table"] = {{"dims", tr.dims},
                              {"homs", tr.homs},
                              {"characters", chars},
                              {"control_dim", tr.control_dim},
                              {"control_character", strs(tr.control_character)}};
    std::vector<std::vector<std::size_t>> claimed{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}};
    R.add("family_table", tr.dims == claimed && tr.oracle, {{"claimed", claimed}, {"dims", tr.dims}});
    R.add("family_other_character", tr.control_dim == 0 && tr.oracle);
    MullerReport m = muller_sampling();
    R.add("muller_vanishing", m.ok(),
          {{"unequal_pairs", m.unequal_pairs}, {"unequal_nonzero", m.unequal_nonzero}, {"equal_pairs", m.equal_pairs},
           {"equal_nonzero", m.equal_nonzero}});
  }
  return R;
}

void add_algebra_flags(CLI::App* c, Opts& o) {
  c->add_option("--family", o.family, "jackson, jackson_prime, kummerwitt, quantum_plane, quantum_a3, quantum_weyl");
  c->add_option("--n", o.n, "order of the root of unity")->check(CLI::Range(1u, 64u));
  c->add_option("--r", o.r, "level r")->check(CLI::Range(0, 63));
  c->add_option("--x", o.x, "parameter x (cyclotomic literal)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kwj: exact cyclotomic algebra kernel"};
  app.require_subcommand(1);
  app.fallthrough();
  Opts o;
  bool pretty = false, json_out = true;
  app.add_flag("--json", json_out, "JSON output (default)");
  app.add_flag("--pretty", pretty, "indented JSON");
  app.add_option("--field-order", o.field_order, "ambient cyclotomic order for literals (default --n)");

  auto* algebra = app.add_subcommand("algebra", "build a named presentation");
  algebra->require_subcommand(1);
  auto* build = algebra->add_subcommand("build", "emit the presentation JSON");
  std::string verify;
  add_algebra_flags(build, o);
  build->add_option("--verify", verify, "pbw, iso or downup")->check(CLI::IsMember({"pbw", "iso", "downup"}));

  auto* pbw = app.add_subcommand("pbw", "diamond-lemma check");
  add_algebra_flags(pbw, o);

  auto* homlie = app.add_subcommand("homlie", "hom-Lie bracket tables and identities");
  std::string kind = "infinitesimal", q_text = "z", a_text = "1";
  std::vector<std::size_t> probe;
  add_algebra_flags(homlie, o);
  homlie->add_option("--kind", kind, "infinitesimal or kummerwitt");
  homlie->add_option("--q", q_text, "q for the infinitesimal family");
  homlie->add_option("--a", a_text, "a for the infinitesimal family");
  homlie->add_option("--probe", probe, "plain-Jacobi probe on three basis indices")->delimiter(',');

  auto* centre = app.add_subcommand("centre", "centre generators, Bell-Smith automorphism, presentation identity");
  add_algebra_flags(centre, o);

  auto* normal = app.add_subcommand("normal", "normal element variant resolution");
  std::string a0 = "1", a1 = "1", a2 = "1";
  add_algebra_flags(normal, o);
  normal->add_option("--a0", a0, "coefficient a0");
  normal->add_option("--a1", a1, "coefficient a1");
  normal->add_option("--a2", a2, "coefficient a2");

  auto* fibre = app.add_subcommand("fibre", "classify a fibre over the central subalgebra");
  std::string chr;
  unsigned N = 0;
  add_algebra_flags(fibre, o);
  fibre->add_option("--char", chr, "comma-separated values of e_i^N")->required();
  fibre->add_option("--N", N, "exponent N (default: ambient order)");

  auto* module = app.add_subcommand("module", "torsion and torsion-free modules");
  module->require_subcommand(1);
  auto* torsion = module->add_subcommand("torsion", "torsion module of dimension d");
  unsigned d = 1;
  std::string ma, mb, mc;
  add_algebra_flags(torsion, o);
  torsion->add_option("--d", d, "dimension d")->required()->check(CLI::Range(1u, 64u));
  torsion->add_option("--a", ma, "a (required when free)");
  auto* torsionfree = module->add_subcommand("torsionfree", "torsion-free module");
  add_algebra_flags(torsionfree, o);
  torsionfree->add_option("--a", ma, "e0 eigenvalue a")->required();
  torsionfree->add_option("--b", mb, "parameter b")->required();
  torsionfree->add_option("--c", mc, "corner entry c (nonzero)")->required();

  auto* ext = app.add_subcommand("ext", "Ext^1 between two representations");
  std::string m_path, n_path;
  ext->add_option("--m", m_path, "representation JSON of M");
  ext->add_option("--n", n_path, "representation JSON of N");
  ext->add_option("--family", o.family, "algebra family for M and N");
  ext->add_option("--alg-n", o.n, "order of the algebra")->check(CLI::Range(1u, 64u));
  ext->add_option("--r", o.r, "level r")->check(CLI::Range(0, 63));
  ext->add_option("--x", o.x, "parameter x (cyclotomic literal)");
  auto* sweep = ext->add_subcommand("sweep", "deterministic one-dimensional sweep");
  bool paper_props = false;
  Opts so;
  add_algebra_flags(sweep, so);
  sweep->add_flag("--paper-props", paper_props, "also replay the family table and the vanishing sampling");

  auto* report = app.add_subcommand("report", "regression replay");
  bool regression = false;
  report->add_flag("--paper-regression", regression, "replay every fixture and the property suite")->required();

  std::string command;
  for (int i = 1; i < argc; ++i) command += (i > 1 ? " " : "") + std::string(argv[i]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  auto emit = [&](const json& j) { std::cout << (pretty ? j.dump(2) : j.dump()) << "\n"; };
  try {
    Report R;
    if (*build)
      R = cmd_algebra(o, verify);
    else if (*pbw)
      R = cmd_pbw(o);
    else if (*homlie)
      R = cmd_homlie(o, kind, q_text, a_text, probe);
    else if (*centre)
      R = cmd_centre(o);
    else if (*normal)
      R = cmd_normal(o, a0, a1, a2);
    else if (*fibre)
      R = cmd_fibre(o, chr, N);
    else if (*torsion)
      R = cmd_module_torsion(o, d, ma);
    else if (*torsionfree)
      R = cmd_module_torsionfree(o, ma, mb, mc);
    else if (*sweep) {
      so.field_order = o.field_order;
      R = cmd_ext_sweep(so, paper_props);
    } else if (*ext) {
      if (m_path.empty() || n_path.empty()) throw UsageError("ext needs --m and --n, or the sweep subcommand");
      R = cmd_ext(o, m_path, n_path);
    } else if (*report)
      R = regression_report();
    json j = R.to_json();
    emit(j);
    return R.exit_code();
  } catch (const UsageError& e) {
    emit({{"schema", kReportSchema}, {"command", command}, {"error", e.what()}, {"details", e.extra}});
  } catch (const std::invalid_argument& e) {
    emit({{"schema", kReportSchema}, {"command", command}, {"error", e.what()}});
  } catch (const std::domain_error& e) {
    emit({{"schema", kReportSchema}, {"command", command}, {"error", e.what()}});
  }
  return 2;
}
