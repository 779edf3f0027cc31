#include "kwj/modules.hpp"

#include <numeric>
#include <stdexcept>

#include "kwj/algebras.hpp"

namespace kwj {

namespace {

// Incremental row echelon basis used for span closures.
class Echelon {
 public:
  explicit Echelon(std::size_t len) : len_(len) {}

  // Adds v when it is independent of the current rows.
  bool add(Vec v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const CycElem& f = v[piv_[r]];
      if (f.is_zero()) continue;
      CycElem s = f;
      for (std::size_t j = 0; j < len_; ++j)
        if (!rows_[r][j].is_zero()) v[j] -= s * rows_[r][j];
    }
    std::size_t p = 0;
    while (p < len_ && v[p].is_zero()) ++p;
    if (p == len_) return false;
    CycElem inv = v[p].inv();
    for (auto& e : v) e *= inv;
    for (auto& row : rows_) {
      CycElem f = row[p];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < len_; ++j)
        if (!v[j].is_zero()) row[j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    piv_.push_back(p);
    return true;
  }
  std::size_t size() const { return rows_.size(); }

 private:
  std::size_t len_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> piv_;
};

unsigned rep_order(std::initializer_list<CycElem> xs, unsigned n) {
  unsigned o = n;
  for (const auto& x : xs) o = lcm_u(o, x.order());
  return o;
}

Vec flatten(const Matrix& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

Matrix mat_pow(const Matrix& m, unsigned k) {
  Matrix out = Matrix::identity(m.rows(), m.order());
  for (unsigned i = 0; i < k; ++i) out = out * m;
  return out;
}

std::optional<CycElem> scalar_value(const Matrix& m) {
  if (m.rows() == 0) return std::nullopt;
  CycElem s = m(0, 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != (i == j ? s : CycElem(m.order()))) return std::nullopt;
  return s;
}

// Dimension of the submodule generated by the standard basis vector j.
std::size_t cyclic_dim(const Representation& rep, std::size_t j) {
  Echelon ech(rep.dim);
  Vec v(rep.dim, CycElem(rep.order));
  v[j] = CycElem(rep.order, 1L);
  std::vector<Vec> frontier{v};
  ech.add(v);
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& u : frontier)
      for (const auto& g : rep.gens) {
        Vec w(rep.dim, CycElem(rep.order));
        for (std::size_t i = 0; i < rep.dim; ++i)
          for (std::size_t k = 0; k < rep.dim; ++k)
            if (!g(i, k).is_zero() && !u[k].is_zero()) w[i] += g(i, k) * u[k];
        if (ech.add(w)) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return ech.size();
}

bool diagonal_distinct(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && !m(i, j).is_zero()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.rows(); ++j)
      if (m(i, i) == m(j, j)) return false;
  return true;
}

}  // namespace

RepCheck verify_rep(const Presentation& p, const Representation& rep) {
  if (rep.gens.size() != static_cast<std::size_t>(p.generators()))
    throw std::invalid_argument("representation has the wrong number of generators");
  RepCheck out;
  out.ok = true;
  for (const auto& rel : relations(*p.sys, p.order)) {
    Matrix d = eval_rep(rel, rep);
    out.ok = out.ok && d.is_zero();
    out.defects.push_back(std::move(d));
  }
  return out;
}

Representation point_rep(const std::array<CycElem, 3>& pt) {
  Representation rep;
  rep.order = rep_order({pt[0], pt[1], pt[2]}, 1);
  rep.dim = 1;
  for (const auto& v : pt) {
    Matrix m(1, 1, rep.order);
    m(0, 0) = v.embed(rep.order);
    rep.gens.push_back(m);
  }
  return rep;
}

bool one_dim_points(unsigned n, int r, const CycElem& x, const std::array<CycElem, 3>& pt) {
  const auto& [a0, b, c] = pt;
  CycElem z2r = zeta(n, 2L * r);
  if (!z2r.is_one()) {
    if (a0.is_zero()) return b * c == x;
    if (!b.is_zero() || !c.is_zero()) return false;
    return x.is_zero() || a0 == z2r - CycElem(n, 1L);
  }
  // zeta^{2r} = 1: the last relation reads x e0 = 0
  if (a0.is_zero()) return true;
  // zeta^r = 1: the first two relations are commutators
  if (zeta(n, r).is_one()) return x.is_zero();
  // zeta^r = -1: e0 e1 and e0 e2 vanish
  return x.is_zero() && b.is_zero() && c.is_zero();
}

CycElem psi_torsion(unsigned n, int r, const CycElem& x, const CycElem& a, unsigned i) {
  CycElem zr = zeta(n, r);
  return x * (a * q_int(i, zr) * zeta(n, long(r) * (long(i) - 1)) + (CycElem(n, 1L) - zeta(n, 2L * r * i)));
}

CycElem psi_torsion_free(unsigned n, int r, const CycElem& x, const CycElem& a, const CycElem& b, unsigned i) {
  CycElem one(n, 1L), zr = zeta(n, r);
  if (zr.is_one() && !x.is_zero()) throw std::invalid_argument("psi^tf needs zeta^r != 1 when x != 0");
  CycElem lin = x.is_zero() ? CycElem(n) : x * (a * zeta(n, long(r) * (long(i) - 1)) / (one - zr) + one);
  return zeta(n, 2L * r * (long(i) - 1)) * b + lin;
}

std::optional<CycElem> torsion_forced_a(unsigned n, int r, unsigned d) {
  CycElem qd = q_int(d, zeta(n, r));
  if (qd.is_zero()) return std::nullopt;
  return -((CycElem(n, 1L) - zeta(n, 2L * r * d)) / (qd * zeta(n, long(r) * (long(d) - 1))));
}

TorsionMinimality torsion_minimality(unsigned n, int r, const CycElem& x, const CycElem& a) {
  TorsionMinimality tm;
  if (x.is_zero()) {
    tm.vacuous = true;
    tm.d = 1;
    return tm;
  }
  unsigned ord = r == 0 ? 1 : n / std::gcd(n, static_cast<unsigned>(r));
  CycElem one(n, 1L);
  for (unsigned d = 1; d <= ord; ++d) {
    if (psi_torsion(n, r, one, a, d).is_zero()) {
      tm.d = d;
      tm.free_at_d = q_int(d, zeta(n, r)).is_zero();
      return tm;
    }
  }
  return tm;
}

Representation torsion_module(unsigned n, int r, unsigned d, const CycElem& x, std::optional<CycElem> a) {
  if (d == 0) throw std::invalid_argument("torsion module needs d >= 1");
  if (!x.is_zero()) {
    auto forced = torsion_forced_a(n, r, d);
    if (forced) {
      if (a && *a != *forced)
        throw std::invalid_argument("a = " + a->str() + " is inconsistent with d; the condition forces a = " +
                                    forced->str());
      a = *forced;
    }
    if (!a) throw std::invalid_argument("a is free at this d and must be supplied");
    auto tm = torsion_minimality(n, r, x, *a);
    if (!tm.d || *tm.d != d)
      throw std::invalid_argument("d = " + std::to_string(d) + " is not minimal for a; minimal d' = " +
                                  (tm.d ? std::to_string(*tm.d) : std::string("none")));
  } else if (!a) {
    throw std::invalid_argument("a must be supplied when x = 0");
  }
  Representation rep;
  rep.order = rep_order({x, *a}, n);
  rep.dim = d;
  unsigned o = rep.order;
  Matrix e0(d, d, o), e1(d, d, o), e2(d, d, o);
  for (unsigned i = 0; i < d; ++i) {
    e0(i, i) = (zeta(n, long(r) * i) * *a).embed(o);
    if (i + 1 < d) e1(i + 1, i) = CycElem(o, 1L);
    if (i >= 1) e2(i - 1, i) = psi_torsion(n, r, x, *a, i).embed(o);
  }
  rep.gens = {e0, e1, e2};
  return rep;
}

unsigned tau_orbit(unsigned n, int r, const CycElem& a) {
  if (a.is_zero() || r == 0) return 1;
  return n / std::gcd(n, static_cast<unsigned>(r));
}

unsigned torsion_free_size(unsigned n, int r, const CycElem& a, const CycElem& b) {
  unsigned d = tau_orbit(n, r, a);
  if (b.is_zero()) return d;
  unsigned l = 1;
  if (r != 0)
    while ((2 * l * static_cast<unsigned>(r)) % n) ++l;
  return std::lcm(d, l);
}

Representation torsion_free_module(unsigned n, int r, const CycElem& x, const CycElem& a, const CycElem& b,
                                   const CycElem& c) {
  if (c.is_zero()) throw std::invalid_argument("torsion-free module needs c != 0");
  unsigned s = torsion_free_size(n, r, a, b);
  Representation rep;
  rep.order = rep_order({x, a, b, c}, n);
  rep.dim = s;
  unsigned o = rep.order;
  Matrix e0(s, s, o), e1(s, s, o), e2(s, s, o);
  CycElem cinv = c.inv().embed(o);
  for (unsigned i = 0; i < s; ++i) {
    e0(i, i) = (zeta(n, long(r) * i) * a).embed(o);
    if (i + 1 < s) e1(i + 1, i) = CycElem(o, 1L);
    if (i >= 1) e2(i - 1, i) = psi_torsion_free(n, r, x, a, b, i).embed(o);
  }
  e1(0, s - 1) += c.embed(o);
  e2(s - 1, 0) += cinv * psi_torsion_free(n, r, x, a, b, s).embed(o);
  rep.gens = {e0, e1, e2};
  return rep;
}

Representation torsion_free_module(unsigned n, int r, const CycElem& x, const CycElem& a, const CycElem& b,
                                   const CycElem& c, TorsionFreeVariant variant) {
  if ((variant == TorsionFreeVariant::BZero) != b.is_zero())
    throw std::invalid_argument("variant does not match b");
  return torsion_free_module(n, r, x, a, b, c);
}

CentralCharacter central_character(const Presentation& p, const Representation& rep, const CentreParams& cp) {
  CentralCharacter cc;
  auto push = [&](const Matrix& m, const std::string& name) {
    auto s = scalar_value(m);
    if (!s) throw std::runtime_error(name + " does not act by a scalar");
    cc.values.push_back(*s);
  };
  for (int i = 0; i < 3; ++i) push(mat_pow(rep.gens[i], cp.l), "e" + std::to_string(i) + "^" + std::to_string(cp.l));
  if (p.x.is_zero()) push(mat_pow(rep.gens[1] * rep.gens[2], cp.t), "(e1 e2)^" + std::to_string(cp.t));
  return cc;
}

std::string to_string(Simplicity s) {
  switch (s) {
    case Simplicity::AbsolutelySimple:
      return "AbsolutelySimple";
    case Simplicity::SimpleByEigenanalysis:
      return "SimpleByEigenanalysis";
    case Simplicity::NotSimple:
      return "NotSimple";
    default:
      return "Undetermined";
  }
}

std::size_t burnside_span(const Representation& rep) {
  Echelon ech(rep.dim * rep.dim);
  Matrix id = Matrix::identity(rep.dim, rep.order);
  ech.add(flatten(id));
  std::vector<Matrix> frontier{id};
  while (!frontier.empty()) {
    std::vector<Matrix> next;
    for (const auto& m : frontier)
      for (const auto& g : rep.gens) {
        Matrix p = g * m;
        if (ech.add(flatten(p))) next.push_back(std::move(p));
      }
    frontier = std::move(next);
  }
  return ech.size();
}

Simplicity simplicity(const Representation& rep) {
  if (rep.dim == 0) return Simplicity::NotSimple;
  if (burnside_span(rep) == rep.dim * rep.dim) return Simplicity::AbsolutelySimple;
  for (std::size_t j = 0; j < rep.dim; ++j)
    if (cyclic_dim(rep, j) < rep.dim) return Simplicity::NotSimple;
  // A generator with distinct diagonal entries makes every submodule a sum of coordinate lines.
  for (const auto& g : rep.gens)
    if (diagonal_distinct(g)) return Simplicity::SimpleByEigenanalysis;
  return Simplicity::Undetermined;
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (a.gens.size() != b.gens.size()) throw std::invalid_argument("direct sum of different presentations");
  Representation s;
  s.order = lcm_u(a.order, b.order);
  s.dim = a.dim + b.dim;
  for (std::size_t g = 0; g < a.gens.size(); ++g) {
    Matrix m(s.dim, s.dim, s.order);
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j) m(i, j) = a.gens[g](i, j).embed(s.order);
    for (std::size_t i = 0; i < b.dim; ++i)
      for (std::size_t j = 0; j < b.dim; ++j) m(a.dim + i, a.dim + j) = b.gens[g](i, j).embed(s.order);
    s.gens.push_back(std::move(m));
  }
  return s;
}

Representation conjugate(const Representation& rep, const Matrix& g) {
  Representation out = rep;
  out.order = lcm_u(rep.order, g.order());
  Matrix ge = g.embed(out.order), gi = ge.inverse();
  for (auto& m : out.gens) m = ge * m.embed(out.order) * gi;
  return out;
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const nlohmann::json& j, unsigned order) {
  std::size_t rows = j.size(), cols = rows ? j[0].size() : 0;
  Matrix m(rows, cols, order);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j[i].size() != cols) throw std::invalid_argument("ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = CycElem::parse(j[i][k].get<std::string>(), order);
  }
  return m;
}

nlohmann::json rep_to_json(const Representation& rep) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : rep.gens) gens.push_back(matrix_to_json(g));
  return {{"order", rep.order}, {"dim", rep.dim}, {"matrices", gens}};
}

Representation rep_from_json(const nlohmann::json& j, unsigned order) {
  Representation rep;
  rep.order = lcm_u(order, j.value("order", order));
  for (const auto& g : j.at("matrices")) rep.gens.push_back(matrix_from_json(g, rep.order));
  rep.dim = rep.gens.empty() ? 0 : rep.gens[0].rows();
  return rep;
}

}  // namespace kwj
