#include "kwj/ext.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "kwj/algebras.hpp"
#include "kwj/findim.hpp"

namespace kwj {

namespace {

Matrix word_matrix(const Representation& rep, const Word& w, std::size_t from, std::size_t to) {
  Matrix m = Matrix::identity(rep.dim, rep.order);
  for (std::size_t k = from; k < to; ++k) m = m * rep.gens[w[k]];
  return m;
}

Vec to_vec(const Derivation& D, unsigned order) {
  Vec v;
  for (const auto& m : D)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j).embed(order));
  return v;
}

Derivation from_vec(const Vec& v, std::size_t g, std::size_t rows, std::size_t cols, unsigned order) {
  Derivation D;
  std::size_t k = 0;
  for (std::size_t s = 0; s < g; ++s) {
    Matrix m(rows, cols, order);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[k++];
    D.push_back(std::move(m));
  }
  return D;
}

Matrix unit_matrix(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j, unsigned order) {
  Matrix m(rows, cols, order);
  m(i, j) = CycElem(order, 1L);
  return m;
}

std::vector<Vec> inner_vectors(const Representation& M, const Representation& N, unsigned order) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < N.dim; ++i)
    for (std::size_t j = 0; j < M.dim; ++j)
      out.push_back(to_vec(inner_derivation(M, N, unit_matrix(N.dim, M.dim, i, j, order)), order));
  return out;
}

// Runs f(0..count-1) on a worker pool; the first exception is rethrown.
template <class F>
void parallel_for(std::size_t count, F f) {
  std::size_t workers = std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto work = [&] {
    for (std::size_t k; (k = next++) < count;) {
      try {
        f(k);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

unsigned common_order(const Presentation& p, const Representation& M, const Representation& N) {
  return lcm_u(lcm_u(p.order, M.order), N.order);
}

}  // namespace

std::size_t hom_dim(const Representation& M, const Representation& N) {
  if (M.gens.size() != N.gens.size()) throw std::invalid_argument("modules over different presentations");
  unsigned o = lcm_u(M.order, N.order);
  std::size_t hom = N.dim * M.dim;
  Matrix sys(M.gens.size() * hom, hom, o);
  for (std::size_t g = 0; g < M.gens.size(); ++g)
    for (std::size_t i = 0; i < N.dim; ++i)
      for (std::size_t j = 0; j < M.dim; ++j) {
        // unknown X(i, j) enters (X rho_M - rho_N X)(p, q)
        for (std::size_t q = 0; q < M.dim; ++q) sys(g * hom + i * M.dim + q, i * M.dim + j) += M.gens[g](j, q);
        for (std::size_t pr = 0; pr < N.dim; ++pr) sys(g * hom + pr * M.dim + j, i * M.dim + j) -= N.gens[g](pr, i);
      }
  return hom - rank(sys);
}

Derivation inner_derivation(const Representation& M, const Representation& N, const Matrix& theta) {
  Derivation D;
  for (std::size_t g = 0; g < M.gens.size(); ++g) D.push_back(N.gens[g] * theta - theta * M.gens[g]);
  return D;
}

Representation extension(const Representation& M, const Representation& N, const Derivation& D) {
  Representation E;
  E.order = lcm_u(M.order, N.order);
  for (const auto& d : D) E.order = lcm_u(E.order, d.order());
  E.dim = N.dim + M.dim;
  for (std::size_t g = 0; g < M.gens.size(); ++g) {
    Matrix m(E.dim, E.dim, E.order);
    for (std::size_t i = 0; i < N.dim; ++i) {
      for (std::size_t j = 0; j < N.dim; ++j) m(i, j) = N.gens[g](i, j).embed(E.order);
      for (std::size_t j = 0; j < M.dim; ++j) m(i, N.dim + j) = D[g](i, j).embed(E.order);
    }
    for (std::size_t i = 0; i < M.dim; ++i)
      for (std::size_t j = 0; j < M.dim; ++j) m(N.dim + i, N.dim + j) = M.gens[g](i, j).embed(E.order);
    E.gens.push_back(std::move(m));
  }
  return E;
}

ExtResult ext1(const Presentation& p, const Representation& M, const Representation& N) {
  std::size_t g = static_cast<std::size_t>(p.generators());
  if (M.gens.size() != g || N.gens.size() != g) throw std::invalid_argument("modules over different presentations");
  unsigned o = common_order(p, M, N);
  std::size_t hom = N.dim * M.dim;
  auto rels = relations(*p.sys, p.order);
  Matrix sys(rels.size() * hom, g * hom, o);
  for (std::size_t r = 0; r < rels.size(); ++r)
    for (const auto& [w, c] : rels[r].terms())
      for (std::size_t k = 0; k < w.size(); ++k) {
        // c rho_N(w[0..k)) D_{w[k]} rho_M(w(k..])
        Matrix A = word_matrix(N, w, 0, k), B = word_matrix(M, w, k + 1, w.size());
        std::size_t base = static_cast<std::size_t>(w[k]) * hom;
        for (std::size_t pr = 0; pr < N.dim; ++pr)
          for (std::size_t i = 0; i < N.dim; ++i) {
            if (A(pr, i).is_zero()) continue;
            CycElem ca = c * A(pr, i);
            for (std::size_t j = 0; j < M.dim; ++j)
              for (std::size_t q = 0; q < M.dim; ++q)
                if (!B(j, q).is_zero()) sys(r * hom + pr * M.dim + q, base + i * M.dim + j) += ca * B(j, q);
          }
      }
  std::vector<Vec> sol = rels.empty() ? std::vector<Vec>{} : nullspace(sys);
  if (rels.empty())
    for (std::size_t k = 0; k < g * hom; ++k) {
      Vec v(g * hom, CycElem(o));
      v[k] = CycElem(o, 1L);
      sol.push_back(v);
    }
  ExtResult res;
  res.solution_dim = sol.size();
  std::vector<Vec> span = row_basis(inner_vectors(M, N, o), g * hom, o);
  res.inner_dim = span.size();
  for (const auto& v : sol) {
    if (in_span(span, v, o)) continue;
    span.push_back(v);
    res.basis.push_back(from_vec(v, g, N.dim, M.dim, o));
  }
  res.dim = res.basis.size();
  if (res.dim + res.inner_dim != res.solution_dim) throw std::logic_error("inner derivations outside the solutions");
  return res;
}

OracleReport ext1_oracle(const Presentation& p, const Representation& M, const Representation& N,
                         const ExtResult& result) {
  OracleReport rep;
  unsigned o = common_order(p, M, N);
  rep.basis_extensions = true;
  for (const auto& D : result.basis)
    rep.basis_extensions = rep.basis_extensions && verify_rep(p, extension(M, N, D)).ok;
  std::size_t len = p.generators() * N.dim * M.dim;
  std::vector<Vec> all = inner_vectors(M, N, o);
  for (const auto& D : result.basis) all.push_back(to_vec(D, o));
  rep.basis_independent = row_basis(all, len, o).size() == result.inner_dim + result.basis.size();
  rep.inner_split = true;
  Derivation zero;
  for (std::size_t gi = 0; gi < M.gens.size(); ++gi) zero.push_back(Matrix(N.dim, M.dim, o));
  Representation split = extension(M, N, zero);
  for (std::size_t i = 0; i < N.dim; ++i)
    for (std::size_t j = 0; j < M.dim; ++j) {
      Matrix theta = unit_matrix(N.dim, M.dim, i, j, o);
      Representation E = extension(M, N, inner_derivation(M, N, theta));
      // [[I, -theta], [0, I]] conjugates the direct sum onto E
      Matrix P = Matrix::identity(N.dim + M.dim, o);
      P(i, N.dim + j) = CycElem(o, -1L);
      Representation C = conjugate(split, P);
      bool same = verify_rep(p, E).ok;
      for (std::size_t gi = 0; gi < E.gens.size(); ++gi) same = same && C.gens[gi] == E.gens[gi];
      rep.inner_split = rep.inner_split && same;
    }
  return rep;
}

bool SweepTable::all_match() const {
  for (const auto& r : rows)
    if (!r.matches()) return false;
  return true;
}

SweepTable ext1_sweep_one_dim(unsigned n, int r, const CycElem& x) {
  SweepTable t;
  t.n = n;
  t.r = r;
  t.x = x;
  CycElem q = zeta(n, r), q2 = zeta(n, 2L * r), zero(n), one(n, 1L);
  if (q.is_one()) throw std::invalid_argument("the sweep needs zeta^r != 1");
  Presentation J = jackson(n, r, x);
  std::string fam = std::string(x.is_zero() ? "x=0" : "x!=0") + (q2.is_one() ? ", q^2=1" : ", q^2!=1");
  auto add = [&](const std::string& label, std::array<CycElem, 3> m, std::array<CycElem, 3> nn, std::size_t claimed) {
    SweepRow row;
    row.family = fam;
    row.label = label;
    row.m = m;
    row.n = nn;
    row.claimed = claimed;
    t.rows.push_back(std::move(row));
  };
  const std::vector<CycElem> bs{CycElem(n, 2L), CycElem(n, 3L)};
  if (!q2.is_one()) {
    if (!x.is_zero()) {
      for (const auto& b : bs) {
        CycElem c = x / b;
        add("b=q e, f=q c", {zero, b, c}, {zero, b / q, q * c}, 1);
        add("b=q^2 e, f=q^2 c", {zero, b, c}, {zero, b / q2, q2 * c}, 1);
        add("b=e, c=f", {zero, b, c}, {zero, b, c}, 1);
        CycElem e = b * CycElem(n, 7L);
        add("otherwise", {zero, b, c}, {zero, e, x / e}, 0);
      }
    } else {
      for (const auto& b : bs) {
        add("b=q^2 e, f=q^2 c", {zero, b, zero}, {zero, b / q2, zero}, 1);
        add("b=q^2 e, f=q^2 c", {zero, zero, b}, {zero, zero, q2 * b}, 1);
        add("otherwise (b=q e, f=q c)", {zero, b, zero}, {zero, b / q, zero}, 0);
        add("otherwise", {zero, b, zero}, {zero, b * CycElem(n, 7L), zero}, 0);
        add("otherwise", {zero, b, zero}, {zero, zero, b}, 0);
      }
      add("b=c=e=f=0", {zero, zero, zero}, {zero, zero, zero}, 2);
    }
  } else {
    for (const auto& b : bs) {
      CycElem c = b + one;
      if (!x.is_zero()) {
        add("equal", {zero, b, c}, {zero, b, c}, 1);
        add("otherwise (-b, -c)", {zero, b, c}, {zero, -b, -c}, 0);
        add("otherwise", {zero, b, c}, {zero, b * CycElem(n, 7L), c}, 0);
      } else {
        add("(b, c)", {zero, b, c}, {zero, b, c}, 1);
        add("(-b, -c)", {zero, b, c}, {zero, -b, -c}, 1);
        add("otherwise (b, -c)", {zero, b, c}, {zero, b, -c}, 0);
        add("otherwise", {zero, b, c}, {zero, b * CycElem(n, 7L), c}, 0);
      }
    }
  }
  parallel_for(t.rows.size(), [&](std::size_t k) {
    SweepRow& row = t.rows[k];
    Representation M = point_rep(row.m), N = point_rep(row.n);
    ExtResult e = ext1(J, M, N);
    row.dim = e.dim;
    row.inner_dim = e.inner_dim;
    row.oracle = ext1_oracle(J, M, N, e).ok();
  });
  return t;
}

TableReport ext1_family_table() {
  const unsigned n = 3;
  CycElem one(n, 1L), z = zeta(n, 1);
  Presentation J = jackson(n, 1, one);
  CentreParams cp = centre_params(n, 1);
  std::vector<Representation> mods;
  TableReport rep;
  for (int i = 0; i < 3; ++i) {
    mods.push_back(torsion_free_module(n, 1, one, CycElem(n), CycElem(n, 2L) * zeta(n, i), z));
    rep.characters.push_back(central_character(J, mods.back(), cp).values);
  }
  rep.oracle = true;
  rep.dims.assign(3, std::vector<std::size_t>(3, 0));
  rep.homs = rep.dims;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      rep.homs[i][j] = hom_dim(mods[i], mods[j]);
      ExtResult e = ext1(J, mods[i], mods[j]);
      rep.dims[i][j] = e.dim;
      rep.oracle = rep.oracle && ext1_oracle(J, mods[i], mods[j], e).ok();
    }
  // u0 = 1, u1 = 1 + z: the point t = 1 of the line (t, t + z, t + 9) in its first two coordinates
  Representation ctl = torsion_free_module(n, 1, one, one, CycElem(n), one + z);
  rep.control_character = central_character(J, ctl, cp).values;
  ExtResult e = ext1(J, mods[0], ctl);
  rep.control_dim = e.dim;
  rep.oracle = rep.oracle && ext1_oracle(J, mods[0], ctl, e).ok();
  return rep;
}

MullerReport muller_sampling() {
  const unsigned n = 3;
  CycElem one(n, 1L), z = zeta(n, 1), zero(n);
  Presentation J = jackson(n, 1, one);
  CentreParams cp = centre_params(n, 1);
  std::vector<Representation> mods;
  mods.push_back(torsion_module(n, 1, 1, one));
  for (long a : {1L, 2L, -3L}) mods.push_back(torsion_module(n, 1, 3, one, CycElem(n, a)));
  mods.push_back(torsion_free_module(n, 1, one, zero, zero, one));
  mods.push_back(torsion_free_module(n, 1, one, zero, zero, CycElem(n, 2L)));
  mods.push_back(torsion_free_module(n, 1, one, one, zero, one));
  mods.push_back(torsion_free_module(n, 1, one, one, CycElem(n, 2L), z));
  mods.push_back(torsion_free_module(n, 1, one, zero, CycElem(n, 2L), z));
  mods.push_back(torsion_free_module(n, 1, one, zero, CycElem(n, 2L) * z, z));
  mods.push_back(torsion_free_module(n, 1, one, CycElem(n, 2L), one, CycElem(n, 3L)));
  MullerReport rep;
  rep.modules = mods.size();
  rep.oracle = true;
  std::vector<std::vector<CycElem>> chars;
  for (const auto& m : mods) chars.push_back(central_character(J, m, cp).values);
  std::size_t count = mods.size();
  std::vector<std::size_t> dims(count * count);
  std::vector<char> oracles(count * count);
  parallel_for(count * count, [&](std::size_t k) {
    const auto& M = mods[k / count];
    const auto& N = mods[k % count];
    ExtResult e = ext1(J, M, N);
    dims[k] = e.dim;
    oracles[k] = ext1_oracle(J, M, N, e).ok();
  });
  for (std::size_t k = 0; k < count * count; ++k) {
    rep.oracle = rep.oracle && oracles[k];
    if (chars[k / count] == chars[k % count]) {
      ++rep.equal_pairs;
      if (dims[k] > 0) ++rep.equal_nonzero;
    } else {
      ++rep.unequal_pairs;
      if (dims[k] > 0) ++rep.unequal_nonzero;
    }
  }
  return rep;
}

nlohmann::json ext_to_json(const ExtResult& r) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& D : r.basis) {
    nlohmann::json d = nlohmann::json::array();
    for (const auto& m : D) d.push_back(matrix_to_json(m));
    basis.push_back(std::move(d));
  }
  return {{"dim", r.dim}, {"solution_dim", r.solution_dim}, {"inner_dim", r.inner_dim}, {"basis", basis}};
}

nlohmann::json sweep_to_json(const SweepTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  auto pt = [](const std::array<CycElem, 3>& p) {
    return nlohmann::json::array({p[0].str(), p[1].str(), p[2].str()});
  };
  for (const auto& r : t.rows)
    rows.push_back({{"family", r.family},
                    {"case", r.label},
                    {"m", pt(r.m)},
                    {"n", pt(r.n)},
                    {"claimed", r.claimed},
                    {"dim", r.dim},
                    {"inner_dim", r.inner_dim},
                    {"oracle", r.oracle},
                    {"match", r.matches()}});
  return {{"n", t.n}, {"r", t.r}, {"x", t.x.str()}, {"rows", rows}, {"all_match", t.all_match()}};
}

}  // namespace kwj
