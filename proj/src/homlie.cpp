#include "kwj/homlie.hpp"

#include <random>
#include <stdexcept>

namespace kwj {

namespace {

Vec zeros(std::size_t m, unsigned order) { return Vec(m, CycElem(order)); }

bool vec_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

Vec CommAlgebra::mul(const Vec& u, const Vec& v) const {
  Vec out = zeros(dim, order);
  for (std::size_t i = 0; i < dim; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (v[j].is_zero()) continue;
      CycElem s = u[i] * v[j];
      for (std::size_t k = 0; k < dim; ++k)
        if (!a[i][j][k].is_zero()) out[k] += s * a[i][j][k];
    }
  }
  return out;
}

bool CommAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (a[i][j] != a[j][i]) return false;
  return true;
}

bool CommAlgebra::is_associative() const {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        Vec ei = zeros(dim, order), ek = zeros(dim, order);
        ei[i] = CycElem(order, 1L);
        ek[k] = CycElem(order, 1L);
        if (mul(a[i][j], ek) != mul(ei, a[j][k])) return false;
      }
  return true;
}

CommAlgebra kummer_extension(unsigned n, const CycElem& x) {
  CommAlgebra A;
  A.dim = n;
  A.order = x.order();
  for (unsigned i = 0; i < n; ++i) A.names.push_back("t^" + std::to_string(i));
  A.a.assign(n, std::vector<Vec>(n, zeros(n, A.order)));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      A.a[i][j][(i + j) % n] = i + j >= n ? x : CycElem(A.order, 1L);
  return A;
}

CommAlgebra truncated_line(unsigned n, unsigned order) {
  CommAlgebra A = kummer_extension(n, CycElem(order));
  return A;
}

TwistedAlgebra random_twisted_algebra(std::mt19937_64& rng, std::size_t max_dim) {
  if (max_dim < 2) throw std::invalid_argument("random algebra needs max_dim >= 2");
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  auto nonzero_rational = [&](unsigned order) {
    long num = pick(1, 5) * (pick(0, 1) ? 1 : -1);
    return CycElem(order, Rational(num, pick(1, 3)));
  };
  TwistedAlgebra out;
  CommAlgebra& A = out.algebra;
  Vec& lam = out.twist.sigma_diag;
  long kind = pick(0, 2);
  if (kind == 0) {
    // Kummer extension t^m = x with sigma(t) = zeta_m^j t
    unsigned m = static_cast<unsigned>(pick(2, static_cast<long>(max_dim)));
    A = kummer_extension(m, nonzero_rational(m));
    CycElem l = zeta(m, pick(1, m - 1));
    for (unsigned i = 0; i < m; ++i) lam.push_back(l.pow(i));
  } else {
    // t1^m1 = t2^m2 = 0, basis t1^a t2^b with a < m1, b < m2
    unsigned order = kind == 1 ? 1u : static_cast<unsigned>(pick(3, 6));
    unsigned m1 = static_cast<unsigned>(pick(1, static_cast<long>(max_dim)));
    unsigned m2 = static_cast<unsigned>(pick(1, static_cast<long>(max_dim / m1)));
    if (m1 * m2 < 2) m1 = 2;
    CycElem l1 = order == 1 ? nonzero_rational(1) : zeta(order, pick(1, order - 1)) * nonzero_rational(order);
    CycElem l2 = order == 1 ? nonzero_rational(1) : zeta(order, pick(0, order - 1));
    A.dim = m1 * m2;
    A.order = order;
    A.a.assign(A.dim, std::vector<Vec>(A.dim, zeros(A.dim, order)));
    for (unsigned i = 0; i < m1; ++i)
      for (unsigned j = 0; j < m2; ++j) {
        A.names.push_back("t1^" + std::to_string(i) + " t2^" + std::to_string(j));
        lam.push_back(l1.pow(i) * l2.pow(j));
      }
    for (unsigned i = 0; i < A.dim; ++i)
      for (unsigned j = 0; j < A.dim; ++j) {
        unsigned a = i / m2 + j / m2, b = i % m2 + j % m2;
        if (a < m1 && b < m2) A.a[i][j][a * m2 + b] = CycElem(order, 1L);
      }
  }
  unsigned o = A.order;
  for (const auto& l : lam) o = lcm_u(o, l.order());
  out.twist.alpha = nonzero_rational(o);
  out.twist.q_sigma = CycElem(o, 1L);
  return out;
}

Vec HomLieAlgebra::basis(std::size_t i) const {
  Vec v = zeros(dim, order);
  v[i] = CycElem(order, 1L);
  return v;
}

Vec HomLieAlgebra::bracket(const Vec& u, const Vec& v) const {
  Vec out = zeros(dim, order);
  for (std::size_t i = 0; i < dim; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (v[j].is_zero()) continue;
      CycElem s = u[i] * v[j];
      for (std::size_t k = 0; k < dim; ++k)
        if (!c[i][j][k].is_zero()) out[k] += s * c[i][j][k];
    }
  }
  return out;
}

HomLieAlgebra twisted_bracket(const CommAlgebra& A, const TwistData& tw) {
  std::size_t m = A.dim;
  if (tw.sigma_diag.size() != m) throw std::invalid_argument("twist size does not match algebra");
  const Vec& l = tw.sigma_diag;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (l[i] * l[j] * A.a[i][j][k] != A.a[i][j][k] * l[k])
          throw std::invalid_argument("sigma is not an algebra morphism");
  HomLieAlgebra h;
  h.dim = m;
  h.order = lcm_u(A.order, tw.alpha.order());
  for (const auto& x : l) h.order = lcm_u(h.order, x.order());
  h.twist_diag = l;
  h.q_sigma = tw.q_sigma;
  h.c.assign(m, std::vector<Vec>(m, zeros(m, h.order)));
  // Delta(y_j) = alpha (1 - l_j) y_j, so <e_i, e_j> = alpha (l_i - l_j) y_i y_j Delta.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      CycElem f = tw.alpha * (l[i] - l[j]);
      for (std::size_t k = 0; k < m; ++k) h.c[i][j][k] = f * A.a[i][j][k];
    }
  return h;
}

HomLieAlgebra infinitesimal_homlie(unsigned n, const CycElem& q, const CycElem& a) {
  if (n < 2) throw std::invalid_argument("infinitesimal hom-Lie algebra needs n >= 2");
  HomLieAlgebra h;
  h.dim = n;
  h.order = lcm_u(q.order(), a.order());
  h.q_sigma = CycElem(h.order, 1L);
  h.c.assign(n, std::vector<Vec>(n, zeros(n, h.order)));
  for (unsigned i = 0; i < n; ++i) {
    h.twist_diag.push_back(q.pow(i));
    for (unsigned j = 0; j < n; ++j)
      if (i + j < n) h.c[i][j][i + j] = a * (q.pow(i) * q_int(j, q) - q.pow(j) * q_int(i, q));
  }
  return h;
}

HomLieAlgebra kummer_witt_homlie(unsigned n, int r, const CycElem& x) {
  if (r < 0 || static_cast<unsigned>(r) >= n) throw std::invalid_argument("level r must satisfy 0 <= r < n");
  HomLieAlgebra h;
  h.dim = n;
  h.order = lcm_u(n, x.order());
  h.q_sigma = CycElem(h.order, 1L);
  h.c.assign(n, std::vector<Vec>(n, zeros(n, h.order)));
  CycElem one(h.order, 1L);
  for (unsigned i = 0; i < n; ++i) {
    h.twist_diag.push_back(zeta(n, static_cast<long>(r) * i));
    for (unsigned j = 0; j < n; ++j) {
      CycElem f = zeta(n, static_cast<long>(r) * i) * (one - zeta(n, static_cast<long>(r) * (long(j) - long(i))));
      if (i + j >= n) f *= x;
      h.c[i][j][(i + j) % n] = f;
    }
  }
  return h;
}

Vec hom_jacobi(const HomLieAlgebra& h, std::size_t i, std::size_t j, std::size_t k) {
  Vec out = zeros(h.dim, h.order);
  std::size_t t[3] = {i, j, k};
  for (int s = 0; s < 3; ++s) {
    std::size_t a = t[s], b = t[(s + 1) % 3], c = t[(s + 2) % 3];
    Vec inner = h.bracket(h.basis(b), h.basis(c));
    Vec outer = h.bracket(h.basis(a), inner);
    CycElem f = h.twist_diag[a] + h.q_sigma;
    for (std::size_t m = 0; m < h.dim; ++m) out[m] += f * outer[m];
  }
  return out;
}

Vec jacobi_probe(const HomLieAlgebra& h, std::size_t i, std::size_t j, std::size_t k) {
  HomLieAlgebra id = h;
  for (auto& l : id.twist_diag) l = CycElem(h.order, 1L);
  id.q_sigma = CycElem(h.order, 1L);
  Vec v = hom_jacobi(id, i, j, k);
  CycElem half(1, Rational(1, 2));
  for (auto& x : v) x *= half;
  return v;
}

std::vector<JacobiDefect> check_hom_jacobi(const HomLieAlgebra& h) {
  std::vector<JacobiDefect> out;
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t j = 0; j < h.dim; ++j)
      for (std::size_t k = 0; k < h.dim; ++k) {
        Vec d = hom_jacobi(h, i, j, k);
        if (!vec_zero(d)) out.push_back({i, j, k, d});
      }
  return out;
}

bool check_antisymmetry(const HomLieAlgebra& h) {
  for (std::size_t i = 0; i < h.dim; ++i) {
    if (!vec_zero(h.c[i][i])) return false;
    for (std::size_t j = 0; j < h.dim; ++j)
      for (std::size_t k = 0; k < h.dim; ++k)
        if (h.c[i][j][k] != -h.c[j][i][k]) return false;
  }
  return true;
}

Presentation enveloping(const HomLieAlgebra& h, const std::string& family) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < h.dim; ++i) names.push_back("e" + std::to_string(i));
  std::vector<Rule> rules;
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t j = i + 1; j < h.dim; ++j) {
      const CycElem& li = h.twist_diag[i];
      const CycElem& lj = h.twist_diag[j];
      if (li.is_zero() || lj.is_zero()) throw std::invalid_argument("twist eigenvalues must be nonzero");
      NcPoly rhs(Word{int(i), int(j)}, li / lj);
      CycElem ljinv = lj.inv();
      for (std::size_t k = 0; k < h.dim; ++k) rhs.add_term(Word{int(k)}, -(ljinv * h.c[i][j][k]));
      rules.push_back({int(j), int(i), rhs});
    }
  Presentation p(family, h.order, 0, CycElem(h.order), RewriteSystem(names, rules));
  p.pbw = diamond_check(p).empty();
  return p;
}

nlohmann::json homlie_to_json(const HomLieAlgebra& h) {
  nlohmann::json br = nlohmann::json::array();
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t j = i + 1; j < h.dim; ++j) {
      nlohmann::json v = nlohmann::json::array();
      for (std::size_t k = 0; k < h.dim; ++k) v.push_back(h.c[i][j][k].str());
      br.push_back({{"i", i}, {"j", j}, {"value", v}});
    }
  nlohmann::json tw = nlohmann::json::array();
  for (const auto& l : h.twist_diag) tw.push_back(l.str());
  return {{"dim", h.dim}, {"order", h.order}, {"brackets", br}, {"twist_diag", tw}, {"q_sigma", h.q_sigma.str()}};
}

}  // namespace kwj
