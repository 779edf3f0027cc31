#include "kwj/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace kwj {

struct FieldData {
  unsigned n;
  unsigned phi;
  IntPoly modulus;
};

unsigned gcd_u(unsigned a, unsigned b) { return std::gcd(a, b); }
unsigned lcm_u(unsigned a, unsigned b) { return std::lcm(a, b); }

unsigned euler_phi(unsigned n) {
  if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Exact quotient of monic-divisor division; remainder must vanish.
IntPoly exact_div(IntPoly num, const IntPoly& den) {
  std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {};
  IntPoly q(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    Integer c = num[k];
    if (c == 0) continue;
    q[k - dn] = c;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
  }
  return q;
}

IntPoly compute_cyclotomic(unsigned n);

std::mutex& table_mutex() {
  static std::mutex m;
  return m;
}

std::map<unsigned, std::unique_ptr<FieldData>>& table() {
  static std::map<unsigned, std::unique_ptr<FieldData>> t;
  return t;
}

const FieldData* field(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
  {
    std::lock_guard<std::mutex> lock(table_mutex());
    auto it = table().find(n);
    if (it != table().end()) return it->second.get();
  }
  IntPoly m = compute_cyclotomic(n);
  auto fd = std::make_unique<FieldData>();
  fd->n = n;
  fd->phi = euler_phi(n);
  fd->modulus = std::move(m);
  std::lock_guard<std::mutex> lock(table_mutex());
  auto [it, inserted] = table().emplace(n, std::move(fd));
  return it->second.get();
}

IntPoly compute_cyclotomic(unsigned n) {
  IntPoly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) num = exact_div(num, field(d)->modulus);
  }
  return num;
}

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Division with remainder over Q.
void qdivmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  trim(r);
  q.clear();
  if (r.size() < b.size()) return;
  q.assign(r.size() - b.size() + 1, 0);
  const Rational& lead = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    Rational c = r.back() / lead;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    r.pop_back();
    trim(r);
  }
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

QPoly qsub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

}  // namespace

const IntPoly& cyclotomic_polynomial(unsigned n) { return field(n)->modulus; }

CycElem::CycElem() : f_(field(1)), c_(1, 0) {}

CycElem::CycElem(unsigned order) : f_(field(order)), c_(f_->phi, 0) {}

CycElem::CycElem(unsigned order, const Rational& c) : CycElem(order) {
  c_[0] = c;
  c_[0].canonicalize();
}

CycElem::CycElem(unsigned order, long c) : CycElem(order) { c_[0] = c; }

CycElem::CycElem(unsigned order, std::vector<Rational> poly) : f_(field(order)) {
  reduce_from(poly);
}

void CycElem::reduce_from(std::vector<Rational>& poly) {
  const IntPoly& m = f_->modulus;
  std::size_t d = f_->phi;
  for (std::size_t k = poly.size(); k-- > d;) {
    if (poly[k] == 0) continue;
    Rational c = poly[k];
    for (std::size_t i = 0; i <= d; ++i) {
      if (m[i] != 0) poly[k - d + i] -= c * m[i];
    }
  }
  poly.resize(d, 0);
  for (auto& q : poly) q.canonicalize();
  c_ = std::move(poly);
}

unsigned CycElem::order() const { return f_->n; }

bool CycElem::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool CycElem::is_one() const {
  if (c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool CycElem::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

CycElem CycElem::embed(unsigned n) const {
  unsigned m = order();
  if (n == m) return *this;
  if (n == 0 || n % m != 0)
    throw std::invalid_argument("embed: order " + std::to_string(m) + " does not divide " +
                                std::to_string(n));
  unsigned step = n / m;
  std::vector<Rational> poly((c_.size() - 1) * step + 1, 0);
  for (std::size_t k = 0; k < c_.size(); ++k) poly[k * step] = c_[k];
  return CycElem(n, std::move(poly));
}

void CycElem::align(CycElem& o) {
  if (f_ == o.f_) return;
  unsigned l = lcm_u(order(), o.order());
  if (order() != l) *this = embed(l);
  if (o.order() != l) o = o.embed(l);
}

CycElem& CycElem::operator+=(const CycElem& o) {
  if (f_ == o.f_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  CycElem b = o;
  align(b);
  return *this += b;
}

CycElem& CycElem::operator-=(const CycElem& o) {
  if (f_ == o.f_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  CycElem b = o;
  align(b);
  return *this -= b;
}

CycElem CycElem::operator-() const {
  CycElem r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

CycElem operator*(const CycElem& a, const CycElem& b) {
  if (a.f_ != b.f_) {
    CycElem x = a, y = b;
    x.align(y);
    return x * y;
  }
  std::size_t d = a.c_.size();
  if (d == 1) {
    CycElem r(a.order());
    r.c_[0] = a.c_[0] * b.c_[0];
    return r;
  }
  std::vector<Rational> prod(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.c_[j] == 0) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  CycElem r;
  r.f_ = a.f_;
  r.reduce_from(prod);
  return r;
}

CycElem& CycElem::operator*=(const CycElem& o) { return *this = *this * o; }

CycElem& CycElem::operator/=(const CycElem& o) { return *this = *this * o.inv(); }

bool operator==(const CycElem& a, const CycElem& b) {
  if (a.f_ == b.f_) return a.c_ == b.c_;
  CycElem x = a, y = b;
  x.align(y);
  return x.c_ == y.c_;
}

CycElem CycElem::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return CycElem(order(), Rational(1) / c_[0]);
  // Extended Euclid: s*a + t*m = g, g a nonzero constant since m is irreducible.
  QPoly a = c_;
  trim(a);
  QPoly m(f_->modulus.begin(), f_->modulus.end());
  QPoly r0 = m, r1 = a;
  QPoly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    QPoly q, r;
    qdivmod(r0, r1, q, r);
    QPoly s2 = qsub(s0, qmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw DivisionByZero();
  Rational g = r1[0];
  for (auto& q : s1) q /= g;
  return CycElem(order(), std::move(s1));
}

CycElem CycElem::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  CycElem result(order(), 1L);
  CycElem base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string CycElem::str() const {
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& q = c_[k];
    if (q == 0) continue;
    bool neg = q < 0;
    Rational mag = neg ? Rational(-q) : q;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += "z";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

struct Lexer {
  std::string_view s;
  std::size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return std::string(s.substr(start, i - start));
  }
};

}  // namespace

CycElem CycElem::parse(std::string_view text, unsigned order) {
  Lexer lx{text};
  CycElem total(order);
  if (lx.eof()) throw ParseError("empty cyclotomic literal", 0);
  bool first = true;
  while (!lx.eof()) {
    int sign = 1;
    if (lx.accept('+')) {
    } else if (lx.accept('-')) {
      sign = -1;
    } else if (!first) {
      throw ParseError("expected '+' or '-'", lx.i);
    }
    first = false;
    while (true) {
      if (lx.accept('-')) sign = -sign;
      else if (!lx.accept('+')) break;
    }
    Rational coef(1);
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      std::string num = lx.digits();
      Integer numer(num);
      Integer denom(1);
      if (lx.accept('/')) {
        std::size_t at = lx.i;
        std::string den = lx.digits();
        if (den.empty()) throw ParseError("expected denominator", at);
        denom = Integer(den);
        if (denom == 0) throw ParseError("zero denominator", at);
      }
      coef = Rational(numer, denom);
      coef.canonicalize();
      have_coef = true;
    }
    long power = 0;
    bool need_z = false;
    if (have_coef && lx.accept('*')) need_z = true;
    if (lx.peek() == 'z') {
      ++lx.i;
      power = 1;
      if (lx.accept('^')) {
        int esign = 1;
        if (lx.accept('-')) esign = -1;
        std::size_t at = lx.i;
        std::string e = lx.digits();
        if (e.empty()) throw ParseError("expected exponent", at);
        power = esign * std::stol(e);
      }
    } else if (need_z || !have_coef) {
      throw ParseError("expected 'z' or a number", lx.i);
    }
    CycElem term = zeta(order, power);
    total += term * CycElem(order, coef * sign);
  }
  return total;
}

CycElem zeta(unsigned n, long k) {
  long e = k % static_cast<long>(n);
  if (e < 0) e += n;
  std::vector<Rational> poly(static_cast<std::size_t>(e) + 1, 0);
  poly[e] = 1;
  return CycElem(n, std::move(poly));
}

CycElem q_int(unsigned i, const CycElem& q) {
  CycElem sum(q.order());
  CycElem term(q.order(), 1L);
  for (unsigned k = 0; k < i; ++k) {
    sum += term;
    term *= q;
  }
  return sum;
}

}  // namespace kwj
