// Exact arithmetic in cyclotomic fields Q(zeta_n).
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kwj {

using Rational = mpq_class;
using Integer = mpz_class;

// Integer polynomial, coefficient of x^k at index k.
using IntPoly = std::vector<Integer>;

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in cyclotomic field") {}
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::invalid_argument(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

unsigned euler_phi(unsigned n);
unsigned gcd_u(unsigned a, unsigned b);
unsigned lcm_u(unsigned a, unsigned b);

// Phi_n, monic of degree phi(n).
const IntPoly& cyclotomic_polynomial(unsigned n);

struct FieldData;

// Element of Q(zeta_n) stored as coefficients of 1, z, ..., z^{phi(n)-1}.
// Binary operations on elements of different orders embed both into the lcm.
class CycElem {
 public:
  CycElem();
  explicit CycElem(unsigned order);
  CycElem(unsigned order, const Rational& c);
  CycElem(unsigned order, long c);
  // Arbitrary-length coefficient vector in powers of z, reduced mod Phi_n.
  CycElem(unsigned order, std::vector<Rational> poly);

  unsigned order() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational rational_part() const { return c_.empty() ? Rational(0) : c_[0]; }

  CycElem embed(unsigned n) const;

  CycElem& operator+=(const CycElem& o);
  CycElem& operator-=(const CycElem& o);
  CycElem& operator*=(const CycElem& o);
  CycElem& operator/=(const CycElem& o);
  CycElem operator-() const;
  friend CycElem operator+(CycElem a, const CycElem& b) { return a += b; }
  friend CycElem operator-(CycElem a, const CycElem& b) { return a -= b; }
  friend CycElem operator*(const CycElem& a, const CycElem& b);
  friend CycElem operator/(CycElem a, const CycElem& b) { return a /= b; }
  friend bool operator==(const CycElem& a, const CycElem& b);
  friend bool operator!=(const CycElem& a, const CycElem& b) { return !(a == b); }

  CycElem inv() const;
  CycElem pow(long e) const;

  // Canonical literal, highest power first, e.g. "1/3*z^2 - 2*z + 1".
  std::string str() const;
  static CycElem parse(std::string_view text, unsigned order);

 private:
  const FieldData* f_;
  std::vector<Rational> c_;

  void reduce_from(std::vector<Rational>& poly);
  void align(CycElem& o);
};

CycElem zeta(unsigned n, long k);
CycElem q_int(unsigned i, const CycElem& q);

}  // namespace kwj
