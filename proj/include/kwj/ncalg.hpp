// Noncommutative polynomials, quadratic rewrite systems and normal forms.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "kwj/cyclotomic.hpp"
#include "kwj/matrix.hpp"

namespace kwj {

using Word = std::vector<int>;

// Degree-lex with e0 < e1 < ...
struct DegLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class NcPoly {
 public:
  using Terms = std::map<Word, CycElem, DegLex>;

  NcPoly() = default;
  explicit NcPoly(const CycElem& scalar);
  NcPoly(const Word& w, const CycElem& c);
  static NcPoly gen(int i, unsigned order);

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t degree() const;
  // Coefficient of w, zero of the given order when absent.
  CycElem coeff(const Word& w, unsigned order = 1) const;

  void add_term(const Word& w, const CycElem& c);
  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly operator+(const NcPoly& o) const;
  NcPoly operator-(const NcPoly& o) const;
  NcPoly operator-() const;
  NcPoly operator*(const CycElem& s) const;
  // Free (concatenation) product.
  NcPoly operator*(const NcPoly& o) const;
  bool operator==(const NcPoly& o) const;
  bool operator!=(const NcPoly& o) const { return !(*this == o); }

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  Terms t_;
};

NcPoly operator*(const CycElem& s, const NcPoly& p);

struct Rule {
  int j;  // lhs = e_j e_i with j > i
  int i;
  NcPoly rhs;
};

class RewriteSystem {
 public:
  RewriteSystem(std::vector<std::string> names, std::vector<Rule> rules);

  int generator_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const NcPoly* rule_for(int j, int i) const;

 private:
  std::vector<std::string> names_;
  std::vector<Rule> rules_;
  std::vector<int> index_;  // (j * g + i) -> rule index or -1
};

// Cached leftmost-first normal form of words.
class Reducer {
 public:
  explicit Reducer(std::shared_ptr<const RewriteSystem> sys);
  const RewriteSystem& system() const { return *sys_; }
  const NcPoly& nf_word(const Word& w) const;

 private:
  std::shared_ptr<const RewriteSystem> sys_;
  mutable std::mutex mu_;
  mutable std::map<Word, std::unique_ptr<NcPoly>, DegLex> memo_;
};

struct Presentation {
  std::string family;
  unsigned order = 1;
  int r = 0;
  CycElem x;
  std::shared_ptr<const RewriteSystem> sys;
  std::shared_ptr<const Reducer> red;
  std::optional<bool> pbw;  // diamond_check status once verified

  Presentation() = default;
  Presentation(std::string family, unsigned order, int r, CycElem x, RewriteSystem s);

  int generators() const { return sys->generator_count(); }
  NcPoly gen(int i) const { return NcPoly::gen(i, order); }
  NcPoly scalar(const CycElem& c) const { return NcPoly(c); }
  NcPoly one() const { return NcPoly(CycElem(order, 1L)); }
};

NcPoly nf(const NcPoly& p, const Reducer& red);
NcPoly nf(const NcPoly& p, const Presentation& pr);
NcPoly nf(const NcPoly& p, const RewriteSystem& sys);
// Reduction choosing a uniformly random reducible position at every step.
NcPoly nf_random(const NcPoly& p, const RewriteSystem& sys, std::mt19937_64& rng);
NcPoly mul(const NcPoly& a, const NcPoly& b, const Presentation& pr);
NcPoly power(const NcPoly& a, unsigned k, const Presentation& pr);
NcPoly commutator(const NcPoly& a, const NcPoly& b, const Presentation& pr);
bool is_irreducible(const Word& w, const RewriteSystem& sys);

// Relation polynomials e_j e_i - rhs, one per rule.
std::vector<NcPoly> relations(const RewriteSystem& sys, unsigned order);
// Replace generator g by images[g] and reduce in the target presentation.
NcPoly substitute(const NcPoly& p, const std::vector<NcPoly>& images, const Presentation& target);
bool is_central(const NcPoly& z, const Presentation& pr);

struct Overlap {
  Word word;
  NcPoly difference;
};
std::vector<Overlap> diamond_check(const RewriteSystem& sys);
std::vector<Overlap> diamond_check(const Presentation& pr);

struct Representation {
  unsigned order = 1;
  std::size_t dim = 0;
  std::vector<Matrix> gens;
};

Matrix eval_rep(const NcPoly& p, const Representation& rep);

nlohmann::json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const nlohmann::json& j);
nlohmann::json poly_to_json(const NcPoly& p);
NcPoly poly_from_json(const nlohmann::json& j, unsigned order);

}  // namespace kwj
