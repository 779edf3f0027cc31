#include "kwj/ncalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace kwj {

NcPoly::NcPoly(const CycElem& scalar) {
  if (!scalar.is_zero()) t_.emplace(Word{}, scalar);
}

NcPoly::NcPoly(const Word& w, const CycElem& c) {
  if (!c.is_zero()) t_.emplace(w, c);
}

NcPoly NcPoly::gen(int i, unsigned order) { return NcPoly(Word{i}, CycElem(order, 1L)); }

std::size_t NcPoly::degree() const { return t_.empty() ? 0 : t_.rbegin()->first.size(); }

CycElem NcPoly::coeff(const Word& w, unsigned order) const {
  auto it = t_.find(w);
  return it == t_.end() ? CycElem(order) : it->second;
}

void NcPoly::add_term(const Word& w, const CycElem& c) {
  if (c.is_zero()) return;
  auto it = t_.find(w);
  if (it == t_.end()) {
    t_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  for (const auto& [w, c] : o.t_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  for (const auto& [w, c] : o.t_) add_term(w, -c);
  return *this;
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
  NcPoly r = *this;
  return r += o;
}

NcPoly NcPoly::operator-(const NcPoly& o) const {
  NcPoly r = *this;
  return r -= o;
}

NcPoly NcPoly::operator-() const {
  NcPoly r;
  for (const auto& [w, c] : t_) r.t_.emplace(w, -c);
  return r;
}

NcPoly NcPoly::operator*(const CycElem& s) const {
  NcPoly r;
  if (s.is_zero()) return r;
  for (const auto& [w, c] : t_) r.t_.emplace(w, c * s);
  return r;
}

NcPoly operator*(const CycElem& s, const NcPoly& p) { return p * s; }

NcPoly NcPoly::operator*(const NcPoly& o) const {
  NcPoly r;
  for (const auto& [u, a] : t_)
    for (const auto& [v, b] : o.t_) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      r.add_term(w, a * b);
    }
  return r;
}

bool NcPoly::operator==(const NcPoly& o) const {
  if (t_.size() != o.t_.size()) return false;
  auto it = o.t_.begin();
  for (const auto& [w, c] : t_) {
    if (w != it->first || c != it->second) return false;
    ++it;
  }
  return true;
}

std::string NcPoly::str(const std::vector<std::string>& names) const {
  if (t_.empty()) return "0";
  std::string out;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + it->second.str() + ")";
    for (int g : it->first) {
      out += "*";
      out += static_cast<std::size_t>(g) < names.size() ? names[g] : "e" + std::to_string(g);
    }
  }
  return out;
}

RewriteSystem::RewriteSystem(std::vector<std::string> names, std::vector<Rule> rules)
    : names_(std::move(names)), rules_(std::move(rules)) {
  int g = generator_count();
  index_.assign(static_cast<std::size_t>(g) * g, -1);
  for (std::size_t k = 0; k < rules_.size(); ++k) {
    const Rule& r = rules_[k];
    if (r.j < 0 || r.i < 0 || r.j >= g || r.i >= g)
      throw std::invalid_argument("rule references unknown generator");
    if (r.j <= r.i) throw std::invalid_argument("rule lhs must be a descending pair e_j e_i, j > i");
    Word lhs{r.j, r.i};
    for (const auto& [w, c] : r.rhs.terms()) {
      for (int x : w)
        if (x < 0 || x >= g) throw std::invalid_argument("rule rhs references unknown generator");
      if (!DegLex()(w, lhs))
        throw std::invalid_argument("relation not orientable: rhs term not smaller than lhs e" +
                                    std::to_string(r.j) + " e" + std::to_string(r.i));
    }
    int& slot = index_[static_cast<std::size_t>(r.j) * g + r.i];
    if (slot != -1) throw std::invalid_argument("duplicate rule for a descending pair");
    slot = static_cast<int>(k);
  }
}

const NcPoly* RewriteSystem::rule_for(int j, int i) const {
  int g = generator_count();
  int k = index_[static_cast<std::size_t>(j) * g + i];
  return k < 0 ? nullptr : &rules_[k].rhs;
}

Reducer::Reducer(std::shared_ptr<const RewriteSystem> sys) : sys_(std::move(sys)) {}

const NcPoly& Reducer::nf_word(const Word& w) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(w);
    if (it != memo_.end()) return *it->second;
  }
  NcPoly result;
  std::size_t p = 0;
  const NcPoly* rhs = nullptr;
  for (; p + 1 < w.size(); ++p) {
    if (w[p] > w[p + 1] && (rhs = sys_->rule_for(w[p], w[p + 1]))) break;
  }
  if (!rhs) {
    result = NcPoly(w, CycElem(1, 1L));
  } else {
    for (const auto& [u, c] : rhs->terms()) {
      Word v(w.begin(), w.begin() + p);
      v.insert(v.end(), u.begin(), u.end());
      v.insert(v.end(), w.begin() + p + 2, w.end());
      const NcPoly& sub = nf_word(v);
      for (const auto& [t, d] : sub.terms()) result.add_term(t, c * d);
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = memo_.emplace(w, std::make_unique<NcPoly>(std::move(result)));
  return *it->second;
}

Presentation::Presentation(std::string fam, unsigned ord, int rr, CycElem xx, RewriteSystem s)
    : family(std::move(fam)), order(ord), r(rr), x(std::move(xx)) {
  sys = std::make_shared<const RewriteSystem>(std::move(s));
  red = std::make_shared<const Reducer>(sys);
}

NcPoly nf(const NcPoly& p, const Reducer& red) {
  NcPoly out;
  for (const auto& [w, c] : p.terms()) {
    const NcPoly& sub = red.nf_word(w);
    for (const auto& [t, d] : sub.terms()) out.add_term(t, c * d);
  }
  return out;
}

NcPoly nf(const NcPoly& p, const Presentation& pr) { return nf(p, *pr.red); }

NcPoly nf(const NcPoly& p, const RewriteSystem& sys) {
  Reducer red(std::shared_ptr<const RewriteSystem>(&sys, [](const RewriteSystem*) {}));
  return nf(p, red);
}

NcPoly nf_random(const NcPoly& p, const RewriteSystem& sys, std::mt19937_64& rng) {
  NcPoly cur = p;
  while (true) {
    std::vector<std::pair<Word, std::size_t>> sites;
    for (const auto& [w, c] : cur.terms())
      for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (w[k] > w[k + 1] && sys.rule_for(w[k], w[k + 1])) sites.emplace_back(w, k);
    if (sites.empty()) return cur;
    std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
    auto [w, k] = sites[pick(rng)];
    CycElem c = cur.coeff(w);
    NcPoly repl;
    for (const auto& [u, d] : sys.rule_for(w[k], w[k + 1])->terms()) {
      Word v(w.begin(), w.begin() + k);
      v.insert(v.end(), u.begin(), u.end());
      v.insert(v.end(), w.begin() + k + 2, w.end());
      repl.add_term(v, c * d);
    }
    cur -= NcPoly(w, c);
    cur += repl;
  }
}

NcPoly mul(const NcPoly& a, const NcPoly& b, const Presentation& pr) { return nf(a * b, pr); }

NcPoly power(const NcPoly& a, unsigned k, const Presentation& pr) {
  NcPoly r = pr.one();
  for (unsigned i = 0; i < k; ++i) r = mul(r, a, pr);
  return r;
}

NcPoly commutator(const NcPoly& a, const NcPoly& b, const Presentation& pr) {
  return nf(a * b - b * a, pr);
}

bool is_irreducible(const Word& w, const RewriteSystem& sys) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k)
    if (w[k] > w[k + 1] && sys.rule_for(w[k], w[k + 1])) return false;
  return true;
}

std::vector<Overlap> diamond_check(const RewriteSystem& sys) {
  Reducer red(std::shared_ptr<const RewriteSystem>(&sys, [](const RewriteSystem*) {}));
  std::vector<Overlap> bad;
  int g = sys.generator_count();
  for (int k = 0; k < g; ++k)
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < j; ++i) {
        const NcPoly* left = sys.rule_for(k, j);
        const NcPoly* right = sys.rule_for(j, i);
        if (!left || !right) continue;
        NcPoly a = nf(*left * NcPoly::gen(i, 1), red);
        NcPoly b = nf(NcPoly::gen(k, 1) * *right, red);
        NcPoly d = a - b;
        if (!d.is_zero()) bad.push_back({Word{k, j, i}, d});
      }
  return bad;
}

std::vector<Overlap> diamond_check(const Presentation& pr) { return diamond_check(*pr.sys); }

Matrix eval_rep(const NcPoly& p, const Representation& rep) {
  for (const auto& g : rep.gens)
    if (g.rows() != rep.dim || g.cols() != rep.dim)
      throw std::invalid_argument("representation matrix has wrong size");
  Matrix out(rep.dim, rep.dim, rep.order);
  for (const auto& [w, c] : p.terms()) {
    Matrix m = Matrix::identity(rep.dim, rep.order);
    for (int x : w) {
      if (x < 0 || static_cast<std::size_t>(x) >= rep.gens.size())
        throw std::invalid_argument("word uses generator outside the representation");
      m = m * rep.gens[x];
    }
    out = out + m * c;
  }
  return out;
}

nlohmann::json poly_to_json(const NcPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [w, c] : p.terms()) arr.push_back({{"word", w}, {"coeff", c.str()}});
  return arr;
}

NcPoly poly_from_json(const nlohmann::json& j, unsigned order) {
  NcPoly p;
  for (const auto& t : j)
    p.add_term(t.at("word").get<Word>(), CycElem::parse(t.at("coeff").get<std::string>(), order));
  return p;
}

nlohmann::json presentation_to_json(const Presentation& p) {
  nlohmann::json rules = nlohmann::json::array();
  for (const auto& r : p.sys->rules())
    rules.push_back({{"lhs", {r.j, r.i}}, {"rhs", poly_to_json(r.rhs)}});
  return {{"family", p.family},
          {"order", p.order},
          {"generators", p.sys->generator_names()},
          {"params", {{"r", p.r}, {"x", p.x.str()}}},
          {"rules", rules}};
}

Presentation presentation_from_json(const nlohmann::json& j) {
  unsigned order = j.at("order").get<unsigned>();
  auto names = j.at("generators").get<std::vector<std::string>>();
  int r = 0;
  CycElem x(order);
  if (j.contains("params")) {
    const auto& pa = j.at("params");
    if (pa.contains("r")) r = pa.at("r").get<int>();
    if (pa.contains("x")) x = CycElem::parse(pa.at("x").get<std::string>(), order);
  }
  std::vector<Rule> rules;
  for (const auto& rj : j.at("rules")) {
    auto lhs = rj.at("lhs").get<std::vector<int>>();
    if (lhs.size() != 2) throw std::invalid_argument("rule lhs must have length 2");
    rules.push_back({lhs[0], lhs[1], poly_from_json(rj.at("rhs"), order)});
  }
  std::string fam = j.value("family", std::string("custom"));
  return Presentation(fam, order, r, x, RewriteSystem(std::move(names), std::move(rules)));
}

std::vector<NcPoly> relations(const RewriteSystem& sys, unsigned order) {
  std::vector<NcPoly> out;
  for (const auto& r : sys.rules()) out.push_back(NcPoly(Word{r.j, r.i}, CycElem(order, 1L)) - r.rhs);
  return out;
}

NcPoly substitute(const NcPoly& p, const std::vector<NcPoly>& images, const Presentation& target) {
  NcPoly out;
  for (const auto& [w, c] : p.terms()) {
    NcPoly term(c);
    for (int g : w) term = nf(term * images.at(static_cast<std::size_t>(g)), target);
    out += term;
  }
  return nf(out, target);
}

bool is_central(const NcPoly& z, const Presentation& pr) {
  for (int g = 0; g < pr.generators(); ++g)
    if (!commutator(z, pr.gen(g), pr).is_zero()) return false;
  return true;
}

}  // namespace kwj
