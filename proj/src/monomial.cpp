#include "chainring/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <nlohmann/json.hpp>

namespace chainring {

Multidegree::Multidegree(std::map<ElemIndex, int> coeffs) {
  for (auto [i, v] : coeffs)
    if (v != 0) c_.emplace(i, v);
}

void Multidegree::add(ElemIndex i, int v) {
  if (v == 0) return;
  int& slot = c_[i];
  slot += v;
  if (slot == 0) c_.erase(i);
}

int Multidegree::total() const {
  int t = 0;
  for (auto [i, v] : c_) t += v;
  return t;
}

Multidegree& Multidegree::operator+=(const Multidegree& o) {
  for (auto [i, v] : o.c_) add(i, v);
  return *this;
}

Multidegree& Multidegree::operator-=(const Multidegree& o) {
  for (auto [i, v] : o.c_) add(i, -v);
  return *this;
}

nlohmann::json Multidegree::to_json(const Poset& p) const {
  nlohmann::json j = nlohmann::json::object();
  for (auto [i, v] : c_) j[p.id(i)] = v;
  return j;
}

Multidegree Multidegree::from_json(const Poset& p, const nlohmann::json& j) {
  if (!j.is_object()) throw PosetError("multidegree must be a JSON object {id: coefficient}");
  Multidegree d;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_number_integer()) throw PosetError("multidegree coefficient for '" + it.key() + "' must be an integer");
    d.add(p.index(it.key()), it.value().get<int>());
  }
  return d;
}

std::string Multidegree::str(const Poset& p) const {
  if (c_.empty()) return "0";
  std::string s;
  for (auto [i, v] : c_) {
    if (!s.empty()) s += v < 0 ? " - " : " + ";
    else if (v < 0) s += "-";
    int a = v < 0 ? -v : v;
    if (a != 1) s += std::to_string(a) + "*";
    s += "e[" + p.id(i) + "]";
  }
  return s;
}

ChainMonomial::ChainMonomial(std::vector<Term> exps) {
  std::sort(exps.begin(), exps.end());
  for (auto [i, e] : exps) {
    if (!e_.empty() && e_.back().first == i) e_.back().second += e;
    else e_.emplace_back(i, e);
  }
  std::erase_if(e_, [](const Term& t) { return t.second == 0; });
}

int ChainMonomial::exponent(ElemIndex i) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), Term{i, 0},
                             [](const Term& a, const Term& b) { return a.first < b.first; });
  return it != e_.end() && it->first == i ? it->second : 0;
}

int ChainMonomial::total_degree() const {
  int t = 0;
  for (auto [i, e] : e_) t += e;
  return t;
}

std::vector<ElemIndex> ChainMonomial::support() const {
  std::vector<ElemIndex> s;
  s.reserve(e_.size());
  for (auto [i, e] : e_) s.push_back(i);
  return s;
}

ChainMonomial ChainMonomial::times(const ChainMonomial& o) const {
  std::vector<Term> all = e_;
  all.insert(all.end(), o.e_.begin(), o.e_.end());
  return ChainMonomial(std::move(all));
}

ChainMonomial ChainMonomial::lcm(const ChainMonomial& o) const {
  std::map<ElemIndex, int> m;
  for (auto [i, e] : e_) m[i] = std::max(m[i], e);
  for (auto [i, e] : o.e_) m[i] = std::max(m[i], e);
  return ChainMonomial(std::vector<Term>(m.begin(), m.end()));
}

bool ChainMonomial::divides(const ChainMonomial& o) const {
  for (auto [i, e] : e_)
    if (o.exponent(i) < e) return false;
  return true;
}

ChainMonomial ChainMonomial::quotient_of(const ChainMonomial& o) const {
  std::vector<Term> d = o.e_;
  for (auto [i, e] : e_) d.emplace_back(i, -e);
  ChainMonomial q(std::move(d));
  for (auto [i, e] : q.e_)
    if (e < 0) throw std::invalid_argument("quotient_of: monomial does not divide");
  return q;
}

ChainMonomial ChainMonomial::restricted_to(const std::vector<ElemIndex>& idx) const {
  std::vector<Term> r;
  for (auto t : e_)
    if (std::binary_search(idx.begin(), idx.end(), t.first)) r.push_back(t);
  return ChainMonomial(std::move(r));
}

Multidegree ChainMonomial::multidegree() const {
  Multidegree d;
  for (auto [i, e] : e_) d.add(i, e);
  return d;
}

bool operator<(const ChainMonomial& a, const ChainMonomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return a.e_ < b.e_;
}

std::string ChainMonomial::str(const Poset& p) const {
  if (e_.empty()) return "1";
  std::string s;
  for (auto [i, e] : e_) {
    if (!s.empty()) s += "*";
    s += "x[" + p.id(i) + "]";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

nlohmann::json ChainMonomial::to_json(const Poset& p) const {
  nlohmann::json j = nlohmann::json::object();
  for (auto [i, e] : e_) j[p.id(i)] = e;
  return j;
}

ChainMonomial ChainMonomial::from_json(const Poset& p, const nlohmann::json& j) {
  if (!j.is_object()) throw PosetError("monomial must be a JSON object {id: exponent}");
  std::vector<Term> t;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_number_integer() || it.value().get<int>() < 0)
      throw PosetError("exponent for '" + it.key() + "' must be a nonnegative integer");
    t.emplace_back(p.index(it.key()), it.value().get<int>());
  }
  ChainMonomial m(std::move(t));
  if (!is_chain_monomial(p, m)) throw PosetError("monomial " + m.str(p) + " is not supported on a chain of non-minimal elements");
  return m;
}

bool is_chain_monomial(const Poset& p, const ChainMonomial& m) {
  auto s = m.support();
  for (ElemIndex i : s)
    if (p.is_minimal(i)) return false;
  return is_chain(p, s);
}

std::optional<ElemIndex> top_of(const Poset& p, const ChainMonomial& m) {
  std::optional<ElemIndex> top;
  for (auto [i, e] : m.exponents())
    if (!top || p.height(i) > p.height(*top)) top = i;
  return top;
}

std::optional<ChainMonomial> mono_mul(const Poset& p, const ChainMonomial& a, const ChainMonomial& b) {
  auto ta = top_of(p, a), tb = top_of(p, b);
  if (ta && tb && p.incomparable(*ta, *tb)) return std::nullopt;
  return a.times(b);
}

namespace {

void enumerate_exps(const std::vector<ElemIndex>& vars, std::size_t pos, int remaining,
                    std::vector<ChainMonomial::Term>& cur, std::vector<ChainMonomial>& out) {
  if (pos == vars.size()) {
    if (remaining == 0) out.emplace_back(cur);
    return;
  }
  if (pos + 1 == vars.size()) {
    if (remaining > 0) cur.emplace_back(vars[pos], remaining);
    out.emplace_back(cur);
    if (remaining > 0) cur.pop_back();
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    if (e > 0) cur.emplace_back(vars[pos], e);
    enumerate_exps(vars, pos + 1, remaining - e, cur, out);
    if (e > 0) cur.pop_back();
  }
}

}  // namespace

std::vector<ChainMonomial> monomials_in(const std::vector<ElemIndex>& vars, int d) {
  std::vector<ChainMonomial> out;
  if (d < 0) return out;
  if (vars.empty()) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<ChainMonomial::Term> cur;
  enumerate_exps(vars, 0, d, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ChainMonomial> monomials_of_degree(const Poset& p, int d) {
  // Every chain monomial lives on chain_below(t) for t the top of its
  // support; enumerate per top with the top's exponent forced positive.
  std::set<ChainMonomial> acc;
  if (d == 0) return {ChainMonomial()};
  for (ElemIndex t : p.nonminimal()) {
    std::vector<ElemIndex> below;
    for (ElemIndex g : p.chain_below(t))
      if (g != t && !p.is_minimal(g)) below.push_back(g);
    for (int e = 1; e <= d; ++e)
      for (auto& m : monomials_in(below, d - e)) acc.insert(m.times(ChainMonomial::var(t, e)));
  }
  return {acc.begin(), acc.end()};
}

}  // namespace chainring
