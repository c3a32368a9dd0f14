#pragma once

// R = K[x_s : s non-minimal] / (x_s x_t : s, t incomparable), represented on
// its K-basis of chain monomials, and monomial ideals of R.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chainring/field.hpp"
#include "chainring/monomial.hpp"
#include "chainring/poset.hpp"

namespace chainring {

/// K-linear combination of chain monomials, canonical: no zero coefficients,
/// terms ordered by (total degree, lexicographic support).
template <class K>
class RingElem {
 public:
  using Terms = std::map<ChainMonomial, K>;

  RingElem() = default;
  explicit RingElem(const ChainMonomial& m, K c = K(1)) { add_term(m, c); }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  void add_term(const ChainMonomial& m, const K& c) {
    if (chainring::is_zero(c)) return;
    auto [it, inserted] = t_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (chainring::is_zero(it->second)) t_.erase(it);
    }
  }

  K coeff(const ChainMonomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? K(0) : it->second;
  }

  RingElem& operator+=(const RingElem& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
  }
  RingElem& operator-=(const RingElem& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
  }
  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  RingElem operator-() const { return scaled(K(-1)); }
  RingElem scaled(const K& s) const {
    RingElem r;
    for (const auto& [m, c] : t_) r.add_term(m, c * s);
    return r;
  }
  friend bool operator==(const RingElem& a, const RingElem& b) { return a.t_ == b.t_; }

  RingElem homogeneous_component(int d) const {
    RingElem r;
    for (const auto& [m, c] : t_)
      if (m.total_degree() == d) r.t_.emplace(m, c);
    return r;
  }
  std::optional<int> lowest_degree() const {
    if (t_.empty()) return std::nullopt;
    return t_.begin()->first.total_degree();
  }

  std::string str(const Poset& p) const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : t_) {
      if (!s.empty()) s += " + ";
      if (!c.is_one() || m.is_one()) s += to_string(c) + (m.is_one() ? "" : "*");
      if (!m.is_one()) s += m.str(p);
    }
    return s;
  }

 private:
  Terms t_;
};

/// Monomial ideal of R given by an antichain (under divisibility) of chain
/// monomials, sorted canonically.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Minimalizes; the zero monomial marker is never a generator.
  explicit MonomialIdeal(std::vector<ChainMonomial> gens);

  const std::vector<ChainMonomial>& generators() const { return g_; }
  bool is_zero() const { return g_.empty(); }
  bool contains(const ChainMonomial& m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

  nlohmann::json to_json(const Poset& p) const;
  std::string str(const Poset& p) const;

 private:
  std::vector<ChainMonomial> g_;
};

bool ideal_member(const ChainMonomial& m, const MonomialIdeal& I);
/// Pairwise lcms whose support is a chain; incompatible lcms are zero in R.
MonomialIdeal ideal_intersect(const Poset& p, const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J);
/// Chain monomials of degree d lying in I.
std::vector<ChainMonomial> ideal_piece(const Poset& p, const MonomialIdeal& I, int d);

/// The ideal generated by the given variables.
MonomialIdeal variable_ideal(const std::vector<ElemIndex>& vars);

/// True iff the variables outside A form a chain, i.e. R/(x_a : a in A) is a
/// polynomial ring on a chain of variables.
bool is_prime_variable_ideal(const Poset& p, const std::vector<ElemIndex>& A);

/// P_G = (x_g : g non-minimal, g not in G) for a maximal chain G.
MonomialIdeal minimal_prime(const Poset& p, const std::vector<ElemIndex>& chain);

/// Arithmetic in R. Holds the poset; elements are plain values.
template <class K>
class ChainRing {
 public:
  using Elem = RingElem<K>;

  explicit ChainRing(std::shared_ptr<const Poset> poset, FieldOps<K> field = {})
      : poset_(std::move(poset)), field_(field) {}

  const Poset& poset() const { return *poset_; }
  std::shared_ptr<const Poset> poset_ptr() const { return poset_; }
  const FieldOps<K>& field() const { return field_; }

  K scalar(long v) const { return field_.from_int(v); }
  Elem one() const { return Elem(ChainMonomial(), scalar(1)); }
  Elem var(const std::string& id, int e = 1) const {
    ElemIndex i = poset_->index(id);
    if (poset_->is_minimal(i)) throw PosetError("no variable for minimal element '" + id + "'");
    return Elem(ChainMonomial::var(i, e), scalar(1));
  }
  Elem monomial(const ChainMonomial& m) const {
    if (!is_chain_monomial(*poset_, m)) return Elem();
    return Elem(m, scalar(1));
  }

  Elem mul(const Elem& a, const Elem& b) const {
    Elem r;
    for (const auto& [ma, ca] : a.terms())
      for (const auto& [mb, cb] : b.terms())
        if (auto m = mono_mul(*poset_, ma, mb)) r.add_term(*m, ca * cb);
    return r;
  }
  Elem pow(const Elem& a, int n) const {
    Elem r = one();
    for (int i = 0; i < n; ++i) r = mul(r, a);
    return r;
  }

  nlohmann::json to_json(const Elem& f) const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [m, c] : f.terms())
      j.push_back({{"coeff", to_string(c)}, {"monomial", m.to_json(*poset_)}});
    return j;
  }
  Elem from_json(const nlohmann::json& j) const {
    if (!j.is_array()) throw PosetError("ring element must be a JSON array of terms");
    Elem f;
    for (const auto& t : j) {
      if (!t.is_object() || !t.contains("coeff") || !t["coeff"].is_string() || !t.contains("monomial"))
        throw PosetError("ring element term must be {\"coeff\": string, \"monomial\": {...}}");
      f.add_term(ChainMonomial::from_json(*poset_, t["monomial"]), field_.parse(t["coeff"].get<std::string>()));
    }
    return f;
  }

 private:
  std::shared_ptr<const Poset> poset_;
  FieldOps<K> field_;
};

}  // namespace chainring
