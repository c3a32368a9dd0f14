#pragma once

// The R-module M = (free on U_s) / (U_{t-} - x_t U_t), realised on its K-basis
// of elements mu*u_t (mu a monomial in variables strictly below t) with the
// theta_s operators as the action of x_s.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chainring/ring.hpp"

namespace chainring {

struct MBasisElem {
  ChainMonomial mu;
  ElemIndex tau = 0;

  friend bool operator==(const MBasisElem&, const MBasisElem&) = default;
  friend bool operator<(const MBasisElem& a, const MBasisElem& b) {
    if (a.tau != b.tau) return a.tau < b.tau;
    return a.mu < b.mu;
  }
  std::string str(const Poset& p) const {
    return (mu.is_one() ? std::string() : mu.str(p) + "*") + "u[" + p.id(tau) + "]";
  }
};

/// mu = nu * gamma with gamma spanning t_k..t_{n-1} (each variable present)
/// and nu supported on t_1..t_{k-2}.
struct Factorization {
  ChainMonomial nu;
  ChainMonomial gamma;
  int k = 1;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Raised for inputs violating the basis invariants.
class ModuleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_basis_elem(const Poset& p, const MBasisElem& b);
Multidegree multidegree(const Poset& p, const MBasisElem& b);
/// Inverts multidegree; nullopt when no basis element has degree d.
std::optional<MBasisElem> basis_from_multidegree(const Poset& p, const Multidegree& d);
inline int total_degree(const Poset& p, const MBasisElem& b) {
  return b.mu.total_degree() - (p.height(b.tau) + 1);
}

Factorization factor(const Poset& p, const ChainMonomial& mu, ElemIndex tau);

/// theta_sigma on a basis element; nullopt is zero.
std::optional<MBasisElem> theta(const Poset& p, ElemIndex sigma, const MBasisElem& b);
/// Monomial acting on a basis element by iterated theta, variables applied
/// in increasing index order.
std::optional<MBasisElem> act_monomial(const Poset& p, const ChainMonomial& m, const MBasisElem& b);

/// Proof-form annihilator of u_tau: variables at non-ancestors plus
/// x_{t_k}^2 x_{t_{k+1}} ... x_{t_n} for 1 <= k <= n.
MonomialIdeal ann_u_generators(const Poset& p, ElemIndex tau);

/// Basis elements mu*u_t with deg(mu) <= max_mono_degree, canonical order.
std::vector<MBasisElem> enumerate_basis(const Poset& p, int max_mono_degree);
/// Basis elements of the given total Z-degree.
std::vector<MBasisElem> basis_of_total_degree(const Poset& p, int d);
/// Basis elements of a given multidegree (at most one).
std::vector<MBasisElem> module_piece(const Poset& p, const Multidegree& d);

template <class K>
class MElem {
 public:
  using Terms = std::map<MBasisElem, K>;

  MElem() = default;
  explicit MElem(const MBasisElem& b, K c = K(1)) { add_term(b, c); }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  void add_term(const MBasisElem& b, const K& c) {
    if (chainring::is_zero(c)) return;
    auto [it, inserted] = t_.emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (chainring::is_zero(it->second)) t_.erase(it);
    }
  }
  MElem& operator+=(const MElem& o) {
    for (const auto& [b, c] : o.t_) add_term(b, c);
    return *this;
  }
  MElem& operator-=(const MElem& o) {
    for (const auto& [b, c] : o.t_) add_term(b, -c);
    return *this;
  }
  friend MElem operator+(MElem a, const MElem& b) { return a += b; }
  friend MElem operator-(MElem a, const MElem& b) { return a -= b; }
  MElem scaled(const K& s) const {
    MElem r;
    for (const auto& [b, c] : t_) r.add_term(b, c * s);
    return r;
  }
  friend bool operator==(const MElem& a, const MElem& b) { return a.t_ == b.t_; }

  std::string str(const Poset& p) const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [b, c] : t_) {
      if (!s.empty()) s += " + ";
      if (!c.is_one()) s += to_string(c) + "*";
      s += b.str(p);
    }
    return s;
  }

 private:
  Terms t_;
};

/// M over a fixed ring: element-level action and serialisation.
template <class K>
class ModuleM {
 public:
  using Elem = MElem<K>;
  using RElem = RingElem<K>;

  explicit ModuleM(ChainRing<K> ring) : ring_(std::move(ring)) {}

  const ChainRing<K>& ring() const { return ring_; }
  const Poset& poset() const { return ring_.poset(); }

  Elem u(const std::string& id) const { return Elem(MBasisElem{{}, poset().index(id)}, ring_.scalar(1)); }
  Elem basis(const MBasisElem& b) const {
    if (!is_basis_elem(poset(), b)) throw ModuleError("not a basis element: " + b.str(poset()));
    return Elem(b, ring_.scalar(1));
  }

  Elem theta(ElemIndex sigma, const Elem& v) const {
    if (poset().is_minimal(sigma)) throw ModuleError("theta: '" + poset().id(sigma) + "' has no variable");
    Elem r;
    for (const auto& [b, c] : v.terms())
      if (auto img = chainring::theta(poset(), sigma, b)) r.add_term(*img, c);
    return r;
  }

  Elem act(const RElem& f, const Elem& v) const {
    Elem r;
    for (const auto& [m, cf] : f.terms())
      for (const auto& [b, cv] : v.terms())
        if (auto img = act_monomial(poset(), m, b)) r.add_term(*img, cf * cv);
    return r;
  }

  nlohmann::json to_json(const Elem& v) const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [b, c] : v.terms())
      j.push_back({{"coeff", to_string(c)}, {"mu", b.mu.to_json(poset())}, {"tau", poset().id(b.tau)}});
    return j;
  }
  Elem from_json(const nlohmann::json& j) const {
    if (!j.is_array()) throw ModuleError("module element must be a JSON array of terms");
    Elem v;
    for (const auto& t : j) {
      if (!t.is_object() || !t.contains("coeff") || !t["coeff"].is_string() || !t.contains("mu") ||
          !t.contains("tau") || !t["tau"].is_string())
        throw ModuleError("module term must be {\"coeff\": string, \"mu\": {...}, \"tau\": id}");
      MBasisElem b{ChainMonomial::from_json(poset(), t["mu"]), poset().index(t["tau"].get<std::string>())};
      if (!is_basis_elem(poset(), b)) throw ModuleError("not a basis element: " + b.str(poset()));
      v.add_term(b, ring_.field().parse(t["coeff"].get<std::string>()));
    }
    return v;
  }

 private:
  ChainRing<K> ring_;
};

}  // namespace chainring
