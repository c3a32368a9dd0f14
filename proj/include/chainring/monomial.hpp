#pragma once

// Monomials in the variables x_s (s non-minimal) and multidegrees in the free
// abelian group on the poset. Both are sparse, sorted by element index.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "chainring/poset.hpp"

namespace chainring {

class Multidegree {
 public:
  Multidegree() = default;
  explicit Multidegree(std::map<ElemIndex, int> coeffs);

  int operator[](ElemIndex i) const {
    auto it = c_.find(i);
    return it == c_.end() ? 0 : it->second;
  }
  void add(ElemIndex i, int v);
  const std::map<ElemIndex, int>& coeffs() const { return c_; }
  int total() const;

  Multidegree& operator+=(const Multidegree& o);
  Multidegree& operator-=(const Multidegree& o);
  friend Multidegree operator+(Multidegree a, const Multidegree& b) { return a += b; }
  friend Multidegree operator-(Multidegree a, const Multidegree& b) { return a -= b; }
  friend bool operator==(const Multidegree&, const Multidegree&) = default;
  friend auto operator<=>(const Multidegree& a, const Multidegree& b) { return a.c_ <=> b.c_; }

  nlohmann::json to_json(const Poset& p) const;
  static Multidegree from_json(const Poset& p, const nlohmann::json& j);
  std::string str(const Poset& p) const;

 private:
  std::map<ElemIndex, int> c_;
};

class ChainMonomial {
 public:
  using Term = std::pair<ElemIndex, int>;

  ChainMonomial() = default;
  /// Zero exponents are dropped; repeated indices are merged.
  explicit ChainMonomial(std::vector<Term> exps);
  static ChainMonomial var(ElemIndex i, int e = 1) { return ChainMonomial({{i, e}}); }

  const std::vector<Term>& exponents() const { return e_; }
  bool is_one() const { return e_.empty(); }
  int exponent(ElemIndex i) const;
  int total_degree() const;
  std::vector<ElemIndex> support() const;

  /// Exponentwise sum, no chain check.
  ChainMonomial times(const ChainMonomial& o) const;
  /// Exponentwise max.
  ChainMonomial lcm(const ChainMonomial& o) const;
  bool divides(const ChainMonomial& o) const;
  /// Exponentwise difference; requires divides(o).
  ChainMonomial quotient_of(const ChainMonomial& o) const;
  /// Restricts to the given (sorted) index set.
  ChainMonomial restricted_to(const std::vector<ElemIndex>& idx) const;

  Multidegree multidegree() const;

  friend bool operator==(const ChainMonomial&, const ChainMonomial&) = default;
  /// Degree-then-lexicographic on the (id, exponent) sequence.
  friend bool operator<(const ChainMonomial& a, const ChainMonomial& b);

  std::string str(const Poset& p) const;
  nlohmann::json to_json(const Poset& p) const;
  static ChainMonomial from_json(const Poset& p, const nlohmann::json& j);

 private:
  std::vector<Term> e_;
};

/// Support is totally ordered and consists of non-minimal elements.
bool is_chain_monomial(const Poset& p, const ChainMonomial& m);

/// Deepest support element, or nullopt for the monomial 1.
std::optional<ElemIndex> top_of(const Poset& p, const ChainMonomial& m);

/// Product in R: nullopt is the zero marker (supports not a chain).
std::optional<ChainMonomial> mono_mul(const Poset& p, const ChainMonomial& a, const ChainMonomial& b);

/// All chain monomials of exact total degree d, canonical order.
std::vector<ChainMonomial> monomials_of_degree(const Poset& p, int d);

/// All monomials of exact degree d in the given variables (any support).
std::vector<ChainMonomial> monomials_in(const std::vector<ElemIndex>& vars, int d);

}  // namespace chainring
