#pragma once

// The Nagata idealizer S = R (+) M with (r+m)(r'+m') = rr' + (rm' + r'm),
// and the graded comparison S/QS ~ R/Q for monomial primes Q of R.

#include <vector>

#include "chainring/construction_checks.hpp"
#include "chainring/module.hpp"
#include "chainring/report.hpp"

namespace chainring {

template <class K>
struct IdealizerElem {
  RingElem<K> r;
  MElem<K> m;
  friend bool operator==(const IdealizerElem&, const IdealizerElem&) = default;
  IdealizerElem& operator+=(const IdealizerElem& o) {
    r += o.r;
    m += o.m;
    return *this;
  }
  friend IdealizerElem operator+(IdealizerElem a, const IdealizerElem& b) { return a += b; }
  bool is_zero() const { return r.is_zero() && m.is_zero(); }
  std::string str(const Poset& p) const { return "(" + r.str(p) + ") + (" + m.str(p) + ")"; }
};

template <class K>
class Idealizer {
 public:
  using Elem = IdealizerElem<K>;

  explicit Idealizer(ModuleM<K> M) : M_(std::move(M)) {}
  const ModuleM<K>& module() const { return M_; }
  const ChainRing<K>& ring() const { return M_.ring(); }

  Elem one() const { return {ring().one(), {}}; }
  Elem from_ring(RingElem<K> r) const { return {std::move(r), {}}; }
  Elem from_module(MElem<K> m) const { return {{}, std::move(m)}; }

  Elem mul(const Elem& a, const Elem& b) const {
    return {ring().mul(a.r, b.r), M_.act(a.r, b.m) + M_.act(b.r, a.m)};
  }

 private:
  ModuleM<K> M_;
};

/// Commutativity, associativity and unit law on a set of low-degree
/// elements (all triples).
template <class K>
CheckReport check_idealizer_axioms(const Idealizer<K>& S, const std::vector<IdealizerElem<K>>& elems) {
  const Poset& p = S.ring().poset();
  CheckReport r("idealizer-ring-axioms", {{"elements", elems.size()}});
  for (const auto& a : elems) {
    r.expect(S.mul(S.one(), a) == a, {{"unit", a.str(p)}});
    for (const auto& b : elems) {
      auto ab = S.mul(a, b);
      r.expect(ab == S.mul(b, a), {{"commutativity", {a.str(p), b.str(p)}}});
      for (const auto& c : elems)
        r.expect(S.mul(ab, c) == S.mul(a, S.mul(b, c)), {{"associativity", {a.str(p), b.str(p), c.str(p)}}});
    }
  }
  return r;
}

/// (0+m)(0+m') = 0 for all enumerated basis elements of M.
template <class K>
CheckReport check_M_squared_zero(const Idealizer<K>& S, int D) {
  const Poset& p = S.ring().poset();
  CheckReport r("M-squared-zero", {{"height", p.frontier_height()}, {"degree", D}});
  auto basis = enumerate_basis(p, D);
  std::vector<IdealizerElem<K>> ms;
  for (const auto& b : basis) ms.push_back(S.from_module(S.module().basis(b)));
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i; j < ms.size(); ++j)
      r.expect(S.mul(ms[i], ms[j]).is_zero(), {{"pair", {basis[i].str(p), basis[j].str(p)}}});
  return r;
}

/// Low-degree elements used for the idealizer axiom check: 1, variables and
/// degree-2 chain monomials, u's and x*u's, and a few mixed sums.
template <class K>
std::vector<IdealizerElem<K>> sample_idealizer_elements(const Idealizer<K>& S, std::size_t limit) {
  const Poset& p = S.ring().poset();
  std::vector<IdealizerElem<K>> out{S.one()};
  for (int d = 1; d <= 2; ++d)
    for (const auto& m : monomials_of_degree(p, d)) out.push_back(S.from_ring(S.ring().monomial(m)));
  for (const auto& b : enumerate_basis(p, 1)) out.push_back(S.from_module(S.module().basis(b)));
  std::vector<IdealizerElem<K>> picked;
  // Deterministic thinning to `limit` elements, then mixed sums.
  std::size_t step = out.size() > limit ? (out.size() + limit - 1) / limit : 1;
  for (std::size_t i = 0; i < out.size(); i += step) picked.push_back(out[i]);
  std::size_t n = picked.size();
  for (std::size_t i = 1; i + 1 < n; i += 3) picked.push_back(picked[i] + picked[n - 1 - i / 3]);
  return picked;
}

/// Variables outside a chain; the chain may be empty (then Q is everything).
std::vector<ElemIndex> complement_of_chain(const Poset& p, const std::vector<ElemIndex>& chain);

/// Every chain of non-minimal elements (including the empty chain), in
/// canonical order; each gives the monomial prime generated by the
/// variables outside it.
std::vector<std::vector<ElemIndex>> all_variable_chains(const Poset& p);

/// S/QS against R/Q for Q = (x_q : q in Q_vars), degrees -(H+1)..D, below
/// the frontier. Throws if the complement of Q is not a chain.
CheckReport check_quotient_iso(const Poset& p, const std::vector<ElemIndex>& Q_vars, int D);

/// check_quotient_iso over every monomial prime of R.
std::vector<CheckReport> prime_extension_report(const Poset& p, int D);

}  // namespace chainring
