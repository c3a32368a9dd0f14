#pragma once

// Bounded-degree verification of the structure of M: theta axioms, the
// chain product table, multidegree recovery, annihilators, M = PM, and the
// non-flatness witnesses. D always bounds the degree of the monomial part.

#include <cstdint>
#include <random>
#include <vector>

#include "chainring/module.hpp"
#include "chainring/report.hpp"

namespace chainring {

CheckReport check_poset(const Poset& p);

/// Saturated-chain product table: x_{t_k}^{a_k}..x_{t_n}^{a_n} u_{t_n}.
CheckReport check_chain_table(const Poset& p, int D);
CheckReport check_multidegrees(const Poset& p, int D);
/// Formula annihilator vs the brute-force kernel of m -> m*u_t.
CheckReport check_annihilator_oracle(const Poset& p, int D);
/// m -> m*u_t is injective on monomials outside the annihilator.
CheckReport check_cyclic_injective(const Poset& p, int D);
CheckReport check_PM_eq_M(const Poset& p, const std::vector<ElemIndex>& chain, int D);
CheckReport check_nonflat_witness(const Poset& p, ElemIndex sigma, int D);

/// Whether w lies in (Ann_R x_sigma) M, decided on the multidegree piece of
/// w. Returns the certificate (tau, b) with x_tau * b = w when it does.
std::optional<std::pair<ElemIndex, MBasisElem>> in_ann_times_M(const Poset& p, ElemIndex sigma,
                                                               const MBasisElem& w);

/// (dagger) and (double dagger) on all basis elements with deg(mu) <= D.
template <class K>
CheckReport check_theta_axioms(const ModuleM<K>& M, int D) {
  const Poset& p = M.poset();
  CheckReport r("theta-axioms", {{"height", p.frontier_height()}, {"degree", D}});
  auto basis = enumerate_basis(p, D);
  const auto& vars = p.nonminimal();
  for (const auto& b : basis) {
    auto v = M.basis(b);
    std::vector<typename ModuleM<K>::Elem> once;
    once.reserve(vars.size());
    for (ElemIndex s : vars) once.push_back(M.theta(s, v));
    for (std::size_t i = 0; i < vars.size(); ++i)
      for (std::size_t j = i; j < vars.size(); ++j) {
        auto st = M.theta(vars[i], once[j]);
        auto ts = M.theta(vars[j], once[i]);
        nlohmann::json where = {{"sigma", p.id(vars[i])}, {"tau", p.id(vars[j])}, {"basis", b.str(p)}};
        r.expect(st == ts, where);
        if (p.incomparable(vars[i], vars[j])) r.expect(st.is_zero() && ts.is_zero(), where);
      }
  }
  r.notes["basis_elements"] = basis.size();
  return r;
}

/// x_t u_t = u_{t-} for every non-minimal t.
template <class K>
CheckReport check_relations(const ModuleM<K>& M) {
  const Poset& p = M.poset();
  CheckReport r("relations", {{"height", p.frontier_height()}});
  for (ElemIndex t : p.nonminimal()) {
    auto lhs = M.act(M.ring().var(p.id(t)), M.u(p.id(t)));
    auto rhs = M.u(p.id(*p.parent(t)));
    if (r.expect(lhs == rhs, {{"tau", p.id(t)}, {"got", lhs.str(p)}}))
      r.certify({{"tau", p.id(t)}, {"x_tau*u_tau", rhs.str(p)}});
  }
  return r;
}

/// Graded nonzerodivisors: for f = c + f' (c a nonzero scalar, f' of positive
/// degree) the lowest component of f*v is c times the lowest component of v,
/// on R and on M.
template <class K>
CheckReport check_graded_nonzerodivisor(const ModuleM<K>& M, int D, std::uint64_t seed, int samples) {
  const Poset& p = M.poset();
  const auto& R = M.ring();
  CheckReport r("graded-nonzerodivisor", {{"height", p.frontier_height()}, {"degree", D}, {"seed", seed}, {"samples", samples}});
  std::mt19937_64 rng(seed);
  std::vector<ChainMonomial> positive;
  for (int d = 1; d <= 2; ++d)
    for (auto& m : monomials_of_degree(p, d)) positive.push_back(m);
  std::vector<ChainMonomial> rbasis;
  for (int d = 0; d <= D; ++d)
    for (auto& m : monomials_of_degree(p, d)) rbasis.push_back(m);
  auto mbasis = enumerate_basis(p, D);
  auto coeff = [&] {
    K c = R.scalar(static_cast<long>(rng() % 5) + 1);
    while (is_zero(c)) c = R.scalar(static_cast<long>(rng() % 5) + 1);
    return c;
  };
  auto random_f = [&] {
    RingElem<K> f = R.one().scaled(coeff());
    if (positive.empty()) return f;
    int n = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < n; ++i) f += R.monomial(positive[rng() % positive.size()]).scaled(coeff());
    return f;
  };
  auto lowest_m = [&](const MElem<K>& v) {
    MElem<K> low;
    std::optional<int> best;
    for (const auto& [b, c] : v.terms()) best = best ? std::min(*best, total_degree(p, b)) : total_degree(p, b);
    for (const auto& [b, c] : v.terms())
      if (total_degree(p, b) == *best) low.add_term(b, c);
    return low;
  };
  for (int s = 0; s < samples; ++s) {
    RingElem<K> f = random_f();
    K c = f.coeff(ChainMonomial());
    RingElem<K> v;
    int n = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < n; ++i) v += R.monomial(rbasis[rng() % rbasis.size()]).scaled(coeff());
    if (!v.is_zero()) {
      auto fv = R.mul(f, v);
      int d = *v.lowest_degree();
      r.expect(!fv.is_zero() && *fv.lowest_degree() == d &&
                   fv.homogeneous_component(d) == v.homogeneous_component(d).scaled(c),
               {{"ring", "R"}, {"f", f.str(p)}, {"v", v.str(p)}});
    }
    MElem<K> w;
    for (int i = 0; i < n; ++i) w += M.basis(mbasis[rng() % mbasis.size()]).scaled(coeff());
    if (!w.is_zero()) {
      auto fw = M.act(f, w);
      r.expect(!fw.is_zero() && lowest_m(fw) == lowest_m(w).scaled(c),
               {{"ring", "M"}, {"f", f.str(p)}, {"v", w.str(p)}});
    }
  }
  return r;
}

}  // namespace chainring
