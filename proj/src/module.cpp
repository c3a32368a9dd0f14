#include "chainring/module.hpp"

#include <algorithm>

namespace chainring {

namespace {

// Variables strictly below t: t_1..t_{n-1} of chain_below(t).
std::vector<ElemIndex> vars_below(const Poset& p, ElemIndex t) {
  const auto& chain = p.chain_below(t);
  std::vector<ElemIndex> v;
  for (std::size_t i = 1; i + 1 < chain.size(); ++i) v.push_back(chain[i]);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

bool is_basis_elem(const Poset& p, const MBasisElem& b) {
  if (b.tau < 0 || static_cast<std::size_t>(b.tau) >= p.size()) return false;
  for (auto [i, e] : b.mu.exponents())
    if (e <= 0 || p.is_minimal(i) || !p.less(i, b.tau)) return false;
  return true;
}

Multidegree multidegree(const Poset& p, const MBasisElem& b) {
  Multidegree d = b.mu.multidegree();
  for (ElemIndex g : p.chain_below(b.tau)) d.add(g, -1);
  return d;
}

std::optional<MBasisElem> basis_from_multidegree(const Poset& p, const Multidegree& d) {
  std::optional<ElemIndex> tau;
  for (auto [i, v] : d.coeffs()) {
    if (v >= 0) continue;
    if (!tau) {
      tau = i;
    } else if (p.leq(*tau, i)) {
      tau = i;
    } else if (!p.leq(i, *tau)) {
      return std::nullopt;  // two incomparable negative entries
    }
  }
  if (!tau) return std::nullopt;
  const auto& chain = p.chain_below(*tau);
  std::vector<ChainMonomial::Term> exps;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    int e = d[chain[k]] + 1;
    bool must_vanish = k == 0 || k + 1 == chain.size();
    if (e < 0 || (must_vanish && e != 0)) return std::nullopt;
    if (e > 0) exps.emplace_back(chain[k], e);
  }
  for (auto [i, v] : d.coeffs())
    if (!p.leq(i, *tau)) return std::nullopt;
  MBasisElem b{ChainMonomial(std::move(exps)), *tau};
  if (multidegree(p, b) != d) return std::nullopt;
  return b;
}

Factorization factor(const Poset& p, const ChainMonomial& mu, ElemIndex tau) {
  MBasisElem b{mu, tau};
  if (!is_basis_elem(p, b)) throw ModuleError("factor: " + b.str(p) + " is not a basis element");
  const auto& chain = p.chain_below(tau);
  int n = static_cast<int>(chain.size()) - 1;
  if (n < 1) throw ModuleError("factor: '" + p.id(tau) + "' is minimal");
  int j = 0;  // x_{t_0} never occurs
  for (int i = n - 1; i >= 1; --i)
    if (mu.exponent(chain[static_cast<std::size_t>(i)]) == 0) {
      j = i;
      break;
    }
  int k = j + 1;
  std::vector<ElemIndex> gamma_idx(chain.begin() + k, chain.begin() + n);
  std::sort(gamma_idx.begin(), gamma_idx.end());
  Factorization f;
  f.k = k;
  f.gamma = mu.restricted_to(gamma_idx);
  f.nu = f.gamma.quotient_of(mu);
  return f;
}

std::optional<MBasisElem> theta(const Poset& p, ElemIndex sigma, const MBasisElem& b) {
  if (p.is_minimal(sigma)) throw ModuleError("theta: '" + p.id(sigma) + "' has no variable");
  if (!p.leq(sigma, b.tau)) return std::nullopt;
  if (sigma != b.tau) return MBasisElem{b.mu.times(ChainMonomial::var(sigma)), b.tau};
  Factorization f = factor(p, b.mu, b.tau);
  for (auto [i, e] : f.gamma.exponents())
    if (e >= 2) return std::nullopt;
  return MBasisElem{f.nu, p.chain_below(b.tau)[static_cast<std::size_t>(f.k - 1)]};
}

std::optional<MBasisElem> act_monomial(const Poset& p, const ChainMonomial& m, const MBasisElem& b) {
  std::optional<MBasisElem> cur = b;
  for (auto [i, e] : m.exponents())
    for (int r = 0; r < e && cur; ++r) cur = theta(p, i, *cur);
  return cur;
}

MonomialIdeal ann_u_generators(const Poset& p, ElemIndex tau) {
  std::vector<ChainMonomial> gens;
  for (ElemIndex v : p.nonminimal())
    if (!p.leq(v, tau)) gens.push_back(ChainMonomial::var(v));
  const auto& chain = p.chain_below(tau);
  std::size_t n = chain.size() - 1;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<ChainMonomial::Term> t{{chain[k], 2}};
    for (std::size_t j = k + 1; j <= n; ++j) t.emplace_back(chain[j], 1);
    gens.emplace_back(std::move(t));
  }
  return MonomialIdeal(std::move(gens));
}

std::vector<MBasisElem> enumerate_basis(const Poset& p, int max_mono_degree) {
  std::vector<MBasisElem> out;
  for (std::size_t t = 0; t < p.size(); ++t) {
    auto vars = vars_below(p, static_cast<ElemIndex>(t));
    for (int d = 0; d <= max_mono_degree; ++d)
      for (auto& m : monomials_in(vars, d)) out.push_back({std::move(m), static_cast<ElemIndex>(t)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MBasisElem> basis_of_total_degree(const Poset& p, int d) {
  std::vector<MBasisElem> out;
  for (std::size_t t = 0; t < p.size(); ++t) {
    int mono = d + p.height(static_cast<ElemIndex>(t)) + 1;
    if (mono < 0) continue;
    for (auto& m : monomials_in(vars_below(p, static_cast<ElemIndex>(t)), mono))
      out.push_back({std::move(m), static_cast<ElemIndex>(t)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MBasisElem> module_piece(const Poset& p, const Multidegree& d) {
  if (auto b = basis_from_multidegree(p, d)) return {*b};
  return {};
}

}  // namespace chainring
