#include "chainring/construction_checks.hpp"
#include "chainring/construction_suite.hpp"

#include <algorithm>
#include <map>

namespace chainring {

namespace {

nlohmann::json params(const Poset& p, int D) { return {{"height", p.frontier_height()}, {"degree", D}}; }

std::string show(const Poset& p, const std::optional<MBasisElem>& b) { return b ? b->str(p) : "0"; }

// Exponent vectors (a_1..a_m), each a_i >= 1, with sum <= D.
void positive_vectors(std::size_t m, int budget, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (cur.size() == m) {
    out.push_back(cur);
    return;
  }
  int remaining_slots = static_cast<int>(m - cur.size()) - 1;
  for (int a = 1; a <= budget - remaining_slots; ++a) {
    cur.push_back(a);
    positive_vectors(m, budget - a, cur, out);
    cur.pop_back();
  }
}

}  // namespace

CheckReport check_poset(const Poset& p) {
  CheckReport r("poset-validation", {{"height", p.frontier_height()}, {"elements", p.size()}});
  for (const auto& v : p.validate()) r.fail({{"condition", v.condition}, {"element", v.element}, {"detail", v.detail}});
  r.cases = p.size();
  r.notes["maximal_chains"] = p.maximal_chains().size();
  return r;
}

CheckReport check_chain_table(const Poset& p, int D) {
  CheckReport r("chain-product-table", params(p, D));
  for (std::size_t t = 0; t < p.size(); ++t) {
    const auto& chain = p.chain_below(static_cast<ElemIndex>(t));
    std::size_t n = chain.size() - 1;
    for (std::size_t k = 1; k <= n; ++k) {
      std::vector<std::vector<int>> vecs;
      std::vector<int> cur;
      positive_vectors(n - k + 1, D, cur, vecs);
      for (const auto& a : vecs) {
        std::vector<ChainMonomial::Term> terms;
        bool all_one = true;
        for (std::size_t i = 0; i < a.size(); ++i) {
          terms.emplace_back(chain[k + i], a[i]);
          all_one = all_one && a[i] == 1;
        }
        ChainMonomial m(std::move(terms));
        auto got = act_monomial(p, m, MBasisElem{{}, static_cast<ElemIndex>(t)});
        std::optional<MBasisElem> want;
        if (all_one) want = MBasisElem{{}, chain[k - 1]};
        r.expect(got == want, {{"monomial", m.str(p)}, {"tau", p.id(chain[n])}, {"got", show(p, got)},
                               {"expected", show(p, want)}});
      }
    }
  }
  return r;
}

CheckReport check_multidegrees(const Poset& p, int D) {
  CheckReport r("multidegree", params(p, D));
  auto basis = enumerate_basis(p, D);
  std::map<Multidegree, MBasisElem> seen;
  for (const auto& b : basis) {
    Multidegree d = multidegree(p, b);
    auto [it, inserted] = seen.emplace(d, b);
    r.expect(inserted, {{"collision", d.str(p)}, {"first", it->second.str(p)}, {"second", b.str(p)}});
    auto back = basis_from_multidegree(p, d);
    r.expect(back && *back == b, {{"round_trip", b.str(p)}, {"got", show(p, back)}});
    r.expect(module_piece(p, d).size() <= 1, {{"piece", d.str(p)}});
  }
  r.notes["basis_elements"] = basis.size();
  r.notes["distinct_multidegrees"] = seen.size();
  return r;
}

CheckReport check_annihilator_oracle(const Poset& p, int D) {
  CheckReport r("annihilator-oracle", params(p, D));
  std::vector<ChainMonomial> monos;
  for (int d = 0; d <= D; ++d)
    for (auto& m : monomials_of_degree(p, d)) monos.push_back(std::move(m));
  std::size_t kernel_total = 0;
  for (std::size_t t = 0; t < p.size(); ++t) {
    auto tau = static_cast<ElemIndex>(t);
    MonomialIdeal ann = ann_u_generators(p, tau);
    std::size_t kernel = 0;
    for (const auto& m : monos) {
      bool killed = !act_monomial(p, m, MBasisElem{{}, tau}).has_value();
      kernel += killed;
      r.expect(killed == ann.contains(m),
               {{"tau", p.id(tau)}, {"monomial", m.str(p)}, {"kernel", killed}, {"formula", ann.contains(m)}});
    }
    kernel_total += kernel;
    r.certify({{"tau", p.id(tau)}, {"generators", ann.to_json(p)}, {"kernel_monomials", kernel}});
  }
  r.notes["monomials_per_tau"] = monos.size();
  r.notes["kernel_monomials_total"] = kernel_total;
  return r;
}

CheckReport check_cyclic_injective(const Poset& p, int D) {
  CheckReport r("cyclic-submodule-injective", params(p, D));
  for (std::size_t t = 0; t < p.size(); ++t) {
    auto tau = static_cast<ElemIndex>(t);
    MonomialIdeal ann = ann_u_generators(p, tau);
    std::map<MBasisElem, ChainMonomial> image;
    for (int d = 0; d <= D; ++d)
      for (const auto& m : monomials_of_degree(p, d)) {
        if (ann.contains(m)) continue;
        auto img = act_monomial(p, m, MBasisElem{{}, tau});
        if (!r.expect(img.has_value(), {{"tau", p.id(tau)}, {"monomial", m.str(p)}, {"image", "0"}})) continue;
        auto [it, inserted] = image.emplace(*img, m);
        r.expect(inserted, {{"tau", p.id(tau)}, {"monomials", {it->second.str(p), m.str(p)}}, {"image", img->str(p)}});
      }
  }
  return r;
}

CheckReport check_PM_eq_M(const Poset& p, const std::vector<ElemIndex>& chain, int D) {
  nlohmann::json chain_ids = nlohmann::json::array();
  for (ElemIndex g : chain) chain_ids.push_back(p.id(g));
  nlohmann::json ps = params(p, D);
  ps["chain"] = chain_ids;
  CheckReport r("PM=M", ps);
  MonomialIdeal P = minimal_prime(p, chain);
  std::size_t frontier = 0;
  for (const auto& b : enumerate_basis(p, D)) {
    if (p.is_frontier(b.tau)) {
      ++frontier;
      continue;
    }
    std::optional<ElemIndex> omega;
    for (ElemIndex w : p.immediate_successors(b.tau))
      if (std::find(chain.begin(), chain.end(), w) == chain.end()) {
        omega = w;
        break;
      }
    if (!r.expect(omega.has_value(), {{"basis", b.str(p)}, {"reason", "every successor lies on the chain"}})) continue;
    MBasisElem pre{b.mu, *omega};
    auto img = theta(p, *omega, pre);
    bool ok = is_basis_elem(p, pre) && P.contains(ChainMonomial::var(*omega)) && img && *img == b;
    if (r.expect(ok, {{"basis", b.str(p)}, {"omega", p.id(*omega)}, {"got", show(p, img)}}))
      r.certify({{"basis", b.str(p)}, {"equals", "x[" + p.id(*omega) + "]*" + pre.str(p)}});
  }
  r.notes["frontier_excluded"] = frontier;
  return r;
}

std::optional<std::pair<ElemIndex, MBasisElem>> in_ann_times_M(const Poset& p, ElemIndex sigma,
                                                               const MBasisElem& w) {
  Multidegree d = multidegree(p, w);
  for (ElemIndex t : p.nonminimal()) {
    if (!p.incomparable(t, sigma)) continue;
    Multidegree pre = d;
    pre.add(t, -1);
    auto b = basis_from_multidegree(p, pre);
    if (!b) continue;
    auto img = theta(p, t, *b);
    if (img && *img == w) return std::make_pair(t, *b);
  }
  return std::nullopt;
}

CheckReport check_nonflat_witness(const Poset& p, ElemIndex sigma, int D) {
  nlohmann::json ps = params(p, D);
  ps["sigma"] = p.id(sigma);
  CheckReport r("nonflat-witness", ps);
  if (p.is_minimal(sigma)) throw ModuleError("nonflat witness: '" + p.id(sigma) + "' has no variable");
  const auto& succ = p.immediate_successors(sigma);
  if (succ.empty() || p.is_frontier(sigma))
    throw ModuleError("nonflat witness: '" + p.id(sigma) + "' has no immediate successor below the frontier");

  // The triple w = x_sigma u_{sigma1}: nonzero, killed by x_sigma, outside
  // (Ann_R x_sigma) M.
  nlohmann::json triples = nlohmann::json::array();
  bool triples_ok = true;
  for (ElemIndex s1 : succ) {
    MBasisElem w{ChainMonomial::var(sigma), s1};
    bool nonzero = is_basis_elem(p, w);
    auto killed = theta(p, sigma, w);
    auto member = in_ann_times_M(p, sigma, w);
    bool ok = nonzero && !killed && !member;
    triples_ok = triples_ok && ok;
    triples.push_back({{"sigma1", p.id(s1)},
                       {"w", w.str(p)},
                       {"nonzero", nonzero},
                       {"x_sigma*w", show(p, killed)},
                       {"annihilated", !killed.has_value()},
                       {"in_ann_times_M", member.has_value()},
                       {"verified", ok}});
    r.expect(ok, triples.back());
  }
  r.notes["successor_triples"] = triples;

  // Bounded scan of Ann_M(x_sigma) modulo (Ann_R x_sigma) M below the
  // frontier: the basis elements found here are the genuine witnesses.
  std::size_t witnesses = 0;
  nlohmann::json found = nlohmann::json::array();
  for (const auto& b : enumerate_basis(p, D)) {
    if (p.is_frontier(b.tau) || theta(p, sigma, b)) continue;
    if (in_ann_times_M(p, sigma, b)) continue;
    ++witnesses;
    if (found.size() < CheckReport::kMaxListed) found.push_back(b.str(p));
  }
  r.notes["tor_witnesses_below_frontier"] = witnesses;
  r.notes["tor_witness_examples"] = found;

  // x_{sigma-}^2 u_sigma, available when sigma- carries a variable.
  auto par = p.parent(sigma);
  if (par && !p.is_minimal(*par)) {
    MBasisElem w{ChainMonomial::var(*par, 2), sigma};
    bool ok = is_basis_elem(p, w) && !theta(p, sigma, w) && !in_ann_times_M(p, sigma, w);
    r.notes["square_witness"] = {{"w", w.str(p)}, {"verified", ok}};
    if (ok) r.certify({{"witness", w.str(p)}});
  } else {
    r.notes["square_witness"] = {{"w", nullptr}, {"verified", false},
                                 {"reason", "sigma has height 1; no variable below it"}};
  }
  return r;
}

std::vector<ElemIndex> witness_candidates(const Poset& p) {
  std::vector<ElemIndex> out;
  for (ElemIndex s : p.nonminimal())
    if (!p.is_frontier(s) && !p.immediate_successors(s).empty()) out.push_back(s);
  return out;
}

}  // namespace chainring
