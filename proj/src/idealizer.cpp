#include "chainring/idealizer.hpp"

#include <algorithm>
#include <set>

namespace chainring {

std::vector<ElemIndex> complement_of_chain(const Poset& p, const std::vector<ElemIndex>& chain) {
  std::vector<ElemIndex> out;
  for (ElemIndex v : p.nonminimal())
    if (std::find(chain.begin(), chain.end(), v) == chain.end()) out.push_back(v);
  return out;
}

std::vector<std::vector<ElemIndex>> all_variable_chains(const Poset& p) {
  std::vector<std::vector<ElemIndex>> out{{}};
  for (ElemIndex t : p.nonminimal()) {
    std::vector<ElemIndex> below;
    for (ElemIndex g : p.chain_below(t))
      if (g != t && !p.is_minimal(g)) below.push_back(g);
    std::size_t n = below.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<ElemIndex> c{t};
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) c.push_back(below[i]);
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  return out;
}

namespace {

long binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

CheckReport check_quotient_iso(const Poset& p, const std::vector<ElemIndex>& Q_vars_in, int D) {
  std::vector<ElemIndex> Q_vars = Q_vars_in;
  std::sort(Q_vars.begin(), Q_vars.end());
  Q_vars.erase(std::unique(Q_vars.begin(), Q_vars.end()), Q_vars.end());
  for (ElemIndex q : Q_vars)
    if (q < 0 || static_cast<std::size_t>(q) >= p.size() || p.is_minimal(q))
      throw std::invalid_argument("quotient iso: prime generators must be variables");
  if (!is_prime_variable_ideal(p, Q_vars))
    throw std::invalid_argument("quotient iso: the surviving variables do not form a chain, so Q is not prime");

  MonomialIdeal Q = variable_ideal(Q_vars);
  std::vector<ElemIndex> surviving;
  for (ElemIndex v : p.nonminimal())
    if (!std::binary_search(Q_vars.begin(), Q_vars.end(), v)) surviving.push_back(v);

  nlohmann::json gens = nlohmann::json::array();
  for (ElemIndex q : Q_vars) gens.push_back("x[" + p.id(q) + "]");
  nlohmann::json chain = nlohmann::json::array();
  for (ElemIndex s : surviving) chain.push_back(p.id(s));
  CheckReport r("quotient-iso", {{"height", p.frontier_height()}, {"degree", D}, {"prime", gens}, {"surviving_chain", chain}});

  int H = p.frontier_height();
  std::size_t pieces = 0, frontier_excluded = 0;
  for (int d = -(H + 1); d <= D; ++d) {
    std::size_t dim_r_part = 0;
    if (d >= 0) {
      std::set<ChainMonomial> survivors;
      for (auto& m : monomials_of_degree(p, d))
        if (!Q.contains(m)) survivors.insert(m);
      auto poly = monomials_in(surviving, d);
      std::set<ChainMonomial> poly_set(poly.begin(), poly.end());
      r.expect(survivors == poly_set, {{"degree", d}, {"reason", "R/Q basis is not the chain-polynomial basis"}});
      r.expect(static_cast<long>(poly.size()) == binomial(static_cast<long>(surviving.size()) + d - 1, d) ||
                   (surviving.empty() && d == 0 && poly.size() == 1),
               {{"degree", d}, {"reason", "polynomial ring dimension mismatch"}});
      dim_r_part = survivors.size();
    }
    std::set<MBasisElem> hits;
    for (const auto& b : basis_of_total_degree(p, d - 1))
      for (ElemIndex q : Q_vars)
        if (auto img = theta(p, q, b)) hits.insert(*img);
    std::size_t m_survivors = 0;
    for (const auto& b : basis_of_total_degree(p, d)) {
      if (p.is_frontier(b.tau)) {
        ++frontier_excluded;
        continue;
      }
      bool in_QM = hits.count(b) > 0;
      m_survivors += !in_QM;
      r.expect(in_QM, {{"degree", d}, {"basis", b.str(p)}, {"reason", "not in QM"}});
    }
    std::size_t dim_s = dim_r_part + m_survivors;
    std::size_t dim_rq = d >= 0 ? monomials_in(surviving, d).size() : 0;
    r.expect(dim_s == dim_rq, {{"degree", d}, {"dim_S/QS", dim_s}, {"dim_R/Q", dim_rq}});
    r.certify({{"degree", d}, {"dim_S/QS", dim_s}, {"dim_R/Q", dim_rq}});
    ++pieces;
  }

  // Products of surviving basis monomials stay nonzero and outside Q.
  std::vector<ChainMonomial> low;
  for (int d = 0; d <= D; ++d)
    for (auto& m : monomials_in(surviving, d)) low.push_back(std::move(m));
  for (const auto& a : low)
    for (const auto& b : low) {
      if (a.total_degree() + b.total_degree() > D) continue;
      auto ab = mono_mul(p, a, b);
      r.expect(ab && !Q.contains(*ab), {{"zero_divisor_pair", {a.str(p), b.str(p)}}});
    }

  r.notes["iso_pieces_checked"] = pieces;
  r.notes["frontier_excluded"] = frontier_excluded;
  r.notes["evidence"] = "bounded-degree; the quotient basis is the monomial basis of a polynomial ring on a chain";
  return r;
}

std::vector<CheckReport> prime_extension_report(const Poset& p, int D) {
  std::vector<CheckReport> out;
  for (const auto& chain : all_variable_chains(p)) {
    std::vector<ElemIndex> Q = complement_of_chain(p, chain);
    CheckReport r = check_quotient_iso(p, Q, D);
    std::vector<ElemIndex> full = chain;
    bool minimal = false;
    if (!chain.empty()) {
      ElemIndex top = *std::max_element(chain.begin(), chain.end(),
                                        [&](ElemIndex a, ElemIndex b) { return p.height(a) < p.height(b); });
      const auto& below = p.chain_below(top);
      minimal = p.height(top) == p.frontier_height() && chain.size() + 1 == below.size();
    } else {
      minimal = p.frontier_height() == 0;
    }
    r.notes["minimal_prime"] = minimal;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace chainring
