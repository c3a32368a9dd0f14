#include <algorithm>

#include "chainring/ring.hpp"

namespace chainring {

MonomialIdeal::MonomialIdeal(std::vector<ChainMonomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // Sorted by degree first, so any divisor of g precedes g.
  for (auto& g : gens) {
    bool redundant = std::any_of(g_.begin(), g_.end(), [&](const ChainMonomial& h) { return h.divides(g); });
    if (!redundant) g_.push_back(std::move(g));
  }
}

bool MonomialIdeal::contains(const ChainMonomial& m) const {
  return std::any_of(g_.begin(), g_.end(), [&](const ChainMonomial& g) { return g.divides(m); });
}

nlohmann::json MonomialIdeal::to_json(const Poset& p) const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& g : g_) j.push_back(g.str(p));
  return j;
}

std::string MonomialIdeal::str(const Poset& p) const {
  if (g_.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < g_.size(); ++i) s += (i ? ", " : "") + g_[i].str(p);
  return s + ")";
}

bool ideal_member(const ChainMonomial& m, const MonomialIdeal& I) { return I.contains(m); }

MonomialIdeal ideal_intersect(const Poset& p, const MonomialIdeal& I, const MonomialIdeal& J) {
  std::vector<ChainMonomial> gens;
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) {
      ChainMonomial l = a.lcm(b);
      if (is_chain(p, l.support())) gens.push_back(std::move(l));
    }
  return MonomialIdeal(std::move(gens));
}

MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  std::vector<ChainMonomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return MonomialIdeal(std::move(gens));
}

std::vector<ChainMonomial> ideal_piece(const Poset& p, const MonomialIdeal& I, int d) {
  std::vector<ChainMonomial> out;
  for (auto& m : monomials_of_degree(p, d))
    if (I.contains(m)) out.push_back(std::move(m));
  return out;
}

MonomialIdeal variable_ideal(const std::vector<ElemIndex>& vars) {
  std::vector<ChainMonomial> gens;
  for (ElemIndex v : vars) gens.push_back(ChainMonomial::var(v));
  return MonomialIdeal(std::move(gens));
}

bool is_prime_variable_ideal(const Poset& p, const std::vector<ElemIndex>& A) {
  std::vector<ElemIndex> rest;
  for (ElemIndex v : p.nonminimal())
    if (std::find(A.begin(), A.end(), v) == A.end()) rest.push_back(v);
  return is_chain(p, rest);
}

MonomialIdeal minimal_prime(const Poset& p, const std::vector<ElemIndex>& chain) {
  if (!p.is_maximal_chain(chain)) throw std::invalid_argument("minimal_prime: not a maximal chain");
  std::vector<ElemIndex> out;
  for (ElemIndex v : p.nonminimal())
    if (std::find(chain.begin(), chain.end(), v) == chain.end()) out.push_back(v);
  return variable_ideal(out);
}

}  // namespace chainring
