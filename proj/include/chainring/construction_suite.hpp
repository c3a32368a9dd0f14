#pragma once

// The full verification run for the construction on one poset: poset
// conditions, the theta model of M, annihilators, M = PM, non-flatness
// witnesses, the idealizer and its prime extensions.

#include <cstdint>
#include <memory>
#include <vector>

#include "chainring/construction_checks.hpp"
#include "chainring/idealizer.hpp"

namespace chainring {

/// Elements sigma with a variable and an immediate successor below the
/// frontier.
std::vector<ElemIndex> witness_candidates(const Poset& p);

/// Stops after poset validation when the poset violates a condition.
template <class K>
std::vector<CheckReport> verify_construction(std::shared_ptr<const Poset> p, const FieldOps<K>& F, int D,
                                             std::uint64_t seed, StageTimer& timer) {
  std::vector<CheckReport> out;
  out.push_back(timer.run("poset-validation", [&] { return check_poset(*p); }));
  if (!out.back().ok()) return out;
  ModuleM<K> M{ChainRing<K>(p, F)};
  out.push_back(timer.run("theta-axioms", [&] { return check_theta_axioms(M, D); }));
  out.push_back(timer.run("relations", [&] { return check_relations(M); }));
  out.push_back(timer.run("chain-product-table", [&] { return check_chain_table(*p, D); }));
  out.push_back(timer.run("multidegree", [&] { return check_multidegrees(*p, D); }));
  out.push_back(timer.run("annihilator-oracle", [&] { return check_annihilator_oracle(*p, D); }));
  out.push_back(timer.run("cyclic-injective", [&] { return check_cyclic_injective(*p, D); }));
  for (const auto& chain : p->maximal_chains())
    out.push_back(timer.run("PM=M " + p->id(chain.back()), [&] { return check_PM_eq_M(*p, chain, D); }));
  for (ElemIndex s : witness_candidates(*p))
    out.push_back(timer.run("nonflat-witness " + p->id(s), [&] { return check_nonflat_witness(*p, s, D); }));
  out.push_back(timer.run("graded-nonzerodivisor", [&] { return check_graded_nonzerodivisor(M, D, seed, 200); }));
  Idealizer<K> S(M);
  out.push_back(timer.run("idealizer-ring-axioms",
                          [&] { return check_idealizer_axioms(S, sample_idealizer_elements(S, 40)); }));
  out.push_back(timer.run("M-squared-zero", [&] { return check_M_squared_zero(S, D); }));
  for (auto& r : timer.run("prime-extension", [&] { return prime_extension_report(*p, D); })) out.push_back(std::move(r));
  return out;
}

}  // namespace chainring
