// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "chainring/construction_suite.hpp"
#include "chainring/finalg_suites.hpp"

using namespace chainring;

namespace {

constexpr int kHeight = 3;
constexpr int kDegree = 6;
constexpr std::uint64_t kSeed = 20240601;

const FieldOps<Rational> QQ{};
const FieldOps<ModP> F2{FieldSpec::parse("Fp:2")};

struct Verdict {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string summary(const CheckReport& r) {
  return r.check + " " + r.status + " (" + std::to_string(r.cases) + " cases, " +
         std::to_string(r.counterexample_count) + " counterexamples)";
}

/// All reports ok; detail lists the failing ones, or the totals.
Verdict all_ok(const std::vector<CheckReport>& reps) {
  std::size_t cases = 0;
  std::string bad;
  for (const auto& r : reps) {
    cases += r.cases;
    if (!r.ok()) bad += (bad.empty() ? "" : "; ") + summary(r);
  }
  if (!bad.empty()) return {false, bad};
  return {true, std::to_string(reps.size()) + " reports, " + std::to_string(cases) + " cases"};
}

std::shared_ptr<const Poset> binary() { return std::make_shared<const Poset>(build_binary_poset(kHeight)); }

Verdict theta_model() {
  auto t0 = std::chrono::steady_clock::now();
  auto p = binary();
  std::vector<CheckReport> reps;
  ModuleM<Rational> MQ{ChainRing<Rational>(p, QQ)};
  ModuleM<ModP> M2{ChainRing<ModP>(p, F2)};
  reps.push_back(check_theta_axioms(MQ, kDegree));
  reps.push_back(check_relations(MQ));
  reps.push_back(check_theta_axioms(M2, kDegree));
  reps.push_back(check_relations(M2));
  auto v = all_ok(reps);
  double dt = seconds_since(t0);
  v.detail += ", " + std::to_string(dt) + " s";
  v.pass = v.pass && dt < 60;
  return v;
}

Verdict chain_table() { return all_ok({check_chain_table(*binary(), kDegree)}); }

Verdict annihilator_oracle() { return all_ok({check_annihilator_oracle(*binary(), kDegree)}); }

Verdict multidegrees() {
  auto p = binary();
  auto r = check_multidegrees(*p, kDegree);
  std::size_t n = enumerate_basis(*p, kDegree).size();
  auto v = all_ok({r});
  v.detail += ", basis size " + std::to_string(n) + " (required >= 1000)";
  v.pass = v.pass && n >= 1000;
  return v;
}

Verdict pm_equals_m() {
  auto p = binary();
  std::vector<CheckReport> reps;
  for (const auto& chain : p->maximal_chains()) reps.push_back(check_PM_eq_M(*p, chain, kDegree));
  auto v = all_ok(reps);
  v.pass = v.pass && reps.size() == 8;
  return v;
}

Verdict nonflat_witnesses() {
  auto p = binary();
  std::vector<CheckReport> reps;
  for (ElemIndex s : witness_candidates(*p)) reps.push_back(check_nonflat_witness(*p, s, kDegree));
  return all_ok(reps);
}

Verdict idealizer_quotients() {
  auto p = binary();
  std::vector<CheckReport> reps;
  for (const auto& chain : p->maximal_chains()) {
    std::vector<ElemIndex> vars;
    for (ElemIndex g : chain)
      if (!p->is_minimal(g)) vars.push_back(g);
    reps.push_back(check_quotient_iso(*p, complement_of_chain(*p, vars), kDegree));
  }
  Idealizer<Rational> S{ModuleM<Rational>{ChainRing<Rational>(p, QQ)}};
  reps.push_back(check_M_squared_zero(S, kDegree));
  return all_ok(reps);
}

Verdict equivalence_battery() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<CheckReport> reps{finalg::equivalence_enumerated_gf2(3)};
  for (auto& r : finalg::equivalence_random(QQ, kSeed, 200, 6)) reps.push_back(std::move(r));
  for (auto& r : finalg::equivalence_random(F2, kSeed, 200, 6)) reps.push_back(std::move(r));
  auto v = all_ok(reps);
  double dt = seconds_since(t0);
  v.detail += ", " + std::to_string(dt) + " s";
  v.pass = v.pass && dt < 300;
  return v;
}

Verdict cap_lemma() {
  auto a = finalg::cap_random(F2, kSeed, 100, 6);
  auto b = finalg::cap_random(QQ, kSeed, 100, 6);
  auto v = all_ok({a, b});
  v.detail += ", hypothesis true in " + a.notes["hypothesis_true"].dump() + " + " + b.notes["hypothesis_true"].dump() +
              " pairs";
  return v;
}

Verdict content() {
  return all_ok({finalg::content_random(F2, kSeed, 100, 6), finalg::content_random(QQ, kSeed, 50, 6)});
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Verdict determinism() {
  std::string a = "acceptance_determinism_a.json", b = "acceptance_determinism_b.json";
  std::string cmd = std::string(CHAINRING_CLI) + " verify-construction --height 3 --degree 6 --field Q --seed 7 --out ";
  int ra = std::system((cmd + a).c_str());
  int rb = std::system((cmd + b).c_str());
  std::string ja = slurp(a), jb = slurp(b);
  std::remove(a.c_str());
  std::remove(b.c_str());
  if (ja.empty()) return {false, "no report written (status " + std::to_string(ra) + ")"};
  bool same = ja == jb && ra == rb;
  return {same, same ? std::to_string(ja.size()) + " identical bytes" : "reports differ"};
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"theta model soundness", theta_model},
      {"saturated chain product table", chain_table},
      {"annihilator oracle", annihilator_oracle},
      {"multidegree injectivity", multidegrees},
      {"PM = M on maximal chains", pm_equals_m},
      {"non-flatness witness triples", nonflat_witnesses},
      {"idealizer quotients and M^2 = 0", idealizer_quotients},
      {"flatness equivalence battery", equivalence_battery},
      {"cap lemma suite", cap_lemma},
      {"content", content},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << ": " << v.detail
              << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << std::endl;
  return failed ? 1 : 0;
}
