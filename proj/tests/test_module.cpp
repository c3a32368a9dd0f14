#include <gtest/gtest.h>

#include <memory>
#include <set>

#include "chainring/construction_checks.hpp"
#include "chainring/module.hpp"

using namespace chainring;

namespace {

struct Fixture {
  std::shared_ptr<const Poset> p;
  explicit Fixture(int H) : p(std::make_shared<const Poset>(build_binary_poset(H))) {}
  ElemIndex operator()(const char* id) const { return p->index(id); }
  ChainMonomial x(const char* id, int e = 1) const { return ChainMonomial::var(p->index(id), e); }
  ChainMonomial mono(std::vector<std::pair<const char*, int>> t) const {
    std::vector<ChainMonomial::Term> terms;
    for (auto [id, e] : t) terms.emplace_back(p->index(id), e);
    return ChainMonomial(terms);
  }
  MBasisElem b(ChainMonomial mu, const char* tau) const { return {std::move(mu), p->index(tau)}; }
};

}  // namespace

TEST(Factor, Examples) {
  Fixture f(2);
  auto a = factor(*f.p, ChainMonomial(), f("01"));
  EXPECT_EQ(a.k, 2);
  EXPECT_TRUE(a.gamma.is_one());
  EXPECT_TRUE(a.nu.is_one());
  auto b = factor(*f.p, f.x("0"), f("01"));
  EXPECT_EQ(b.k, 1);
  EXPECT_EQ(b.gamma, f.x("0"));
  EXPECT_TRUE(b.nu.is_one());
  auto c = factor(*f.p, f.x("0", 2), f("01"));
  EXPECT_EQ(c.k, 1);
  EXPECT_EQ(c.gamma, f.x("0", 2));
  EXPECT_THROW(factor(*f.p, f.x("1"), f("01")), ModuleError);
}

TEST(Factor, InvariantsOnEnumeratedBasis) {
  Fixture f(3);
  for (const auto& b : enumerate_basis(*f.p, 5)) {
    if (f.p->is_minimal(b.tau)) continue;
    auto fz = factor(*f.p, b.mu, b.tau);
    EXPECT_EQ(fz.nu.times(fz.gamma), b.mu);
    const auto& chain = f.p->chain_below(b.tau);
    int n = static_cast<int>(chain.size()) - 1;
    ASSERT_GE(fz.k, 1);
    ASSERT_LE(fz.k, n);
    for (int j = fz.k; j <= n - 1; ++j) EXPECT_GE(fz.gamma.exponent(chain[static_cast<std::size_t>(j)]), 1);
    for (ElemIndex s : fz.gamma.support()) {
      auto pos = std::find(chain.begin(), chain.end(), s) - chain.begin();
      EXPECT_GE(pos, fz.k);
    }
    for (ElemIndex s : fz.nu.support()) {
      auto pos = std::find(chain.begin(), chain.end(), s) - chain.begin();
      EXPECT_LE(pos, fz.k - 2);
    }
    EXPECT_EQ(b.mu.exponent(chain[static_cast<std::size_t>(fz.k - 1)]), 0);
  }
}

TEST(Theta, Examples) {
  Fixture f(2);
  EXPECT_EQ(theta(*f.p, f("0"), f.b({}, "0")), f.b({}, ""));
  EXPECT_FALSE(theta(*f.p, f("1"), f.b({}, "0")));
  EXPECT_FALSE(act_monomial(*f.p, f.x("0", 2), f.b({}, "0")));
  EXPECT_EQ(theta(*f.p, f("01"), f.b(f.x("0"), "01")), f.b({}, ""));
  EXPECT_EQ(theta(*f.p, f("0"), f.b({}, "01")), f.b(f.x("0"), "01"));
  EXPECT_THROW(ModuleM<Rational>(ChainRing<Rational>(f.p)).theta(f(""), {}), ModuleError);
}

TEST(Act, Examples) {
  Fixture f(2);
  ModuleM<Rational> M{ChainRing<Rational>(f.p)};
  const auto& R = M.ring();
  EXPECT_EQ(M.act(R.mul(R.var("0"), R.var("01")), M.u("01")), M.u(""));
  EXPECT_TRUE(M.act(R.mul(R.var("0", 2), R.var("01")), M.u("01")).is_zero());
  auto v = M.u("01") + M.basis(f.b(f.x("0"), "00")).scaled(Rational(3));
  EXPECT_EQ(M.act(R.one(), v), v);
  EXPECT_EQ(M.from_json(M.to_json(v)), v);
}

TEST(Act, MultiplicationIsAModuleAction) {
  // (fg)v = f(gv) on random combinations of monomials and basis elements.
  Fixture f(3);
  ModuleM<Rational> M{ChainRing<Rational>(f.p)};
  const auto& R = M.ring();
  std::vector<ChainMonomial> monos;
  for (int d = 0; d <= 3; ++d)
    for (auto& m : monomials_of_degree(*f.p, d)) monos.push_back(m);
  auto basis = enumerate_basis(*f.p, 3);
  std::mt19937_64 rng(5);
  for (int s = 0; s < 400; ++s) {
    RingElem<Rational> a, b;
    a.add_term(monos[rng() % monos.size()], Rational(1 + static_cast<long>(rng() % 3)));
    a.add_term(monos[rng() % monos.size()], Rational(1));
    b.add_term(monos[rng() % monos.size()], Rational(2));
    b.add_term(monos[rng() % monos.size()], Rational(-1));
    MElem<Rational> v(basis[rng() % basis.size()], Rational(1));
    v.add_term(basis[rng() % basis.size()], Rational(5));
    EXPECT_EQ(M.act(R.mul(a, b), v), M.act(a, M.act(b, v)));
    EXPECT_EQ(M.act(a + b, v), M.act(a, v) + M.act(b, v));
  }
}

TEST(Multidegree, Examples) {
  Fixture f(2);
  Multidegree u0({{f(""), -1}, {f("0"), -1}});
  EXPECT_EQ(multidegree(*f.p, f.b({}, "0")), u0);
  Multidegree d({{f(""), -1}, {f("00"), -1}});
  EXPECT_EQ(multidegree(*f.p, f.b(f.x("0"), "00")), d);
  EXPECT_EQ(basis_from_multidegree(*f.p, d), f.b(f.x("0"), "00"));
  auto piece = module_piece(*f.p, u0);
  ASSERT_EQ(piece.size(), 1u);
  EXPECT_EQ(piece[0], f.b({}, "0"));
  Multidegree two_tops({{f(""), -1}, {f("0"), -1}, {f("1"), -1}});
  EXPECT_FALSE(basis_from_multidegree(*f.p, two_tops));
  EXPECT_TRUE(module_piece(*f.p, two_tops).empty());
}

TEST(Multidegree, TotalDegreeOfGenerators) {
  Fixture f(3);
  for (std::size_t i = 0; i < f.p->size(); ++i) {
    MBasisElem u{{}, static_cast<ElemIndex>(i)};
    EXPECT_EQ(total_degree(*f.p, u), -(f.p->height(u.tau) + 1));
    EXPECT_EQ(multidegree(*f.p, u).total(), total_degree(*f.p, u));
  }
}

TEST(Annihilator, Examples) {
  Fixture f(2);
  // The monomials x_0^2 x_00 style generators along with every non-ancestor
  // variable; x_10 and x_11 are not divisible by x_1 so they appear too.
  auto ann = ann_u_generators(*f.p, f("0"));
  std::set<ChainMonomial> got(ann.generators().begin(), ann.generators().end());
  std::set<ChainMonomial> want{f.x("1"), f.x("00"), f.x("01"), f.x("0", 2), f.x("10"), f.x("11")};
  EXPECT_EQ(got, want);
  for (const auto& g : ann.generators()) EXPECT_FALSE(act_monomial(*f.p, g, f.b({}, "0")));

  auto root = ann_u_generators(*f.p, f(""));
  std::set<ChainMonomial> all;
  for (ElemIndex v : f.p->nonminimal()) all.insert(ChainMonomial::var(v));
  EXPECT_EQ(std::set<ChainMonomial>(root.generators().begin(), root.generators().end()), all);
}

TEST(Annihilator, FormulaMatchesKernelOracle) {
  for (int H = 1; H <= 3; ++H) {
    auto p = build_binary_poset(H);
    auto r = check_annihilator_oracle(p, H == 3 ? 5 : 6);
    EXPECT_TRUE(r.ok()) << r.to_json().dump(1);
    EXPECT_TRUE(check_cyclic_injective(p, 5).ok());
  }
}

TEST(ModuleChecks, SmallHeightsPass) {
  for (int H = 1; H <= 2; ++H) {
    auto p = std::make_shared<const Poset>(build_binary_poset(H));
    ModuleM<Rational> M{ChainRing<Rational>(p)};
    EXPECT_TRUE(check_theta_axioms(M, 4).ok());
    EXPECT_TRUE(check_relations(M).ok());
    EXPECT_TRUE(check_chain_table(*p, 5).ok());
    auto md = check_multidegrees(*p, 5);
    EXPECT_TRUE(md.ok()) << md.to_json().dump(1);
    EXPECT_TRUE(check_graded_nonzerodivisor(M, 4, 9, 200).ok());
    ModuleM<ModP> M2{ChainRing<ModP>(p, FieldOps<ModP>{FieldSpec::parse("GF2")})};
    EXPECT_TRUE(check_theta_axioms(M2, 4).ok());
    EXPECT_TRUE(check_graded_nonzerodivisor(M2, 4, 9, 200).ok());
  }
}

TEST(ModuleChecks, PMEqualsMCertificate) {
  Fixture f(2);
  auto r = check_PM_eq_M(*f.p, {f(""), f("0"), f("00")}, 4);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.notes["frontier_excluded"].get<int>(), 0);
  bool found = false;
  for (const auto& c : r.certificates)
    if (c["basis"] == "u[0]") {
      EXPECT_EQ(c["equals"], "x[01]*u[01]");
      found = true;
    }
  EXPECT_TRUE(found);
}

TEST(ModuleChecks, NonflatWitness) {
  Fixture f(3);
  // x_0 u_00 is not killed by x_0: x_0 acts on it by the strict-below case.
  auto w = f.b(f.x("0"), "00");
  auto img = theta(*f.p, f("0"), w);
  ASSERT_TRUE(img);
  EXPECT_EQ(*img, f.b(f.x("0", 2), "00"));
  EXPECT_FALSE(in_ann_times_M(*f.p, f("0"), w));

  auto r = check_nonflat_witness(*f.p, f("0"), 4);
  EXPECT_EQ(r.status, "fail");
  EXPECT_FALSE(r.notes["successor_triples"][0]["annihilated"].get<bool>());
  EXPECT_TRUE(r.notes["square_witness"]["w"].is_null());

  auto deep = check_nonflat_witness(*f.p, f("00"), 4);
  EXPECT_TRUE(deep.notes["square_witness"]["verified"].get<bool>());
  EXPECT_EQ(deep.notes["square_witness"]["w"], "x[0]^2*u[00]");
  EXPECT_GT(deep.notes["tor_witnesses_below_frontier"].get<int>(), 0);
  EXPECT_THROW(check_nonflat_witness(*f.p, f("000"), 4), ModuleError);
}
