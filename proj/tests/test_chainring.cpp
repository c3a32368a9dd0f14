#include <gtest/gtest.h>

#include <map>
#include <memory>
#include <random>
#include <set>

#include "chainring/field.hpp"
#include "chainring/ring.hpp"

using namespace chainring;

namespace {

auto binary(int H) { return std::make_shared<const Poset>(build_binary_poset(H)); }

// Free commutative polynomial: exponent map -> coefficient. The product in R
// is this product with non-chain monomials dropped afterwards.
using FreePoly = std::map<std::map<ElemIndex, int>, Rational>;

FreePoly to_free(const RingElem<Rational>& f) {
  FreePoly out;
  for (const auto& [m, c] : f.terms()) {
    std::map<ElemIndex, int> e(m.exponents().begin(), m.exponents().end());
    out[e] = c;
  }
  return out;
}

RingElem<Rational> from_free_filtered(const Poset& p, const FreePoly& f) {
  RingElem<Rational> r;
  for (const auto& [e, c] : f) {
    std::vector<ElemIndex> supp;
    for (const auto& [i, x] : e) supp.push_back(i);
    if (!is_chain(p, supp)) continue;
    r.add_term(ChainMonomial(std::vector<ChainMonomial::Term>(e.begin(), e.end())), c);
  }
  return r;
}

FreePoly free_mul(const FreePoly& a, const FreePoly& b) {
  FreePoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      auto e = ea;
      for (const auto& [i, x] : eb) e[i] += x;
      out[e] = out[e] + ca * cb;
    }
  return out;
}

// Degree-d monomials of R lying in I, found without the generator rule: a
// monomial is in I iff it equals some generator times a monomial of R.
std::set<ChainMonomial> piece_by_products(const Poset& p, const MonomialIdeal& I, int d) {
  std::set<ChainMonomial> out;
  for (const auto& g : I.generators()) {
    int rest = d - g.total_degree();
    if (rest < 0) continue;
    for (const auto& m : monomials_of_degree(p, rest))
      if (auto prod = mono_mul(p, g, m)) out.insert(*prod);
  }
  return out;
}

std::vector<ChainMonomial> monomials_up_to(const Poset& p, int D) {
  std::vector<ChainMonomial> out;
  for (int d = 0; d <= D; ++d)
    for (auto& m : monomials_of_degree(p, d)) out.push_back(std::move(m));
  return out;
}

}  // namespace

TEST(ChainMonomial, MonoMulExamples) {
  auto p = binary(2);
  auto x = [&](const char* id, int e = 1) { return ChainMonomial::var(p->index(id), e); };
  auto ab = mono_mul(*p, x("0"), x("01"));
  ASSERT_TRUE(ab);
  EXPECT_EQ(*ab, ChainMonomial({{p->index("0"), 1}, {p->index("01"), 1}}));
  EXPECT_FALSE(mono_mul(*p, x("0"), x("1")));
  EXPECT_EQ(*mono_mul(*p, ChainMonomial(), x("0", 2)), x("0", 2));
}

TEST(ChainMonomial, JsonRoundTripAndValidation) {
  auto p = binary(2);
  ChainMonomial m({{p->index("0"), 2}, {p->index("01"), 1}});
  EXPECT_EQ(ChainMonomial::from_json(*p, m.to_json(*p)), m);
  EXPECT_THROW(ChainMonomial::from_json(*p, nlohmann::json{{"0", 1}, {"1", 1}}), std::exception);
  EXPECT_THROW(ChainMonomial::from_json(*p, nlohmann::json{{"", 1}}), std::exception);
}

TEST(ChainRing, SquareOfSumDropsCrossTerms) {
  auto p = binary(2);
  ChainRing<Rational> R(p);
  auto f = R.var("0") + R.var("1");
  auto sq = R.mul(f, f);
  EXPECT_EQ(sq, R.var("0", 2) + R.var("1", 2));
  // Oracle: expand freely, then discard non-chain monomials.
  EXPECT_EQ(sq, from_free_filtered(*p, free_mul(to_free(f), to_free(f))));
}

TEST(ChainRing, UnitAndHomogeneousComponent) {
  auto p = binary(2);
  ChainRing<Rational> R(p);
  auto f = R.one() + R.var("0") + R.mul(R.var("0"), R.var("00"));
  EXPECT_EQ(R.mul(f, R.one()), f);
  EXPECT_EQ(f.homogeneous_component(2), R.mul(R.var("0"), R.var("00")));
  EXPECT_EQ(*f.lowest_degree(), 0);
}

TEST(ChainRing, ProductMatchesFreeExpansionRandomized) {
  auto p = binary(3);
  ChainRing<Rational> R(p);
  auto monos = monomials_up_to(*p, 3);
  std::mt19937_64 rng(11);
  auto random_elem = [&] {
    RingElem<Rational> f;
    int n = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < n; ++i)
      f.add_term(monos[rng() % monos.size()], Rational(static_cast<long>(rng() % 7) - 3));
    return f;
  };
  for (int s = 0; s < 300; ++s) {
    auto a = random_elem(), b = random_elem(), c = random_elem();
    EXPECT_EQ(R.mul(a, b), from_free_filtered(*p, free_mul(to_free(a), to_free(b))));
    EXPECT_EQ(R.mul(a, b), R.mul(b, a));
    EXPECT_EQ(R.mul(R.mul(a, b), c), R.mul(a, R.mul(b, c)));
    EXPECT_EQ(R.mul(a, b + c), R.mul(a, b) + R.mul(a, c));
  }
}

TEST(ChainRing, MonomialProductCommutativeAssociativeExhaustive) {
  // H = 2 with degree <= 3, and H = 3 with degree <= 2.
  for (auto [H, D] : {std::pair{1, 3}, std::pair{2, 3}, std::pair{3, 2}}) {
    auto p = binary(H);
    auto monos = monomials_up_to(*p, D);
    for (const auto& a : monos)
      for (const auto& b : monos) {
        auto ab = mono_mul(*p, a, b);
        ASSERT_EQ(ab, mono_mul(*p, b, a));
        for (const auto& c : monos) {
          auto bc = mono_mul(*p, b, c);
          auto left = ab ? mono_mul(*p, *ab, c) : std::nullopt;
          auto right = bc ? mono_mul(*p, a, *bc) : std::nullopt;
          ASSERT_EQ(left, right) << "H=" << H;
        }
      }
  }
}

TEST(ChainRing, JsonRoundTrip) {
  auto p = binary(2);
  ChainRing<Rational> R(p);
  auto f = R.var("0").scaled(Rational::parse("3/7")) - R.mul(R.var("0"), R.var("01"));
  EXPECT_EQ(R.from_json(R.to_json(f)), f);
  EXPECT_EQ(R.to_json(R.one())[0]["coeff"], "1");
  ChainRing<ModP> F(p, FieldOps<ModP>{FieldSpec::parse("Fp:5")});
  auto g = F.var("1").scaled(F.scalar(7));
  EXPECT_EQ(F.to_json(g)[0]["coeff"], "2");
  EXPECT_EQ(F.from_json(F.to_json(g)), g);
}

TEST(ChainRing, CharacteristicTwoCancels) {
  auto p = binary(1);
  ChainRing<ModP> F(p, FieldOps<ModP>{FieldSpec::parse("GF2")});
  auto f = F.var("0") + F.var("1");
  EXPECT_TRUE((f + f).is_zero());
  EXPECT_EQ(F.mul(f, f), F.var("0", 2) + F.var("1", 2));
}

TEST(MonomialIdeal, MembershipAndIntersectionExamples) {
  auto p = binary(2);
  auto x = [&](const char* id, int e = 1) { return ChainMonomial::var(p->index(id), e); };
  MonomialIdeal I0({x("0")});
  EXPECT_TRUE(ideal_member(*mono_mul(*p, x("0"), x("00")), I0));
  EXPECT_FALSE(ideal_member(x("00"), I0));
  EXPECT_TRUE(ideal_intersect(*p, I0, MonomialIdeal({x("1")})).is_zero());
  auto J = ideal_intersect(*p, MonomialIdeal({x("0", 2)}), MonomialIdeal({*mono_mul(*p, x("0"), x("00"))}));
  ASSERT_EQ(J.generators().size(), 1u);
  EXPECT_EQ(J.generators()[0], ChainMonomial({{p->index("0"), 2}, {p->index("00"), 1}}));
}

TEST(MonomialIdeal, GeneratorsAreMinimalAntichain) {
  auto p = binary(2);
  auto x = [&](const char* id, int e = 1) { return ChainMonomial::var(p->index(id), e); };
  MonomialIdeal I({x("0", 2), x("0"), *mono_mul(*p, x("0"), x("01")), x("1")});
  EXPECT_EQ(I.generators().size(), 2u);
  for (const auto& a : I.generators())
    for (const auto& b : I.generators())
      if (!(a == b)) EXPECT_FALSE(a.divides(b));
  EXPECT_EQ(ideal_sum(I, MonomialIdeal({x("0", 3)})).generators(), I.generators());
}

TEST(MonomialIdeal, IntersectionAgreesWithDegreewiseOracle) {
  auto p = binary(2);
  const int D = 5;
  std::mt19937_64 rng(3);
  auto monos = monomials_up_to(*p, 3);
  monos.erase(monos.begin());  // drop 1
  auto random_ideal = [&] {
    std::vector<ChainMonomial> g;
    int n = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < n; ++i) g.push_back(monos[rng() % monos.size()]);
    return MonomialIdeal(g);
  };
  for (int s = 0; s < 60; ++s) {
    auto I = random_ideal(), J = random_ideal();
    auto K = ideal_intersect(*p, I, J);
    for (int d = 0; d <= D; ++d) {
      auto a = piece_by_products(*p, I, d), b = piece_by_products(*p, J, d);
      std::set<ChainMonomial> both;
      for (const auto& m : a)
        if (b.count(m)) both.insert(m);
      auto got = ideal_piece(*p, K, d);
      EXPECT_EQ(std::set<ChainMonomial>(got.begin(), got.end()), both) << I.str(*p) << " & " << J.str(*p);
      auto sum = ideal_piece(*p, ideal_sum(I, J), d);
      std::set<ChainMonomial> either = a;
      either.insert(b.begin(), b.end());
      EXPECT_EQ(std::set<ChainMonomial>(sum.begin(), sum.end()), either);
    }
  }
}

TEST(MinimalPrime, Examples) {
  auto p1 = binary(1);
  auto P = minimal_prime(*p1, {p1->index(""), p1->index("0")});
  ASSERT_EQ(P.generators().size(), 1u);
  EXPECT_EQ(P.generators()[0], ChainMonomial::var(p1->index("1")));

  auto p2 = binary(2);
  auto Q = minimal_prime(*p2, {p2->index(""), p2->index("0"), p2->index("00")});
  std::vector<ChainMonomial> want;
  for (const char* id : {"01", "1", "10", "11"}) want.push_back(ChainMonomial::var(p2->index(id)));
  std::set<ChainMonomial> got(Q.generators().begin(), Q.generators().end());
  EXPECT_EQ(got, std::set<ChainMonomial>(want.begin(), want.end()));
  EXPECT_THROW(minimal_prime(*p2, {p2->index(""), p2->index("0")}), std::exception);
}

TEST(MinimalPrime, IntersectionOfAllIsZeroUpToDegreeFour) {
  for (int H = 1; H <= 3; ++H) {
    auto p = binary(H);
    auto chains = p->maximal_chains();
    std::vector<MonomialIdeal> primes;
    for (const auto& c : chains) primes.push_back(minimal_prime(*p, c));
    MonomialIdeal all = primes[0];
    for (std::size_t i = 1; i < primes.size(); ++i) all = ideal_intersect(*p, all, primes[i]);
    for (int d = 0; d <= 4; ++d) {
      EXPECT_TRUE(ideal_piece(*p, all, d).empty());
      // Brute force: no monomial of degree d lies in every P_Gamma.
      for (const auto& m : monomials_of_degree(*p, d)) {
        bool in_all = true;
        for (const auto& P : primes) in_all = in_all && P.contains(m);
        EXPECT_FALSE(in_all) << m.str(*p);
      }
    }
  }
}

TEST(PrimeVariableIdeal, Examples) {
  auto p = binary(2);
  auto chains = p->maximal_chains();
  for (const auto& c : chains) {
    std::vector<ElemIndex> A;
    for (ElemIndex v : p->nonminimal())
      if (std::find(c.begin(), c.end(), v) == c.end()) A.push_back(v);
    EXPECT_TRUE(is_prime_variable_ideal(*p, A));
  }
  EXPECT_FALSE(is_prime_variable_ideal(*p, {}));
  EXPECT_TRUE(is_prime_variable_ideal(*p, p->nonminimal()));
}

TEST(Field, RationalAndModP) {
  EXPECT_EQ(Rational::parse("6/4").str(), "3/2");
  EXPECT_EQ((Rational(1) / Rational(3) + Rational::parse("2/3")).str(), "1");
  EXPECT_THROW(Rational::parse("1/0"), std::exception);
  ModP a(3, 7);
  EXPECT_EQ((a * a.inverse()).str(), "1");
  EXPECT_EQ((ModP(5, 7) + ModP(4, 7)).str(), "2");
  EXPECT_EQ(FieldSpec::parse("Fp").p, 2u);
  EXPECT_EQ(FieldSpec::parse("Fp:11").str(), "Fp:11");
  EXPECT_THROW(FieldSpec::parse("Fp:12"), std::exception);
  EXPECT_THROW(FieldSpec::parse("R"), std::exception);
}
