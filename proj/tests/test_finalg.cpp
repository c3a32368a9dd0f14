#include <gtest/gtest.h>

#include <random>

#include "chainring/finalg_instances.hpp"

using namespace chainring;
using namespace chainring::finalg;

namespace {

const FieldOps<Rational> QQ{};
const FieldOps<ModP> F2{FieldSpec::parse("GF2")};

template <class K>
Vec<K> vec(const FieldOps<K>& F, std::vector<long> xs) {
  Vec<K> v = zero_vec(F, static_cast<Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) v(static_cast<Index>(i)) = F.from_int(xs[i]);
  return v;
}

// Span of all products g * e_i: the one-step description of an ideal.
template <class K>
Subspace<K> ideal_oracle(const FinAlg<K>& A, const std::vector<Vec<K>>& gens) {
  std::vector<Vec<K>> prods;
  for (const auto& g : gens)
    for (Index i = 0; i < A.dim(); ++i) prods.push_back(A.mul(g, A.e(i)));
  return Subspace<K>::span(A.field(), A.dim(), prods);
}

// K[t]/(t^2) -> K[t]/(t^2) x K[t]/(t^2), diagonally.
template <class K>
AlgMap<K> dual_numbers_squared(const FieldOps<K>& F) {
  auto R = share(truncated_poly(F, 2));
  auto P = share(product(*R, *R));
  auto id = identity_map(R);
  return diagonal(id, id, P);
}

template <class K>
AlgMap<K> dual_numbers_to_field(const FieldOps<K>& F) {
  auto R = share(truncated_poly(F, 2));
  return projection(R, quotient(*R, ideal(*R, {R->e(1)})));
}

}  // namespace

TEST(Linalg, RrefKernelSolve) {
  Mat<Rational> A = zeros(QQ, 2, 3);
  A << 1, 2, 3, 2, 4, 7;
  auto E = rref(A);
  EXPECT_EQ(E.pivots, (std::vector<Index>{0, 2}));
  Mat<Rational> K = kernel(QQ, A);
  ASSERT_EQ(K.cols(), 1);
  EXPECT_TRUE(is_zero_mat<Rational>(A * K));
  auto x = solve(QQ, A, vec(QQ, {1, 3}));
  ASSERT_TRUE(x);
  EXPECT_TRUE(vec_equal<Rational>(A * *x, vec(QQ, {1, 3})));
  Mat<Rational> B = zeros(QQ, 2, 2);
  B << 1, 2, 2, 4;
  EXPECT_FALSE(solve(QQ, B, vec(QQ, {1, 0})));
  EXPECT_FALSE(inverse(QQ, B));
}

TEST(Linalg, SubspaceIntersectionAgreesWithMembership) {
  std::mt19937_64 rng(1);
  ScalarSource<Rational> src(QQ, rng);
  for (int s = 0; s < 50; ++s) {
    std::vector<Vec<Rational>> a, b;
    for (int i = 0; i < 2; ++i) a.push_back(src.vec(4));
    for (int i = 0; i < 3; ++i) b.push_back(src.vec(4));
    b.push_back(a[0] + a[1]);
    auto U = Subspace<Rational>::span(QQ, 4, a), W = Subspace<Rational>::span(QQ, 4, b);
    auto X = intersect(U, W);
    EXPECT_TRUE(U.contains(X));
    EXPECT_TRUE(W.contains(X));
    EXPECT_EQ(X.dim(), U.dim() + W.dim() - (U + W).dim());
  }
}

TEST(FinAlg, RejectsBadStructureConstants) {
  std::vector<Mat<Rational>> mult{identity(QQ, 2), zeros(QQ, 2, 2)};
  mult[1](0, 0) = 1;  // e1 * e0 = e0 but e0 * e1 = e1
  EXPECT_THROW(FinAlg<Rational>(QQ, mult), FinAlgError);
  EXPECT_NO_THROW(truncated_poly(QQ, 3));
  auto T = truncated_poly(QQ, 3);
  EXPECT_TRUE(vec_equal(T.one(), T.e(0)));
}

TEST(FinAlg, TruncatedPolynomialIdeals) {
  auto A = truncated_poly(QQ, 3);
  auto t = ideal(A, {A.e(1)}), t2 = ideal(A, {A.e(2)});
  EXPECT_EQ(intersect(t, t2), t2);
  EXPECT_TRUE(product(A, t, t2).is_zero());
  EXPECT_EQ(product(A, t, t), t2);
  EXPECT_EQ(t + t2, t);
  EXPECT_EQ(quotient_dim(A, t), 1);
}

TEST(FinAlg, IdealClosureMatchesOneStepSpan) {
  std::mt19937_64 rng(2);
  ScalarSource<Rational> src(QQ, rng);
  for (int s = 0; s < 40; ++s) {
    auto A = random_local_algebra(src, 6);
    std::vector<Vec<Rational>> gens{src.vec(A.dim()), random_nonunit(src, A)};
    EXPECT_EQ(ideal(A, gens), ideal_oracle(A, gens));
  }
  ScalarSource<ModP> src2(F2, rng);
  for (const auto& A : gf2_algebras(3))
    for (const auto& g : all_vectors(F2, A.dim())) EXPECT_EQ(ideal(A, {g}), ideal_oracle(A, {g}));
}

TEST(FinAlg, QuotientIsAnAlgebraAndProjectionIsAMap) {
  std::mt19937_64 rng(3);
  ScalarSource<Rational> src(QQ, rng);
  for (int s = 0; s < 30; ++s) {
    auto A = share(random_local_algebra(src, 6));
    auto q = quotient(*A, ideal(*A, {random_nonunit(src, *A)}));
    auto pr = projection(A, q);
    for (Index i = 0; i < A->dim(); ++i) EXPECT_TRUE(q.kernel.contains(Vec<Rational>(A->e(i) - q.lift(q.project(A->e(i))))));
    EXPECT_EQ(pr.target().dim(), A->dim() - q.kernel.dim());
  }
}

TEST(Tor1, Examples) {
  auto free = dual_numbers_squared(QQ);
  const auto& R = free.source();
  EXPECT_TRUE(tor1_vanishes(free, {R.e(1)}));
  auto res = dual_numbers_to_field(QQ);
  EXPECT_FALSE(tor1_vanishes(res, {R.e(1)}));
  auto d = tor1(res, {R.e(1)});
  EXPECT_EQ(d.s_relations, 1);
  EXPECT_EQ(d.lifted, 0);
  EXPECT_TRUE(tor1_vanishes(res, {R.one()}));
  EXPECT_TRUE(tor1_vanishes(res, {}));
}

TEST(Flatness, LocalCriterionExamples) {
  EXPECT_TRUE(is_flat_local(dual_numbers_squared(QQ)));
  EXPECT_FALSE(is_flat_local(dual_numbers_to_field(QQ)));
  EXPECT_TRUE(is_flat_local(dual_numbers_squared(F2)));
  auto KK = share(product(field_algebra(QQ), field_algebra(QQ)));
  EXPECT_THROW(maximal_ideal(*KK), NotLocalError);
  EXPECT_FALSE(is_local(*KK));
}

TEST(Flatness, ResidueDetectionSurvivesBasisChange) {
  std::mt19937_64 rng(4);
  for (int s = 0; s < 40; ++s) {
    ScalarSource<Rational> src(QQ, rng);
    auto inst = random_instance(src, 6);
    auto m = maximal_ideal(inst.phi.source());
    EXPECT_EQ(m.dim(), inst.phi.source().dim() - 1);
    EXPECT_FALSE(m.contains(inst.phi.source().one()));
  }
  for (int s = 0; s < 40; ++s) {
    ScalarSource<ModP> src(FieldOps<ModP>{FieldSpec::parse("Fp:3")}, rng);
    auto inst = random_instance(src, 6);
    EXPECT_EQ(maximal_ideal(inst.phi.source()).dim(), inst.phi.source().dim() - 1);
  }
}

TEST(AnnihilatorCondition, Examples) {
  auto res = dual_numbers_to_field(QQ);
  const auto& R = res.source();
  auto v = check_iv(res, {R.e(1)}, {});
  EXPECT_FALSE(v.ann);
  EXPECT_FALSE(v.holds());

  auto free = dual_numbers_squared(QQ);
  std::vector<Subspace<Rational>> pool{ideal(R, {R.e(1)}), Subspace<Rational>(QQ, 2),
                                       Subspace<Rational>::whole(QQ, 2)};
  EXPECT_TRUE(check_iv(free, {R.e(0), R.e(1), Vec<Rational>(R.one() + R.e(1))}, pool).holds());

  auto id = identity_map(share(truncated_poly(QQ, 3)));
  const auto& T = id.source();
  std::vector<Subspace<Rational>> tpool{ideal(T, {T.e(1)}), ideal(T, {T.e(2)}), Subspace<Rational>(QQ, 3)};
  EXPECT_TRUE(check_iv(id, {T.e(1), T.e(2)}, tpool).holds());
}

TEST(Sharp, Examples) {
  auto res = dual_numbers_to_field(QQ);
  const auto& R = res.source();
  auto t = ideal(R, {R.e(1)});
  EXPECT_TRUE(sharp_ideals(res, {t, t}));
  EXPECT_TRUE(sharp_ideals(res, {t}));
  EXPECT_THROW(sharp_ideals(res, {}), FinAlgError);

  // Modules: M = R itself and M = R/(t).
  auto free = dual_numbers_squared(QQ);
  auto M = free_module(R, 1);
  EXPECT_TRUE(sharp_modules(free, M, {t, Subspace<Rational>::whole(QQ, 2)}));
  EXPECT_TRUE(sharp_modules(res, M, {t, t}));
  TensorWithS<Rational> T(res, M);
  EXPECT_EQ(T.dim(), 1);
  EXPECT_TRUE(T.image(t) == T.relations());
  auto M2 = free_module(R, 2);
  TensorWithS<Rational> T2(free, M2);
  EXPECT_EQ(T2.dim(), 8);
  EXPECT_THROW(sharp_modules(res, M, {Subspace<Rational>::span(QQ, 2, {vec(QQ, {1, 1})})}), FinAlgError);
}

TEST(Sharp, FlatMapsPreserveZeroIntersections) {
  std::mt19937_64 rng(5);
  ScalarSource<Rational> src(QQ, rng);
  int checked = 0;
  for (int s = 0; s < 25; ++s) {
    auto inst = random_instance(src, 6);
    if (!is_flat_local(inst.phi)) continue;
    const auto& R = inst.phi.source();
    auto M = free_module(R, 2);
    std::vector<Vec<Rational>> g1{src.vec(2 * R.dim())}, g2{src.vec(2 * R.dim())};
    auto A = submodule(M, g1), B = submodule(M, g2);
    EXPECT_TRUE(sharp_modules(inst.phi, M, {A, B}));
    if (intersect(A, B).is_zero()) {
      TensorWithS<Rational> T(inst.phi, M);
      EXPECT_EQ(intersect(T.image(A), T.image(B)), T.relations());
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Content, Examples) {
  auto R = share(truncated_poly(QQ, 2));
  auto X = truncated_poly(QQ, 3);
  auto S = share(tensor(*R, X));
  auto phi = tensor_inclusion(R, X, S);
  std::vector<Vec<Rational>> basis;
  for (Index k = 0; k < 3; ++k) basis.push_back(kron(QQ, Mat<Rational>(R->one()), Mat<Rational>(X.e(k))));
  auto t = phi(R->e(1));
  Vec<Rational> s1 = t + S->mul(t, basis[1]);
  EXPECT_EQ(content(phi, basis, s1), ideal(*R, {R->e(1)}));
  Vec<Rational> s2 = S->one() + S->mul(t, basis[1]);
  EXPECT_TRUE(content(phi, basis, s2).is_whole());
  EXPECT_TRUE(content(phi, basis, S->zero()).is_zero());
  EXPECT_THROW(content(phi, {basis[0], basis[1]}, s1), FinAlgError);
}

TEST(Content, MinimalAndSufficientOnFreeInstances) {
  std::mt19937_64 rng(6);
  ScalarSource<ModP> src(F2, rng);
  int checked = 0;
  while (checked < 30) {
    auto inst = random_instance(src, 6);
    if (!inst.free_basis) continue;
    ++checked;
    const auto& phi = inst.phi;
    Vec<ModP> s = src.vec(phi.target().dim());
    auto c = content(phi, *inst.free_basis, s);
    EXPECT_TRUE(extend(phi, c).contains(s));
    for (const auto& I : all_ideals(phi.source()))
      if (extend(phi, I).contains(s)) EXPECT_TRUE(I.contains(c));
  }
}

TEST(CapLemma, Examples) {
  auto id = identity_map(share(truncated_poly(QQ, 3)));
  const auto& T = id.source();
  auto v = check_cap(id, ideal(T, {T.e(1)}), ideal(T, {T.e(2)}));
  EXPECT_TRUE(v.conclusion);
  EXPECT_FALSE(v.discrepancy());
  auto free = dual_numbers_squared(QQ);
  const auto& R = free.source();
  auto w = check_cap(free, ideal(R, {R.e(1)}), Subspace<Rational>(QQ, 2));
  EXPECT_TRUE(w.hypothesis);
  EXPECT_TRUE(w.conclusion);
}

TEST(CapLemma, NoDiscrepancyOnRandomInstances) {
  std::mt19937_64 rng(7);
  ScalarSource<ModP> src(F2, rng);
  for (int s = 0; s < 60; ++s) {
    auto inst = random_instance(src, 6);
    const auto& R = inst.phi.source();
    auto A = ideal(R, {src.vec(R.dim())}), B = ideal(R, {src.vec(R.dim())});
    EXPECT_FALSE(check_cap(inst.phi, A, B).discrepancy()) << inst.family;
  }
}

TEST(Domain, Verdicts) {
  EXPECT_EQ(is_domain(field_algebra(QQ)), DomainVerdict::Domain);
  EXPECT_EQ(is_domain(truncated_poly(QQ, 2)), DomainVerdict::NotDomain);
  EXPECT_EQ(is_domain(product(field_algebra(QQ), field_algebra(QQ))), DomainVerdict::NotDomain);
  EXPECT_EQ(is_domain(product(field_algebra(F2), field_algebra(F2))), DomainVerdict::NotDomain);
  EXPECT_EQ(is_domain(truncated_poly(F2, 2)), DomainVerdict::NotDomain);
  // GF(4) = GF(2)[a]/(a^2 + a + 1) and Q(i).
  auto quad = [](const auto& F, long c0, long c1) {
    using K = std::decay_t<decltype(F.from_int(0))>;
    // basis {1, a}, a^2 = c0 + c1 a
    std::vector<Mat<K>> m{identity(F, 2), zeros(F, 2, 2)};
    m[1](1, 0) = F.from_int(1);
    m[1](0, 1) = F.from_int(c0);
    m[1](1, 1) = F.from_int(c1);
    return FinAlg<K>(F, m);
  };
  EXPECT_EQ(is_domain(quad(F2, 1, 1)), DomainVerdict::Domain);
  EXPECT_EQ(is_domain(quad(F2, 1, 0)), DomainVerdict::NotDomain);
  EXPECT_EQ(is_domain(quad(QQ, 4, 0)), DomainVerdict::NotDomain);
  EXPECT_THROW(is_domain(quad(QQ, -1, 0)), UndecidableError);
  EXPECT_EQ(is_domain(quad(FieldOps<ModP>{FieldSpec::parse("Fp:3")}, -1, 0)), DomainVerdict::Domain);
  EXPECT_EQ(is_domain(quad(FieldOps<ModP>{FieldSpec::parse("Fp:5")}, -1, 0)), DomainVerdict::NotDomain);
}

TEST(Domain, FrobeniusVerdictMatchesBruteForceOverGF2) {
  for (const auto& A : gf2_algebras(3)) {
    bool zero_divisor = false;
    auto all = all_vectors(F2, A.dim());
    for (const auto& a : all)
      for (const auto& b : all)
        if (!is_zero_vec(a) && !is_zero_vec(b) && is_zero_vec(A.mul(a, b))) zero_divisor = true;
    EXPECT_EQ(is_domain(A) == DomainVerdict::Domain, !zero_divisor);
  }
}

TEST(RationalRoot, Examples) {
  auto r = rational_root({Rational(-3), Rational(2)});
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, Rational::parse("3/2"));
  EXPECT_FALSE(rational_root({Rational(1), Rational(0), Rational(1)}));
  EXPECT_EQ(*rational_root({Rational(0), Rational(1), Rational(1)}), Rational(0));
}

TEST(Local, MinimalPolynomialAndRoot) {
  auto A = truncated_poly(QQ, 3);
  Vec<Rational> a = A.one() * Rational(2) + A.e(1);
  auto m = minimal_polynomial(A, a);
  ASSERT_EQ(m.size(), 4u);
  EXPECT_EQ(*single_root(QQ, m), Rational(2));
  auto B = truncated_poly(F2, 3);
  Vec<ModP> b = B.one() + B.e(1);
  EXPECT_EQ(*single_root(F2, minimal_polynomial(B, b)), F2.from_int(1));
  auto KK = product(field_algebra(QQ), field_algebra(QQ));
  Vec<Rational> c = KK.e(0);
  EXPECT_FALSE(single_root(QQ, minimal_polynomial(KK, c)));
}

TEST(Enumeration, GF2AlgebraCounts) {
  auto algs = gf2_algebras(3);
  std::map<Index, int> by_dim;
  for (const auto& A : algs) ++by_dim[A.dim()];
  EXPECT_EQ(by_dim[1], 1);
  // dim 2 with e0 = 1: e1^2 in {0, 1, e1, 1 + e1}
  EXPECT_EQ(by_dim[2], 4);
  EXPECT_GT(by_dim[3], 0);
  for (const auto& A : algs) EXPECT_TRUE(FinAlg<ModP>::satisfies_axioms(A.mult(), F2));
}

TEST(Equivalence, FlatnessCriteriaAgreeOnSmallGF2Maps) {
  auto algs = gf2_algebras(3);
  int local = 0, flat = 0;
  for (const auto& A : algs) {
    if (!is_local(A)) continue;
    ++local;
    auto R = share(A);
    auto ideals = all_ideals(*R);
    auto elems = all_vectors(F2, R->dim());
    for (const auto& B : algs) {
      auto S = share(B);
      for (const auto& phi : gf2_maps(R, S)) {
        bool f = is_flat_local(phi);
        bool iv = check_iv(phi, elems, ideals).holds();
        bool t = true;
        for (const auto& I : ideals) t = t && tor1_vanishes(phi, I.basis());
        EXPECT_EQ(f, iv);
        EXPECT_EQ(f, t);
        flat += f;
      }
    }
  }
  EXPECT_GT(local, 0);
  EXPECT_GT(flat, 0);
}
