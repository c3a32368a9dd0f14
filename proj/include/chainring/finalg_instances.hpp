#pragma once

// Building blocks for finite algebra instances (truncated polynomial rings,
// monomial algebras, tensor products, products, basis changes) and the two
// instance families used by the test suites: every algebra map between small
// algebras over GF(2), and seeded random maps out of local algebras.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "chainring/finalg.hpp"

namespace chainring::finalg {

/// Exponent vector of a monomial in a few variables.
using Exponents = std::vector<int>;

/// K[x_1..x_v]/I with basis the given standard monomials, which must be
/// closed under division and contain 1. Products leaving the set are 0.
template <class K>
FinAlg<K> monomial_algebra(const FieldOps<K>& F, const std::vector<Exponents>& standard) {
  std::map<Exponents, Index> pos;
  for (std::size_t i = 0; i < standard.size(); ++i) pos[standard[i]] = static_cast<Index>(i);
  auto n = static_cast<Index>(standard.size());
  std::vector<Mat<K>> mult;
  for (Index i = 0; i < n; ++i) {
    Mat<K> L = zeros(F, n, n);
    for (Index j = 0; j < n; ++j) {
      Exponents e = standard[static_cast<std::size_t>(i)];
      const auto& b = standard[static_cast<std::size_t>(j)];
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += b[k];
      if (auto it = pos.find(e); it != pos.end()) L(it->second, j) = F.from_int(1);
    }
    mult.push_back(std::move(L));
  }
  Exponents zero(standard.empty() ? 0 : standard[0].size(), 0);
  if (!pos.count(zero)) throw FinAlgError("monomial algebra: 1 is not a standard monomial");
  return FinAlg<K>(F, std::move(mult), unit_vec(F, n, pos[zero]));
}

/// K[z]/(z^b).
template <class K>
FinAlg<K> truncated_poly(const FieldOps<K>& F, int b) {
  std::vector<Exponents> s;
  for (int i = 0; i < b; ++i) s.push_back({i});
  return monomial_algebra(F, s);
}

template <class K>
FinAlg<K> field_algebra(const FieldOps<K>& F) {
  return truncated_poly(F, 1);
}

/// Basis e_i (x) f_k at index i * dim B + k.
template <class K>
FinAlg<K> tensor(const FinAlg<K>& A, const FinAlg<K>& B) {
  const auto& F = A.field();
  std::vector<Mat<K>> mult;
  for (Index i = 0; i < A.dim(); ++i)
    for (Index k = 0; k < B.dim(); ++k) mult.push_back(kron(F, A.L(i), B.L(k)));
  Vec<K> one = kron(F, Mat<K>(A.one()), Mat<K>(B.one()));
  return FinAlg<K>(F, std::move(mult), one);
}

template <class K>
FinAlg<K> product(const FinAlg<K>& A, const FinAlg<K>& B) {
  const auto& F = A.field();
  Index n = A.dim() + B.dim();
  std::vector<Mat<K>> mult;
  for (Index i = 0; i < n; ++i) {
    Mat<K> L = zeros(F, n, n);
    if (i < A.dim())
      L.topLeftCorner(A.dim(), A.dim()) = A.L(i);
    else
      L.bottomRightCorner(B.dim(), B.dim()) = B.L(i - A.dim());
    mult.push_back(std::move(L));
  }
  Vec<K> one(n);
  one << A.one(), B.one();
  return FinAlg<K>(F, std::move(mult), one);
}

/// The same algebra in the basis f_j = sum_i P(i, j) e_i.
template <class K>
FinAlg<K> change_basis(const FinAlg<K>& A, const Mat<K>& P, const Mat<K>& Pinv) {
  std::vector<Mat<K>> mult;
  for (Index j = 0; j < A.dim(); ++j) mult.push_back(Pinv * A.mult_matrix(P.col(j)) * P);
  return FinAlg<K>(A.field(), std::move(mult), Vec<K>(Pinv * A.one()));
}

/// r -> r (x) 1.
template <class K>
AlgMap<K> tensor_inclusion(const AlgPtr<K>& R, const FinAlg<K>& T, const AlgPtr<K>& RT) {
  const auto& F = R->field();
  return AlgMap<K>(R, RT, kron(F, identity(F, R->dim()), Mat<K>(T.one())));
}

/// r -> (f(r), g(r)) into the product of the targets.
template <class K>
AlgMap<K> diagonal(const AlgMap<K>& f, const AlgMap<K>& g, const AlgPtr<K>& prod) {
  Mat<K> m(f.matrix().rows() + g.matrix().rows(), f.matrix().cols());
  m << f.matrix(), g.matrix();
  return AlgMap<K>(f.source_ptr(), prod, m);
}

template <class K>
AlgMap<K> projection(const AlgPtr<K>& R, const Quotient<K>& q) {
  Mat<K> m = zeros(R->field(), q.alg->dim(), R->dim());
  for (Index i = 0; i < R->dim(); ++i) m.col(i) = q.project(R->e(i));
  return AlgMap<K>(R, q.alg, m);
}

/// phi: R -> S, optionally with a designated free R-basis of S.
template <class K>
struct Instance {
  std::string family;
  AlgMap<K> phi;
  std::optional<std::vector<Vec<K>>> free_basis;
};

/// Scalars drawn from a seeded engine: small integers over Q, uniform
/// residues over GF(p). Only the raw engine output is used, so the stream
/// is the same on every platform.
template <class K>
class ScalarSource {
 public:
  ScalarSource(FieldOps<K> F, std::mt19937_64& rng) : F_(std::move(F)), rng_(rng) {}
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  K scalar() {
    std::uint64_t p = F_.characteristic();
    if (p != 0) return F_.from_int(static_cast<long>(below(p)));
    return F_.from_int(static_cast<long>(below(5)) - 2);
  }
  K nonzero() {
    for (;;) {
      K c = scalar();
      if (!is_zero(c)) return c;
    }
  }
  Vec<K> vec(Index n) {
    Vec<K> v = zero_vec(F_, n);
    for (Index i = 0; i < n; ++i) v(i) = scalar();
    return v;
  }
  /// Random invertible matrix with its inverse.
  std::pair<Mat<K>, Mat<K>> invertible(Index n) {
    for (;;) {
      Mat<K> P = zeros(F_, n, n);
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) P(i, j) = scalar();
      if (auto inv = inverse(F_, P)) return {std::move(P), std::move(*inv)};
    }
  }
  const FieldOps<K>& field() const { return F_; }

 private:
  FieldOps<K> F_;
  std::mt19937_64& rng_;
};

/// A random set of standard monomials in 1..3 variables of the given size.
std::vector<Exponents> random_order_ideal(std::mt19937_64& rng, int size);

template <class K>
FinAlg<K> random_local_algebra(ScalarSource<K>& src, int max_dim) {
  int size = 1 + static_cast<int>(src.below(static_cast<std::uint64_t>(max_dim)));
  std::mt19937_64 sub(src.below(~std::uint64_t{0}));
  return monomial_algebra(src.field(), random_order_ideal(sub, size));
}

/// A random element of the ideal spanned by the non-unit basis vectors of
/// a monomial algebra (all of them but the unit coordinate).
template <class K>
Vec<K> random_nonunit(ScalarSource<K>& src, const FinAlg<K>& A) {
  Vec<K> v = src.vec(A.dim());
  for (Index i = 0; i < A.dim(); ++i)
    if (!is_zero(A.one()(i))) v(i) = src.field().from_int(0);
  return v;
}

/// Random phi: R -> S with R local of dimension <= max_dim and dim S <=
/// max_dim, from one of several constructions, then disguised by random
/// changes of basis on both sides. Free constructions carry their basis.
template <class K>
Instance<K> random_instance(ScalarSource<K>& src, int max_dim) {
  const auto& F = src.field();
  auto R0 = share(random_local_algebra(src, max_dim));
  Index r = R0->dim();
  static const char* kFamilies[] = {"identity", "tensor", "diagonal", "quotient",
                                    "residue", "residue-product", "quotient-of-tensor"};
  std::string family = kFamilies[src.below(7)];
  if (r * 2 > max_dim && (family == "tensor" || family == "diagonal" || family == "quotient-of-tensor"))
    family = "quotient";
  if (r + 1 > max_dim && family == "residue-product") family = "residue";

  std::optional<AlgMap<K>> phi0;
  std::optional<std::vector<Vec<K>>> free;
  if (family == "identity") {
    phi0 = identity_map(R0);
    free = std::vector<Vec<K>>{R0->one()};
  } else if (family == "tensor" || family == "quotient-of-tensor") {
    int b = 2 + static_cast<int>(src.below(static_cast<std::uint64_t>(std::max<Index>(1, max_dim / r - 1))));
    while (r * b > max_dim) --b;
    auto T = truncated_poly(F, b);
    auto RT = share(tensor(*R0, T));
    phi0 = tensor_inclusion(R0, T, RT);
    if (family == "tensor") {
      std::vector<Vec<K>> basis;
      for (Index k = 0; k < b; ++k) basis.push_back(kron(F, Mat<K>(R0->one()), Mat<K>(T.e(k))));
      free = basis;
    } else {
      auto J = ideal(*RT, {random_nonunit(src, *RT)});
      phi0 = compose(projection(RT, quotient(*RT, J)), *phi0);
    }
  } else if (family == "diagonal") {
    auto P = share(product(*R0, *R0));
    auto id = identity_map(R0);
    phi0 = diagonal(id, id, P);
    Vec<K> a = zero_vec(F, 2 * r), b = zero_vec(F, 2 * r);
    a.head(r) = R0->one();
    b.tail(r) = R0->one();
    free = std::vector<Vec<K>>{a, b};
  } else if (family == "quotient") {
    std::vector<Vec<K>> gens;
    int k = 1 + static_cast<int>(src.below(2));
    for (int i = 0; i < k; ++i) gens.push_back(random_nonunit(src, *R0));
    phi0 = projection(R0, quotient(*R0, ideal(*R0, gens)));
  } else {
    auto res = projection(R0, quotient(*R0, maximal_ideal(*R0)));
    if (family == "residue") {
      phi0 = res;
    } else {
      auto P = share(product(*R0, res.target()));
      phi0 = diagonal(identity_map(R0), res, P);
    }
  }

  // Disguise both bases.
  auto [P, Pinv] = src.invertible(r);
  auto R = share(change_basis(*R0, P, Pinv));
  const auto& S0 = phi0->target();
  auto [Q, Qinv] = src.invertible(S0.dim());
  auto S = share(change_basis(S0, Q, Qinv));
  AlgMap<K> phi(R, S, Mat<K>(Qinv * phi0->matrix() * P));
  if (free)
    for (auto& b : *free) b = Qinv * b;
  return {family, std::move(phi), std::move(free)};
}

/// Every commutative, associative algebra over GF(2) of dimension 1..max_dim
/// with e_0 = 1, one per structure-constant table.
std::vector<FinAlg<ModP>> gf2_algebras(int max_dim);

/// Every unital algebra map R -> S over GF(2).
std::vector<AlgMap<ModP>> gf2_maps(const AlgPtr<ModP>& R, const AlgPtr<ModP>& S);

/// Every vector of GF(p)^n (p^n of them).
std::vector<Vec<ModP>> all_vectors(const FieldOps<ModP>& F, Index n);

/// Every ideal of an algebra over a small prime field, by spanning sets of
/// at most dim vectors.
std::vector<Subspace<ModP>> all_ideals(const FinAlg<ModP>& A);

}  // namespace chainring::finalg
