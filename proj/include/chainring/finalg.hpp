#pragma once

// Finite-dimensional commutative K-algebras given by structure constants,
// modules given by action matrices, algebra maps, and the ideal-theoretic
// tests built on them: Tor_1 vanishing, local flatness, annihilator and
// intersection conditions, content, the cap lemma, and domain checks.
//
// Elements are coordinate vectors. Ideals and submodules are Subspaces of
// the ambient coordinate space.

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "chainring/linalg.hpp"

namespace chainring::finalg {

class FinAlgError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The algebra is not local with residue field K.
class NotLocalError : public FinAlgError {
 public:
  using FinAlgError::FinAlgError;
};

template <class K>
class FinAlg {
 public:
  /// mult[i] is the matrix of multiplication by e_i. Without a unit the
  /// unit is solved for. Throws FinAlgError unless the constants define a
  /// commutative, associative, unital algebra.
  FinAlg(FieldOps<K> F, std::vector<Mat<K>> mult, std::optional<Vec<K>> unit = std::nullopt)
      : F_(std::move(F)), L_(std::move(mult)), n_(static_cast<Index>(L_.size())) {
    for (const auto& m : L_)
      if (m.rows() != n_ || m.cols() != n_) throw FinAlgError("multiplication matrix has the wrong shape");
    if (auto err = axiom_error()) throw FinAlgError(*err);
    if (unit) {
      if (unit->size() != n_) throw FinAlgError("unit has the wrong length");
      one_ = *unit;
    } else {
      one_ = solve_unit();
    }
    if (!mat_equal<K>(mult_matrix(one_), identity(F_, n_))) throw FinAlgError("the given unit is not a unit");
  }

  /// Whether square matrices of matching size satisfy commutativity and
  /// associativity; used to filter enumerations without exceptions.
  static bool satisfies_axioms(const std::vector<Mat<K>>& mult, const FieldOps<K>& F) {
    FinAlg probe(F, mult, Unchecked{});
    return !probe.axiom_error().has_value();
  }

  /// table[i][j] = coordinates of e_i * e_j.
  static FinAlg from_table(FieldOps<K> F, const std::vector<std::vector<Vec<K>>>& table,
                           std::optional<Vec<K>> unit = std::nullopt) {
    auto n = static_cast<Index>(table.size());
    std::vector<Mat<K>> mult;
    for (Index i = 0; i < n; ++i) {
      if (static_cast<Index>(table[i].size()) != n) throw FinAlgError("multiplication table is not square");
      Mat<K> m = zeros(F, n, n);
      for (Index j = 0; j < n; ++j) {
        if (table[i][j].size() != n) throw FinAlgError("product vector has the wrong length");
        m.col(j) = table[i][j];
      }
      mult.push_back(std::move(m));
    }
    return FinAlg(std::move(F), std::move(mult), std::move(unit));
  }

  const FieldOps<K>& field() const { return F_; }
  Index dim() const { return n_; }
  const Mat<K>& L(Index i) const { return L_[static_cast<std::size_t>(i)]; }
  const std::vector<Mat<K>>& mult() const { return L_; }
  const Vec<K>& one() const { return one_; }
  Vec<K> zero() const { return zero_vec(F_, n_); }
  Vec<K> e(Index i) const { return unit_vec(F_, n_, i); }

  /// Matrix of multiplication by a.
  Mat<K> mult_matrix(const Vec<K>& a) const {
    Mat<K> m = zeros(F_, n_, n_);
    for (Index i = 0; i < n_; ++i)
      if (!is_zero(a(i))) m += L_[static_cast<std::size_t>(i)] * a(i);
    return m;
  }
  Vec<K> mul(const Vec<K>& a, const Vec<K>& b) const { return mult_matrix(a) * b; }
  Vec<K> pow(const Vec<K>& a, std::uint64_t k) const {
    Vec<K> r = one_, base = a;
    for (; k; k >>= 1) {
      if (k & 1) r = mul(r, base);
      base = mul(base, base);
    }
    return r;
  }

 private:
  struct Unchecked {};
  FinAlg(const FieldOps<K>& F, const std::vector<Mat<K>>& mult, Unchecked)
      : F_(F), L_(mult), n_(static_cast<Index>(mult.size())) {}

  std::optional<std::string> axiom_error() const {
    for (Index i = 0; i < n_; ++i)
      for (Index j = i + 1; j < n_; ++j)
        if (!vec_equal<K>(L_[i].col(j), L_[j].col(i)))
          return "not commutative: e" + std::to_string(i) + "*e" + std::to_string(j);
    for (Index i = 0; i < n_; ++i)
      for (Index j = 0; j < n_; ++j)
        if (!mat_equal<K>(L_[i] * L_[j], mult_matrix(L_[i].col(j))))
          return "not associative at e" + std::to_string(i) + ", e" + std::to_string(j);
    return std::nullopt;
  }

  Vec<K> solve_unit() const {
    // sum_k u_k L_k = I, column by column.
    Mat<K> A = zeros(F_, n_ * n_, n_);
    Vec<K> b = zero_vec(F_, n_ * n_);
    for (Index k = 0; k < n_; ++k)
      for (Index c = 0; c < n_; ++c) A.block(c * n_, k, n_, 1) = L_[static_cast<std::size_t>(k)].col(c);
    for (Index c = 0; c < n_; ++c) b(c * n_ + c) = F_.from_int(1);
    auto u = solve(F_, A, b);
    if (!u) throw FinAlgError("algebra has no unit");
    return *u;
  }

  FieldOps<K> F_;
  std::vector<Mat<K>> L_;
  Index n_ = 0;
  Vec<K> one_;
};

template <class K>
using AlgPtr = std::shared_ptr<const FinAlg<K>>;

template <class K>
AlgPtr<K> share(FinAlg<K> a) {
  return std::make_shared<const FinAlg<K>>(std::move(a));
}

/// Unital K-algebra homomorphism R -> S; column i is the image of e_i.
template <class K>
class AlgMap {
 public:
  AlgMap(AlgPtr<K> R, AlgPtr<K> S, Mat<K> phi) : R_(std::move(R)), S_(std::move(S)), phi_(std::move(phi)) {
    if (auto err = error(*R_, *S_, phi_)) throw FinAlgError(*err);
  }

  /// Why phi is not a unital algebra map R -> S, if it is not.
  static std::optional<std::string> error(const FinAlg<K>& R, const FinAlg<K>& S, const Mat<K>& phi) {
    if (phi.rows() != S.dim() || phi.cols() != R.dim()) return "map matrix has the wrong shape";
    if (!vec_equal<K>(phi * R.one(), S.one())) return "map does not preserve the unit";
    for (Index i = 0; i < R.dim(); ++i)
      for (Index j = i; j < R.dim(); ++j)
        if (!vec_equal<K>(phi * R.L(i).col(j), S.mul(phi.col(i), phi.col(j))))
          return "map is not multiplicative at e" + std::to_string(i) + ", e" + std::to_string(j);
    return std::nullopt;
  }

  const FinAlg<K>& source() const { return *R_; }
  const FinAlg<K>& target() const { return *S_; }
  const AlgPtr<K>& source_ptr() const { return R_; }
  const AlgPtr<K>& target_ptr() const { return S_; }
  const Mat<K>& matrix() const { return phi_; }
  const FieldOps<K>& field() const { return R_->field(); }
  Vec<K> operator()(const Vec<K>& r) const { return phi_ * r; }

 private:
  AlgPtr<K> R_, S_;
  Mat<K> phi_;
};

template <class K>
AlgMap<K> identity_map(const AlgPtr<K>& R) {
  return AlgMap<K>(R, R, identity(R->field(), R->dim()));
}

template <class K>
AlgMap<K> compose(const AlgMap<K>& g, const AlgMap<K>& f) {
  return AlgMap<K>(f.source_ptr(), g.target_ptr(), Mat<K>(g.matrix() * f.matrix()));
}

/// Module over an algebra: action[i] is the matrix of e_i.
template <class K>
class FinMod {
 public:
  FinMod(const FinAlg<K>& A, std::vector<Mat<K>> action) : F_(A.field()), act_(std::move(action)) {
    if (static_cast<Index>(act_.size()) != A.dim()) throw FinAlgError("module needs one action matrix per basis element");
    n_ = act_.empty() ? 0 : act_[0].rows();
    for (const auto& m : act_)
      if (m.rows() != n_ || m.cols() != n_) throw FinAlgError("action matrix has the wrong shape");
    if (!mat_equal<K>(action_of(A.one()), identity(F_, n_))) throw FinAlgError("unit does not act as the identity");
    for (Index i = 0; i < A.dim(); ++i)
      for (Index j = 0; j < A.dim(); ++j)
        if (!mat_equal<K>(act_[static_cast<std::size_t>(i)] * act_[static_cast<std::size_t>(j)],
                          action_of(A.L(i).col(j))))
          throw FinAlgError("action is not multiplicative at e" + std::to_string(i) + ", e" + std::to_string(j));
  }

  Index dim() const { return n_; }
  const FieldOps<K>& field() const { return F_; }
  const Mat<K>& action(Index i) const { return act_[static_cast<std::size_t>(i)]; }
  const std::vector<Mat<K>>& actions() const { return act_; }
  Mat<K> action_of(const Vec<K>& r) const {
    Mat<K> m = zeros(F_, n_, n_);
    for (Index i = 0; i < r.size(); ++i)
      if (!is_zero(r(i))) m += act_[static_cast<std::size_t>(i)] * r(i);
    return m;
  }

 private:
  FieldOps<K> F_;
  std::vector<Mat<K>> act_;
  Index n_ = 0;
};

/// S viewed as an R-module through phi.
template <class K>
FinMod<K> as_module(const AlgMap<K>& phi) {
  std::vector<Mat<K>> act;
  for (Index i = 0; i < phi.source().dim(); ++i) act.push_back(phi.target().mult_matrix(phi.matrix().col(i)));
  return FinMod<K>(phi.source(), std::move(act));
}

template <class K>
FinMod<K> free_module(const FinAlg<K>& R, Index rank) {
  std::vector<Mat<K>> act;
  for (Index i = 0; i < R.dim(); ++i) act.push_back(block_diag(R.field(), R.L(i), rank));
  return FinMod<K>(R, std::move(act));
}

// ---------------------------------------------------------------------------
// Ideals and submodules

/// Smallest subspace containing `gens` and stable under every matrix in
/// `ops` (iterated until the dimension stops growing).
template <class K>
Subspace<K> closure(const FieldOps<K>& F, Index n, const std::vector<Mat<K>>& ops, const std::vector<Vec<K>>& gens) {
  Subspace<K> cur = Subspace<K>::span(F, n, gens);
  for (;;) {
    std::vector<Vec<K>> more = cur.basis();
    for (const auto& v : cur.basis())
      for (const auto& op : ops) more.push_back(op * v);
    Subspace<K> next = Subspace<K>::span(F, n, more);
    if (next.dim() == cur.dim()) return next;
    cur = std::move(next);
  }
}

template <class K>
Subspace<K> ideal(const FinAlg<K>& A, const std::vector<Vec<K>>& gens) {
  return closure(A.field(), A.dim(), A.mult(), gens);
}

template <class K>
Subspace<K> submodule(const FinMod<K>& M, const std::vector<Vec<K>>& gens) {
  return closure(M.field(), M.dim(), M.actions(), gens);
}

template <class K>
bool is_stable(const std::vector<Mat<K>>& ops, const Subspace<K>& U) {
  for (const auto& v : U.basis())
    for (const auto& op : ops)
      if (!U.contains(Vec<K>(op * v))) return false;
  return true;
}

template <class K>
bool is_ideal(const FinAlg<K>& A, const Subspace<K>& U) {
  return U.ambient() == A.dim() && is_stable(A.mult(), U);
}

template <class K>
bool is_submodule(const FinMod<K>& M, const Subspace<K>& U) {
  return U.ambient() == M.dim() && is_stable(M.actions(), U);
}

template <class K>
Subspace<K> product(const FinAlg<K>& A, const Subspace<K>& I, const Subspace<K>& J) {
  std::vector<Vec<K>> prods;
  for (const auto& a : I.basis())
    for (const auto& b : J.basis()) prods.push_back(A.mul(a, b));
  return Subspace<K>::span(A.field(), A.dim(), prods);
}

template <class K>
Index quotient_dim(const FinAlg<K>& A, const Subspace<K>& I) {
  return A.dim() - I.dim();
}

/// IS: the ideal of S generated by phi(I).
template <class K>
Subspace<K> extend(const AlgMap<K>& phi, const Subspace<K>& I) {
  std::vector<Vec<K>> imgs;
  for (const auto& v : I.basis()) imgs.push_back(phi(v));
  return ideal(phi.target(), imgs);
}

template <class K>
Subspace<K> annihilator(const FinAlg<K>& A, const Vec<K>& f) {
  return Subspace<K>::kernel_of(A.field(), A.mult_matrix(f));
}

/// A / I with basis the images of the coordinate vectors outside the
/// pivots of I.
template <class K>
struct Quotient {
  AlgPtr<K> alg;
  Subspace<K> kernel;
  std::vector<Index> reps;

  Vec<K> project(const Vec<K>& v) const {
    Vec<K> r = kernel.reduce(v);
    Vec<K> out = zero_vec(kernel.field(), static_cast<Index>(reps.size()));
    for (std::size_t j = 0; j < reps.size(); ++j) out(static_cast<Index>(j)) = r(reps[j]);
    return out;
  }
  Vec<K> lift(const Vec<K>& v) const {
    Vec<K> out = zero_vec(kernel.field(), kernel.ambient());
    for (std::size_t j = 0; j < reps.size(); ++j) out(reps[j]) = v(static_cast<Index>(j));
    return out;
  }
};

template <class K>
Quotient<K> quotient(const FinAlg<K>& A, const Subspace<K>& I) {
  if (!is_ideal(A, I)) throw FinAlgError("quotient by a subspace that is not an ideal");
  auto reps = I.complement();
  Quotient<K> q{nullptr, I, reps};
  auto m = static_cast<Index>(reps.size());
  std::vector<Mat<K>> mult;
  for (Index j = 0; j < m; ++j) {
    Mat<K> L = zeros(A.field(), m, m);
    for (Index k = 0; k < m; ++k) L.col(k) = q.project(A.L(reps[j]).col(reps[k]));
    mult.push_back(std::move(L));
  }
  q.alg = share(FinAlg<K>(A.field(), std::move(mult), q.project(A.one())));
  return q;
}

/// The map R/I -> S/IS induced by phi, with both quotients.
template <class K>
struct InducedMap {
  Quotient<K> R, S;
  AlgMap<K> map;
};

template <class K>
InducedMap<K> induced(const AlgMap<K>& phi, const Subspace<K>& I) {
  Quotient<K> qR = quotient(phi.source(), I);
  Quotient<K> qS = quotient(phi.target(), extend(phi, I));
  Mat<K> m = zeros(phi.field(), qS.alg->dim(), qR.alg->dim());
  for (Index j = 0; j < qR.alg->dim(); ++j) m.col(j) = qS.project(phi(qR.lift(qR.alg->e(j))));
  AlgMap<K> map(qR.alg, qS.alg, std::move(m));
  return {std::move(qR), std::move(qS), std::move(map)};
}

// ---------------------------------------------------------------------------
// Tor_1 and flatness

/// S-span of vectors in S^blocks.
template <class K>
Subspace<K> s_span(const FinAlg<K>& S, const std::vector<Vec<K>>& vecs, Index blocks) {
  std::vector<Vec<K>> out;
  for (Index k = 0; k < S.dim(); ++k) {
    Mat<K> Lk = block_diag(S.field(), S.L(k), blocks);
    for (const auto& v : vecs) out.push_back(Lk * v);
  }
  return Subspace<K>::span(S.field(), S.dim() * blocks, out);
}

template <class K>
struct Tor1Data {
  bool vanishes = true;
  Index s_relations = 0;   // dim of the relation space over S
  Index lifted = 0;        // dim of the S-span of R-relations
};

/// Tor_1^R(R/(gens), S) = 0, decided by comparing the S-relations on
/// phi(gens) with the S-span of the R-relations on gens.
template <class K>
Tor1Data<K> tor1(const AlgMap<K>& phi, const std::vector<Vec<K>>& gens) {
  const auto& R = phi.source();
  const auto& S = phi.target();
  const auto& F = phi.field();
  auto n = static_cast<Index>(gens.size());
  Tor1Data<K> out;
  if (n == 0 || S.dim() == 0) return out;
  Mat<K> AS = zeros(F, S.dim(), n * S.dim());
  Mat<K> AR = zeros(F, R.dim(), n * R.dim());
  for (Index i = 0; i < n; ++i) {
    AS.block(0, i * S.dim(), S.dim(), S.dim()) = S.mult_matrix(phi(gens[static_cast<std::size_t>(i)]));
    AR.block(0, i * R.dim(), R.dim(), R.dim()) = R.mult_matrix(gens[static_cast<std::size_t>(i)]);
  }
  auto zs = Subspace<K>::kernel_of(F, AS);
  Mat<K> zr = kernel(F, AR);
  Mat<K> phin = block_diag(F, phi.matrix(), n);
  std::vector<Vec<K>> images;
  for (Index c = 0; c < zr.cols(); ++c) images.push_back(phin * zr.col(c));
  auto lifted = s_span(S, images, n);
  out.s_relations = zs.dim();
  out.lifted = lifted.dim();
  out.vanishes = lifted == zs;
  return out;
}

template <class K>
bool tor1_vanishes(const AlgMap<K>& phi, const std::vector<Vec<K>>& gens) {
  return tor1(phi, gens).vanishes;
}

/// Monic minimal polynomial of a, coefficients from the constant term up.
template <class K>
std::vector<K> minimal_polynomial(const FinAlg<K>& A, const Vec<K>& a) {
  const auto& F = A.field();
  std::vector<Vec<K>> powers{A.one()};
  for (;;) {
    Vec<K> next = A.mul(powers.back(), a);
    Mat<K> P = zeros(F, A.dim(), static_cast<Index>(powers.size()));
    for (std::size_t j = 0; j < powers.size(); ++j) P.col(static_cast<Index>(j)) = powers[j];
    if (auto c = solve(F, P, next)) {
      std::vector<K> m;
      for (Index j = 0; j < c->size(); ++j) m.push_back(-(*c)(j));
      m.push_back(F.from_int(1));
      return m;
    }
    powers.push_back(std::move(next));
  }
}

template <class K>
std::vector<K> poly_mul(const FieldOps<K>& F, const std::vector<K>& a, const std::vector<K>& b) {
  std::vector<K> r(a.size() + b.size() - 1, F.from_int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  return r;
}

/// The lambda with m = (t - lambda)^deg m, if there is one.
template <class K>
std::optional<K> single_root(const FieldOps<K>& F, const std::vector<K>& m) {
  auto k = static_cast<std::uint64_t>(m.size() - 1);
  if (k == 0) return std::nullopt;
  std::uint64_t p = F.characteristic(), q = 1;
  if (p != 0)
    while (k % (q * p) == 0) q *= p;
  // (t - l)^k = (t^q - l)^(k/q) over GF(p) for l in GF(p).
  K lambda = -m[k - q] / F.from_int(static_cast<long>(k / q));
  std::vector<K> expect{F.from_int(1)};
  for (std::uint64_t i = 0; i < k; ++i) expect = poly_mul(F, expect, {-lambda, F.from_int(1)});
  for (std::size_t i = 0; i < m.size(); ++i)
    if (!(m[i] == expect[i])) return std::nullopt;
  return lambda;
}

template <class K>
struct LocalData {
  Subspace<K> m;
  std::vector<K> residues;  // residue of each basis element
};

/// The maximal ideal of a local algebra with residue field K, found from
/// the residues of the basis elements. Throws NotLocalError otherwise.
template <class K>
LocalData<K> local_data(const FinAlg<K>& A) {
  const auto& F = A.field();
  if (A.dim() == 0) throw NotLocalError("the zero ring is not local");
  std::vector<K> res;
  std::vector<Vec<K>> gens;
  for (Index i = 0; i < A.dim(); ++i) {
    auto lambda = single_root(F, minimal_polynomial(A, A.e(i)));
    if (!lambda) throw NotLocalError("e" + std::to_string(i) + " has no single residue in K");
    res.push_back(*lambda);
    gens.push_back(A.e(i) - A.one() * *lambda);
  }
  auto m = Subspace<K>::span(F, A.dim(), gens);
  if (m.dim() != A.dim() - 1 || !is_ideal(A, m)) throw NotLocalError("residues do not give a codimension-one ideal");
  return {std::move(m), std::move(res)};
}

template <class K>
Subspace<K> maximal_ideal(const FinAlg<K>& A) {
  return local_data(A).m;
}

template <class K>
bool is_local(const FinAlg<K>& A) {
  try {
    local_data(A);
    return true;
  } catch (const NotLocalError&) {
    return false;
  }
}

/// Over a local artinian base with residue field K: flat iff free iff
/// dim S = dim R * dim S/mS.
template <class K>
bool is_flat_local(const AlgMap<K>& phi) {
  auto m = maximal_ideal(phi.source());
  Index fibre = phi.target().dim() - extend(phi, m).dim();
  return phi.target().dim() == phi.source().dim() * fibre;
}

// ---------------------------------------------------------------------------
// Annihilators and intersections

/// (cap of family) S == cap of (I S); an empty family is not allowed.
template <class K>
bool sharp_ideals(const AlgMap<K>& phi, const std::vector<Subspace<K>>& family) {
  if (family.empty()) throw FinAlgError("sharp: empty family");
  Subspace<K> meet = family[0];
  Subspace<K> meet_ext = extend(phi, family[0]);
  for (std::size_t i = 1; i < family.size(); ++i) {
    meet = intersect(meet, family[i]);
    meet_ext = intersect(meet_ext, extend(phi, family[i]));
  }
  return extend(phi, meet) == meet_ext;
}

template <class K>
struct IvVerdict {
  bool ann = true;
  bool sharp = true;
  std::string failure;
  bool holds() const { return ann && sharp; }
};

/// Ann_S(f) = (Ann_R f) S for every f in `elems`, and the intersection
/// condition on every pair from `pool` and on the whole pool.
template <class K>
IvVerdict<K> check_iv(const AlgMap<K>& phi, const std::vector<Vec<K>>& elems, const std::vector<Subspace<K>>& pool) {
  IvVerdict<K> v;
  for (std::size_t i = 0; i < elems.size() && v.ann; ++i) {
    auto left = annihilator(phi.target(), Vec<K>(phi(elems[i])));
    auto right = extend(phi, annihilator(phi.source(), elems[i]));
    if (!(left == right)) {
      v.ann = false;
      v.failure = "annihilator of element " + std::to_string(i);
    }
  }
  std::vector<Subspace<K>> ext;
  for (const auto& I : pool) ext.push_back(extend(phi, I));
  for (std::size_t i = 0; i < pool.size() && v.sharp; ++i)
    for (std::size_t j = i + 1; j < pool.size() && v.sharp; ++j)
      if (!(extend(phi, intersect(pool[i], pool[j])) == intersect(ext[i], ext[j]))) {
        v.sharp = false;
        v.failure = "intersection of pool ideals " + std::to_string(i) + " and " + std::to_string(j);
      }
  if (v.sharp && pool.size() > 2 && !sharp_ideals(phi, pool)) {
    v.sharp = false;
    v.failure = "intersection of the whole pool";
  }
  return v;
}

/// S (x)_R M as S^m / S phi(Z), where Z is the module of relations on the
/// coordinate basis of M.
template <class K>
class TensorWithS {
 public:
  TensorWithS(AlgMap<K> phi, const FinMod<K>& M) : phi_(std::move(phi)), m_(M.dim()), rel_(phi_.field(), 0) {
    const auto& R = phi_.source();
    const auto& F = phi_.field();
    Mat<K> eval = zeros(F, m_, m_ * R.dim());
    for (Index j = 0; j < m_; ++j)
      for (Index i = 0; i < R.dim(); ++i) eval.col(j * R.dim() + i) = M.action(i).col(j);
    Mat<K> Z = kernel(F, eval);
    Mat<K> phim = block_diag(F, phi_.matrix(), m_);
    std::vector<Vec<K>> imgs;
    for (Index c = 0; c < Z.cols(); ++c) imgs.push_back(phim * Z.col(c));
    rel_ = s_span(phi_.target(), imgs, m_);
  }

  Index dim() const { return phi_.target().dim() * m_ - rel_.dim(); }
  const Subspace<K>& relations() const { return rel_; }

  /// Image of S (x) N in S^m, relations included.
  Subspace<K> image(const Subspace<K>& N) const {
    const auto& S = phi_.target();
    std::vector<Vec<K>> gens;
    for (const auto& v : N.basis()) {
      Vec<K> w = zero_vec(phi_.field(), S.dim() * m_);
      for (Index j = 0; j < m_; ++j) w.segment(j * S.dim(), S.dim()) = S.one() * v(j);
      gens.push_back(std::move(w));
    }
    return s_span(S, gens, m_) + rel_;
  }

 private:
  AlgMap<K> phi_;
  Index m_;
  Subspace<K> rel_;
};

template <class K>
bool sharp_modules(const AlgMap<K>& phi, const FinMod<K>& M, const std::vector<Subspace<K>>& family) {
  if (family.empty()) throw FinAlgError("sharp: empty family");
  for (const auto& N : family)
    if (!is_submodule(M, N)) throw FinAlgError("sharp: family member is not a submodule");
  TensorWithS<K> T(phi, M);
  Subspace<K> meet = family[0];
  Subspace<K> meet_img = T.image(family[0]);
  for (std::size_t i = 1; i < family.size(); ++i) {
    meet = intersect(meet, family[i]);
    meet_img = intersect(meet_img, T.image(family[i]));
  }
  return T.image(meet) == meet_img;
}

// ---------------------------------------------------------------------------
// Content, the cap lemma, domains

/// Coordinates of s in the free R-basis b_1..b_k of S: r with
/// s = sum phi(r_j) b_j. Throws unless the b_j form a free basis.
template <class K>
std::vector<Vec<K>> free_coordinates(const AlgMap<K>& phi, const std::vector<Vec<K>>& basis, const Vec<K>& s) {
  const auto& R = phi.source();
  const auto& S = phi.target();
  auto k = static_cast<Index>(basis.size());
  Mat<K> B = zeros(phi.field(), S.dim(), k * R.dim());
  for (Index j = 0; j < k; ++j)
    for (Index i = 0; i < R.dim(); ++i) B.col(j * R.dim() + i) = S.mul(phi.matrix().col(i), basis[static_cast<std::size_t>(j)]);
  if (B.rows() != B.cols() || rank(B) != B.cols()) throw FinAlgError("content: the given elements are not a free basis");
  auto x = solve(phi.field(), B, s);
  std::vector<Vec<K>> out;
  for (Index j = 0; j < k; ++j) out.push_back(x->segment(j * R.dim(), R.dim()));
  return out;
}

template <class K>
Subspace<K> content(const AlgMap<K>& phi, const std::vector<Vec<K>>& basis, const Vec<K>& s) {
  return ideal(phi.source(), free_coordinates(phi, basis, s));
}

struct CapVerdict {
  bool hypothesis = false;
  bool conclusion = false;
  bool discrepancy() const { return hypothesis && !conclusion; }
};

/// Hypothesis Tor_1^{R/A}(R/(A+B), S/AS) = 0; conclusion AS cap BS = (A cap B)S.
template <class K>
CapVerdict check_cap(const AlgMap<K>& phi, const Subspace<K>& A, const Subspace<K>& B) {
  CapVerdict v;
  auto q = induced(phi, A);
  std::vector<Vec<K>> gens;
  for (const auto& b : B.basis()) gens.push_back(q.R.project(b));
  v.hypothesis = tor1_vanishes(q.map, gens);
  v.conclusion = intersect(extend(phi, A), extend(phi, B)) == extend(phi, intersect(A, B));
  return v;
}

enum class DomainVerdict { Zero, Domain, NotDomain };

std::string to_string(DomainVerdict v);

/// Raised when the domain question cannot be settled exactly.
class UndecidableError : public FinAlgError {
 public:
  using FinAlgError::FinAlgError;
};

/// A rational root of a polynomial with rational coefficients (constant
/// term first). Throws UndecidableError when the coefficients are too large
/// for divisor enumeration.
std::optional<Rational> rational_root(const std::vector<Rational>& poly);

/// Finite-dimensional algebras are domains exactly when they are fields.
/// Over GF(p): reduced iff Frobenius is injective, and then the number of
/// field factors is the dimension of its fixed space. Over Q: nilpotents from
/// the trace form, then zero divisors a - r with r a rational root of the
/// minimal polynomial of a; an algebra with neither is undecidable here.
template <class K>
DomainVerdict is_domain(const FinAlg<K>& A) {
  const auto& F = A.field();
  Index n = A.dim();
  if (n == 0) return DomainVerdict::Zero;
  if (n == 1) return DomainVerdict::Domain;
  if (F.characteristic() != 0) {
    Mat<K> Fr = zeros(F, n, n);
    for (Index i = 0; i < n; ++i) Fr.col(i) = A.pow(A.e(i), F.characteristic());
    if (rank(Fr) < n) return DomainVerdict::NotDomain;
    Mat<K> fixed = Fr - identity(F, n);
    return n - rank(fixed) == 1 ? DomainVerdict::Domain : DomainVerdict::NotDomain;
  } else {
    Mat<K> T = zeros(F, n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) T(i, j) = Mat<K>(A.L(i) * A.L(j)).trace();
    if (rank(T) < n) return DomainVerdict::NotDomain;
    std::vector<Vec<K>> probes;
    for (Index i = 0; i < n; ++i) probes.push_back(A.e(i));
    Vec<K> mix = A.zero();
    for (Index i = 0; i < n; ++i) mix(i) = F.from_int(static_cast<long>(i) + 1);
    probes.push_back(mix);
    for (const auto& a : probes) {
      auto m = minimal_polynomial(A, a);
      if (m.size() < 3) continue;
      if constexpr (std::is_same_v<K, Rational>) {
        if (rational_root(m)) return DomainVerdict::NotDomain;
      }
    }
    throw UndecidableError("reduced algebra over Q without a rational zero-divisor witness");
  }
}

}  // namespace chainring::finalg
