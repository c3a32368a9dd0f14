#include "chainring/finalg_instances.hpp"

#include <algorithm>
#include <set>

namespace chainring::finalg {

std::vector<Exponents> random_order_ideal(std::mt19937_64& rng, int size) {
  std::size_t vars = 1 + rng() % 3;
  std::set<Exponents> in{Exponents(vars, 0)};
  while (static_cast<int>(in.size()) < size) {
    std::set<Exponents> corners;
    for (const auto& m : in)
      for (std::size_t k = 0; k < vars; ++k) {
        Exponents c = m;
        ++c[k];
        if (in.count(c)) continue;
        bool closed = true;
        for (std::size_t j = 0; j < vars && closed; ++j) {
          if (c[j] == 0) continue;
          Exponents d = c;
          --d[j];
          closed = in.count(d) > 0;
        }
        if (closed) corners.insert(c);
      }
    auto it = corners.begin();
    std::advance(it, static_cast<long>(rng() % corners.size()));
    in.insert(*it);
  }
  std::vector<Exponents> out(in.begin(), in.end());
  std::stable_sort(out.begin(), out.end(), [](const Exponents& a, const Exponents& b) {
    int da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    return da < db;
  });
  return out;
}

std::vector<Vec<ModP>> all_vectors(const FieldOps<ModP>& F, Index n) {
  std::uint64_t p = F.characteristic();
  std::uint64_t total = 1;
  for (Index i = 0; i < n; ++i) total *= p;
  std::vector<Vec<ModP>> out;
  for (std::uint64_t code = 0; code < total; ++code) {
    Vec<ModP> v = zero_vec(F, n);
    std::uint64_t c = code;
    for (Index i = 0; i < n; ++i, c /= p) v(i) = F.from_int(static_cast<long>(c % p));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<FinAlg<ModP>> gf2_algebras(int max_dim) {
  if (max_dim > 3) throw FinAlgError("GF(2) enumeration is limited to dimension 3");
  FieldOps<ModP> F{FieldSpec::parse("GF2")};
  std::vector<FinAlg<ModP>> out;
  for (Index n = 1; n <= max_dim; ++n) {
    std::vector<std::pair<Index, Index>> slots;
    for (Index i = 1; i < n; ++i)
      for (Index j = i; j < n; ++j) slots.emplace_back(i, j);
    auto vecs = all_vectors(F, n);
    std::uint64_t combos = 1;
    for (std::size_t s = 0; s < slots.size(); ++s) combos *= vecs.size();
    for (std::uint64_t code = 0; code < combos; ++code) {
      std::vector<Mat<ModP>> mult(static_cast<std::size_t>(n), zeros(F, n, n));
      mult[0] = identity(F, n);
      for (Index i = 1; i < n; ++i) mult[static_cast<std::size_t>(i)].col(0) = unit_vec(F, n, i);
      std::uint64_t c = code;
      for (auto [i, j] : slots) {
        const auto& v = vecs[c % vecs.size()];
        c /= vecs.size();
        mult[static_cast<std::size_t>(i)].col(j) = v;
        mult[static_cast<std::size_t>(j)].col(i) = v;
      }
      if (FinAlg<ModP>::satisfies_axioms(mult, F)) out.emplace_back(F, std::move(mult), unit_vec(F, n, 0));
    }
  }
  return out;
}

std::vector<AlgMap<ModP>> gf2_maps(const AlgPtr<ModP>& R, const AlgPtr<ModP>& S) {
  const auto& F = R->field();
  std::vector<AlgMap<ModP>> out;
  // Columns other than the unit coordinate are free; the unit goes to 1.
  std::optional<Index> unit_col;
  for (Index i = 0; i < R->dim(); ++i)
    if (vec_equal(R->one(), R->e(i))) unit_col = i;
  auto vecs = all_vectors(F, S->dim());
  std::vector<Index> free_cols;
  for (Index i = 0; i < R->dim(); ++i)
    if (!unit_col || i != *unit_col) free_cols.push_back(i);
  std::uint64_t combos = 1;
  for (std::size_t k = 0; k < free_cols.size(); ++k) combos *= vecs.size();
  for (std::uint64_t code = 0; code < combos; ++code) {
    Mat<ModP> phi = zeros(F, S->dim(), R->dim());
    if (unit_col) phi.col(*unit_col) = S->one();
    std::uint64_t c = code;
    for (Index col : free_cols) {
      phi.col(col) = vecs[c % vecs.size()];
      c /= vecs.size();
    }
    if (!AlgMap<ModP>::error(*R, *S, phi)) out.emplace_back(R, S, std::move(phi));
  }
  return out;
}

std::vector<Subspace<ModP>> all_ideals(const FinAlg<ModP>& A) {
  const auto& F = A.field();
  std::vector<Subspace<ModP>> out{Subspace<ModP>(F, A.dim())};
  auto vecs = all_vectors(F, A.dim());
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& v : vecs) {
      auto gens = out[k].basis();
      gens.push_back(v);
      auto I = ideal(A, gens);
      if (std::find(out.begin(), out.end(), I) == out.end()) out.push_back(std::move(I));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.dim() < b.dim(); });
  return out;
}

}  // namespace chainring::finalg
