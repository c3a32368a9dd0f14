#pragma once

// Instance files for the finite algebra suites.
//
//   {"field": "Q" | "Fp:p",
//    "R": {"dim": n, "mult_table": T, "unit": v?},   T[i][j] = coords of e_i e_j
//    "S": {...},
//    "map": rows of the dim S x dim R matrix (column i is the image of e_i),
//    "ideals": [[generators of R]], "elements": [R vectors],
//    "primes": [[generators of R]], "free_basis": [S vectors]?,
//    "modules": [{"dim": m, "action": [m x m matrix per basis element of R],
//                 "submodules": [[generators]]}]}
//
// Scalars are JSON integers or strings such as "3/7".

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chainring/finalg.hpp"

namespace chainring::finalg {

/// Malformed instance input; the message starts with the offending path.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class K>
struct ModuleData {
  FinMod<K> module;
  std::vector<Subspace<K>> submodules;
};

template <class K>
struct FinalgInstance {
  AlgMap<K> phi;
  std::vector<Subspace<K>> ideals;
  std::vector<Vec<K>> elements;
  std::vector<Subspace<K>> primes;
  std::optional<std::vector<Vec<K>>> free_basis;
  std::vector<ModuleData<K>> modules;
};

FieldSpec instance_field(const nlohmann::json& j);

/// 16 hex digits of FNV-1a over the compact dump.
std::string json_hash(const nlohmann::json& j);

namespace io_detail {

[[noreturn]] inline void bad(const std::string& path, const std::string& what) {
  throw InputError(path + ": " + what);
}

inline const nlohmann::json& member(const nlohmann::json& j, const std::string& path, const char* key) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path, std::string("missing \"") + key + "\"");
  return *it;
}

inline const nlohmann::json& array(const nlohmann::json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  return j;
}

template <class K>
K scalar(const FieldOps<K>& F, const nlohmann::json& j, const std::string& path) {
  try {
    if (j.is_number_integer()) return F.from_int(j.get<long>());
    if (j.is_string()) return F.parse(j.get<std::string>());
  } catch (const std::exception& e) {
    bad(path, e.what());
  }
  bad(path, "expected an integer or a string scalar");
}

template <class K>
Vec<K> vector(const FieldOps<K>& F, const nlohmann::json& j, Index n, const std::string& path) {
  array(j, path);
  if (static_cast<Index>(j.size()) != n) bad(path, "expected " + std::to_string(n) + " entries");
  Vec<K> v = zero_vec(F, n);
  for (Index i = 0; i < n; ++i) v(i) = scalar(F, j[static_cast<std::size_t>(i)], path + "[" + std::to_string(i) + "]");
  return v;
}

template <class K>
std::vector<Vec<K>> vectors(const FieldOps<K>& F, const nlohmann::json& j, Index n, const std::string& path) {
  array(j, path);
  std::vector<Vec<K>> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(vector(F, j[i], n, path + "[" + std::to_string(i) + "]"));
  return out;
}

template <class K>
Mat<K> matrix(const FieldOps<K>& F, const nlohmann::json& j, Index rows, Index cols, const std::string& path) {
  array(j, path);
  if (static_cast<Index>(j.size()) != rows) bad(path, "expected " + std::to_string(rows) + " rows");
  Mat<K> m = zeros(F, rows, cols);
  for (Index r = 0; r < rows; ++r)
    m.row(r) = vector(F, j[static_cast<std::size_t>(r)], cols, path + "[" + std::to_string(r) + "]").transpose();
  return m;
}

inline Index dimension(const nlohmann::json& j, const std::string& path) {
  const auto& d = member(j, path, "dim");
  if (!d.is_number_integer() || d.get<long>() < 1) bad(path + ".dim", "expected a positive integer");
  return d.get<Index>();
}

template <class K>
FinAlg<K> algebra(const FieldOps<K>& F, const nlohmann::json& j, const std::string& path) {
  Index n = dimension(j, path);
  const auto& t = array(member(j, path, "mult_table"), path + ".mult_table");
  if (static_cast<Index>(t.size()) != n) bad(path + ".mult_table", "expected " + std::to_string(n) + " rows");
  std::vector<std::vector<Vec<K>>> table;
  for (Index i = 0; i < n; ++i)
    table.push_back(vectors(F, t[static_cast<std::size_t>(i)], n, path + ".mult_table[" + std::to_string(i) + "]"));
  for (Index i = 0; i < n; ++i)
    if (static_cast<Index>(table[static_cast<std::size_t>(i)].size()) != n)
      bad(path + ".mult_table[" + std::to_string(i) + "]", "expected " + std::to_string(n) + " products");
  std::optional<Vec<K>> unit;
  if (j.contains("unit")) unit = vector(F, j["unit"], n, path + ".unit");
  try {
    return FinAlg<K>::from_table(F, table, unit);
  } catch (const FinAlgError& e) {
    bad(path, e.what());
  }
}

template <class K>
std::vector<Subspace<K>> ideal_list(const FinAlg<K>& A, const nlohmann::json& j, const std::string& path) {
  array(j, path);
  std::vector<Subspace<K>> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(ideal(A, vectors(A.field(), j[i], A.dim(), path + "[" + std::to_string(i) + "]")));
  return out;
}

}  // namespace io_detail

template <class K>
nlohmann::json scalar_json(const K& c) {
  if constexpr (std::is_same_v<K, ModP>) {
    return c.value();
  } else {
    if (c.raw().get_den() == 1 && c.raw().get_num().fits_slong_p()) return c.raw().get_num().get_si();
    return c.str();
  }
}

template <class K>
nlohmann::json vector_json(const Vec<K>& v) {
  auto out = nlohmann::json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(scalar_json(v(i)));
  return out;
}

template <class K>
nlohmann::json matrix_json(const Mat<K>& m) {
  auto out = nlohmann::json::array();
  for (Index r = 0; r < m.rows(); ++r) out.push_back(vector_json<K>(m.row(r).transpose()));
  return out;
}

template <class K>
nlohmann::json algebra_json(const FinAlg<K>& A) {
  auto table = nlohmann::json::array();
  for (Index i = 0; i < A.dim(); ++i) {
    auto row = nlohmann::json::array();
    for (Index j = 0; j < A.dim(); ++j) row.push_back(vector_json<K>(A.L(i).col(j)));
    table.push_back(std::move(row));
  }
  return {{"dim", A.dim()}, {"mult_table", std::move(table)}, {"unit", vector_json(A.one())}};
}

template <class K>
nlohmann::json subspace_json(const Subspace<K>& U) {
  auto out = nlohmann::json::array();
  for (const auto& v : U.basis()) out.push_back(vector_json(v));
  return out;
}

/// The map alone, in instance-file form.
template <class K>
nlohmann::json map_json(const AlgMap<K>& phi) {
  return {{"field", phi.field().spec.str()},
          {"R", algebra_json(phi.source())},
          {"S", algebra_json(phi.target())},
          {"map", matrix_json(phi.matrix())}};
}

template <class K>
nlohmann::json instance_json(const FinalgInstance<K>& inst) {
  using namespace io_detail;
  auto j = map_json(inst.phi);
  auto ideals = nlohmann::json::array(), primes = nlohmann::json::array(), elems = nlohmann::json::array();
  for (const auto& I : inst.ideals) ideals.push_back(subspace_json(I));
  for (const auto& P : inst.primes) primes.push_back(subspace_json(P));
  for (const auto& e : inst.elements) elems.push_back(vector_json(e));
  j["ideals"] = ideals;
  j["primes"] = primes;
  j["elements"] = elems;
  if (inst.free_basis) {
    auto fb = nlohmann::json::array();
    for (const auto& b : *inst.free_basis) fb.push_back(vector_json(b));
    j["free_basis"] = fb;
  }
  auto mods = nlohmann::json::array();
  for (const auto& md : inst.modules) {
    auto act = nlohmann::json::array(), subs = nlohmann::json::array();
    for (const auto& a : md.module.actions()) act.push_back(matrix_json(a));
    for (const auto& N : md.submodules) subs.push_back(subspace_json(N));
    mods.push_back({{"dim", md.module.dim()}, {"action", act}, {"submodules", subs}});
  }
  j["modules"] = mods;
  return j;
}

/// Parses an instance over the field named in it (which must match F).
template <class K>
FinalgInstance<K> parse_instance(const FieldOps<K>& F, const nlohmann::json& j) {
  using namespace io_detail;
  if (!(instance_field(j) == F.spec)) bad("field", "does not match the requested field");
  auto R = share(algebra(F, member(j, "", "R"), "R"));
  auto S = share(algebra(F, member(j, "", "S"), "S"));
  Mat<K> m = matrix(F, member(j, "", "map"), S->dim(), R->dim(), "map");
  if (auto err = AlgMap<K>::error(*R, *S, m)) bad("map", *err);
  FinalgInstance<K> inst{AlgMap<K>(R, S, m), {}, {}, {}, std::nullopt, {}};
  if (j.contains("ideals")) inst.ideals = ideal_list(*R, j["ideals"], "ideals");
  if (j.contains("primes")) inst.primes = ideal_list(*R, j["primes"], "primes");
  if (j.contains("elements")) inst.elements = vectors(F, j["elements"], R->dim(), "elements");
  if (j.contains("free_basis")) inst.free_basis = vectors(F, j["free_basis"], S->dim(), "free_basis");
  if (j.contains("modules")) {
    const auto& mods = array(j["modules"], "modules");
    for (std::size_t k = 0; k < mods.size(); ++k) {
      std::string path = "modules[" + std::to_string(k) + "]";
      Index d = dimension(mods[k], path);
      const auto& act = array(member(mods[k], path, "action"), path + ".action");
      if (static_cast<Index>(act.size()) != R->dim()) bad(path + ".action", "expected one matrix per basis element of R");
      std::vector<Mat<K>> mats;
      for (std::size_t i = 0; i < act.size(); ++i)
        mats.push_back(matrix(F, act[i], d, d, path + ".action[" + std::to_string(i) + "]"));
      std::optional<FinMod<K>> M;
      try {
        M.emplace(*R, std::move(mats));
      } catch (const FinAlgError& e) {
        bad(path, e.what());
      }
      std::vector<Subspace<K>> subs;
      if (mods[k].contains("submodules")) {
        const auto& sj = array(mods[k]["submodules"], path + ".submodules");
        for (std::size_t s = 0; s < sj.size(); ++s)
          subs.push_back(submodule(*M, vectors(F, sj[s], d, path + ".submodules[" + std::to_string(s) + "]")));
      }
      inst.modules.push_back({std::move(*M), std::move(subs)});
    }
  }
  return inst;
}

}  // namespace chainring::finalg
