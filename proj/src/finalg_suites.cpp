#include "chainring/finalg_suites.hpp"

namespace chainring::finalg {

std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

std::vector<std::string> instance_suites() {
  return {"equivalence", "cap-lemma", "content", "sharp", "prime-domain", "all"};
}

CheckReport equivalence_enumerated_gf2(int max_dim) {
  CheckReport rep("flatness-equivalence-enumerated", {{"field", "Fp:2"}, {"max_dim", max_dim}});
  std::vector<AlgPtr<ModP>> algs;
  for (auto& A : gf2_algebras(max_dim)) algs.push_back(share(std::move(A)));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t r = 0; r < algs.size(); ++r) {
    if (!is_local(*algs[r])) continue;
    for (std::size_t s = 0; s < algs.size(); ++s) pairs.emplace_back(r, s);
  }
  struct Out {
    std::size_t maps = 0, flat = 0;
    std::vector<nlohmann::json> bad;
  };
  auto outs = parallel_map<Out>(pairs.size(), [&](std::size_t k) {
    auto [r, s] = pairs[k];
    const auto& R = algs[r];
    auto pool = ideal_pool(*R);
    auto elems = all_vectors(R->field(), R->dim());
    Out o;
    for (const auto& phi : gf2_maps(R, algs[s])) {
      auto v = equivalence(phi, elems, pool);
      ++o.maps;
      o.flat += v.free;
      if (!v.agree())
        o.bad.push_back({{"R", r}, {"S", s}, {"hash", json_hash(map_json(phi))}, {"free", v.free},
                         {"ann_and_sharp", v.iv}, {"tor1", v.tor}, {"detail", v.detail}});
    }
    return o;
  });
  std::size_t flat = 0;
  for (const auto& o : outs) {
    rep.cases += o.maps;
    flat += o.flat;
    for (const auto& b : o.bad) rep.fail(b);
  }
  rep.certify({{"algebras", algs.size()}, {"local_sources", pairs.size() / std::max<std::size_t>(1, algs.size())}});
  rep.notes["flat_maps"] = flat;
  return rep;
}

}  // namespace chainring::finalg
