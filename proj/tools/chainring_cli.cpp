// chainring: verification runs for the chain-ring construction and the
// finite algebra suites.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 bad input or usage.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "chainring/construction_suite.hpp"
#include "chainring/finalg_suites.hpp"

using namespace chainring;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string out;
  std::string format = "json";
  bool timing = false;
};

struct PosetOpts {
  std::string poset = "binary";
  int height = 3;
};

void add_output(CLI::App* app, Output& o) {
  app->add_option("--out", o.out, "Write the report to this file instead of stdout");
  app->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app->add_flag("--timing", o.timing, "Embed per-stage wall-clock timing (reports are then not reproducible)");
}

void add_poset(CLI::App* app, PosetOpts& p) {
  app->add_option("--poset", p.poset, "binary or file:PATH");
  app->add_option("--height", p.height, "Frontier height of the binary poset")->check(CLI::Range(0, 12));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::shared_ptr<const Poset> load_poset(const PosetOpts& o) {
  if (o.poset == "binary") return std::make_shared<const Poset>(build_binary_poset(o.height));
  if (o.poset.rfind("file:", 0) == 0) return std::make_shared<const Poset>(Poset::from_json(parse_json_file(o.poset.substr(5))));
  throw UsageError("--poset must be 'binary' or 'file:PATH'");
}

json poset_config(const PosetOpts& o, const Poset& p) {
  return {{"poset", o.poset}, {"height", p.frontier_height()}};
}

void emit(const Output& o, const json& report) {
  std::string text = o.format == "text" ? render_text(report) : report.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + o.out + "'");
  f << text;
}

int exit_code(const json& report) { return report.value("status", "ok") == "fail" ? 1 : 0; }

/// Calls fn with the FieldOps matching the spec.
template <class Fn>
auto with_field(const FieldSpec& spec, Fn fn) {
  if (spec.kind == FieldSpec::Kind::Rational) return fn(FieldOps<Rational>{spec});
  return fn(FieldOps<ModP>{spec});
}

FieldSpec parse_field(const std::string& s) {
  try {
    return FieldSpec::parse(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--field: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

struct VerifyOpts {
  PosetOpts poset;
  int degree = 6;
  std::string field = "Q";
  std::uint64_t seed = 0;
  Output out;
};

int cmd_verify(const VerifyOpts& o) {
  auto p = load_poset(o.poset);
  FieldSpec spec = parse_field(o.field);
  StageTimer timer(o.out.timing);
  auto checks = with_field(spec, [&](const auto& F) { return verify_construction(p, F, o.degree, o.seed, timer); });
  json config = poset_config(o.poset, *p);
  config["degree"] = o.degree;
  config["field"] = spec.str();
  config["seed"] = o.seed;
  auto report = make_report("verify-construction", config, checks, timer);
  emit(o.out, report);
  return exit_code(report);
}

struct FinalgRunOpts {
  std::string file;
  std::string suite = "all";
  std::uint64_t seed = 0;
  Output out;
};

int cmd_finalg_run(const FinalgRunOpts& o) {
  json j = parse_json_file(o.file);
  FieldSpec spec = finalg::instance_field(j);
  StageTimer timer(o.out.timing);
  std::string hash = finalg::json_hash(j);
  auto checks = with_field(spec, [&](const auto& F) {
    auto inst = finalg::parse_instance(F, j);
    return timer.run(o.suite, [&] { return finalg::run_instance_suite(inst, o.suite, o.seed); });
  });
  json config = {{"instance", o.file}, {"instance_hash", hash}, {"field", spec.str()}, {"suite", o.suite}, {"seed", o.seed}};
  auto report = make_report("finalg run", config, checks, timer);
  emit(o.out, report);
  return exit_code(report);
}

struct BatteryOpts {
  std::string suite = "all";
  std::string field = "Fp:2";
  std::uint64_t seed = 0;
  int count = 100;
  int max_dim = 6;
  int enum_dim = 3;
  Output out;
};

int cmd_finalg_battery(const BatteryOpts& o) {
  FieldSpec spec = parse_field(o.field);
  StageTimer timer(o.out.timing);
  std::vector<CheckReport> checks;
  bool all = o.suite == "all";
  if ((all || o.suite == "enumerated") && spec == FieldSpec::parse("Fp:2"))
    checks.push_back(timer.run("enumerated", [&] { return finalg::equivalence_enumerated_gf2(o.enum_dim); }));
  else if (o.suite == "enumerated")
    throw UsageError("the enumerated family exists only over Fp:2");
  with_field(spec, [&](const auto& F) {
    if (all || o.suite == "equivalence")
      for (auto& r : timer.run("equivalence", [&] { return finalg::equivalence_random(F, o.seed, o.count, o.max_dim); }))
        checks.push_back(std::move(r));
    if (all || o.suite == "cap-lemma")
      checks.push_back(timer.run("cap-lemma", [&] { return finalg::cap_random(F, o.seed, o.count, o.max_dim); }));
    if (all || o.suite == "content")
      checks.push_back(timer.run("content", [&] { return finalg::content_random(F, o.seed, o.count, o.max_dim); }));
    return 0;
  });
  json config = {{"field", spec.str()}, {"suite", o.suite},     {"seed", o.seed},
                 {"count", o.count},    {"max_dim", o.max_dim}, {"enumerated_max_dim", o.enum_dim}};
  auto report = make_report("finalg battery", config, checks, timer);
  emit(o.out, report);
  return exit_code(report);
}

struct EnumerateOpts {
  std::string family = "gf2";
  std::string field = "Q";
  std::uint64_t seed = 0;
  int count = 20;
  int max_dim = 2;
  bool instances = false;
  std::string out;
};

/// One JSON line per instance with the three flatness verdicts; the exit
/// code reports any disagreement.
int cmd_enumerate(const EnumerateOpts& o) {
  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + o.out + "'");
  }
  std::ostream& os = o.out.empty() ? std::cout : file;
  bool disagree = false;
  auto line = [&](json row, const auto& phi, const finalg::EquivalenceVerdict& v) {
    row["hash"] = finalg::json_hash(finalg::map_json(phi));
    row["dims"] = {phi.source().dim(), phi.target().dim()};
    row["free"] = v.free;
    row["ann_and_sharp"] = v.iv;
    row["tor1"] = v.tor;
    row["agree"] = v.agree();
    if (o.instances) row["instance"] = finalg::map_json(phi);
    disagree = disagree || !v.agree();
    os << row.dump() << "\n";
  };
  if (o.family == "gf2") {
    if (o.max_dim < 1 || o.max_dim > 3) throw UsageError("--max-dim must be 1..3 for the gf2 family");
    std::vector<finalg::AlgPtr<ModP>> algs;
    for (auto& A : finalg::gf2_algebras(o.max_dim)) algs.push_back(finalg::share(std::move(A)));
    for (std::size_t r = 0; r < algs.size(); ++r) {
      if (!finalg::is_local(*algs[r])) continue;
      auto pool = finalg::ideal_pool(*algs[r]);
      auto elems = finalg::all_vectors(algs[r]->field(), algs[r]->dim());
      for (std::size_t s = 0; s < algs.size(); ++s)
        for (const auto& phi : finalg::gf2_maps(algs[r], algs[s]))
          line({{"family", "gf2"}, {"R", r}, {"S", s}}, phi, finalg::equivalence(phi, elems, pool));
    }
  } else if (o.family == "random") {
    FieldSpec spec = parse_field(o.field);
    with_field(spec, [&](const auto& F) {
      for (int i = 0; i < o.count; ++i) {
        auto rng = finalg::case_rng(o.seed, static_cast<std::uint64_t>(i));
        finalg::ScalarSource src(F, rng);
        auto inst = finalg::random_instance(src, o.max_dim);
        auto v = finalg::equivalence(inst.phi, finalg::element_pool(inst.phi.source(), src, 4),
                                     finalg::ideal_pool(inst.phi.source()));
        line({{"family", inst.family}, {"case", i}, {"seed", o.seed}}, inst.phi, v);
      }
      return 0;
    });
  } else {
    throw UsageError("--family must be gf2 or random");
  }
  return disagree ? 1 : 0;
}

struct DescribeOpts {
  PosetOpts poset;
  std::string arg;
  Output out;
};

int cmd_describe(const std::string& what, const DescribeOpts& o) {
  auto p = load_poset(o.poset);
  json result = {{"query", what}, {"config", poset_config(o.poset, *p)}};
  if (what == "ann-u") {
    ElemIndex t = p->index(o.arg);
    auto I = ann_u_generators(*p, t);
    json gens = json::array();
    for (const auto& g : I.generators()) gens.push_back(g.str(*p));
    result["tau"] = o.arg;
    result["generators"] = gens;
  } else if (what == "basis-piece") {
    int d = 0;
    try {
      std::size_t used = 0;
      d = std::stoi(o.arg, &used);
      if (used != o.arg.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw UsageError("basis-piece: degree must be an integer, got '" + o.arg + "'");
    }
    json items = json::array();
    for (const auto& b : basis_of_total_degree(*p, d)) items.push_back(b.str(*p));
    result["degree"] = d;
    result["basis"] = items;
  } else if (what == "basis-from-degree") {
    json dj;
    try {
      dj = json::parse(o.arg);
    } catch (const json::parse_error& e) {
      throw UsageError(std::string("basis-from-degree: ") + e.what());
    }
    auto d = Multidegree::from_json(*p, dj);
    auto b = basis_from_multidegree(*p, d);
    result["multidegree"] = d.str(*p);
    result["basis_element"] = b ? b->str(*p) : "none";
  } else {
    json chains = json::array();
    for (const auto& c : p->maximal_chains()) {
      std::string s;
      for (ElemIndex i : c) s += (s.empty() ? "" : " < ") + (p->id(i).empty() ? std::string("()") : p->id(i));
      chains.push_back(s);
    }
    result["maximal_chains"] = chains;
  }
  emit(o.out, result);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification runs for the chain-ring construction and finite algebra suites", "chainring"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  VerifyOpts verify;
  auto* v = app.add_subcommand("verify-construction", "Run every construction check on one poset");
  add_poset(v, verify.poset);
  v->add_option("--degree", verify.degree, "Bound on the monomial degree")->check(CLI::Range(0, 12));
  v->add_option("--field", verify.field, "Q or Fp:p");
  v->add_option("--seed", verify.seed, "Seed for sampled checks");
  add_output(v, verify.out);

  auto* fin = app.add_subcommand("finalg", "Finite algebra suites");
  fin->require_subcommand(1);
  FinalgRunOpts run;
  auto* fr = fin->add_subcommand("run", "Run a suite on an instance file");
  fr->add_option("file", run.file, "Instance JSON")->required();
  fr->add_option("--suite", run.suite, "Suite")->check(CLI::IsMember(finalg::instance_suites()));
  fr->add_option("--seed", run.seed, "Seed for sampled ideals and elements");
  add_output(fr, run.out);
  BatteryOpts bat;
  auto* fb = fin->add_subcommand("battery", "Seeded random and enumerated suites");
  fb->add_option("--suite", bat.suite, "Suite")
      ->check(CLI::IsMember({"all", "enumerated", "equivalence", "cap-lemma", "content"}));
  fb->add_option("--field", bat.field, "Q or Fp:p");
  fb->add_option("--seed", bat.seed, "Seed");
  fb->add_option("--count", bat.count, "Random instances per suite")->check(CLI::Range(1, 100000));
  fb->add_option("--max-dim", bat.max_dim, "Largest algebra dimension of random instances")->check(CLI::Range(1, 8));
  fb->add_option("--enumerated-max-dim", bat.enum_dim, "Largest dimension of the GF(2) enumeration")->check(CLI::Range(1, 3));
  add_output(fb, bat.out);

  EnumerateOpts en;
  auto* e = app.add_subcommand("enumerate", "Stream an instance family with flatness verdicts (JSON lines)");
  e->add_option("--family", en.family, "gf2 or random")->check(CLI::IsMember({"gf2", "random"}));
  e->add_option("--field", en.field, "Field of the random family");
  e->add_option("--seed", en.seed, "Seed of the random family");
  e->add_option("--count", en.count, "Size of the random family")->check(CLI::Range(1, 100000));
  e->add_option("--max-dim", en.max_dim, "Largest algebra dimension")->check(CLI::Range(1, 8));
  e->add_flag("--instances", en.instances, "Include each map in instance-file form");
  e->add_option("--out", en.out, "Write to this file instead of stdout");

  DescribeOpts desc;
  auto* d = app.add_subcommand("describe", "Inspect bases, annihilators and multidegrees");
  d->require_subcommand(1);
  auto* d_ann = d->add_subcommand("ann-u", "Generators of the annihilator of u_tau");
  d_ann->add_option("tau", desc.arg, "Poset element id")->required();
  auto* d_piece = d->add_subcommand("basis-piece", "Basis of M in one total degree");
  d_piece->add_option("degree", desc.arg, "Total degree")->required();
  auto* d_from = d->add_subcommand("basis-from-degree", "Basis element of a multidegree, or none");
  d_from->add_option("multidegree", desc.arg, "JSON object {id: coefficient}")->required();
  auto* d_chains = d->add_subcommand("maximal-chains", "Maximal chains of the poset");
  for (auto* sub : {d_ann, d_piece, d_from, d_chains}) {
    add_poset(sub, desc.poset);
    sub->add_option("--format", desc.out.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", desc.out.out, "Write to this file instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& s) {
    return app.exit(s);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return 2;
  }

  try {
    if (*v) return cmd_verify(verify);
    if (*fr) return cmd_finalg_run(run);
    if (*fb) return cmd_finalg_battery(bat);
    if (*e) return cmd_enumerate(en);
    for (auto* sub : {d_ann, d_piece, d_from, d_chains})
      if (*sub) return cmd_describe(sub->get_name(), desc);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
