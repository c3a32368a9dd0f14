#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace chainring {

inline constexpr const char* kVersion = "0.1.0";

/// Outcome of one verification check. Certificates and counterexamples are
/// capped in the JSON (the counts are always exact).
struct CheckReport {
  static constexpr std::size_t kMaxListed = 25;

  std::string check;
  nlohmann::json parameters = nlohmann::json::object();
  std::string status = "ok";  // ok | fail | hypothesis-not-met
  std::size_t cases = 0;
  std::size_t certificate_count = 0;
  std::size_t counterexample_count = 0;
  nlohmann::json certificates = nlohmann::json::array();
  nlohmann::json counterexamples = nlohmann::json::array();
  nlohmann::json notes = nlohmann::json::object();

  CheckReport() = default;
  explicit CheckReport(std::string name, nlohmann::json params = nlohmann::json::object())
      : check(std::move(name)), parameters(std::move(params)) {}

  bool ok() const { return status == "ok"; }

  void certify(nlohmann::json c) {
    if (certificates.size() < kMaxListed) certificates.push_back(std::move(c));
    ++certificate_count;
  }
  void fail(nlohmann::json c) {
    if (counterexamples.size() < kMaxListed) counterexamples.push_back(std::move(c));
    ++counterexample_count;
    status = "fail";
  }
  /// Require a condition, recording a counterexample when it fails.
  bool expect(bool cond, const nlohmann::json& ce) {
    ++cases;
    if (!cond) fail(ce);
    return cond;
  }

  nlohmann::json to_json() const {
    nlohmann::json j = {{"check", check},
                        {"parameters", parameters},
                        {"status", status},
                        {"cases", cases},
                        {"certificate_count", certificate_count},
                        {"certificates", certificates},
                        {"counterexample_count", counterexample_count},
                        {"counterexamples", counterexamples}};
    if (!notes.empty()) j["notes"] = notes;
    return j;
  }
};

/// Wall-clock time per named stage. Disabled timers run the stage and
/// record nothing, so reports stay byte-identical between runs.
class StageTimer {
 public:
  explicit StageTimer(bool enabled = false) : enabled_(enabled) {}

  template <class Fn>
  auto run(const std::string& stage, Fn fn) {
    if (!enabled_) return fn();
    auto t0 = std::chrono::steady_clock::now();
    auto out = fn();
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    stages_.push_back({{"stage", stage}, {"seconds", dt.count()}});
    return out;
  }
  bool enabled() const { return enabled_; }
  const nlohmann::json& stages() const { return stages_; }

 private:
  bool enabled_;
  nlohmann::json stages_ = nlohmann::json::array();
};

/// Top-level report: command, config, checks, overall status. Timing is
/// included only when the timer was enabled.
inline nlohmann::json make_report(const std::string& command, const nlohmann::json& config,
                                  const std::vector<CheckReport>& checks, const StageTimer& timer) {
  bool failed = false;
  auto arr = nlohmann::json::array();
  for (const auto& c : checks) {
    failed = failed || c.status == "fail";
    arr.push_back(c.to_json());
  }
  nlohmann::json j = {{"tool", "chainring"},
                      {"version", kVersion},
                      {"command", command},
                      {"config", config},
                      {"status", failed ? "fail" : "ok"},
                      {"checks", std::move(arr)}};
  if (timer.enabled()) j["timing"] = timer.stages();
  return j;
}

/// Human-readable rendering of a report (or of any JSON object).
std::string render_text(const nlohmann::json& report);

}  // namespace chainring
