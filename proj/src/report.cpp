#include "chainring/report.hpp"

#include <iomanip>
#include <sstream>

namespace chainring {

namespace {

std::string scalar_text(const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string clipped(const nlohmann::json& v, std::size_t width = 160) {
  std::string s = scalar_text(v);
  return s.size() <= width ? s : s.substr(0, width) + " ...";
}

void render_value(std::ostream& os, const std::string& key, const nlohmann::json& v, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object() && !v.empty()) {
    os << pad << key << ":\n";
    for (auto it = v.begin(); it != v.end(); ++it) render_value(os, it.key(), it.value(), indent + 2);
  } else if (v.is_array() && !v.empty() && !v[0].is_number()) {
    os << pad << key << ":\n";
    for (const auto& item : v) os << pad << "  - " << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
  } else {
    os << pad << key << ": " << scalar_text(v) << "\n";
  }
}

}  // namespace

std::string render_text(const nlohmann::json& report) {
  std::ostringstream os;
  if (!report.contains("checks")) {
    for (auto it = report.begin(); it != report.end(); ++it) render_value(os, it.key(), it.value(), 0);
    return os.str();
  }
  os << report.value("tool", "") << " " << report.value("version", "") << "  " << report.value("command", "")
     << "  status: " << report.value("status", "") << "\n";
  if (report.contains("config")) {
    os << "config:";
    for (auto it = report["config"].begin(); it != report["config"].end(); ++it)
      os << " " << it.key() << "=" << scalar_text(it.value());
    os << "\n";
  }
  for (const auto& c : report["checks"]) {
    std::string status = c.value("status", "");
    os << "  " << std::left << std::setw(19) << (status == "ok" ? "ok" : status == "fail" ? "FAIL" : status) << std::setw(34)
       << c.value("check", "") << " cases " << c.value("cases", 0) << "  certificates " << c.value("certificate_count", 0)
       << "  counterexamples " << c.value("counterexample_count", 0) << "\n";
    if (!c["parameters"].empty()) os << "      parameters: " << c["parameters"].dump() << "\n";
    std::size_t shown = 0;
    for (const auto& ce : c["counterexamples"]) {
      if (shown++ == 3) break;
      os << "      counterexample: " << clipped(ce) << "\n";
    }
    if (c.contains("notes"))
      for (auto it = c["notes"].begin(); it != c["notes"].end(); ++it)
        os << "      " << it.key() << ": " << clipped(it.value()) << "\n";
  }
  if (report.contains("timing")) {
    os << "timing:\n";
    for (const auto& t : report["timing"])
      os << "  " << std::left << std::setw(40) << t["stage"].get<std::string>() << std::fixed << std::setprecision(3)
         << t["seconds"].get<double>() << " s\n";
  }
  return os.str();
}

}  // namespace chainring
