#include "chainring/finalg_io.hpp"

#include <cstdio>

namespace chainring::finalg {

FieldSpec instance_field(const nlohmann::json& j) {
  const auto& f = io_detail::member(j, "", "field");
  if (!f.is_string()) io_detail::bad("field", "expected a string");
  try {
    return FieldSpec::parse(f.get<std::string>());
  } catch (const std::invalid_argument& e) {
    io_detail::bad("field", e.what());
  }
}

std::string json_hash(const nlohmann::json& j) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace chainring::finalg
