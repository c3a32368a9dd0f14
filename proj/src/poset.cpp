#include "chainring/poset.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

namespace chainring {

Poset::Poset(const std::vector<std::pair<std::string, std::optional<std::string>>>& elements,
             int frontier_height)
    : frontier_(frontier_height) {
  if (frontier_height < 0) throw PosetError("frontier_height must be >= 0");
  std::vector<std::pair<std::string, std::optional<std::string>>> sorted = elements;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::map<std::string, ElemIndex, std::less<>> index;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (!index.emplace(sorted[i].first, static_cast<ElemIndex>(i)).second)
      throw PosetError("duplicate element id '" + sorted[i].first + "'");
  }
  elems_.resize(sorted.size());
  children_.resize(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    elems_[i].id = sorted[i].first;
    if (sorted[i].second) {
      auto it = index.find(*sorted[i].second);
      if (it == index.end())
        throw PosetError("element '" + sorted[i].first + "' has unresolved parent '" +
                         *sorted[i].second + "'");
      elems_[i].parent = it->second;
      children_[static_cast<std::size_t>(it->second)].push_back(static_cast<ElemIndex>(i));
    }
  }
  chains_.resize(elems_.size());
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    std::vector<ElemIndex> chain{static_cast<ElemIndex>(i)};
    while (elems_[static_cast<std::size_t>(chain.back())].parent) {
      chain.push_back(*elems_[static_cast<std::size_t>(chain.back())].parent);
      if (chain.size() > elems_.size()) throw PosetError("parent links of '" + elems_[i].id + "' form a cycle");
    }
    std::reverse(chain.begin(), chain.end());
    elems_[i].height = static_cast<int>(chain.size()) - 1;
    chains_[i] = std::move(chain);
    if (elems_[i].parent) nonminimal_.push_back(static_cast<ElemIndex>(i));
  }
}

Poset Poset::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw PosetError("poset JSON must be an object");
  if (!j.contains("frontier_height") || !j["frontier_height"].is_number_integer())
    throw PosetError("poset JSON: missing integer field 'frontier_height'");
  if (!j.contains("elements") || !j["elements"].is_array())
    throw PosetError("poset JSON: missing array field 'elements'");
  std::vector<std::pair<std::string, std::optional<std::string>>> elements;
  std::size_t k = 0;
  for (const auto& e : j["elements"]) {
    std::string where = "poset JSON: elements[" + std::to_string(k++) + "]";
    if (!e.is_object() || !e.contains("id") || !e["id"].is_string())
      throw PosetError(where + ": expected object with string 'id'");
    if (e["id"].get<std::string>().empty()) throw PosetError(where + ": ids must be nonempty strings");
    std::optional<std::string> parent;
    if (e.contains("parent") && !e["parent"].is_null()) {
      if (!e["parent"].is_string()) throw PosetError(where + ": 'parent' must be a string or null");
      parent = e["parent"].get<std::string>();
    }
    elements.emplace_back(e["id"].get<std::string>(), parent);
  }
  return Poset(elements, j["frontier_height"].get<int>());
}

nlohmann::json Poset::to_json() const {
  nlohmann::json els = nlohmann::json::array();
  for (const auto& e : elems_) {
    nlohmann::json parent = e.parent ? nlohmann::json(id(*e.parent)) : nlohmann::json(nullptr);
    els.push_back({{"id", e.id}, {"parent", parent}});
  }
  return {{"frontier_height", frontier_}, {"elements", els}};
}

std::optional<ElemIndex> Poset::find(std::string_view id) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), id,
                             [](const PosetElem& e, std::string_view v) { return e.id < v; });
  if (it == elems_.end() || it->id != id) return std::nullopt;
  return static_cast<ElemIndex>(it - elems_.begin());
}

ElemIndex Poset::index(std::string_view id) const {
  auto i = find(id);
  if (!i) throw PosetError("unknown element id '" + std::string(id) + "'");
  return *i;
}

std::vector<std::vector<ElemIndex>> Poset::maximal_chains() const {
  std::vector<std::vector<ElemIndex>> out;
  for (std::size_t i = 0; i < elems_.size(); ++i)
    if (elems_[i].height == frontier_) out.push_back(chains_[i]);
  return out;
}

bool Poset::is_maximal_chain(const std::vector<ElemIndex>& chain) const {
  if (chain.empty()) return false;
  ElemIndex top = chain.back();
  if (top < 0 || static_cast<std::size_t>(top) >= size()) return false;
  return height(top) == frontier_ && chain == chains_[static_cast<std::size_t>(top)];
}

ValidationReport Poset::validate() const {
  ValidationReport report;
  if (elems_.empty()) {
    report.push_back({"nonempty", "", "the poset has no elements"});
    return report;
  }
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    const auto& e = elems_[i];
    if (e.height > frontier_)
      report.push_back({"tree", e.id, "height " + std::to_string(e.height) + " exceeds frontier height"});
    if (e.height < frontier_) {
      const auto& kids = children_[i];
      bool has_pair = false;
      for (std::size_t a = 0; a < kids.size() && !has_pair; ++a)
        for (std::size_t b = a + 1; b < kids.size() && !has_pair; ++b)
          has_pair = incomparable(kids[a], kids[b]);
      if (!has_pair)
        report.push_back({"branching", e.id,
                          "interior element has " + std::to_string(kids.size()) +
                              " immediate successor(s); at least two incomparable ones are required"});
    }
  }
  return report;
}

Poset build_tree_poset(int arity, int H) {
  if (H < 0) throw PosetError("height must be >= 0");
  if (arity < 1 || arity > 10) throw PosetError("arity must be in 1..10");
  std::vector<std::pair<std::string, std::optional<std::string>>> elements;
  std::vector<std::string> level{""};
  elements.emplace_back("", std::nullopt);
  for (int h = 1; h <= H; ++h) {
    std::vector<std::string> next;
    for (const auto& s : level)
      for (int a = 0; a < arity; ++a) {
        std::string t = s + static_cast<char>('0' + a);
        elements.emplace_back(t, s);
        next.push_back(t);
      }
    level = std::move(next);
  }
  // The empty sequence is the root. JSON files cannot spell it (ids there
  // are nonempty), so file-based posets name their roots explicitly.
  return Poset(elements, H);
}

Poset build_binary_poset(int H) { return build_tree_poset(2, H); }

bool is_chain(const Poset& p, const std::vector<ElemIndex>& elems) {
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = a + 1; b < elems.size(); ++b)
      if (p.incomparable(elems[a], elems[b])) return false;
  return true;
}

}  // namespace chainring
