#pragma once

// Finite truncations of tree-shaped posets: every non-minimal element has a
// unique immediate predecessor, so the elements below any element form a
// finite chain. Elements are indexed 0..n-1 in lexicographic order of their
// ids, so index order is the canonical output order everywhere.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace chainring {

using ElemIndex = int;

/// Raised for malformed poset input (unknown ids, duplicates, cycles).
class PosetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PosetElem {
  std::string id;
  std::optional<ElemIndex> parent;
  int height = 0;
};

struct Violation {
  std::string condition;  // "nonempty", "tree", "branching"
  std::string element;    // offending id, empty for global conditions
  std::string detail;
};

using ValidationReport = std::vector<Violation>;

class Poset {
 public:
  /// Builds from (id, parent-id) pairs. Throws PosetError on duplicate ids,
  /// unresolved parents, empty ids or parent cycles.
  Poset(const std::vector<std::pair<std::string, std::optional<std::string>>>& elements,
        int frontier_height);

  static Poset from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  std::size_t size() const { return elems_.size(); }
  int frontier_height() const { return frontier_; }
  const PosetElem& elem(ElemIndex i) const { return elems_.at(static_cast<std::size_t>(i)); }
  const std::string& id(ElemIndex i) const { return elem(i).id; }
  int height(ElemIndex i) const { return elem(i).height; }
  std::optional<ElemIndex> parent(ElemIndex i) const { return elem(i).parent; }

  /// Index of an id; throws PosetError for unknown ids.
  ElemIndex index(std::string_view id) const;
  std::optional<ElemIndex> find(std::string_view id) const;

  bool leq(ElemIndex a, ElemIndex b) const {
    int ha = height(a);
    return ha <= height(b) && chains_[static_cast<std::size_t>(b)][static_cast<std::size_t>(ha)] == a;
  }
  bool less(ElemIndex a, ElemIndex b) const { return a != b && leq(a, b); }
  bool comparable(ElemIndex a, ElemIndex b) const { return leq(a, b) || leq(b, a); }
  bool incomparable(ElemIndex a, ElemIndex b) const { return !comparable(a, b); }

  /// [t_0, ..., t_n = t] with t_0 minimal and t_{i-1} the parent of t_i.
  const std::vector<ElemIndex>& chain_below(ElemIndex t) const {
    return chains_.at(static_cast<std::size_t>(t));
  }
  const std::vector<ElemIndex>& immediate_successors(ElemIndex s) const {
    return children_.at(static_cast<std::size_t>(s));
  }
  /// Elements of height >= 1: the index set of the ring's variables.
  const std::vector<ElemIndex>& nonminimal() const { return nonminimal_; }
  bool is_minimal(ElemIndex i) const { return !parent(i).has_value(); }
  bool is_frontier(ElemIndex i) const { return height(i) >= frontier_; }

  /// Chains from a minimal element to an element of height H, sorted by the
  /// id of their top element.
  std::vector<std::vector<ElemIndex>> maximal_chains() const;

  bool is_maximal_chain(const std::vector<ElemIndex>& chain) const;

  ValidationReport validate() const;

 private:
  std::vector<PosetElem> elems_;
  std::vector<std::vector<ElemIndex>> chains_;
  std::vector<std::vector<ElemIndex>> children_;
  std::vector<ElemIndex> nonminimal_;
  int frontier_ = 0;
};

/// All {0,1}-sequences of length <= H under the prefix order.
Poset build_binary_poset(int H);

/// All sequences over {0..arity-1} of length <= H (arity <= 10).
Poset build_tree_poset(int arity, int H);

/// Checks that a chain (any set of indices) is totally ordered.
bool is_chain(const Poset& p, const std::vector<ElemIndex>& elems);

}  // namespace chainring
