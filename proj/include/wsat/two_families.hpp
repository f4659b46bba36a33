#pragma once

#include <compare>
#include <string>
#include <vector>

#include "wsat/graph.hpp"
#include "wsat/pattern.hpp"
#include "wsat/process.hpp"

namespace wsat {

// Element `label` of part `part`; both 1-based. Parts are disjoint by
// construction of the encoding.
struct Element {
  int part;
  int label;

  auto operator<=>(const Element&) const = default;
};

// Sorted, duplicate-free.
using ElementSet = std::vector<Element>;

ElementSet make_set(std::vector<Element> elems);
bool intersects(const ElementSet& x, const ElementSet& y);
long weight(const ElementSet& s);

// Sequences A_1..A_h and B_1..B_h over a partitioned ground set, with the
// per-part caps the conditions refer to.
struct FamilyPair {
  std::vector<int> part_sizes;
  std::vector<int> caps_a;
  std::vector<int> caps_b;
  std::vector<ElementSet> A;
  std::vector<ElementSet> B;

  std::size_t size() const { return A.size(); }
};

// permuted: |A_i cap X_j| <= a_pi(j) for some pi per i.
// identity: |A_i cap X_j| <= a_j.
enum class CapRule { permuted, identity };

struct ConditionVerdict {
  bool ok = true;
  // 0 flags a malformed pair (sizes or elements outside the ground set);
  // 1..4 name the violated condition.
  int condition = 0;
  std::size_t i = 0;  // 1-based
  std::size_t j = 0;  // 1-based; 0 when not applicable
  std::string detail;

  explicit operator bool() const { return ok; }
};

// Checks, in order: (1) A_i cap B_i empty; (2) A_i cap B_j nonempty for
// i < j (for all i != j when non_skew); (3) |B_i cap X_j| <= b_j;
// (4) the cap rule on A_i. Reports the first violation.
ConditionVerdict verify_conditions(const FamilyPair& fp, CapRule rule, bool non_skew = false);

// The extremal pair over U_j = [max(a) + b_j]: the B_i are the sets counted
// by Q(a, b) in decreasing weight (ties: lexicographically smaller element
// list first) and A_i cap U_j = [a_pi(j) + b_j] \ B_i for the matched pi.
FamilyPair build_extremal(const std::vector<int>& a, const std::vector<int>& b);

// A_i = all vertices outside the i-th witness copy, B_i = the vertices of
// the i-th added edge, with caps a = n - p and b = 1. Throws
// std::invalid_argument if the process does not verify.
FamilyPair saturation_to_families(const DPartiteGraph& g, const SaturationProcess& proc, const Pattern& pattern);

}  // namespace wsat
