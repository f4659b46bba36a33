#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wsat/graph.hpp"
#include "wsat/pattern.hpp"

namespace wsat {

// The vertex classes S_1..S_d of a clique copy, plus the orientation that
// assigns part sizes to classes: |S_i| == pattern.p()[orientation[i] - 1].
struct CopyWitness {
  std::vector<std::vector<int>> classes;
  std::vector<int> orientation;

  bool operator==(const CopyWitness&) const = default;
};

// First copy of the pattern through `e` in g + e, or nullopt. Orientations
// are tried in lexicographic order of their size vectors, classes in index
// order and candidate vertices in increasing label.
std::optional<CopyWitness> new_copy_witness(const DPartiteGraph& g, const Edge& e, const Pattern& pattern);

// Same decision as new_copy_witness, without materializing the witness.
bool creates_copy(const DPartiteGraph& g, std::uint64_t edge_index, const Pattern& pattern);

// Does g contain a complete d-partite subgraph with sizes[orientation[i]-1]
// vertices in class i? orientation is 1-based.
bool contains_oriented_complete(const DPartiteGraph& g, const std::vector<int>& sizes,
                                const std::vector<int>& orientation);

// Does g contain any admissible copy of the pattern?
bool contains_copy(const DPartiteGraph& g, const Pattern& pattern);

}  // namespace wsat
