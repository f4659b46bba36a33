#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wsat/graph.hpp"
#include "wsat/pattern.hpp"
#include "wsat/witness.hpp"

namespace wsat {

struct ProcessStep {
  Edge edge;
  CopyWitness witness;

  bool operator==(const ProcessStep&) const = default;
};

// Non-edges in the order they are added, each with the copy it creates.
struct SaturationProcess {
  std::vector<ProcessStep> steps;

  std::size_t size() const { return steps.size(); }
  bool operator==(const SaturationProcess&) const = default;
};

struct ClosureResult {
  DPartiteGraph closure;
  SaturationProcess process;
};

// Adds addable non-edges until none is left, scanning in lexicographic
// order. The final edge set does not depend on the order: once a non-edge
// has a witness it keeps it in every supergraph.
ClosureResult greedy_closure(const DPartiteGraph& g, const Pattern& pattern);

// As above, scanning cells in the given order each round. scan_order must be
// a permutation of 0..cells-1.
ClosureResult greedy_closure(const DPartiteGraph& g, const Pattern& pattern,
                             std::span<const std::uint64_t> scan_order);

// Closure edge set only; the search oracle calls this in its inner loop.
DPartiteGraph closure_edges(const DPartiteGraph& g, const Pattern& pattern);

bool weakly_saturated(const DPartiteGraph& g, const Pattern& pattern);

// Non-edges of G0 in nondecreasing weight (ties lexicographic), each with
// the explicit witness S_i = {1..p_j - 1} + {x_i} where x_i is the j-th
// smallest coordinate (equal coordinates ranked by class index).
SaturationProcess weight_process(const Pattern& pattern);

enum class ProcessFailure { none, edge_already_present, witness_incomplete, wrong_sizes, not_complete_at_end };

std::string to_string(ProcessFailure f);

struct ProcessVerdict {
  bool accepted = true;
  // 1-based step index; steps.size() + 1 for not_complete_at_end.
  std::size_t step = 0;
  ProcessFailure reason = ProcessFailure::none;
  std::string detail;

  explicit operator bool() const { return accepted; }
};

ProcessVerdict verify_process(const DPartiteGraph& g, const SaturationProcess& proc, const Pattern& pattern);

}  // namespace wsat
