#pragma once

// Exhaustive certification of minimum saturated graphs on tiny lattices.
//
// Candidate edge sets are visited layer by layer in increasing size and, in
// a layer, in lexicographic order of their sorted cell-index lists. The
// first layer holding a passing graph gives the minimum, and its
// lexicographically first passing graph is the witness. A layer is split
// into contiguous rank ranges, one per worker; the reduction keeps the
// lowest passing rank, so the certificate does not depend on the worker
// count.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wsat/graph.hpp"
#include "wsat/pattern.hpp"

namespace wsat {

enum class SaturationKind { weak, strong };

std::string to_string(SaturationKind k);

// The oracle works on single-word presence maps.
inline constexpr std::uint64_t kMaxSearchCells = 64;

struct SearchOptions {
  // Cap on candidates enumerated (skipped-by-symmetry candidates count too).
  std::uint64_t budget = std::numeric_limits<std::uint64_t>::max();
  unsigned workers = 1;
  // Skip candidates that are not lexicographically minimal in their orbit
  // under relabelings inside each class and, where the pattern allows, class
  // permutations. The first passing candidate of a layer is always orbit
  // minimal, so the certificate is unchanged.
  bool symmetry_pruning = false;
  // Strong search only: also require g itself to contain no copy.
  bool require_h_free = false;
};

struct SearchCertificate {
  explicit SearchCertificate(Pattern p) : pattern(std::move(p)) {}

  Pattern pattern;
  SaturationKind kind = SaturationKind::weak;
  bool h_free = false;
  bool conclusive = false;
  std::optional<long> minimum;
  // Every graph with fewer than lower_bound edges fails.
  long lower_bound = 0;
  // Edge count of a known passing graph.
  std::optional<long> upper_bound;
  std::optional<DPartiteGraph> witness;
  // Candidates enumerated, in layer order, up to and including the witness.
  std::uint64_t checked = 0;
};

bool strong_sat_check(const DPartiteGraph& g, const Pattern& pattern, bool require_h_free = false);

SearchCertificate min_weak_saturation(const Pattern& pattern, const SearchOptions& opts = {});
SearchCertificate min_strong_saturation(const Pattern& pattern, const SearchOptions& opts = {});

struct ConjectureRow {
  int n = 0;
  int p = 0;
  int q = 0;
  SearchCertificate oracle;
  long directed_formula = 0;  // (p+q-2)n - (p-1)(q-1)
  long conjectured = 0;       // directed_formula - floor((q-p)^2 / 4)
};

// Strong saturation oracle against the conjectured value, one row per n in
// [n_lo, n_hi] with n >= q.
std::vector<ConjectureRow> conjecture_table(int p, int q, int n_lo, int n_hi, const SearchOptions& opts = {});
std::string conjecture_csv(const std::vector<ConjectureRow>& rows);

struct WeakGridRow {
  Pattern pattern;
  SearchCertificate oracle;
  long formula = 0;  // n^d - q_n(p), or the directed formula in directed mode
};

// Weak saturation oracle against the closed form, over every admissible p
// (sorted in undirected mode, all tuples in directed mode).
std::vector<WeakGridRow> weak_grid(int d, int n_lo, int n_hi, Orientation mode, const SearchOptions& opts = {});
std::string weak_grid_csv(const std::vector<WeakGridRow>& rows);

}  // namespace wsat
