#include "wsat/process.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "wsat/constructions.hpp"

namespace wsat {

namespace {

void require_match(const DPartiteGraph& g, const Pattern& pattern) {
  if (g.d() != pattern.d() || g.n() != pattern.n())
    throw std::invalid_argument("pattern does not match graph dimensions");
}

// Visits every cell of classes[k] x ... x classes[d-1] offset by `base`
// until fn returns false.
template <class Fn>
bool every_cell(const Lattice& lat, const std::vector<std::vector<int>>& classes, std::size_t k,
                std::uint64_t base, Fn&& fn) {
  if (k == classes.size()) return fn(base);
  for (int v : classes[k])
    if (!every_cell(lat, classes, k + 1, base + static_cast<std::uint64_t>(v - 1) * lat.stride(static_cast<int>(k)), fn))
      return false;
  return true;
}

ProcessVerdict reject(std::size_t step, ProcessFailure reason, std::string detail) {
  return ProcessVerdict{false, step, reason, std::move(detail)};
}

}  // namespace

std::string to_string(ProcessFailure f) {
  switch (f) {
    case ProcessFailure::none: return "none";
    case ProcessFailure::edge_already_present: return "edge-already-present";
    case ProcessFailure::witness_incomplete: return "witness-incomplete";
    case ProcessFailure::wrong_sizes: return "wrong-sizes";
    case ProcessFailure::not_complete_at_end: return "not-complete-at-end";
  }
  return "unknown";
}

ClosureResult greedy_closure(const DPartiteGraph& g, const Pattern& pattern,
                             std::span<const std::uint64_t> scan_order) {
  require_match(g, pattern);
  if (scan_order.size() != g.cells()) throw std::invalid_argument("scan order must cover every cell");
  ClosureResult out{g, {}};
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::uint64_t idx : scan_order) {
      if (out.closure.test(idx)) continue;
      const Edge e = g.lattice().tuple(idx);
      if (auto w = new_copy_witness(out.closure, e, pattern)) {
        out.closure.set(idx);
        out.process.steps.push_back({e, std::move(*w)});
        grew = true;
      }
    }
  }
  return out;
}

ClosureResult greedy_closure(const DPartiteGraph& g, const Pattern& pattern) {
  std::vector<std::uint64_t> order(g.cells());
  std::iota(order.begin(), order.end(), std::uint64_t{0});
  return greedy_closure(g, pattern, order);
}

DPartiteGraph closure_edges(const DPartiteGraph& g, const Pattern& pattern) {
  require_match(g, pattern);
  DPartiteGraph cur = g;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::uint64_t idx = 0; idx < cur.cells(); ++idx) {
      if (!cur.test(idx) && creates_copy(cur, idx, pattern)) {
        cur.set(idx);
        grew = true;
      }
    }
  }
  return cur;
}

bool weakly_saturated(const DPartiteGraph& g, const Pattern& pattern) {
  return closure_edges(g, pattern).is_complete();
}

SaturationProcess weight_process(const Pattern& pattern) {
  if (pattern.directed()) throw std::invalid_argument("weight_process: undirected patterns only");
  const DPartiteGraph g0 = build_g0(pattern);
  std::vector<Edge> missing = g0.non_edges();
  std::stable_sort(missing.begin(), missing.end(),
                   [](const Edge& x, const Edge& y) { return weight(x) < weight(y); });

  const auto d = static_cast<std::size_t>(pattern.d());
  const auto& p = pattern.p();
  SaturationProcess proc;
  proc.steps.reserve(missing.size());
  for (const Edge& e : missing) {
    std::vector<std::size_t> rank(d);
    std::iota(rank.begin(), rank.end(), std::size_t{0});
    std::stable_sort(rank.begin(), rank.end(), [&](std::size_t a, std::size_t b) { return e[a] < e[b]; });
    CopyWitness w{std::vector<std::vector<int>>(d), std::vector<int>(d)};
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t cls = rank[j];
      auto& s = w.classes[cls];
      for (int v = 1; v < p[j]; ++v) s.push_back(v);
      s.push_back(e[cls]);
      w.orientation[cls] = static_cast<int>(j) + 1;
    }
    proc.steps.push_back({e, std::move(w)});
  }
  return proc;
}

ProcessVerdict verify_process(const DPartiteGraph& g, const SaturationProcess& proc, const Pattern& pattern) {
  require_match(g, pattern);
  const auto d = static_cast<std::size_t>(pattern.d());
  const auto& lat = g.lattice();
  DPartiteGraph cur = g;

  for (std::size_t t = 0; t < proc.steps.size(); ++t) {
    const std::size_t step = t + 1;
    const auto& [edge, w] = proc.steps[t];
    if (!lat.valid(edge)) return reject(step, ProcessFailure::wrong_sizes, "edge outside [n]^d");
    const std::uint64_t eidx = lat.index(edge);
    if (cur.test(eidx)) return reject(step, ProcessFailure::edge_already_present, "edge is already present");

    if (w.classes.size() != d || w.orientation.size() != d)
      return reject(step, ProcessFailure::wrong_sizes, "witness must have d classes");
    std::vector<bool> used(d, false);
    for (std::size_t i = 0; i < d; ++i) {
      const int j = w.orientation[i];
      if (j < 1 || j > static_cast<int>(d) || used[static_cast<std::size_t>(j - 1)])
        return reject(step, ProcessFailure::wrong_sizes, "orientation is not a permutation");
      if (pattern.directed() && j != static_cast<int>(i) + 1)
        return reject(step, ProcessFailure::wrong_sizes, "directed copies need the identity orientation");
      used[static_cast<std::size_t>(j - 1)] = true;
      const auto& s = w.classes[i];
      if (static_cast<int>(s.size()) != pattern.p()[static_cast<std::size_t>(j - 1)])
        return reject(step, ProcessFailure::wrong_sizes,
                      "class " + std::to_string(i + 1) + " has " + std::to_string(s.size()) + " vertices");
      if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end() ||
          std::any_of(s.begin(), s.end(), [&](int v) { return v < 1 || v > g.n(); }))
        return reject(step, ProcessFailure::wrong_sizes,
                      "class " + std::to_string(i + 1) + " is not a sorted set of labels");
      if (!std::binary_search(s.begin(), s.end(), edge[i]))
        return reject(step, ProcessFailure::witness_incomplete, "witness does not contain the edge");
    }

    std::uint64_t gap = eidx;
    const bool full = every_cell(lat, w.classes, 0, 0, [&](std::uint64_t idx) {
      if (idx == eidx || cur.test(idx)) return true;
      gap = idx;
      return false;
    });
    if (!full) {
      std::string text;
      for (int x : lat.tuple(gap)) text += (text.empty() ? "" : " ") + std::to_string(x);
      return reject(step, ProcessFailure::witness_incomplete, "copy misses edge (" + text + ")");
    }
    cur.set(eidx);
  }
  if (!cur.is_complete())
    return reject(proc.steps.size() + 1, ProcessFailure::not_complete_at_end,
                  std::to_string(cur.cells() - cur.edge_count()) + " non-edges remain");
  return {};
}

}  // namespace wsat
