#include "wsat/witness.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace wsat {

namespace {

constexpr std::uint64_t kNoExtra = std::numeric_limits<std::uint64_t>::max();

// Looks for S_1 x ... x S_d inside g (plus one extra cell) with anchor[k] in
// S_k and |S_k| == sizes[k]. Non-anchor vertices of class k have labels at
// least floor[k]. Classes are filled in order; when a vertex joins class k,
// every cell it spans with the finished classes 1..k-1 and the anchor labels
// of classes k+1..d is checked. Each cell of the final box is checked
// exactly at the class of its last non-anchor coordinate, so a completed
// descent is a complete box.
class BoxSearch {
 public:
  BoxSearch(const DPartiteGraph& g, std::uint64_t extra) : g_(g), extra_(extra) {}

  bool run(const std::vector<int>& anchor, const std::vector<int>& sizes, const std::vector<int>& floor) {
    anchor_ = &anchor;
    sizes_ = &sizes;
    floor_ = &floor;
    const int d = g_.d();
    classes_.assign(static_cast<std::size_t>(d), {});
    suffix_.assign(static_cast<std::size_t>(d) + 1, 0);
    for (int k = d - 1; k >= 0; --k)
      suffix_[static_cast<std::size_t>(k)] =
          suffix_[static_cast<std::size_t>(k) + 1] +
          static_cast<std::uint64_t>(anchor[static_cast<std::size_t>(k)] - 1) * g_.lattice().stride(k);
    return descend(0, {0});
  }

  const std::vector<std::vector<int>>& classes() const { return classes_; }

 private:
  bool present(std::uint64_t idx) const { return idx == extra_ || g_.test(idx); }

  bool descend(int k, const std::vector<std::uint64_t>& prefix) {
    const int d = g_.d();
    if (k == d) return true;
    const auto ks = static_cast<std::size_t>(k);
    const std::uint64_t stride = g_.lattice().stride(k);
    const std::uint64_t tail = suffix_[ks + 1];
    const int a = (*anchor_)[ks];

    std::vector<int> candidates;
    for (int v = std::max(1, (*floor_)[ks]); v <= g_.n(); ++v) {
      if (v == a) continue;
      const std::uint64_t base = static_cast<std::uint64_t>(v - 1) * stride + tail;
      if (std::all_of(prefix.begin(), prefix.end(), [&](std::uint64_t o) { return present(o + base); }))
        candidates.push_back(v);
    }
    const int need = (*sizes_)[ks] - 1;
    if (static_cast<int>(candidates.size()) < need) return false;

    std::vector<int> pick;
    return choose(k, prefix, candidates, 0, need, pick);
  }

  bool choose(int k, const std::vector<std::uint64_t>& prefix, const std::vector<int>& candidates,
              std::size_t start, int need, std::vector<int>& pick) {
    if (need == 0) {
      const auto ks = static_cast<std::size_t>(k);
      std::vector<int> cls = pick;
      cls.push_back((*anchor_)[ks]);
      std::sort(cls.begin(), cls.end());
      const std::uint64_t stride = g_.lattice().stride(k);
      std::vector<std::uint64_t> next;
      next.reserve(prefix.size() * cls.size());
      for (std::uint64_t o : prefix)
        for (int v : cls) next.push_back(o + static_cast<std::uint64_t>(v - 1) * stride);
      classes_[ks] = std::move(cls);
      return descend(k + 1, next);
    }
    for (std::size_t i = start; i + static_cast<std::size_t>(need) <= candidates.size(); ++i) {
      pick.push_back(candidates[i]);
      if (choose(k, prefix, candidates, i + 1, need - 1, pick)) return true;
      pick.pop_back();
    }
    return false;
  }

  const DPartiteGraph& g_;
  std::uint64_t extra_;
  const std::vector<int>* anchor_ = nullptr;
  const std::vector<int>* sizes_ = nullptr;
  const std::vector<int>* floor_ = nullptr;
  std::vector<std::uint64_t> suffix_;
  std::vector<std::vector<int>> classes_;
};

std::optional<CopyWitness> anchored_witness(const DPartiteGraph& g, std::uint64_t edge_index,
                                            const Pattern& pattern) {
  if (g.d() != pattern.d() || g.n() != pattern.n())
    throw std::invalid_argument("pattern does not match graph dimensions");
  const Edge e = g.lattice().tuple(edge_index);
  const std::vector<int> floor(static_cast<std::size_t>(g.d()), 1);
  BoxSearch search(g, edge_index);
  for (const auto& sizes : pattern.class_sizes()) {
    if (search.run(e, sizes, floor)) return CopyWitness{search.classes(), pattern.orientation_of(sizes)};
  }
  return std::nullopt;
}

// Every box has a unique least corner, which is itself a present cell; so
// scanning present cells as least corners covers every box exactly once.
bool contains_box(const DPartiteGraph& g, const std::vector<int>& sizes) {
  if (std::any_of(sizes.begin(), sizes.end(), [](int s) { return s <= 0; })) return true;
  for (std::size_t k = 0; k < sizes.size(); ++k)
    if (sizes[k] > g.n()) return false;
  BoxSearch search(g, kNoExtra);
  for (std::uint64_t idx = 0; idx < g.cells(); ++idx) {
    if (!g.test(idx)) continue;
    const Edge corner = g.lattice().tuple(idx);
    std::vector<int> floor = corner;
    for (int& f : floor) ++f;
    if (search.run(corner, sizes, floor)) return true;
  }
  return false;
}

}  // namespace

std::optional<CopyWitness> new_copy_witness(const DPartiteGraph& g, const Edge& e, const Pattern& pattern) {
  return anchored_witness(g, g.lattice().index(e), pattern);
}

bool creates_copy(const DPartiteGraph& g, std::uint64_t edge_index, const Pattern& pattern) {
  return anchored_witness(g, edge_index, pattern).has_value();
}

bool contains_oriented_complete(const DPartiteGraph& g, const std::vector<int>& sizes,
                                const std::vector<int>& orientation) {
  const auto d = static_cast<std::size_t>(g.d());
  if (sizes.size() != d || orientation.size() != d)
    throw std::invalid_argument("contains_oriented_complete: sizes and orientation need d entries");
  std::vector<bool> seen(d, false);
  std::vector<int> per_class(d);
  for (std::size_t i = 0; i < d; ++i) {
    const int j = orientation[i];
    if (j < 1 || j > static_cast<int>(d) || seen[static_cast<std::size_t>(j - 1)])
      throw std::invalid_argument("contains_oriented_complete: orientation is not a permutation");
    seen[static_cast<std::size_t>(j - 1)] = true;
    per_class[i] = sizes[static_cast<std::size_t>(j - 1)];
  }
  return contains_box(g, per_class);
}

bool contains_copy(const DPartiteGraph& g, const Pattern& pattern) {
  for (const auto& sizes : pattern.class_sizes())
    if (contains_box(g, sizes)) return true;
  return false;
}

}  // namespace wsat
