#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wsat/kernels.hpp"

namespace wsat {

// A d-tuple of 1-based labels; coordinate i names a vertex of class i.
using Edge = std::vector<int>;

// Nondecreasing rearrangement of the coordinates, repetitions kept.
Edge sorted(Edge e);
long weight(const Edge& e);

// Presence maps are capped at 2^24 cells.
inline constexpr std::uint64_t kMaxCells = std::uint64_t{1} << 24;

// Row-major indexing of [n]^d: class 1 is the most significant coordinate.
class Lattice {
 public:
  Lattice(int d, int n);

  int d() const { return d_; }
  int n() const { return n_; }
  std::uint64_t cells() const { return cells_; }
  // Offset contributed by label `label` of class `cls` (both as stored: cls 0-based, label 1-based).
  std::uint64_t stride(int cls) const { return strides_[static_cast<std::size_t>(cls)]; }

  std::uint64_t index(std::span<const int> e) const;
  Edge tuple(std::uint64_t index) const;
  bool valid(std::span<const int> e) const;

 private:
  int d_;
  int n_;
  std::uint64_t cells_;
  std::vector<std::uint64_t> strides_;
};

// A d-partite d-uniform hypergraph with n vertices per class, stored as a
// presence bitset over the tuple lattice.
class DPartiteGraph {
 public:
  DPartiteGraph(int d, int n);
  static DPartiteGraph complete(int d, int n);

  int d() const { return lattice_.d(); }
  int n() const { return lattice_.n(); }
  const Lattice& lattice() const { return lattice_; }
  std::uint64_t cells() const { return lattice_.cells(); }

  bool test(std::uint64_t index) const { return (words_[index >> 6] >> (index & 63)) & 1U; }
  void set(std::uint64_t index) { words_[index >> 6] |= kernels::Word{1} << (index & 63); }
  void reset(std::uint64_t index) { words_[index >> 6] &= ~(kernels::Word{1} << (index & 63)); }

  bool contains(std::span<const int> e) const { return test(lattice_.index(e)); }
  void add(std::span<const int> e) { set(lattice_.index(e)); }
  void remove(std::span<const int> e) { reset(lattice_.index(e)); }

  std::uint64_t edge_count() const;
  bool is_complete() const { return edge_count() == cells(); }
  // Relative to the complete d-partite graph.
  DPartiteGraph complement() const;
  DPartiteGraph united(const DPartiteGraph& other) const;
  bool is_subgraph_of(const DPartiteGraph& other) const;

  // Present tuples in lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<Edge> non_edges() const;

  std::span<const kernels::Word> words() const { return words_; }

  bool operator==(const DPartiteGraph& other) const;

 private:
  void require_same_shape(const DPartiteGraph& other) const;

  Lattice lattice_;
  std::vector<kernels::Word> words_;
};

}  // namespace wsat
