#include "wsat/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wsat {

Edge sorted(Edge e) {
  std::sort(e.begin(), e.end());
  return e;
}

long weight(const Edge& e) { return std::accumulate(e.begin(), e.end(), 0L); }

Lattice::Lattice(int d, int n) : d_(d), n_(n), cells_(1), strides_(static_cast<std::size_t>(d > 0 ? d : 0)) {
  if (d < 1 || n < 1) throw std::invalid_argument("lattice: d and n must be positive");
  for (int i = d - 1; i >= 0; --i) {
    strides_[static_cast<std::size_t>(i)] = cells_;
    cells_ *= static_cast<std::uint64_t>(n);
    if (cells_ > kMaxCells)
      throw std::invalid_argument("lattice: n^d exceeds the 2^24 cell cap (d=" + std::to_string(d) +
                                  ", n=" + std::to_string(n) + ")");
  }
}

bool Lattice::valid(std::span<const int> e) const {
  if (static_cast<int>(e.size()) != d_) return false;
  return std::all_of(e.begin(), e.end(), [&](int x) { return x >= 1 && x <= n_; });
}

std::uint64_t Lattice::index(std::span<const int> e) const {
  if (!valid(e)) throw std::invalid_argument("edge does not lie in [n]^d");
  std::uint64_t idx = 0;
  for (int i = 0; i < d_; ++i)
    idx += static_cast<std::uint64_t>(e[static_cast<std::size_t>(i)] - 1) * strides_[static_cast<std::size_t>(i)];
  return idx;
}

Edge Lattice::tuple(std::uint64_t index) const {
  Edge e(static_cast<std::size_t>(d_));
  for (int i = d_ - 1; i >= 0; --i) {
    e[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::uint64_t>(n_)) + 1;
    index /= static_cast<std::uint64_t>(n_);
  }
  return e;
}

DPartiteGraph::DPartiteGraph(int d, int n)
    : lattice_(d, n), words_(kernels::words_for_bits(lattice_.cells()), 0) {}

DPartiteGraph DPartiteGraph::complete(int d, int n) {
  return DPartiteGraph(d, n).complement();
}

std::uint64_t DPartiteGraph::edge_count() const { return kernels::popcount(words_); }

DPartiteGraph DPartiteGraph::complement() const {
  DPartiteGraph out(d(), n());
  kernels::complement(words_, out.words_, cells());
  return out;
}

void DPartiteGraph::require_same_shape(const DPartiteGraph& other) const {
  if (d() != other.d() || n() != other.n())
    throw std::invalid_argument("graphs have different shapes");
}

DPartiteGraph DPartiteGraph::united(const DPartiteGraph& other) const {
  require_same_shape(other);
  DPartiteGraph out(d(), n());
  kernels::bitwise_or(words_, other.words_, out.words_);
  return out;
}

bool DPartiteGraph::is_subgraph_of(const DPartiteGraph& other) const {
  require_same_shape(other);
  return kernels::is_subset(words_, other.words_);
}

std::vector<Edge> DPartiteGraph::edges() const {
  std::vector<Edge> out;
  for (std::uint64_t i = 0; i < cells(); ++i)
    if (test(i)) out.push_back(lattice_.tuple(i));
  return out;
}

std::vector<Edge> DPartiteGraph::non_edges() const {
  std::vector<Edge> out;
  for (std::uint64_t i = 0; i < cells(); ++i)
    if (!test(i)) out.push_back(lattice_.tuple(i));
  return out;
}

bool DPartiteGraph::operator==(const DPartiteGraph& other) const {
  return d() == other.d() && n() == other.n() && words_ == other.words_;
}

}  // namespace wsat
