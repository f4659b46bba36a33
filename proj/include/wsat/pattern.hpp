#pragma once

#include <string>
#include <vector>

namespace wsat {

// Undirected copies may place the clique part sizes on the vertex classes in
// any order; directed copies must put p[i] vertices in class i.
enum class Orientation { undirected, directed };

std::string to_string(Orientation mode);
Orientation orientation_from_string(const std::string& s);

// The target clique K^d_{p_1..p_d} together with the host class size n.
class Pattern {
 public:
  Pattern(int d, int n, std::vector<int> p, Orientation mode = Orientation::undirected);

  int d() const { return d_; }
  int n() const { return n_; }
  // Sorted ascending in undirected mode; as given in directed mode.
  const std::vector<int>& p() const { return p_; }
  Orientation mode() const { return mode_; }
  bool directed() const { return mode_ == Orientation::directed; }

  // Per-class size vectors admissible for a copy, one per distinct
  // orientation, in lexicographic order. Directed mode yields just p.
  std::vector<std::vector<int>> class_sizes() const;

  // 1-based permutation pi with sizes[i] == p[pi[i]-1]; repeated values are
  // matched to the lowest unused index.
  std::vector<int> orientation_of(const std::vector<int>& sizes) const;

  bool operator==(const Pattern&) const = default;

 private:
  int d_;
  int n_;
  std::vector<int> p_;
  Orientation mode_;
};

}  // namespace wsat
