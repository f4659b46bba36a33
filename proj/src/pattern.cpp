#include "wsat/pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace wsat {

std::string to_string(Orientation mode) {
  return mode == Orientation::directed ? "directed" : "undirected";
}

Orientation orientation_from_string(const std::string& s) {
  if (s == "directed") return Orientation::directed;
  if (s == "undirected") return Orientation::undirected;
  throw std::invalid_argument("unknown orientation mode '" + s + "'");
}

Pattern::Pattern(int d, int n, std::vector<int> p, Orientation mode)
    : d_(d), n_(n), p_(std::move(p)), mode_(mode) {
  if (d_ < 1) throw std::invalid_argument("pattern: d must be at least 1");
  if (n_ < 1) throw std::invalid_argument("pattern: n must be at least 1");
  if (static_cast<int>(p_.size()) != d_)
    throw std::invalid_argument("pattern: expected " + std::to_string(d_) + " part sizes, got " +
                                std::to_string(p_.size()));
  for (int v : p_)
    if (v < 1 || v > n_)
      throw std::invalid_argument("pattern: part size " + std::to_string(v) + " outside 1.." +
                                  std::to_string(n_));
  if (mode_ == Orientation::undirected) std::sort(p_.begin(), p_.end());
}

std::vector<std::vector<int>> Pattern::class_sizes() const {
  if (directed()) return {p_};
  std::vector<std::vector<int>> out;
  std::vector<int> sizes = p_;
  do {
    out.push_back(sizes);
  } while (std::next_permutation(sizes.begin(), sizes.end()));
  return out;
}

std::vector<int> Pattern::orientation_of(const std::vector<int>& sizes) const {
  std::vector<int> pi(sizes.size(), 0);
  std::vector<bool> used(p_.size(), false);
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    for (std::size_t j = 0; j < p_.size(); ++j) {
      if (!used[j] && p_[j] == sizes[i]) {
        used[j] = true;
        pi[i] = static_cast<int>(j) + 1;
        break;
      }
    }
    if (pi[i] == 0) throw std::invalid_argument("orientation_of: sizes are not a rearrangement of p");
  }
  return pi;
}

}  // namespace wsat
