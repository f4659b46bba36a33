#include "wsat/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wsat {

DPartiteGraph build_g0(const Pattern& pattern) {
  if (pattern.directed()) throw std::invalid_argument("build_g0: G0 is defined for undirected patterns");
  DPartiteGraph g(pattern.d(), pattern.n());
  const auto& p = pattern.p();
  for (std::uint64_t idx = 0; idx < g.cells(); ++idx) {
    const Edge s = sorted(g.lattice().tuple(idx));
    bool dominated = true;
    for (std::size_t i = 0; i < s.size() && dominated; ++i) dominated = s[i] >= p[i];
    if (!dominated) g.set(idx);
  }
  return g;
}

DPartiteGraph build_directed_g0(const Pattern& pattern) {
  DPartiteGraph g(pattern.d(), pattern.n());
  const auto& p = pattern.p();
  for (std::uint64_t idx = 0; idx < g.cells(); ++idx) {
    const Edge e = g.lattice().tuple(idx);
    bool inside = true;
    for (std::size_t i = 0; i < e.size() && inside; ++i) inside = e[i] >= p[i];
    if (!inside) g.set(idx);
  }
  return g;
}

bool gk_valid(int n, int p, int q, int k) {
  return p >= 1 && p <= q && q <= n && k >= 0 && k <= q - p && n >= q - 1 + k;
}

long gk_edge_count(int n, int p, int q, int k) {
  return static_cast<long>(p + q - 2) * n - static_cast<long>(p - 1) * (q - 1) - static_cast<long>(k) * (q - p - k);
}

DPartiteGraph build_gk(int n, int p, int q, int k) {
  if (!gk_valid(n, p, q, k))
    throw std::invalid_argument("build_gk: need 1 <= p <= q <= n, 0 <= k <= q-p, n >= q-1+k (got n=" +
                                std::to_string(n) + ", p=" + std::to_string(p) + ", q=" + std::to_string(q) +
                                ", k=" + std::to_string(k) + ")");
  DPartiteGraph g(2, n);
  auto join = [&](int x, int y) { g.add(std::vector<int>{x, y}); };
  for (int c = 1; c < p; ++c)
    for (int v = 1; v <= n; ++v) {
      join(c, v);
      join(v, c);
    }
  const int block = p;
  for (int x = block; x < block + k; ++x)
    for (int y = block; y < block + k; ++y) join(x, y);
  const int first = p + k;
  const int r = n - first + 1;
  for (int t = 0; t < r; ++t)
    for (int s = 0; s < q - p; ++s) join(first + t, first + (t + s) % r);
  return g;
}

Pattern gadget_pattern(const Pattern& pattern) {
  return Pattern(pattern.d(), 2 * pattern.n(),
                 std::vector<int>(static_cast<std::size_t>(pattern.d()), pattern.n() + 1));
}

DPartiteGraph build_lower_bound_gadget(const DPartiteGraph& h, const Pattern& pattern) {
  if (h.d() != pattern.d() || h.n() != pattern.n())
    throw std::invalid_argument("build_lower_bound_gadget: graph and pattern dimensions differ");
  const int n = h.n();
  const DPartiteGraph g0 = build_g0(pattern);
  DPartiteGraph out(h.d(), 2 * n);
  for (std::uint64_t idx = 0; idx < out.cells(); ++idx) {
    Edge e = out.lattice().tuple(idx);
    const bool low = std::all_of(e.begin(), e.end(), [&](int x) { return x <= n; });
    const bool high = std::all_of(e.begin(), e.end(), [&](int x) { return x > n; });
    bool present = true;
    if (low) {
      present = h.contains(e);
    } else if (high) {
      for (int& x : e) x -= n;
      present = !g0.contains(e);
    }
    if (present) out.set(idx);
  }
  return out;
}

}  // namespace wsat
