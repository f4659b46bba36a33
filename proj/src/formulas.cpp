#include "wsat/formulas.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "wsat/graph.hpp"

namespace wsat {

namespace {

void require_sorted_range(int n, const std::vector<int>& p) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (p.empty()) throw std::invalid_argument("p must be nonempty");
  if (!std::is_sorted(p.begin(), p.end()))
    throw std::invalid_argument("p must be sorted ascending");
  if (p.front() < 1 || p.back() > n) throw std::invalid_argument("p entries must lie in 1..n");
}

void require_caps(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size() || a.empty()) throw std::invalid_argument("a and b need the same positive length");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < 0 || b[i] < 0) throw std::invalid_argument("a and b must be nonnegative");
}

// Visits all k-subsets of {1..m} (ascending) in lexicographic order.
template <class Fn>
void for_each_subset(int m, int k, Fn&& fn) {
  std::vector<int> c(static_cast<std::size_t>(k));
  std::iota(c.begin(), c.end(), 1);
  while (true) {
    fn(c);
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == m - k + i + 1) --i;
    if (i < 0) return;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j) - 1] + 1;
  }
}

}  // namespace

std::string to_string(CountMethod m) { return m == CountMethod::enumerated ? "enumerated" : "closed-form"; }

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt multinomial(long d, const std::vector<long>& parts) {
  long rest = d;
  BigInt r = 1;
  for (long k : parts) {
    if (k < 0 || k > rest) return 0;
    r *= binomial(rest, k);
    rest -= k;
  }
  return r;
}

BigInt power(long base, long exp) {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  BigInt r = 1;
  for (long i = 0; i < exp; ++i) r *= base;
  return r;
}

CountResult qn_enumerate(int n, const std::vector<int>& p) {
  require_sorted_range(n, p);
  const Lattice lat(static_cast<int>(p.size()), n);
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < lat.cells(); ++idx) {
    const Edge s = sorted(lat.tuple(idx));
    bool ok = true;
    for (std::size_t i = 0; i < s.size() && ok; ++i) ok = s[i] >= p[i];
    count += ok ? 1 : 0;
  }
  return {BigInt(count), CountMethod::enumerated};
}

namespace {

struct ValueRuns {
  std::vector<int> values;  // v_1 < ... < v_{m+1}
  std::vector<int> counts;  // r_1 .. r_{m+1}
};

ValueRuns runs_of(const std::vector<int>& p) {
  ValueRuns r;
  for (int v : p) {
    if (r.values.empty() || r.values.back() != v) {
      r.values.push_back(v);
      r.counts.push_back(0);
    }
    ++r.counts.back();
  }
  return r;
}

// Walks (i_1..i_m) with i_1 + .. + i_j <= r_1 + .. + r_j.
template <class Fn>
void for_each_run_split(const ValueRuns& runs, std::vector<long>& split, long used, long budget, Fn&& fn) {
  const std::size_t m = runs.values.size() - 1;
  const std::size_t j = split.size();
  if (j == m) {
    fn(split);
    return;
  }
  budget += runs.counts[j];
  for (long i = 0; used + i <= budget; ++i) {
    split.push_back(i);
    for_each_run_split(runs, split, used + i, budget, fn);
    split.pop_back();
  }
}

}  // namespace

CountResult qn_formula(int n, const std::vector<int>& p) {
  require_sorted_range(n, p);
  const auto d = static_cast<long>(p.size());
  const ValueRuns runs = runs_of(p);
  const std::size_t m = runs.values.size() - 1;
  BigInt total = 0;
  std::vector<long> split;
  for_each_run_split(runs, split, 0, 0, [&](const std::vector<long>& ij) {
    BigInt term = multinomial(d, ij);
    long used = 0;
    for (std::size_t j = 0; j < m; ++j) {
      term *= power(runs.values[j + 1] - runs.values[j], ij[j]);
      used += ij[j];
    }
    term *= power(n - runs.values[m] + 1, d - used);
    total += term;
  });
  return {total, CountMethod::closed_form};
}

std::uint64_t qn_formula_summands(const std::vector<int>& p) {
  if (p.empty() || !std::is_sorted(p.begin(), p.end())) throw std::invalid_argument("p must be sorted and nonempty");
  std::uint64_t count = 0;
  std::vector<long> split;
  for_each_run_split(runs_of(p), split, 0, 0, [&](const std::vector<long>&) { ++count; });
  return count;
}

CountResult weak_sat_number(int n, const std::vector<int>& p) {
  const CountResult q = qn_formula(n, p);
  return {power(n, static_cast<long>(p.size())) - q.value, CountMethod::closed_form};
}

BigInt weak_sat_number_bipartite(int n, int p, int q) {
  if (!(1 <= p && p <= q && q <= n)) throw std::invalid_argument("need 1 <= p <= q <= n");
  return power(n, 2) - power(n - p + 1, 2) + power(q - p, 2);
}

CountResult directed_weak_sat_number(int n, const std::vector<int>& p) {
  if (n < 1 || p.empty()) throw std::invalid_argument("need n >= 1 and nonempty p");
  BigInt box = 1;
  for (int v : p) {
    if (v < 1 || v > n) throw std::invalid_argument("p entries must lie in 1..n");
    box *= n - v + 1;
  }
  return {power(n, static_cast<long>(p.size())) - box, CountMethod::closed_form};
}

CountResult l_set_size(int n, int d, int i, int t) {
  if (d < 1 || n < 1) throw std::invalid_argument("need d, n >= 1");
  if (i < 0 || i > d) throw std::invalid_argument("need 0 <= i <= d");
  if (t < 1 || t > n) throw std::invalid_argument("need 1 <= t <= n");
  return {binomial(d, i) * power(t - 1, i) * power(n - t + 1, d - i), CountMethod::closed_form};
}

CountResult w_inclusion_exclusion(int n, const std::vector<int>& p) {
  require_sorted_range(n, p);
  const int d = static_cast<int>(p.size());
  if (d > 24) throw std::invalid_argument("w_inclusion_exclusion: d > 24 is out of reach");
  BigInt total = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << d); ++mask) {
    // I = {i_1 < .. < i_t}: exactly i_j coordinates below p_{i_j} for every j.
    std::vector<long> gaps;
    BigInt term = 1;
    long prev_i = 0;
    long prev_p = 1;
    for (int i = 1; i <= d; ++i) {
      if (!(mask >> (i - 1) & 1)) continue;
      const long pi = p[static_cast<std::size_t>(i - 1)];
      gaps.push_back(i - prev_i);
      term *= power(pi - prev_p, i - prev_i);
      prev_i = i;
      prev_p = pi;
    }
    term *= multinomial(d, gaps) * power(n - prev_p + 1, d - prev_i);
    if (std::popcount(mask) % 2 == 1)
      total += term;
    else
      total -= term;
  }
  return {total, CountMethod::closed_form};
}

std::pair<BigInt, BigInt> w_crude_bounds(int n, const std::vector<int>& p) {
  require_sorted_range(n, p);
  const int d = static_cast<int>(p.size());
  BigInt lower = BigInt(d) * (p[0] - 1) * power(n - p[0] + 1, d - 1);
  BigInt upper = 0;
  for (int i = 1; i <= d; ++i) upper += l_set_size(n, d, i, p[static_cast<std::size_t>(i - 1)]).value;
  return {lower, upper};
}

bool permutation_fits(const std::vector<int>& excess, const std::vector<int>& a) {
  std::vector<int> m = excess;
  std::vector<int> caps = a;
  std::sort(m.begin(), m.end());
  std::sort(caps.begin(), caps.end());
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > caps[i]) return false;
  return true;
}

std::vector<int> fitting_permutation(const std::vector<int>& excess, const std::vector<int>& a) {
  const std::size_t d = a.size();
  std::vector<int> by_excess(d), by_cap(d);
  std::iota(by_excess.begin(), by_excess.end(), 0);
  std::iota(by_cap.begin(), by_cap.end(), 0);
  std::stable_sort(by_excess.begin(), by_excess.end(),
                   [&](int x, int y) { return excess[static_cast<std::size_t>(x)] < excess[static_cast<std::size_t>(y)]; });
  std::stable_sort(by_cap.begin(), by_cap.end(),
                   [&](int x, int y) { return a[static_cast<std::size_t>(x)] < a[static_cast<std::size_t>(y)]; });
  std::vector<int> pi(d);
  for (std::size_t r = 0; r < d; ++r) {
    const auto cls = static_cast<std::size_t>(by_excess[r]);
    const int cap = by_cap[r];
    if (excess[cls] > a[static_cast<std::size_t>(cap)]) return {};
    pi[cls] = cap;
  }
  return pi;
}

CountResult q_enumerate(const std::vector<int>& a, const std::vector<int>& b) {
  require_caps(a, b);
  const std::size_t d = a.size();
  const int amax = *std::max_element(a.begin(), a.end());

  // All b_i-subsets of U_i, then an odometer across classes.
  std::vector<std::vector<int>> class_excess(d);
  long double space = 1;
  for (std::size_t i = 0; i < d; ++i) {
    for_each_subset(amax + b[i], b[i], [&](const std::vector<int>& s) {
      class_excess[i].push_back(s.empty() ? 0 : s.back() - b[i]);
    });
    space *= static_cast<long double>(class_excess[i].size());
  }
  if (space > static_cast<long double>(std::uint64_t{1} << 32))
    throw std::invalid_argument("q_enumerate: more than 2^32 candidate sets");

  std::uint64_t count = 0;
  std::vector<std::size_t> pos(d, 0);
  std::vector<int> excess(d);
  while (true) {
    for (std::size_t i = 0; i < d; ++i) excess[i] = class_excess[i][pos[i]];
    if (permutation_fits(excess, a)) ++count;
    std::size_t i = d;
    bool rolled = true;
    while (i > 0 && rolled) {
      --i;
      rolled = ++pos[i] == class_excess[i].size();
      if (rolled) pos[i] = 0;
    }
    if (rolled) break;
  }
  return {BigInt(count), CountMethod::enumerated};
}

CountResult q_formula(const std::vector<int>& a, const std::vector<int>& b) {
  require_caps(a, b);
  const std::size_t d = a.size();
  if (d > 4)
    throw std::invalid_argument("q_formula: d > 4 ranges over 2^(d!) permutation sets; use q_enumerate");

  std::vector<std::vector<int>> perms;
  std::vector<int> pi(d);
  std::iota(pi.begin(), pi.end(), 0);
  do {
    perms.push_back(pi);
  } while (std::next_permutation(pi.begin(), pi.end()));

  // The intersection over I depends only on the pointwise minimum vector
  // a^I, so accumulate signed multiplicities per minimum vector first.
  // Minimums are tracked as ranks among the distinct values of a.
  std::vector<int> levels = a;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  const std::size_t base = levels.size() + 1;  // rank `levels.size()` means "no permutation yet"
  std::vector<std::array<std::uint8_t, 4>> perm_ranks(perms.size());
  for (std::size_t k = 0; k < perms.size(); ++k)
    for (std::size_t i = 0; i < d; ++i)
      perm_ranks[k][i] = static_cast<std::uint8_t>(
          std::lower_bound(levels.begin(), levels.end(), a[static_cast<std::size_t>(perms[k][i])]) - levels.begin());

  std::size_t keys = 1;
  for (std::size_t i = 0; i < d; ++i) keys *= base;
  std::vector<std::int64_t> coefficient(keys, 0);
  auto key_of = [&](const std::array<std::uint8_t, 4>& r) {
    std::size_t key = 0;
    for (std::size_t i = 0; i < d; ++i) key = key * base + r[i];
    return key;
  };

  std::array<std::uint8_t, 4> none{};
  none.fill(static_cast<std::uint8_t>(levels.size()));
  auto walk = [&](auto&& self, std::size_t k, std::array<std::uint8_t, 4> mins, int chosen) -> void {
    if (k == perms.size()) {
      if (chosen > 0) coefficient[key_of(mins)] += (chosen % 2 == 1) ? 1 : -1;
      return;
    }
    self(self, k + 1, mins, chosen);
    for (std::size_t i = 0; i < d; ++i) mins[i] = std::min(mins[i], perm_ranks[k][i]);
    self(self, k + 1, mins, chosen + 1);
  };
  walk(walk, 0, none, 0);

  BigInt total = 0;
  for (std::size_t key = 0; key < keys; ++key) {
    const std::int64_t c = coefficient[key];
    if (c == 0) continue;
    BigInt term = c;
    std::size_t rest = key;
    for (std::size_t i = d; i-- > 0;) {
      const std::size_t rank = rest % base;
      rest /= base;
      term *= binomial(levels[rank] + b[i], b[i]);
    }
    total += term;
  }
  return {total, CountMethod::closed_form};
}

bool identity_check(int n, const std::vector<int>& p) {
  require_sorted_range(n, p);
  std::vector<int> a(p.size()), b(p.size(), 1);
  for (std::size_t i = 0; i < p.size(); ++i) a[i] = n - p[p.size() - 1 - i];
  return q_enumerate(a, b).value == qn_enumerate(n, p).value;
}

}  // namespace wsat
