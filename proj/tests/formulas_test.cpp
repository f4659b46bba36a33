#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wsat/formulas.hpp"

using namespace wsat;

namespace {

std::uint64_t catalan(int d) {
  std::uint64_t c = 1;
  for (int i = 0; i < d; ++i) c = c * 2 * (2 * static_cast<std::uint64_t>(i) + 1) / (static_cast<std::uint64_t>(i) + 2);
  return c;
}

std::vector<std::vector<int>> cap_grid(int d, int hi) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(static_cast<std::size_t>(d), 0);
  while (true) {
    out.push_back(v);
    int i = d - 1;
    while (i >= 0 && v[static_cast<std::size_t>(i)] == hi) v[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return out;
    ++v[static_cast<std::size_t>(i)];
  }
}

}  // namespace

TEST_CASE("binomials, multinomials and powers") {
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
  CHECK(multinomial(4, {1, 2}) == 12);
  CHECK(multinomial(3, {2, 2}) == 0);
  CHECK(power(0, 0) == 1);
  CHECK(power(3, 40) == BigInt("12157665459056928801"));
}

TEST_CASE("qn examples") {
  CHECK(qn_enumerate(3, {1, 2}).value == 8);
  CHECK(qn_enumerate(3, {1, 2}).method == CountMethod::enumerated);
  CHECK(qn_enumerate(2, {1, 1, 2}).value == 7);
  CHECK(qn_formula(3, {1, 2}).value == 8);
  CHECK(qn_formula(3, {1, 2}).method == CountMethod::closed_form);
  for (int n = 1; n <= 6; ++n)
    for (int v = 1; v <= n; ++v)
      for (int d = 1; d <= 4; ++d) {
        const std::vector<int> p(static_cast<std::size_t>(d), v);
        CHECK(qn_enumerate(n, p).value == power(n - v + 1, d));
        CHECK(qn_formula(n, p).value == power(n - v + 1, d));
      }
  CHECK(qn_formula(5, {2, 3, 4}).value == qn_enumerate(5, {2, 3, 4}).value);
  CHECK(qn_formula_summands({2, 3, 4}) == 5);
  CHECK_THROWS_AS(qn_enumerate(3, {2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(qn_formula(3, {2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(qn_formula(3, {1, 4}), std::invalid_argument);
}

TEST_CASE("two-value closed form") {
  // q_n(v1^r, v2^(d-r)) = sum_{i<=r} C(d,i) (v2-v1)^i (n-v2+1)^(d-i)
  for (int d = 2; d <= 4; ++d)
    for (int r = 1; r < d; ++r)
      for (int n = 2; n <= 6; ++n)
        for (int v1 = 1; v1 <= n; ++v1)
          for (int v2 = v1 + 1; v2 <= n; ++v2) {
            std::vector<int> p(static_cast<std::size_t>(r), v1);
            p.resize(static_cast<std::size_t>(d), v2);
            BigInt s = 0;
            for (int i = 0; i <= r; ++i) s += binomial(d, i) * power(v2 - v1, i) * power(n - v2 + 1, d - i);
            CHECK(qn_formula(n, p).value == s);
          }
}

TEST_CASE("qn formula equals enumeration on the small grid") {
  for (int d = 1; d <= 4; ++d)
    for (int n = 1; n <= 8; ++n) {
      std::uint64_t cells = 1;
      for (int i = 0; i < d; ++i) cells *= static_cast<std::uint64_t>(n);
      if (cells > 4096) continue;
      for (const auto& p : oracle::sorted_patterns(d, n)) {
        CHECK(qn_enumerate(n, p).value == oracle::qn(n, p));
        CHECK(qn_formula(n, p).value == qn_enumerate(n, p).value);
      }
    }
}

TEST_CASE("qn formula summands for distinct p are Catalan numbers") {
  for (int d = 1; d <= 6; ++d) {
    std::vector<int> p(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) p[static_cast<std::size_t>(i)] = i + 1;
    CHECK(qn_formula_summands(p) == catalan(d));
  }
}

TEST_CASE("weak saturation numbers") {
  CHECK(weak_sat_number(3, {2, 2}).value == 5);
  CHECK(weak_sat_number(4, {2, 3}).value == 8);
  CHECK(weak_sat_number(7, {1, 1, 1}).value == 0);
  CHECK(weak_sat_number_bipartite(4, 2, 3) == 8);
  for (int n = 1; n <= 50; ++n)
    for (int p = 1; p <= n; ++p)
      for (int q = p; q <= n; ++q) CHECK(weak_sat_number(n, {p, q}).value == weak_sat_number_bipartite(n, p, q));
  // Symmetric case: n^d - (n-p+1)^d.
  CHECK(weak_sat_number(6, {3, 3, 3}).value == 216 - 64);
}

TEST_CASE("directed weak saturation numbers") {
  CHECK(directed_weak_sat_number(2, {1, 1, 2}).value == 4);
  CHECK(directed_weak_sat_number(5, {1, 1, 1}).value == 0);
  CHECK(directed_weak_sat_number(4, {2, 3}).value == 10);
  CHECK(directed_weak_sat_number(4, {3, 2}).value == 10);
  CHECK_THROWS_AS(directed_weak_sat_number(4, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(directed_weak_sat_number(4, {5, 2}), std::invalid_argument);
}

TEST_CASE("undirected never exceeds directed; equal iff p is constant") {
  for (int d = 1; d <= 3; ++d)
    for (int n = 1; n <= 6; ++n)
      for (const auto& p : oracle::sorted_patterns(d, n)) {
        const auto w = weak_sat_number(n, p).value;
        const auto wd = directed_weak_sat_number(n, p).value;
        CHECK(w <= wd);
        CHECK((w == wd) == (p.front() == p.back()));
      }
}

TEST_CASE("monotonicity in each part size") {
  for (int d = 1; d <= 3; ++d)
    for (int n = 1; n <= 6; ++n)
      for (const auto& p : oracle::sorted_patterns(d, n))
        for (std::size_t i = 0; i < p.size(); ++i) {
          auto up = p;
          ++up[i];
          if (up[i] > n || (i + 1 < up.size() && up[i] > up[i + 1])) continue;
          CHECK(qn_formula(n, up).value <= qn_formula(n, p).value);
          CHECK(weak_sat_number(n, up).value >= weak_sat_number(n, p).value);
        }
}

TEST_CASE("L sets and inclusion-exclusion") {
  CHECK(l_set_size(3, 2, 1, 2).value == 4);
  CHECK_THROWS_AS(l_set_size(3, 2, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(l_set_size(3, 2, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(l_set_size(3, 2, -1, 1), std::invalid_argument);

  // |L_i(t)| against a lattice count.
  for (int d = 1; d <= 3; ++d)
    for (int n = 1; n <= 5; ++n) {
      const Lattice lat(d, n);
      for (int t = 1; t <= n; ++t)
        for (int i = 0; i <= d; ++i) {
          std::uint64_t c = 0;
          for (std::uint64_t idx = 0; idx < lat.cells(); ++idx) {
            int below = 0;
            for (int x : lat.tuple(idx)) below += x < t;
            c += below == i;
          }
          CHECK(l_set_size(n, d, i, t).value == c);
        }
    }

  CHECK(w_inclusion_exclusion(3, {2, 2}).value == 5);
  CHECK(w_inclusion_exclusion(5, {1, 1, 1}).value == 0);
  for (int d = 1; d <= 4; ++d)
    for (int n = 1; n <= 6; ++n)
      for (const auto& p : oracle::sorted_patterns(d, n))
        CHECK(w_inclusion_exclusion(n, p).value == weak_sat_number(n, p).value);
}

TEST_CASE("crude bounds sandwich the weak saturation number") {
  auto [lo, hi] = w_crude_bounds(4, {2, 3});
  CHECK(lo == 6);
  CHECK(hi == 10);
  auto [z0, z1] = w_crude_bounds(5, {1, 1, 1});
  CHECK(z0 == 0);
  CHECK(z1 == 0);
  auto [l100, h100] = w_crude_bounds(100, {2, 2});
  CHECK(l100 == 198);
  CHECK(l100 <= weak_sat_number(100, {2, 2}).value);
  CHECK(weak_sat_number(100, {2, 2}).value <= h100);
  for (int d = 1; d <= 3; ++d)
    for (int n = 1; n <= 7; ++n)
      for (const auto& p : oracle::sorted_patterns(d, n)) {
        auto [a, b] = w_crude_bounds(n, p);
        const auto w = weak_sat_number(n, p).value;
        CHECK(a <= w);
        CHECK(w <= b);
      }
}

TEST_CASE("sorted-threshold test matches trying every permutation") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 3000; ++t) {
    const int d = 1 + static_cast<int>(rng() % 5);
    std::vector<int> m(static_cast<std::size_t>(d)), a(static_cast<std::size_t>(d));
    for (auto& x : m) x = static_cast<int>(rng() % 5);
    for (auto& x : a) x = static_cast<int>(rng() % 5);
    bool brute = false;
    for (const auto& pi : oracle::all_perms(d)) {
      bool ok = true;
      for (int i = 0; i < d; ++i) ok = ok && m[static_cast<std::size_t>(i)] <= a[static_cast<std::size_t>(pi[static_cast<std::size_t>(i)])];
      brute = brute || ok;
    }
    CHECK(permutation_fits(m, a) == brute);
    const auto pi = fitting_permutation(m, a);
    CHECK(pi.empty() != brute);
    for (std::size_t i = 0; i < pi.size(); ++i) CHECK(m[i] <= a[static_cast<std::size_t>(pi[i])]);
  }
}

TEST_CASE("Q examples") {
  CHECK(q_enumerate({1, 2}, {1, 1}).value == 8);
  CHECK(q_enumerate({2}, {1}).value == 3);
  CHECK(q_enumerate({2, 2, 2}, {1, 2, 0}).value == binomial(3, 1) * binomial(4, 2));
  CHECK(q_formula({1, 2}, {1, 1}).value == 8);
  CHECK(q_formula({1, 2}, {1, 2}).value == 15);
  CHECK(oracle::q({1, 2}, {1, 2}) == 15);
  CHECK(q_formula({3, 3}, {2, 1}).value == binomial(5, 2) * binomial(4, 1));
  CHECK_THROWS_AS(q_formula({1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(q_enumerate({1, -1}, {1, 1}), std::invalid_argument);
}

TEST_CASE("Q for d = 2 matches the three-term formula") {
  for (int a1 = 0; a1 <= 4; ++a1)
    for (int a2 = a1; a2 <= 4; ++a2)
      for (int b1 = 0; b1 <= 3; ++b1)
        for (int b2 = 0; b2 <= 3; ++b2) {
          const BigInt three = binomial(a1 + b1, b1) * binomial(a2 + b2, b2) +
                               binomial(a2 + b1, b1) * binomial(a1 + b2, b2) -
                               binomial(a1 + b1, b1) * binomial(a1 + b2, b2);
          CHECK(q_formula({a1, a2}, {b1, b2}).value == three);
          CHECK(q_enumerate({a1, a2}, {b1, b2}).value == three);
        }
}

TEST_CASE("Q enumeration and formula agree with the definition") {
  for (int d = 1; d <= 3; ++d) {
    const int hi = d == 3 ? 2 : 3;  // keeps the definitional oracle's 2^|U| scan small
    for (const auto& a : cap_grid(d, hi))
      for (const auto& b : cap_grid(d, hi)) {
        const auto e = q_enumerate(a, b).value;
        CHECK(e == oracle::q(a, b));
        CHECK(q_formula(a, b).value == e);
      }
  }
}

TEST_CASE("Q formula equals enumeration for d <= 3, entries <= 3") {
  for (int d = 1; d <= 3; ++d)
    for (const auto& a : cap_grid(d, 3))
      for (const auto& b : cap_grid(d, 3)) CHECK(q_formula(a, b).value == q_enumerate(a, b).value);
}

TEST_CASE("Q formula handles d = 4") {
  CHECK(q_formula({0, 1, 2, 3}, {1, 1, 1, 1}).value == q_enumerate({0, 1, 2, 3}, {1, 1, 1, 1}).value);
  CHECK(q_formula({1, 3, 2, 2}, {2, 0, 1, 1}).value == q_enumerate({1, 3, 2, 2}, {2, 0, 1, 1}).value);
}

TEST_CASE("Q is invariant under permuting a") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const int d = 1 + static_cast<int>(rng() % 3);
    std::vector<int> a(static_cast<std::size_t>(d)), b(static_cast<std::size_t>(d));
    for (auto& x : a) x = static_cast<int>(rng() % 4);
    for (auto& x : b) x = static_cast<int>(rng() % 4);
    const auto base = q_enumerate(a, b).value;
    std::shuffle(a.begin(), a.end(), rng);
    CHECK(q_enumerate(a, b).value == base);
  }
}

TEST_CASE("identity Q(n - p, 1) = q_n(p)") {
  CHECK(q_enumerate({1, 0}, {1, 1}).value == 3);
  CHECK(identity_check(2, {1, 2}));
  CHECK(identity_check(3, {1, 2}));
  CHECK(q_enumerate({2, 1}, {1, 1}).value == 8);
  for (int n = 1; n <= 5; ++n) CHECK(identity_check(n, std::vector<int>(3, n)));
  for (int d = 1; d <= 3; ++d)
    for (int n = 1; n <= 5; ++n)
      for (const auto& p : oracle::sorted_patterns(d, n)) CHECK(identity_check(n, p));
}
