#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "wsat/constructions.hpp"
#include "wsat/formulas.hpp"
#include "wsat/process.hpp"
#include "wsat/search.hpp"
#include "wsat/witness.hpp"

using namespace wsat;

namespace {

DPartiteGraph graph_with(int d, int n, const std::vector<Edge>& edges) {
  DPartiteGraph g(d, n);
  for (const auto& e : edges) g.add(e);
  return g;
}

}  // namespace

TEST_CASE("pattern canonicalizes undirected part sizes") {
  Pattern u(3, 4, {3, 1, 2});
  CHECK(u.p() == std::vector<int>{1, 2, 3});
  Pattern dir(3, 4, {3, 1, 2}, Orientation::directed);
  CHECK(dir.p() == std::vector<int>{3, 1, 2});
  CHECK(dir.class_sizes().size() == 1);
  CHECK(Pattern(3, 4, {2, 2, 3}).class_sizes().size() == 3);
  CHECK(Pattern(3, 4, {2, 2, 3}).orientation_of({2, 3, 2}) == std::vector<int>{1, 3, 2});
  CHECK_THROWS_AS(Pattern(2, 3, {1, 4}), std::invalid_argument);
  CHECK_THROWS_AS(Pattern(2, 3, {1}), std::invalid_argument);
  CHECK_THROWS_AS(Pattern(0, 3, {}), std::invalid_argument);
}

TEST_CASE("lattice indexing and the cell cap") {
  const Lattice lat(3, 4);
  CHECK(lat.cells() == 64);
  for (std::uint64_t i = 0; i < lat.cells(); ++i) CHECK(lat.index(lat.tuple(i)) == i);
  CHECK(lat.index(std::vector<int>{1, 1, 2}) == 1);
  CHECK(lat.index(std::vector<int>{2, 1, 1}) == 16);
  CHECK_THROWS_AS(Lattice(2, 4097), std::invalid_argument);
  CHECK_NOTHROW(Lattice(2, 4096));
  CHECK(sorted({5, 2, 5, 1}) == Edge{1, 2, 5, 5});
}

TEST_CASE("complement is an involution and counts add up") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const auto g = oracle::random_graph(3, 5, 0.4, rng);
    CHECK(g.complement().complement() == g);
    CHECK(g.edge_count() + g.complement().edge_count() == g.cells());
    CHECK(g.is_subgraph_of(g.united(g.complement())));
    CHECK(g.united(g.complement()).is_complete());
  }
}

TEST_CASE("build_g0 examples") {
  const auto g = build_g0(Pattern(2, 3, {2, 2}));
  CHECK(g.edge_count() == 5);
  CHECK(g.non_edges() == std::vector<Edge>{{2, 2}, {2, 3}, {3, 2}, {3, 3}});

  const auto h = build_g0(Pattern(2, 3, {1, 2}));
  CHECK(h.edges() == std::vector<Edge>{{1, 1}});

  CHECK(build_g0(Pattern(3, 4, {1, 1, 1})).edge_count() == 0);
  CHECK_THROWS_AS(build_g0(Pattern(2, 3, {1, 2}, Orientation::directed)), std::invalid_argument);

  // p = (n,..,n) leaves a single non-edge, the all-n tuple.
  const auto top = build_g0(Pattern(3, 3, {3, 3, 3}));
  CHECK(top.non_edges() == std::vector<Edge>{{3, 3, 3}});
}

TEST_CASE("build_g0 for d = 2 is the union of three complete bipartite graphs") {
  for (int n = 1; n <= 6; ++n)
    for (int p = 1; p <= n; ++p)
      for (int q = p; q <= n; ++q) {
        DPartiteGraph warm(2, n);
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j)
            if (i < p || j < p || (i >= p && j >= p && i < q && j < q)) warm.add(std::vector<int>{i, j});
        CHECK(build_g0(Pattern(2, n, {p, q})) == warm);
      }
}

TEST_CASE("build_g0 edge count equals the weak saturation number") {
  for (int d = 1; d <= 4; ++d)
    for (int n = 1; n <= 8; ++n) {
      std::uint64_t cells = 1;
      for (int i = 0; i < d; ++i) cells *= static_cast<std::uint64_t>(n);
      if (cells > 4096) continue;
      for (const auto& p : oracle::sorted_patterns(d, n))
        CHECK(BigInt(build_g0(Pattern(d, n, p)).edge_count()) == weak_sat_number(n, p).value);
    }
}

TEST_CASE("new_copy_witness examples") {
  const Pattern p12(2, 2, {1, 2});
  const auto g = graph_with(2, 2, {{1, 1}, {1, 2}});
  const auto w = new_copy_witness(g, {2, 1}, p12);
  REQUIRE(w);
  CHECK(w->classes == std::vector<std::vector<int>>{{1, 2}, {1}});
  CHECK(w->orientation == std::vector<int>{2, 1});

  const auto w11 = new_copy_witness(DPartiteGraph(2, 2), {1, 1}, Pattern(2, 2, {1, 1}));
  REQUIRE(w11);
  CHECK(w11->classes == std::vector<std::vector<int>>{{1}, {1}});

  CHECK_FALSE(new_copy_witness(DPartiteGraph(2, 2), {1, 1}, p12));
}

TEST_CASE("directed witnesses respect class order") {
  const auto g = graph_with(2, 2, {{1, 1}, {1, 2}});
  // K_{1,2} with one vertex in class 1: (2,1) would need class 2 of size 2 at vertex 2.
  CHECK_FALSE(new_copy_witness(g, {2, 1}, Pattern(2, 2, {1, 2}, Orientation::directed)));
  // K_{2,1}: class 1 = {1, 2}, class 2 = {1}.
  const auto w = new_copy_witness(g, {2, 1}, Pattern(2, 2, {2, 1}, Orientation::directed));
  REQUIRE(w);
  CHECK(w->orientation == std::vector<int>{1, 2});
}

TEST_CASE("witness search agrees with brute force on random graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 2);
    const int n = d == 2 ? 4 : 3;
    const auto g = oracle::random_graph(d, n, 0.6, rng);
    std::vector<int> p(static_cast<std::size_t>(d));
    for (auto& v : p) v = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    const auto mode = rng() % 3 == 0 ? Orientation::directed : Orientation::undirected;
    const Pattern pat(d, n, p, mode);
    for (const auto& e : g.non_edges()) {
      const auto w = new_copy_witness(g, e, pat);
      CHECK(w.has_value() == oracle::has_copy_through(g, e, pat));
      if (w) {
        SaturationProcess one{{{e, *w}}};
        const auto v = verify_process(g, one, pat);
        // Only the not-complete-at-end failure is allowed for a single valid step.
        CHECK((v.accepted || v.reason == ProcessFailure::not_complete_at_end));
      }
    }
  }
}

TEST_CASE("greedy_closure examples") {
  const Pattern p22(2, 3, {2, 2});
  const auto res = greedy_closure(build_g0(p22), p22);
  CHECK(res.closure.is_complete());
  CHECK(res.process.size() == 4);
  CHECK(verify_process(build_g0(p22), res.process, p22));

  const auto full = DPartiteGraph::complete(2, 3);
  const auto same = greedy_closure(full, p22);
  CHECK(same.closure == full);
  CHECK(same.process.size() == 0);

  const auto none = greedy_closure(DPartiteGraph(2, 3), p22);
  CHECK(none.closure.edge_count() == 0);
  CHECK(none.process.size() == 0);
}

TEST_CASE("greedy closure matches the brute-force closure") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = oracle::random_graph(2, 3, 0.45, rng);
    for (const auto& p : oracle::sorted_patterns(2, 3)) {
      const Pattern pat(2, 3, p);
      CHECK(closure_edges(g, pat) == oracle::closure(g, pat));
    }
  }
}

TEST_CASE("closure is order independent") {
  std::mt19937_64 rng(12345);
  for (int graphs = 0; graphs < 20; ++graphs) {
    const auto g = oracle::random_graph(2, 3, 0.4, rng);
    const Pattern pat(2, 3, {1 + static_cast<int>(rng() % 2), 2 + static_cast<int>(rng() % 2)});
    const auto reference = greedy_closure(g, pat).closure;
    std::vector<std::uint64_t> order(g.cells());
    std::iota(order.begin(), order.end(), std::uint64_t{0});
    for (int t = 0; t < 100; ++t) {
      std::shuffle(order.begin(), order.end(), rng);
      const auto res = greedy_closure(g, pat, order);
      CHECK(res.closure == reference);
      if (reference.is_complete()) CHECK(verify_process(g, res.process, pat));
    }
  }
}

TEST_CASE("weight_process examples") {
  const Pattern p22(2, 3, {2, 2});
  const auto proc = weight_process(p22);
  REQUIRE(proc.size() == 4);
  CHECK(proc.steps[0].edge == Edge{2, 2});
  CHECK(proc.steps[1].edge == Edge{2, 3});
  CHECK(proc.steps[2].edge == Edge{3, 2});
  CHECK(proc.steps[3].edge == Edge{3, 3});
  CHECK(proc.steps[0].witness.classes == std::vector<std::vector<int>>{{1, 2}, {1, 2}});
  CHECK(verify_process(build_g0(p22), proc, p22));

  const auto small = weight_process(Pattern(2, 2, {1, 2}));
  REQUIRE(small.size() == 3);
  CHECK(weight(small.steps[0].edge) == 3);
  CHECK(weight(small.steps[1].edge) == 3);
  CHECK(weight(small.steps[2].edge) == 4);

  const Pattern ones(3, 2, {1, 1, 1});
  const auto all = weight_process(ones);
  CHECK(all.size() == 8);
  for (const auto& s : all.steps)
    for (std::size_t i = 0; i < 3; ++i) CHECK(s.witness.classes[i] == std::vector<int>{s.edge[i]});
  CHECK(verify_process(DPartiteGraph(3, 2), all, ones));
}

TEST_CASE("weight_process verifies on every small instance") {
  for (int d = 1; d <= 3; ++d)
    for (int n = 1; n <= 4; ++n)
      for (const auto& p : oracle::sorted_patterns(d, n)) {
        const Pattern pat(d, n, p);
        const auto v = verify_process(build_g0(pat), weight_process(pat), pat);
        CHECK_MESSAGE(v.accepted, "d=", d, " n=", n, " step ", v.step, ": ", v.detail);
      }
}

TEST_CASE("verify_process rejections") {
  const Pattern p23(2, 3, {2, 3});
  const auto g0 = build_g0(p23);
  auto reversed = weight_process(p23);
  std::reverse(reversed.steps.begin(), reversed.steps.end());
  auto v = verify_process(g0, reversed, p23);
  CHECK_FALSE(v.accepted);
  CHECK(v.step == 1);
  CHECK(v.reason == ProcessFailure::witness_incomplete);

  // For p = (2,2) every weight-process witness {1,x} x {1,y} uses only G0 edges, so
  // the reversed order is still a valid process.
  const Pattern p22(2, 3, {2, 2});
  auto rev22 = weight_process(p22);
  std::reverse(rev22.steps.begin(), rev22.steps.end());
  CHECK(verify_process(build_g0(p22), rev22, p22));

  CHECK(verify_process(DPartiteGraph::complete(2, 3), {}, p22));

  v = verify_process(build_g0(p22), {}, p22);
  CHECK(v.reason == ProcessFailure::not_complete_at_end);
  CHECK(v.step == 1);

  auto dup = weight_process(p22);
  dup.steps.push_back(dup.steps.front());
  v = verify_process(build_g0(p22), dup, p22);
  CHECK(v.reason == ProcessFailure::edge_already_present);
  CHECK(v.step == 5);

  auto shrunk = weight_process(p22);
  shrunk.steps[0].witness.classes[0] = {2};
  v = verify_process(build_g0(p22), shrunk, p22);
  CHECK(v.reason == ProcessFailure::wrong_sizes);
  CHECK(v.step == 1);

  auto moved = weight_process(p22);
  moved.steps[0].witness.classes[0] = {1, 3};
  v = verify_process(build_g0(p22), moved, p22);
  CHECK(v.reason == ProcessFailure::witness_incomplete);
}

TEST_CASE("contains_oriented_complete examples") {
  const auto comp = build_g0(Pattern(2, 3, {2, 3})).complement();
  CHECK(contains_oriented_complete(comp, {2, 1}, {1, 2}));
  CHECK(contains_oriented_complete(comp, {2, 1}, {2, 1}));
  CHECK_FALSE(contains_oriented_complete(comp, {2, 2}, {1, 2}));
  CHECK_FALSE(contains_oriented_complete(DPartiteGraph(2, 3), {1, 1}, {1, 2}));
  CHECK_THROWS_AS(contains_oriented_complete(comp, {2, 1}, {1, 1}), std::invalid_argument);
}

TEST_CASE("complement of G0 contains every orientation") {
  for (int d = 1; d <= 3; ++d)
    for (int n = 1; n <= 4; ++n)
      for (const auto& p : oracle::sorted_patterns(d, n)) {
        const auto comp = build_g0(Pattern(d, n, p)).complement();
        std::vector<int> sizes(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) sizes[i] = n - p[i] + 1;
        for (auto pi : oracle::all_perms(d)) {
          for (int& x : pi) ++x;
          CHECK(contains_oriented_complete(comp, sizes, pi));
        }
      }
}

TEST_CASE("sorted order preserves pointwise dominance") {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::uniform_real_distribution<double> step(0.0, 3.0);
  for (int t = 0; t < 10000; ++t) {
    const std::size_t d = 1 + rng() % 6;
    std::vector<double> y(d), x(d);
    for (std::size_t i = 0; i < d; ++i) {
      y[i] = u(rng);
      x[i] = y[i] + (rng() % 4 == 0 ? 0.0 : step(rng));
    }
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    for (std::size_t i = 0; i < d; ++i) CHECK(x[i] >= y[i]);
  }
}

TEST_CASE("lower bound gadget examples") {
  const Pattern p12(2, 2, {1, 2});
  const auto h = build_g0(p12);
  CHECK(h.edge_count() == 1);
  const auto gadget = build_lower_bound_gadget(h, p12);
  CHECK(gadget.n() == 4);
  CHECK(gadget.edge_count() == 12);

  const Pattern p11(2, 2, {1, 1});
  CHECK(build_lower_bound_gadget(DPartiteGraph::complete(2, 2), p11).edge_count() == 16);

  CHECK_THROWS_AS(build_lower_bound_gadget(DPartiteGraph(2, 3), p12), std::invalid_argument);
}

TEST_CASE("gadget of a weakly saturated graph is weakly saturated for the big clique") {
  for (int d = 1; d <= 2; ++d)
    for (int n = 1; n <= 3; ++n)
      for (const auto& p : oracle::sorted_patterns(d, n)) {
        const Pattern pat(d, n, p);
        const auto h = build_g0(pat);
        const auto gadget = build_lower_bound_gadget(h, pat);
        const std::uint64_t missing = (h.cells() - h.edge_count()) + build_g0(pat).edge_count();
        CHECK(gadget.cells() - gadget.edge_count() == missing);
        CHECK(weakly_saturated(gadget, gadget_pattern(pat)));
      }
}

TEST_CASE("build_gk examples") {
  const auto g = build_gk(4, 1, 3, 1);
  CHECK(g.edge_count() == 7);  // (1+3-2)*4 - 0 - 1*(3-1-1)
  CHECK(strong_sat_check(g, Pattern(2, 4, {1, 3})));

  CHECK(build_gk(3, 2, 2, 0).edge_count() == 5);
  CHECK(strong_sat_check(build_gk(3, 2, 2, 0), Pattern(2, 3, {2, 2})));

  const auto matching = build_gk(4, 1, 2, 0);
  CHECK(matching.edge_count() == 4);
  for (int x = 1; x <= 4; ++x) {
    int deg = 0;
    for (int y = 1; y <= 4; ++y) deg += matching.contains(std::vector<int>{x, y});
    CHECK(deg == 1);
  }

  CHECK_THROWS_AS(build_gk(4, 3, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_gk(4, 1, 4, 3), std::invalid_argument);  // 4 < q - 1 + k
  CHECK_THROWS_AS(build_gk(3, 1, 4, 0), std::invalid_argument);
}

TEST_CASE("build_gk is strongly saturated on every valid small instance") {
  for (int n = 1; n <= 6; ++n)
    for (int p = 1; p <= 4; ++p)
      for (int q = p; q <= 4; ++q)
        for (int k = 0; k <= q - p; ++k) {
          if (!gk_valid(n, p, q, k)) continue;
          const auto g = build_gk(n, p, q, k);
          CHECK(static_cast<long>(g.edge_count()) == gk_edge_count(n, p, q, k));
          CHECK(strong_sat_check(g, Pattern(2, n, {p, q})));
        }
}
