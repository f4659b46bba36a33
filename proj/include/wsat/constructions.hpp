#pragma once

#include "wsat/graph.hpp"
#include "wsat/pattern.hpp"

namespace wsat {

// G0: a tuple is a non-edge iff its i-th smallest coordinate is at least
// p_i for every i. Undirected patterns only.
DPartiteGraph build_g0(const Pattern& pattern);

// Directed analogue: a tuple is a non-edge iff x_i >= p_i for every i.
DPartiteGraph build_directed_g0(const Pattern& pattern);

// The bipartite graph G^k_{p,q} on n + n vertices: labels 1..p-1 of each
// class are complete to the other class, labels p..p+k-1 span a K_{k,k}, and
// the r = n-p+1-k remaining labels of each class are joined circulantly to
// q-p remaining labels of the other class (remaining index t meets
// t, t+1, .., t+q-p-1 mod r), so they have degree exactly q-1.
// Requires 1 <= p <= q <= n, 0 <= k <= q-p and n >= q-1+k.
DPartiteGraph build_gk(int n, int p, int q, int k);

// (p+q-2)n - (p-1)(q-1) - k(q-p-k).
long gk_edge_count(int n, int p, int q, int k);
bool gk_valid(int n, int p, int q, int k);

// The graph on 2n vertices per class that is h on labels 1..n, the
// complement of G0(pattern) on labels n+1..2n, and complete on every mixed
// tuple.
DPartiteGraph build_lower_bound_gadget(const DPartiteGraph& h, const Pattern& pattern);

// K^d_{n+1,..,n+1} on 2n vertices per class.
Pattern gadget_pattern(const Pattern& pattern);

}  // namespace wsat
