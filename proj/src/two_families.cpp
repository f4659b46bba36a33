#include "wsat/two_families.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "wsat/formulas.hpp"

namespace wsat {

ElementSet make_set(std::vector<Element> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return elems;
}

bool intersects(const ElementSet& x, const ElementSet& y) {
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else
      return true;
  }
  return false;
}

long weight(const ElementSet& s) {
  return std::accumulate(s.begin(), s.end(), 0L, [](long acc, const Element& e) { return acc + e.label; });
}

namespace {

std::vector<int> part_counts(const ElementSet& s, std::size_t parts) {
  std::vector<int> c(parts, 0);
  for (const Element& e : s) ++c[static_cast<std::size_t>(e.part - 1)];
  return c;
}

ConditionVerdict violation(int condition, std::size_t i, std::size_t j, std::string detail) {
  return ConditionVerdict{false, condition, i, j, std::move(detail)};
}

}  // namespace

ConditionVerdict verify_conditions(const FamilyPair& fp, CapRule rule, bool non_skew) {
  const std::size_t parts = fp.part_sizes.size();
  const std::size_t h = fp.A.size();
  if (fp.B.size() != h) return violation(0, 0, 0, "families have different lengths");
  if (fp.caps_a.size() != parts || fp.caps_b.size() != parts)
    return violation(0, 0, 0, "caps must have one entry per part");
  for (std::size_t i = 0; i < h; ++i) {
    for (const ElementSet* s : {&fp.A[i], &fp.B[i]}) {
      if (!std::is_sorted(s->begin(), s->end()) || std::adjacent_find(s->begin(), s->end()) != s->end())
        return violation(0, i + 1, 0, "set is not sorted and duplicate-free");
      for (const Element& e : *s)
        if (e.part < 1 || e.part > static_cast<int>(parts) || e.label < 1 ||
            e.label > fp.part_sizes[static_cast<std::size_t>(e.part - 1)])
          return violation(0, i + 1, 0, "element outside the ground set");
    }
  }

  for (std::size_t i = 0; i < h; ++i)
    if (intersects(fp.A[i], fp.B[i])) return violation(1, i + 1, i + 1, "A_i meets B_i");

  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = non_skew ? 0 : i + 1; j < h; ++j)
      if (j != i && !intersects(fp.A[i], fp.B[j])) return violation(2, i + 1, j + 1, "A_i misses B_j");

  for (std::size_t i = 0; i < h; ++i) {
    const auto c = part_counts(fp.B[i], parts);
    for (std::size_t j = 0; j < parts; ++j)
      if (c[j] > fp.caps_b[j]) return violation(3, i + 1, j + 1, "|B_i cap X_j| exceeds b_j");
  }

  for (std::size_t i = 0; i < h; ++i) {
    const auto c = part_counts(fp.A[i], parts);
    if (rule == CapRule::identity) {
      for (std::size_t j = 0; j < parts; ++j)
        if (c[j] > fp.caps_a[j]) return violation(4, i + 1, j + 1, "|A_i cap X_j| exceeds a_j");
    } else if (!permutation_fits(c, fp.caps_a)) {
      return violation(4, i + 1, 0, "no permutation of a bounds the part sizes of A_i");
    }
  }
  return {};
}

FamilyPair build_extremal(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size() || a.empty()) throw std::invalid_argument("a and b need the same positive length");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < 0 || b[i] < 0) throw std::invalid_argument("a and b must be nonnegative");
  const std::size_t d = a.size();
  const int amax = *std::max_element(a.begin(), a.end());

  FamilyPair fp;
  fp.caps_a = a;
  fp.caps_b = b;
  fp.part_sizes.resize(d);
  for (std::size_t j = 0; j < d; ++j) fp.part_sizes[j] = amax + b[j];

  // Per part, every b_j-subset of U_j in lexicographic order.
  std::vector<std::vector<std::vector<int>>> choices(d);
  for (std::size_t j = 0; j < d; ++j) {
    const int m = fp.part_sizes[j];
    const int k = b[j];
    std::vector<int> c(static_cast<std::size_t>(k));
    std::iota(c.begin(), c.end(), 1);
    while (true) {
      choices[j].push_back(c);
      int i = k - 1;
      while (i >= 0 && c[static_cast<std::size_t>(i)] == m - k + i + 1) --i;
      if (i < 0) break;
      ++c[static_cast<std::size_t>(i)];
      for (int t = i + 1; t < k; ++t) c[static_cast<std::size_t>(t)] = c[static_cast<std::size_t>(t) - 1] + 1;
    }
  }

  struct Candidate {
    ElementSet set;
    std::vector<int> pi;
    long w;
  };
  std::vector<Candidate> picked;
  std::vector<std::size_t> pos(d, 0);
  std::vector<int> excess(d);
  while (true) {
    std::vector<Element> elems;
    for (std::size_t j = 0; j < d; ++j) {
      const auto& s = choices[j][pos[j]];
      excess[j] = s.empty() ? 0 : s.back() - b[j];
      for (int x : s) elems.push_back({static_cast<int>(j) + 1, x});
    }
    auto pi = fitting_permutation(excess, a);
    if (!pi.empty()) {
      ElementSet set = make_set(std::move(elems));
      const long w = weight(set);
      picked.push_back({std::move(set), std::move(pi), w});
    }
    std::size_t j = d;
    bool rolled = true;
    while (j > 0 && rolled) {
      --j;
      rolled = ++pos[j] == choices[j].size();
      if (rolled) pos[j] = 0;
    }
    if (rolled) break;
  }

  std::sort(picked.begin(), picked.end(), [](const Candidate& x, const Candidate& y) {
    if (x.w != y.w) return x.w > y.w;
    return x.set < y.set;
  });

  for (const Candidate& c : picked) {
    std::vector<Element> comp;
    for (std::size_t j = 0; j < d; ++j) {
      const int top = a[static_cast<std::size_t>(c.pi[j])] + b[j];
      for (int x = 1; x <= top; ++x) {
        const Element e{static_cast<int>(j) + 1, x};
        if (!std::binary_search(c.set.begin(), c.set.end(), e)) comp.push_back(e);
      }
    }
    fp.A.push_back(make_set(std::move(comp)));
    fp.B.push_back(c.set);
  }
  return fp;
}

FamilyPair saturation_to_families(const DPartiteGraph& g, const SaturationProcess& proc, const Pattern& pattern) {
  if (const auto verdict = verify_process(g, proc, pattern); !verdict)
    throw std::invalid_argument("saturation_to_families: process rejected at step " + std::to_string(verdict.step) +
                                " (" + to_string(verdict.reason) + ")");
  const std::size_t d = static_cast<std::size_t>(pattern.d());
  const int n = pattern.n();
  FamilyPair fp;
  fp.part_sizes.assign(d, n);
  fp.caps_b.assign(d, 1);
  for (int v : pattern.p()) fp.caps_a.push_back(n - v);
  for (const auto& step : proc.steps) {
    std::vector<Element> outside;
    std::vector<Element> edge;
    for (std::size_t j = 0; j < d; ++j) {
      const auto& cls = step.witness.classes[j];
      for (int v = 1; v <= n; ++v)
        if (!std::binary_search(cls.begin(), cls.end(), v)) outside.push_back({static_cast<int>(j) + 1, v});
      edge.push_back({static_cast<int>(j) + 1, step.edge[j]});
    }
    fp.A.push_back(make_set(std::move(outside)));
    fp.B.push_back(make_set(std::move(edge)));
  }
  return fp;
}

}  // namespace wsat
