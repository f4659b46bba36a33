#include "wsat/search.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "wsat/constructions.hpp"
#include "wsat/formulas.hpp"
#include "wsat/process.hpp"
#include "wsat/witness.hpp"

namespace wsat {

std::string to_string(SaturationKind k) { return k == SaturationKind::weak ? "weak" : "strong"; }

bool strong_sat_check(const DPartiteGraph& g, const Pattern& pattern, bool require_h_free) {
  for (std::uint64_t idx = 0; idx < g.cells(); ++idx)
    if (!g.test(idx) && !creates_copy(g, idx, pattern)) return false;
  return !(require_h_free && contains_copy(g, pattern));
}

namespace {

using Mask = std::uint64_t;
constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

std::uint64_t choose(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<std::uint64_t>(r);
}

// The rank-th k-subset of {0..n-1} in lexicographic order.
std::vector<unsigned> unrank(unsigned n, unsigned k, std::uint64_t rank) {
  std::vector<unsigned> c;
  c.reserve(k);
  unsigned x = 0;
  for (unsigned i = 0; i < k; ++i) {
    while (true) {
      const std::uint64_t starting_here = choose(n - 1 - x, k - 1 - i);
      if (rank < starting_here) break;
      rank -= starting_here;
      ++x;
    }
    c.push_back(x++);
  }
  return c;
}

bool next_subset(std::vector<unsigned>& c, unsigned n) {
  const auto k = static_cast<unsigned>(c.size());
  int i = static_cast<int>(k) - 1;
  while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + static_cast<unsigned>(i)) --i;
  if (i < 0) return false;
  ++c[static_cast<std::size_t>(i)];
  for (auto j = static_cast<std::size_t>(i) + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

Mask mask_of(const std::vector<unsigned>& c) {
  Mask m = 0;
  for (unsigned x : c) m |= Mask{1} << x;
  return m;
}

// x precedes y in lexicographic order of sorted index lists.
bool lex_less(Mask x, Mask y) {
  const Mask diff = x ^ y;
  return diff != 0 && (x & (diff & (~diff + 1))) != 0;
}

// Cell maps of the symmetry group used for pruning.
std::vector<std::vector<std::uint8_t>> symmetry_maps(const Pattern& pattern) {
  const int d = pattern.d();
  const int n = pattern.n();
  const Lattice lat(d, n);

  std::vector<std::vector<int>> class_perms;
  std::vector<int> sigma(static_cast<std::size_t>(d));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    bool ok = true;
    if (pattern.directed())
      for (int i = 0; i < d && ok; ++i)
        ok = pattern.p()[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] == pattern.p()[static_cast<std::size_t>(i)];
    if (ok) class_perms.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  std::vector<std::vector<int>> label_perms;
  std::vector<int> tau(static_cast<std::size_t>(n));
  std::iota(tau.begin(), tau.end(), 1);
  do {
    label_perms.push_back(tau);
  } while (std::next_permutation(tau.begin(), tau.end()));

  std::vector<std::vector<std::uint8_t>> maps;
  std::vector<std::size_t> choice(static_cast<std::size_t>(d), 0);
  for (const auto& cp : class_perms) {
    std::fill(choice.begin(), choice.end(), 0);
    while (true) {
      std::vector<std::uint8_t> m(lat.cells());
      for (std::uint64_t idx = 0; idx < lat.cells(); ++idx) {
        const Edge e = lat.tuple(idx);
        Edge img(e.size());
        for (std::size_t i = 0; i < e.size(); ++i)
          img[static_cast<std::size_t>(cp[i])] = label_perms[choice[i]][static_cast<std::size_t>(e[i] - 1)];
        m[idx] = static_cast<std::uint8_t>(lat.index(img));
      }
      maps.push_back(std::move(m));
      std::size_t i = choice.size();
      bool rolled = true;
      while (i > 0 && rolled) {
        --i;
        rolled = ++choice[i] == label_perms.size();
        if (rolled) choice[i] = 0;
      }
      if (rolled) break;
    }
  }
  return maps;
}

bool orbit_minimal(Mask m, const std::vector<std::vector<std::uint8_t>>& maps) {
  for (const auto& map : maps) {
    Mask img = 0;
    for (Mask rest = m; rest; rest &= rest - 1) img |= Mask{1} << map[static_cast<std::size_t>(std::countr_zero(rest))];
    if (lex_less(img, m)) return false;
  }
  return true;
}

DPartiteGraph graph_of(const Pattern& pattern, Mask m) {
  DPartiteGraph g(pattern.d(), pattern.n());
  for (Mask rest = m; rest; rest &= rest - 1) g.set(static_cast<std::uint64_t>(std::countr_zero(rest)));
  return g;
}

template <class Predicate>
SearchCertificate run_search(const Pattern& pattern, SaturationKind kind, const SearchOptions& opts,
                             Predicate&& passes, std::optional<long> known_upper) {
  const Lattice lat(pattern.d(), pattern.n());
  if (lat.cells() > kMaxSearchCells)
    throw std::invalid_argument("search: n^d = " + std::to_string(lat.cells()) + " exceeds the 64-cell oracle limit");
  const auto cells = static_cast<unsigned>(lat.cells());
  const unsigned workers = std::max(1U, opts.workers);
  const auto maps = opts.symmetry_pruning ? symmetry_maps(pattern) : std::vector<std::vector<std::uint8_t>>{};

  SearchCertificate cert(pattern);
  cert.kind = kind;
  cert.h_free = opts.require_h_free;
  cert.upper_bound = known_upper;

  for (unsigned k = 0; k <= cells; ++k) {
    const std::uint64_t layer = choose(cells, k);
    const std::uint64_t room = opts.budget - std::min(opts.budget, cert.checked);
    const std::uint64_t limit = std::min(layer, room);

    std::atomic<std::uint64_t> best{kNone};
    auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
      if (lo >= hi) return;
      std::vector<unsigned> c = unrank(cells, k, lo);
      for (std::uint64_t r = lo; r < hi; ++r) {
        if (r >= best.load(std::memory_order_relaxed)) return;
        const Mask m = mask_of(c);
        if ((maps.empty() || orbit_minimal(m, maps)) && passes(graph_of(pattern, m))) {
          std::uint64_t cur = best.load();
          while (r < cur && !best.compare_exchange_weak(cur, r)) {
          }
          return;
        }
        next_subset(c, cells);
      }
    };

    const unsigned used = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(limit, 1)));
    if (used <= 1) {
      scan(0, limit);
    } else {
      std::vector<std::thread> pool;
      const std::uint64_t chunk = limit / used;
      const std::uint64_t extra = limit % used;
      std::uint64_t lo = 0;
      for (unsigned w = 0; w < used; ++w) {
        const std::uint64_t hi = lo + chunk + (w < extra ? 1 : 0);
        pool.emplace_back(scan, lo, hi);
        lo = hi;
      }
      for (auto& t : pool) t.join();
    }

    const std::uint64_t hit = best.load();
    if (hit != kNone) {
      cert.checked += hit + 1;
      cert.conclusive = true;
      cert.minimum = static_cast<long>(k);
      cert.lower_bound = static_cast<long>(k);
      cert.upper_bound = static_cast<long>(k);
      cert.witness = graph_of(pattern, mask_of(unrank(cells, k, hit)));
      return cert;
    }
    cert.checked += limit;
    cert.lower_bound = static_cast<long>(k) + (limit == layer ? 1 : 0);
    if (limit < layer) return cert;
  }
  // Every layer examined without a hit: no graph on this lattice passes.
  cert.conclusive = true;
  cert.upper_bound.reset();
  return cert;
}

}  // namespace

SearchCertificate min_weak_saturation(const Pattern& pattern, const SearchOptions& opts) {
  std::optional<long> upper;
  if (Lattice(pattern.d(), pattern.n()).cells() <= kMaxSearchCells) {
    const DPartiteGraph known = pattern.directed() ? build_directed_g0(pattern) : build_g0(pattern);
    if (weakly_saturated(known, pattern)) upper = static_cast<long>(known.edge_count());
  }
  return run_search(pattern, SaturationKind::weak, opts,
                    [&](const DPartiteGraph& g) { return weakly_saturated(g, pattern); }, upper);
}

SearchCertificate min_strong_saturation(const Pattern& pattern, const SearchOptions& opts) {
  std::optional<long> upper;
  if (Lattice(pattern.d(), pattern.n()).cells() <= kMaxSearchCells) {
    if (pattern.d() == 2 && !pattern.directed()) {
      const int p = pattern.p()[0];
      const int q = pattern.p()[1];
      const int k = (q - p) / 2;
      if (gk_valid(pattern.n(), p, q, k)) {
        const DPartiteGraph gk = build_gk(pattern.n(), p, q, k);
        if (strong_sat_check(gk, pattern, opts.require_h_free)) upper = static_cast<long>(gk.edge_count());
      }
    }
    if (!upper && !opts.require_h_free) upper = static_cast<long>(Lattice(pattern.d(), pattern.n()).cells());
  }
  return run_search(pattern, SaturationKind::strong, opts,
                    [&](const DPartiteGraph& g) { return strong_sat_check(g, pattern, opts.require_h_free); }, upper);
}

std::vector<ConjectureRow> conjecture_table(int p, int q, int n_lo, int n_hi, const SearchOptions& opts) {
  if (p < 1 || p > q) throw std::invalid_argument("conjecture_table: need 1 <= p <= q");
  std::vector<ConjectureRow> rows;
  for (int n = std::max(n_lo, q); n <= n_hi; ++n) {
    ConjectureRow row{n, p, q, min_strong_saturation(Pattern(2, n, {p, q}), opts)};
    row.directed_formula = static_cast<long>(p + q - 2) * n - static_cast<long>(p - 1) * (q - 1);
    row.conjectured = row.directed_formula - static_cast<long>(q - p) * (q - p) / 4;
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string opt_field(const std::optional<long>& v) { return v ? std::to_string(*v) : std::string(); }

}  // namespace

std::string conjecture_csv(const std::vector<ConjectureRow>& rows) {
  std::ostringstream out;
  out << "n,p,q,status,oracle,lower,upper,directed_formula,conjectured,agree\n";
  for (const auto& r : rows) {
    const auto& c = r.oracle;
    std::string agree = "unknown";
    if (c.conclusive && c.minimum) agree = *c.minimum == r.conjectured ? "yes" : "no";
    out << r.n << ',' << r.p << ',' << r.q << ',' << (c.conclusive ? "exact" : "inconclusive") << ','
        << opt_field(c.minimum) << ',' << c.lower_bound << ',' << opt_field(c.upper_bound) << ','
        << r.directed_formula << ',' << r.conjectured << ',' << agree << '\n';
  }
  out << "# conjectured = directed_formula - floor((q-p)^2/4) is claimed only for n beyond an unspecified n0;"
         " disagreement at small n does not refute it\n";
  return out.str();
}

std::vector<WeakGridRow> weak_grid(int d, int n_lo, int n_hi, Orientation mode, const SearchOptions& opts) {
  std::vector<WeakGridRow> rows;
  for (int n = std::max(1, n_lo); n <= n_hi; ++n) {
    std::vector<int> p(static_cast<std::size_t>(d), 1);
    while (true) {
      const bool canonical = mode == Orientation::directed || std::is_sorted(p.begin(), p.end());
      if (canonical) {
        Pattern pattern(d, n, p, mode);
        const BigInt f = mode == Orientation::directed ? directed_weak_sat_number(n, p).value
                                                       : weak_sat_number(n, p).value;
        rows.push_back({pattern, min_weak_saturation(pattern, opts), f.convert_to<long>()});
      }
      std::size_t i = p.size();
      bool rolled = true;
      while (i > 0 && rolled) {
        --i;
        rolled = ++p[i] > n;
        if (rolled) p[i] = 1;
      }
      if (rolled) break;
    }
  }
  return rows;
}

std::string weak_grid_csv(const std::vector<WeakGridRow>& rows) {
  std::ostringstream out;
  out << "d,n,p,mode,status,oracle,lower,upper,formula,agree\n";
  for (const auto& r : rows) {
    std::string p;
    for (int v : r.pattern.p()) p += (p.empty() ? "" : " ") + std::to_string(v);
    const auto& c = r.oracle;
    std::string agree = "unknown";
    if (c.conclusive && c.minimum) agree = *c.minimum == r.formula ? "yes" : "no";
    out << r.pattern.d() << ',' << r.pattern.n() << ',' << p << ',' << to_string(r.pattern.mode()) << ','
        << (c.conclusive ? "exact" : "inconclusive") << ',' << opt_field(c.minimum) << ',' << c.lower_bound << ','
        << opt_field(c.upper_bound) << ',' << r.formula << ',' << agree << '\n';
  }
  return out.str();
}

}  // namespace wsat
