#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "wsat/constructions.hpp"
#include "wsat/formulas.hpp"
#include "wsat/io.hpp"
#include "wsat/process.hpp"
#include "wsat/search.hpp"
#include "wsat/two_families.hpp"
#include "wsat/witness.hpp"

namespace wsat::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  int d = 0;
  int n = 0;
  std::vector<int> p;
  std::vector<int> a;
  std::vector<int> b;
  int k = -1;
  bool directed = false;
  std::string input = "-";
  std::string graph_file;

  // formula
  bool w = false, qn = false, q = false, incexc = false, bounds = false, identity = false, gk_count = false;
  std::string method = "closed-form";

  // construct
  bool g0 = false, gk = false, gadget = false, extremal = false, with_process = false;

  // closure / verify / families
  std::string order = "lex";
  std::uint64_t seed = 12345;
  bool json = false;
  bool process = false, weak = false, strong = false, h_free = false;
  bool from_process = false, non_skew = false;
  std::string rule = "permuted";

  // search / table
  unsigned workers = 1;
  std::uint64_t budget = std::uint64_t{1} << 24;
  bool symmetry = false;
  bool conjecture = false;
  std::string n_range;
};

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string describe(const Pattern& pat) {
  return "d=" + std::to_string(pat.d()) + " n=" + std::to_string(pat.n()) + " p=" + join(pat.p()) + " " +
         to_string(pat.mode());
}

Pattern make_pattern(int d, int n, const std::vector<int>& p, bool directed, std::ostream& err) {
  if (p.empty()) throw UsageError("-p is required");
  if (d == 0) d = static_cast<int>(p.size());
  if (static_cast<int>(p.size()) != d) throw UsageError("-p: expected " + std::to_string(d) + " entries");
  if (n <= 0) throw UsageError("-n is required");
  Pattern pat(d, n, p, directed ? Orientation::directed : Orientation::undirected);
  if (pat.p() != p) err << "note: p taken as " << join(pat.p()) << '\n';
  return pat;
}

std::string read_all(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw UsageError("--input: cannot open " + path);
    buf << f.rdbuf();
  }
  return buf.str();
}

std::pair<int, int> parse_range(const std::string& s) {
  if (s.empty()) throw UsageError("--n-range is required");
  try {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
      const int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw UsageError("--n-range: expected LO..HI, got '" + s + "'");
  }
}

CountMethod parse_method(const std::string& m) {
  if (m == "closed-form") return CountMethod::closed_form;
  if (m == "enumerated") return CountMethod::enumerated;
  throw UsageError("--method: expected closed-form or enumerated");
}

void print_count(std::ostream& out, const std::string& name, const CountResult& r) {
  out << name << " = " << r.value << " (" << to_string(r.method) << ")\n";
}

int count_set(std::initializer_list<bool> flags) {
  return static_cast<int>(std::count(flags.begin(), flags.end(), true));
}

// ---------------------------------------------------------------- formula

int run_formula(const Flags& f, std::ostream& out, std::ostream& err) {
  if (count_set({f.w, f.qn, f.q, f.incexc, f.bounds, f.identity, f.gk_count}) == 0)
    throw UsageError("formula: choose at least one of --w --qn --q --incexc --bounds --identity --gk-count");
  const CountMethod method = parse_method(f.method);
  int status = Exit::ok;

  if (f.gk_count) {
    if (f.p.size() != 2 || f.n <= 0 || f.k < 0) throw UsageError("--gk-count: needs -n, -p P,Q and -k");
    if (!gk_valid(f.n, f.p[0], f.p[1], f.k)) throw UsageError("--gk-count: invalid (n, p, q, k)");
    out << "gk_edges = " << gk_edge_count(f.n, f.p[0], f.p[1], f.k) << " (closed-form)\n";
  }
  if (f.q) {
    if (f.a.empty() || f.a.size() != f.b.size()) throw UsageError("--q: needs --a and --b of equal length");
    print_count(out, "Q", method == CountMethod::enumerated ? q_enumerate(f.a, f.b) : q_formula(f.a, f.b));
  }
  if (!(f.w || f.qn || f.incexc || f.bounds || f.identity)) return status;

  const Pattern pat = make_pattern(f.d, f.n, f.p, f.directed, err);
  const auto& p = pat.p();
  if (f.w) {
    if (pat.directed()) {
      print_count(out, "w", directed_weak_sat_number(pat.n(), p));
    } else if (method == CountMethod::enumerated) {
      const auto q = qn_enumerate(pat.n(), p);
      print_count(out, "w", {power(pat.n(), pat.d()) - q.value, CountMethod::enumerated});
    } else {
      print_count(out, "w", weak_sat_number(pat.n(), p));
    }
  }
  if (pat.directed() && (f.qn || f.incexc || f.bounds || f.identity))
    throw UsageError("--directed: only --w has a directed form");
  if (f.qn) print_count(out, "qn", method == CountMethod::enumerated ? qn_enumerate(pat.n(), p) : qn_formula(pat.n(), p));
  if (f.incexc) print_count(out, "w_incexc", w_inclusion_exclusion(pat.n(), p));
  if (f.bounds) {
    const auto [lo, hi] = w_crude_bounds(pat.n(), p);
    out << "w_bounds = " << lo << ".." << hi << " (closed-form)\n";
  }
  if (f.identity) {
    const bool holds = identity_check(pat.n(), p);
    out << "identity = " << (holds ? "true" : "false") << " (enumerated)\n";
    if (!holds) status = Exit::verification_failed;
  }
  return status;
}

// ---------------------------------------------------------------- construct

int run_construct(const Flags& f, std::istream& in, std::ostream& out, std::ostream& err) {
  if (count_set({f.g0, f.gk, f.gadget, f.extremal}) != 1)
    throw UsageError("construct: choose exactly one of --g0 --gk --gadget --extremal");
  if (f.with_process && !f.g0) throw UsageError("--with-process: only with --g0");

  if (f.g0) {
    const Pattern pat = make_pattern(f.d, f.n, f.p, f.directed, err);
    const auto g = pat.directed() ? build_directed_g0(pat) : build_g0(pat);
    if (!f.with_process) {
      out << io::write_graph(g);
    } else {
      const auto proc = pat.directed() ? greedy_closure(g, pat).process : weight_process(pat);
      out << io::process_to_json(proc, pat, g).dump(2) << '\n';
    }
    return Exit::ok;
  }
  if (f.gk) {
    if (f.p.size() != 2 || f.n <= 0 || f.k < 0) throw UsageError("--gk: needs -n, -p P,Q and -k");
    if (!gk_valid(f.n, f.p[0], f.p[1], f.k)) throw UsageError("--gk: invalid (n, p, q, k)");
    out << io::write_graph(build_gk(f.n, f.p[0], f.p[1], f.k));
    return Exit::ok;
  }
  if (f.gadget) {
    const auto h = io::parse_graph(read_all(f.input, in));
    const Pattern pat = make_pattern(h.d(), h.n(), f.p, f.directed, err);
    out << io::write_graph(build_lower_bound_gadget(h, pat));
    return Exit::ok;
  }
  if (f.a.empty() || f.a.size() != f.b.size()) throw UsageError("--extremal: needs --a and --b of equal length");
  out << io::families_to_json(build_extremal(f.a, f.b)).dump(2) << '\n';
  return Exit::ok;
}

// ---------------------------------------------------------------- closure

int run_closure(const Flags& f, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto g = io::parse_graph(read_all(f.input, in));
  const Pattern pat = make_pattern(g.d(), g.n(), f.p, f.directed, err);
  if (f.order != "lex" && f.order != "random") throw UsageError("--order: expected lex or random");
  std::vector<std::uint64_t> order(g.cells());
  std::iota(order.begin(), order.end(), std::uint64_t{0});
  if (f.order == "random") {
    std::mt19937_64 rng(f.seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  const auto res = greedy_closure(g, pat, order);
  const bool complete = res.closure.is_complete();
  if (f.json) {
    out << io::process_to_json(res.process, pat, g).dump(2) << '\n';
  } else {
    out << "pattern: " << describe(pat) << '\n'
        << "edges: " << g.edge_count() << '\n'
        << "added: " << res.process.size() << '\n'
        << "closure: " << (complete ? "complete" : "incomplete") << " (" << res.closure.edge_count() << " of "
        << g.cells() << ")\n";
  }
  return complete ? Exit::ok : Exit::verification_failed;
}

// ---------------------------------------------------------------- verify

int run_verify(const Flags& f, std::istream& in, std::ostream& out, std::ostream& err) {
  const int modes = count_set({f.process, f.weak, f.strong});
  if (modes > 1) throw UsageError("verify: choose one of --process --weak --strong");
  const auto text = read_all(f.input, in);

  if (f.weak || f.strong) {
    const auto g = io::parse_graph(text);
    const Pattern pat = make_pattern(g.d(), g.n(), f.p, f.directed, err);
    const bool pass = f.weak ? weakly_saturated(g, pat) : strong_sat_check(g, pat, f.h_free);
    out << (f.weak ? "weakly saturated: " : (f.h_free ? "strongly saturated and H-free: " : "strongly saturated: "))
        << (pass ? "yes" : "no") << '\n';
    return pass ? Exit::ok : Exit::verification_failed;
  }

  const auto j = io::Json::parse(text);
  const Pattern pat = io::pattern_from_json(j);
  const auto proc = io::process_from_json(j);
  DPartiteGraph g(pat.d(), pat.n());
  if (!f.graph_file.empty()) {
    std::ifstream gf(f.graph_file);
    if (!gf) throw UsageError("--graph: cannot open " + f.graph_file);
    g = io::read_graph(gf);
  } else if (j.contains("graph")) {
    g = io::parse_graph(j.at("graph").get<std::string>());
  } else {
    throw UsageError("--process: document has no \"graph\" field; pass --graph");
  }
  const auto v = verify_process(g, proc, pat);
  if (v.accepted) {
    out << "accepted: " << proc.size() << " steps complete the lattice\n";
    return Exit::ok;
  }
  out << "rejected at step " << v.step << ": " << to_string(v.reason);
  if (!v.detail.empty()) out << " (" << v.detail << ")";
  out << '\n';
  return Exit::verification_failed;
}

// ---------------------------------------------------------------- families

int run_families(const Flags& f, std::istream& in, std::ostream& out, std::ostream& err) {
  const bool build = !f.a.empty() || !f.b.empty();
  if (build && f.from_process) throw UsageError("families: --a/--b and --from-process are exclusive");
  CapRule rule;
  if (f.rule == "permuted") {
    rule = CapRule::permuted;
  } else if (f.rule == "identity") {
    rule = CapRule::identity;
  } else {
    throw UsageError("--rule: expected permuted or identity");
  }

  FamilyPair fp;
  std::optional<BigInt> bound;
  if (build) {
    if (f.a.size() != f.b.size()) throw UsageError("--a/--b: lengths differ");
    fp = build_extremal(f.a, f.b);
    bound = q_enumerate(f.a, f.b).value;
  } else if (f.from_process) {
    const auto j = io::Json::parse(read_all(f.input, in));
    const Pattern pat = io::pattern_from_json(j);
    if (!j.contains("graph")) throw UsageError("--from-process: document has no \"graph\" field");
    fp = saturation_to_families(io::parse_graph(j.at("graph").get<std::string>()), io::process_from_json(j), pat);
    bound = q_enumerate(fp.caps_a, fp.caps_b).value;
  } else {
    fp = io::families_from_json(io::Json::parse(read_all(f.input, in)));
  }

  const auto v = verify_conditions(fp, rule, f.non_skew);
  std::ostream& report = f.json ? err : out;
  report << "h = " << fp.size() << '\n';
  if (bound) report << "Q = " << *bound << " (enumerated)\n";
  if (v.ok) {
    report << "conditions: ok\n";
  } else {
    report << "conditions: condition " << v.condition << " fails at i=" << v.i;
    if (v.j) report << " j=" << v.j;
    if (!v.detail.empty()) report << " (" << v.detail << ")";
    report << '\n';
  }
  if (f.json) out << io::families_to_json(fp).dump(2) << '\n';
  return v.ok ? Exit::ok : Exit::verification_failed;
}

// ---------------------------------------------------------------- search / table

SearchOptions search_options(const Flags& f) {
  SearchOptions o;
  o.budget = f.budget;
  o.workers = std::max(1U, f.workers);
  o.symmetry_pruning = f.symmetry;
  o.require_h_free = f.h_free;
  return o;
}

int run_search(const Flags& f, std::ostream& out, std::ostream& err) {
  if (f.weak && f.strong) throw UsageError("search: --weak and --strong are exclusive");
  if (f.h_free && !f.strong) throw UsageError("--h-free: only with --strong");
  const Pattern pat = make_pattern(f.d, f.n, f.p, f.directed, err);
  const auto opts = search_options(f);
  const auto cert = f.strong ? min_strong_saturation(pat, opts) : min_weak_saturation(pat, opts);
  out << io::certificate_to_json(cert).dump(2) << '\n';
  return cert.conclusive ? Exit::ok : Exit::inconclusive;
}

int run_table(const Flags& f, std::ostream& out) {
  if (f.conjecture == f.weak) throw UsageError("table: choose one of --conjecture --weak");
  const auto [lo, hi] = parse_range(f.n_range);
  const auto opts = search_options(f);
  if (f.conjecture) {
    if (f.p.size() != 2) throw UsageError("--conjecture: needs -p P,Q");
    if (f.directed) throw UsageError("--directed: not used by --conjecture");
    out << conjecture_csv(conjecture_table(f.p[0], f.p[1], lo, hi, opts));
  } else {
    if (f.d <= 0) throw UsageError("--weak: needs -d");
    out << weak_grid_csv(weak_grid(f.d, lo, hi, f.directed ? Orientation::directed : Orientation::undirected, opts));
  }
  return Exit::ok;
}

// ---------------------------------------------------------------- flags

void add_pattern(CLI::App* app, Flags& f, bool with_d = true, bool with_n = true) {
  if (with_d) app->add_option("-d", f.d, "number of classes (defaults to the length of -p)");
  if (with_n) app->add_option("-n", f.n, "labels per class");
  app->add_option("-p", f.p, "part sizes, comma separated")->delimiter(',');
  app->add_flag("--directed", f.directed, "keep p in the given order and allow only the identity orientation");
}

void add_input(CLI::App* app, Flags& f) {
  app->add_option("-i,--input", f.input, "input file, '-' for stdin")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Weak and strong saturation in d-partite d-uniform hypergraphs"};
  app.name("wsat_cli");
  app.require_subcommand(1);

  auto* formula = app.add_subcommand("formula", "evaluate exact counts");
  add_pattern(formula, f);
  formula->add_flag("--w", f.w, "weak saturation number n^d - q_n(p) (directed formula with --directed)");
  formula->add_flag("--qn", f.qn, "q_n(p): tuples whose sorted coordinates dominate p");
  formula->add_flag("--incexc", f.incexc, "weak saturation number by inclusion-exclusion over the L sets");
  formula->add_flag("--bounds", f.bounds, "crude lower and upper bounds on the weak saturation number");
  formula->add_flag("--q", f.q, "Q(a, b), the permuted Two Families bound (needs --a --b)");
  formula->add_flag("--identity", f.identity, "check Q(n - p, 1) = q_n(p)");
  formula->add_flag("--gk-count", f.gk_count, "edge count of G^k_{p,q} (needs -n, -p P,Q, -k)");
  formula->add_option("--a", f.a, "caps a, comma separated")->delimiter(',');
  formula->add_option("--b", f.b, "caps b, comma separated")->delimiter(',');
  formula->add_option("-k", f.k, "block size for --gk-count");
  formula->add_option("--method", f.method, "closed-form or enumerated")->capture_default_str();

  auto* construct = app.add_subcommand("construct", "emit a graph, process or family file");
  add_pattern(construct, f);
  add_input(construct, f);
  construct->add_flag("--g0", f.g0, "the extremal graph G0 (directed box version with --directed)");
  construct->add_flag("--gk", f.gk, "the strong saturation graph G^k_{p,q} (needs -n, -p P,Q, -k)");
  construct->add_flag("--gadget", f.gadget, "the lower-bound gadget around the input graph H (needs -p)");
  construct->add_flag("--extremal", f.extremal, "the extremal family pair for --a --b, as JSON");
  construct->add_flag("--with-process", f.with_process, "with --g0: emit a process document embedding the graph");
  construct->add_option("-k", f.k, "block size for --gk");
  construct->add_option("--a", f.a, "caps a")->delimiter(',');
  construct->add_option("--b", f.b, "caps b")->delimiter(',');

  auto* closure = app.add_subcommand("closure", "greedy weak saturation closure of a graph");
  add_pattern(closure, f, false, false);
  add_input(closure, f);
  closure->add_option("--order", f.order, "scan order: lex or random")->capture_default_str();
  closure->add_option("--seed", f.seed, "seed for --order random")->capture_default_str();
  closure->add_flag("--json", f.json, "emit the closure process as JSON");

  auto* verify = app.add_subcommand("verify", "check a saturation process or a saturation property");
  add_pattern(verify, f, false, false);
  add_input(verify, f);
  verify->add_flag("--process", f.process, "replay a process document (default)");
  verify->add_option("--graph", f.graph_file, "base graph for --process when the document has none");
  verify->add_flag("--weak", f.weak, "input graph is weakly saturated");
  verify->add_flag("--strong", f.strong, "input graph is strongly saturated");
  verify->add_flag("--h-free", f.h_free, "with --strong: also require no copy in the graph");

  auto* families = app.add_subcommand("families", "build or check Two Families pairs");
  add_input(families, f);
  families->add_option("--a", f.a, "build the extremal pair for caps a")->delimiter(',');
  families->add_option("--b", f.b, "build the extremal pair for caps b")->delimiter(',');
  families->add_flag("--from-process", f.from_process, "convert a process document (with graph) to a pair");
  families->add_option("--rule", f.rule, "cap rule: permuted or identity")->capture_default_str();
  families->add_flag("--non-skew", f.non_skew, "require A_i to meet B_j for every i != j");
  families->add_flag("--json", f.json, "emit the pair as JSON; the verdict goes to stderr");

  auto* search = app.add_subcommand("search", "exhaustive minimum saturated graph (n^d <= 64)");
  add_pattern(search, f);
  search->add_flag("--weak", f.weak, "weak saturation (default)");
  search->add_flag("--strong", f.strong, "strong saturation");
  search->add_flag("--h-free", f.h_free, "with --strong: require the graph to be H-free");
  search->add_flag("--symmetry", f.symmetry, "skip candidates that are not minimal in their symmetry orbit");
  search->add_option("--workers", f.workers, "worker threads")->envname("WSAT_WORKERS")->capture_default_str();
  search->add_option("--budget", f.budget, "maximum candidates examined")->capture_default_str();

  auto* table = app.add_subcommand("table", "oracle against formula tables as CSV");
  table->add_option("-d", f.d, "number of classes for --weak");
  table->add_option("-p", f.p, "P,Q for --conjecture")->delimiter(',');
  table->add_flag("--directed", f.directed, "directed mode for --weak");
  table->add_flag("--conjecture", f.conjecture, "strong saturation against the conjectured value");
  table->add_flag("--weak", f.weak, "weak saturation against the closed form, every p");
  table->add_option("--n-range", f.n_range, "LO..HI");
  table->add_flag("--symmetry", f.symmetry, "symmetry pruning in the oracle");
  table->add_option("--workers", f.workers, "worker threads")->envname("WSAT_WORKERS")->capture_default_str();
  table->add_option("--budget", f.budget, "maximum candidates per row")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Exit::ok : Exit::usage;
  }

  try {
    if (*formula) return run_formula(f, out, err);
    if (*construct) return run_construct(f, in, out, err);
    if (*closure) return run_closure(f, in, out, err);
    if (*verify) return run_verify(f, in, out, err);
    if (*families) return run_families(f, in, out, err);
    if (*search) return run_search(f, out, err);
    return run_table(f, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (const io::Json::exception& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  }
  return Exit::usage;
}

}  // namespace wsat::cli
