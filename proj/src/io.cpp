#include "wsat/io.hpp"

#include <sstream>
#include <stdexcept>

namespace wsat::io {

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

std::string write_graph(const DPartiteGraph& g) {
  std::ostringstream out;
  out << g.d() << ' ' << g.n() << '\n';
  for (const Edge& e : g.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
  return out.str();
}

DPartiteGraph read_graph(std::istream& in) {
  std::string line;
  std::optional<DPartiteGraph> g;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(strip_comment(line));
    std::vector<long> values;
    long v = 0;
    while (fields >> v) values.push_back(v);
    if (!fields.eof()) throw std::invalid_argument("graph text line " + std::to_string(line_no) + ": not an integer list");
    if (values.empty()) continue;
    if (!g) {
      if (values.size() != 2) throw std::invalid_argument("graph text: header must be 'd n'");
      g.emplace(static_cast<int>(values[0]), static_cast<int>(values[1]));
      continue;
    }
    if (static_cast<int>(values.size()) != g->d())
      throw std::invalid_argument("graph text line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(g->d()) + " labels");
    Edge e(values.begin(), values.end());
    if (!g->lattice().valid(e))
      throw std::invalid_argument("graph text line " + std::to_string(line_no) + ": label outside 1..n");
    g->add(e);
  }
  if (!g) throw std::invalid_argument("graph text: missing 'd n' header");
  return *g;
}

DPartiteGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

Json process_to_json(const SaturationProcess& proc, const Pattern& pattern, const std::optional<DPartiteGraph>& base) {
  Json steps = Json::array();
  for (const auto& s : proc.steps)
    steps.push_back({{"edge", s.edge}, {"classes", s.witness.classes}, {"orientation", s.witness.orientation}});
  Json j = {{"d", pattern.d()},
            {"n", pattern.n()},
            {"p", pattern.p()},
            {"mode", to_string(pattern.mode())},
            {"steps", steps}};
  if (base) j["graph"] = write_graph(*base);
  return j;
}

SaturationProcess process_from_json(const Json& j) {
  SaturationProcess proc;
  for (const auto& s : j.at("steps")) {
    ProcessStep step;
    step.edge = s.at("edge").get<Edge>();
    step.witness.classes = s.at("classes").get<std::vector<std::vector<int>>>();
    step.witness.orientation = s.at("orientation").get<std::vector<int>>();
    proc.steps.push_back(std::move(step));
  }
  return proc;
}

Pattern pattern_from_json(const Json& j) {
  return Pattern(j.at("d").get<int>(), j.at("n").get<int>(), j.at("p").get<std::vector<int>>(),
                 orientation_from_string(j.value("mode", std::string("undirected"))));
}

namespace {

Json set_to_json(const ElementSet& s) {
  Json out = Json::array();
  for (const Element& e : s) out.push_back({e.part, e.label});
  return out;
}

ElementSet set_from_json(const Json& j) {
  std::vector<Element> elems;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("family JSON: elements are [part, label]");
    elems.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return make_set(std::move(elems));
}

}  // namespace

Json families_to_json(const FamilyPair& fp) {
  Json pairs = Json::array();
  for (std::size_t i = 0; i < fp.size(); ++i) pairs.push_back({{"A", set_to_json(fp.A[i])}, {"B", set_to_json(fp.B[i])}});
  return {{"parts", fp.part_sizes}, {"caps_a", fp.caps_a}, {"caps_b", fp.caps_b}, {"pairs", pairs}};
}

FamilyPair families_from_json(const Json& j) {
  FamilyPair fp;
  fp.part_sizes = j.at("parts").get<std::vector<int>>();
  fp.caps_a = j.at("caps_a").get<std::vector<int>>();
  fp.caps_b = j.at("caps_b").get<std::vector<int>>();
  for (const auto& pr : j.at("pairs")) {
    fp.A.push_back(set_from_json(pr.at("A")));
    fp.B.push_back(set_from_json(pr.at("B")));
  }
  return fp;
}

Json certificate_to_json(const SearchCertificate& c) {
  Json j = {{"kind", to_string(c.kind)},
            {"mode", to_string(c.pattern.mode())},
            {"h_free", c.h_free},
            {"d", c.pattern.d()},
            {"n", c.pattern.n()},
            {"p", c.pattern.p()},
            {"conclusive", c.conclusive},
            {"lower_bound", c.lower_bound},
            {"checked", c.checked}};
  j["minimum"] = c.minimum ? Json(*c.minimum) : Json(nullptr);
  j["upper_bound"] = c.upper_bound ? Json(*c.upper_bound) : Json(nullptr);
  j["witness"] = c.witness ? Json(write_graph(*c.witness)) : Json(nullptr);
  return j;
}

SearchCertificate certificate_from_json(const Json& j) {
  SearchCertificate c(pattern_from_json(j));
  const auto kind = j.at("kind").get<std::string>();
  if (kind != "weak" && kind != "strong") throw std::invalid_argument("certificate: unknown kind '" + kind + "'");
  c.kind = kind == "weak" ? SaturationKind::weak : SaturationKind::strong;
  c.h_free = j.at("h_free").get<bool>();
  c.conclusive = j.at("conclusive").get<bool>();
  c.lower_bound = j.at("lower_bound").get<long>();
  c.checked = j.at("checked").get<std::uint64_t>();
  if (!j.at("minimum").is_null()) c.minimum = j["minimum"].get<long>();
  if (!j.at("upper_bound").is_null()) c.upper_bound = j["upper_bound"].get<long>();
  if (!j.at("witness").is_null()) c.witness = parse_graph(j["witness"].get<std::string>());
  return c;
}

}  // namespace wsat::io
