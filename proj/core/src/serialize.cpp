#include "crystalmorse/serialize.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "crystalmorse/errors.hpp"

namespace crystalmorse {

using json = nlohmann::ordered_json;

namespace {

json cartan_json(const CartanType& t) {
  return {{"family", std::string(1, family_char(t.family()))}, {"rank", t.rank()}};
}

json intervals_json(const std::vector<SkippedInterval>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back({s.lo, s.hi});
  return out;
}

json certification_json(Certification c) {
  switch (c) {
    case Certification::Yes: return true;
    case Certification::No: return false;
    case Certification::Sampled: return "sampled";
  }
  return nullptr;
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({{"from", e.from}, {"to", e.to}, {"color", e.color}});
  return out;
}

json snapshot_json(const IntervalSnapshot& s) {
  json chains = json::array();
  for (const auto& labels : s.chain_labels)
    chains.push_back({{"labels", labels}, {"operator", operator_word(labels)}});
  return {{"u", s.u},
          {"v", s.v},
          {"rank", s.rank},
          {"mobius", s.mobius},
          {"members", s.members},
          {"edges", edges_json(s.edges)},
          {"chains", chains}};
}

}  // namespace

std::string graph_to_json(const CrystalGraph& g) {
  json vertices = json::array();
  for (VertexId x = 0; x < g.size(); ++x)
    vertices.push_back({{"id", x}, {"word", g.word(x)}, {"weight", g.weight(x)}});
  json doc = {{"cartan", cartan_json(g.cartan())},
              {"lambda", g.lambda()},
              {"vertices", std::move(vertices)},
              {"edges", edges_json(g.edges())}};
  return doc.dump();
}

CrystalGraph graph_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
    const CartanType t(parse_family(doc.at("cartan").at("family").get<std::string>()),
                       doc.at("cartan").at("rank").get<int>());
    const Weight lambda = doc.at("lambda").get<Weight>();
    const auto& vs = doc.at("vertices");
    std::vector<Word> words(vs.size());
    std::vector<char> seen(vs.size(), 0);
    for (const auto& v : vs) {
      const auto id = v.at("id").get<std::size_t>();
      if (id >= words.size() || seen[id]) throw IoError("vertex ids must be 0..n-1 without repeats");
      seen[id] = 1;
      words[id] = v.at("word").get<Word>();
    }
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges"))
      edges.push_back({e.at("from").get<VertexId>(), e.at("to").get<VertexId>(), e.at("color").get<Color>()});
    CrystalGraph g = CrystalGraph::from_parts(t, lambda, words, edges);
    for (const auto& v : vs)
      if (v.contains("weight") &&
          v.at("weight").get<Weight>() != g.weight(v.at("id").get<VertexId>()))
        throw IoError("stored weight disagrees with the word of vertex " +
                      std::to_string(v.at("id").get<VertexId>()));
    return g;
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed graph JSON: ") + e.what());
  }
}

CrystalGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return graph_from_json(ss.str());
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
  if (!out) throw IoError("write failed for " + path);
}

std::string morse_result_to_json(const MorseResult& r) {
  json doc = {{"u", r.u}, {"v", r.v}, {"rank", r.rank}};
  if (r.fully_covered_chain) doc["chain_labels"] = r.fully_covered_chain->labels;
  doc["j_intervals"] = intervals_json(r.j_intervals);
  doc["predicted_mobius"] = r.predicted_mobius;
  doc["certified"] = certification_json(r.certified);
  doc["fully_covered_count"] = r.fully_covered_count;
  return doc.dump(2);
}

std::string relations_to_json(const std::vector<RelationRecord>& records) {
  json out = json::array();
  for (const auto& r : records) {
    json rec = {{"x", r.x}, {"i", r.i}, {"j", r.j}, {"kind", to_string(r.kind.tag)}};
    if (r.kind.orientation) rec["orientation"] = r.kind.orientation;
    rec["witness_vertex_ids"] = r.witness;
    out.push_back(std::move(rec));
  }
  return out.dump(2);
}

std::string axiom_report_to_json(const AxiomReport& r) {
  json v = json::array();
  for (const auto& a : r.violations)
    v.push_back({{"axiom", a.axiom}, {"x", a.x}, {"i", a.i}, {"j", a.j}, {"detail", a.detail}});
  json doc = {{"clean", r.clean()},
              {"s6_prime_check", r.s6_prime_equality_only ? "equality_only" : "value"},
              {"violations", v}};
  return doc.dump(2);
}

std::string scan_report_to_json(const ScanReport& r) {
  json records = json::array();
  for (const auto& a : r.records) {
    json rec = {{"u", a.u}, {"v", a.v}, {"rank", a.rank}, {"mobius_brute", a.mobius_brute}};
    rec["predicted_mobius"] = a.predicted_mobius ? json(*a.predicted_mobius) : json(nullptr);
    rec["certified"] = a.certified ? certification_json(*a.certified) : json(nullptr);
    rec["disagreement"] = a.disagreement;
    rec["witness"] = a.witness ? snapshot_json(*a.witness) : json(nullptr);
    records.push_back(std::move(rec));
  }
  json doc = {
      {"schema_version", ScanReport::kSchemaVersion},
      {"cartan", cartan_json(r.cartan)},
      {"lambda", r.lambda},
      {"max_interval_rank", r.config.max_interval_rank},
      {"mode", to_string(r.config.mode)},
      {"truncated", r.truncated},
      {"stats",
       {{"intervals", r.stats.intervals},
        {"certified", r.stats.certified},
        {"sampled", r.stats.sampled},
        {"uncertified", r.stats.uncertified},
        {"max_fully_covered_on_certified", r.stats.max_fully_covered_on_certified}}},
      {"records", records}};
  return doc.dump(2);
}

std::string witness_to_json(const CrystalGraph& g, const WitnessReport& w) {
  auto with_labels = [&](const IntervalSnapshot& s) {
    json j = snapshot_json(s);
    json labels = json::object();
    for (VertexId x : s.members) labels[std::to_string(x)] = vertex_label(g, x);
    j["vertex_labels"] = labels;
    return j;
  };
  json unexplained = json::array();
  for (const auto& s : w.unexplained) unexplained.push_back(with_labels(s));
  json doc = {{"minimal", with_labels(w.minimal)}, {"unexplained_relations", unexplained}};
  return doc.dump(2);
}

std::string lattice_to_json(const std::optional<LatticeWitness>& w) {
  if (!w) return json{{"lattice", true}}.dump(2);
  json doc = {{"lattice", false},
              {"x", w->x},
              {"y", w->y},
              {"bound_kind", w->upper ? "minimal_upper_bounds" : "maximal_lower_bounds"},
              {"bounds", w->bounds}};
  return doc.dump(2);
}

std::string vertex_label(const CrystalGraph& g, VertexId x) {
  const Word w = g.word(x);
  if (g.cartan().family() != Family::A) return word_to_string(w);
  std::string out;
  for (const auto& row : tableau_from_word(w, g.lambda())) {
    if (!out.empty()) out += '/';
    out += word_to_string(row);
  }
  return out;
}

namespace {

const char* kPalette[] = {"blue", "red", "darkgreen", "cyan3", "orange", "purple", "brown", "magenta"};

std::string dot_from(const CrystalGraph& g, const std::vector<VertexId>& nodes,
                     const std::vector<Edge>& edges) {
  std::ostringstream out;
  out << "digraph crystal {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
  for (VertexId x : nodes) out << "  v" << x << " [label=\"" << vertex_label(g, x) << "\"];\n";
  for (const Edge& e : edges)
    out << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.color << "\", color="
        << kPalette[(e.color - 1) % 8] << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace

std::string to_dot(const CrystalGraph& g) {
  std::vector<VertexId> nodes(g.size());
  for (VertexId x = 0; x < g.size(); ++x) nodes[x] = x;
  return dot_from(g, nodes, g.edges());
}

std::string to_dot(const Interval& iv) {
  std::vector<VertexId> nodes = iv.members();
  std::sort(nodes.begin(), nodes.end());
  return dot_from(iv.graph(), nodes, iv.edges());
}

}  // namespace crystalmorse
