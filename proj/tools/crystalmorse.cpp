// Command-line front end: generate crystal graphs, compute Mobius values,
// scan for anomalous intervals and export diagrams.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "crystalmorse/crystal.hpp"
#include "crystalmorse/errors.hpp"
#include "crystalmorse/morse.hpp"
#include "crystalmorse/poset.hpp"
#include "crystalmorse/relations.hpp"
#include "crystalmorse/scan.hpp"
#include "crystalmorse/serialize.hpp"

using namespace crystalmorse;
using json = nlohmann::json;

namespace {

struct GraphSource {
  std::string type;
  int rank = 0;
  std::string weight;
  std::string graph_file;

  void attach(CLI::App* app) {
    app->add_option("--type", type, "Cartan family A, B, C or D");
    app->add_option("--rank", rank, "Rank of the root system");
    app->add_option("--weight", weight, "Highest weight as a partition, e.g. 3,1");
    app->add_option("--graph", graph_file, "Read the graph from a JSON file instead");
  }

  CrystalGraph load() const {
    if (!graph_file.empty()) return load_graph(graph_file);
    if (type.empty() || rank <= 0 || weight.empty())
      throw InvalidArgument("either --graph or all of --type, --rank and --weight are required");
    std::size_t cap = kDefaultVertexCap;
    if (const char* env = std::getenv("CRYSTALMORSE_CAP")) {
      try {
        cap = std::stoull(env);
      } catch (const std::exception&) {
        throw InvalidArgument(std::string("CRYSTALMORSE_CAP is not a number: ") + env);
      }
    }
    Weight lambda;
    for (const auto& part : CLI::detail::split(weight, ','))
      lambda.push_back(std::stoi(part));
    return generate(CartanType(parse_family(type), rank), lambda, cap);
  }
};

// One endpoint given by id, word or type-A style tableau.
struct VertexRef {
  std::optional<VertexId> id;
  std::string word;
  std::string tableau;

  void attach(CLI::App* app, const std::string& name) {
    app->add_option("--" + name, id, "Vertex id of " + name);
    app->add_option("--" + name + "-word", word, "Word of " + name + ", e.g. 3,-3,1,2");
    app->add_option("--" + name + "-tableau", tableau, "Tableau of " + name + ", rows split by '/'");
  }

  bool given() const { return id || !word.empty() || !tableau.empty(); }

  VertexId resolve(const CrystalGraph& g, const std::string& name) const {
    if (id) {
      if (*id >= g.size()) throw InvalidArgument(name + " = " + std::to_string(*id) + " is not a vertex");
      return *id;
    }
    Word w;
    if (!word.empty())
      w = parse_word(word);
    else if (!tableau.empty())
      w = word_from_tableau(parse_tableau(tableau));
    else
      throw InvalidArgument("vertex " + name + " is required");
    const auto x = g.find(w);
    if (!x) throw InvalidArgument("no vertex with word " + word_to_string(w));
    return *x;
  }
};

void emit(const std::string& text, const std::string& out) {
  if (out.empty())
    std::cout << text << "\n";
  else
    save_text(out, text + "\n");
}

json interval_json(const Interval& iv) {
  json members = json::array();
  json edges = json::array();
  for (LocalId k = 0; k < iv.size(); ++k) {
    members.push_back(iv.member(k));
    for (const Cover& c : iv.up(k))
      edges.push_back({{"from", iv.member(k)}, {"to", iv.member(c.target)}, {"color", c.color}});
  }
  return {{"u", iv.bottom()}, {"v", iv.top()}, {"rank", iv.rank()}, {"members", members}, {"edges", edges}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crystal posets, Mobius functions and lexicographic discrete Morse functions"};
  app.require_subcommand(1);

  GraphSource gen_src;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a crystal graph and write it as JSON");
  gen_src.attach(gen);
  gen->add_option("-o,--output", gen_out, "Output file");

  GraphSource mob_src;
  VertexRef mob_u, mob_v;
  std::string method = "both";
  auto* mob = app.add_subcommand("mobius", "Mobius value of an interval");
  mob_src.attach(mob);
  mob_u.attach(mob, "u");
  mob_v.attach(mob, "v");
  mob->add_option("--method", method, "brute, morse or both")
      ->check(CLI::IsMember({"brute", "morse", "both"}));

  GraphSource scan_src;
  ScanConfig scan_cfg;
  std::string scan_mode = "anomalies_only", scan_out;
  auto* scn = app.add_subcommand("scan", "Sweep bounded-rank intervals for anomalous Mobius values");
  scan_src.attach(scn);
  scn->add_option("--max-rank", scan_cfg.max_interval_rank, "Largest interval rank");
  scn->add_option("--mode", scan_mode, "brute_only, cross_check or anomalies_only");
  scn->add_option("--workers", scan_cfg.workers, "Worker threads");
  scn->add_option("--budget", scan_cfg.interval_budget, "Stop after this many intervals (0: none)");
  scn->add_option("--chain-cap", scan_cfg.morse.chain_cap, "Chains examined before sampling");
  scn->add_option("-o,--output", scan_out, "Output file");

  GraphSource wit_src;
  VertexRef wit_u, wit_v;
  std::string wit_out;
  auto* wit = app.add_subcommand("witness", "Minimal anomalous subinterval and its operator words");
  wit_src.attach(wit);
  wit_u.attach(wit, "u");
  wit_v.attach(wit, "v");
  wit->add_option("-o,--output", wit_out, "Output file");

  GraphSource lat_src;
  auto* lat = app.add_subcommand("lattice", "Check whether the crystal poset is a lattice");
  lat_src.attach(lat);

  GraphSource exp_src;
  VertexRef exp_u, exp_v;
  std::string format = "dot", exp_out;
  auto* exp = app.add_subcommand("export", "Export a graph or an interval as DOT or JSON");
  exp_src.attach(exp);
  exp_u.attach(exp, "u");
  exp_v.attach(exp, "v");
  exp->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  exp->add_option("-o,--output", exp_out, "Output file");

  GraphSource cls_src;
  std::string cls_out;
  auto* cls = app.add_subcommand("classify", "Classify the relation at every pair of operators");
  cls_src.attach(cls);
  cls->add_option("-o,--output", cls_out, "Output file");

  GraphSource ax_src;
  auto* ax = app.add_subcommand("axioms", "Verify the Stembridge axioms");
  ax_src.attach(ax);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      const auto g = gen_src.load();
      if (!gen_out.empty()) save_text(gen_out, graph_to_json(g) + "\n");
      std::cout << g.cartan().name() << " " << word_to_string(g.lambda()) << ": " << g.size()
                << " vertices, " << g.edge_count() << " edges\n";
    } else if (*mob) {
      const auto g = mob_src.load();
      const Interval iv(g, mob_u.resolve(g, "u"), mob_v.resolve(g, "v"));
      json doc = {{"u", iv.bottom()}, {"v", iv.top()}, {"rank", iv.rank()}};
      std::optional<std::int64_t> brute;
      if (method != "morse") {
        brute = mobius_brute(iv);
        doc["mobius_brute"] = *brute;
      }
      if (method != "brute") {
        const auto res = morse_mobius(iv);
        doc["predicted_mobius"] = res.predicted_mobius;
        doc["certified"] = to_string(res.certified);
        doc["fully_covered_count"] = res.fully_covered_count;
        if (res.fully_covered_chain) doc["chain_labels"] = res.fully_covered_chain->labels;
        json js = json::array();
        for (const auto& j : res.j_intervals) js.push_back({j.lo, j.hi});
        doc["j_intervals"] = js;
        if (brute) doc["agree"] = *brute == res.predicted_mobius;
      }
      std::cout << doc.dump(2) << "\n";
    } else if (*scn) {
      scan_cfg.mode = parse_scan_mode(scan_mode);
      const auto g = scan_src.load();
      const auto report = scan(g, scan_cfg);
      emit(scan_report_to_json(report), scan_out);
      for (const auto& r : report.records)
        if (r.disagreement) {
          std::cerr << "error: brute and Morse values disagree on a certified interval [" << r.u
                    << ", " << r.v << "]\n";
          return 3;
        }
    } else if (*wit) {
      const auto g = wit_src.load();
      const auto w = witness(g, wit_u.resolve(g, "u"), wit_v.resolve(g, "v"));
      emit(witness_to_json(g, w), wit_out);
    } else if (*lat) {
      std::cout << lattice_to_json(lattice_check(lat_src.load())) << "\n";
    } else if (*exp) {
      const auto g = exp_src.load();
      if (exp_u.given() || exp_v.given()) {
        const Interval iv(g, exp_u.resolve(g, "u"), exp_v.resolve(g, "v"));
        emit(format == "dot" ? to_dot(iv) : interval_json(iv).dump(2), exp_out);
      } else {
        emit(format == "dot" ? to_dot(g) : graph_to_json(g), exp_out);
      }
    } else if (*cls) {
      emit(relations_to_json(classify_all(cls_src.load())), cls_out);
    } else if (*ax) {
      const auto report = verify_stembridge_axioms(ax_src.load());
      std::cout << axiom_report_to_json(report) << "\n";
      return report.clean() ? 0 : 4;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
