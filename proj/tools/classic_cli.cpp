#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "classic/fuzz.hpp"
#include "classic/graph.hpp"
#include "classic/kb.hpp"
#include "classic/oracle.hpp"
#include "classic/reduction.hpp"
#include "classic/subsume.hpp"
#include "classic/syntax.hpp"

namespace {

using namespace classic;

constexpr int kUsage = 2;
constexpr int kInput = 3;

struct Options {
  std::string kb_path;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::uint64_t world_seed = 0;
  std::size_t cases = 100;
  std::size_t max_domain = 2;
  std::vector<std::string> descriptions;
  std::string cnf_path;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw KbError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

KnowledgeBase load_kb(const Options& o) { return o.kb_path.empty() ? KnowledgeBase{} : parse_kb(read_file(o.kb_path)); }

void emit(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int run_parse(const Options& o) {
  emit(to_json(parse_description(o.descriptions.at(0), load_kb(o))));
  return 0;
}

int run_graph(const Options& o, bool canonical) {
  const KnowledgeBase kb = load_kb(o);
  const Description d = expand(parse_description(o.descriptions.at(0), kb), kb);
  emit(to_json(canonical ? canonical_graph(d, kb.context()) : translate(d)));
  return 0;
}

int run_subsumes(const Options& o) {
  const KnowledgeBase kb = load_kb(o);
  const auto ds = parse_descriptions(o.descriptions, kb);
  const bool yes = subsumes(ds.at(0), ds.at(1), kb);
  std::cout << (yes ? "yes" : "no") << "\n";
  return yes ? 0 : 1;
}

int run_classify(const Options& o) {
  if (o.kb_path.empty()) throw CLI::RequiredError("--kb");
  emit(to_json(classify(load_kb(o))));
  return 0;
}

int run_countermodel(const Options& o) {
  const KnowledgeBase kb = load_kb(o);
  const auto ds = parse_descriptions(o.descriptions, kb);
  Expander ex(kb);
  const Description d = ex.expand(ds.at(0));
  const Description c = ex.expand(ds.at(1));
  const CanonContext ctx = kb.context();
  const DescriptionGraph g = canonical_graph(c, ctx);
  if (subsumes_graph(d, g)) {
    std::cerr << "error: the first description subsumes the second; no counter-model exists\n";
    return 1;
  }
  Vocabulary v;
  v.add(d);
  v.add(c);
  const GraphicalWorld gw = construct_graphical_world(g, &d, v, ctx.lattice, o.world_seed);
  nlohmann::ordered_json j;
  j["distinguished"] = gw.distinguished;
  j["world"] = to_json(gw.world);
  emit(j);
  return 0;
}

int run_reduce(const Options& o) {
  emit(to_json(demonstrate_incompleteness(parse_dimacs(read_file(o.cnf_path)))));
  return 0;
}

int run_fuzz_cmd(const Options& o) {
  const FuzzSummary s = run_fuzz(o.seed, o.cases, 50, o.max_domain);
  emit(to_json(s));
  return s.soundness_violations + s.completeness_failures + s.incoherent_with_model == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structural subsumption for a CLASSIC-style description logic"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text"}));

  auto add_kb = [&](CLI::App* sub) { sub->add_option("--kb", o.kb_path, "Knowledge-base file"); };

  auto* parse = app.add_subcommand("parse", "Print the syntax tree of a description");
  parse->add_option("description", o.descriptions)->required()->expected(1);
  add_kb(parse);
  auto* graph = app.add_subcommand("graph", "Print the description graph");
  graph->add_option("description", o.descriptions)->required()->expected(1);
  add_kb(graph);
  auto* canon = app.add_subcommand("canon", "Print the canonical description graph");
  canon->add_option("description", o.descriptions)->required()->expected(1);
  add_kb(canon);
  auto* subs = app.add_subcommand("subsumes", "Does D subsume C? Exit 0 for yes, 1 for no");
  subs->add_option("descriptions", o.descriptions, "D then C")->required()->expected(2);
  add_kb(subs);
  auto* cls = app.add_subcommand("classify", "Print the taxonomy of a knowledge base");
  add_kb(cls);
  auto* cm = app.add_subcommand("countermodel", "Print a world separating C from D");
  cm->add_option("descriptions", o.descriptions, "D then C")->required()->expected(2);
  cm->add_option("--seed", o.world_seed, "Seed for free choices; 0 takes the first option everywhere");
  add_kb(cm);
  auto* reduce = app.add_subcommand("reduce", "Run the 3CNF incompleteness demonstration");
  reduce->add_option("cnf", o.cnf_path, "DIMACS file")->required();
  auto* fuzz = app.add_subcommand("fuzz", "Check engine verdicts against the world oracle");
  fuzz->add_option("--seed", o.seed);
  fuzz->add_option("--cases", o.cases);
  fuzz->add_option("--max-domain", o.max_domain, "Classic domain bound for exhaustive search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*parse) return run_parse(o);
    if (*graph) return run_graph(o, false);
    if (*canon) return run_graph(o, true);
    if (*subs) return run_subsumes(o);
    if (*cls) return run_classify(o);
    if (*cm) return run_countermodel(o);
    if (*reduce) return run_reduce(o);
    if (*fuzz) return run_fuzz_cmd(o);
  } catch (const CLI::RequiredError& e) {
    std::cerr << "error: " << e.what() << " is required\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error";
    if (e.line() > 0) std::cerr << " at line " << e.line();
    std::cerr << " at offset " << e.position() << ": " << e.what() << "\n";
    return kInput;
  } catch (const KbError& e) {
    std::cerr << "knowledge-base error: " << e.what() << "\n";
    return kInput;
  } catch (const CnfError& e) {
    std::cerr << "cnf error: " << e.what() << "\n";
    return kInput;
  }
  return kUsage;
}
