#include "classic/reduction.hpp"

#include <algorithm>
#include <sstream>

#include "classic/subsume.hpp"
#include "classic/syntax.hpp"

namespace classic {

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula f;
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<Literal> pending;
  bool header = false;
  std::size_t declared_clauses = 0;
  auto close_clause = [&] {
    if (pending.empty()) throw CnfError("dimacs: empty clause");
    if (pending.size() > 3) throw CnfError("dimacs: clause with more than 3 literals");
    while (pending.size() < 3) pending.push_back(pending.back());
    f.clauses.push_back({pending[0], pending[1], pending[2]});
    pending.clear();
  };
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c") continue;
    if (tok == "%") break;  // end marker used by some benchmark sets
    if (tok == "p") {
      std::string kind;
      if (header || !(ls >> kind >> f.variables >> declared_clauses) || kind != "cnf")
        throw CnfError("dimacs: malformed problem line");
      header = true;
      continue;
    }
    if (!header) throw CnfError("dimacs: clause before the problem line");
    do {
      long long v = 0;
      try {
        std::size_t used = 0;
        v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw CnfError("dimacs: bad literal '" + tok + "'");
      }
      if (v == 0) {
        close_clause();
        continue;
      }
      const auto var = static_cast<std::size_t>(v < 0 ? -v : v);
      if (var > f.variables) throw CnfError("dimacs: variable " + std::to_string(var) + " out of range");
      pending.push_back(Literal{var, v > 0});
    } while (ls >> tok);
  }
  if (!header) throw CnfError("dimacs: missing problem line");
  if (!pending.empty()) close_clause();
  if (f.clauses.empty()) throw CnfError("dimacs: no clauses");
  if (f.clauses.size() != declared_clauses) throw CnfError("dimacs: clause count differs from the problem line");
  return f;
}

CnfFormula random_3cnf(std::size_t variables, std::size_t clauses, std::mt19937_64& rng) {
  if (variables < 3) throw CnfError("random_3cnf: need at least 3 variables");
  CnfFormula f;
  f.variables = variables;
  std::vector<std::size_t> vars(variables);
  for (std::size_t i = 0; i < variables; ++i) vars[i] = i + 1;
  std::bernoulli_distribution sign(0.5);
  for (std::size_t c = 0; c < clauses; ++c) {
    std::shuffle(vars.begin(), vars.end(), rng);
    std::array<Literal, 3> clause;
    for (std::size_t k = 0; k < 3; ++k) clause[k] = Literal{vars[k], sign(rng)};
    f.clauses.push_back(clause);
  }
  return f;
}

DnfFormula negate(const CnfFormula& f) {
  DnfFormula g;
  g.variables = f.variables;
  for (const auto& clause : f.clauses) {
    std::array<Literal, 3> term;
    for (std::size_t k = 0; k < 3; ++k) term[k] = Literal{clause[k].variable, !clause[k].positive};
    g.terms.push_back(term);
  }
  return g;
}

bool check_validity_bruteforce(const DnfFormula& g) {
  if (g.variables > kMaxBruteForceVariables)
    throw CnfError("validity check limited to " + std::to_string(kMaxBruteForceVariables) + " variables");
  // Each term becomes a (mask, value) pair over the assignment bits.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> terms;
  for (const auto& t : g.terms) {
    std::uint32_t mask = 0, value = 0;
    bool contradictory = false;
    for (const auto& l : t) {
      const std::uint32_t bit = 1u << (l.variable - 1);
      if ((mask & bit) && ((value & bit) != 0) != l.positive) contradictory = true;
      mask |= bit;
      if (l.positive) value |= bit;
    }
    if (!contradictory) terms.emplace_back(mask, value);
  }
  const std::uint64_t n = std::uint64_t{1} << g.variables;
  for (std::uint64_t a = 0; a < n; ++a) {
    const auto bits = static_cast<std::uint32_t>(a);
    if (std::none_of(terms.begin(), terms.end(), [&](const auto& t) { return (bits & t.first) == t.second; }))
      return false;
  }
  return true;
}

namespace {

const Individual kTrue = Individual::string("True");
const Individual kFalse = Individual::string("False");

Individual pos(std::size_t v) { return Individual::named("P" + std::to_string(v)); }
Individual neg(std::size_t v) { return Individual::named("N" + std::to_string(v)); }

}  // namespace

ReductionOutput encode(const CnfFormula& f) {
  if (f.clauses.empty()) throw CnfError("encode: formula has no clauses");
  ReductionOutput out;
  KnowledgeBase& kb = out.kb;
  kb.roles = {"conjuncts", "disjunctsHolding"};
  kb.attributes = {"truthValue", "approve", "deny", "formula"};

  std::vector<Description> lower;
  auto assert_individual = [&](Individual ind, Description d, const std::string& dummy) {
    kb.individuals.insert(ind.lexeme);
    kb.attributes.insert(dummy);
    out.dummy_attributes.push_back(dummy);
    lower.push_back(dl::all_attr(dummy, dl::conj({dl::one_of({ind}), d})));
    out.assertions.emplace_back(std::move(ind), std::move(d));
  };

  const Description truth = dl::all_attr("truthValue", dl::one_of({kTrue, kFalse}));
  for (std::size_t v = 1; v <= f.variables; ++v) {
    const std::string s = std::to_string(v);
    auto voter = [&](const char* attr, const Individual& value) {
      return dl::all_attr(attr, dl::conj({dl::one_of({pos(v), neg(v)}), dl::all_attr("truthValue", dl::one_of({value}))}));
    };
    assert_individual(pos(v), truth, "dummy-p-" + s);
    assert_individual(neg(v), truth, "dummy-n-" + s);
    assert_individual(Individual::named("Yes" + s), voter("approve", kTrue), "dummy-yes-" + s);
    assert_individual(Individual::named("No" + s), voter("deny", kFalse), "dummy-no-" + s);
  }

  const DnfFormula g = negate(f);
  std::vector<Individual> disjuncts;
  for (std::size_t i = 0; i < g.terms.size(); ++i) {
    std::vector<Individual> members;
    for (const auto& l : g.terms[i]) {
      Individual m = l.positive ? pos(l.variable) : neg(l.variable);
      if (std::find(members.begin(), members.end(), m) == members.end()) members.push_back(std::move(m));
    }
    // Repeated literals pad short clauses, so count the distinct ones.
    const std::uint64_t k = members.size();
    Individual name = Individual::named("C" + std::to_string(i + 1));
    disjuncts.push_back(name);
    assert_individual(std::move(name), dl::conj({dl::all_role("conjuncts", dl::one_of(std::move(members))), dl::at_least(k, "conjuncts")}),
                      "dummy-c-" + std::to_string(i + 1));
  }

  const Individual formula = Individual::named("G");
  kb.individuals.insert(formula.lexeme);
  Description g_desc = dl::all_role("disjunctsHolding", dl::one_of(disjuncts));
  lower.push_back(dl::all_attr("formula", dl::conj({dl::one_of({formula}), g_desc})));
  out.dummy_attributes.push_back("formula");
  out.assertions.emplace_back(formula, std::move(g_desc));

  out.valid_formulae = dl::conj(
      {dl::at_least(1, "disjunctsHolding"),
       dl::all_role("disjunctsHolding", dl::all_role("conjuncts", dl::all_attr("truthValue", dl::one_of({kTrue}))))});
  out.upper = dl::all_attr("formula", out.valid_formulae);
  out.lower = dl::conj(std::move(lower));

  std::ostringstream text;
  for (const auto& r : kb.roles) text << "role " << r << "\n";
  for (const auto& a : kb.attributes) text << "attribute " << a << "\n";
  for (const auto& i : kb.individuals) text << "individual " << i << "\n";
  text << "concept VALID-FORMULAE := " << print(out.valid_formulae) << "\n";
  text << "concept UPPER := all(formula, VALID-FORMULAE)\n";
  text << "concept LOWER := " << print(out.lower) << "\n";
  out.kb_text = text.str();
  return out;
}

IncompletenessReport demonstrate_incompleteness(const CnfFormula& f) {
  IncompletenessReport r;
  r.validity = check_validity_bruteforce(negate(f));
  const ReductionOutput enc = encode(f);
  r.engine_verdict = subsumes(enc.upper, enc.lower, enc.kb);
  r.gap = r.validity && !r.engine_verdict;
  return r;
}

nlohmann::ordered_json to_json(const IncompletenessReport& r) {
  nlohmann::ordered_json j;
  j["validity"] = r.validity;
  j["engine_verdict"] = r.engine_verdict;
  j["gap"] = r.gap;
  return j;
}

}  // namespace classic
