#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "classic/ast.hpp"
#include "classic/kb.hpp"

namespace classic {

struct Literal {
  std::size_t variable = 1;  // 1-based, as in DIMACS
  bool positive = true;
  bool operator==(const Literal&) const = default;
};

/// Shorter clauses are padded by repeating their last literal.
struct CnfFormula {
  std::size_t variables = 0;
  std::vector<std::array<Literal, 3>> clauses;
};

/// Disjunction of 3-literal conjunctions.
struct DnfFormula {
  std::size_t variables = 0;
  std::vector<std::array<Literal, 3>> terms;
};

class CnfError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CnfFormula parse_dimacs(std::string_view text);
CnfFormula random_3cnf(std::size_t variables, std::size_t clauses, std::mt19937_64& rng);
DnfFormula negate(const CnfFormula& f);

inline constexpr std::size_t kMaxBruteForceVariables = 20;

/// True iff every assignment satisfies some term. Throws CnfError above
/// kMaxBruteForceVariables.
bool check_validity_bruteforce(const DnfFormula& g);

struct ReductionOutput {
  KnowledgeBase kb;  // names only; the descriptions below are already expanded
  std::vector<std::pair<Individual, Description>> assertions;
  Description valid_formulae;
  Description upper;
  Description lower;
  /// Attributes wrapping each asserted individual in LOWER; G uses `formula`.
  std::vector<std::string> dummy_attributes;
  /// The same content as a loadable knowledge-base text.
  std::string kb_text;
};

ReductionOutput encode(const CnfFormula& f);

struct IncompletenessReport {
  bool validity = false;
  bool engine_verdict = false;  // does UPPER subsume LOWER
  bool gap = false;             // valid, yet not derived
};

IncompletenessReport demonstrate_incompleteness(const CnfFormula& f);
nlohmann::ordered_json to_json(const IncompletenessReport& r);

}  // namespace classic
