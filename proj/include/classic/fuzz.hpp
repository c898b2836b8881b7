#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "classic/ast.hpp"
#include "classic/kb.hpp"
#include "classic/random.hpp"

namespace classic {

struct PairOutcome {
  bool subsumes = false;
  bool sound = true;     // only checked when subsumes
  bool complete = true;  // only checked when not subsumes
  std::string failure;
};

/// Checks one engine verdict against the world oracle: containment in
/// `worlds` sampled worlds when subsumed, a steered separating world when not.
PairOutcome check_pair(const Description& d, const Description& c, const KnowledgeBase& kb, std::uint64_t seed,
                       std::size_t worlds = 50);

struct FuzzSummary {
  std::size_t cases = 0;
  std::size_t subsumed = 0;
  std::size_t soundness_violations = 0;
  std::size_t completeness_failures = 0;
  std::size_t incoherent_checked = 0;
  std::size_t incoherent_with_model = 0;  // canonical form says empty, search disagrees
  std::vector<std::string> failures;  // first few, with the pair printed
};

/// With `max_domain` > 0, every c found incoherent is also searched for a
/// model of its uncanonicalized graph up to that many classic elements.
FuzzSummary run_fuzz(std::uint64_t seed, std::size_t cases, std::size_t worlds = 50, std::size_t max_domain = 0,
                     const CorpusParams& p = {});
nlohmann::ordered_json to_json(const FuzzSummary& s);

}  // namespace classic
