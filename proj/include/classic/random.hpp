#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "classic/ast.hpp"
#include "classic/kb.hpp"
#include "classic/oracle.hpp"

namespace classic {

/// Shape of generated descriptions. The names are declared by `corpus_kb`,
/// so every generated description prints to parseable text.
struct CorpusParams {
  int max_depth = 4;
  std::uint64_t max_number = 3;
  std::vector<std::string> atoms{"A", "B", "C"};
  std::vector<std::string> host_types{"INTEGER", "REAL", "NUMBER", "STRING"};
  std::vector<std::string> roles{"r", "s"};
  std::vector<std::string> attributes{"a", "b", "c"};
  std::vector<Individual> individuals{Individual::named("P"), Individual::named("Q"), Individual::named("R")};
  std::vector<Individual> literals{Individual::integer("1"), Individual::integer("2"), Individual::decimal("2.5"),
                                   Individual::string("x")};
};

struct CorpusPair {
  Description d;  // candidate subsumer
  Description c;
};

KnowledgeBase corpus_kb(const CorpusParams& p = {});

Description random_description(std::mt19937_64& rng, const CorpusParams& p = {});
/// A description that tends to subsume `d`; not guaranteed to.
Description weaken(const Description& d, std::mt19937_64& rng, const CorpusParams& p = {});
/// Half of the pairs have `d` drawn as a weakening of `c`.
std::vector<CorpusPair> random_corpus(std::size_t n, std::uint64_t seed, const CorpusParams& p = {});

/// and(a1=b1, ..., an=bn, a1=a2, ..., a(n-1)=an): every attribute target
/// collapses into one node under canonicalization.
Description chain_family(std::size_t n);

}  // namespace classic
