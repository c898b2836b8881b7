#include "classic/fuzz.hpp"

#include "classic/oracle.hpp"
#include "classic/subsume.hpp"
#include "classic/syntax.hpp"

namespace classic {

namespace {

std::string show(const Description& d, const Description& c) { return "d = " + print(d) + ", c = " + print(c); }

}  // namespace

PairOutcome check_pair(const Description& d, const Description& c, const KnowledgeBase& kb, std::uint64_t seed,
                       std::size_t worlds) {
  PairOutcome out;
  Expander ex(kb);
  const Description ed = ex.expand(d);
  const Description ec = ex.expand(c);
  const CanonContext ctx = kb.context();
  const DescriptionGraph g = canonical_graph(ec, ctx);
  out.subsumes = subsumes_graph(ed, g);

  Vocabulary v;
  v.add(ed);
  v.add(ec);
  try {
    if (out.subsumes) {
      for (std::size_t i = 0; i < worlds; ++i) {
        const std::uint64_t s = seed * 7919 + i;
        Interpretation w = random_world(v, s, {}, ctx.lattice);
        // Every other world carries a model of c, so the containment is not vacuous.
        if (i % 2 == 1 && !g.incoherent)
          w = merge_worlds(w, construct_graphical_world(g, nullptr, v, ctx.lattice, s).world);
        w.validate(&v);
        const ElementSet ext_c = eval_description(ec, w);
        if (!ext_c.is_subset_of(eval_description(ed, w))) {
          out.sound = false;
          out.failure = "containment fails in world " + std::to_string(i) + ": " + show(d, c);
          break;
        }
      }
    } else {
      const GraphicalWorld gw = construct_graphical_world(g, &ed, v, ctx.lattice, 0);
      gw.world.validate(&v);
      if (!eval_description(ec, gw.world).test(gw.distinguished)) {
        out.complete = false;
        out.failure = "constructed element is outside c: " + show(d, c);
      } else if (eval_description(ed, gw.world).test(gw.distinguished)) {
        out.complete = false;
        out.failure = "constructed element is inside d: " + show(d, c);
      }
    }
  } catch (const std::exception& e) {
    (out.subsumes ? out.sound : out.complete) = false;
    out.failure = std::string(e.what()) + ": " + show(d, c);
  }
  return out;
}

FuzzSummary run_fuzz(std::uint64_t seed, std::size_t cases, std::size_t worlds, std::size_t max_domain,
                     const CorpusParams& p) {
  FuzzSummary s;
  const KnowledgeBase kb = corpus_kb(p);
  const auto corpus = random_corpus(cases, seed, p);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const PairOutcome o = check_pair(corpus[i].d, corpus[i].c, kb, seed + i, worlds);
    ++s.cases;
    if (o.subsumes) ++s.subsumed;
    if (!o.sound) ++s.soundness_violations;
    if (!o.complete) ++s.completeness_failures;
    if (!o.failure.empty() && s.failures.size() < 10) s.failures.push_back(o.failure);
    if (max_domain == 0) continue;
    const Description ec = expand(corpus[i].c, kb);
    if (!canonical_graph(ec, kb.context()).incoherent) continue;
    ++s.incoherent_checked;
    if (bounded_model_search(translate(ec), max_domain, 20'000).model) {
      ++s.incoherent_with_model;
      if (s.failures.size() < 10) s.failures.push_back("model found for incoherent " + print(corpus[i].c));
    }
  }
  return s;
}

nlohmann::ordered_json to_json(const FuzzSummary& s) {
  nlohmann::ordered_json j;
  j["cases"] = s.cases;
  j["subsumed"] = s.subsumed;
  j["soundness_violations"] = s.soundness_violations;
  j["completeness_failures"] = s.completeness_failures;
  j["incoherent_checked"] = s.incoherent_checked;
  j["incoherent_with_model"] = s.incoherent_with_model;
  j["failures"] = s.failures;
  return j;
}

}  // namespace classic
