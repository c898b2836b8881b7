#include <doctest.h>

#include <algorithm>

#include "classic/fuzz.hpp"
#include "classic/oracle.hpp"
#include "classic/subsume.hpp"
#include "classic/syntax.hpp"

using namespace classic;

TEST_CASE("engine verdicts agree with the world oracle") {
  for (std::uint64_t seed : {71u, 72u, 73u}) {
    const FuzzSummary s = run_fuzz(seed, 300, 20, 2);
    CAPTURE(seed);
    CAPTURE(to_json(s).dump());
    CHECK(s.cases == 300);
    CHECK(s.subsumed > 30);
    CHECK(s.subsumed < 270);
    CHECK(s.soundness_violations == 0);
    CHECK(s.completeness_failures == 0);
    CHECK(s.incoherent_with_model == 0);
    CHECK(s.failures.empty());
  }
}

TEST_CASE("every seed of the steered construction separates") {
  const KnowledgeBase kb = corpus_kb();
  std::size_t checked = 0;
  for (const auto& p : random_corpus(200, 74)) {
    if (subsumes(p.d, p.c, kb)) continue;
    const DescriptionGraph g = canonical_graph(p.c);
    Vocabulary v;
    v.add(p.d);
    v.add(p.c);
    for (std::uint64_t seed : {0u, 3u, 11u}) {
      const GraphicalWorld gw = construct_graphical_world(g, &p.d, v, HostLattice::standard(), seed);
      CAPTURE(print(p.d));
      CAPTURE(print(p.c));
      CHECK(eval_description(p.c, gw.world).test(gw.distinguished));
      CHECK_FALSE(eval_description(p.d, gw.world).test(gw.distinguished));
      ++checked;
    }
  }
  CHECK(checked > 150);
}

TEST_CASE("strengthening the subsumee keeps subsumption") {
  const auto corpus = random_corpus(300, 75);
  for (std::size_t i = 0; i + 1 < corpus.size(); ++i) {
    const auto& p = corpus[i];
    if (!subsumes(p.d, p.c)) continue;
    CAPTURE(print(p.d));
    CHECK(subsumes(p.d, dl::conj({p.c, corpus[i + 1].c})));
    CHECK(subsumes(dl::all_role("r", p.d), dl::all_role("r", p.c)));
    CHECK(subsumes(dl::all_attr("a", p.d), dl::all_attr("a", p.c)));
  }
}

TEST_CASE("models found by exhaustive search respect subsumption") {
  // The first model found by exhaustive search is an arbitrary one, not a
  // constructed one, so it checks soundness independently.
  std::size_t tried = 0;
  for (const auto& p : random_corpus(150, 76)) {
    if (!subsumes(p.d, p.c)) continue;
    const DescriptionGraph g = canonical_graph(p.c);
    if (g.incoherent) continue;
    Vocabulary vd, vc;
    vd.add(p.d);
    vc.add(p.c);
    if (!std::includes(vc.attributes.begin(), vc.attributes.end(), vd.attributes.begin(), vd.attributes.end()))
      continue;
    const SearchResult r = bounded_model_search(g, 1, 20'000);
    if (!r.model) continue;
    ++tried;
    CAPTURE(print(p.d));
    CHECK(eval_description(p.d, r.model->world).test(r.model->distinguished));
  }
  CHECK(tried > 10);
}
