#include "classic/random.hpp"

#include <algorithm>

namespace classic {

namespace {

template <class T>
const T& pick(const std::vector<T>& v, std::mt19937_64& rng) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::uint64_t number(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

class Generator {
 public:
  Generator(std::mt19937_64& rng, const CorpusParams& p) : rng_(rng), p_(p) {
    for (const auto& l : p.literals) host_literals_.push_back(l);
  }

  Description classic(int depth) {
    const int kinds = depth > 0 ? 13 : 10;
    switch (number(rng_, 0, kinds - 1)) {
      case 0:
      case 1: return dl::atom(pick(p_.atoms, rng_));
      case 2: return dl::at_least(number(rng_, 1, p_.max_number), pick(p_.roles, rng_));
      case 3: return dl::at_most(number(rng_, 0, p_.max_number), pick(p_.roles, rng_));
      case 4: return same_as();
      case 5: return dl::fills_role(pick(p_.roles, rng_), filler());
      case 6: return dl::fills_attr(pick(p_.attributes, rng_), filler());
      case 7: return one_of(Realm::Classic);
      case 8: return coin(rng_, 0.7) ? dl::classic_thing() : dl::nothing();
      case 9: return dl::atom(pick(p_.atoms, rng_));
      case 10: {
        std::vector<Description> cs;
        const auto n = number(rng_, 2, 3);
        for (std::uint64_t i = 0; i < n; ++i) cs.push_back(classic(depth - 1));
        return dl::conj(std::move(cs));
      }
      case 11: return dl::all_role(pick(p_.roles, rng_), any(depth - 1));
      default: return dl::all_attr(pick(p_.attributes, rng_), any(depth - 1));
    }
  }

  Description host(int depth) {
    switch (number(rng_, 0, depth > 0 ? 4 : 3)) {
      case 0:
      case 1: return dl::host(pick(p_.host_types, rng_));
      case 2: return one_of(Realm::Host);
      case 3: return dl::host_thing();
      default: return dl::conj({host(depth - 1), host(depth - 1)});
    }
  }

  Description any(int depth) {
    const double r = std::uniform_real_distribution<double>(0, 1)(rng_);
    if (r < 0.05) return dl::thing();
    if (r < 0.25) return host(depth);
    return classic(depth);
  }

  Description weaken(const Description& d) {
    if (coin(rng_, 0.08)) return dl::thing();
    if (auto a = d.as<ast::And>()) {
      std::vector<Description> kept;
      for (const auto& c : a->conjuncts)
        if (!coin(rng_, 0.3)) kept.push_back(coin(rng_, 0.5) ? weaken(c) : c);
      if (kept.empty()) return weaken(pick(a->conjuncts, rng_));
      if (kept.size() == 1) return kept.front();
      return dl::conj(std::move(kept));
    }
    if (auto a = d.as<ast::AtLeast>()) return dl::at_least(a->count > 1 ? a->count - 1 : a->count, a->role);
    if (auto a = d.as<ast::AtMost>()) return dl::at_most(a->count + 1, a->role);
    if (auto a = d.as<ast::All>()) {
      Description inner = weaken(*a->restriction);
      return a->kind == PropertyKind::Attribute ? dl::all_attr(a->property, inner) : dl::all_role(a->property, inner);
    }
    if (auto o = d.as<ast::OneOf>()) {
      const bool host = !o->members.empty() && o->members.front().is_host();
      std::vector<Individual> members = o->members;
      const Individual& extra = pick(host ? host_literals_ : p_.individuals, rng_);
      if (std::find(members.begin(), members.end(), extra) == members.end()) members.push_back(extra);
      return dl::one_of(std::move(members));
    }
    if (auto h = d.as<ast::HostConcept>()) {
      if (h->name == "INTEGER") return dl::host(coin(rng_, 0.5) ? "REAL" : "NUMBER");
      if (h->name == "REAL") return dl::host("NUMBER");
      return coin(rng_, 0.5) ? dl::host_thing() : d;
    }
    if (d.is<ast::ConceptName>() && coin(rng_, 0.3)) return dl::classic_thing();
    return d;
  }

 private:
  Individual filler() { return coin(rng_, 0.7) ? pick(p_.individuals, rng_) : pick(host_literals_, rng_); }

  Description same_as() {
    auto path = [&] {
      std::vector<std::string> out;
      const auto n = number(rng_, 1, 2);
      for (std::uint64_t i = 0; i < n; ++i) out.push_back(pick(p_.attributes, rng_));
      return out;
    };
    return dl::same_as(path(), path());
  }

  Description one_of(Realm realm) {
    const auto& pool = realm == Realm::Host ? host_literals_ : p_.individuals;
    std::vector<Individual> members;
    const auto n = number(rng_, 1, std::min<std::size_t>(3, pool.size()));
    while (members.size() < n) {
      const Individual& m = pick(pool, rng_);
      if (std::find(members.begin(), members.end(), m) == members.end()) members.push_back(m);
    }
    return dl::one_of(std::move(members));
  }

  std::mt19937_64& rng_;
  const CorpusParams& p_;
  std::vector<Individual> host_literals_;
};

}  // namespace

KnowledgeBase corpus_kb(const CorpusParams& p) {
  KnowledgeBase kb;
  kb.roles.insert(p.roles.begin(), p.roles.end());
  kb.attributes.insert(p.attributes.begin(), p.attributes.end());
  for (const auto& i : p.individuals) kb.individuals.insert(i.lexeme);
  return kb;
}

Description random_description(std::mt19937_64& rng, const CorpusParams& p) {
  return Generator(rng, p).classic(p.max_depth);
}

Description weaken(const Description& d, std::mt19937_64& rng, const CorpusParams& p) {
  return Generator(rng, p).weaken(d);
}

std::vector<CorpusPair> random_corpus(std::size_t n, std::uint64_t seed, const CorpusParams& p) {
  std::mt19937_64 rng(seed);
  Generator gen(rng, p);
  std::vector<CorpusPair> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Description c = gen.classic(p.max_depth);
    Description d = coin(rng, 0.5) ? gen.weaken(c) : gen.classic(p.max_depth);
    out.push_back({std::move(d), std::move(c)});
  }
  return out;
}

Description chain_family(std::size_t n) {
  std::vector<Description> cs;
  auto a = [](std::size_t i) { return "a" + std::to_string(i); };
  for (std::size_t i = 1; i <= n; ++i) cs.push_back(dl::same_as({a(i)}, {"b" + std::to_string(i)}));
  for (std::size_t i = 1; i < n; ++i) cs.push_back(dl::same_as({a(i)}, {a(i + 1)}));
  if (cs.size() == 1) return cs.front();
  return dl::conj(std::move(cs));
}

Interpretation random_world(const Vocabulary& v, std::uint64_t seed, const WorldParams& p, const HostLattice& lattice) {
  std::mt19937_64 rng(seed);
  Interpretation w;
  w.lattice = lattice;
  std::size_t next = 0;
  for (const auto& ind : v.individuals) {
    const auto k = number(rng, 1, std::max<std::size_t>(1, p.max_individual));
    for (std::uint64_t i = 0; i < k; ++i) w.individuals[ind].insert(w.add_classic("c" + std::to_string(next++)));
  }
  for (std::size_t i = 0; i < p.free_classic; ++i) w.add_classic("c" + std::to_string(next++));
  const auto classic_count = static_cast<ElementId>(w.size());

  for (const auto& l : v.literals) w.literal(l);
  for (const auto& [type, parent] : lattice.types())
    for (std::size_t i = 0; i < p.fresh_host; ++i) w.add_host("r:" + type + ":" + std::to_string(i), type);
  for (std::size_t i = 0; i < p.fresh_host; ++i) w.add_host("r::" + std::to_string(i), std::nullopt);
  const auto total = static_cast<ElementId>(w.size());

  for (const auto& a : v.atoms) {
    if (lattice.contains(a)) continue;
    const bool host = std::string_view(a).starts_with(kHostOpaquePrefix);
    auto& ext = w.concepts[a];
    for (ElementId e = host ? classic_count : 0; e < (host ? total : classic_count); ++e)
      if (coin(rng, p.concept_density)) ext.insert(e);
  }
  // Targets lean classic so number restrictions see individuals often.
  for (const auto& r : v.roles) {
    auto& table = w.roles[r];
    for (ElementId e = 0; e < classic_count; ++e)
      for (ElementId t = 0; t < total; ++t)
        if (coin(rng, t < classic_count ? p.role_density : p.role_density / 3)) table[e].insert(t);
  }
  for (const auto& a : v.attributes) {
    auto& table = w.attributes[a];
    for (ElementId e = 0; e < classic_count; ++e)
      table[e] = total == classic_count || coin(rng, 0.6) ? static_cast<ElementId>(number(rng, 0, classic_count - 1))
                                : static_cast<ElementId>(number(rng, classic_count, total - 1));
  }
  return w;
}

}  // namespace classic
