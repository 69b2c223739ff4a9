#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "actalg/cayley.hpp"
#include "actalg/gallery.hpp"
#include "actalg/oracle.hpp"
#include "actalg/world.hpp"

using namespace actalg;

namespace {

World random_world(std::mt19937& rng) {
  std::uniform_int_distribution<int> nstates(1, 6), nacts(1, 3), coin(0, 1);
  int ns = nstates(rng);
  int na = nacts(rng);
  std::vector<std::string> states, alphabet{"1"};
  for (int i = 0; i < ns; ++i) states.push_back("w" + std::to_string(i));
  for (int i = 0; i < na; ++i) alphabet.push_back(std::string(1, 'a' + i));
  std::vector<TransitionSpec> transitions;
  std::uniform_int_distribution<int> target(0, ns - 1);
  for (int s = 0; s < ns; ++s)
    for (int a = 1; a <= na; ++a)
      if (coin(rng)) transitions.push_back({states[s], alphabet[a],
                                            states[target(rng)]});
  Treatment t = coin(rng) ? Treatment::Identity : Treatment::Masked;
  return World("random", states, alphabet, transitions, t, states[0]);
}

}  // namespace

TEST_CASE("closure on the 2x2 world: witnesses and composition") {
  World w = build_gallery_world("cyclical-2x2");
  ClosureResult c = generate_closure(w, 0);
  REQUIRE(c.transforms.size() == 4);
  CHECK_FALSE(c.capped);
  CHECK(c.reach == std::vector<int>{0, 1, 2, 3});
  // Witnesses are length-then-lex minimal: 1, U, L, UL.
  std::vector<std::string> names;
  for (const Word& word : c.witnesses) names.push_back(format_word(w, word));
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"1", "L", "U", "UL"});
  for (size_t i = 0; i < c.transforms.size(); ++i)
    CHECK(word_transform(w, c.witnesses[i]) == c.transforms[i]);
  // composition[f][g] = g∘f as transforms.
  for (size_t f = 0; f < c.transforms.size(); ++f)
    for (size_t g = 0; g < c.transforms.size(); ++g) {
      int e = c.composition[f][g];
      REQUIRE(e != kUndefined);
      CHECK(compose_transforms(c.transforms[g], c.transforms[f]) ==
            c.transforms[e]);
    }
  CHECK(c.empty_compositions == 0);
}

TEST_CASE("closure counts on the gallery") {
  for (const auto& e : gallery()) {
    World w = build_gallery_world(e.key);
    OracleOptions opt;
    opt.admit_empty = e.expected_admits_empty;
    ClosureResult c = generate_closure(w, 0, opt);
    CHECK(static_cast<int>(c.transforms.size()) == e.expected_elements);
  }
}

TEST_CASE("identity treatment closure is a monoid") {
  World w = build_gallery_world("block-1d4");
  ClosureResult c = generate_closure(w, 0);
  // Total composition; identity transform present and neutral.
  int id = -1;
  for (size_t i = 0; i < c.transforms.size(); ++i)
    if (c.transforms[i].is_identity()) id = static_cast<int>(i);
  REQUIRE(id >= 0);
  const int n = static_cast<int>(c.transforms.size());
  for (int f = 0; f < n; ++f) {
    CHECK(c.composition[f][id] == f);
    CHECK(c.composition[id][f] == f);
    for (int g = 0; g < n; ++g) CHECK(c.composition[f][g] != kUndefined);
  }
}

TEST_CASE("group structure when every transform is a bijection") {
  World w = build_gallery_world("cyclical-2x2");
  ClosureResult c = generate_closure(w, 0);
  const int n = static_cast<int>(c.transforms.size());
  for (int f = 0; f < n; ++f) {
    bool has_inverse = false;
    for (int g = 0; g < n; ++g)
      if (c.composition[f][g] == 0 && c.composition[g][f] == 0)
        has_inverse = true;
    // Transform index 0 is the identity witness "1" (shortest word).
    CHECK(c.transforms[0].is_identity());
    CHECK(has_inverse);
  }
}

TEST_CASE("unrestricted diagnostic refines the reachable partition") {
  // From a consumed initial state the present-half dynamics are invisible;
  // the unrestricted oracle distinguishes transforms that the reachable
  // comparison merges.
  World w = build_gallery_world("consumable-identity");
  int consumed = 5;  // agent 1, consumable absent
  ClosureResult restricted = generate_closure(w, consumed);
  OracleOptions opt;
  opt.unrestricted = true;
  ClosureResult full = generate_closure(w, consumed, opt);
  CHECK(full.transforms.size() > restricted.transforms.size());
}

TEST_CASE("engine and oracle agree on all gallery worlds, both conventions") {
  for (const auto& e : gallery()) {
    World w = build_gallery_world(e.key);
    for (bool admit : {false, true}) {
      EngineOptions eo;
      eo.admit_empty = admit;
      OracleOptions oo;
      oo.admit_empty = admit;
      CayleyResult engine = generate_cayley(w, 0, eo);
      ClosureResult closure = generate_closure(w, 0, oo);
      CompareReport rep = compare_partitions(engine, closure, w);
      INFO(e.key, " admit_empty=", admit, ": ", rep.detail);
      CHECK(rep.match);
    }
  }
}

TEST_CASE("engine and oracle agree on randomized small worlds") {
  std::mt19937 rng(20240817);
  for (int iter = 0; iter < 60; ++iter) {
    World w = random_world(rng);
    CayleyResult engine = generate_cayley(w, 0);
    ClosureResult closure = generate_closure(w, 0);
    CompareReport rep = compare_partitions(engine, closure, w);
    INFO("iteration ", iter, ": ", rep.detail);
    REQUIRE(rep.match);
  }
}

TEST_CASE("compare_partitions flags a genuinely different partition") {
  World w = build_gallery_world("cyclical-2x2");
  CayleyResult engine = generate_cayley(w, 0);
  World other = build_gallery_world("wall-identity");
  ClosureResult closure = generate_closure(other, 0);
  CompareReport rep = compare_partitions(engine, closure, other);
  CHECK_FALSE(rep.match);
  CHECK_FALSE(rep.detail.empty());
}
