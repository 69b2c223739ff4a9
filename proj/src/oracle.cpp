#include "actalg/oracle.hpp"

#include <algorithm>
#include <map>

namespace actalg {
namespace {

bool is_empty_on(const PartialTransform& t, const std::vector<int>& domain) {
  return t.empty_on(domain);
}

}  // namespace

ClosureResult generate_closure(const World& world, int w0,
                               OracleOptions options) {
  ClosureResult res;
  if (options.unrestricted) {
    for (int s = 0; s < world.num_states(); ++s) res.reach.push_back(s);
  } else {
    res.reach = reachable_from(world, w0);
  }

  // Generator transforms, in alphabet order.
  std::vector<PartialTransform> gens;
  for (int a = 0; a < world.num_actions(); ++a)
    gens.push_back(word_transform(world, Word{a}));

  std::map<std::vector<int>, Word> known;  // restriction -> minimal witness
  // Level 0: the empty word (identity); level 1 adds the generators.
  known[identity_transform(world.num_states()).restrict_to(res.reach)] =
      Word{world.identity_action()};
  std::vector<std::pair<PartialTransform, Word>> level;
  level.push_back({identity_transform(world.num_states()),
                   Word{world.identity_action()}});
  // The identity generator yields the identity again, so the first level is
  // seeded from the plain generators below like every other level.
  bool first = true;
  while (!level.empty()) {
    // Candidates at the next length: generator ∘ (level member). Collect
    // the minimal witness per new transform before committing the level, so
    // witnesses are length-then-lex minimal.
    std::map<std::vector<int>, std::pair<PartialTransform, Word>> next;
    for (int g = 0; g < world.num_actions(); ++g) {
      for (const auto& [t, witness] : level) {
        PartialTransform comp = compose_transforms(gens[g], t);
        if (!options.admit_empty && is_empty_on(comp, res.reach)) continue;
        Word w = first && witness == Word{world.identity_action()}
                     ? Word{g}
                     : concat_words(Word{g}, witness);
        std::vector<int> key = comp.restrict_to(res.reach);
        if (known.count(key)) continue;
        auto it = next.find(key);
        if (it == next.end() || word_less(w, it->second.second))
          next[key] = {comp, w};
      }
    }
    first = false;
    level.clear();
    for (auto& [key, tw] : next) {
      known[key] = tw.second;
      level.push_back(tw);
      if (known.size() > options.max_elements) {
        res.capped = true;
        break;
      }
    }
    if (res.capped) break;
  }

  // Deterministic output order: witnesses sorted length-then-lex.
  std::vector<std::pair<Word, std::vector<int>>> ordered;
  for (const auto& [key, witness] : known) ordered.push_back({witness, key});
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return word_less(a.first, b.first); });
  std::map<std::vector<int>, int> index;
  for (const auto& [witness, key] : ordered) {
    index[key] = static_cast<int>(res.transforms.size());
    res.transforms.push_back(word_transform(world, witness));
    res.witnesses.push_back(witness);
  }

  const int n = static_cast<int>(res.transforms.size());
  res.composition.assign(n, std::vector<int>(n, kUndefined));
  for (int f = 0; f < n; ++f) {
    for (int g = 0; g < n; ++g) {
      PartialTransform comp =
          compose_transforms(res.transforms[g], res.transforms[f]);
      if (is_empty_on(comp, res.reach) && !options.admit_empty) {
        ++res.empty_compositions;
        continue;
      }
      auto it = index.find(comp.restrict_to(res.reach));
      if (it != index.end()) res.composition[f][g] = it->second;
      // A miss can only happen on a capped run.
    }
  }
  return res;
}

CompareReport compare_partitions(const CayleyResult& engine,
                                 const ClosureResult& closure,
                                 const World& world) {
  CompareReport rep;
  if (engine.reachable != closure.reach) {
    rep.detail = "comparison domains differ (engine reachable set vs oracle)";
    return rep;
  }
  const auto& domain = closure.reach;
  if (engine.classes.labels.size() != closure.transforms.size()) {
    rep.detail = "element counts differ: engine " +
                 std::to_string(engine.classes.labels.size()) + " vs oracle " +
                 std::to_string(closure.transforms.size());
    return rep;
  }

  std::map<std::vector<int>, int> oracle_index;
  for (std::size_t i = 0; i < closure.transforms.size(); ++i)
    oracle_index[closure.transforms[i].restrict_to(domain)] =
        static_cast<int>(i);

  const int n = static_cast<int>(engine.classes.labels.size());
  std::vector<int> to_oracle(n, -1);
  std::vector<bool> hit(n, false);
  for (int i = 0; i < n; ++i) {
    const Word& label = engine.classes.labels[i];
    auto key = word_transform(world, label).restrict_to(domain);
    auto it = oracle_index.find(key);
    if (it == oracle_index.end()) {
      rep.detail = "engine class \"" + format_word(world, label) +
                   "\" has no matching oracle transform";
      return rep;
    }
    if (hit[it->second]) {
      rep.detail = "engine classes collide on one oracle transform at \"" +
                   format_word(world, label) + "\"";
      return rep;
    }
    hit[it->second] = true;
    to_oracle[i] = it->second;

    for (const Word& member : engine.classes.classes.at(label)) {
      if (word_transform(world, member).restrict_to(domain) != key) {
        rep.detail = "member \"" + format_word(world, member) +
                     "\" disagrees with its representative \"" +
                     format_word(world, label) + "\"";
        return rep;
      }
    }
  }

  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      // Engine entry[r][c] is the class of c∘r; oracle composition[f][g]
      // is g∘f, so f = r, g = c.
      int e = engine.action_table.entries[r][c];
      int o = closure.composition[to_oracle[r]][to_oracle[c]];
      bool ok = (e == kUndefined) ? (o == kUndefined)
                                  : (o != kUndefined && to_oracle[e] == o);
      if (!ok) {
        rep.detail = "composition tables disagree at (" +
                     format_word(world, engine.classes.labels[r]) + ", " +
                     format_word(world, engine.classes.labels[c]) + ")";
        return rep;
      }
    }
  }
  rep.match = true;
  rep.detail = "match: " + std::to_string(n) + " elements";
  return rep;
}

}  // namespace actalg
