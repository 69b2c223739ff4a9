#include "actalg/cayley.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>

namespace actalg {

CayleyBuilder::CayleyBuilder(const World& world, int w0, EngineOptions options)
    : world_(world), w0_(w0), options_(options) {
  if (w0 < 0 || w0 >= world.num_states())
    throw std::invalid_argument("initial state index out of range");
  reach_ = reachable_from(world, w0);

  // Seed with the minimum actions, in alphabet order. A minimum action that
  // is defined nowhere on the reachable set is no more an element than an
  // empty composite, so the same admission rule applies.
  for (int a = 0; a < world_.num_actions(); ++a) {
    Word w{a};
    cached(w);
    if (!options_.admit_empty && empty_on_reach(w)) continue;
    add_element(w);
    seeds_.push_back(w);
  }
  // The empty word is semantically the one-symbol identity word.
  Word identity{world_.identity_action()};
  cached(Word{});
  lookup_[Word{}] = identity;
  members_[identity].push_back(Word{});

  // Merge minimum actions that are already indistinguishable.
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    const Word rep = labels_[i];
    std::vector<Word> eq = search_for_equivalents(rep);
    for (const Word& other : eq) {
      auto it = std::find(labels_.begin(), labels_.end(), other);
      if (it == labels_.end() || *it == rep) continue;
      if (it - labels_.begin() <= static_cast<std::ptrdiff_t>(i)) continue;
      std::vector<Word> moved = members_[other];
      members_.erase(other);
      labels_.erase(it);
      for (const Word& m : moved) absorb(rep, m);
    }
  }
  search_for_new_candidates();
}

const PartialTransform& CayleyBuilder::cached(const Word& w) {
  auto it = transforms_.find(w);
  if (it != transforms_.end()) return it->second;
  // Composites are composed from cached halves by the callers; anything
  // reaching here is short, so the direct fold is fine.
  return transforms_.emplace(w, word_transform(world_, w)).first->second;
}

const PartialTransform* CayleyBuilder::find_cached(const Word& w) const {
  auto it = transforms_.find(w);
  return it == transforms_.end() ? nullptr : &it->second;
}

const PartialTransform& CayleyBuilder::transform_of(const Word& w) const {
  const PartialTransform* t = find_cached(w);
  if (!t) throw std::invalid_argument("word has no cached transform");
  return *t;
}

bool CayleyBuilder::empty_on_reach(const Word& w) const {
  return transform_of(w).empty_on(reach_);
}

CayleyBuilder::Profile CayleyBuilder::profile(const Word& a) const {
  const PartialTransform& ta = transform_of(a);
  Profile p;
  p.row.reserve(labels_.size());
  p.col.reserve(labels_.size());
  int ia = ta.images[w0_];
  for (const Word& label : labels_) {
    const PartialTransform& tl = transform_of(label);
    p.row.push_back(ia == kUndefined ? kUndefined : tl.images[ia]);
    int ir = tl.images[w0_];
    p.col.push_back(ir == kUndefined ? kUndefined : ta.images[ir]);
  }
  return p;
}

void CayleyBuilder::add_element(const Word& a) {
  if (members_.count(a)) throw std::invalid_argument("duplicate label");
  labels_.push_back(a);
  members_[a] = {a};
  lookup_[a] = a;
  if (labels_.size() > options_.max_elements)
    throw CapExceededError(labels_.size(), options_.max_elements);
}

void CayleyBuilder::absorb(const Word& rep, const Word& member) {
  members_[rep].push_back(member);
  lookup_[member] = rep;
}

std::vector<Word> CayleyBuilder::search_for_equivalents(const Word& a) const {
  std::vector<Word> out;
  Profile pa = profile(a);
  for (const Word& label : labels_) {
    if (label == a) continue;
    if (profile(label) == pa) out.push_back(label);
  }
  return out;
}

void CayleyBuilder::search_for_new_candidates() {
  // Seeds that were merged into other classes are no longer labels, but
  // their composites (e.g. both diagonal spellings in a grid) should still
  // be recorded as members; composing over them never changes the partition
  // because each seed's transform equals its representative's.
  std::vector<Word> snapshot = labels_;
  for (const Word& s : seeds_)
    if (std::find(labels_.begin(), labels_.end(), s) == labels_.end())
      snapshot.push_back(s);
  for (const Word& r : snapshot) {
    for (const Word& c : snapshot) {
      Word composite = concat_words(c, r);
      if (lookup_.count(composite) || seen_candidate_.count(composite))
        continue;
      if (!transforms_.count(composite))
        transforms_.emplace(
            composite, compose_transforms(transform_of(c), transform_of(r)));
      if (!options_.admit_empty && empty_on_reach(composite)) {
        seen_candidate_[composite] = false;  // rejected, never an element
        continue;
      }
      std::vector<Word> eq = search_for_equivalents(composite);
      if (!eq.empty()) {
        absorb(eq.front(), composite);
      } else {
        pending_.push_back(composite);
        seen_candidate_[composite] = true;
      }
    }
  }
}

void CayleyBuilder::search_for_broken_equivalence_classes(const Word& a_C) {
  const int probe = transform_of(a_C).images[w0_];
  const std::vector<Word> snapshot = labels_;
  for (const Word& rep : snapshot) {
    if (rep == a_C) continue;
    const int base =
        probe == kUndefined ? kUndefined : transform_of(rep).images[probe];
    std::vector<Word> stay, broken;
    for (const Word& m : members_[rep]) {
      int out = probe == kUndefined ? kUndefined
                                    : transform_of(m).images[probe];
      if (m != rep && out != base)
        broken.push_back(m);
      else
        stay.push_back(m);
    }
    if (broken.empty()) continue;
    members_[rep] = stay;
    // Regroup the split-off members by their full profile; members with
    // equal profiles are indistinguishable by every current probe.
    std::vector<std::pair<Profile, std::vector<Word>>> groups;
    for (const Word& m : broken) {
      Profile pm = profile(m);
      auto it = std::find_if(groups.begin(), groups.end(),
                             [&](const auto& g) { return g.first == pm; });
      if (it == groups.end())
        groups.push_back({std::move(pm), {m}});
      else
        it->second.push_back(m);
    }
    for (auto& [pm, ms] : groups) {
      std::vector<Word> eq = search_for_equivalents(ms.front());
      if (!eq.empty()) {
        for (const Word& m : ms) absorb(eq.front(), m);
      } else {
        add_element(ms.front());
        for (std::size_t i = 1; i < ms.size(); ++i) absorb(ms.front(), ms[i]);
      }
    }
  }
}

void CayleyBuilder::run() {
  while (!pending_.empty()) {
    Word a_C = pending_.front();
    pending_.erase(pending_.begin());
    if (lookup_.count(a_C)) continue;
    std::vector<Word> eq = search_for_equivalents(a_C);
    if (!eq.empty()) {
      absorb(eq.front(), a_C);
      continue;
    }
    // New element first, so its own row/column act as probes while the
    // broken classes are re-partitioned.
    add_element(a_C);
    search_for_broken_equivalence_classes(a_C);
    search_for_new_candidates();
  }
}

Word CayleyBuilder::pick_representative(const std::vector<Word>& members) const {
  const Word* best = &members.front();
  for (const Word& m : members)
    if (word_less(m, *best)) best = &m;
  return *best;
}

CayleyResult CayleyBuilder::result() const {
  CayleyResult res;
  res.initial = w0_;
  res.reachable = reach_;

  // Canonical representative per class: shortest member, ties broken
  // lexicographically by alphabet index. The empty word would win inside
  // the identity class but displays identically to "1"; prefer nonempty.
  struct ClassOut {
    Word rep;
    std::vector<Word> members;
    const PartialTransform* transform;
  };
  std::vector<ClassOut> out;
  for (const Word& growth_rep : labels_) {
    ClassOut c;
    c.members = members_.at(growth_rep);
    std::sort(c.members.begin(), c.members.end(), word_less);
    std::vector<Word> nonempty;
    for (const Word& m : c.members)
      if (!m.empty()) nonempty.push_back(m);
    c.rep = pick_representative(nonempty.empty() ? c.members : nonempty);
    c.transform = &transform_of(growth_rep);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const ClassOut& a, const ClassOut& b) {
              return word_less(a.rep, b.rep);
            });

  const int n = static_cast<int>(out.size());
  std::map<std::vector<int>, int> by_restriction;
  for (int i = 0; i < n; ++i) {
    res.classes.labels.push_back(out[i].rep);
    res.classes.classes[out[i].rep] = out[i].members;
    for (const Word& m : out[i].members)
      res.classes.word_lookup[m] = out[i].rep;
    by_restriction[out[i].transform->restrict_to(reach_)] = i;
  }

  res.state_table.labels = res.classes.labels;
  res.state_table.entries.assign(n, std::vector<int>(n, kUndefined));
  res.action_table.labels = res.classes.labels;
  res.action_table.entries.assign(n, std::vector<int>(n, kUndefined));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      int mid = out[r].transform->images[w0_];
      res.state_table.entries[r][c] =
          mid == kUndefined ? kUndefined : out[c].transform->images[mid];
      PartialTransform comp =
          compose_transforms(*out[c].transform, *out[r].transform);
      if (comp.empty_on(reach_) && !options_.admit_empty) continue;
      auto it = by_restriction.find(comp.restrict_to(reach_));
      if (it == by_restriction.end())
        throw std::logic_error(
            "internal closure bug: composite transform has no class");
      res.action_table.entries[r][c] = it->second;
    }
  }
  return res;
}

CayleyResult generate_cayley(const World& world, int w0,
                             EngineOptions options) {
  CayleyBuilder builder(world, w0, options);
  builder.run();
  return builder.result();
}

CayleyResult rebase(const CayleyResult& base, const World& world,
                    const Word& d, EngineOptions options) {
  const int w0p = world.apply_word(d, base.initial);
  if (w0p == kUndefined)
    throw std::invalid_argument("rebase word is undefined at the initial state");
  const std::vector<int> reach = reachable_from(world, w0p);

  // Restrict every class transform to the new reachable set; classes whose
  // restrictions coincide merge, and empty restrictions drop out.
  struct Merged {
    std::vector<Word> members;
    PartialTransform transform;
  };
  std::map<std::vector<int>, Merged> merged;
  for (const Word& rep : base.classes.labels) {
    PartialTransform t = word_transform(world, rep);
    if (!options.admit_empty && t.empty_on(reach)) continue;
    Merged& m = merged[t.restrict_to(reach)];
    if (m.members.empty()) m.transform = t;
    const auto& mem = base.classes.classes.at(rep);
    m.members.insert(m.members.end(), mem.begin(), mem.end());
  }

  CayleyResult res;
  res.initial = w0p;
  res.reachable = reach;
  struct ClassOut {
    Word rep;
    std::vector<Word> members;
    PartialTransform transform;
  };
  std::vector<ClassOut> out;
  for (auto& [key, m] : merged) {
    ClassOut c;
    std::sort(m.members.begin(), m.members.end(), word_less);
    std::vector<Word> nonempty;
    for (const Word& w : m.members)
      if (!w.empty()) nonempty.push_back(w);
    const std::vector<Word>& pool = nonempty.empty() ? m.members : nonempty;
    c.rep = pool.front();
    c.members = m.members;
    c.transform = m.transform;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const ClassOut& a, const ClassOut& b) {
    return word_less(a.rep, b.rep);
  });

  const int n = static_cast<int>(out.size());
  std::map<std::vector<int>, int> by_restriction;
  for (int i = 0; i < n; ++i) {
    res.classes.labels.push_back(out[i].rep);
    res.classes.classes[out[i].rep] = out[i].members;
    for (const Word& m : out[i].members)
      res.classes.word_lookup[m] = out[i].rep;
    by_restriction[out[i].transform.restrict_to(reach)] = i;
  }
  res.state_table.labels = res.classes.labels;
  res.state_table.entries.assign(n, std::vector<int>(n, kUndefined));
  res.action_table.labels = res.classes.labels;
  res.action_table.entries.assign(n, std::vector<int>(n, kUndefined));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      int mid = out[r].transform.images[w0p];
      res.state_table.entries[r][c] =
          mid == kUndefined ? kUndefined : out[c].transform.images[mid];
      PartialTransform comp =
          compose_transforms(out[c].transform, out[r].transform);
      if (comp.empty_on(reach) && !options.admit_empty) continue;
      auto it = by_restriction.find(comp.restrict_to(reach));
      if (it == by_restriction.end())
        throw std::logic_error("rebase: composite transform has no class");
      res.action_table.entries[r][c] = it->second;
    }
  }
  return res;
}

bool same_algebra(const CayleyResult& a, const CayleyResult& b,
                  const World& world) {
  if (a.reachable != b.reachable) return false;
  if (a.classes.labels.size() != b.classes.labels.size()) return false;
  auto restrictions = [&](const CayleyResult& r) {
    std::map<std::vector<int>, int> out;
    for (std::size_t i = 0; i < r.classes.labels.size(); ++i)
      out[word_transform(world, r.classes.labels[i]).restrict_to(r.reachable)] =
          static_cast<int>(i);
    return out;
  };
  std::map<std::vector<int>, int> ra = restrictions(a), rb = restrictions(b);
  if (ra.size() != a.classes.labels.size()) return false;
  std::vector<int> a_to_b(ra.size());
  for (const auto& [key, ia] : ra) {
    auto it = rb.find(key);
    if (it == rb.end()) return false;
    a_to_b[ia] = it->second;
  }
  const int n = static_cast<int>(ra.size());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      int ea = a.action_table.entries[r][c];
      int eb = b.action_table.entries[a_to_b[r]][a_to_b[c]];
      if ((ea == kUndefined) != (eb == kUndefined)) return false;
      if (ea != kUndefined && a_to_b[ea] != eb) return false;
    }
  }
  return true;
}

}  // namespace actalg
