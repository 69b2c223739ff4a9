#include "actalg/world.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace actalg {

std::string to_string(Treatment t) {
  return t == Treatment::Identity ? "identity" : "masked";
}

Treatment treatment_from_string(const std::string& s) {
  if (s == "identity") return Treatment::Identity;
  if (s == "masked") return Treatment::Masked;
  throw std::invalid_argument("unknown treatment: \"" + s +
                              "\" (expected \"identity\" or \"masked\")");
}

World::World(std::string name, std::vector<std::string> states,
             std::vector<std::string> alphabet,
             const std::vector<TransitionSpec>& transitions,
             Treatment treatment, const std::string& initial)
    : name_(std::move(name)),
      states_(std::move(states)),
      alphabet_(std::move(alphabet)),
      treatment_(treatment),
      raw_(transitions) {
  if (states_.empty()) throw std::invalid_argument("world has no states");
  for (int i = 0; i < static_cast<int>(states_.size()); ++i) {
    if (!state_index_.emplace(states_[i], i).second)
      throw std::invalid_argument("duplicate state label: " + states_[i]);
  }
  for (int i = 0; i < static_cast<int>(alphabet_.size()); ++i) {
    if (alphabet_[i].empty())
      throw std::invalid_argument("empty action symbol");
    if (!action_index_.emplace(alphabet_[i], i).second)
      throw std::invalid_argument("duplicate action symbol: " + alphabet_[i]);
  }
  auto id_it = action_index_.find("1");
  if (id_it == action_index_.end())
    throw std::invalid_argument("alphabet must contain the identity \"1\"");
  identity_action_ = id_it->second;

  auto init_it = state_index_.find(initial);
  if (init_it == state_index_.end())
    throw std::invalid_argument("initial state not in state set: " + initial);
  initial_ = init_it->second;

  dynamics_.assign(states_.size() * alphabet_.size(), kUndefined);
  for (const TransitionSpec& t : transitions) {
    int from = state_index(t.from);
    int to = state_index(t.to);
    int act = action_index(t.action);
    if (from < 0) throw std::invalid_argument("unknown state: " + t.from);
    if (to < 0) throw std::invalid_argument("unknown state: " + t.to);
    if (act < 0) throw std::invalid_argument("unknown action: " + t.action);
    if (act == identity_action_ && to != from)
      throw std::invalid_argument("identity action must be a self-loop at " +
                                  t.from);
    int& cell = dynamics_[from * alphabet_.size() + act];
    if (cell != kUndefined && cell != to)
      throw std::invalid_argument("determinism violation: two transitions for (" +
                                  t.from + ", " + t.action + ")");
    cell = to;
  }
  // Treatment completion: trivial transitions always exist; under Identity
  // every unlisted pair becomes a self-loop.
  for (int s = 0; s < num_states(); ++s) {
    dynamics_[s * alphabet_.size() + identity_action_] = s;
    if (treatment_ == Treatment::Identity) {
      for (int a = 0; a < num_actions(); ++a) {
        int& cell = dynamics_[s * alphabet_.size() + a];
        if (cell == kUndefined) cell = s;
      }
    }
  }
}

int World::state_index(const std::string& label) const {
  auto it = state_index_.find(label);
  return it == state_index_.end() ? -1 : it->second;
}

int World::action_index(const std::string& symbol) const {
  auto it = action_index_.find(symbol);
  return it == action_index_.end() ? -1 : it->second;
}

int World::apply_min(int action, int state) const {
  if (action < 0 || action >= num_actions())
    throw std::invalid_argument("action index out of range");
  if (state < 0 || state >= num_states())
    throw std::invalid_argument("state index out of range");
  return dynamics_[state * alphabet_.size() + action];
}

int World::apply_word(const Word& word, int state) const {
  int cur = state;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (cur == kUndefined) return kUndefined;
    cur = apply_min(*it, cur);
  }
  return cur;
}

bool PartialTransform::is_identity() const {
  for (int i = 0; i < static_cast<int>(images.size()); ++i)
    if (images[i] != i) return false;
  return true;
}

bool PartialTransform::total() const {
  return std::none_of(images.begin(), images.end(),
                      [](int v) { return v == kUndefined; });
}

bool PartialTransform::empty_on(const std::vector<int>& states) const {
  return std::all_of(states.begin(), states.end(),
                     [&](int s) { return images[s] == kUndefined; });
}

std::vector<int> PartialTransform::restrict_to(
    const std::vector<int>& states) const {
  std::vector<int> out;
  out.reserve(states.size());
  for (int s : states) out.push_back(images[s]);
  return out;
}

PartialTransform identity_transform(int num_states) {
  PartialTransform t;
  t.images.resize(num_states);
  for (int i = 0; i < num_states; ++i) t.images[i] = i;
  return t;
}

PartialTransform word_transform(const World& world, const Word& word) {
  PartialTransform t;
  t.images.resize(world.num_states());
  for (int s = 0; s < world.num_states(); ++s)
    t.images[s] = world.apply_word(word, s);
  return t;
}

PartialTransform compose_transforms(const PartialTransform& g,
                                    const PartialTransform& f) {
  if (g.images.size() != f.images.size())
    throw std::invalid_argument("transform dimension mismatch");
  PartialTransform h;
  h.images.resize(f.images.size());
  for (std::size_t i = 0; i < f.images.size(); ++i)
    h.images[i] = f.images[i] == kUndefined ? kUndefined : g.images[f.images[i]];
  return h;
}

std::vector<int> reachable_from(const World& world, int state) {
  if (state < 0 || state >= world.num_states())
    throw std::invalid_argument("state index out of range");
  std::set<int> seen{state};
  std::deque<int> frontier{state};
  while (!frontier.empty()) {
    int s = frontier.front();
    frontier.pop_front();
    for (int a = 0; a < world.num_actions(); ++a) {
      int t = world.apply_min(a, s);
      if (t != kUndefined && seen.insert(t).second) frontier.push_back(t);
    }
  }
  return {seen.begin(), seen.end()};
}

std::string format_word(const World& world, const Word& word) {
  if (word.empty()) return world.alphabet()[world.identity_action()];
  std::string out;
  for (int a : word) out += world.alphabet().at(a);
  return out;
}

Word parse_word(const World& world, const std::string& text) {
  Word out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    int best = -1;
    std::size_t best_len = 0;
    for (int a = 0; a < world.num_actions(); ++a) {
      const std::string& sym = world.alphabet()[a];
      if (sym.size() > best_len && text.compare(pos, sym.size(), sym) == 0) {
        best = a;
        best_len = sym.size();
      }
    }
    if (best < 0)
      throw std::invalid_argument("cannot tokenize word \"" + text +
                                  "\" at position " + std::to_string(pos));
    out.push_back(best);
    pos += best_len;
  }
  return out;
}

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Word concat_words(const Word& c, const Word& r) {
  Word out = c;
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

}  // namespace actalg
