#pragma once

#include <map>
#include <string>
#include <vector>

namespace actalg {

// Sentinel for an undefined state image. Partiality is data here, not an
// error: masked worlds need undefinedness patterns compared for equality.
constexpr int kUndefined = -1;

enum class Treatment { Identity, Masked };

std::string to_string(Treatment t);
Treatment treatment_from_string(const std::string& s);

struct TransitionSpec {
  std::string from;
  std::string action;
  std::string to;
};

// An action word is a sequence of alphabet indices in display order: the
// leftmost symbol is applied LAST. The word a_n...a_1 applies a_1 first,
// so the word of c∘r is c's word followed by r's word.
using Word = std::vector<int>;

class World {
 public:
  // States and actions are indexed densely in the order given; labels are
  // display-only after construction. The alphabet must contain the identity
  // symbol "1". Transitions are completed per the treatment: Identity fills
  // every unlisted (state, action) with a self-loop, Masked leaves it
  // undefined. The raw (pre-treatment) transition list is retained.
  World(std::string name, std::vector<std::string> states,
        std::vector<std::string> alphabet,
        const std::vector<TransitionSpec>& transitions, Treatment treatment,
        const std::string& initial);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& states() const { return states_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  Treatment treatment() const { return treatment_; }
  int initial() const { return initial_; }
  int identity_action() const { return identity_action_; }
  const std::vector<TransitionSpec>& raw_transitions() const { return raw_; }

  int num_states() const { return static_cast<int>(states_.size()); }
  int num_actions() const { return static_cast<int>(alphabet_.size()); }

  // -1 when the label is unknown.
  int state_index(const std::string& label) const;
  int action_index(const std::string& symbol) const;

  // Post-treatment dynamics. Undefined is only possible under Masked.
  int apply_min(int action, int state) const;

  // Right-to-left fold of apply_min; the first undefined step makes the
  // whole application undefined.
  int apply_word(const Word& word, int state) const;

 private:
  std::string name_;
  std::vector<std::string> states_;
  std::vector<std::string> alphabet_;
  Treatment treatment_;
  int initial_;
  int identity_action_;
  std::vector<int> dynamics_;  // [state * num_actions + action]
  std::vector<TransitionSpec> raw_;
  std::map<std::string, int> state_index_;
  std::map<std::string, int> action_index_;
};

// A partial self-map of the state set: images[i] is the image of state i,
// or kUndefined.
struct PartialTransform {
  std::vector<int> images;

  bool operator==(const PartialTransform& other) const = default;
  bool operator<(const PartialTransform& other) const {
    return images < other.images;
  }

  bool is_identity() const;
  bool total() const;
  // True when undefined at every state of `states`.
  bool empty_on(const std::vector<int>& states) const;
  // The transform restricted to `states` (a vector of images in the order
  // given, for comparison on a sub-world).
  std::vector<int> restrict_to(const std::vector<int>& states) const;
};

PartialTransform identity_transform(int num_states);
PartialTransform word_transform(const World& world, const Word& word);

// (g∘f)(w): defined iff f(w) is defined and g(f(w)) is defined.
PartialTransform compose_transforms(const PartialTransform& g,
                                    const PartialTransform& f);

// Breadth-first closure under all defined minimum transitions, sorted.
std::vector<int> reachable_from(const World& world, int state);

// Word helpers. format_word renders the empty word as "1". parse_word
// tokenizes greedily by longest symbol match.
std::string format_word(const World& world, const Word& word);
Word parse_word(const World& world, const std::string& text);

// Canonical word order: length first, then lexicographic by alphabet index.
bool word_less(const Word& a, const Word& b);

// The word of c∘r: c's symbols followed by r's (r is applied first).
Word concat_words(const Word& c, const Word& r);

}  // namespace actalg
