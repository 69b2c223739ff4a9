#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "actalg/cayley.hpp"
#include "actalg/world.hpp"

namespace actalg {

// Order of an element inside the finite table. A power chain either hits
// the identity class (group order n, minimal), or enters a cycle without
// ever reaching it (index i, period p: a^i = a^{i+p}, both minimal). When
// the chain runs into an undefined (empty-composite) entry, the index/period
// of the defined prefix is reported with `partial` set.
struct OrderInfo {
  bool is_group_order = false;
  int group_order = 0;
  int index = 0;
  int period = 0;
  bool partial = false;
};

enum class AlgebraClass {
  CommutativeGroup,
  Group,
  CommutativeMonoid,
  Monoid,
  SmallCategory,
};

std::string to_string(AlgebraClass c);

struct InverseInfo {
  std::vector<int> left, right, two_sided;  // label indices
};

struct AlgebraReport {
  bool totality = false;
  int two_sided_identity = -1;           // label index, -1 when absent
  std::vector<int> left_identities;      // e with e∘a = a for all a
  std::vector<int> right_identities;     // e with a∘e = a for all a
  std::vector<InverseInfo> inverses;     // per label
  bool all_inverses = false;             // every label has a two-sided inverse
  bool associative = false;
  bool commutative = false;
  AlgebraClass classification = AlgebraClass::SmallCategory;
  std::vector<OrderInfo> orders;         // per label
};

// All flags are decided purely from the action Cayley table. Associativity
// and commutativity treat undefined entries as an absorbing value: both
// sides of a triple must agree, undefined matching only undefined.
AlgebraReport analyze(const ActionCayleyTable& table);

std::vector<OrderInfo> element_orders(const ActionCayleyTable& table);

enum class CheckOutcome { Pass, Fail, Inconclusive };

struct ConditionResult {
  CheckOutcome outcome = CheckOutcome::Fail;
  std::string detail;  // witness or counterexample
};

// World condition 1 (unrestricted actions): every minimum action is defined
// at every state, which extends to all words.
ConditionResult check_wc1(const World& world);

// World condition 2 (inverse actions): every label has a state-independent
// two-sided inverse in the table.
ConditionResult check_wc2(const ActionCayleyTable& table);

// World condition 3 (action homogeneity): for every ordered state pair
// (w1, w2) there is a bijection sigma with sigma(w1) = w2 preserving every
// labeled minimum transition in both directions. Exact backtracking with
// forward checking; exceeding `node_cap` yields Inconclusive, never Fail.
ConditionResult check_wc3_homogeneity(const World& world,
                                      long long node_cap = 2000000);

enum class Reversibility { Reversible, Irreversible, UndefinedApplication };

// A word is reversible in w iff w is reachable again from word * w. An
// application that is undefined at w is flagged distinctly: the notion
// presumes the application exists.
Reversibility reversible_in(const World& world, const Word& word, int w);

}  // namespace actalg
