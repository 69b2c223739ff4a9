#include "actalg/analysis.hpp"

#include <algorithm>

namespace actalg {
namespace {

// Composition helper over the table: class of b∘a, i.e. apply a then b.
// entry[r][c] is c∘r, so compose(a, b) = entries[a][b]. kUndefined absorbs.
int tbl(const ActionCayleyTable& t, int a, int b) {
  if (a == kUndefined || b == kUndefined) return kUndefined;
  return t.entries[a][b];
}

}  // namespace

std::string to_string(AlgebraClass c) {
  switch (c) {
    case AlgebraClass::CommutativeGroup: return "commutative group";
    case AlgebraClass::Group: return "group";
    case AlgebraClass::CommutativeMonoid: return "commutative monoid";
    case AlgebraClass::Monoid: return "monoid";
    case AlgebraClass::SmallCategory: return "small category";
  }
  return "?";
}

std::vector<OrderInfo> element_orders(const ActionCayleyTable& table) {
  const int n = static_cast<int>(table.labels.size());
  // Identity label: two-sided, if present.
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = table.entries[a][e] == a && table.entries[e][a] == a;
    if (ok) {
      identity = e;
      break;
    }
  }
  std::vector<OrderInfo> out(n);
  for (int a = 0; a < n; ++a) {
    OrderInfo& info = out[a];
    std::vector<int> chain{a};  // chain[k] = class of a^(k+1)
    for (;;) {
      int cur = chain.back();
      if (cur == identity) {
        info.is_group_order = true;
        info.group_order = static_cast<int>(chain.size());
        break;
      }
      int nxt = tbl(table, cur, a);
      if (nxt == kUndefined) {
        // Defined prefix only: the chain vanished into an empty composite.
        info.partial = true;
        info.index = static_cast<int>(chain.size());
        info.period = 0;
        break;
      }
      auto it = std::find(chain.begin(), chain.end(), nxt);
      if (it != chain.end()) {
        info.index = static_cast<int>(it - chain.begin()) + 1;
        info.period = static_cast<int>(chain.end() - it);
        break;
      }
      chain.push_back(nxt);
    }
  }
  return out;
}

AlgebraReport analyze(const ActionCayleyTable& table) {
  AlgebraReport rep;
  const int n = static_cast<int>(table.labels.size());

  rep.totality = true;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (table.entries[r][c] == kUndefined) rep.totality = false;

  for (int e = 0; e < n; ++e) {
    bool left = true, right = true;
    for (int a = 0; a < n; ++a) {
      if (table.entries[a][e] != a) left = false;   // e∘a = a
      if (table.entries[e][a] != a) right = false;  // a∘e = a
    }
    if (left) rep.left_identities.push_back(e);
    if (right) rep.right_identities.push_back(e);
    if (left && right && rep.two_sided_identity < 0) rep.two_sided_identity = e;
  }

  rep.inverses.resize(n);
  rep.all_inverses = rep.two_sided_identity >= 0;
  const int id = rep.two_sided_identity;
  if (id >= 0) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        bool left = table.entries[a][b] == id;   // b∘a = 1
        bool right = table.entries[b][a] == id;  // a∘b = 1
        if (left) rep.inverses[a].left.push_back(b);
        if (right) rep.inverses[a].right.push_back(b);
        if (left && right) rep.inverses[a].two_sided.push_back(b);
      }
      if (rep.inverses[a].two_sided.empty()) rep.all_inverses = false;
    }
  }

  rep.associative = true;
  for (int a = 0; a < n && rep.associative; ++a)
    for (int b = 0; b < n && rep.associative; ++b)
      for (int c = 0; c < n; ++c) {
        // (c∘b)∘a vs c∘(b∘a), both starting from a.
        if (tbl(table, tbl(table, a, b), c) != tbl(table, a, tbl(table, b, c))) {
          rep.associative = false;
          break;
        }
      }

  rep.commutative = true;
  for (int a = 0; a < n && rep.commutative; ++a)
    for (int b = 0; b < n; ++b)
      if (table.entries[a][b] != table.entries[b][a]) {
        rep.commutative = false;
        break;
      }

  const bool has_identity = rep.two_sided_identity >= 0;
  if (rep.totality && has_identity && rep.all_inverses && rep.associative)
    rep.classification = rep.commutative ? AlgebraClass::CommutativeGroup
                                         : AlgebraClass::Group;
  else if (rep.totality && has_identity && rep.associative)
    rep.classification = rep.commutative ? AlgebraClass::CommutativeMonoid
                                         : AlgebraClass::Monoid;
  else
    rep.classification = AlgebraClass::SmallCategory;

  rep.orders = element_orders(table);
  return rep;
}

ConditionResult check_wc1(const World& world) {
  for (int s = 0; s < world.num_states(); ++s) {
    for (int a = 0; a < world.num_actions(); ++a) {
      if (world.apply_min(a, s) == kUndefined) {
        return {CheckOutcome::Fail,
                "undefined at (" + world.states()[s] + ", " +
                    world.alphabet()[a] + ")"};
      }
    }
  }
  return {CheckOutcome::Pass, "every minimum action defined at every state"};
}

ConditionResult check_wc2(const ActionCayleyTable& table) {
  AlgebraReport rep = analyze(table);
  if (rep.two_sided_identity < 0)
    return {CheckOutcome::Fail, "no two-sided identity element"};
  for (std::size_t a = 0; a < rep.inverses.size(); ++a) {
    if (rep.inverses[a].two_sided.empty())
      return {CheckOutcome::Fail,
              "element has no two-sided inverse: index " + std::to_string(a)};
  }
  return {CheckOutcome::Pass, "every element has a two-sided inverse"};
}

namespace {

// Backtracking search for a transition-preserving bijection sigma with
// sigma(w1) = w2. Preservation is required in both directions: for every
// state w and action a, dynamics(sigma(w), a) must be defined exactly when
// dynamics(w, a) is, and equal sigma(dynamics(w, a)).
class HomogeneitySearch {
 public:
  HomogeneitySearch(const World& world, long long cap)
      : world_(world), cap_(cap) {}

  // 1 = found, 0 = exhausted without success, -1 = cap exceeded.
  int find(int w1, int w2) {
    const int n = world_.num_states();
    sigma_.assign(n, -1);
    used_.assign(n, false);
    nodes_ = 0;
    if (!assign(w1, w2)) return 0;
    int r = extend();
    return r;
  }

 private:
  // Propagates forced images along defined transitions; false on conflict.
  bool assign(int w, int image) {
    if (sigma_[w] == image) return true;
    if (sigma_[w] != -1 || used_[image]) return false;
    sigma_[w] = image;
    used_[image] = true;
    trail_.push_back(w);
    for (int a = 0; a < world_.num_actions(); ++a) {
      int t = world_.apply_min(a, w);
      int ti = world_.apply_min(a, image);
      if ((t == kUndefined) != (ti == kUndefined)) return false;
      if (t != kUndefined && !assign(t, ti)) return false;
    }
    return true;
  }

  int extend() {
    if (++nodes_ > cap_) return -1;
    int w = -1;
    for (int i = 0; i < world_.num_states(); ++i)
      if (sigma_[i] == -1) {
        w = i;
        break;
      }
    if (w == -1) return verify() ? 1 : 0;
    for (int image = 0; image < world_.num_states(); ++image) {
      if (used_[image]) continue;
      std::size_t mark = trail_.size();
      if (assign(w, image)) {
        int r = extend();
        if (r != 0) return r;
      }
      while (trail_.size() > mark) {
        int s = trail_.back();
        trail_.pop_back();
        used_[sigma_[s]] = false;
        sigma_[s] = -1;
      }
    }
    return 0;
  }

  bool verify() const {
    for (int w = 0; w < world_.num_states(); ++w) {
      for (int a = 0; a < world_.num_actions(); ++a) {
        int t = world_.apply_min(a, w);
        int ti = world_.apply_min(a, sigma_[w]);
        if ((t == kUndefined) != (ti == kUndefined)) return false;
        if (t != kUndefined && sigma_[t] != ti) return false;
      }
    }
    return true;
  }

  const World& world_;
  long long cap_;
  long long nodes_ = 0;
  std::vector<int> sigma_;
  std::vector<bool> used_;
  std::vector<int> trail_;
};

}  // namespace

ConditionResult check_wc3_homogeneity(const World& world, long long node_cap) {
  HomogeneitySearch search(world, node_cap);
  for (int w1 = 0; w1 < world.num_states(); ++w1) {
    for (int w2 = 0; w2 < world.num_states(); ++w2) {
      int r = search.find(w1, w2);
      if (r == -1)
        return {CheckOutcome::Inconclusive,
                "search cap exceeded at pair (" + world.states()[w1] + ", " +
                    world.states()[w2] + ")"};
      if (r == 0)
        return {CheckOutcome::Fail,
                "no transition-preserving bijection maps " + world.states()[w1] +
                    " to " + world.states()[w2]};
    }
  }
  return {CheckOutcome::Pass, "all state pairs related by a bijection"};
}

Reversibility reversible_in(const World& world, const Word& word, int w) {
  int image = world.apply_word(word, w);
  if (image == kUndefined) return Reversibility::UndefinedApplication;
  std::vector<int> back = reachable_from(world, image);
  return std::binary_search(back.begin(), back.end(), w)
             ? Reversibility::Reversible
             : Reversibility::Irreversible;
}

}  // namespace actalg
