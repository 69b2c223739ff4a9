#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "actalg/world.hpp"

namespace actalg {

// The partition of explored words realizing A/~. Two recorded words share a
// class iff their partial transforms agree on every state reachable from
// the initial state (post-convergence).
struct EquivalenceClassSet {
  // Canonical representatives, sorted shortest-first then lexicographically
  // by alphabet index.
  std::vector<Word> labels;
  std::map<Word, std::vector<Word>> classes;  // representative -> members
  std::map<Word, Word> word_lookup;           // member word -> representative
};

// entry[r][c] = c * (r * w0); kUndefined where the application is undefined.
struct StateCayleyTable {
  std::vector<Word> labels;
  std::vector<std::vector<int>> entries;
};

// entry[r][c] = index (into labels) of the class of c∘r; kUndefined only
// when the composite's transform is empty on the reachable set.
struct ActionCayleyTable {
  std::vector<Word> labels;
  std::vector<std::vector<int>> entries;
};

struct EngineOptions {
  // Whether a composite whose transform is defined nowhere on the reachable
  // set counts as an algebra element. Off by default; when off, such
  // composites appear as undefined entries in the action Cayley table.
  bool admit_empty = false;
  std::size_t max_elements = 10000;
};

struct CayleyResult {
  StateCayleyTable state_table;
  ActionCayleyTable action_table;
  EquivalenceClassSet classes;
  int initial = 0;
  std::vector<int> reachable;  // sorted states reachable from initial
};

class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(std::size_t count, std::size_t cap)
      : std::runtime_error("element cap exceeded: " + std::to_string(count) +
                           " classes with cap " + std::to_string(cap)),
        count_(count) {}
  std::size_t count() const { return count_; }

 private:
  std::size_t count_;
};

// Incremental construction state for the table-growth algorithm. The
// algebra is defined relative to the sub-world reachable from w0;
// disconnected parts never influence equivalence.
class CayleyBuilder {
 public:
  CayleyBuilder(const World& world, int w0, EngineOptions options = {});

  // Records `a` as a new class with itself as representative and caches its
  // transform (the new row and column of the growing state Cayley table).
  void add_element(const Word& a);

  // Every current label whose row/column outcome profile against the
  // current labels matches a's. Equal profiles at a fixed point imply equal
  // transforms on the reachable set; the comparison spans every label
  // position, including undefined outcomes.
  std::vector<Word> search_for_equivalents(const Word& a) const;

  // Scans all (row, column) composites; each is either rejected (empty
  // transform, when not admitted), absorbed into an equivalent class, or
  // queued exactly once. Row-major order; FIFO queue deduplicated by word.
  void search_for_new_candidates();

  // For each class other than a_C's own, members whose outcome at the probe
  // state a_C * w0 differs from their representative's are split off,
  // regrouped by full profile, and either merged into an equivalent
  // existing class or promoted to new classes.
  void search_for_broken_equivalence_classes(const Word& a_C);

  // Runs the growth loop to its fixed point.
  void run();

  bool converged() const { return pending_.empty(); }
  const std::vector<Word>& growth_labels() const { return labels_; }
  const World& world() const { return world_; }
  int initial() const { return w0_; }
  const std::vector<int>& reachable() const { return reach_; }
  const PartialTransform& transform_of(const Word& w) const;

  // Finalized outputs (labels re-sorted canonically).
  CayleyResult result() const;

 private:
  struct Profile {
    std::vector<int> row, col;
    bool operator==(const Profile&) const = default;
    bool operator<(const Profile& o) const {
      return std::tie(row, col) < std::tie(o.row, o.col);
    }
  };

  const PartialTransform& cached(const Word& w);
  const PartialTransform* find_cached(const Word& w) const;
  bool empty_on_reach(const Word& w) const;
  Profile profile(const Word& a) const;
  void absorb(const Word& rep, const Word& member);
  Word pick_representative(const std::vector<Word>& members) const;

  const World& world_;
  int w0_;
  EngineOptions options_;
  std::vector<int> reach_;
  std::map<Word, PartialTransform> transforms_;
  std::vector<Word> labels_;  // in growth order
  std::vector<Word> seeds_;   // admitted single-symbol words
  std::map<Word, std::vector<Word>> members_;
  std::map<Word, Word> lookup_;
  std::vector<Word> pending_;  // FIFO candidate queue
  std::map<Word, bool> seen_candidate_;  // queued or rejected words
};

// Algorithm entry points. generate_cayley runs the growth loop and emits
// both tables plus the class partition.
CayleyResult generate_cayley(const World& world, int w0,
                             EngineOptions options = {});

// Derives the Cayley tables for initial state d * w0 from an existing
// result by restricting every class transform to the new reachable set,
// rather than re-running generation. Throws std::invalid_argument when
// d * w0 is undefined.
CayleyResult rebase(const CayleyResult& base, const World& world,
                    const Word& d, EngineOptions options = {});

// True when the two results present the same algebra: same partition of
// restricted transforms and the same composition table under the transform
// correspondence (labels may differ).
bool same_algebra(const CayleyResult& a, const CayleyResult& b,
                  const World& world);

}  // namespace actalg
