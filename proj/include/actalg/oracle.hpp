#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "actalg/cayley.hpp"
#include "actalg/world.hpp"

namespace actalg {

struct OracleOptions {
  bool admit_empty = false;
  // Compare transforms on the whole state set rather than the reachable
  // sub-world (diagnostic variant).
  bool unrestricted = false;
  std::size_t max_elements = 100000;
};

// Brute-force closure of the generator transforms under composition,
// breadth-first by word length, deduplicated by transform (restricted to
// the reachable set unless `unrestricted`).
struct ClosureResult {
  std::vector<int> reach;                     // comparison domain, sorted
  std::vector<PartialTransform> transforms;   // full transforms, one per class
  std::vector<Word> witnesses;                // length-then-lex minimal
  // composition[f][g] = index of g∘f, or kUndefined when the composite is
  // the (excluded) empty transform.
  std::vector<std::vector<int>> composition;
  long long empty_compositions = 0;  // pairs composing to the empty transform
  bool capped = false;
};

ClosureResult generate_closure(const World& world, int w0,
                               OracleOptions options = {});

struct CompareReport {
  bool match = false;
  std::string detail;  // first mismatch, or a summary on success
};

// Verifies that the engine's class partition presents the same algebra as
// the closure: equal counts, a one-to-one transform correspondence, member
// words landing on their representative's transform, and agreeing
// composition tables.
CompareReport compare_partitions(const CayleyResult& engine,
                                 const ClosureResult& closure,
                                 const World& world);

}  // namespace actalg
