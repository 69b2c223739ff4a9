#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "actalg/world.hpp"

namespace actalg {

// Cyclical rows x cols grid. States are labeled w0..w{rows*cols-1} with
// index = row * cols + col. Alphabet {1, U, D, L, R}: U decrements the row,
// D increments it, L decrements the column, R increments it, all with
// wraparound. Pairs in `blocked` (state label, action symbol) are removed
// from the raw dynamics before treatment completion.
World build_cyclical_grid(
    int rows, int cols,
    const std::vector<std::pair<std::string, std::string>>& blocked,
    Treatment treatment);

// 1D cyclical axis of length n with an agent and a movable block; moving
// into the block pushes it. States are (agent, block) pairs with
// agent != block, enumerated by block position then agent position, so
// there are n*(n-1) states; w0 is (agent 1, block 0). Alphabet {1, L, R}.
World build_cyclical_1d_block(int n);

// 1D cyclical axis of length n with a consumable at `consumable_pos`.
// States w0..w{n-1} have the consumable present and the agent at the state
// index; wn..w{2n-1} are the same agent positions with it absent. Alphabet
// {1, L, R, C}; C is listed only where the agent sits on the present
// consumable and flips present -> absent.
World build_cyclical_1d_consumable(int n, int consumable_pos,
                                   Treatment treatment);

struct GalleryEntry {
  std::string key;
  std::string description;
  // Expected |A/~| under the convention that reproduces the published
  // count (see expected_admits_empty).
  int expected_elements;
  // True when the published count only matches with the everywhere-
  // undefined composite admitted as an element.
  bool expected_admits_empty;
};

const std::vector<GalleryEntry>& gallery();
// Throws std::invalid_argument for an unknown key.
World build_gallery_world(const std::string& key);
std::optional<GalleryEntry> gallery_entry(const std::string& key);

}  // namespace actalg
