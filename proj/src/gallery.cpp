#include "actalg/gallery.hpp"

#include <stdexcept>

namespace actalg {
namespace {

std::string wlabel(int i) { return "w" + std::to_string(i); }

}  // namespace

World build_cyclical_grid(
    int rows, int cols,
    const std::vector<std::pair<std::string, std::string>>& blocked,
    Treatment treatment) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("grid dimensions must be >= 1");
  std::vector<std::string> states;
  for (int i = 0; i < rows * cols; ++i) states.push_back(wlabel(i));
  std::vector<std::string> alphabet{"1", "U", "D", "L", "R"};

  std::vector<TransitionSpec> transitions;
  auto idx = [&](int r, int c) {
    return ((r % rows + rows) % rows) * cols + ((c % cols + cols) % cols);
  };
  auto is_blocked = [&](int s, const std::string& a) {
    for (const auto& [bs, ba] : blocked) {
      if (bs == wlabel(s) && ba == a) return true;
    }
    return false;
  };
  for (const auto& [bs, ba] : blocked) {
    bool state_ok = false;
    for (int i = 0; i < rows * cols; ++i) state_ok |= (wlabel(i) == bs);
    bool action_ok = false;
    for (const auto& a : alphabet) action_ok |= (a == ba);
    if (!state_ok || !action_ok)
      throw std::invalid_argument("blocked pair references unknown cell/action: (" +
                                  bs + ", " + ba + ")");
  }
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      int s = idx(r, c);
      struct Move {
        const char* sym;
        int dr, dc;
      };
      for (const Move& m : {Move{"U", -1, 0}, Move{"D", 1, 0}, Move{"L", 0, -1},
                            Move{"R", 0, 1}}) {
        if (is_blocked(s, m.sym)) continue;
        transitions.push_back(
            {wlabel(s), m.sym, wlabel(idx(r + m.dr, c + m.dc))});
      }
    }
  }
  return World("cyclical-grid", states, alphabet, transitions, treatment,
               "w0");
}

World build_cyclical_1d_block(int n) {
  if (n < 3) throw std::invalid_argument("block world needs n >= 3");
  // States enumerated by block position, then agent position skipping the
  // block's cell: index = block * (n-1) + (agent < block ? agent : agent-1).
  // This puts w0 at (agent 1, block 0).
  std::vector<std::pair<int, int>> pairs;  // (agent, block)
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a)
      if (a != b) pairs.emplace_back(a, b);
  auto index_of = [&](int a, int b) {
    return b * (n - 1) + (a < b ? a : a - 1);
  };
  std::vector<std::string> states;
  for (std::size_t i = 0; i < pairs.size(); ++i) states.push_back(wlabel(i));

  std::vector<TransitionSpec> transitions;
  auto step = [&](int a, int b, int d) {
    int a2 = (a + d % n + n) % n;
    int b2 = b;
    if (a2 == b2) b2 = (b2 + d % n + n) % n;  // push the block
    return std::make_pair(a2, b2);
  };
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [a, b] = pairs[i];
    auto [la, lb] = step(a, b, -1);
    auto [ra, rb] = step(a, b, +1);
    transitions.push_back({wlabel(i), "L", wlabel(index_of(la, lb))});
    transitions.push_back({wlabel(i), "R", wlabel(index_of(ra, rb))});
  }
  return World("cyclical-1d-block", states, {"1", "L", "R"}, transitions,
               Treatment::Identity, "w0");
}

World build_cyclical_1d_consumable(int n, int consumable_pos,
                                   Treatment treatment) {
  if (n < 2) throw std::invalid_argument("consumable world needs n >= 2");
  if (consumable_pos < 0 || consumable_pos >= n)
    throw std::invalid_argument("consumable position out of range");
  // w0..w{n-1}: consumable present, agent at index; wn..w{2n-1}: absent.
  std::vector<std::string> states;
  for (int i = 0; i < 2 * n; ++i) states.push_back(wlabel(i));
  std::vector<TransitionSpec> transitions;
  for (int present = 1; present >= 0; --present) {
    int base = present ? 0 : n;
    for (int a = 0; a < n; ++a) {
      transitions.push_back(
          {wlabel(base + a), "L", wlabel(base + (a + n - 1) % n)});
      transitions.push_back({wlabel(base + a), "R", wlabel(base + (a + 1) % n)});
    }
  }
  transitions.push_back({wlabel(consumable_pos), "C", wlabel(n + consumable_pos)});
  return World("cyclical-1d-consumable", states, {"1", "L", "R", "C"},
               transitions, treatment, "w0");
}

const std::vector<GalleryEntry>& gallery() {
  static const std::vector<GalleryEntry> entries{
      {"cyclical-2x2", "2x2 cyclical grid, no walls", 4, false},
      {"wall-identity", "2x2 cyclical grid, wall between w0 and w1, blocked moves act as identity", 26, false},
      {"wall-masked", "2x2 cyclical grid, wall between w0 and w1, blocked moves undefined", 59, true},
      {"block-1d4", "1D cyclical axis (n=4) with a movable block", 17, false},
      {"consumable-identity", "1D cyclical axis (n=4) with a consumable at position 1, restricted consume acts as identity", 64, false},
      {"consumable-masked", "1D cyclical axis (n=4) with a consumable at position 1, restricted consume undefined", 20, false},
  };
  return entries;
}

std::optional<GalleryEntry> gallery_entry(const std::string& key) {
  for (const GalleryEntry& e : gallery())
    if (e.key == key) return e;
  return std::nullopt;
}

World build_gallery_world(const std::string& key) {
  const std::vector<std::pair<std::string, std::string>> wall{{"w0", "R"},
                                                              {"w1", "L"}};
  if (key == "cyclical-2x2")
    return build_cyclical_grid(2, 2, {}, Treatment::Identity);
  if (key == "wall-identity")
    return build_cyclical_grid(2, 2, wall, Treatment::Identity);
  if (key == "wall-masked")
    return build_cyclical_grid(2, 2, wall, Treatment::Masked);
  if (key == "block-1d4") return build_cyclical_1d_block(4);
  if (key == "consumable-identity")
    return build_cyclical_1d_consumable(4, 1, Treatment::Identity);
  if (key == "consumable-masked")
    return build_cyclical_1d_consumable(4, 1, Treatment::Masked);
  throw std::invalid_argument("unknown gallery world: " + key);
}

}  // namespace actalg
