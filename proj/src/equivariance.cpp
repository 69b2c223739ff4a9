#include "actalg/equivariance.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace actalg {
namespace {

std::string elem(const FiniteActionStructure& s, int i) {
  return i == kUndefined ? "undefined" : s.elements[i];
}

std::string point(const FiniteActionStructure& s, int i) {
  return i == kUndefined ? "undefined" : s.carrier[i];
}

// Induced action of factor j on coordinate values: outcome[g][xj], with an
// inconsistency reported when two witnesses disagree. Returns false and
// fills `why` on inconsistency.
bool induced_factor_action(const FiniteActionStructure& s,
                           const Decomposition& dec, int j,
                           std::vector<std::vector<int>>* out,
                           std::string* why) {
  const int ne = static_cast<int>(dec.factor_elements[j].size());
  const int nx = dec.factor_carrier_sizes[j];
  out->assign(ne, std::vector<int>(nx, kUndefined));
  // Remember one witness per cell for counterexample reporting.
  std::vector<std::vector<std::pair<int, int>>> witness(
      ne, std::vector<std::pair<int, int>>(nx, {-1, -1}));
  for (std::size_t a = 0; a < s.elements.size(); ++a) {
    const int gj = dec.element_coords[a][j];
    for (std::size_t x = 0; x < s.carrier.size(); ++x) {
      const int y = s.act[a][x];
      if (y == kUndefined) continue;
      const int xj = dec.carrier_coords[x][j];
      const int yj = dec.carrier_coords[y][j];
      int& cell = (*out)[gj][xj];
      if (cell == kUndefined) {
        cell = yj;
        witness[gj][xj] = {static_cast<int>(a), static_cast<int>(x)};
      } else if (cell != yj) {
        auto [a0, x0] = witness[gj][xj];
        *why = "factor " + std::to_string(j) + ": coordinate of act(" +
               s.elements[a] + ", " + s.carrier[x] +
               ") conflicts with act(" + s.elements[a0] + ", " +
               s.carrier[x0] + ")";
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::optional<std::string> validate_structure(const FiniteActionStructure& s) {
  const int ne = static_cast<int>(s.elements.size());
  const int nx = static_cast<int>(s.carrier.size());
  if (ne == 0) return "no elements";
  if (s.identity < 0 || s.identity >= ne) return "identity index out of range";
  if (static_cast<int>(s.compose.size()) != ne) return "compose table size mismatch";
  for (const auto& row : s.compose)
    if (static_cast<int>(row.size()) != ne) return "compose table size mismatch";
  if (static_cast<int>(s.act.size()) != ne) return "act table size mismatch";
  for (const auto& row : s.act)
    if (static_cast<int>(row.size()) != nx) return "act table size mismatch";

  for (int x = 0; x < nx; ++x)
    if (s.act[s.identity][x] != x)
      return "identity does not act trivially at " + s.carrier[x];
  for (int a = 0; a < ne; ++a) {
    if (s.compose[a][s.identity] != a || s.compose[s.identity][a] != a)
      return "identity is not a composition identity at " + s.elements[a];
  }
  // Compatibility where defined: act(a', act(a, x)) = act(a'∘a, x).
  for (int a2 = 0; a2 < ne; ++a2) {
    for (int a = 0; a < ne; ++a) {
      const int c = s.compose[a2][a];
      for (int x = 0; x < nx; ++x) {
        const int y = s.act[a][x];
        if (y == kUndefined || c == kUndefined) continue;
        const int lhs = s.act[a2][y];
        const int rhs = s.act[c][x];
        if (lhs != kUndefined && rhs != kUndefined && lhs != rhs)
          return "action incompatible with composition at (" + s.elements[a2] +
                 ", " + s.elements[a] + ", " + s.carrier[x] + ")";
      }
    }
  }
  // Associativity on defined triples.
  for (int a = 0; a < ne; ++a)
    for (int b = 0; b < ne; ++b)
      for (int c = 0; c < ne; ++c) {
        const int ab = s.compose[a][b];
        const int bc = s.compose[b][c];
        if (ab == kUndefined || bc == kUndefined) continue;
        if (s.compose[ab][c] != kUndefined && s.compose[a][bc] != kUndefined &&
            s.compose[ab][c] != s.compose[a][bc])
          return "composition not associative at (" + s.elements[a] + ", " +
                 s.elements[b] + ", " + s.elements[c] + ")";
      }
  return std::nullopt;
}

EquivarianceCheck check_equivariance(const FiniteActionStructure& actW,
                                     const FiniteActionStructure& actZ,
                                     const std::vector<int>& eta,
                                     bool strict) {
  if (actW.elements != actZ.elements || actW.compose != actZ.compose)
    throw std::invalid_argument(
        "equivariance requires matching element sets and composition tables");
  if (eta.size() != actW.carrier.size())
    throw std::invalid_argument("eta must be total on the source carrier");
  for (int z : eta)
    if (z < 0 || z >= static_cast<int>(actZ.carrier.size()))
      throw std::invalid_argument("eta image out of the target carrier");

  for (std::size_t a = 0; a < actW.elements.size(); ++a) {
    for (std::size_t w = 0; w < actW.carrier.size(); ++w) {
      const int ww = actW.act[a][w];
      const int zz = actZ.act[a][eta[w]];
      if (ww != kUndefined) {
        if (zz == kUndefined || zz != eta[ww])
          return {false, "eta(" + actW.elements[a] + " * " + actW.carrier[w] +
                             ") = " + point(actZ, ww == kUndefined ? ww : eta[ww]) +
                             " but " + actW.elements[a] + " * eta(" +
                             actW.carrier[w] + ") = " + point(actZ, zz)};
      } else if (strict && zz != kUndefined) {
        return {false, "strict mode: " + actW.elements[a] + " * " +
                           actW.carrier[w] + " is undefined but " +
                           actW.elements[a] + " * eta(" + actW.carrier[w] +
                           ") is defined"};
      }
    }
  }
  return {true, "equivariance holds"};
}

QuotientResult quotient_action(const FiniteActionStructure& actW,
                               const std::vector<int>& eta, int target_size,
                               const std::vector<std::string>& target_labels) {
  QuotientResult res;
  const int ne = static_cast<int>(actW.elements.size());

  FiniteActionStructure q;
  q.elements = actW.elements;
  q.identity = actW.identity;
  q.compose = actW.compose;
  if (!target_labels.empty()) {
    q.carrier = target_labels;
  } else {
    for (int z = 0; z < target_size; ++z)
      q.carrier.push_back("z" + std::to_string(z));
  }
  q.act.assign(ne, std::vector<int>(target_size, kUndefined));

  // First witness wins; later witnesses must agree for eta to be a
  // congruence.
  std::vector<std::vector<int>> witness(ne, std::vector<int>(target_size, -1));
  for (int a = 0; a < ne; ++a) {
    for (std::size_t w = 0; w < actW.carrier.size(); ++w) {
      const int img = actW.act[a][w];
      if (img == kUndefined) continue;
      int& cell = q.act[a][eta[w]];
      if (cell == kUndefined) {
        cell = eta[img];
        witness[a][eta[w]] = static_cast<int>(w);
      } else if (cell != eta[img]) {
        res.counterexample = "(" + actW.elements[a] + ", " +
                             actW.carrier[witness[a][eta[w]]] + ", " +
                             actW.carrier[w] + ")";
        return res;
      }
    }
  }
  res.action = std::move(q);
  return res;
}

std::optional<std::string> validate_decomposition(
    const FiniteActionStructure& s, const Decomposition& dec) {
  const int n = dec.factor_count;
  if (n < 1) return "decomposition needs at least one factor";
  if (static_cast<int>(dec.factor_elements.size()) != n ||
      static_cast<int>(dec.factor_identity.size()) != n ||
      static_cast<int>(dec.factor_compose.size()) != n ||
      static_cast<int>(dec.factor_carrier_sizes.size()) != n)
    return "factor table sizes disagree with factor_count";
  long long carrier_product = 1, element_product = 1;
  for (int j = 0; j < n; ++j) {
    carrier_product *= dec.factor_carrier_sizes[j];
    element_product *= static_cast<long long>(dec.factor_elements[j].size());
    if (dec.factor_identity[j] < 0 ||
        dec.factor_identity[j] >= static_cast<int>(dec.factor_elements[j].size()))
      return "factor identity out of range in factor " + std::to_string(j);
  }
  if (carrier_product != static_cast<long long>(s.carrier.size()))
    return "carrier coordinates are not a bijection (size mismatch)";
  if (element_product < static_cast<long long>(s.elements.size()))
    return "factor element sets too small for the algebra";
  if (dec.carrier_coords.size() != s.carrier.size())
    return "carrier_coords size mismatch";
  if (dec.element_coords.size() != s.elements.size())
    return "element_coords size mismatch";

  std::map<std::vector<int>, int> seen;
  for (std::size_t x = 0; x < s.carrier.size(); ++x) {
    if (static_cast<int>(dec.carrier_coords[x].size()) != n)
      return "carrier coordinate arity mismatch at " + s.carrier[x];
    for (int j = 0; j < n; ++j)
      if (dec.carrier_coords[x][j] < 0 ||
          dec.carrier_coords[x][j] >= dec.factor_carrier_sizes[j])
        return "carrier coordinate out of range at " + s.carrier[x];
    if (!seen.emplace(dec.carrier_coords[x], static_cast<int>(x)).second)
      return "carrier coordinates are not injective at " + s.carrier[x];
  }
  for (std::size_t e = 0; e < s.elements.size(); ++e) {
    if (static_cast<int>(dec.element_coords[e].size()) != n)
      return "element coordinate arity mismatch at " + s.elements[e];
    for (int j = 0; j < n; ++j)
      if (dec.element_coords[e][j] < 0 ||
          dec.element_coords[e][j] >=
              static_cast<int>(dec.factor_elements[j].size()))
        return "element coordinate out of range at " + s.elements[e];
  }
  // Identity element must sit at the factor identities.
  for (int j = 0; j < n; ++j)
    if (dec.element_coords[s.identity][j] != dec.factor_identity[j])
      return "identity element does not map to the factor identities";
  // Composition must be componentwise.
  for (std::size_t a = 0; a < s.elements.size(); ++a)
    for (std::size_t b = 0; b < s.elements.size(); ++b) {
      const int c = s.compose[a][b];
      if (c == kUndefined) continue;
      for (int j = 0; j < n; ++j) {
        const int fj = dec.factor_compose[j][dec.element_coords[a][j]]
                                          [dec.element_coords[b][j]];
        if (fj != dec.element_coords[c][j])
          return "element coordinates do not respect composition at (" +
                 s.elements[a] + ", " + s.elements[b] + ")";
      }
    }
  return std::nullopt;
}

EquivarianceCheck check_disentangled(const FiniteActionStructure& s,
                                     const Decomposition& dec) {
  if (auto err = validate_decomposition(s, dec))
    return {false, "malformed decomposition: " + *err};
  for (int j = 0; j < dec.factor_count; ++j) {
    std::vector<std::vector<int>> induced;
    std::string why;
    // Componentwise: coordinate j of act(a, x) must be a function of
    // (a's j-th component, x's j-th coordinate) alone.
    if (!induced_factor_action(s, dec, j, &induced, &why)) return {false, why};
    // Invariance: the factor identity leaves coordinate j unchanged.
    const int idj = dec.factor_identity[j];
    for (int xj = 0; xj < dec.factor_carrier_sizes[j]; ++xj) {
      const int out = induced[idj][xj];
      if (out != kUndefined && out != xj)
        return {false, "factor " + std::to_string(j) +
                           ": identity component moves coordinate " +
                           std::to_string(xj)};
    }
  }
  return {true, "action is componentwise for the decomposition"};
}

EquivarianceCheck check_disentangled_equivariance(
    const FiniteActionStructure& rho, const Decomposition& dec_w,
    const FiniteActionStructure& tau, const Decomposition& dec_z,
    const std::vector<std::vector<int>>& eta_components,
    const std::vector<int>* composite_eta) {
  if (dec_w.factor_count != dec_z.factor_count)
    return {false, "factor count mismatch"};
  const int n = dec_w.factor_count;
  if (static_cast<int>(eta_components.size()) != n)
    return {false, "eta component count mismatch"};
  if (dec_w.factor_elements != dec_z.factor_elements ||
      dec_w.factor_compose != dec_z.factor_compose ||
      dec_w.factor_identity != dec_z.factor_identity)
    return {false, "the two decompositions use different factor algebras"};
  if (auto err = validate_decomposition(rho, dec_w))
    return {false, "source decomposition: " + *err};
  if (auto err = validate_decomposition(tau, dec_z))
    return {false, "target decomposition: " + *err};

  for (int j = 0; j < n; ++j) {
    std::vector<std::vector<int>> aw, az;
    std::string why;
    if (!induced_factor_action(rho, dec_w, j, &aw, &why)) return {false, why};
    if (!induced_factor_action(tau, dec_z, j, &az, &why)) return {false, why};
    const auto& eta_j = eta_components[j];
    if (static_cast<int>(eta_j.size()) != dec_w.factor_carrier_sizes[j])
      return {false, "factor " + std::to_string(j) + ": eta component not total"};
    for (std::size_t g = 0; g < dec_w.factor_elements[j].size(); ++g) {
      for (int xj = 0; xj < dec_w.factor_carrier_sizes[j]; ++xj) {
        const int img = aw[g][xj];
        if (img == kUndefined) continue;
        const int zz = az[g][eta_j[xj]];
        if (zz == kUndefined || zz != eta_j[img])
          return {false, "factor " + std::to_string(j) +
                             ": equivariance fails at (" +
                             dec_w.factor_elements[j][g] + ", coordinate " +
                             std::to_string(xj) + ")"};
      }
    }
  }

  if (composite_eta) {
    // The tuple of components must reproduce the composite map.
    std::map<std::vector<int>, int> z_by_coords;
    for (std::size_t z = 0; z < tau.carrier.size(); ++z)
      z_by_coords[dec_z.carrier_coords[z]] = static_cast<int>(z);
    for (std::size_t x = 0; x < rho.carrier.size(); ++x) {
      std::vector<int> coords(n);
      for (int j = 0; j < n; ++j)
        coords[j] = eta_components[j][dec_w.carrier_coords[x][j]];
      auto it = z_by_coords.find(coords);
      if (it == z_by_coords.end() || it->second != (*composite_eta)[x])
        return {false, "component tuple disagrees with the composite eta at " +
                           rho.carrier[x]};
    }
  }
  return {true, "every component is equivariant"};
}

FiniteActionStructure action_structure_from(const World& world,
                                            const CayleyResult& result) {
  FiniteActionStructure s;
  for (const Word& label : result.classes.labels)
    s.elements.push_back(format_word(world, label));
  s.compose = result.action_table.entries;
  // entry[r][c] = c∘r; compose[i][j] should be i∘j (apply j first), so
  // transpose the action table.
  const int n = static_cast<int>(s.elements.size());
  s.compose.assign(n, std::vector<int>(n, kUndefined));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      s.compose[c][r] = result.action_table.entries[r][c];
  s.identity = -1;
  for (int i = 0; i < n; ++i)
    if (result.classes.labels[i] ==
        Word{world.identity_action()})
      s.identity = i;
  if (s.identity < 0) {
    // Identity class exists for every world; its canonical representative
    // might be the empty word.
    for (int i = 0; i < n; ++i)
      if (word_transform(world, result.classes.labels[i]).is_identity())
        s.identity = i;
  }
  for (int st : result.reachable) s.carrier.push_back(world.states()[st]);
  std::map<int, int> carrier_index;
  for (std::size_t i = 0; i < result.reachable.size(); ++i)
    carrier_index[result.reachable[i]] = static_cast<int>(i);
  s.act.assign(n, std::vector<int>(result.reachable.size(), kUndefined));
  for (int e = 0; e < n; ++e) {
    PartialTransform t = word_transform(world, result.classes.labels[e]);
    for (std::size_t i = 0; i < result.reachable.size(); ++i) {
      int img = t.images[result.reachable[i]];
      if (img != kUndefined) s.act[e][i] = carrier_index.at(img);
    }
  }
  return s;
}

}  // namespace actalg
