#pragma once

#include <optional>
#include <string>
#include <vector>

#include "actalg/cayley.hpp"
#include "actalg/world.hpp"

namespace actalg {

// A finite algebra (possibly partial composition) together with its action
// on a finite carrier. Houses both the "state side" and the "representation
// side" of an equivariance check.
struct FiniteActionStructure {
  std::vector<std::string> elements;
  int identity = 0;
  // compose[i][j] = index of elements[i]∘elements[j] (apply j first), or
  // kUndefined.
  std::vector<std::vector<int>> compose;
  std::vector<std::string> carrier;
  // act[e][x] = image point index, or kUndefined.
  std::vector<std::vector<int>> act;
};

// Structural invariants: identity acts trivially and is a composition
// identity; composition compatible with the action and associative where
// defined. Returns the first violation, or nullopt.
std::optional<std::string> validate_structure(const FiniteActionStructure& s);

struct EquivarianceCheck {
  bool ok = false;
  std::string detail;  // lexicographically first counterexample
};

// eta: carrier(W) -> carrier(Z), total. Lenient mode (default): wherever
// act_W(a, w) is defined, act_Z(a, eta(w)) must be defined and equal
// eta(act_W(a, w)). Strict mode additionally requires act_Z(a, eta(w)) to be
// undefined whenever act_W(a, w) is. The two structures must share the same
// element list and composition table.
EquivarianceCheck check_equivariance(const FiniteActionStructure& actW,
                                     const FiniteActionStructure& actZ,
                                     const std::vector<int>& eta,
                                     bool strict = false);

struct QuotientResult {
  std::optional<FiniteActionStructure> action;
  std::string counterexample;  // (a, w, w') when eta is not a congruence
};

// Builds the unique action on eta's image making eta equivariant, when eta
// is a congruence for actW; otherwise reports a witness pair. The image
// carrier is indexed by the given target size.
QuotientResult quotient_action(const FiniteActionStructure& actW,
                               const std::vector<int>& eta,
                               int target_size,
                               const std::vector<std::string>& target_labels = {});

// A direct-product decomposition of an action structure: each carrier point
// has coordinates, each element has factor components, and each factor has
// its own composition table. Always user-supplied, then verified.
struct Decomposition {
  int factor_count = 0;
  std::vector<std::vector<std::string>> factor_elements;  // per factor
  std::vector<int> factor_identity;                       // per factor
  std::vector<std::vector<std::vector<int>>> factor_compose;
  std::vector<int> factor_carrier_sizes;
  // carrier_coords[x][j] = j-th coordinate of carrier point x.
  std::vector<std::vector<int>> carrier_coords;
  // element_coords[e][j] = j-th factor component of element e.
  std::vector<std::vector<int>> element_coords;
};

std::optional<std::string> validate_decomposition(
    const FiniteActionStructure& s, const Decomposition& dec);

// Verifies that the action is componentwise with respect to the
// decomposition: coordinate j of act(a, x) depends only on a's j-th factor
// component and x's j-th coordinate, and elements whose j-th component is
// the factor identity leave coordinate j unchanged.
EquivarianceCheck check_disentangled(const FiniteActionStructure& s,
                                     const Decomposition& dec);

// Componentwise equivariance: each eta_j must be equivariant for the j-th
// factor action induced on coordinates by (rho, dec_w) and (tau, dec_z),
// and the tuple of components must reproduce the composite eta when one is
// supplied. eta_components[j][xj] maps W's j-th coordinate to Z's.
EquivarianceCheck check_disentangled_equivariance(
    const FiniteActionStructure& rho, const Decomposition& dec_w,
    const FiniteActionStructure& tau, const Decomposition& dec_z,
    const std::vector<std::vector<int>>& eta_components,
    const std::vector<int>* composite_eta = nullptr);

// The algebra A/~ of a generated result acting on the world's reachable
// states: the canonical finite action structure of a world.
FiniteActionStructure action_structure_from(const World& world,
                                            const CayleyResult& result);

}  // namespace actalg
