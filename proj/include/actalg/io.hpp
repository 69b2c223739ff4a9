#pragma once

#include <string>
#include <vector>

#include "actalg/equivariance.hpp"
#include "actalg/world.hpp"

namespace actalg {

// World spec files are JSON with exactly these fields:
//   name: string, states: [label...], actions: [symbol...] (must include
//   "1"), transitions: [{from, action, to}...], treatment: "identity" |
//   "masked", initial: label.
// Unknown fields are rejected. save_world emits deterministic field order;
// parse(serialize(w)) round-trips to an identical world.
World load_world(const std::string& path);
World parse_world(const std::string& text);
std::string serialize_world(const World& world);
void save_world(const World& world, const std::string& path);

// Finite action structure files:
//   elements: [label...], identity: label, carrier: [label...],
//   compose: [[label or null, ...]...]  (row i, column j = elements[i]∘elements[j]),
//   act: [[label or null, ...]...]      (row = element, column = carrier point).
FiniteActionStructure load_action_structure(const std::string& path);
FiniteActionStructure parse_action_structure(const std::string& text);

// Eta files: { "mapping": { source point: target point, ... } }, required
// total on the source carrier.
std::vector<int> load_eta(const std::string& path,
                          const FiniteActionStructure& source,
                          const FiniteActionStructure& target);

// Decomposition files:
//   factors: [ { elements: [...], identity: label, compose: [[...]...],
//                carrier: [label...] } ... ],
//   carrier_coords: { carrier point: [factor point labels...] },
//   element_coords: { element: [factor element labels...] }.
Decomposition load_decomposition(const std::string& path,
                                 const FiniteActionStructure& s);
Decomposition parse_decomposition(const std::string& text,
                                  const FiniteActionStructure& s);

// One directed edge per defined (state, action, state), labeled with the
// action symbol; deterministic node and edge order.
std::string export_dot(const World& world);

}  // namespace actalg
