#pragma once

#include <string>

#include "actalg/analysis.hpp"
#include "actalg/cayley.hpp"
#include "actalg/oracle.hpp"
#include "actalg/world.hpp"

namespace actalg {

// Table/text rendering. Markdown mirrors the row/column layout used
// throughout the analysis (cell = column ∘ row applied at the initial
// state) and renders undefined as "⊥". CSV leaves undefined cells empty
// and says so in a leading comment line. Structured output is key/value
// text following the world-file conventions.
enum class Format { Csv, Markdown, Structured };

Format format_from_string(const std::string& s);

std::string render_state_table(const World& world, const StateCayleyTable& t,
                               Format f);
std::string render_action_table(const World& world, const ActionCayleyTable& t,
                                Format f);
std::string render_classes(const World& world, const EquivalenceClassSet& c,
                           Format f);
// The transition table in row = state, column = action layout.
std::string render_transition_table(const World& world, Format f);
// Property table (Totality/Identity/Inverse/Associative/Commutative) plus
// classification and element orders.
std::string render_report(const World& world, const ActionCayleyTable& t,
                          const AlgebraReport& rep, Format f);
std::string render_compare(const CompareReport& rep);

std::string order_to_string(const OrderInfo& o);

}  // namespace actalg
