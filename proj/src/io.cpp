#include "actalg/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace actalg {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ordered_json parse_json(const std::string& text, const char* what) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string(what) + ": " + e.what());
  }
}

void reject_unknown_fields(const ordered_json& j,
                           const std::set<std::string>& allowed,
                           const char* what) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key()))
      throw std::invalid_argument(std::string(what) + ": unknown field \"" +
                                  it.key() + "\"");
  }
}

const ordered_json& require(const ordered_json& j, const char* field,
                            const char* what) {
  auto it = j.find(field);
  if (it == j.end())
    throw std::invalid_argument(std::string(what) + ": missing field \"" +
                                field + "\"");
  return *it;
}

std::vector<std::string> string_list(const ordered_json& j, const char* field,
                                     const char* what) {
  if (!j.is_array())
    throw std::invalid_argument(std::string(what) + ": \"" + field +
                                "\" must be an array of strings");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string())
      throw std::invalid_argument(std::string(what) + ": \"" + field +
                                  "\" must be an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

int label_index(const std::vector<std::string>& labels, const std::string& l,
                const char* what) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == l) return static_cast<int>(i);
  throw std::invalid_argument(std::string(what) + ": unknown label \"" + l +
                              "\"");
}

}  // namespace

World parse_world(const std::string& text) {
  const char* what = "world file";
  ordered_json j = parse_json(text, what);
  if (!j.is_object()) throw std::invalid_argument("world file: not an object");
  reject_unknown_fields(
      j, {"name", "states", "actions", "transitions", "treatment", "initial"},
      what);

  std::string name = require(j, "name", what).get<std::string>();
  auto states = string_list(require(j, "states", what), "states", what);
  auto actions = string_list(require(j, "actions", what), "actions", what);
  Treatment treatment =
      treatment_from_string(require(j, "treatment", what).get<std::string>());
  std::string initial = require(j, "initial", what).get<std::string>();

  std::vector<TransitionSpec> transitions;
  const ordered_json& tr = require(j, "transitions", what);
  if (!tr.is_array())
    throw std::invalid_argument("world file: \"transitions\" must be an array");
  for (const auto& t : tr) {
    if (!t.is_object())
      throw std::invalid_argument("world file: transition must be an object");
    reject_unknown_fields(t, {"from", "action", "to"}, what);
    transitions.push_back({require(t, "from", what).get<std::string>(),
                           require(t, "action", what).get<std::string>(),
                           require(t, "to", what).get<std::string>()});
  }
  return World(name, states, actions, transitions, treatment, initial);
}

World load_world(const std::string& path) { return parse_world(slurp(path)); }

std::string serialize_world(const World& world) {
  ordered_json j;
  j["name"] = world.name();
  j["states"] = world.states();
  j["actions"] = world.alphabet();
  ordered_json tr = ordered_json::array();
  // The raw (pre-treatment) transitions, minus redundant identity
  // self-loops, in a normalized deterministic order.
  std::set<std::tuple<int, int, int>> listed;
  for (const TransitionSpec& t : world.raw_transitions()) {
    int from = world.state_index(t.from);
    int act = world.action_index(t.action);
    int to = world.state_index(t.to);
    if (act == world.identity_action()) continue;
    listed.insert({from, act, to});
  }
  for (const auto& [from, act, to] : listed) {
    ordered_json e;
    e["from"] = world.states()[from];
    e["action"] = world.alphabet()[act];
    e["to"] = world.states()[to];
    tr.push_back(e);
  }
  j["transitions"] = tr;
  j["treatment"] = to_string(world.treatment());
  j["initial"] = world.states()[world.initial()];
  return j.dump(2) + "\n";
}

void save_world(const World& world, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << serialize_world(world);
}

FiniteActionStructure parse_action_structure(const std::string& text) {
  const char* what = "action structure file";
  ordered_json j = parse_json(text, what);
  if (!j.is_object())
    throw std::invalid_argument("action structure file: not an object");
  reject_unknown_fields(j, {"elements", "identity", "carrier", "compose", "act"},
                        what);
  FiniteActionStructure s;
  s.elements = string_list(require(j, "elements", what), "elements", what);
  s.carrier = string_list(require(j, "carrier", what), "carrier", what);
  s.identity =
      label_index(s.elements, require(j, "identity", what).get<std::string>(), what);

  auto read_matrix = [&](const ordered_json& m, std::size_t rows,
                         std::size_t cols,
                         const std::vector<std::string>& codomain,
                         const char* field) {
    if (!m.is_array() || m.size() != rows)
      throw std::invalid_argument(std::string(what) + ": \"" + field + "\" must have " +
                                  std::to_string(rows) + " rows");
    std::vector<std::vector<int>> out;
    for (const auto& row : m) {
      if (!row.is_array() || row.size() != cols)
        throw std::invalid_argument(std::string(what) + ": \"" + field +
                                    "\" row length mismatch");
      std::vector<int> r;
      for (const auto& cell : row) {
        if (cell.is_null())
          r.push_back(kUndefined);
        else
          r.push_back(label_index(codomain, cell.get<std::string>(), what));
      }
      out.push_back(std::move(r));
    }
    return out;
  };
  s.compose = read_matrix(require(j, "compose", what), s.elements.size(),
                          s.elements.size(), s.elements, "compose");
  s.act = read_matrix(require(j, "act", what), s.elements.size(),
                      s.carrier.size(), s.carrier, "act");
  return s;
}

FiniteActionStructure load_action_structure(const std::string& path) {
  return parse_action_structure(slurp(path));
}

std::vector<int> load_eta(const std::string& path,
                          const FiniteActionStructure& source,
                          const FiniteActionStructure& target) {
  const char* what = "eta file";
  ordered_json j = parse_json(slurp(path), what);
  if (!j.is_object()) throw std::invalid_argument("eta file: not an object");
  reject_unknown_fields(j, {"mapping"}, what);
  const ordered_json& m = require(j, "mapping", what);
  if (!m.is_object())
    throw std::invalid_argument("eta file: \"mapping\" must be an object");
  std::vector<int> eta(source.carrier.size(), -1);
  for (auto it = m.begin(); it != m.end(); ++it) {
    int from = label_index(source.carrier, it.key(), what);
    eta[from] = label_index(target.carrier, it.value().get<std::string>(), what);
  }
  for (std::size_t i = 0; i < eta.size(); ++i)
    if (eta[i] < 0)
      throw std::invalid_argument("eta file: mapping not total, missing \"" +
                                  source.carrier[i] + "\"");
  return eta;
}

Decomposition parse_decomposition(const std::string& text,
                                  const FiniteActionStructure& s) {
  const char* what = "decomposition file";
  ordered_json j = parse_json(text, what);
  if (!j.is_object())
    throw std::invalid_argument("decomposition file: not an object");
  reject_unknown_fields(j, {"factors", "carrier_coords", "element_coords"}, what);

  Decomposition dec;
  const ordered_json& factors = require(j, "factors", what);
  if (!factors.is_array() || factors.empty())
    throw std::invalid_argument(
        "decomposition file: \"factors\" must be a nonempty array");
  dec.factor_count = static_cast<int>(factors.size());
  std::vector<std::vector<std::string>> factor_points;
  for (const auto& f : factors) {
    reject_unknown_fields(f, {"elements", "identity", "compose", "carrier"}, what);
    auto elems = string_list(require(f, "elements", what), "elements", what);
    auto carrier = string_list(require(f, "carrier", what), "carrier", what);
    dec.factor_identity.push_back(
        label_index(elems, require(f, "identity", what).get<std::string>(), what));
    const ordered_json& comp = require(f, "compose", what);
    std::vector<std::vector<int>> table;
    if (!comp.is_array() || comp.size() != elems.size())
      throw std::invalid_argument("decomposition file: factor compose size");
    for (const auto& row : comp) {
      std::vector<int> r;
      for (const auto& cell : row)
        r.push_back(cell.is_null() ? kUndefined
                                   : label_index(elems, cell.get<std::string>(), what));
      if (r.size() != elems.size())
        throw std::invalid_argument("decomposition file: factor compose row size");
      table.push_back(std::move(r));
    }
    dec.factor_compose.push_back(std::move(table));
    dec.factor_carrier_sizes.push_back(static_cast<int>(carrier.size()));
    dec.factor_elements.push_back(std::move(elems));
    factor_points.push_back(std::move(carrier));
  }

  auto read_coords = [&](const ordered_json& m,
                         const std::vector<std::string>& domain,
                         const std::vector<std::vector<std::string>>& codomains,
                         const char* field) {
    if (!m.is_object())
      throw std::invalid_argument(std::string(what) + ": \"" + field +
                                  "\" must be an object");
    std::vector<std::vector<int>> out(domain.size());
    std::vector<bool> set(domain.size(), false);
    for (auto it = m.begin(); it != m.end(); ++it) {
      int i = label_index(domain, it.key(), what);
      if (!it.value().is_array() ||
          it.value().size() != static_cast<std::size_t>(dec.factor_count))
        throw std::invalid_argument(std::string(what) + ": \"" + field +
                                    "\" entries need one label per factor");
      std::vector<int> coords;
      for (int jf = 0; jf < dec.factor_count; ++jf)
        coords.push_back(label_index(codomains[jf],
                                     it.value()[jf].get<std::string>(), what));
      out[i] = std::move(coords);
      set[i] = true;
    }
    for (std::size_t i = 0; i < domain.size(); ++i)
      if (!set[i])
        throw std::invalid_argument(std::string(what) + ": \"" + field +
                                    "\" missing \"" + domain[i] + "\"");
    return out;
  };
  dec.carrier_coords = read_coords(require(j, "carrier_coords", what), s.carrier,
                                   factor_points, "carrier_coords");
  dec.element_coords = read_coords(require(j, "element_coords", what), s.elements,
                                   dec.factor_elements, "element_coords");
  return dec;
}

Decomposition load_decomposition(const std::string& path,
                                 const FiniteActionStructure& s) {
  return parse_decomposition(slurp(path), s);
}

std::string export_dot(const World& world) {
  std::ostringstream out;
  out << "digraph \"" << world.name() << "\" {\n";
  for (const std::string& s : world.states())
    out << "  \"" << s << "\";\n";
  for (int s = 0; s < world.num_states(); ++s) {
    for (int a = 0; a < world.num_actions(); ++a) {
      int t = world.apply_min(a, s);
      if (t == kUndefined) continue;
      out << "  \"" << world.states()[s] << "\" -> \"" << world.states()[t]
          << "\" [label=\"" << world.alphabet()[a] << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace actalg
