#include "actalg/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace actalg {
namespace {

constexpr const char* kBottom = "⊥";  // ⊥
constexpr const char* kCsvNote = "# undefined cells are left empty\n";

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += "\"";
  return out;
}

// Renders a labeled square/rectangular table in the requested format.
// cell(r, c) returns the already-formatted cell text, empty for undefined.
template <typename CellFn>
std::string render_table(const std::string& corner,
                         const std::vector<std::string>& row_labels,
                         const std::vector<std::string>& col_labels,
                         CellFn cell, Format f) {
  std::ostringstream out;
  if (f == Format::Csv) {
    out << kCsvNote << csv_escape(corner);
    for (const auto& c : col_labels) out << "," << csv_escape(c);
    out << "\n";
    for (std::size_t r = 0; r < row_labels.size(); ++r) {
      out << csv_escape(row_labels[r]);
      for (std::size_t c = 0; c < col_labels.size(); ++c)
        out << "," << csv_escape(cell(r, c));
      out << "\n";
    }
    return out.str();
  }
  if (f == Format::Structured) {
    out << "table " << corner << "\n";
    for (std::size_t r = 0; r < row_labels.size(); ++r)
      for (std::size_t c = 0; c < col_labels.size(); ++c) {
        std::string v = cell(r, c);
        out << "  " << row_labels[r] << " " << col_labels[c] << " = "
            << (v.empty() ? kBottom : v) << "\n";
      }
    return out.str();
  }
  // Markdown, column-aligned.
  std::vector<std::size_t> widths(col_labels.size() + 1, corner.size());
  widths[0] = std::max(widths[0], corner.size());
  for (const auto& r : row_labels) widths[0] = std::max(widths[0], r.size());
  for (std::size_t c = 0; c < col_labels.size(); ++c) {
    widths[c + 1] = col_labels[c].size();
    for (std::size_t r = 0; r < row_labels.size(); ++r) {
      std::string v = cell(r, c);
      if (v.empty()) v = kBottom;
      widths[c + 1] = std::max(widths[c + 1], v.size());
    }
  }
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
  };
  out << "| " << pad(corner, widths[0]);
  for (std::size_t c = 0; c < col_labels.size(); ++c)
    out << " | " << pad(col_labels[c], widths[c + 1]);
  out << " |\n|";
  for (std::size_t c = 0; c < widths.size(); ++c)
    out << std::string(widths[c] + 2, '-') << "|";
  out << "\n";
  for (std::size_t r = 0; r < row_labels.size(); ++r) {
    out << "| " << pad(row_labels[r], widths[0]);
    for (std::size_t c = 0; c < col_labels.size(); ++c) {
      std::string v = cell(r, c);
      if (v.empty()) v = kBottom;
      out << " | " << pad(v, widths[c + 1]);
    }
    out << " |\n";
  }
  return out.str();
}

std::vector<std::string> formatted_labels(const World& world,
                                          const std::vector<Word>& labels) {
  std::vector<std::string> out;
  for (const Word& w : labels) out.push_back(format_word(world, w));
  return out;
}

}  // namespace

Format format_from_string(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "md" || s == "markdown") return Format::Markdown;
  if (s == "structured") return Format::Structured;
  throw std::invalid_argument("unknown format: " + s);
}

std::string render_state_table(const World& world, const StateCayleyTable& t,
                               Format f) {
  auto labels = formatted_labels(world, t.labels);
  return render_table(
      "state", labels, labels,
      [&](std::size_t r, std::size_t c) -> std::string {
        int v = t.entries[r][c];
        return v == kUndefined ? "" : world.states()[v];
      },
      f);
}

std::string render_action_table(const World& world, const ActionCayleyTable& t,
                                Format f) {
  auto labels = formatted_labels(world, t.labels);
  return render_table(
      "action", labels, labels,
      [&](std::size_t r, std::size_t c) -> std::string {
        int v = t.entries[r][c];
        return v == kUndefined ? "" : labels[v];
      },
      f);
}

std::string render_transition_table(const World& world, Format f) {
  std::vector<std::string> actions = world.alphabet();
  return render_table(
      "state", world.states(), actions,
      [&](std::size_t r, std::size_t c) -> std::string {
        int v = world.apply_min(static_cast<int>(c), static_cast<int>(r));
        return v == kUndefined ? "" : world.states()[v];
      },
      f);
}

std::string render_classes(const World& world, const EquivalenceClassSet& c,
                           Format f) {
  std::ostringstream out;
  if (f == Format::Csv) out << kCsvNote << "representative,members\n";
  for (const Word& rep : c.labels) {
    const auto& members = c.classes.at(rep);
    // A few shortest member words as a sample.
    std::vector<std::string> sample;
    for (std::size_t i = 0; i < members.size() && i < 6; ++i)
      sample.push_back(format_word(world, members[i]));
    std::string joined;
    for (std::size_t i = 0; i < sample.size(); ++i)
      joined += (i ? " " : "") + sample[i];
    if (members.size() > 6) joined += " ...";
    if (f == Format::Csv)
      out << csv_escape(format_word(world, rep)) << "," << csv_escape(joined)
          << "\n";
    else if (f == Format::Structured)
      out << "class " << format_word(world, rep) << " = " << joined << "\n";
    else
      out << "| " << format_word(world, rep) << " | " << joined << " |\n";
  }
  if (f == Format::Markdown) {
    std::string header = "| class | members |\n|-------|---------|\n";
    return header + out.str();
  }
  return out.str();
}

std::string order_to_string(const OrderInfo& o) {
  if (o.is_group_order) return std::to_string(o.group_order);
  std::string s = "index " + std::to_string(o.index) + ", period " +
                  std::to_string(o.period);
  if (o.partial) s += " (chain hits an undefined composite)";
  return s;
}

std::string render_report(const World& world, const ActionCayleyTable& t,
                          const AlgebraReport& rep, Format f) {
  auto yn = [](bool b) { return b ? "Y" : "N"; };
  const bool has_identity = rep.two_sided_identity >= 0;
  std::ostringstream out;
  if (f == Format::Csv) {
    out << kCsvNote << "property,present\n";
    out << "Totality," << yn(rep.totality) << "\n";
    out << "Identity," << yn(has_identity) << "\n";
    out << "Inverse," << yn(rep.all_inverses) << "\n";
    out << "Associative," << yn(rep.associative) << "\n";
    out << "Commutative," << yn(rep.commutative) << "\n";
    out << "classification," << to_string(rep.classification) << "\n";
    for (std::size_t i = 0; i < t.labels.size(); ++i)
      out << "order " << csv_escape(format_word(world, t.labels[i])) << ","
          << csv_escape(order_to_string(rep.orders[i])) << "\n";
    return out.str();
  }
  if (f == Format::Structured) {
    out << "totality = " << yn(rep.totality) << "\n";
    out << "identity = " << yn(has_identity) << "\n";
    out << "inverse = " << yn(rep.all_inverses) << "\n";
    out << "associative = " << yn(rep.associative) << "\n";
    out << "commutative = " << yn(rep.commutative) << "\n";
    out << "classification = " << to_string(rep.classification) << "\n";
    for (std::size_t i = 0; i < t.labels.size(); ++i)
      out << "order " << format_word(world, t.labels[i]) << " = "
          << order_to_string(rep.orders[i]) << "\n";
    return out.str();
  }
  out << "| Property    | Present? |\n|-------------|----------|\n";
  out << "| Totality    | " << yn(rep.totality) << "        |\n";
  out << "| Identity    | " << yn(has_identity) << "        |\n";
  out << "| Inverse     | " << yn(rep.all_inverses) << "        |\n";
  out << "| Associative | " << yn(rep.associative) << "        |\n";
  out << "| Commutative | " << yn(rep.commutative) << "        |\n";
  out << "\nclassification: " << to_string(rep.classification) << "\n";
  out << "\n| Element | Order |\n|---------|-------|\n";
  for (std::size_t i = 0; i < t.labels.size(); ++i)
    out << "| " << format_word(world, t.labels[i]) << " | "
        << order_to_string(rep.orders[i]) << " |\n";
  return out.str();
}

std::string render_compare(const CompareReport& rep) {
  return std::string(rep.match ? "MATCH" : "MISMATCH") + ": " + rep.detail +
         "\n";
}

}  // namespace actalg
