#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "actalg/analysis.hpp"
#include "actalg/cayley.hpp"
#include "actalg/equivariance.hpp"
#include "actalg/gallery.hpp"
#include "actalg/io.hpp"
#include "actalg/oracle.hpp"
#include "actalg/render.hpp"
#include "actalg/world.hpp"

namespace {

using namespace actalg;

// Exit codes: 0 success/match, 1 verification or property failure,
// 2 input/schema error.
constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct WorldSource {
  std::string gallery_key;
  std::string file;
  std::string initial_override;
  std::string treatment_override;
};

void add_world_options(CLI::App* cmd, WorldSource* src) {
  cmd->add_option("--world", src->gallery_key, "gallery world key");
  cmd->add_option("--file", src->file, "world spec file (JSON)");
  cmd->add_option("--initial", src->initial_override,
                  "initial state label override");
  cmd->add_option("--treatment", src->treatment_override,
                  "treatment override: identity | masked");
}

World resolve_world(const WorldSource& src) {
  if (src.gallery_key.empty() == src.file.empty())
    throw std::invalid_argument("exactly one of --world/--file is required");
  World base = src.gallery_key.empty() ? load_world(src.file)
                                       : build_gallery_world(src.gallery_key);
  if (src.initial_override.empty() && src.treatment_override.empty())
    return base;
  Treatment t = src.treatment_override.empty()
                    ? base.treatment()
                    : treatment_from_string(src.treatment_override);
  std::string initial = src.initial_override.empty()
                            ? base.states()[base.initial()]
                            : src.initial_override;
  return World(base.name(), base.states(), base.alphabet(),
               base.raw_transitions(), t, initial);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write file: " + out_path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"action algebra extraction for finite worlds"};
  app.require_subcommand(1);

  WorldSource src;
  std::string format_name = "md";
  std::string out_path;
  std::size_t max_elements = 10000;
  bool admit_empty = false;
  bool strict = false;
  bool unrestricted = false;
  std::string eta_path, target_path, decomposition_path, target_dec_path;
  std::string rebase_word;

  auto* list = app.add_subcommand("list", "list gallery worlds");

  auto* show = app.add_subcommand("show", "print a world's transition table");
  add_world_options(show, &src);
  show->add_option("--format", format_name, "csv | md | structured | dot");
  show->add_option("--out", out_path, "output path (default stdout)");

  auto* cayley = app.add_subcommand(
      "cayley", "generate the state and action Cayley tables");
  add_world_options(cayley, &src);
  cayley->add_option("--format", format_name, "csv | md | structured");
  cayley->add_option("--out", out_path, "output path (default stdout)");
  cayley->add_option("--max-elements", max_elements, "element safety cap");
  cayley->add_flag("--admit-empty", admit_empty,
                   "admit the nowhere-defined composite as an element");
  cayley->add_option("--rebase", rebase_word,
                     "derive the tables for (word * initial) from the "
                     "initial-state run instead of re-generating");

  auto* analyze_cmd =
      app.add_subcommand("analyze", "algebraic property report");
  add_world_options(analyze_cmd, &src);
  analyze_cmd->add_option("--format", format_name, "csv | md | structured");
  analyze_cmd->add_option("--out", out_path, "output path (default stdout)");
  analyze_cmd->add_option("--max-elements", max_elements, "element safety cap");
  analyze_cmd->add_flag("--admit-empty", admit_empty,
                        "admit the nowhere-defined composite as an element");

  auto* verify = app.add_subcommand(
      "verify", "compare the table-growth engine against the closure oracle");
  add_world_options(verify, &src);
  verify->add_option("--max-elements", max_elements, "element safety cap");
  verify->add_flag("--admit-empty", admit_empty,
                   "admit the nowhere-defined composite as an element");
  verify->add_flag("--unrestricted-oracle", unrestricted,
                   "oracle compares transforms on all states, not just the "
                   "reachable ones (diagnostic)");

  auto* conditions =
      app.add_subcommand("conditions", "check world conditions 1-3");
  add_world_options(conditions, &src);
  conditions->add_option("--max-elements", max_elements, "element safety cap");

  auto* equivariance_cmd =
      app.add_subcommand("equivariance", "check an equivariance condition");
  equivariance_cmd
      ->add_option("--source", src.file, "source action structure file")
      ->required();
  equivariance_cmd->add_option("--target", target_path,
                               "target action structure file")
      ->required();
  equivariance_cmd->add_option("--eta", eta_path, "eta mapping file")
      ->required();
  equivariance_cmd->add_flag("--strict", strict,
                             "require matching undefinedness");

  auto* disentangle_cmd = app.add_subcommand(
      "disentangle", "check a decomposition for componentwise action");
  disentangle_cmd
      ->add_option("--source", src.file, "action structure file")
      ->required();
  disentangle_cmd
      ->add_option("--decomposition", decomposition_path, "decomposition file")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) {
      for (const GalleryEntry& e : gallery()) {
        std::cout << e.key << "  (" << e.expected_elements << " elements"
                  << (e.expected_admits_empty
                          ? ", counting the nowhere-defined composite"
                          : "")
                  << "): " << e.description << "\n";
      }
      return kOk;
    }

    if (show->parsed()) {
      World world = resolve_world(src);
      if (format_name == "dot") {
        emit(export_dot(world), out_path);
      } else {
        emit(render_transition_table(world, format_from_string(format_name)),
             out_path);
      }
      return kOk;
    }

    if (cayley->parsed() || analyze_cmd->parsed() || verify->parsed() ||
        conditions->parsed()) {
      World world = resolve_world(src);
      EngineOptions options{admit_empty, max_elements};
      CayleyResult result;
      try {
        result = generate_cayley(world, world.initial(), options);
      } catch (const CapExceededError& e) {
        std::cerr << "capped: " << e.what() << "\n";
        return kFail;
      }

      if (cayley->parsed()) {
        if (!rebase_word.empty())
          result = rebase(result, world, parse_word(world, rebase_word),
                          options);
        Format f = format_from_string(format_name);
        std::string text = render_state_table(world, result.state_table, f);
        text += "\n";
        text += render_action_table(world, result.action_table, f);
        text += "\n";
        text += render_classes(world, result.classes, f);
        emit(text, out_path);
        return kOk;
      }
      if (analyze_cmd->parsed()) {
        AlgebraReport rep = analyze(result.action_table);
        emit(render_report(world, result.action_table, rep,
                           format_from_string(format_name)),
             out_path);
        return kOk;
      }
      if (verify->parsed()) {
        OracleOptions oracle_options;
        oracle_options.admit_empty = admit_empty;
        oracle_options.unrestricted = unrestricted;
        oracle_options.max_elements = max_elements;
        ClosureResult closure =
            generate_closure(world, world.initial(), oracle_options);
        if (closure.capped) {
          std::cout << "MISMATCH: oracle capped before convergence\n";
          return kFail;
        }
        CompareReport rep = compare_partitions(result, closure, world);
        std::cout << render_compare(rep);
        return rep.match ? kOk : kFail;
      }
      // conditions
      ConditionResult wc1 = check_wc1(world);
      ConditionResult wc2 = check_wc2(result.action_table);
      ConditionResult wc3 = check_wc3_homogeneity(world);
      auto line = [](const char* name, const ConditionResult& r) {
        const char* s = r.outcome == CheckOutcome::Pass   ? "PASS"
                        : r.outcome == CheckOutcome::Fail ? "FAIL"
                                                          : "INCONCLUSIVE";
        std::cout << name << ": " << s << " (" << r.detail << ")\n";
        return r.outcome == CheckOutcome::Pass;
      };
      bool all = line("WC1 unrestricted actions", wc1);
      all &= line("WC2 inverse actions", wc2);
      all &= line("WC3 action homogeneity", wc3);
      return all ? kOk : kFail;
    }

    if (equivariance_cmd->parsed()) {
      FiniteActionStructure actW = load_action_structure(src.file);
      FiniteActionStructure actZ = load_action_structure(target_path);
      std::vector<int> eta = load_eta(eta_path, actW, actZ);
      EquivarianceCheck r = check_equivariance(actW, actZ, eta, strict);
      std::cout << (r.ok ? "PASS" : "FAIL") << ": " << r.detail << "\n";
      return r.ok ? kOk : kFail;
    }

    if (disentangle_cmd->parsed()) {
      FiniteActionStructure s = load_action_structure(src.file);
      Decomposition dec = load_decomposition(decomposition_path, s);
      EquivarianceCheck r = check_disentangled(s, dec);
      std::cout << (r.ok ? "PASS" : "FAIL") << ": " << r.detail << "\n";
      return r.ok ? kOk : kFail;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kInputError;
}
