// Command-line front end: run one scenario, check the bundled claims, or list
// them. Exit status 2 is a schema problem, 3 a numerical one.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "covext/bundled.hpp"
#include "covext/errors.hpp"
#include "covext/runner.hpp"
#include "covext/scenario.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitSchema = 2;
constexpr int kExitNumeric = 3;

bool write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

std::string render(const nlohmann::json& report) { return report.dump(2) + "\n"; }

template <class F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const covext::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\npointer: " << e.pointer() << "\n";
    return kExitSchema;
  } catch (const covext::NumericFailure& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extension of analytic covers: monodromy, coset enumeration and worked examples"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_path;
  bool debug_tables = false;
  bool timings = false;
  auto* run = app.add_subcommand("run", "Run one scenario file and print or write its report");
  run->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  run->add_option("--out", out_path, "Write the report here instead of stdout");
  run->add_flag("--debug-tables", debug_tables, "Dump intermediate tables (coset tables) to stderr");
  run->add_flag("--timings", timings, "Add wall-clock timings to the report (breaks byte-identity)");

  std::string filter;
  std::string out_dir;
  auto* verify = app.add_subcommand("verify-paper", "Run the bundled scenarios and tabulate claim verdicts");
  verify->add_option("--filter", filter, "Only scenarios whose name contains this text");
  verify->add_option("--out-dir", out_dir, "Write one <name>.json report per scenario here");
  verify->add_flag("--timings", timings, "Add wall-clock timings to the reports");

  auto* list = app.add_subcommand("list-scenarios", "List the bundled scenarios");

  CLI11_PARSE(app, argc, argv);

  covext::RunOptions opts;
  opts.timings = timings;
  if (debug_tables) opts.debug_tables = &std::cerr;

  if (run->parsed()) {
    return guarded([&] {
      const covext::Scenario s = covext::load_scenario_file(scenario_path);
      const std::string text = render(covext::run_scenario(s, opts));
      if (out_path.empty()) {
        std::cout << text;
      } else if (!write_file(out_path, text)) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return kExitError;
      }
      return 0;
    });
  }

  if (verify->parsed()) {
    return guarded([&] {
      const covext::PaperSummary summary = covext::verify_paper(filter, opts);
      if (summary.names.empty()) {
        std::cerr << "no bundled scenario matches '" << filter << "'\n";
        return kExitError;
      }
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (std::size_t i = 0; i < summary.names.size(); ++i) {
          const auto path = std::filesystem::path(out_dir) / (summary.names[i] + ".json");
          if (!write_file(path, render(summary.reports[i]))) {
            std::cerr << "error: cannot write '" << path.string() << "'\n";
            return kExitError;
          }
        }
      }
      covext::print_summary(std::cout, summary);
      return 0;
    });
  }

  if (list->parsed()) {
    return guarded([&] {
      for (const auto& b : covext::bundled_scenarios()) {
        const covext::Scenario s = covext::parse_scenario_text(b.text);
        std::cout << b.name << "  [" << s.kind << "]  " << s.claims.size() << " claims\n";
      }
      return 0;
    });
  }
  return 0;
}
