// pdiv: enumerate graphs, test class membership, run verification campaigns.
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pdiv/canonical.hpp"
#include "pdiv/detectors.hpp"
#include "pdiv/error.hpp"
#include "pdiv/graph6.hpp"
#include "pdiv/harness.hpp"
#include "pdiv/structure.hpp"

namespace {

constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

// stdout when path is empty
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file_) throw pdiv::Error(pdiv::Errc::io_error, "cannot write " + path);
  }
  std::ostream& out() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

pdiv::Graph named_graph(const std::string& name) {
  if (name == "F") return pdiv::build_graph_F();
  try {
    return pdiv::make_named(name);
  } catch (const pdiv::Error&) {
    const auto sel = pdiv::parse_selector(name);
    if (sel.kind != pdiv::SelectorKind::pattern) throw;
    return sel.pattern;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perfect divisibility toolkit for small graphs"};
  app.require_subcommand(1);

  int enum_n = 0;
  std::string enum_out;
  auto* enumerate = app.add_subcommand("enumerate", "All graphs on n vertices up to isomorphism, as graph6");
  enumerate->add_option("--n", enum_n, "Vertex count")->required()->check(CLI::Range(0, pdiv::kMaxEnumerationOrder));
  enumerate->add_option("--out", enum_out, "Output file (default stdout)");

  std::string check_input;
  std::string check_class;
  auto* check = app.add_subcommand("check", "Class membership of every graph in a graph6 file");
  check->add_option("--input", check_input, "graph6 file")->required();
  check->add_option("--class", check_class, "Forbidden subgraphs, e.g. bull,odd-torch")->required();

  pdiv::CampaignSpec spec;
  std::string input;
  std::string report_path;
  auto* campaign = app.add_subcommand("campaign", "Run a verification campaign and write a report");
  campaign->add_option("name", spec.name, "Campaign name or C1..C11")->required();
  campaign->add_option("--max-n", spec.max_n, "Largest enumerated order")->required();
  campaign->add_option("--wmax", spec.wmax, "Weight bound for bounded-weight checks")->capture_default_str();
  campaign->add_option("--weighted-max-n", spec.weighted_max_n, "Largest order for bounded-weight checks")
      ->capture_default_str();
  campaign->add_option("--input", input, "graph6 file appended after the enumeration");
  campaign->add_option("--jobs", spec.jobs, "Worker threads")->capture_default_str();
  campaign->add_option("--out", report_path, "Report path")->required();
  campaign->add_flag("--timing", spec.timing, "Record wall times (reports stop being byte-stable)");

  std::string pattern;
  std::string named_out;
  auto* named = app.add_subcommand("named", "Write a named pattern as graph6");
  named->add_option("pattern", pattern, "Catalog name, Pk/Ck/Kk/kK1, or F")->required();
  named->add_option("--out", named_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*enumerate) {
      Sink sink(enum_out);
      for (const auto& g : pdiv::enumerate_nonisomorphic(enum_n, std::max(enum_n, pdiv::kDefaultCanonicalCap))) {
        sink.out() << pdiv::encode_graph6(g) << '\n';
      }
      return 0;
    }
    if (*check) {
      const auto cls = pdiv::parse_class_spec(check_class);
      for (const auto& g : pdiv::load_corpus(check_input)) {
        const auto m = pdiv::is_class_member(g, cls);
        nlohmann::ordered_json j;
        j["graph6"] = pdiv::encode_graph6(g);
        j["member"] = m.member;
        if (m.witness) {
          j["kind"] = m.witness->kind;
          j["witness"] = m.witness->vertices;
        }
        std::cout << j.dump() << '\n';
      }
      return 0;
    }
    if (*campaign) {
      if (!input.empty()) spec.input = input;
      const auto report = pdiv::run_campaign(spec);
      pdiv::emit_report(report, report_path);
      const auto summary = pdiv::summary_json(report);
      std::cerr << summary.dump() << '\n';
      return report.counterexamples() > 0 ? kExitCounterexample : 0;
    }
    if (*named) {
      const auto g = named_graph(pattern);
      Sink sink(named_out);
      sink.out() << pdiv::encode_graph6(g) << '\n';
      return 0;
    }
  } catch (const pdiv::Error& e) {
    std::cerr << "pdiv: " << e.what() << '\n';
    switch (e.code()) {
      case pdiv::Errc::invalid_argument:
      case pdiv::Errc::unknown_name:
      case pdiv::Errc::unresolvable_selector:
      case pdiv::Errc::budget_exceeded:
      case pdiv::Errc::io_error:
      case pdiv::Errc::malformed_line:
        return kExitUsage;
      default:
        return kExitUsage + 1;
    }
  }
  return 0;
}
