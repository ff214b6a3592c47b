// Command line front end: analyze, verify, cover, catalog, random.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "linarr/cover.hpp"
#include "linarr/harness.hpp"

using namespace linarr;

namespace {

std::string forms(const std::vector<LinearForm>& v) {
  std::string s;
  for (const auto& l : v) s += (s.empty() ? "" : "; ") + l.to_string();
  return s;
}

int emit(const Report& r, const std::string& format) {
  std::cout << (format == "records" ? r.records() : r.text());
  return r.overall() == Status::fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Derivation modules, local derivations and line covers of line arrangements"};
  app.require_subcommand(1);
  std::string format = "text";
  int max_degree = -1;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "records"}));
  app.add_option("--max-degree", max_degree, "Largest degree of D_0(f) to compute");

  std::string target, target2, suite, name;
  auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis of one arrangement");
  analyze_cmd->add_option("target", target, "Arrangement file or catalog:NAME")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run one verification suite");
  verify_cmd->add_option("suite", suite, "Suite id, thmD2 for an external pair, or full")->required();
  verify_cmd->add_option("target", target, "Arrangement file or catalog:NAME")->required();
  verify_cmd->add_option("second", target2, "Second arrangement (thmD2 only)");

  auto* cover_cmd = app.add_subcommand("cover", "Minimal line covers of the multiple points");
  cover_cmd->add_option("target", target, "Arrangement file or catalog:NAME")->required();

  auto* catalog_cmd = app.add_subcommand("catalog", "Named arrangements");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "List catalog entries");
  auto* show_cmd = catalog_cmd->add_subcommand("show", "Print a catalog arrangement in file format");
  show_cmd->add_option("name", name, "NAME or NAME(a,b,...)")->required();

  std::uint64_t seed = 1;
  int lines = 5, max_coeff = 3;
  auto* random_cmd = app.add_subcommand("random", "Random arrangement over Q in file format");
  random_cmd->add_option("--seed", seed, "Random seed");
  random_cmd->add_option("--lines", lines, "Number of lines")->check(CLI::Range(3, 1000));
  random_cmd->add_option("--max-coeff", max_coeff, "Coefficient bound")->check(CLI::Range(1, 1000000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const VerifyOptions opt{max_degree};
  try {
    if (*analyze_cmd) {
      Report r = analyze(load_target(target), opt);
      r.set_target(target);
      return emit(r, format);
    }
    if (*verify_cmd) {
      if (suite == "thmD2") {
        if (target2.empty()) throw ParseError("thmD2 needs two arrangement files");
        return emit(verify_ziegler_pair(load_target(target), load_target(target2)), format);
      }
      if (!target2.empty()) throw ParseError("only thmD2 takes a second arrangement");
      Report r = verify(load_target(target), suite, opt);
      r.set_target(target);
      return emit(r, format);
    }
    if (*cover_cmd) {
      const auto a = load_target(target);
      const auto c = min_cover(a);
      Report r("cover", target);
      r.add("cover", Status::pass)
          .fact("N", c.N)
          .fact("N0", c.N0)
          .fact("witness", forms(c.witness))
          .fact("witness_in_A", forms(c.witness_a))
          .fact("candidates", static_cast<long>(c.candidates));
      return emit(r, format);
    }
    if (*list_cmd) {
      for (const auto& e : catalog()) {
        std::string params;
        for (int p : e.defaults) params += (params.empty() ? "" : ",") + std::to_string(p);
        std::cout << e.name << (params.empty() ? "" : "(" + params + ")") << "  " << e.description << "\n";
      }
      return 0;
    }
    if (*show_cmd) {
      std::cout << format_arrangement(build_catalog(name));
      for (const auto& e : catalog_expected(name))
        std::cout << "# expected " << e.key << " = " << e.value << " (" << to_string(e.origin) << ")\n";
      return 0;
    }
    if (*random_cmd) {
      std::cout << format_arrangement(random_arrangement(seed, lines, max_coeff));
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
