// hopfkit command-line front end.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hopfkit/commands.hpp"

namespace {

int emit(const hopfkit::CommandResult& r, const std::string& report_path) {
  if (!r.error.empty()) std::cerr << "hopfkit: " << (r.exit_code == 2 ? "error: " : "") << r.error << "\n";
  if (r.output.empty()) return r.exit_code;
  if (report_path.empty()) {
    std::cout << r.output;
  } else {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) {
      std::cerr << "hopfkit: error: cannot write " << report_path << "\n";
      return 2;
    }
    out << r.output;
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with finite-dimensional Hopf algebras and coactions"};
  std::string verb, input, object, seed, report, field = "Q", name;
  bool unchecked = false;

  std::vector<std::string> verbs = hopfkit::command_verbs();
  verbs.push_back("catalog");
  app.add_option("verb", verb, "command to run")->required()->check(CLI::IsMember(verbs));
  app.add_option("input", input, "input document (or catalog entry for 'catalog')")->required();
  app.add_option("--object", object, "object to act on when the document has several candidates");
  app.add_option("--seed", seed, "subspace object bounding the stable ideal (reduce)");
  app.add_option("--report", report, "write the output document here instead of stdout");
  app.add_flag("--unchecked", unchecked, "do not run axiom checkers on referenced objects");
  app.add_option("--field", field, "catalog: Q or a prime p");
  app.add_option("--name", name, "catalog: object name (defaults to the entry)");
  app.footer("Exit codes: 0 verified/true, 1 refuted/false, 2 input or precondition error.");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (verb == "catalog") return emit(hopfkit::catalog_command(input, field, name.empty() ? input : name), report);

  std::ifstream in(input, std::ios::binary);
  if (!in) {
    std::cerr << "hopfkit: error: cannot read " << input << "\n";
    return 2;
  }
  std::ostringstream text;
  text << in.rdbuf();
  hopfkit::CommandOptions opt;
  if (!object.empty()) opt.object = object;
  if (!seed.empty()) opt.seed = seed;
  opt.unchecked = unchecked;
  return emit(hopfkit::run_command(verb, text.str(), opt), report);
}
