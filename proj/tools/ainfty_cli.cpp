#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "ainfty/commands.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    std::exit(2);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact calculus of chain-level operators: homology splittings, insertion "
      "composition systems, operator cohomology and truncated multiplication "
      "lifting. Reports are deterministic JSON on stdout."};
  app.require_subcommand(1);

  std::string input = "-";
  std::string out_path;
  bool timing = false;
  int trials = 100;
  std::uint64_t seed = 0;
  int up_to = 0;
  int hh_n = 0, hh_i = 0;
  int level = 0;
  int to_level = 0;
  std::string to_convention;

  app.add_flag("--timing", timing, "print wall time to stderr (stdout stays deterministic)");

  ainfty::CommandResult result{2, "", {}};
  bool ran = false;
  auto run = [&](auto&& fn) {
    auto start = std::chrono::steady_clock::now();
    result = fn(read_input(input));
    ran = true;
    if (timing) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
      std::cerr << "time_ms " << ms << "\n";
    }
  };
  auto add_input = [&](CLI::App* sub) {
    sub->fallthrough();  // let app-level flags like --timing appear anywhere
    sub->add_option("instance", input, "instance file, or - for stdin");
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "write the produced instance to this file");
  };

  auto* validate = app.add_subcommand("validate", "schema, differential and relation checks");
  add_input(validate);
  validate->callback([&] { run(ainfty::cmd_validate); });

  auto* homology = app.add_subcommand("homology", "ranks, torsion and splitting of the complex");
  add_input(homology);
  homology->callback([&] { run(ainfty::cmd_homology); });

  auto* prelie = app.add_subcommand("check-prelie",
                                    "sampled composition-system identities on this complex");
  add_input(prelie);
  prelie->add_option("--trials", trials, "sampled triples per suite")->capture_default_str();
  prelie->add_option("--seed", seed, "sampling seed")->capture_default_str();
  prelie->callback([&] {
    run([&](const std::string& text) { return ainfty::cmd_check_prelie(text, trials, seed); });
  });

  auto* checkar = app.add_subcommand("check-ar", "relation defects of the carried structure");
  add_input(checkar);
  auto* upopt = checkar->add_option("--up-to", up_to, "check relations 1..N only");
  checkar->callback([&] {
    std::optional<int> bound;
    if (upopt->count() > 0) bound = up_to;
    run([&](const std::string& text) { return ainfty::cmd_check_ar(text, bound); });
  });

  auto* hochschild =
      app.add_subcommand("hochschild", "operator cohomology of the homology algebra");
  add_input(hochschild);
  hochschild->add_option("--n", hh_n, "operator arity")->required();
  hochschild->add_option("--i", hh_i, "internal degree")->required();
  hochschild->callback([&] {
    run([&](const std::string& text) { return ainfty::cmd_hochschild(text, hh_n, hh_i); });
  });

  auto* obstruct = app.add_subcommand("obstruct", "obstruction class and one lifting step");
  add_input(obstruct);
  auto* lvlopt = obstruct->add_option("--r", level, "level to lift from (defaults to the structure level)");
  add_out(obstruct);
  obstruct->callback([&] {
    std::optional<int> r;
    if (lvlopt->count() > 0) r = level;
    run([&](const std::string& text) { return ainfty::cmd_obstruct(text, r); });
  });

  auto* extend = app.add_subcommand("extend", "iterate lifting up to a target level");
  add_input(extend);
  extend->add_option("--to", to_level, "target level")->required();
  add_out(extend);
  extend->callback([&] {
    run([&](const std::string& text) { return ainfty::cmd_extend(text, to_level); });
  });

  auto* convert = app.add_subcommand("convert", "rewrite the structure in another convention");
  add_input(convert);
  convert->add_option("--to", to_convention, "circle, suspended or stasheff")->required();
  add_out(convert);
  convert->callback([&] {
    run([&](const std::string& text) { return ainfty::cmd_convert(text, to_convention); });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (!ran) return 2;
  std::cout << result.report;
  if (!out_path.empty()) {
    if (!result.instance_out) {
      std::cerr << "no instance produced; nothing written to " << out_path << "\n";
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return 2;
      }
      out << *result.instance_out;
    }
  }
  return result.exit_code;
}
