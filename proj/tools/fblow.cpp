#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fblow/cli.hpp"
#include "fblow/errors.hpp"

namespace {

struct Common {
  std::string input;
  std::string format = "text";
  fblow::cli::RunFlags flags;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("input", c.input, "JSON file, or inline JSON starting with '{'")->required();
  cmd->add_option("--e", c.flags.e, "Frobenius exponent");
  cmd->add_option("--e-max", c.flags.e_max, "Largest exponent for sequence");
  cmd->add_option("--weight", c.flags.weight, "Weight w1,...,wd");
  cmd->add_option("--degree-bound", c.flags.degree_bound, "Chart enumeration bound");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace fblow::cli;
  CLI::App app{"F-blowups of affine toric varieties"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  Common analyze, fblow_cmd, sequence;
  add_common(app.add_subcommand("analyze", "Weak normality, F-purity and normality"), analyze);
  add_common(app.add_subcommand("fblow", "Chamber fan and charts at one level"), fblow_cmd);
  add_common(app.add_subcommand("sequence", "Levels 1..e_max, domination and stabilization"), sequence);

  std::string polynomial;
  fblow::Int p = 0;
  auto* fedder = app.add_subcommand("fedder", "F-purity of a hypersurface");
  fedder->add_option("polynomial", polynomial, "Polynomial in x0..x9")->required();
  fedder->add_option("--p", p, "Characteristic")->required();

  std::uint64_t seed = 1;
  std::size_t count = 25;
  auto* properties = app.add_subcommand("properties", "Seeded property checks");
  properties->add_option("--seed", seed, "Corpus seed");
  properties->add_option("--count", count, "Monoids per dimension");

  for (auto* sub : app.get_subcommands({})) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : 1;
  }

  const Format fmt = format == "json" ? Format::Json : Format::Text;
  try {
    Report report;
    auto load = [](const Common& c) {
      InputSpec spec = parse_input(c.input);
      apply_flags(spec, c.flags);
      return spec;
    };
    if (app.got_subcommand("analyze")) {
      report = run_analyze(load(analyze));
    } else if (app.got_subcommand("fblow")) {
      report = run_fblow(load(fblow_cmd));
    } else if (app.got_subcommand("sequence")) {
      report = run_sequence(load(sequence));
    } else if (app.got_subcommand("fedder")) {
      report = run_fedder(polynomial, p);
    } else {
      report = run_properties(seed, count);
    }
    std::cout << report.render(fmt);
    return report.exit_code();
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return exit_code_for(err);
  }
}
