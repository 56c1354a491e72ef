#include "gradorder/report.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Graded orders of crystalline graded rings over Z and Z[i]"};
  app.require_subcommand(1);

  gradorder::CommandOptions opt;
  std::string path;
  std::string format = "text";

  const std::vector<std::pair<std::string, std::string>> commands{
      {"validate", "check the cocycle data and report H"},
      {"maternal", "k tables, gamma solutions and maternal orders"},
      {"maximal", "maximal graded orders containing A"},
      {"conjugate", "conjugate an order by u_g"},
      {"orbit", "depth-bounded conjugation walk from an order"},
      {"stg-check", "property suite of the spectrally twisted groups"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", path, "input spec")->required();
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    if (name == "maximal") {
      sub->add_option("--method", opt.method, "gamma, refine, oracle or all")
          ->check(CLI::IsMember({"gamma", "refine", "oracle", "all"}));
    }
    if (name == "conjugate" || name == "orbit") {
      sub->add_option("--order", opt.order, "maternal:<i>, maximal:<i> or A");
    }
    if (name == "conjugate") sub->add_option("--by", opt.by, "group element label")->required();
    if (name == "orbit") sub->add_option("--depth", opt.depth, "number of conjugation steps")->check(CLI::Range(0, 6));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : gradorder::kInputError;
  }

  opt.format = format == "json" ? gradorder::Format::json : gradorder::Format::text;
  const auto result = gradorder::run_command(app.get_subcommands().front()->get_name(), path, opt);
  (result.exit_code == gradorder::kInputError ? std::cerr : std::cout) << result.output;
  return result.exit_code;
}
