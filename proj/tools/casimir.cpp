// casimir: evaluate atom/atom, atom/surface and slab/slab dispersion
// interactions from a config file.
//
//   casimir pair|surface|slab|sweep --config <file> [--out <path>]
//           [--format csv|json] [--lifshitz-variant tan|tanh] [--point <x>]
//
// Exit codes: 0 success, 1 computation error, 2 config/domain error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "casimir/sweep.hpp"

namespace {

struct Options {
  std::string config_path;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<std::string> variant;
  std::optional<double> point;
};

int run(const std::string& command, const Options& opt) {
  using namespace casimir;
  RunConfig config = load_config(opt.config_path);
  if (command == "pair") config.geometry = GeometryKind::pair;
  if (command == "surface") config.geometry = GeometryKind::surface;
  if (command == "slab") config.geometry = GeometryKind::slab;
  if (opt.format) {
    config.format = *opt.format == "json" ? OutputFormat::json : OutputFormat::csv;
  }
  if (opt.variant) config.lifshitz_variant = parse_lifshitz_variant(*opt.variant);
  if (opt.out) config.output = *opt.out;

  if (opt.point) {
    std::cout << format_point_report(eval_point(config, *opt.point)) << "\n";
    return 0;
  }

  const SweepResult result = run_sweep(config);
  if (config.output) {
    std::ofstream file(*config.output, std::ios::binary);
    if (!file) {
      std::cerr << "casimir: cannot write '" << *config.output << "'\n";
      return 1;
    }
    write_result(file, result, config.format);
  } else {
    write_result(std::cout, result, config.format);
  }
  for (const auto& line : result.diagnostics) {
    std::cerr << "casimir: error at " << line << "\n";
  }
  return result.failures() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Casimir-Polder / van der Waals interaction toolkit"};
  app.require_subcommand(1);
  Options opt;

  for (const char* name : {"pair", "surface", "slab", "sweep"}) {
    auto* sub = app.add_subcommand(name, std::string("evaluate the ") + name +
                                             " geometry (sweep: geometry "
                                             "taken from the config)");
    sub->add_option("--config", opt.config_path, "config file")->required();
    sub->add_option("--out", opt.out, "output path (default stdout)");
    sub->add_option("--format", opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--lifshitz-variant", opt.variant, "tan or tanh")
        ->check(CLI::IsMember({"tan", "tanh"}));
    sub->add_option("--point", opt.point,
                    "evaluate a single abscissa and print a one-line report");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, opt);
  } catch (const casimir::ConfigError& e) {
    std::cerr << "casimir: config error: " << e.what() << "\n";
    return 2;
  } catch (const casimir::DomainError& e) {
    std::cerr << "casimir: domain error: " << e.what() << "\n";
    return 2;
  } catch (const casimir::Error& e) {
    std::cerr << "casimir: " << casimir::error_kind(e) << ": " << e.what()
              << "\n";
    return 1;
  }
}
