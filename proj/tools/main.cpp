#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

namespace {

// "--" would end option parsing, so sectors may also be spelled with p/m.
std::string normalise_sector(std::string text) {
  for (auto& ch : text) {
    if (ch == 'p') ch = '+';
    if (ch == 'm') ch = '-';
  }
  return text;
}

}  // namespace

int main(int argc, char** argv) {
  using cnbethe::cli::ExitCode;
  cnbethe::cli::RunConfig config;
  std::string k_list;
  std::string rep = "scalar";
  std::string format = "json";
  double tol = 0.0;

  CLI::App app{"Coordinate Bethe ansatz for particles on a half-line with a wall"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--model", config.model, "delta or pdp")->check(CLI::IsMember({"delta", "pdp"}));
  app.add_option("--N", config.n, "number of particles");
  app.add_option("--rep", rep, "regular or scalar")->check(CLI::IsMember({"regular", "scalar"}));
  app.add_option("--sector", config.sector, "one-dimensional sector (++, +-, -+, --; or pp, pm, mp, mm)");
  app.add_option("--c1", config.c1, "delta pair coupling");
  app.add_option("--c2", config.c2, "delta wall coupling");
  app.add_option("--lambda1", config.lambda1, "pdp pair coupling");
  app.add_option("--lambda2", config.lambda2, "pdp wall coupling");
  app.add_option("--k", k_list, "comma-separated momenta (default: seeded random)");
  app.add_option("--samples", config.samples, "random (u, v) samples");
  app.add_option("--seed", config.seed, "random seed");
  app.add_option("--probes", config.probes, "probes per facet type");
  app.add_option("--points", config.points, "sample points");
  app.add_option("--h", config.h, "finite-difference step");
  auto* tol_opt = app.add_option("--tol", tol, "tolerance override");
  app.add_option("--parity", config.parity, "even or odd")->check(CLI::IsMember({"even", "odd", "+", "-"}));
  app.add_option("--c", config.c, "delta wall coupling for scatter");
  app.add_option("--lambda", config.lambda, "pdp wall coupling for scatter");
  app.add_option("--v0", config.v0, "wall heights start:stop:count (log-spaced)");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", config.out, "output file (default: $CNBETHE_OUTPUT_DIR/<command>.<ext> or stdout)");

  app.add_subcommand("consistency", "operator and coefficient identity checks");
  app.add_subcommand("build", "coefficient table A_P");
  auto* verify = app.add_subcommand("verify", "wavefunction checks");
  verify->require_subcommand(1);
  verify->add_subcommand("boundary", "pair, wall and half-line conditions");
  verify->add_subcommand("eigen", "finite-difference eigenvalue check");
  verify->add_subcommand("duality", "delta bosons against pdp fermions");
  app.add_subcommand("scatter", "finite-wall reflection sweep");
  app.add_subcommand("reps", "orbits, irreps and the dimension sum rule");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ExitCode::Usage);
  }

  auto* chosen = app.get_subcommands().front();
  config.command = chosen->get_name();
  if (!chosen->get_subcommands().empty()) config.subcommand = chosen->get_subcommands().front()->get_name();
  config.regular = rep == "regular";
  config.sector = normalise_sector(config.sector);
  config.format = format == "csv" ? cnbethe::cli::Format::Csv : cnbethe::cli::Format::Json;
  if (tol_opt->count() > 0) config.tol = tol;

  cnbethe::cli::CommandResult result;
  try {
    if (!k_list.empty()) config.k = cnbethe::cli::parse_list(k_list);
    result = cnbethe::cli::run(config);
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Usage);
  }

  if (result.code == ExitCode::Usage) {
    std::cerr << result.document << "Run with --help for usage.\n";
    return static_cast<int>(result.code);
  }
  const auto path = cnbethe::cli::output_path(config, result.extension);
  if (path.empty()) {
    std::cout << result.document;
  } else {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << path << "\n";
      return static_cast<int>(ExitCode::Usage);
    }
    out << result.document;
    std::cerr << "wrote " << path << "\n";
  }
  return static_cast<int>(result.code);
}
