#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cga/cli/inspect.hpp"
#include "cga/cli/point_file.hpp"
#include "cga/core/error.hpp"
#include "cga/oracle/agreement.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

int run_inspect(const std::string &kind_text, const std::string &path,
                bool json, double tol) {
  const auto kind = cga::cli::parse_kind(kind_text);
  if (!kind) {
    std::cerr << "error: unknown kind '" << kind_text
              << "' (point, pair, line, circle, plane, sphere)\n";
    return kExitUsage;
  }
  try {
    const auto points = cga::cli::read_point_file(path);
    const auto report = cga::cli::inspect(*kind, points, tol);
    std::cout << (json ? cga::cli::format_json(report)
                       : cga::cli::format_plain(report));
    return kExitOk;
  } catch (const cga::cli::ParseError &e) {
    std::cerr << "error: " << path << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const cga::cli::FileError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cga::cli::ArityError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cga::GeometryError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == cga::ErrorKind::InvalidArgument ? kExitUsage
                                                       : kExitFailed;
  }
}

int run_selfcheck(std::uint64_t seed, std::size_t iters) {
  bool ok = true;
  for (const auto &report : cga::oracle::run_all(seed, iters)) {
    ok = ok && report.passed();
    std::printf("%s  %-44s trials=%zu failures=%zu max_error=%.3g tol=%.3g\n",
                report.passed() ? "PASS" : "FAIL", report.name.c_str(),
                report.trials, report.failures, report.max_error,
                report.tolerance);
  }
  std::printf("selfcheck %s\n", ok ? "passed" : "FAILED");
  return ok ? kExitOk : kExitFailed;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Conformal geometric algebra inspector"};
  app.require_subcommand(1);

  std::string kind;
  std::string path;
  bool json = false;
  double tol = cga::kDefaultTolerance;
  auto *inspect = app.add_subcommand("inspect", "Report the 3D data of an object");
  inspect->add_option("kind", kind, "point, pair, line, circle, plane or sphere")
      ->required();
  inspect->add_option("--points", path, "Point file, one 'x y z' per line")
      ->required();
  inspect->add_flag("--json", json, "Structured output");
  inspect->add_option("--tol", tol, "Degeneracy tolerance")
      ->check(CLI::PositiveNumber);

  app.add_subcommand("table", "Print the blade product table");

  std::uint64_t seed = 1;
  std::size_t iters = 1000;
  auto *selfcheck =
      app.add_subcommand("selfcheck", "Run the oracle agreement suites");
  selfcheck->add_option("--seed", seed, "Random seed");
  selfcheck->add_option("--iters", iters, "Trials per suite")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  if (inspect->parsed())
    return run_inspect(kind, path, json, tol);
  if (selfcheck->parsed())
    return run_selfcheck(seed, iters);
  std::cout << cga::cli::product_table();
  return kExitOk;
}
