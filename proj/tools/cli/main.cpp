#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "suites.hpp"

using namespace hilbsym;

int main(int argc, char** argv) {
  cli::RunConfig config;
  CLI::App app{"Numerical and exact checks for the Hilbert scheme of points and its symmetric product"};
  app.require_subcommand(1);
  std::string branch = "-pi";
  std::string precision = "f64";
  for (const auto& name : cli::commands()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--n", config.n, "largest weight n")->capture_default_str();
    sub->add_option("--order", config.order, "q-series truncation order")->capture_default_str();
    sub->add_option("--tol", config.tol, "comparison tolerance");
    sub->add_option("--seed", config.seeds, "seeds for sampled parameters (repeatable)");
    sub->add_option("--branch", branch, "branch of log(-1)")->check(CLI::IsMember({"+pi", "-pi"}))->capture_default_str();
    sub->add_option("--precision", precision, "working precision")->check(CLI::IsMember({"f64", "ext"}))->capture_default_str();
    sub->add_option("--out", config.out, "write the JSON report here instead of stdout");
    sub->add_flag("--timings", config.timings, "include per-check runtimes");
    sub->callback([&config, name] { config.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  config.branch = branch == "+pi" ? algebra::Branch::plus_pi : algebra::Branch::minus_pi;
  config.precision = precision == "ext" ? cli::Precision::ext : cli::Precision::f64;
  if (const char* threads = std::getenv("HILBSYM_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(threads, &end, 10);
    if (end == threads || *end != '\0' || v < 1) {
      std::cerr << "error: HILBSYM_THREADS must be a positive integer\n";
      return 2;
    }
  }
  try {
    const auto report = cli::run(config);
    const std::string text = cli::to_json(report).dump(2) + "\n";
    if (config.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(config.out);
      if (!out) {
        std::cerr << "error: cannot open " << config.out << "\n";
        return 2;
      }
      out << text;
    }
    for (const auto& c : report.checks)
      if (!c.passed) std::cerr << "FAIL " << c.name << " [" << c.index << "]" << (c.error.empty() ? "" : ": " + c.error) << "\n";
    return report.passed() ? 0 : 1;
  } catch (const cli::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
