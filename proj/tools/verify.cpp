// verify: run the Moufang identity suite and emit a report.
//
// Exit status: 0 when every record passes, 1 when some record fails,
// 2 on invalid arguments, 3 when sign calibration fails.

#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "moufang/harness.hpp"

int main(int argc, char** argv) {
  using namespace moufang;

  CLI::App app{"Numerically verify Moufang-loop Maurer-Cartan, Yamaguti and integrability identities"};
  app.set_config("--config", "", "Config file (INI/TOML) with the same keys as the flags; flags win");

  std::string loop = "all";
  long dim = 2;
  int samples = 50;
  double radius = 0.3;
  std::uint64_t seed = 42;
  double tol = 1e-9;
  std::vector<std::string> checks{"all"};
  std::string report_format = "text";
  std::string out;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());

  app.add_option("--loop", loop, "Loop instance")
      ->check(CLI::IsMember({"abelian", "quaternion", "octonion", "all"}))
      ->capture_default_str();
  app.add_option("--dim", dim, "Dimension of the abelian instance")->capture_default_str();
  app.add_option("--samples", samples, "Sample points per instance")->capture_default_str();
  app.add_option("--radius", radius, "Sampling radius, in (0, 0.5]")->capture_default_str();
  app.add_option("--seed", seed, "Sampling seed")->capture_default_str();
  app.add_option("--tol", tol, "Residual tolerance")->capture_default_str();
  app.add_option("--checks", checks, "Comma-separated check ids or prefixes, or 'all'")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--report", report_format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--out", out, "Write the report to this path instead of stdout");
  app.add_option("--threads", threads, "Worker threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  SuiteConfig config = default_config();
  try {
    if (loop != "all") config.loops = {loop_kind_from_string(loop)};
    config.abelian_dim = dim;
    config.samples = samples;
    config.radius = radius;
    config.seed = seed;
    config.tolerance = tol;
    config.checks = resolve_checks(checks);
    config.format = report_format_from_string(report_format);
    config.validate();
  } catch (const std::invalid_argument& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return 2;
  }

  CheckReport report;
  try {
    report = run_suite(config, {threads});
  } catch (const CalibrationError& e) {
    std::cerr << "verify: calibration failed: " << e.what() << "\n";
    return 3;
  }

  const std::string text = emit_report(report, config.format);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(out, std::ios::binary);
    if (!file) {
      std::cerr << "verify: cannot write " << out << "\n";
      return 2;
    }
    file << text;
    std::cout << "PASSED " << report.passed() << "/" << report.records.size() << "\n";
  }
  return report.all_passed() ? 0 : 1;
}
