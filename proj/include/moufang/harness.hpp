#pragma once

// Suite orchestration: deterministic sampling, sign calibration, running the
// identity checks over all instances and emitting text or JSON reports.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "moufang/loops.hpp"

namespace moufang {

inline constexpr const char* kToolVersion = "1.0.0";

enum class ReportFormat { text, json };

std::string to_string(ReportFormat f);
ReportFormat report_format_from_string(const std::string& name);

struct SuiteConfig {
  std::vector<LoopKind> loops{LoopKind::abelian, LoopKind::quaternion, LoopKind::octonion};
  Eigen::Index abelian_dim = 2;
  int samples = 50;
  double radius = 0.3;
  std::uint64_t seed = 42;
  double tolerance = 1e-9;
  std::vector<std::string> checks;  // canonical ids, catalog order
  ReportFormat format = ReportFormat::text;

  /// Throws std::invalid_argument on out-of-range fields or unknown check ids.
  void validate() const;
  bool operator==(const SuiteConfig&) const = default;
};

/// Every check id in catalog order.
const std::vector<std::string>& all_check_ids();

/// Expands "all", exact ids and dotted prefixes ("mc", "gle.S") into canonical ids.
std::vector<std::string> resolve_checks(const std::vector<std::string>& items);

/// Default config with every check selected.
SuiteConfig default_config();

// Identities that hold by construction or by pure linear algebra are held to
// this tighter bound (or the configured tolerance, if smaller).
inline constexpr double kStructuralTolerance = 1e-12;

struct CheckRecord {
  std::string check;
  std::string loop;
  std::size_t sample = 0;
  std::vector<double> point;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string reason;  // set when the evaluation itself failed
  bool operator==(const CheckRecord&) const = default;
};

struct CheckReport {
  std::string version = kToolVersion;
  SuiteConfig config;
  Signs signs;
  std::vector<std::string> notes;
  std::vector<CheckRecord> records;

  std::size_t passed() const;
  bool all_passed() const { return passed() == records.size(); }
  bool operator==(const CheckReport&) const = default;
};

class CalibrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Calibration {
  Signs signs;
  // Max residual of mc.4a and lemma1.6a for (sigma, tau) = (+,+), (+,-), (-,+), (-,-).
  std::array<double, 4> residuals{};
};

inline constexpr std::uint64_t kCalibrationSeed = 42;
inline constexpr int kCalibrationPoints = 10;

/// Picks the unique sign pair under which the quaternion instance satisfies
/// mc.4a and lemma1.6a at seeded points.  Throws CalibrationError otherwise.
Calibration calibrate_signs(double tolerance = 1e-9);

/// `count` points uniform in the open ball of `radius`; bitwise reproducible
/// for a given (dim, count, radius, seed, stream).
std::vector<Eigen::VectorXd> sample_ball(Eigen::Index dim, int count, double radius, std::uint64_t seed,
                                         std::uint64_t stream = 0);

struct SampleSet {
  std::vector<Eigen::VectorXd> g;
  std::vector<Eigen::VectorXd> a;
  std::vector<Eigen::VectorXd> k;
};

SampleSet sample_points(const SuiteConfig& config, LoopKind kind);

/// One suite sample: g for loop-side checks, A for action-side checks, (g, A)
/// for pair checks and (g, A, k) as the Moufang triple.
struct SamplePoint {
  Eigen::VectorXd g;
  Eigen::VectorXd a;
  Eigen::VectorXd k;
};

/// Every selected check at one explicit sample, sorted like run_suite.
std::vector<CheckRecord> evaluate_sample(const SuiteConfig& config, LoopKind kind, const Signs& signs,
                                         std::size_t index, const SamplePoint& point);

struct RunOptions {
  unsigned threads = 1;
};

/// Runs every selected check on every sample; chart exits become failed records.
CheckReport run_suite(const SuiteConfig& config, const RunOptions& options = {});

std::string emit_report(const CheckReport& report, ReportFormat format);
CheckReport parse_report_json(const std::string& text);

}  // namespace moufang
