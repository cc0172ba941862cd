#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "moufang/harness.hpp"

namespace moufang {

using nlohmann::json;

namespace {

json config_to_json(const SuiteConfig& c) {
  json loops = json::array();
  for (LoopKind k : c.loops) loops.push_back(to_string(k));
  return {{"loops", loops},      {"dim", c.abelian_dim}, {"samples", c.samples}, {"radius", c.radius},
          {"seed", c.seed},      {"tol", c.tolerance},   {"checks", c.checks},   {"report", to_string(c.format)}};
}

SuiteConfig config_from_json(const json& j) {
  SuiteConfig c;
  c.loops.clear();
  for (const auto& k : j.at("loops")) c.loops.push_back(loop_kind_from_string(k.get<std::string>()));
  c.abelian_dim = j.at("dim").get<Eigen::Index>();
  c.samples = j.at("samples").get<int>();
  c.radius = j.at("radius").get<double>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.tolerance = j.at("tol").get<double>();
  c.checks = j.at("checks").get<std::vector<std::string>>();
  c.format = report_format_from_string(j.at("report").get<std::string>());
  return c;
}

std::string emit_json(const CheckReport& report) {
  json records = json::array();
  for (const CheckRecord& r : report.records) {
    json rec = {{"check", r.check}, {"loop", r.loop},   {"sample", r.sample}, {"point", r.point},
                {"residual", nullptr}, {"tol", r.tol}, {"pass", r.pass}};
    // Non-finite residuals (failed evaluations) are written as null.
    if (std::isfinite(r.residual)) rec["residual"] = r.residual;
    if (!r.reason.empty()) rec["reason"] = r.reason;
    records.push_back(std::move(rec));
  }
  const json doc = {{"version", report.version},
                    {"config", config_to_json(report.config)},
                    {"signs", {{"sigma", report.signs.sigma}, {"tau", report.signs.tau}}},
                    {"notes", report.notes},
                    {"records", records}};
  return doc.dump(2) + "\n";
}

std::string emit_text(const CheckReport& report) {
  std::ostringstream os;
  const SuiteConfig& c = report.config;
  os << "moufang verify " << report.version << "\n";
  os << "config: loops=";
  for (std::size_t i = 0; i < c.loops.size(); ++i) os << (i ? "," : "") << to_string(c.loops[i]);
  char buf[256];
  std::snprintf(buf, sizeof buf, " dim=%ld samples=%d radius=%g seed=%llu tol=%g checks=%zu\n",
                static_cast<long>(c.abelian_dim), c.samples, c.radius, static_cast<unsigned long long>(c.seed),
                c.tolerance, c.checks.size());
  os << buf;
  os << "signs: sigma=" << report.signs.sigma << " tau=" << report.signs.tau << "\n";
  for (const std::string& n : report.notes) os << "note: " << n << "\n";

  std::snprintf(buf, sizeof buf, "%-16s %-11s %6s %12s %10s  %s\n", "check", "loop", "sample", "residual", "tol",
                "result");
  os << buf;
  for (const CheckRecord& r : report.records) {
    std::snprintf(buf, sizeof buf, "%-16s %-11s %6zu %12.3e %10.1e  %s", r.check.c_str(), r.loop.c_str(), r.sample,
                  r.residual, r.tol, r.pass ? "PASS" : "FAIL");
    os << buf;
    if (!r.reason.empty()) os << "  (" << r.reason << ")";
    os << "\n";
  }
  os << "PASSED " << report.passed() << "/" << report.records.size() << "\n";
  return os.str();
}

}  // namespace

std::string emit_report(const CheckReport& report, ReportFormat format) {
  return format == ReportFormat::json ? emit_json(report) : emit_text(report);
}

CheckReport parse_report_json(const std::string& text) {
  const json doc = json::parse(text);
  CheckReport report;
  report.version = doc.at("version").get<std::string>();
  report.config = config_from_json(doc.at("config"));
  report.signs = {doc.at("signs").at("sigma").get<int>(), doc.at("signs").at("tau").get<int>()};
  report.notes = doc.at("notes").get<std::vector<std::string>>();
  for (const json& j : doc.at("records")) {
    CheckRecord r;
    r.check = j.at("check").get<std::string>();
    r.loop = j.at("loop").get<std::string>();
    r.sample = j.at("sample").get<std::size_t>();
    r.point = j.at("point").get<std::vector<double>>();
    const json& res = j.at("residual");
    r.residual = res.is_null() ? std::numeric_limits<double>::infinity() : res.get<double>();
    r.tol = j.at("tol").get<double>();
    r.pass = j.at("pass").get<bool>();
    if (j.contains("reason")) r.reason = j.at("reason").get<std::string>();
    report.records.push_back(std::move(r));
  }
  return report;
}

}  // namespace moufang
