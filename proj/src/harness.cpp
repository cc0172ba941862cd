#include "moufang/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "moufang/actions.hpp"
#include "moufang/integrability.hpp"

namespace moufang {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

std::string to_string(ReportFormat f) { return f == ReportFormat::json ? "json" : "text"; }

ReportFormat report_format_from_string(const std::string& name) {
  if (name == "text") return ReportFormat::text;
  if (name == "json") return ReportFormat::json;
  throw std::invalid_argument("unknown report format '" + name + "'");
}

namespace {

// Which sample a check is evaluated at.
enum class Site { loop_point, action_point, pair, triple };

struct CheckInfo {
  const char* id;
  Site site;
  bool structural;
};

constexpr CheckInfo kCatalog[] = {
    {"constraint.uvw", Site::loop_point, true},
    {"constraint.STP", Site::action_point, true},
    {"moufang", Site::triple, false},
    {"mc.4a", Site::loop_point, false},
    {"mc.4b", Site::loop_point, false},
    {"mc.4c", Site::loop_point, false},
    {"lemma1.6a", Site::loop_point, false},
    {"lemma1.6b", Site::loop_point, false},
    {"lemma1.6c", Site::loop_point, false},
    {"lemma1.sum", Site::loop_point, true},
    {"mc.7a", Site::action_point, false},
    {"mc.7b", Site::action_point, false},
    {"mc.7c", Site::action_point, false},
    {"lemma2.9a", Site::action_point, false},
    {"lemma2.9b", Site::action_point, false},
    {"lemma2.9c", Site::action_point, false},
    {"lemma2.sum", Site::action_point, true},
    {"gle.S.1a", Site::pair, false},
    {"gle.S.1b", Site::pair, false},
    {"gle.S.1c", Site::pair, false},
    {"gle.T.3a", Site::pair, false},
    {"gle.T.3b", Site::pair, false},
    {"gle.T.3c", Site::pair, false},
    {"thm.11a", Site::pair, false},
    {"thm.11b", Site::pair, false},
    {"inter.12", Site::pair, false},
    {"inter.13a", Site::pair, false},
    {"inter.13b", Site::pair, false},
    {"inter.T12", Site::pair, false},
    {"inter.T13a", Site::pair, false},
    {"inter.T13b", Site::pair, false},
    {"equiv.12", Site::pair, false},
    {"equiv.13a", Site::pair, false},
    {"equiv.13b", Site::pair, false},
    {"equiv.T12", Site::pair, false},
    {"equiv.T13a", Site::pair, false},
    {"equiv.T13b", Site::pair, false},
    {"thm.sum.S", Site::pair, true},
    {"thm.sum.T", Site::pair, true},
    {"mixed.S", Site::pair, true},
    {"mixed.T", Site::pair, true},
};

const CheckInfo& info(const std::string& id) {
  for (const CheckInfo& c : kCatalog)
    if (id == c.id) return c;
  throw std::invalid_argument("unknown check '" + id + "'");
}

int loop_order(const std::string& name) {
  if (name == "abelian") return 0;
  if (name == "quaternion") return 1;
  if (name == "octonion") return 2;
  return 3;
}

}  // namespace

const std::vector<std::string>& all_check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const CheckInfo& c : kCatalog) out.emplace_back(c.id);
    return out;
  }();
  return ids;
}

std::vector<std::string> resolve_checks(const std::vector<std::string>& items) {
  std::set<std::string> chosen;
  for (const std::string& item : items) {
    if (item.empty()) continue;
    if (item == "all") {
      chosen.insert(all_check_ids().begin(), all_check_ids().end());
      continue;
    }
    bool matched = false;
    for (const std::string& id : all_check_ids()) {
      if (id == item || id.rfind(item + ".", 0) == 0) {
        chosen.insert(id);
        matched = true;
      }
    }
    if (!matched) throw std::invalid_argument("unknown check '" + item + "'");
  }
  std::vector<std::string> out;
  for (const std::string& id : all_check_ids())
    if (chosen.count(id)) out.push_back(id);
  return out;
}

SuiteConfig default_config() {
  SuiteConfig c;
  c.checks = all_check_ids();
  return c;
}

void SuiteConfig::validate() const {
  if (!(radius > 0.0 && radius <= 0.5)) throw std::invalid_argument("radius must lie in (0, 0.5]");
  if (samples < 1) throw std::invalid_argument("samples must be at least 1");
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (abelian_dim < 1) throw std::invalid_argument("abelian dimension must be positive");
  if (loops.empty()) throw std::invalid_argument("no loop instance selected");
  for (const std::string& id : checks) info(id);
}

std::size_t CheckReport::passed() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; }));
}

// ---------------------------------------------------------------------------
// Sampling

std::vector<VectorXd> sample_ball(Index dim, int count, double radius, std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(dim)};
  std::mt19937_64 engine(seq);
  // 53 random mantissa bits; avoids library-specific distribution code.
  const auto unit = [&engine] { return static_cast<double>(engine() >> 11) * 0x1.0p-53; };

  std::vector<VectorXd> out;
  out.reserve(count);
  VectorXd x(dim);
  while (static_cast<int>(out.size()) < count) {
    for (Index i = 0; i < dim; ++i) x[i] = radius * (2.0 * unit() - 1.0);
    if (x.norm() < radius) out.push_back(x);
  }
  return out;
}

SampleSet sample_points(const SuiteConfig& config, LoopKind kind) {
  const Index dim = kind == LoopKind::abelian ? config.abelian_dim : kind == LoopKind::quaternion ? 3 : 7;
  const auto stream = [kind](std::uint64_t role) { return 3 * static_cast<std::uint64_t>(kind) + role; };
  return {sample_ball(dim, config.samples, config.radius, config.seed, stream(0)),
          sample_ball(dim, config.samples, config.radius, config.seed, stream(1)),
          sample_ball(dim, config.samples, config.radius, config.seed, stream(2))};
}

// ---------------------------------------------------------------------------
// Calibration

Calibration calibrate_signs(double tolerance) {
  const auto loop = make_loop(LoopKind::quaternion);
  const auto points = sample_ball(loop->dim(), kCalibrationPoints, loop->radius(), kCalibrationSeed);
  Calibration cal;
  const std::array<Signs, 4> pairs{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
  int passing = 0;
  std::size_t best = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const StructureConstants c = structure_constants(*loop, pairs[i].sigma);
    double worst = 0.0;
    for (const VectorXd& g : points) {
      worst = std::max(worst, check_maurer_cartan_g(*loop, c, g)[0].residual);
      worst = std::max(worst, check_lemma1(*loop, c, pairs[i].tau, g)[0].residual);
    }
    cal.residuals[i] = worst;
    if (worst <= tolerance) ++passing;
    if (worst < cal.residuals[best]) best = i;
  }
  if (passing == 0) throw CalibrationError("no sign pair satisfies mc.4a and lemma1.6a on the quaternion instance");
  if (passing > 1) throw CalibrationError("sign calibration is ambiguous on the quaternion instance");
  cal.signs = pairs[best];
  return cal;
}

// ---------------------------------------------------------------------------
// Suite

namespace {

struct LoopSetup {
  std::shared_ptr<const LoopChart> loop;
  std::shared_ptr<const ActionSpace> space;
  StructureConstants c;
  Signs signs;

  LoopSetup(const SuiteConfig& config, LoopKind kind, const Signs& s)
      : loop(make_loop(kind, config.abelian_dim, config.radius)),
        space(std::make_shared<RegularAction>(loop)),
        c(structure_constants(*loop, s.sigma)),
        signs(s) {}
};

std::vector<double> concat(std::initializer_list<const VectorXd*> parts) {
  std::vector<double> out;
  for (const VectorXd* p : parts) out.insert(out.end(), p->data(), p->data() + p->size());
  return out;
}

class SampleEvaluator {
 public:
  SampleEvaluator(const SuiteConfig& config, const LoopSetup& setup, std::size_t index, const SamplePoint& point)
      : config_(config), setup_(setup), index_(index), point_(point) {}

  std::vector<CheckRecord> run() {
    const auto wants = [&](Site site) {
      return std::any_of(config_.checks.begin(), config_.checks.end(),
                         [&](const std::string& id) { return info(id).site == site; });
    };
    if (wants(Site::loop_point)) guarded(Site::loop_point, [&] { loop_point(); });
    if (wants(Site::action_point)) guarded(Site::action_point, [&] { action_point(); });
    if (wants(Site::pair)) guarded(Site::pair, [&] { pair(); });
    if (wants(Site::triple)) guarded(Site::triple, [&] { triple(); });
    return std::move(records_);
  }

 private:
  const VectorXd& g() const { return point_.g; }
  const VectorXd& a() const { return point_.a; }
  const VectorXd& k() const { return point_.k; }

  std::vector<double> point_of(Site site) const {
    switch (site) {
      case Site::loop_point:
        return concat({&g()});
      case Site::action_point:
        return concat({&a()});
      case Site::pair:
        return concat({&g(), &a()});
      case Site::triple:
        return concat({&g(), &a(), &k()});
    }
    return {};
  }

  double tolerance_for(const CheckInfo& ci) const {
    return ci.structural ? std::min(config_.tolerance, kStructuralTolerance) : config_.tolerance;
  }

  bool selected(const std::string& id) const {
    return std::find(config_.checks.begin(), config_.checks.end(), id) != config_.checks.end();
  }

  void add(const std::string& id, double residual) {
    if (!selected(id)) return;
    const CheckInfo& ci = info(id);
    CheckRecord r;
    r.check = id;
    r.loop = setup_.loop->name();
    r.sample = index_;
    r.point = point_of(ci.site);
    r.residual = residual;
    r.tol = tolerance_for(ci);
    r.pass = std::isfinite(residual) && residual <= r.tol;
    records_.push_back(std::move(r));
  }

  template <typename F>
  void guarded(Site site, F&& body) {
    const std::size_t mark = records_.size();
    try {
      body();
    } catch (const DomainError& e) {
      records_.resize(mark);
      for (const std::string& id : config_.checks) {
        const CheckInfo& ci = info(id);
        if (ci.site != site) continue;
        CheckRecord r;
        r.check = id;
        r.loop = setup_.loop->name();
        r.sample = index_;
        r.point = point_of(site);
        r.residual = std::numeric_limits<double>::infinity();
        r.tol = tolerance_for(ci);
        r.pass = false;
        r.reason = e.what();
        records_.push_back(std::move(r));
      }
    }
  }

  void loop_point() {
    const LoopChart& loop = *setup_.loop;
    const AuxJet jet = aux_jet(loop, g());
    const AuxFrame f = jet.frame();
    if (selected("constraint.uvw")) {
      const double exact = max_abs(MatrixXd(f.u + f.v + f.w));
      const double recomputed = max_abs(MatrixXd(f.w - sandwich_generator(loop, g())));
      add("constraint.uvw", std::max(exact, recomputed));
    }
    const SecondaryFrame sf = secondary_frame(jet);
    const YamagutiTensorG y = yamaguti_g(sf);
    const auto mc = maurer_cartan_residuals(f.u, f.v, sf.u2, sf.v2, sf.lr, sf.rl, setup_.c.c);
    add("mc.4a", max_abs(mc[0]));
    add("mc.4b", max_abs(mc[1]));
    add("mc.4c", max_abs(mc[2]));
    const auto lemma =
        yamaguti_decomposition_residuals(f.u, f.v, sf.u2, sf.v2, sf.w2, y.y, setup_.c.c, setup_.signs.tau);
    add("lemma1.6a", max_abs(lemma[0]));
    add("lemma1.6b", max_abs(lemma[1]));
    add("lemma1.6c", max_abs(lemma[2]));
    add("lemma1.sum", decomposition_sum_gap(f.u, f.v, y.y, setup_.c.c, setup_.signs.tau));
  }

  void action_point() {
    const ActionSpace& space = *setup_.space;
    const ActionPointData d = action_point_data(space, a());
    const ActionAuxFrame f = d.aux.frame();
    if (selected("constraint.STP")) {
      const double exact = max_abs(MatrixXd(f.S + f.T + f.P));
      const double recomputed = max_abs(MatrixXd(f.P - composite_generator(space, a())));
      add("constraint.STP", std::max(exact, recomputed));
    }
    const ActionSecondaryFrame& sf = d.secondary;
    const auto mc = maurer_cartan_residuals(f.S, f.T, sf.S2, sf.T2, sf.st, sf.ts, setup_.c.c);
    add("mc.7a", max_abs(mc[0]));
    add("mc.7b", max_abs(mc[1]));
    add("mc.7c", max_abs(mc[2]));
    const auto lemma = yamaguti_decomposition_residuals(f.S, f.T, sf.S2, sf.T2, sf.P2, d.yamaguti.y, setup_.c.c,
                                                        setup_.signs.tau);
    add("lemma2.9a", max_abs(lemma[0]));
    add("lemma2.9b", max_abs(lemma[1]));
    add("lemma2.9c", max_abs(lemma[2]));
    add("lemma2.sum", decomposition_sum_gap(f.S, f.T, d.yamaguti.y, setup_.c.c, setup_.signs.tau));
  }

  void pair() {
    const PairContext ctx = evaluate_pair(*setup_.space, g(), a());
    const AuxFrame lf = ctx.loop_aux.frame();
    const auto gs = gle_residual_S(lf, ctx.at_a.aux.frame(), ctx.at_S.aux.frame(), ctx.jet_S);
    const auto gt = gle_residual_T(lf, ctx.at_a.aux.frame(), ctx.at_T.aux.frame(), ctx.jet_T);
    add("gle.S.1a", max_abs(gs[0]));
    add("gle.S.1b", max_abs(gs[1]));
    add("gle.S.1c", max_abs(gs[2]));
    add("gle.T.3a", max_abs(gt[0]));
    add("gle.T.3b", max_abs(gt[1]));
    add("gle.T.3c", max_abs(gt[2]));

    const IntegrabilityRecord rec = integrability_record(ctx);
    add("thm.11a", max_abs(rec.residual_yam_S));
    add("thm.11b", max_abs(rec.residual_yam_T));
    const char* inter_s[] = {"inter.12", "inter.13a", "inter.13b"};
    const char* inter_t[] = {"inter.T12", "inter.T13a", "inter.T13b"};
    const char* equiv_s[] = {"equiv.12", "equiv.13a", "equiv.13b"};
    const char* equiv_t[] = {"equiv.T12", "equiv.T13a", "equiv.T13b"};
    for (std::size_t i = 0; i < 3; ++i) {
      add(inter_s[i], max_abs(rec.intermediates_S[i]));
      add(inter_t[i], max_abs(rec.intermediates_T[i]));
      add(equiv_s[i], rec.equivalence_gap_S[i]);
      add(equiv_t[i], rec.equivalence_gap_T[i]);
    }
    add("thm.sum.S", rec.sum_gap_S);
    add("thm.sum.T", rec.sum_gap_T);
    if (selected("mixed.S") || selected("mixed.T"))
      for (const IdentityResidual& r : mixed_partials_check(*setup_.space, g(), a())) add(r.check_id, r.residual);
  }

  void triple() { add("moufang", check_moufang(*setup_.loop, g(), a(), k())); }

  const SuiteConfig& config_;
  const LoopSetup& setup_;
  std::size_t index_;
  const SamplePoint& point_;
  std::vector<CheckRecord> records_;
};

std::vector<std::string> report_notes(const Calibration& cal) {
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "signs calibrated on the quaternion instance at %d seeded points: sigma=%+d tau=%+d", kCalibrationPoints,
                cal.signs.sigma, cal.signs.tau);
  return {buf,
          "aux functions: u = d(a g)/da, v = d(g a)/da at a = e; w = -(u + v); S, T likewise from S_g A, T_g A; "
          "P = -(S + T)",
          "structure constants: C^s_jk = sigma (d2 m^s/da^j db^k - d2 m^s/da^k db^j) at (e, e)",
          "GLE coefficient functions written with argument h are evaluated at A; output index read as mu",
          "action secondary functions differentiate along A",
          "bracket identity for [S_x, T_y] is checked as [S_x, T_y] = [T_x, S_y]",
          "T-side intermediate identities use the (u,P,S), (v,S,P), (w,T,T) coefficient pattern",
          "regular birepresentation: S_g A = g A, T_g A = A g"};
}

void sort_records(std::vector<CheckRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const CheckRecord& x, const CheckRecord& y) {
    if (x.check != y.check) return x.check < y.check;
    if (x.loop != y.loop) return loop_order(x.loop) < loop_order(y.loop);
    return x.sample < y.sample;
  });
}

}  // namespace

std::vector<CheckRecord> evaluate_sample(const SuiteConfig& config, LoopKind kind, const Signs& signs,
                                         std::size_t index, const SamplePoint& point) {
  const LoopSetup setup(config, kind, signs);
  std::vector<CheckRecord> records = SampleEvaluator(config, setup, index, point).run();
  sort_records(records);
  return records;
}

CheckReport run_suite(const SuiteConfig& config, const RunOptions& options) {
  config.validate();
  const Calibration cal = calibrate_signs();

  CheckReport report;
  report.config = config;
  report.signs = cal.signs;
  report.notes = report_notes(cal);

  for (LoopKind kind : config.loops) {
    const LoopSetup setup(config, kind, cal.signs);
    const SampleSet samples = sample_points(config, kind);

    const std::size_t n = static_cast<std::size_t>(config.samples);
    std::vector<std::vector<CheckRecord>> per_sample(n);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto worker = [&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          const SamplePoint point{samples.g[i], samples.a[i], samples.k[i]};
          per_sample[i] = SampleEvaluator(config, setup, i, point).run();
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(n)));
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    for (auto& recs : per_sample)
      for (auto& r : recs) report.records.push_back(std::move(r));
  }

  sort_records(report.records);
  return report;
}

}  // namespace moufang
