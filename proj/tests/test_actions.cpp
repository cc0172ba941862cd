#include "common.hpp"
#include "doctest.h"
#include "moufang/actions.hpp"
#include "oracles.hpp"

using namespace moufang;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

// G acting diagonally on G x G: S_g (A, B) = (gA, gB), T_g (A, B) = (Ag, Bg).
class DiagonalAction final : public ActionSpaceImpl<DiagonalAction> {
 public:
  explicit DiagonalAction(std::shared_ptr<const LoopChart> loop) : ActionSpaceImpl(loop, 2 * loop->dim()) {}
  std::string name() const override { return "diagonal"; }

  template <typename T>
  Vec<T> apply_S(const Vec<T>& g, const Vec<T>& a) const {
    return stack(base_loop().multiply<T>(g, a.head(half())), base_loop().multiply<T>(g, a.tail(half())));
  }
  template <typename T>
  Vec<T> apply_T(const Vec<T>& g, const Vec<T>& a) const {
    return stack(base_loop().multiply<T>(a.head(half()), g), base_loop().multiply<T>(a.tail(half()), g));
  }

 private:
  Index half() const { return base_loop().dim(); }
  template <typename T>
  static Vec<T> stack(const Vec<T>& x, const Vec<T>& y) {
    Vec<T> out(x.size() + y.size());
    out << x, y;
    return out;
  }
};

const std::vector<LoopKind> kAll{LoopKind::abelian, LoopKind::quaternion, LoopKind::octonion};

double max3(const std::array<MatrixXd, 3>& m) {
  return std::max({testutil::max_abs(m[0]), testutil::max_abs(m[1]), testutil::max_abs(m[2])});
}

}  // namespace

TEST_CASE("regular action reproduces the loop frames") {
  for (LoopKind kind : kAll) {
    const auto loop = make_loop(kind, 3);
    const RegularAction space(loop);
    CHECK(space.dim() == loop->dim());
    for (const VectorXd& a : testutil::ball_points(loop->dim(), 10, 0.3, 31)) {
      const ActionAuxFrame af = action_aux(space, a);
      const AuxFrame lf = aux_frame(*loop, a);
      CHECK(testutil::max_abs(af.S - lf.u) <= 1e-12);
      CHECK(testutil::max_abs(af.T - lf.v) <= 1e-12);
      CHECK(testutil::max_abs(af.P - lf.w) <= 1e-12);
      CHECK(testutil::max_abs(af.S + af.T + af.P) == 0.0);
      CHECK(testutil::max_abs(af.P - composite_generator(space, a)) <= 1e-14);

      const ActionSecondaryFrame as = action_secondary(space, a);
      const SecondaryFrame ls = secondary_frame(*loop, a);
      CHECK(oracle::max_abs_diff(as.S2, ls.u2) <= 1e-12);
      CHECK(oracle::max_abs_diff(as.T2, ls.v2) <= 1e-12);
      CHECK(oracle::max_abs_diff(as.st, ls.lr) <= 1e-12);
      CHECK(oracle::max_abs_diff(yamaguti_x(as).y, yamaguti_g(ls).y) <= 1e-12);
    }
  }
}

TEST_CASE("transform values and jacobians") {
  const auto loop = make_loop(LoopKind::octonion);
  const RegularAction space(loop);
  const auto gs = testutil::ball_points(7, 10, 0.3, 32);
  const auto as = testutil::ball_points(7, 10, 0.3, 33);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    CHECK(act_S(space, gs[i], as[i]) == multiply(*loop, gs[i], as[i]));
    CHECK(act_T(space, gs[i], as[i]) == multiply(*loop, as[i], gs[i]));
    const TransformJet j = transform_jet_S(space, gs[i], as[i]);
    const auto by_g = [&](const VectorXd& g) { return oracle::cd_chart_multiply(g, as[i]); };
    const auto by_a = [&](const VectorXd& a) { return oracle::cd_chart_multiply(gs[i], a); };
    CHECK(testutil::max_abs(j.d_g - oracle::fd8_jacobian(by_g, gs[i], 1e-3)) <= 1e-11);
    CHECK(testutil::max_abs(j.d_a - oracle::fd8_jacobian(by_a, as[i], 1e-3)) <= 1e-11);
  }
}

TEST_CASE("action Maurer-Cartan equations, decomposition and generalized Lie equations") {
  for (LoopKind kind : kAll) {
    const auto loop = make_loop(kind, 3);
    const RegularAction space(loop);
    const StructureConstants c = structure_constants(*loop, -1);
    const auto gs = testutil::ball_points(loop->dim(), 50, 0.3, 34);
    const auto as = testutil::ball_points(loop->dim(), 50, 0.3, 35);
    for (std::size_t i = 0; i < gs.size(); ++i) {
      for (const IdentityResidual& r : check_action_mc(space, c, as[i])) CHECK(r.residual <= 1e-9);
      for (const IdentityResidual& r : check_lemma2(space, c, -1, as[i])) CHECK(r.residual <= 1e-9);
      CHECK(max3(gle_residual_S(space, gs[i], as[i])) <= 1e-9);
      CHECK(max3(gle_residual_T(space, gs[i], as[i])) <= 1e-9);
    }
  }
}

TEST_CASE("generalized Lie equations from an independent finite-difference computation") {
  const auto left = [](const VectorXd& a, const VectorXd& p) { return oracle::cd_chart_multiply(a, p); };
  const auto right = [](const VectorXd& a, const VectorXd& p) { return oracle::cd_chart_multiply(p, a); };
  const auto S = [&](const VectorXd& p) { return oracle::fd_generator(left, 7, p, 1e-3); };
  const auto T = [&](const VectorXd& p) { return oracle::fd_generator(right, 7, p, 1e-3); };
  const auto P = [&](const VectorXd& p) { return MatrixXd(-(S(p) + T(p))); };
  const auto gs = testutil::ball_points(7, 5, 0.3, 36);
  const auto as = testutil::ball_points(7, 5, 0.3, 37);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    const VectorXd &g = gs[i], &a = as[i];
    const VectorXd image = oracle::cd_chart_multiply(g, a);
    const MatrixXd d_g = oracle::fd8_jacobian([&](const VectorXd& x) { return oracle::cd_chart_multiply(x, a); }, g, 1e-3);
    const MatrixXd d_a = oracle::fd8_jacobian([&](const VectorXd& x) { return oracle::cd_chart_multiply(g, x); }, a, 1e-3);
    const MatrixXd u = S(g), v = T(g), w = P(g);
    CHECK(testutil::max_abs(d_g * u + d_a * T(a) + P(image)) <= 1e-9);
    CHECK(testutil::max_abs(d_g * v + d_a * P(a) + T(image)) <= 1e-9);
    CHECK(testutil::max_abs(d_g * w + d_a * S(a) + S(image)) <= 1e-9);
  }
}

TEST_CASE("generalized Lie equations at g = e reduce to the constraint") {
  for (LoopKind kind : kAll) {
    const auto loop = make_loop(kind, 3);
    const RegularAction space(loop);
    for (const VectorXd& a : testutil::ball_points(loop->dim(), 10, 0.3, 38)) {
      CHECK(max3(gle_residual_S(space, loop->identity(), a)) <= 1e-15);
      CHECK(max3(gle_residual_T(space, loop->identity(), a)) <= 1e-15);
    }
  }
}

TEST_CASE("a non-regular action through the abstract interface") {
  for (LoopKind kind : {LoopKind::quaternion, LoopKind::octonion}) {
    const auto loop = make_loop(kind);
    const DiagonalAction space(loop);
    const StructureConstants c = structure_constants(*loop, -1);
    const auto gs = testutil::ball_points(loop->dim(), 10, 0.3, 39);
    const auto as = testutil::ball_points(space.dim(), 10, 0.3, 40);
    for (std::size_t i = 0; i < gs.size(); ++i) {
      const ActionAuxFrame af = action_aux(space, as[i]);
      CHECK(af.S.rows() == space.dim());
      CHECK(af.S.cols() == loop->dim());
      for (const IdentityResidual& r : check_action_mc(space, c, as[i])) CHECK(r.residual <= 1e-9);
      for (const IdentityResidual& r : check_lemma2(space, c, -1, as[i])) CHECK(r.residual <= 1e-9);
      CHECK(max3(gle_residual_S(space, gs[i], as[i])) <= 1e-9);
      CHECK(max3(gle_residual_T(space, gs[i], as[i])) <= 1e-9);
    }
  }
}
