#include "moufang/integrability.hpp"

#include <algorithm>

namespace moufang {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

ActionPointData action_point_data(const ActionSpace& space, const VectorXd& a) {
  ActionPointData d;
  d.aux = action_aux_jet(space, a);
  d.secondary = action_secondary(d.aux);
  d.yamaguti = yamaguti_x(d.secondary);
  return d;
}

PairContext evaluate_pair(const ActionSpace& space, const VectorXd& g, const VectorXd& a) {
  PairContext ctx;
  ctx.g = g;
  ctx.a = a;
  ctx.loop_aux = aux_jet(space.base_loop(), g);
  ctx.loop_secondary = secondary_frame(ctx.loop_aux);
  ctx.loop_yamaguti = yamaguti_g(ctx.loop_secondary);
  ctx.at_a = action_point_data(space, a);
  ctx.jet_S = transform_jet_S(space, g, a);
  ctx.jet_T = transform_jet_T(space, g, a);
  ctx.at_S = action_point_data(space, ctx.jet_S.value);
  ctx.at_T = action_point_data(space, ctx.jet_T.value);
  return ctx;
}

namespace {

// Transport residual  X(g).dF/dg + Z(A).dF/dA - W(F(g, A)).
Tensor3 transport(const TransformJet& jet, const Tensor3& at_g, const Tensor3& at_a, const Tensor3& at_image) {
  Tensor3 out = push_forward(jet.d_g, at_g) + push_forward(jet.d_a, at_a) - at_image;
  return out;
}

}  // namespace

Tensor3 integrability_residual_S(const PairContext& ctx) {
  return transport(ctx.jet_S, ctx.loop_yamaguti.y, ctx.at_a.yamaguti.y, ctx.at_S.yamaguti.y);
}

Tensor3 integrability_residual_T(const PairContext& ctx) {
  return transport(ctx.jet_T, ctx.loop_yamaguti.y, ctx.at_a.yamaguti.y, ctx.at_T.yamaguti.y);
}

std::array<Tensor3, 3> intermediate_residuals_S(const PairContext& ctx) {
  const SecondaryFrame& lf = ctx.loop_secondary;
  const ActionSecondaryFrame& sa = ctx.at_a.secondary;
  const ActionSecondaryFrame& si = ctx.at_S.secondary;
  return {transport(ctx.jet_S, lf.v2, sa.P2, si.T2),  //
          transport(ctx.jet_S, lf.u2, sa.T2, si.P2),  //
          transport(ctx.jet_S, lf.w2, sa.S2, si.S2)};
}

std::array<Tensor3, 3> intermediate_residuals_T(const PairContext& ctx) {
  const SecondaryFrame& lf = ctx.loop_secondary;
  const ActionSecondaryFrame& sa = ctx.at_a.secondary;
  const ActionSecondaryFrame& si = ctx.at_T.secondary;
  return {transport(ctx.jet_T, lf.u2, sa.P2, si.S2),  //
          transport(ctx.jet_T, lf.v2, sa.S2, si.P2),  //
          transport(ctx.jet_T, lf.w2, sa.T2, si.T2)};
}

Tensor3 integrability_residual_S(const ActionSpace& space, const VectorXd& g, const VectorXd& a) {
  return integrability_residual_S(evaluate_pair(space, g, a));
}

Tensor3 integrability_residual_T(const ActionSpace& space, const VectorXd& g, const VectorXd& a) {
  return integrability_residual_T(evaluate_pair(space, g, a));
}

std::array<Tensor3, 3> intermediate_residuals_S(const ActionSpace& space, const VectorXd& g, const VectorXd& a) {
  return intermediate_residuals_S(evaluate_pair(space, g, a));
}

std::array<Tensor3, 3> intermediate_residuals_T(const ActionSpace& space, const VectorXd& g, const VectorXd& a) {
  return intermediate_residuals_T(evaluate_pair(space, g, a));
}

IntegrabilityRecord integrability_record(const PairContext& ctx) {
  IntegrabilityRecord rec;
  rec.g = ctx.g;
  rec.a = ctx.a;
  rec.residual_yam_S = integrability_residual_S(ctx);
  rec.residual_yam_T = integrability_residual_T(ctx);
  rec.intermediates_S = intermediate_residuals_S(ctx);
  rec.intermediates_T = intermediate_residuals_T(ctx);

  const auto gaps = [](const std::array<Tensor3, 3>& inter, const Tensor3& yam, std::array<double, 3>& out) {
    for (std::size_t i = 0; i < 3; ++i) {
      const Tensor3 gap = inter[i] - 2.0 * yam;
      out[i] = max_abs(gap);
    }
    const Tensor3 sum = inter[0] + inter[1] + inter[2] - 6.0 * yam;
    return max_abs(sum);
  };
  rec.sum_gap_S = gaps(rec.intermediates_S, rec.residual_yam_S, rec.equivalence_gap_S);
  rec.sum_gap_T = gaps(rec.intermediates_T, rec.residual_yam_T, rec.equivalence_gap_T);
  return rec;
}

EquivalenceGaps equivalence_check(const ActionSpace& space, const VectorXd& g, const VectorXd& a) {
  const IntegrabilityRecord rec = integrability_record(evaluate_pair(space, g, a));
  return {rec.equivalence_gap_S, rec.equivalence_gap_T};
}

namespace {

double hessian_asymmetry(const JetResult& jr) {
  double worst = 0.0;
  for (const MatrixXd& h : jr.hessians) worst = std::max(worst, max_abs(MatrixXd(h - h.transpose())));
  return worst;
}

}  // namespace

std::vector<IdentityResidual> mixed_partials_check(const ActionSpace& space, const VectorXd& g, const VectorXd& a) {
  const Index r = g.size();
  const Index n = a.size();
  VectorXd at(r + n);
  at << g, a;
  const auto s_map = [&](const auto& z) {
    using V = std::decay_t<decltype(z)>;
    using T = typename V::Scalar;
    return V(space.act_S<T>(z.head(r), z.tail(n)));
  };
  const auto t_map = [&](const auto& z) {
    using V = std::decay_t<decltype(z)>;
    using T = typename V::Scalar;
    return V(space.act_T<T>(z.head(r), z.tail(n)));
  };
  return {{"mixed.S", hessian_asymmetry(jet2(s_map, at))}, {"mixed.T", hessian_asymmetry(jet2(t_map, at))}};
}

}  // namespace moufang
