#include "moufang/actions.hpp"

namespace moufang {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

VectorXd act_S(const ActionSpace& space, const VectorXd& g, const VectorXd& a) {
  return space.act_S<double>(g, a);
}

VectorXd act_T(const ActionSpace& space, const VectorXd& g, const VectorXd& a) {
  return space.act_T<double>(g, a);
}

namespace {

enum class Side { S, T };

template <typename T>
Vec<T> transform(const ActionSpace& space, Side side, const Vec<T>& g, const Vec<T>& a) {
  return side == Side::S ? space.act_S(g, a) : space.act_T(g, a);
}

TransformJet transform_jet(const ActionSpace& space, Side side, const VectorXd& g, const VectorXd& a) {
  const Index r = g.size();
  const Index n = a.size();
  VectorXd at(r + n);
  at << g, a;
  const auto map = [&](const auto& z) {
    using V = std::decay_t<decltype(z)>;
    using T = typename V::Scalar;
    return V(transform<T>(space, side, z.head(r), z.tail(n)));
  };
  const JetResult jr = jet1(map, at);
  return {jr.value, jr.jacobian.leftCols(r), jr.jacobian.rightCols(n)};
}

FieldJet generator_jet(const ActionSpace& space, Side side, const VectorXd& a) {
  const NestedJet nj = nested_jet(
      [&](const Vec<Dual11>& x, const Vec<Dual11>& g) { return transform<Dual11>(space, side, g, x); }, a,
      space.base_loop().identity());
  return {nj.inner, nj.mixed};
}

}  // namespace

TransformJet transform_jet_S(const ActionSpace& space, const VectorXd& g, const VectorXd& a) {
  return transform_jet(space, Side::S, g, a);
}

TransformJet transform_jet_T(const ActionSpace& space, const VectorXd& g, const VectorXd& a) {
  return transform_jet(space, Side::T, g, a);
}

ActionAuxJet action_aux_jet(const ActionSpace& space, const VectorXd& a) {
  ActionAuxJet jet{generator_jet(space, Side::S, a), generator_jet(space, Side::T, a), {}};
  jet.P.coeffs = -(jet.S.coeffs + jet.T.coeffs);
  jet.P.derivs.reserve(jet.S.derivs.size());
  for (std::size_t p = 0; p < jet.S.derivs.size(); ++p) jet.P.derivs.push_back(-(jet.S.derivs[p] + jet.T.derivs[p]));
  return jet;
}

ActionAuxFrame action_aux(const ActionSpace& space, const VectorXd& a) { return action_aux_jet(space, a).frame(); }

MatrixXd composite_generator(const ActionSpace& space, const VectorXd& a) {
  const auto composite = [&](const auto& g) {
    using V = std::decay_t<decltype(g)>;
    using T = typename V::Scalar;
    const Vec<T> at = a.cast<T>();
    return V(space.act_S<T>(g, space.act_T<T>(g, at)));
  };
  return -jet1(composite, space.base_loop().identity()).jacobian;
}

ActionSecondaryFrame action_secondary(const ActionAuxJet& jet) {
  return {secondary(jet.S), secondary(jet.T), secondary(jet.P), field_bracket(jet.S, jet.T),
          field_bracket(jet.T, jet.S)};
}

ActionSecondaryFrame action_secondary(const ActionSpace& space, const VectorXd& a) {
  return action_secondary(action_aux_jet(space, a));
}

YamagutiTensorX yamaguti_x(const ActionSecondaryFrame& sf) {
  Tensor3 y = (sf.S2 + sf.T2 + sf.P2) / 6.0;
  return {std::move(y)};
}

YamagutiTensorX yamaguti_x(const ActionSpace& space, const VectorXd& a) {
  return yamaguti_x(action_secondary(space, a));
}

std::vector<IdentityResidual> check_action_mc(const ActionSpace& space, const StructureConstants& c,
                                              const VectorXd& a) {
  const ActionAuxJet jet = action_aux_jet(space, a);
  const ActionSecondaryFrame sf = action_secondary(jet);
  const auto res = maurer_cartan_residuals(jet.S.coeffs, jet.T.coeffs, sf.S2, sf.T2, sf.st, sf.ts, c.c);
  return {{"mc.7a", max_abs(res[0])}, {"mc.7b", max_abs(res[1])}, {"mc.7c", max_abs(res[2])}};
}

std::vector<IdentityResidual> check_lemma2(const ActionSpace& space, const StructureConstants& c, int tau,
                                           const VectorXd& a) {
  const ActionAuxJet jet = action_aux_jet(space, a);
  const ActionSecondaryFrame sf = action_secondary(jet);
  const YamagutiTensorX y = yamaguti_x(sf);
  const auto res =
      yamaguti_decomposition_residuals(jet.S.coeffs, jet.T.coeffs, sf.S2, sf.T2, sf.P2, y.y, c.c, tau);
  return {{"lemma2.9a", max_abs(res[0])}, {"lemma2.9b", max_abs(res[1])}, {"lemma2.9c", max_abs(res[2])}};
}

std::array<MatrixXd, 3> gle_residual_S(const AuxFrame& lf, const ActionAuxFrame& at_a,
                                       const ActionAuxFrame& at_image, const TransformJet& jet) {
  return {jet.d_g * lf.u + jet.d_a * at_a.T + at_image.P,  //
          jet.d_g * lf.v + jet.d_a * at_a.P + at_image.T,  //
          jet.d_g * lf.w + jet.d_a * at_a.S + at_image.S};
}

std::array<MatrixXd, 3> gle_residual_T(const AuxFrame& lf, const ActionAuxFrame& at_a,
                                       const ActionAuxFrame& at_image, const TransformJet& jet) {
  return {jet.d_g * lf.v + jet.d_a * at_a.S + at_image.P,  //
          jet.d_g * lf.u + jet.d_a * at_a.P + at_image.S,  //
          jet.d_g * lf.w + jet.d_a * at_a.T + at_image.T};
}

std::array<MatrixXd, 3> gle_residual_S(const ActionSpace& space, const VectorXd& g, const VectorXd& a) {
  const TransformJet jet = transform_jet_S(space, g, a);
  return gle_residual_S(aux_frame(space.base_loop(), g), action_aux(space, a), action_aux(space, jet.value), jet);
}

std::array<MatrixXd, 3> gle_residual_T(const ActionSpace& space, const VectorXd& g, const VectorXd& a) {
  const TransformJet jet = transform_jet_T(space, g, a);
  return gle_residual_T(aux_frame(space.base_loop(), g), action_aux(space, a), action_aux(space, jet.value), jet);
}

}  // namespace moufang
