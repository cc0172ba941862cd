#pragma once

// Integrability conditions of the generalized Lie equations: the Yamagutian
// transport identities for S_g A and T_g A, the intermediate identities
// obtained from each GLE, and the factor-of-two equivalence between them.

#include <array>
#include <vector>

#include <Eigen/Core>

#include "moufang/actions.hpp"
#include "moufang/fields.hpp"
#include "moufang/loops.hpp"

namespace moufang {

/// Frames, secondary frames and Yamaguti tensors at one action-space point.
struct ActionPointData {
  ActionAuxJet aux;
  ActionSecondaryFrame secondary;
  YamagutiTensorX yamaguti;
};

ActionPointData action_point_data(const ActionSpace& space, const Eigen::VectorXd& a);

/// Everything the pair checks need at (g, A), computed once.
struct PairContext {
  Eigen::VectorXd g;
  Eigen::VectorXd a;
  AuxJet loop_aux;
  SecondaryFrame loop_secondary;
  YamagutiTensorG loop_yamaguti;
  ActionPointData at_a;
  TransformJet jet_S;
  TransformJet jet_T;
  ActionPointData at_S;  // at S_g A
  ActionPointData at_T;  // at T_g A
};

PairContext evaluate_pair(const ActionSpace& space, const Eigen::VectorXd& g, const Eigen::VectorXd& a);

struct IntegrabilityRecord {
  Eigen::VectorXd g;
  Eigen::VectorXd a;
  Tensor3 residual_yam_S;
  Tensor3 residual_yam_T;
  std::array<Tensor3, 3> intermediates_S;  // from the GLE for S with (v,P,T), (u,T,P), (w,S,S)
  std::array<Tensor3, 3> intermediates_T;  // from the GLE for T with (u,P,S), (v,S,P), (w,T,T)
  std::array<double, 3> equivalence_gap_S{};
  std::array<double, 3> equivalence_gap_T{};
  double sum_gap_S = 0.0;  // |sum of intermediates - 6 x Yamagutian residual|
  double sum_gap_T = 0.0;
};

Tensor3 integrability_residual_S(const PairContext& ctx);
Tensor3 integrability_residual_T(const PairContext& ctx);
Tensor3 integrability_residual_S(const ActionSpace& space, const Eigen::VectorXd& g, const Eigen::VectorXd& a);
Tensor3 integrability_residual_T(const ActionSpace& space, const Eigen::VectorXd& g, const Eigen::VectorXd& a);

std::array<Tensor3, 3> intermediate_residuals_S(const PairContext& ctx);
std::array<Tensor3, 3> intermediate_residuals_T(const PairContext& ctx);
std::array<Tensor3, 3> intermediate_residuals_S(const ActionSpace& space, const Eigen::VectorXd& g,
                                                const Eigen::VectorXd& a);
std::array<Tensor3, 3> intermediate_residuals_T(const ActionSpace& space, const Eigen::VectorXd& g,
                                                const Eigen::VectorXd& a);

IntegrabilityRecord integrability_record(const PairContext& ctx);

/// Per intermediate: max |intermediate - 2 x Yamagutian residual|, S side then T side.
struct EquivalenceGaps {
  std::array<double, 3> S{};
  std::array<double, 3> T{};
};
EquivalenceGaps equivalence_check(const ActionSpace& space, const Eigen::VectorXd& g, const Eigen::VectorXd& a);

/// mixed.S, mixed.T: largest asymmetry of the second-derivative blocks of the
/// transformations over (g, A).
std::vector<IdentityResidual> mixed_partials_check(const ActionSpace& space, const Eigen::VectorXd& g,
                                                   const Eigen::VectorXd& a);

}  // namespace moufang
