#pragma once

// Moufang transformations S_g A and T_g A on a representation space and the
// action-side auxiliary functions S, T, P.
//
// Check code only talks to ActionSpace, so further birepresentations can be
// added next to RegularAction without touching it.

#include <array>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "moufang/fields.hpp"
#include "moufang/jets.hpp"
#include "moufang/loops.hpp"

namespace moufang {

class ActionSpace {
 public:
  ActionSpace(std::shared_ptr<const LoopChart> loop, Eigen::Index dim) : loop_(std::move(loop)), dim_(dim) {}
  virtual ~ActionSpace() = default;

  const LoopChart& base_loop() const { return *loop_; }
  std::shared_ptr<const LoopChart> base_loop_ptr() const { return loop_; }
  Eigen::Index dim() const { return dim_; }
  virtual std::string name() const = 0;

  template <typename T>
  Vec<T> act_S(const Vec<T>& g, const Vec<T>& a) const {
    return transform_S(g, a);
  }
  template <typename T>
  Vec<T> act_T(const Vec<T>& g, const Vec<T>& a) const {
    return transform_T(g, a);
  }

 protected:
  virtual Vec<double> transform_S(const Vec<double>& g, const Vec<double>& a) const = 0;
  virtual Vec<Dual1> transform_S(const Vec<Dual1>& g, const Vec<Dual1>& a) const = 0;
  virtual Vec<Dual11> transform_S(const Vec<Dual11>& g, const Vec<Dual11>& a) const = 0;
  virtual Vec<Dual2> transform_S(const Vec<Dual2>& g, const Vec<Dual2>& a) const = 0;
  virtual Vec<double> transform_T(const Vec<double>& g, const Vec<double>& a) const = 0;
  virtual Vec<Dual1> transform_T(const Vec<Dual1>& g, const Vec<Dual1>& a) const = 0;
  virtual Vec<Dual11> transform_T(const Vec<Dual11>& g, const Vec<Dual11>& a) const = 0;
  virtual Vec<Dual2> transform_T(const Vec<Dual2>& g, const Vec<Dual2>& a) const = 0;

 private:
  std::shared_ptr<const LoopChart> loop_;
  Eigen::Index dim_;
};

// Forwards every scalar overload to Derived::apply_S<T> / apply_T<T>.
template <typename Derived>
class ActionSpaceImpl : public ActionSpace {
 public:
  using ActionSpace::ActionSpace;

 protected:
  Vec<double> transform_S(const Vec<double>& g, const Vec<double>& a) const override { return self().apply_S(g, a); }
  Vec<Dual1> transform_S(const Vec<Dual1>& g, const Vec<Dual1>& a) const override { return self().apply_S(g, a); }
  Vec<Dual11> transform_S(const Vec<Dual11>& g, const Vec<Dual11>& a) const override { return self().apply_S(g, a); }
  Vec<Dual2> transform_S(const Vec<Dual2>& g, const Vec<Dual2>& a) const override { return self().apply_S(g, a); }
  Vec<double> transform_T(const Vec<double>& g, const Vec<double>& a) const override { return self().apply_T(g, a); }
  Vec<Dual1> transform_T(const Vec<Dual1>& g, const Vec<Dual1>& a) const override { return self().apply_T(g, a); }
  Vec<Dual11> transform_T(const Vec<Dual11>& g, const Vec<Dual11>& a) const override { return self().apply_T(g, a); }
  Vec<Dual2> transform_T(const Vec<Dual2>& g, const Vec<Dual2>& a) const override { return self().apply_T(g, a); }

 private:
  const Derived& self() const { return static_cast<const Derived&>(*this); }
};

/// The loop acting on itself: S_g A = g A, T_g A = A g.
class RegularAction final : public ActionSpaceImpl<RegularAction> {
 public:
  explicit RegularAction(std::shared_ptr<const LoopChart> loop)
      : ActionSpaceImpl(loop, loop->dim()) {}
  std::string name() const override { return "regular(" + base_loop().name() + ")"; }

  template <typename T>
  Vec<T> apply_S(const Vec<T>& g, const Vec<T>& a) const {
    return base_loop().multiply(g, a);
  }
  template <typename T>
  Vec<T> apply_T(const Vec<T>& g, const Vec<T>& a) const {
    return base_loop().multiply(a, g);
  }
};

struct ActionAuxFrame {
  Eigen::MatrixXd S;
  Eigen::MatrixXd T;
  Eigen::MatrixXd P;
};

struct ActionAuxJet {
  FieldJet S;
  FieldJet T;
  FieldJet P;
  ActionAuxFrame frame() const { return {S.coeffs, T.coeffs, P.coeffs}; }
};

struct ActionSecondaryFrame {
  Tensor3 S2;
  Tensor3 T2;
  Tensor3 P2;
  Tensor3 st;  // [S_x, T_y]
  Tensor3 ts;  // [T_x, S_y]
};

struct YamagutiTensorX {
  Tensor3 y;
};

/// Value and the two Jacobian blocks of a transformation at (g, A).
struct TransformJet {
  Eigen::VectorXd value;
  Eigen::MatrixXd d_g;  // dim(X) x dim(G)
  Eigen::MatrixXd d_a;  // dim(X) x dim(X)
};

Eigen::VectorXd act_S(const ActionSpace& space, const Eigen::VectorXd& g, const Eigen::VectorXd& a);
Eigen::VectorXd act_T(const ActionSpace& space, const Eigen::VectorXd& g, const Eigen::VectorXd& a);

TransformJet transform_jet_S(const ActionSpace& space, const Eigen::VectorXd& g, const Eigen::VectorXd& a);
TransformJet transform_jet_T(const ActionSpace& space, const Eigen::VectorXd& g, const Eigen::VectorXd& a);

ActionAuxJet action_aux_jet(const ActionSpace& space, const Eigen::VectorXd& a);
ActionAuxFrame action_aux(const ActionSpace& space, const Eigen::VectorXd& a);

/// Coefficients of P_x recomputed from the composite S_g T_g A.
Eigen::MatrixXd composite_generator(const ActionSpace& space, const Eigen::VectorXd& a);

ActionSecondaryFrame action_secondary(const ActionAuxJet& jet);
ActionSecondaryFrame action_secondary(const ActionSpace& space, const Eigen::VectorXd& a);

YamagutiTensorX yamaguti_x(const ActionSecondaryFrame& sf);
YamagutiTensorX yamaguti_x(const ActionSpace& space, const Eigen::VectorXd& a);

/// mc.7a, mc.7b, mc.7c.
std::vector<IdentityResidual> check_action_mc(const ActionSpace& space, const StructureConstants& c,
                                              const Eigen::VectorXd& a);
/// lemma2.9a, lemma2.9b, lemma2.9c.
std::vector<IdentityResidual> check_lemma2(const ActionSpace& space, const StructureConstants& c, int tau,
                                           const Eigen::VectorXd& a);

/// Residual matrices (dim(X) x dim(G), column j per generator) of the GLE for S_g A.
std::array<Eigen::MatrixXd, 3> gle_residual_S(const ActionSpace& space, const Eigen::VectorXd& g,
                                              const Eigen::VectorXd& a);
/// Same for T_g A.
std::array<Eigen::MatrixXd, 3> gle_residual_T(const ActionSpace& space, const Eigen::VectorXd& g,
                                              const Eigen::VectorXd& a);

/// GLE residuals from precomputed pieces: `at_image` is the action frame at the
/// transformed point.
std::array<Eigen::MatrixXd, 3> gle_residual_S(const AuxFrame& loop_frame, const ActionAuxFrame& at_a,
                                              const ActionAuxFrame& at_image, const TransformJet& jet);
std::array<Eigen::MatrixXd, 3> gle_residual_T(const AuxFrame& loop_frame, const ActionAuxFrame& at_a,
                                              const ActionAuxFrame& at_image, const TransformJet& jet);

}  // namespace moufang
