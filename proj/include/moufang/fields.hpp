#pragma once

// Coefficient algebra of vector fields X_x = x^j X^s_j(p) d/dp^s.
//
// A field family is stored as its coefficient matrix X (point dim x tangent
// dim) together with the derivatives dX[q] = dX/dp^q.  Rank-3 arrays use the
// index order (s, j, k): one upper point index, two lower tangent indices.

#include <array>
#include <vector>

#include <Eigen/Core>
#include <unsupported/Eigen/CXX11/Tensor>

namespace moufang {

using Tensor3 = Eigen::Tensor<double, 3>;

/// Coefficient matrix of a field family plus its point derivatives.
struct FieldJet {
  Eigen::MatrixXd coeffs;
  std::vector<Eigen::MatrixXd> derivs;
};

Tensor3 zero_tensor(Eigen::Index upper, Eigen::Index lower);

double max_abs(const Tensor3& t);
double max_abs(const Eigen::MatrixXd& m);

/// Largest |t(s,j,k) + t(s,k,j)|.
double antisymmetry_defect(const Tensor3& t);

/// B with [X_x, Y_y] = x^j y^k B^s_{jk} d_s, i.e.
/// B^s_{jk} = X^p_j dY^s_k/dp^p - Y^p_k dX^s_j/dp^p.
Tensor3 field_bracket(const FieldJet& x, const FieldJet& y);

/// Self-bracket coefficients in the secondary-function convention:
/// X^s_{jk} = X^p_k dX^s_j/dp^p - X^p_j dX^s_k/dp^p, so [X_x, X_y] = -x^j y^k X^s_{jk} d_s.
Tensor3 secondary(const FieldJet& x);

/// (C.X)^s_{jk} = C^m_{jk} X^s_m: coefficients of X_{[x,y]}.
Tensor3 apply_bracket(const Tensor3& c, const Eigen::MatrixXd& x);

/// out^mu_{jk} = sum_s m(mu, s) t^s_{jk}.
Tensor3 push_forward(const Eigen::MatrixXd& m, const Tensor3& t);

/// Residuals of the three generalized Maurer-Cartan equations for a pair of
/// field families (X, Y) standing for (L, R) or (S, T):
///   [X_x, X_y] = X_{[x,y]} - 2 [X_x, Y_y]
///   [Y_x, Y_y] = Y_{[y,x]} - 2 [Y_x, X_y]
///   [X_x, Y_y] = [Y_x, X_y]
/// `xy` and `yx` are field_bracket(X, Y) and field_bracket(Y, X).
std::array<Tensor3, 3> maurer_cartan_residuals(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y,
                                               const Tensor3& xx, const Tensor3& yy, const Tensor3& xy,
                                               const Tensor3& yx, const Tensor3& c);

/// Residuals of the Yamaguti decomposition of the three secondary arrays:
///   XX - 2Y - (tau/3) C(X + 2Y_)
///   YY - 2Y + (tau/3) C(2X + Y_)
///   ZZ - 2Y - (tau/3) C(X - Y_)
/// where Y_ is the second field family and Y the Yamaguti tensor.
std::array<Tensor3, 3> yamaguti_decomposition_residuals(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y,
                                                        const Tensor3& xx, const Tensor3& yy,
                                                        const Tensor3& zz, const Tensor3& yam,
                                                        const Tensor3& c, int tau);

/// Largest deviation of the summed decomposition right-hand sides from 6Y.
double decomposition_sum_gap(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y, const Tensor3& yam,
                             const Tensor3& c, int tau);

}  // namespace moufang
