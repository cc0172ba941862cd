#include "moufang/fields.hpp"

#include <algorithm>
#include <cmath>

namespace moufang {

using Eigen::Index;
using Eigen::MatrixXd;

Tensor3 zero_tensor(Index upper, Index lower) {
  Tensor3 t(upper, lower, lower);
  t.setZero();
  return t;
}

double max_abs(const Tensor3& t) {
  double m = 0.0;
  for (Index i = 0; i < t.size(); ++i) m = std::max(m, std::abs(t.data()[i]));
  return m;
}

double max_abs(const MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

double antisymmetry_defect(const Tensor3& t) {
  double m = 0.0;
  for (Index s = 0; s < t.dimension(0); ++s)
    for (Index j = 0; j < t.dimension(1); ++j)
      for (Index k = 0; k < t.dimension(2); ++k) m = std::max(m, std::abs(t(s, j, k) + t(s, k, j)));
  return m;
}

Tensor3 field_bracket(const FieldJet& x, const FieldJet& y) {
  const Index dim = x.coeffs.rows();
  const Index r = x.coeffs.cols();
  Tensor3 out = zero_tensor(dim, r);
  for (Index p = 0; p < dim; ++p) {
    const MatrixXd& dx = x.derivs[p];
    const MatrixXd& dy = y.derivs[p];
    for (Index j = 0; j < r; ++j)
      for (Index k = 0; k < r; ++k) {
        const double xp = x.coeffs(p, j);
        const double yp = y.coeffs(p, k);
        for (Index s = 0; s < dim; ++s) out(s, j, k) += xp * dy(s, k) - yp * dx(s, j);
      }
  }
  return out;
}

Tensor3 secondary(const FieldJet& x) {
  Tensor3 b = field_bracket(x, x);
  return -b;
}

Tensor3 apply_bracket(const Tensor3& c, const MatrixXd& x) {
  const Index dim = x.rows();
  const Index r = x.cols();
  Tensor3 out = zero_tensor(dim, r);
  for (Index m = 0; m < r; ++m)
    for (Index j = 0; j < r; ++j)
      for (Index k = 0; k < r; ++k) {
        const double cm = c(m, j, k);
        if (cm == 0.0) continue;
        for (Index s = 0; s < dim; ++s) out(s, j, k) += cm * x(s, m);
      }
  return out;
}

Tensor3 push_forward(const MatrixXd& m, const Tensor3& t) {
  const Index r = t.dimension(1);
  Tensor3 out = zero_tensor(m.rows(), r);
  for (Index s = 0; s < m.cols(); ++s)
    for (Index j = 0; j < r; ++j)
      for (Index k = 0; k < r; ++k) {
        const double ts = t(s, j, k);
        for (Index mu = 0; mu < m.rows(); ++mu) out(mu, j, k) += m(mu, s) * ts;
      }
  return out;
}

std::array<Tensor3, 3> maurer_cartan_residuals(const MatrixXd& x, const MatrixXd& y, const Tensor3& xx,
                                               const Tensor3& yy, const Tensor3& xy, const Tensor3& yx,
                                               const Tensor3& c) {
  // [X_x, X_y] has coefficients -xx; X_{[x,y]} has C.X; X_{[y,x]} has -C.X.
  const Tensor3 cx = apply_bracket(c, x);
  const Tensor3 cy = apply_bracket(c, y);
  Tensor3 first = -xx - cx + 2.0 * xy;
  Tensor3 second = -yy + cy + 2.0 * yx;
  Tensor3 third = xy - yx;
  return {std::move(first), std::move(second), std::move(third)};
}

std::array<Tensor3, 3> yamaguti_decomposition_residuals(const MatrixXd& x, const MatrixXd& y,
                                                        const Tensor3& xx, const Tensor3& yy,
                                                        const Tensor3& zz, const Tensor3& yam,
                                                        const Tensor3& c, int tau) {
  const double t3 = tau / 3.0;
  const MatrixXd a = x + 2.0 * y;
  const MatrixXd b = 2.0 * x + y;
  const MatrixXd d = x - y;
  Tensor3 first = xx - 2.0 * yam - t3 * apply_bracket(c, a);
  Tensor3 second = yy - 2.0 * yam + t3 * apply_bracket(c, b);
  Tensor3 third = zz - 2.0 * yam - t3 * apply_bracket(c, d);
  return {std::move(first), std::move(second), std::move(third)};
}

double decomposition_sum_gap(const MatrixXd& x, const MatrixXd& y, const Tensor3& yam, const Tensor3& c,
                             int tau) {
  const double t3 = tau / 3.0;
  const Tensor3 rhs_a = 2.0 * yam + t3 * apply_bracket(c, x + 2.0 * y);
  const Tensor3 rhs_b = 2.0 * yam - t3 * apply_bracket(c, 2.0 * x + y);
  const Tensor3 rhs_c = 2.0 * yam + t3 * apply_bracket(c, x - y);
  const Tensor3 gap = rhs_a + rhs_b + rhs_c - 6.0 * yam;
  return max_abs(gap);
}

}  // namespace moufang
