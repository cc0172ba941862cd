#pragma once

// Test-only oracles.  Nothing here calls into the library's derivative or
// multiplication code paths.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>
#include <unsupported/Eigen/CXX11/Tensor>

namespace oracle {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using Tensor3 = Eigen::Tensor<double, 3>;

using VecMap = std::function<VectorXd(const VectorXd&)>;

// Cayley-Dickson doubling: (a, b)(c, d) = (ac - d* b, d a + b c*).
inline VectorXd conj(const VectorXd& x) {
  VectorXd out = -x;
  out[0] = x[0];
  return out;
}

inline VectorXd cd_multiply(const VectorXd& x, const VectorXd& y) {
  const Index n = x.size();
  if (n == 1) return VectorXd::Constant(1, x[0] * y[0]);
  const Index h = n / 2;
  const VectorXd a = x.head(h), b = x.tail(h), c = y.head(h), d = y.tail(h);
  VectorXd out(n);
  out << cd_multiply(a, c) - cd_multiply(conj(d), b), cd_multiply(d, a) + cd_multiply(b, conj(c));
  return out;
}

inline VectorXd unit_lift(const VectorXd& g) {
  VectorXd out(g.size() + 1);
  out << std::sqrt(1.0 - g.squaredNorm()), g;
  return out;
}

/// Chart product on the unit sphere of the 2^k-dimensional Cayley-Dickson algebra.
inline VectorXd cd_chart_multiply(const VectorXd& g, const VectorXd& h) {
  const VectorXd p = cd_multiply(unit_lift(g), unit_lift(h));
  return p.tail(p.size() - 1);
}

/// Basis product table of imaginary units: f(s, j, k) = (e_j e_k)_s, s,j,k >= 1 (shifted to 0-based).
inline Tensor3 imaginary_table(Index algebra_dim) {
  const Index r = algebra_dim - 1;
  Tensor3 f(r, r, r);
  f.setZero();
  for (Index j = 0; j < r; ++j)
    for (Index k = 0; k < r; ++k) {
      const VectorXd p = cd_multiply(VectorXd::Unit(algebra_dim, j + 1), VectorXd::Unit(algebra_dim, k + 1));
      for (Index s = 0; s < r; ++s) f(s, j, k) = p[s + 1];
    }
  return f;
}

/// Eighth-order central-difference Jacobian.
inline MatrixXd fd8_jacobian(const VecMap& f, const VectorXd& at, double h) {
  static constexpr double w[4] = {4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0};
  const VectorXd f0 = f(at);
  MatrixXd jac = MatrixXd::Zero(f0.size(), at.size());
  for (Index j = 0; j < at.size(); ++j)
    for (int m = 1; m <= 4; ++m) {
      VectorXd hi = at, lo = at;
      hi[j] += m * h;
      lo[j] -= m * h;
      jac.col(j) += w[m - 1] * (f(hi) - f(lo)) / h;
    }
  return jac;
}

/// Central second differences; hessians[i](j, k) = d2 f^i / dx^j dx^k.
inline std::vector<MatrixXd> fd_hessians(const VecMap& f, const VectorXd& at, double h) {
  const Index n = at.size();
  const Index m = f(at).size();
  std::vector<MatrixXd> out(m, MatrixXd::Zero(n, n));
  for (Index j = 0; j < n; ++j)
    for (Index k = 0; k < n; ++k) {
      const auto eval = [&](double sj, double sk) {
        VectorXd x = at;
        x[j] += sj * h;
        x[k] += sk * h;
        return f(x);
      };
      const VectorXd d = (eval(1, 1) - eval(1, -1) - eval(-1, 1) + eval(-1, -1)) / (4 * h * h);
      for (Index i = 0; i < m; ++i) out[i](j, k) = d[i];
    }
  return out;
}

/// Generator coefficients X(p) = d/dt translate(t e_j, p) at t = 0 and their
/// point derivatives, both by eighth-order differences.
struct FdFrame {
  MatrixXd coeffs;
  std::vector<MatrixXd> derivs;
};

using Translation = std::function<VectorXd(const VectorXd& a, const VectorXd& p)>;

inline MatrixXd fd_generator(const Translation& tr, Index tangent_dim, const VectorXd& p, double h) {
  return fd8_jacobian([&](const VectorXd& a) { return tr(a, p); }, VectorXd::Zero(tangent_dim), h);
}

inline FdFrame fd_frame(const Translation& tr, Index tangent_dim, const VectorXd& p, double h = 2e-3) {
  FdFrame fr;
  fr.coeffs = fd_generator(tr, tangent_dim, p, h);
  const VecMap flat = [&](const VectorXd& q) {
    const MatrixXd m = fd_generator(tr, tangent_dim, q, h);
    return VectorXd(Eigen::Map<const VectorXd>(m.data(), m.size()));
  };
  const MatrixXd d = fd8_jacobian(flat, p, h);
  for (Index q = 0; q < p.size(); ++q)
    fr.derivs.emplace_back(Eigen::Map<const MatrixXd>(d.col(q).data(), fr.coeffs.rows(), fr.coeffs.cols()));
  return fr;
}

/// X^s_{jk} = X^p_k dX^s_j/dp^p - X^p_j dX^s_k/dp^p.
inline Tensor3 self_bracket(const FdFrame& x) {
  const Index dim = x.coeffs.rows(), r = x.coeffs.cols();
  Tensor3 t(dim, r, r);
  t.setZero();
  for (Index s = 0; s < dim; ++s)
    for (Index j = 0; j < r; ++j)
      for (Index k = 0; k < r; ++k)
        for (Index p = 0; p < dim; ++p) t(s, j, k) += x.coeffs(p, k) * x.derivs[p](s, j) - x.coeffs(p, j) * x.derivs[p](s, k);
  return t;
}

/// [X_x, Y_y] coefficients: X^p_j dY^s_k/dp^p - Y^p_k dX^s_j/dp^p.
inline Tensor3 cross_bracket(const FdFrame& x, const FdFrame& y) {
  const Index dim = x.coeffs.rows(), r = x.coeffs.cols();
  Tensor3 t(dim, r, r);
  t.setZero();
  for (Index s = 0; s < dim; ++s)
    for (Index j = 0; j < r; ++j)
      for (Index k = 0; k < r; ++k)
        for (Index p = 0; p < dim; ++p) t(s, j, k) += x.coeffs(p, j) * y.derivs[p](s, k) - y.coeffs(p, k) * x.derivs[p](s, j);
  return t;
}

inline double max_abs_diff(const Tensor3& a, const Tensor3& b) {
  double m = 0.0;
  for (Index i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

inline double max_abs(const Tensor3& a) {
  double m = 0.0;
  for (Index i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.data()[i]));
  return m;
}

/// Yamaguti tensor from finite differences, with M taken from the two-sided
/// translation a (p a) rather than from -(L + R).
struct FdYamaguti {
  FdFrame left, right, middle;
  Tensor3 u2, v2, w2, lr, rl, y;
};

inline FdYamaguti fd_yamaguti(const Translation& left, const Translation& right, const Translation& middle,
                              Index tangent_dim, const VectorXd& p) {
  FdYamaguti out;
  out.left = fd_frame(left, tangent_dim, p);
  out.right = fd_frame(right, tangent_dim, p);
  FdFrame sandwich = fd_frame(middle, tangent_dim, p);
  out.middle = {-sandwich.coeffs, {}};
  for (auto& d : sandwich.derivs) out.middle.derivs.push_back(-d);
  out.u2 = self_bracket(out.left);
  out.v2 = self_bracket(out.right);
  out.w2 = self_bracket(out.middle);
  out.lr = cross_bracket(out.left, out.right);
  out.rl = cross_bracket(out.right, out.left);
  out.y = (out.u2 + out.v2 + out.w2) / 6.0;
  return out;
}

/// Loop-side translations built on the Cayley-Dickson chart product.
inline FdYamaguti cd_yamaguti(const VectorXd& g) {
  const Translation left = [](const VectorXd& a, const VectorXd& p) { return cd_chart_multiply(a, p); };
  const Translation right = [](const VectorXd& a, const VectorXd& p) { return cd_chart_multiply(p, a); };
  const Translation middle = [](const VectorXd& a, const VectorXd& p) {
    return cd_chart_multiply(a, cd_chart_multiply(p, a));
  };
  return fd_yamaguti(left, right, middle, g.size(), g);
}

}  // namespace oracle
