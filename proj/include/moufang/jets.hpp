#pragma once

// Forward-mode truncated-Taylor arithmetic.
//
// Dual<T> carries a value and first partials; nesting Dual<Dual<double>>
// yields mixed second partials.  Dual2 carries a value, gradient and full
// Hessian of a real function.  Both are usable as Eigen scalars, so chart
// maps are written once as templates on the scalar type and evaluated with
// any of them.
//
// An empty partial vector (or Hessian) stands for zero.  This lets plain
// constants mix with seeded variables without knowing the input dimension.

#include <cmath>
#include <concepts>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include <Eigen/Core>

namespace moufang {
template <typename T>
class Dual;
class Dual2;
}  // namespace moufang

namespace Eigen {

template <typename T>
struct NumTraits<moufang::Dual<T>> : NumTraits<double> {
  using Real = moufang::Dual<T>;
  using NonInteger = moufang::Dual<T>;
  using Nested = moufang::Dual<T>;
  using Literal = moufang::Dual<T>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 3
  };
};

template <>
struct NumTraits<moufang::Dual2> : NumTraits<double> {
  using Real = moufang::Dual2;
  using NonInteger = moufang::Dual2;
  using Nested = moufang::Dual2;
  using Literal = moufang::Dual2;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 3
  };
};

}  // namespace Eigen

namespace moufang {

using Eigen::Index;

template <typename T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;

template <typename T>
class Dual {
 public:
  using Partials = Vec<T>;

  Dual() = default;
  Dual(double v) : value_(v) {}  // NOLINT: constants promote implicitly
  Dual(T v, Partials p) : value_(std::move(v)), partials_(std::move(p)) {}

  /// Independent variable number `i` out of `n`.
  static Dual variable(T v, Index i, Index n) {
    Partials p = Partials::Constant(n, T(0.0));
    p[i] = T(1.0);
    return {std::move(v), std::move(p)};
  }

  const T& value() const { return value_; }
  const Partials& partials() const { return partials_; }

  friend Dual operator-(const Dual& a) {
    return {-a.value_, a.partials_.size() ? Partials(-a.partials_) : Partials()};
  }
  friend Dual operator+(const Dual& a, const Dual& b) {
    return {a.value_ + b.value_, sum(a.partials_, b.partials_)};
  }
  friend Dual operator-(const Dual& a, const Dual& b) { return a + (-b); }
  friend Dual operator*(const Dual& a, const Dual& b) {
    return {a.value_ * b.value_, sum(scaled(b.partials_, a.value_), scaled(a.partials_, b.value_))};
  }
  friend Dual operator/(const Dual& a, const Dual& b) { return a * reciprocal(b); }

  Dual& operator+=(const Dual& b) { return *this = *this + b; }
  Dual& operator-=(const Dual& b) { return *this = *this - b; }
  Dual& operator*=(const Dual& b) { return *this = *this * b; }
  Dual& operator/=(const Dual& b) { return *this = *this / b; }

  friend Dual reciprocal(const Dual& a) {
    const T inv = T(1.0) / a.value_;
    return {inv, scaled(a.partials_, -(inv * inv))};
  }
  friend Dual sqrt(const Dual& a) {
    using std::sqrt;
    const T s = sqrt(a.value_);
    return {s, scaled(a.partials_, T(0.5) / s)};
  }

 private:
  static Partials sum(const Partials& a, const Partials& b) {
    if (a.size() == 0) return b;
    if (b.size() == 0) return a;
    if (a.size() != b.size()) throw std::invalid_argument("Dual: mismatched partial counts");
    return a + b;
  }
  static Partials scaled(const Partials& a, const T& s) {
    if (a.size() == 0) return {};
    return a * s;
  }

  T value_{};
  Partials partials_;
};

/// Value, gradient and symmetric Hessian of a scalar function.
class Dual2 {
 public:
  Dual2() = default;
  Dual2(double v) : value_(v) {}  // NOLINT: constants promote implicitly
  Dual2(double v, Eigen::VectorXd g, Eigen::MatrixXd h)
      : value_(v), gradient_(std::move(g)), hessian_(std::move(h)) {}

  static Dual2 variable(double v, Index i, Index n) {
    Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
    g[i] = 1.0;
    return {v, std::move(g), Eigen::MatrixXd()};
  }

  double value() const { return value_; }
  const Eigen::VectorXd& gradient() const { return gradient_; }
  const Eigen::MatrixXd& hessian() const { return hessian_; }

  friend Dual2 operator-(const Dual2& a) {
    return {-a.value_, a.gradient_.size() ? Eigen::VectorXd(-a.gradient_) : Eigen::VectorXd(),
            a.hessian_.size() ? Eigen::MatrixXd(-a.hessian_) : Eigen::MatrixXd()};
  }
  friend Dual2 operator+(const Dual2& a, const Dual2& b) {
    return {a.value_ + b.value_, sum(a.gradient_, b.gradient_), sum(a.hessian_, b.hessian_)};
  }
  friend Dual2 operator-(const Dual2& a, const Dual2& b) { return a + (-b); }
  friend Dual2 operator*(const Dual2& a, const Dual2& b) {
    Eigen::VectorXd g = sum(scaled(b.gradient_, a.value_), scaled(a.gradient_, b.value_));
    Eigen::MatrixXd h = sum(scaled(b.hessian_, a.value_), scaled(a.hessian_, b.value_));
    if (a.gradient_.size() && b.gradient_.size()) {
      // a_i b_j + b_i a_j is bitwise symmetric under i <-> j.
      Eigen::MatrixXd cross = a.gradient_ * b.gradient_.transpose() + b.gradient_ * a.gradient_.transpose();
      h = sum(h, cross);
    }
    return {a.value_ * b.value_, std::move(g), std::move(h)};
  }
  friend Dual2 operator/(const Dual2& a, const Dual2& b) { return a * reciprocal(b); }

  Dual2& operator+=(const Dual2& b) { return *this = *this + b; }
  Dual2& operator-=(const Dual2& b) { return *this = *this - b; }
  Dual2& operator*=(const Dual2& b) { return *this = *this * b; }
  Dual2& operator/=(const Dual2& b) { return *this = *this / b; }

  friend Dual2 reciprocal(const Dual2& a) {
    const double inv = 1.0 / a.value_;
    return a.compose(inv, -(inv * inv), 2.0 * inv * inv * inv);
  }
  friend Dual2 sqrt(const Dual2& a) {
    const double s = std::sqrt(a.value_);
    const double d1 = 0.5 / s;
    return a.compose(s, d1, -0.5 * d1 / a.value_);
  }

 private:
  // Chain rule for f(a) given f, f', f'' at a.value().
  Dual2 compose(double f, double d1, double d2) const {
    Eigen::VectorXd g = scaled(gradient_, d1);
    Eigen::MatrixXd h = scaled(hessian_, d1);
    if (gradient_.size()) h = sum(h, Eigen::MatrixXd(d2 * (gradient_ * gradient_.transpose())));
    return {f, std::move(g), std::move(h)};
  }

  template <typename M>
  static M sum(const M& a, const M& b) {
    if (a.size() == 0) return b;
    if (b.size() == 0) return a;
    if (a.rows() != b.rows() || a.cols() != b.cols())
      throw std::invalid_argument("Dual2: mismatched derivative shapes");
    return a + b;
  }
  template <typename M>
  static M scaled(const M& a, double s) {
    if (a.size() == 0) return {};
    return a * s;
  }

  double value_ = 0.0;
  Eigen::VectorXd gradient_;
  Eigen::MatrixXd hessian_;
};

using Dual1 = Dual<double>;
using Dual11 = Dual<Dual<double>>;

inline double value_of(double x) { return x; }
template <typename T>
double value_of(const Dual<T>& x) {
  return value_of(x.value());
}
inline double value_of(const Dual2& x) { return x.value(); }

template <typename T>
Eigen::VectorXd values_of(const Vec<T>& x) {
  Eigen::VectorXd out(x.size());
  for (Index i = 0; i < x.size(); ++i) out[i] = value_of(x[i]);
  return out;
}

// A smooth map is any callable templated on the scalar type that takes and
// returns a dynamic column vector.
template <typename F>
concept SmoothMap = requires(const F& f, const Eigen::VectorXd& x, const Vec<Dual1>& d) {
  { f(x) } -> std::convertible_to<Eigen::VectorXd>;
  { f(d) } -> std::convertible_to<Vec<Dual1>>;
};

struct JetResult {
  Eigen::VectorXd value;
  Eigen::MatrixXd jacobian;               // outputs x inputs
  std::vector<Eigen::MatrixXd> hessians;  // one per output; empty for jet1
};

template <SmoothMap F>
JetResult jet1(const F& f, const Eigen::VectorXd& at) {
  const Index n = at.size();
  Vec<Dual1> x(n);
  for (Index i = 0; i < n; ++i) x[i] = Dual1::variable(at[i], i, n);
  const Vec<Dual1> y = f(x);

  JetResult out;
  out.value.resize(y.size());
  out.jacobian = Eigen::MatrixXd::Zero(y.size(), n);
  for (Index r = 0; r < y.size(); ++r) {
    out.value[r] = y[r].value();
    if (y[r].partials().size()) out.jacobian.row(r) = y[r].partials().transpose();
  }
  return out;
}

template <typename F>
JetResult jet2(const F& f, const Eigen::VectorXd& at) {
  const Index n = at.size();
  Vec<Dual2> x(n);
  for (Index i = 0; i < n; ++i) x[i] = Dual2::variable(at[i], i, n);
  const Vec<Dual2> y = f(x);

  JetResult out;
  out.value.resize(y.size());
  out.jacobian = Eigen::MatrixXd::Zero(y.size(), n);
  out.hessians.assign(y.size(), Eigen::MatrixXd::Zero(n, n));
  for (Index r = 0; r < y.size(); ++r) {
    out.value[r] = y[r].value();
    if (y[r].gradient().size()) out.jacobian.row(r) = y[r].gradient().transpose();
    if (y[r].hessian().size()) out.hessians[r] = y[r].hessian();
  }
  return out;
}

/// First and mixed second partials of f(x, y) from one nested-dual pass.
/// `inner` is df/dy, `outer` is df/dx and mixed[p](i, j) = d2 f^i / dx^p dy^j.
struct NestedJet {
  Eigen::VectorXd value;
  Eigen::MatrixXd inner;
  Eigen::MatrixXd outer;
  std::vector<Eigen::MatrixXd> mixed;
};

template <typename F>
NestedJet nested_jet(const F& f, const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  const Index nx = x.size();
  const Index ny = y.size();
  Vec<Dual11> xs(nx);
  Vec<Dual11> ys(ny);
  for (Index p = 0; p < nx; ++p) {
    Vec<Dual1> seed = Vec<Dual1>::Constant(nx, Dual1(0.0));
    seed[p] = Dual1(1.0);
    xs[p] = Dual11(Dual1(x[p]), std::move(seed));
  }
  for (Index j = 0; j < ny; ++j) ys[j] = Dual11(Dual1::variable(y[j], j, ny), Vec<Dual1>());

  const Vec<Dual11> out = f(xs, ys);
  const Index m = out.size();

  NestedJet r;
  r.value.resize(m);
  r.inner = Eigen::MatrixXd::Zero(m, ny);
  r.outer = Eigen::MatrixXd::Zero(m, nx);
  r.mixed.assign(nx, Eigen::MatrixXd::Zero(m, ny));
  for (Index i = 0; i < m; ++i) {
    const Dual1& v = out[i].value();
    r.value[i] = v.value();
    if (v.partials().size()) r.inner.row(i) = v.partials().transpose();
    const Vec<Dual1>& dx = out[i].partials();
    for (Index p = 0; p < dx.size(); ++p) {
      r.outer(i, p) = dx[p].value();
      if (dx[p].partials().size()) r.mixed[p].row(i) = dx[p].partials().transpose();
    }
  }
  return r;
}

/// Central-difference Jacobian.  Test oracle only.
template <typename F>
Eigen::MatrixXd fd_jacobian(const F& f, const Eigen::VectorXd& at, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("fd_jacobian: step must be positive");
  const Eigen::VectorXd f0 = f(at);
  Eigen::MatrixXd jac(f0.size(), at.size());
  for (Index j = 0; j < at.size(); ++j) {
    Eigen::VectorXd hi = at;
    Eigen::VectorXd lo = at;
    hi[j] += step;
    lo[j] -= step;
    const Eigen::VectorXd fh = f(hi);
    const Eigen::VectorXd fl = f(lo);
    jac.col(j) = (fh - fl) / (2.0 * step);
  }
  return jac;
}

}  // namespace moufang
