#pragma once

// Analytic Moufang loops in a chart around the identity.
//
// Three instances cover the degeneracy layers: R^n under addition (abelian),
// unit quaternions (associative, noncommutative) and unit octonions (Moufang,
// nonassociative).  The sphere instances use the imaginary-part chart
// g -> (sqrt(1 - |g|^2), g).

#include <array>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "moufang/fields.hpp"
#include "moufang/jets.hpp"

namespace moufang {

/// A chart evaluation left the domain where the chart is a diffeomorphism.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_point(const Eigen::VectorXd& p);

enum class LoopKind { abelian, quaternion, octonion };

std::string to_string(LoopKind kind);
LoopKind loop_kind_from_string(const std::string& name);

/// Global sign conventions tying the computed structure constants and the
/// Yamaguti decompositions to the generalized Maurer-Cartan equations.
struct Signs {
  int sigma = -1;
  int tau = -1;
  bool operator==(const Signs&) const = default;
};

class LoopChart {
 public:
  LoopChart(LoopKind kind, Eigen::Index dim, double radius) : kind_(kind), dim_(dim), radius_(radius) {}
  virtual ~LoopChart() = default;

  LoopKind kind() const { return kind_; }
  std::string name() const { return to_string(kind_); }
  Eigen::Index dim() const { return dim_; }
  /// Safe sampling radius.
  double radius() const { return radius_; }
  Eigen::VectorXd identity() const { return Eigen::VectorXd::Zero(dim_); }
  virtual bool associative() const = 0;

  /// Chart coordinates of g*h.  Throws DomainError outside the chart.
  template <typename T>
  Vec<T> multiply(const Vec<T>& g, const Vec<T>& h) const {
    return product(g, h);
  }

 protected:
  virtual Vec<double> product(const Vec<double>& g, const Vec<double>& h) const = 0;
  virtual Vec<Dual1> product(const Vec<Dual1>& g, const Vec<Dual1>& h) const = 0;
  virtual Vec<Dual11> product(const Vec<Dual11>& g, const Vec<Dual11>& h) const = 0;
  virtual Vec<Dual2> product(const Vec<Dual2>& g, const Vec<Dual2>& h) const = 0;

 private:
  LoopKind kind_;
  Eigen::Index dim_;
  double radius_;
};

// Forwards every scalar overload to Derived::apply<T>.
template <typename Derived>
class LoopChartImpl : public LoopChart {
 public:
  using LoopChart::LoopChart;

 protected:
  Vec<double> product(const Vec<double>& g, const Vec<double>& h) const override { return self().apply(g, h); }
  Vec<Dual1> product(const Vec<Dual1>& g, const Vec<Dual1>& h) const override { return self().apply(g, h); }
  Vec<Dual11> product(const Vec<Dual11>& g, const Vec<Dual11>& h) const override { return self().apply(g, h); }
  Vec<Dual2> product(const Vec<Dual2>& g, const Vec<Dual2>& h) const override { return self().apply(g, h); }

 private:
  const Derived& self() const { return static_cast<const Derived&>(*this); }
};

class AbelianLoop final : public LoopChartImpl<AbelianLoop> {
 public:
  explicit AbelianLoop(Eigen::Index dim = 2, double radius = 0.3)
      : LoopChartImpl(LoopKind::abelian, dim, radius) {}
  bool associative() const override { return true; }

  template <typename T>
  Vec<T> apply(const Vec<T>& g, const Vec<T>& h) const {
    check_shape(g.size(), h.size());
    return g + h;
  }

 private:
  void check_shape(Eigen::Index a, Eigen::Index b) const;
};

/// Multiplication table of a real algebra with basis e_0 = 1, e_1..e_{n-1}:
/// e_i e_j = sign[i][j] e_{index[i][j]}.
template <int N>
struct AlgebraTable {
  std::array<std::array<int, N>, N> index{};
  std::array<std::array<int, N>, N> sign{};
};

const AlgebraTable<4>& quaternion_table();
const AlgebraTable<8>& octonion_table();

template <typename T, int N>
Vec<T> table_product(const AlgebraTable<N>& table, const Vec<T>& x, const Vec<T>& y) {
  Vec<T> out = Vec<T>::Constant(N, T(0.0));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const T term = x[i] * y[j];
      if (table.sign[i][j] > 0)
        out[table.index[i][j]] += term;
      else
        out[table.index[i][j]] -= term;
    }
  return out;
}

/// Unit sphere of a normed division algebra in the imaginary-part chart.
template <int N>
class UnitSphereLoop final : public LoopChartImpl<UnitSphereLoop<N>> {
 public:
  UnitSphereLoop(LoopKind kind, const AlgebraTable<N>& table, double radius)
      : LoopChartImpl<UnitSphereLoop<N>>(kind, N - 1, radius), table_(&table) {}
  bool associative() const override { return N <= 4; }

  template <typename T>
  Vec<T> apply(const Vec<T>& g, const Vec<T>& h) const {
    const Vec<T> prod = table_product<T, N>(*table_, lift(g), lift(h));
    if (!(value_of(prod[0]) > 0.0))
      throw DomainError(this->name() + ": product of " + format_point(values_of(g)) + " and " +
                        format_point(values_of(h)) + " leaves the chart");
    return prod.tail(N - 1);
  }

  /// Full algebra element of a chart point.
  template <typename T>
  Vec<T> lift(const Vec<T>& g) const {
    using std::sqrt;
    if (g.size() != N - 1)
      throw std::invalid_argument(this->name() + ": expected chart point of dimension " + std::to_string(N - 1));
    T norm2(0.0);
    for (Eigen::Index i = 0; i < g.size(); ++i) norm2 += g[i] * g[i];
    if (!(value_of(norm2) < 1.0))
      throw DomainError(this->name() + ": point " + format_point(values_of(g)) + " is outside the chart");
    Vec<T> out(N);
    out[0] = sqrt(T(1.0) - norm2);
    for (int i = 1; i < N; ++i) out[i] = g[i - 1];
    return out;
  }

 private:
  const AlgebraTable<N>* table_;
};

using QuaternionLoop = UnitSphereLoop<4>;
using OctonionLoop = UnitSphereLoop<8>;

std::shared_ptr<const LoopChart> make_loop(LoopKind kind, Eigen::Index abelian_dim = 2, double radius = 0.3);

// ---------------------------------------------------------------------------
// Auxiliary functions and their derived tensors.

/// u, v, w at one point: columns j are the coefficient vectors of L_{e_j},
/// R_{e_j} and M_{e_j}.
struct AuxFrame {
  Eigen::MatrixXd u;
  Eigen::MatrixXd v;
  Eigen::MatrixXd w;
};

/// AuxFrame plus point derivatives of each family.
struct AuxJet {
  FieldJet u;
  FieldJet v;
  FieldJet w;
  AuxFrame frame() const { return {u.coeffs, v.coeffs, w.coeffs}; }
};

struct SecondaryFrame {
  Tensor3 u2;
  Tensor3 v2;
  Tensor3 w2;
  Tensor3 lr;  // [L_x, R_y] = x^j y^k lr^s_{jk} d_s
  Tensor3 rl;  // [R_x, L_y]
};

struct StructureConstants {
  Tensor3 c;
};

struct YamagutiTensorG {
  Tensor3 y;
};

/// Loop-side residual row: identity id and its sup-norm residual.
struct IdentityResidual {
  std::string check_id;
  double residual = 0.0;
};

Eigen::VectorXd multiply(const LoopChart& loop, const Eigen::VectorXd& g, const Eigen::VectorXd& h);

AuxFrame aux_frame(const LoopChart& loop, const Eigen::VectorXd& g);
AuxJet aux_jet(const LoopChart& loop, const Eigen::VectorXd& g);

/// Coefficients of M_x recomputed from the two-sided translation a(g a).
Eigen::MatrixXd sandwich_generator(const LoopChart& loop, const Eigen::VectorXd& g);

StructureConstants structure_constants(const LoopChart& loop, int sigma);

SecondaryFrame secondary_frame(const AuxJet& jet);
SecondaryFrame secondary_frame(const LoopChart& loop, const Eigen::VectorXd& g);

YamagutiTensorG yamaguti_g(const SecondaryFrame& sf);
YamagutiTensorG yamaguti_g(const LoopChart& loop, const Eigen::VectorXd& g);

/// mc.4a, mc.4b, mc.4c.
std::vector<IdentityResidual> check_maurer_cartan_g(const LoopChart& loop, const StructureConstants& c,
                                                    const Eigen::VectorXd& g);
/// lemma1.6a, lemma1.6b, lemma1.6c.
std::vector<IdentityResidual> check_lemma1(const LoopChart& loop, const StructureConstants& c, int tau,
                                           const Eigen::VectorXd& g);
/// (g h)(k g) - g((h k) g).
double check_moufang(const LoopChart& loop, const Eigen::VectorXd& g, const Eigen::VectorXd& h,
                     const Eigen::VectorXd& k);

}  // namespace moufang
