#include "moufang/loops.hpp"

#include <sstream>

namespace moufang {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

std::string format_point(const VectorXd& p) {
  std::ostringstream os;
  os.precision(6);
  os << '(';
  for (Index i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i];
  os << ')';
  return os.str();
}

std::string to_string(LoopKind kind) {
  switch (kind) {
    case LoopKind::abelian:
      return "abelian";
    case LoopKind::quaternion:
      return "quaternion";
    case LoopKind::octonion:
      return "octonion";
  }
  return "unknown";
}

LoopKind loop_kind_from_string(const std::string& name) {
  if (name == "abelian") return LoopKind::abelian;
  if (name == "quaternion") return LoopKind::quaternion;
  if (name == "octonion") return LoopKind::octonion;
  throw std::invalid_argument("unknown loop '" + name + "'");
}

void AbelianLoop::check_shape(Index a, Index b) const {
  if (a != dim() || b != dim())
    throw std::invalid_argument("abelian: expected chart points of dimension " + std::to_string(dim()));
}

namespace {

// Imaginary units multiply along oriented triples e_a e_b = e_c (cyclically),
// and square to -1.
template <int N, std::size_t M>
AlgebraTable<N> build_table(const std::array<std::array<int, 3>, M>& triples) {
  AlgebraTable<N> t;
  for (int i = 0; i < N; ++i) {
    t.index[0][i] = i;
    t.sign[0][i] = 1;
    t.index[i][0] = i;
    t.sign[i][0] = 1;
  }
  for (int i = 1; i < N; ++i) {
    t.index[i][i] = 0;
    t.sign[i][i] = -1;
  }
  for (const auto& [a, b, c] : triples) {
    const std::array<std::array<int, 3>, 3> rotations{{{a, b, c}, {b, c, a}, {c, a, b}}};
    for (const auto& [x, y, z] : rotations) {
      t.index[x][y] = z;
      t.sign[x][y] = 1;
      t.index[y][x] = z;
      t.sign[y][x] = -1;
    }
  }
  return t;
}

}  // namespace

const AlgebraTable<4>& quaternion_table() {
  static const AlgebraTable<4> table = build_table<4>(std::array<std::array<int, 3>, 1>{{{1, 2, 3}}});
  return table;
}

const AlgebraTable<8>& octonion_table() {
  // Fano-plane orientation of the doubling (a, b)(c, d) = (ac - d*b, da + bc*)
  // with e_4..e_7 = (0, 1), (0, i), (0, j), (0, k).
  static const AlgebraTable<8> table = build_table<8>(std::array<std::array<int, 3>, 7>{
      {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}}});
  return table;
}

std::shared_ptr<const LoopChart> make_loop(LoopKind kind, Index abelian_dim, double radius) {
  switch (kind) {
    case LoopKind::abelian:
      if (abelian_dim < 1) throw std::invalid_argument("abelian dimension must be positive");
      return std::make_shared<AbelianLoop>(abelian_dim, radius);
    case LoopKind::quaternion:
      return std::make_shared<QuaternionLoop>(LoopKind::quaternion, quaternion_table(), radius);
    case LoopKind::octonion:
      return std::make_shared<OctonionLoop>(LoopKind::octonion, octonion_table(), radius);
  }
  throw std::invalid_argument("unknown loop kind");
}

VectorXd multiply(const LoopChart& loop, const VectorXd& g, const VectorXd& h) {
  return loop.multiply<double>(g, h);
}

namespace {

// Generator coefficients of a -> translate(a) at a = e, with their
// derivatives along the base point.
FieldJet translation_jet(const NestedJet& nj) { return {nj.inner, nj.mixed}; }

}  // namespace

AuxJet aux_jet(const LoopChart& loop, const VectorXd& g) {
  const VectorXd e = loop.identity();
  const NestedJet left =
      nested_jet([&](const Vec<Dual11>& x, const Vec<Dual11>& a) { return loop.multiply(a, x); }, g, e);
  const NestedJet right =
      nested_jet([&](const Vec<Dual11>& x, const Vec<Dual11>& a) { return loop.multiply(x, a); }, g, e);

  AuxJet jet{translation_jet(left), translation_jet(right), {}};
  jet.w.coeffs = -(jet.u.coeffs + jet.v.coeffs);
  jet.w.derivs.reserve(jet.u.derivs.size());
  for (std::size_t p = 0; p < jet.u.derivs.size(); ++p) jet.w.derivs.push_back(-(jet.u.derivs[p] + jet.v.derivs[p]));
  return jet;
}

AuxFrame aux_frame(const LoopChart& loop, const VectorXd& g) { return aux_jet(loop, g).frame(); }

MatrixXd sandwich_generator(const LoopChart& loop, const VectorXd& g) {
  const auto sandwich = [&](const auto& a) {
    using V = std::decay_t<decltype(a)>;
    using T = typename V::Scalar;
    const Vec<T> gt = g.cast<T>();
    return V(loop.multiply<T>(a, loop.multiply<T>(gt, a)));
  };
  return -jet1(sandwich, loop.identity()).jacobian;
}

StructureConstants structure_constants(const LoopChart& loop, int sigma) {
  const Index r = loop.dim();
  const auto product = [&](const auto& z) {
    using V = std::decay_t<decltype(z)>;
    using T = typename V::Scalar;
    return V(loop.multiply<T>(z.head(r), z.tail(r)));
  };
  const JetResult jr = jet2(product, VectorXd::Zero(2 * r));
  StructureConstants sc{zero_tensor(r, r)};
  for (Index s = 0; s < r; ++s) {
    const MatrixXd& h = jr.hessians[s];
    for (Index j = 0; j < r; ++j)
      for (Index k = 0; k < r; ++k) sc.c(s, j, k) = sigma * (h(j, r + k) - h(k, r + j));
  }
  return sc;
}

SecondaryFrame secondary_frame(const AuxJet& jet) {
  return {secondary(jet.u), secondary(jet.v), secondary(jet.w), field_bracket(jet.u, jet.v),
          field_bracket(jet.v, jet.u)};
}

SecondaryFrame secondary_frame(const LoopChart& loop, const VectorXd& g) {
  return secondary_frame(aux_jet(loop, g));
}

YamagutiTensorG yamaguti_g(const SecondaryFrame& sf) {
  Tensor3 y = (sf.u2 + sf.v2 + sf.w2) / 6.0;
  return {std::move(y)};
}

YamagutiTensorG yamaguti_g(const LoopChart& loop, const VectorXd& g) {
  return yamaguti_g(secondary_frame(loop, g));
}

std::vector<IdentityResidual> check_maurer_cartan_g(const LoopChart& loop, const StructureConstants& c,
                                                    const VectorXd& g) {
  const AuxJet jet = aux_jet(loop, g);
  const SecondaryFrame sf = secondary_frame(jet);
  const auto res = maurer_cartan_residuals(jet.u.coeffs, jet.v.coeffs, sf.u2, sf.v2, sf.lr, sf.rl, c.c);
  return {{"mc.4a", max_abs(res[0])}, {"mc.4b", max_abs(res[1])}, {"mc.4c", max_abs(res[2])}};
}

std::vector<IdentityResidual> check_lemma1(const LoopChart& loop, const StructureConstants& c, int tau,
                                           const VectorXd& g) {
  const AuxJet jet = aux_jet(loop, g);
  const SecondaryFrame sf = secondary_frame(jet);
  const YamagutiTensorG y = yamaguti_g(sf);
  const auto res =
      yamaguti_decomposition_residuals(jet.u.coeffs, jet.v.coeffs, sf.u2, sf.v2, sf.w2, y.y, c.c, tau);
  return {{"lemma1.6a", max_abs(res[0])}, {"lemma1.6b", max_abs(res[1])}, {"lemma1.6c", max_abs(res[2])}};
}

double check_moufang(const LoopChart& loop, const VectorXd& g, const VectorXd& h, const VectorXd& k) {
  const VectorXd lhs = multiply(loop, multiply(loop, g, h), multiply(loop, k, g));
  const VectorXd rhs = multiply(loop, g, multiply(loop, multiply(loop, h, k), g));
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

}  // namespace moufang
