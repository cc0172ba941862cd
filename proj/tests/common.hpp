#pragma once

#include <random>
#include <vector>

#include <Eigen/Core>

namespace testutil {

/// Uniform points in the open ball, from a generator unrelated to the harness sampler.
inline std::vector<Eigen::VectorXd> ball_points(Eigen::Index dim, int count, double radius, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<Eigen::VectorXd> out;
  while (static_cast<int>(out.size()) < count) {
    Eigen::VectorXd p(dim);
    for (Eigen::Index i = 0; i < dim; ++i) p[i] = unit(rng);
    if (p.norm() < 1.0) out.push_back(radius * p);
  }
  return out;
}

inline double max_abs(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace testutil
