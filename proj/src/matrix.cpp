#include "catpaths/matrix.hpp"

#include <cmath>

namespace catpaths {

bool all_finite(const Mat &m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      auto v = m(i, j);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
  return true;
}

double op_norm(const Mat &m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  double f = frob_norm(m);
  if (f == 0.0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Mat> es(m.adjoint() * m,
                                        Eigen::EigenvaluesOnly);
  double top = es.eigenvalues().maxCoeff();
  return top > 0 ? std::sqrt(top) : 0.0;
}

double projection_residual(const Mat &m) {
  return std::max(op_norm(m * m - m), op_norm(Mat(m.adjoint()) - m));
}

double partial_isometry_residual(const Mat &m) {
  return op_norm(m * m.adjoint() * m - m);
}

double commutator_norm(const Mat &a, const Mat &b) {
  return op_norm(a * b - b * a);
}

Mat commuting_join(const std::vector<Mat> &ps, int dim, double tol) {
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      double c = commutator_norm(ps[i], ps[j]);
      if (c > tol)
        throw noncommuting_error("projections do not commute",
                                 static_cast<int>(i), static_cast<int>(j), c);
    }
  Mat acc = Mat::Zero(dim, dim);
  for (const auto &p : ps) acc = acc + p - acc * p;
  return acc;
}

bool is_partial_isometry(const Mat &m, double tol) {
  return partial_isometry_residual(m) <= tol;
}

} // namespace catpaths
