#ifndef CATPATHS_MATRIX_HPP
#define CATPATHS_MATRIX_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "catpaths/errors.hpp"

namespace catpaths {

using Mat = Eigen::MatrixXcd;

bool all_finite(const Mat &m);

// Largest singular value.
double op_norm(const Mat &m);

// Cheap upper bound used to short-circuit exact-norm computation.
inline double frob_norm(const Mat &m) { return m.norm(); }

// Residual of M being a projection: max(|M^2 - M|, |M* - M|).
double projection_residual(const Mat &m);

// |M M* M - M|.
double partial_isometry_residual(const Mat &m);

double commutator_norm(const Mat &a, const Mat &b);

// Left fold of P v Q = P + Q - PQ over a family of pairwise commuting
// projections; the empty join is the zero matrix. Throws noncommuting_error
// when a pair fails to commute within tol.
Mat commuting_join(const std::vector<Mat> &ps, int dim, double tol);

bool is_partial_isometry(const Mat &m, double tol);

} // namespace catpaths

#endif
