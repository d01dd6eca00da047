#pragma once

#include "msg/embedding.hpp"

#include <Eigen/Dense>

namespace msg {

// Max over edges of |length - 1|.
double residual(const Embedding& e);

// Per-edge constraint values r_e = |p_i - p_j|^2 - 1 and their Jacobian
// (E x 2V, columns ordered x0,y0,x1,y1,...). Squared lengths keep the
// Jacobian polynomial in the coordinates.
Eigen::VectorXd squared_length_residuals(const Embedding& e);
Eigen::MatrixXd squared_length_jacobian(const Embedding& e);

struct RefineResult {
    Embedding embedding;
    int iterations = 0;
    double final_residual = 0.0;
    bool converged = false;
    double displacement = 0.0; // max vertex movement from the input
};

// Damped Gauss-Newton on the squared-length residuals with the gauge fixed
// by pinning vertex 0 and the direction of its first incident edge. Steps
// are minimum-norm when the Jacobian is rank-deficient, so flexible inputs
// converge onto the nearest point of the solution manifold.
//
// Throws InputError when some input edge length is outside the raw band,
// ConvergenceError when damping fails 10 times in a row.
RefineResult refine(const Embedding& e, const TolerancePolicy& tol = {},
                    int max_iter = 200);

} // namespace msg
