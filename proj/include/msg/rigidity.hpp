#pragma once

#include "msg/embedding.hpp"

#include <Eigen/Dense>

#include <vector>

namespace msg {

// Bar-joint rigidity matrix, one row per edge (i,j): (p_i - p_j) in i's
// coordinate columns, (p_j - p_i) in j's, zeros elsewhere.
// Throws InputError on a degenerate edge (length < 1e-12).
Eigen::MatrixXd rigidity_matrix(const Embedding& e);

struct RigidityResult {
    int rank = 0;
    int dof = 0;   // 2V - 3 - rank; first-order flexes beyond the 3 trivial motions
    bool rigid = false;
    std::vector<double> singular_values;        // descending
    std::vector<Eigen::VectorXd> flex_basis;    // dof vectors of length 2V
};

// Numerical rank of the rigidity matrix with relative cutoff rank_tol.
// The verdict is infinitesimal rigidity: dof 0 certifies rigidity, dof > 0
// exhibits a first-order flex (stored in flex_basis).
// Requires a connected embedding with V >= 3.
RigidityResult analyze(const Embedding& e, const TolerancePolicy& tol = {});

struct EdgeRemoval {
    Edge edge;
    int dof_after = 0;
    bool disconnects = false; // dof_after is not meaningful when true
};

// dof of the embedding with each single edge removed.
std::vector<EdgeRemoval> edge_removal_scan(const Embedding& e,
                                           const TolerancePolicy& tol = {});

} // namespace msg
