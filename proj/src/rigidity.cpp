#include "msg/rigidity.hpp"

#include "msg/errors.hpp"

#include <algorithm>
#include <cmath>

namespace msg {

Eigen::MatrixXd rigidity_matrix(const Embedding& e) {
    Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(e.edge_count(), 2 * e.vertex_count());
    for (int i = 0; i < e.edge_count(); ++i) {
        const Edge edge = e.edges[i];
        const Point d = e.vertices[edge.u] - e.vertices[edge.v];
        if (norm(d) < 1e-12)
            throw InputError("rigidity_matrix: degenerate edge " + std::to_string(edge.u) +
                             "-" + std::to_string(edge.v));
        mat(i, 2 * edge.u) = d.x;
        mat(i, 2 * edge.u + 1) = d.y;
        mat(i, 2 * edge.v) = -d.x;
        mat(i, 2 * edge.v + 1) = -d.y;
    }
    return mat;
}

namespace {

int numeric_rank(const Eigen::VectorXd& singular, double rank_tol) {
    if (singular.size() == 0 || singular(0) <= 0.0) return 0;
    const double cutoff = rank_tol * singular(0);
    int rank = 0;
    while (rank < singular.size() && singular(rank) > cutoff) ++rank;
    return rank;
}

// Orthonormal basis of the 3 trivial planar motions (two translations and an
// infinitesimal rotation about the centroid).
Eigen::MatrixXd trivial_motions(const Embedding& e) {
    const int nv = e.vertex_count();
    Point c{0, 0};
    for (const Point& p : e.vertices) c = c + p;
    c = (1.0 / nv) * c;
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(2 * nv, 3);
    for (int v = 0; v < nv; ++v) {
        t(2 * v, 0) = 1.0;
        t(2 * v + 1, 1) = 1.0;
        t(2 * v, 2) = -(e.vertices[v].y - c.y);
        t(2 * v + 1, 2) = e.vertices[v].x - c.x;
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(t);
    return qr.householderQ() * Eigen::MatrixXd::Identity(2 * nv, 3);
}

} // namespace

RigidityResult analyze(const Embedding& e, const TolerancePolicy& tol) {
    if (e.vertex_count() < 3) throw InputError("analyze: needs at least 3 vertices");
    if (!is_connected(e)) throw InputError("analyze: embedding is disconnected");

    const Eigen::MatrixXd mat = rigidity_matrix(e);
    const int nv = e.vertex_count();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(mat, Eigen::ComputeFullV);
    Eigen::VectorXd sigma = svd.singularValues();

    RigidityResult r;
    r.rank = numeric_rank(sigma, tol.rank_tol);
    r.dof = 2 * nv - 3 - r.rank;
    r.rigid = r.dof == 0;
    r.singular_values.assign(sigma.data(), sigma.data() + sigma.size());

    if (r.dof > 0) {
        // Null space holds the 3 trivial motions plus dof nontrivial flexes;
        // project the trivial part out and re-orthonormalize.
        const int null_dim = 2 * nv - r.rank;
        Eigen::MatrixXd null_basis =
            svd.matrixV().block(0, 2 * nv - null_dim, 2 * nv, null_dim);
        const Eigen::MatrixXd triv = trivial_motions(e);
        Eigen::MatrixXd proj = null_basis - triv * (triv.transpose() * null_basis);
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(proj);
        qr.setThreshold(1e-10);
        const int flex_dim = std::min<int>(r.dof, static_cast<int>(qr.rank()));
        Eigen::MatrixXd q =
            qr.householderQ() * Eigen::MatrixXd::Identity(2 * nv, flex_dim);
        for (int k = 0; k < flex_dim; ++k) r.flex_basis.push_back(q.col(k));
    }
    return r;
}

std::vector<EdgeRemoval> edge_removal_scan(const Embedding& e, const TolerancePolicy& tol) {
    analyze(e, tol); // validates the preconditions once

    const Eigen::MatrixXd full = rigidity_matrix(e);
    const int nv = e.vertex_count();
    const int ne = e.edge_count();
    std::vector<EdgeRemoval> out;
    out.reserve(ne);

    for (int skip = 0; skip < ne; ++skip) {
        Embedding reduced = e;
        reduced.edges.erase(reduced.edges.begin() + skip);
        reduced.edge_tags.erase(reduced.edge_tags.begin() + skip);

        Eigen::MatrixXd mat(ne - 1, 2 * nv);
        mat.topRows(skip) = full.topRows(skip);
        mat.bottomRows(ne - 1 - skip) = full.bottomRows(ne - 1 - skip);

        Eigen::BDCSVD<Eigen::MatrixXd> svd(mat);
        const int rank = numeric_rank(svd.singularValues(), tol.rank_tol);
        out.push_back({e.edges[skip], 2 * nv - 3 - rank, !is_connected(reduced)});
    }
    return out;
}

} // namespace msg
