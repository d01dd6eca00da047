#include "msg/refine.hpp"

#include "msg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace msg {

double residual(const Embedding& e) {
    double r = 0.0;
    for (int i = 0; i < e.edge_count(); ++i)
        r = std::max(r, std::abs(e.edge_length(i) - 1.0));
    return r;
}

Eigen::VectorXd squared_length_residuals(const Embedding& e) {
    Eigen::VectorXd r(e.edge_count());
    for (int i = 0; i < e.edge_count(); ++i) {
        const Point d = e.vertices[e.edges[i].u] - e.vertices[e.edges[i].v];
        r(i) = dot(d, d) - 1.0;
    }
    return r;
}

Eigen::MatrixXd squared_length_jacobian(const Embedding& e) {
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(e.edge_count(), 2 * e.vertex_count());
    for (int i = 0; i < e.edge_count(); ++i) {
        const Edge edge = e.edges[i];
        const Point d = e.vertices[edge.u] - e.vertices[edge.v];
        jac(i, 2 * edge.u) = 2.0 * d.x;
        jac(i, 2 * edge.u + 1) = 2.0 * d.y;
        jac(i, 2 * edge.v) = -2.0 * d.x;
        jac(i, 2 * edge.v + 1) = -2.0 * d.y;
    }
    return jac;
}

namespace {

// Gauge: vertex 0 is pinned, and its first neighbor may move only along the
// initial edge direction. That removes the 3 trivial planar motions and keeps
// the unknown count at 2V - 3.
struct Gauge {
    int pinned_neighbor;
    Point axis; // unit direction vertex 0 -> neighbor at input

    static Gauge from(const Embedding& e) {
        int nb = -1;
        for (const Edge& edge : e.edges) {
            if (edge.u == 0) { nb = edge.v; break; }
            if (edge.v == 0) { nb = edge.u; break; }
        }
        if (nb < 0) throw InputError("refine: vertex 0 has no incident edge");
        Point d = e.vertices[nb] - e.vertices[0];
        const double len = norm(d);
        if (len < 1e-12) throw InputError("refine: degenerate gauge edge");
        return {nb, (1.0 / len) * d};
    }

    // 2V x (2V-3) reduction applied column-wise to the full Jacobian.
    Eigen::MatrixXd reduce(const Eigen::MatrixXd& full, int nverts) const {
        Eigen::MatrixXd red(full.rows(), 2 * nverts - 3);
        int col = 0;
        for (int v = 1; v < nverts; ++v) {
            if (v == pinned_neighbor) {
                red.col(col++) =
                    full.col(2 * v) * axis.x + full.col(2 * v + 1) * axis.y;
            } else {
                red.col(col++) = full.col(2 * v);
                red.col(col++) = full.col(2 * v + 1);
            }
        }
        return red;
    }

    void apply_step(const Eigen::VectorXd& dz, std::vector<Point>& verts) const {
        int col = 0;
        for (std::size_t v = 1; v < verts.size(); ++v) {
            if (static_cast<int>(v) == pinned_neighbor) {
                verts[v] = verts[v] + dz(col) * axis;
                ++col;
            } else {
                verts[v].x += dz(col);
                verts[v].y += dz(col + 1);
                col += 2;
            }
        }
    }
};

} // namespace

RefineResult refine(const Embedding& e, const TolerancePolicy& tol, int max_iter) {
    if (e.vertex_count() < 2 || e.edge_count() < 1)
        throw InputError("refine: embedding too small");
    const double r0 = residual(e);
    if (r0 > tol.unit_tol_raw)
        throw InputError("refine: input residual " + std::to_string(r0) +
                         " exceeds the raw unit band");

    RefineResult res;
    res.embedding = e;
    if (r0 <= tol.unit_tol_refined) {
        res.final_residual = r0;
        res.converged = true;
        return res;
    }

    const Gauge gauge = Gauge::from(e);
    const int nv = e.vertex_count();
    Embedding cur = e;
    double lambda = 1e-8;

    while (res.iterations < max_iter) {
        const Eigen::VectorXd r = squared_length_residuals(cur);
        const double f = r.squaredNorm();
        const Eigen::MatrixXd jac = gauge.reduce(squared_length_jacobian(cur), nv);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const Eigen::VectorXd& sigma = svd.singularValues();
        const double cutoff = sigma.size() ? tol.rank_tol * sigma(0) : 0.0;
        const Eigen::VectorXd utr = svd.matrixU().transpose() * r;

        int fails = 0;
        Eigen::VectorXd dz;
        Embedding cand = cur;
        while (true) {
            Eigen::VectorXd filt(sigma.size());
            for (int i = 0; i < sigma.size(); ++i)
                filt(i) = sigma(i) > cutoff
                              ? -sigma(i) / (sigma(i) * sigma(i) + lambda) * utr(i)
                              : 0.0;
            dz = svd.matrixV() * filt;
            cand.vertices = cur.vertices;
            gauge.apply_step(dz, cand.vertices);
            const double fc = squared_length_residuals(cand).squaredNorm();
            if (fc <= f || dz.norm() <= 1e-14) {
                lambda = std::max(lambda / 10.0, 1e-15);
                break;
            }
            lambda *= 10.0;
            if (++fails >= 10) {
                std::string dump = "refine: diverged after " +
                                   std::to_string(res.iterations) + " iterations, residual " +
                                   std::to_string(residual(cur)) + ", worst edges:";
                for (int i = 0; i < std::min(3, cur.edge_count()); ++i)
                    dump += " " + std::to_string(cur.edge_length(i));
                throw ConvergenceError(dump);
            }
        }
        cur.vertices = cand.vertices;
        ++res.iterations;
        if (residual(cur) <= tol.unit_tol_refined || dz.norm() <= 1e-14) break;
    }

    res.final_residual = residual(cur);
    res.converged = res.final_residual <= tol.unit_tol_refined;
    double disp = 0.0;
    for (int v = 0; v < nv; ++v)
        disp = std::max(disp, distance(cur.vertices[v], e.vertices[v]));
    res.displacement = disp;
    res.embedding = std::move(cur);
    return res;
}

} // namespace msg
