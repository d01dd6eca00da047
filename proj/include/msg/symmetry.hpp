#pragma once

#include "msg/embedding.hpp"
#include "msg/motifs.hpp"
#include "msg/rigidity.hpp"

#include <string>
#include <vector>

namespace msg {

struct SymmetryReport {
    int rotation_order = 1;                // largest k with C_k symmetry
    std::vector<double> mirror_axes_deg;   // axis angles mod 180, sorted
    bool point_symmetric = false;          // 180-degree rotation present
    std::string group;                     // "Ck" or "Dk"
    Point centroid;

    int mirror_count() const { return static_cast<int>(mirror_axes_deg.size()); }
    bool trivial() const { return rotation_order == 1 && mirror_axes_deg.empty(); }
};

// Isometries mapping the vertex set and edge set onto themselves, matched
// within snap_tol. Candidates are rotations and mirror axes through the
// vertex centroid, seeded from a vertex of maximal radius.
SymmetryReport isometry_group(const Embedding& e, const TolerancePolicy& tol = {});

struct OuterShape {
    std::vector<int> cycle;           // outer face, counterclockwise
    std::vector<Point> positions;     // positions of the cycle vertices
    std::vector<double> edge_lengths; // edge i: cycle[i] -> cycle[i+1]
    std::vector<double> turn_angles;  // signed exterior turn after edge i, degrees
};

// Outer face by angular traversal from the lowest-then-leftmost vertex along
// its most-clockwise edge. Throws InputError when the walk does not close
// into a simple cycle (verify the embedding first).
OuterShape outer_boundary(const Embedding& e);

// Symmetry group of the cyclic (length, turn) signature: cyclic shifts give
// rotations, reversal plus shift gives reflections.
SymmetryReport shape_symmetry(const OuterShape& s, const TolerancePolicy& tol = {});

enum class Orientation { ccw, cw };

struct AngleFan {
    int vertex = 0;
    std::vector<double> angles; // consecutive gaps, degrees, sum to 360
    Orientation orientation = Orientation::ccw;
};

// Consecutive angles between the edges incident to v, starting at start_edge
// and proceeding in the requested rotational direction.
AngleFan angle_fan(const Embedding& e, int v, Edge start_edge, Orientation orientation);

// Complete-asymmetry conditions: rigidity, trivial isometry group, trivial
// outer-shape symmetry. Whether the graph decomposes into rigid blocks that
// could be rearranged is not decided here; the motif inventory is attached
// as evidence.
struct AsymmetryConditions {
    bool rigid = false;
    bool graph_symmetry_trivial = false;
    bool shape_symmetry_trivial = false;
    RigidityResult rigidity;
    SymmetryReport graph_symmetry;
    SymmetryReport shape;
    MotifInventory inventory;
    std::string decomposition_note;
};

AsymmetryConditions asymmetry_report(const Embedding& e,
                                     const std::vector<Pattern>& patterns,
                                     const TolerancePolicy& tol = {});

} // namespace msg
