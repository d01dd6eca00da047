#pragma once

#include "msg/geom.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace msg {

// Raw drawn strokes in figure coordinates (y grows downward on the page;
// normalization happens in build_embedding, never in the file).
struct SegmentList {
    std::vector<Segment> segments;
    std::vector<std::string> tags; // parallel to segments, "" when untagged
    std::string source_name;
};

struct Edge {
    int u = 0;
    int v = 0; // canonical form keeps u < v

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Unit-scale drawing of a graph: vertex positions plus an edge set.
struct Embedding {
    std::string name;
    std::vector<Point> vertices;
    std::vector<Edge> edges;             // sorted, unique
    std::vector<std::string> edge_tags;  // parallel to edges

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    double edge_length(int i) const {
        return distance(vertices[edges[i].u], vertices[edges[i].v]);
    }
    bool has_edge(int a, int b) const;
    std::vector<int> degrees() const;
    std::vector<std::vector<int>> adjacency() const;
};

struct DegreeProfile {
    int m = 0;
    int n = 0;
    int count_m = 0;
    int count_n = 0;
};

// .seg text -> SegmentList. Throws ParseError with a line number on
// malformed input; an input with no data lines is an error.
SegmentList parse_segments(std::string_view text);

// Raw length of one matchstick: median of len/round(len/L0) over all
// segments, L0 the minimum length. Throws BuildError when some segment is
// not close to an integer multiple (1..3) of the estimate.
double estimate_unit(const SegmentList& sl, const TolerancePolicy& tol = {});

enum class BuildMode {
    matchstick, // scale to units, snap, subdivide multi-unit strokes, validate
    outline     // scale by the shortest stroke and snap only (non-unit chords allowed)
};

Embedding build_embedding(const SegmentList& sl, const TolerancePolicy& tol = {},
                          BuildMode mode = BuildMode::matchstick);

struct ProfileCheck {
    bool ok = false;
    DegreeProfile profile;
    std::vector<int> offenders; // vertices whose degree is neither m nor n
};
ProfileCheck check_degree_profile(const Embedding& e, int m, int n);

// Same check, throwing InputError that lists the offending vertices.
DegreeProfile degree_profile(const Embedding& e, int m, int n);

bool is_connected(const Embedding& e);

// .mge serialization. Coordinates are printed with 17 significant digits so
// read(write(e)) reproduces them exactly and write(read(write(e))) == write(e).
std::string write_embedding(const Embedding& e);
Embedding read_embedding(std::string_view text);

} // namespace msg
