#pragma once

#include "msg/embedding.hpp"

#include <string>
#include <vector>

namespace msg {

struct Pattern {
    std::string name;
    Embedding embedding;        // canonical refined coordinates
    int automorphism_count = 1; // isometries of the pattern onto itself
};

struct MotifMatch {
    std::string pattern;
    std::vector<int> vertex_map; // pattern vertex -> host vertex
    bool reflected = false;
    double rms_error = 0.0; // units, from the seed-edge alignment

    std::vector<int> host_vertices() const; // sorted
    std::vector<Edge> host_edges(const Pattern& p) const;
};

// Geometric subgraph search: for every directed host edge the rigid motion
// (with and without reflection) aligning the pattern's seed edge to it is
// applied; a hypothesis succeeds when every pattern vertex lands on a
// distinct host vertex within snap_tol and every pattern edge maps to a host
// edge. Matches are deduplicated by host vertex set and sorted.
std::vector<MotifMatch> find_motifs(const Embedding& host, const Pattern& p,
                                    const TolerancePolicy& tol = {});

// Placements matching all but at most two pattern vertices (edges between
// matched vertices must still be present). Informational; full matches and
// their subsets are excluded.
struct NearMatch {
    std::string pattern;
    std::vector<int> matched_host_vertices; // sorted
    int missing = 0;
};
std::vector<NearMatch> find_near_motifs(const Embedding& host, const Pattern& p,
                                        const TolerancePolicy& tol = {});

struct PatternCount {
    std::string pattern;
    int matches = 0;       // deduplicated placements
    int disjoint = 0;      // greedy maximal edge-disjoint subset of them
    int near_matches = 0;
};

struct MotifInventory {
    std::vector<PatternCount> counts;
    double edge_coverage = 0.0; // fraction of host edges inside some match
};

MotifInventory motif_inventory(const Embedding& host,
                               const std::vector<Pattern>& patterns,
                               const TolerancePolicy& tol = {});

} // namespace msg
