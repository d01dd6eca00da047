#pragma once

#include "msg/embedding.hpp"
#include "msg/motifs.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace msg {

enum class EntryKind { matchstick, pattern, outline, stub };

std::string to_string(EntryKind k);

struct MotifExpectation {
    std::string pattern;
    int count = 0; // edge-disjoint placements
};

struct CatalogEntry {
    std::string id;
    EntryKind kind = EntryKind::matchstick;
    std::string seg_file; // empty for stubs
    int vertices = 0;     // stubs: unverifiable metadata
    int edges = 0;

    std::optional<DegreeProfile> profile; // expected degree profile
    std::optional<bool> rigid;
    std::optional<std::string> symmetry; // expected group label
    std::optional<int> rotation_order;
    std::optional<bool> shape_trivial;
    std::optional<bool> shape_point_symmetric;
    std::vector<MotifExpectation> motifs;

    // Expected angle fan around the unique highest-degree vertex, anchored at
    // the red-tagged edges (fig13 only).
    std::vector<double> fan_angles;

    std::string notes;

    bool has_data() const { return !seg_file.empty(); }
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_entry(std::string_view id);

// Bundled data directory; the MSG_CATALOG_DIR environment variable overrides
// the compiled-in default.
std::string data_dir();

SegmentList load_entry_segments(const CatalogEntry& entry);

// The four motif patterns (kite, triplet kite, double kite, reverse double
// kite), built and refined from their catalog entries.
std::vector<Pattern> load_patterns(const TolerancePolicy& tol = {});

} // namespace msg
