#include "msg/catalog.hpp"

#include "msg/errors.hpp"
#include "msg/refine.hpp"
#include "msg/symmetry.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef MSG_DATA_DIR
#define MSG_DATA_DIR "data"
#endif

namespace msg {

std::string to_string(EntryKind k) {
    switch (k) {
        case EntryKind::matchstick: return "matchstick";
        case EntryKind::pattern: return "pattern";
        case EntryKind::outline: return "outline";
        case EntryKind::stub: return "stub";
    }
    return "?";
}

namespace {

DegreeProfile profile(int m, int n, int count_m, int count_n) {
    return {m, n, count_m, count_n};
}

std::vector<CatalogEntry> make_catalog() {
    std::vector<CatalogEntry> c;

    {
        CatalogEntry e;
        e.id = "fig1a";
        e.kind = EntryKind::pattern;
        e.seg_file = "fig1a.seg";
        e.vertices = 12;
        e.edges = 21;
        e.profile = profile(2, 4, 3, 9);
        e.rigid = true;
        e.symmetry = "D1";
        e.motifs = {{"kite", 1}};
        e.notes = "kite: rigid building block, isostatic (E = 2V-3), one mirror axis";
        c.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "fig1b";
        e.kind = EntryKind::pattern;
        e.seg_file = "fig1b.seg";
        e.vertices = 22;
        e.edges = 41;
        e.rigid = true;
        e.symmetry = "D1";
        e.motifs = {{"triplet-kite", 1}};
        e.notes = "triplet kite: rigid building block with degrees 2, 3 and 4, isostatic";
        c.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "fig1c";
        e.kind = EntryKind::pattern;
        e.seg_file = "fig1c.seg";
        e.vertices = 22;
        e.edges = 42;
        e.profile = profile(2, 4, 2, 20);
        e.rigid = true;
        e.motifs = {{"double-kite", 1}, {"kite", 2}};
        e.notes = "double kite: two kites joined, only two degree-2 vertices, one "
                  "redundant constraint";
        c.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "fig1d";
        e.kind = EntryKind::pattern;
        e.seg_file = "fig1d.seg";
        e.vertices = 22;
        e.edges = 42;
        e.profile = profile(2, 4, 2, 20);
        e.rigid = true;
        e.motifs = {{"reverse-double-kite", 1}, {"kite", 2}};
        e.notes = "reverse double kite: the second way of joining two kites";
        c.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "fig2a";
        e.kind = EntryKind::matchstick;
        e.seg_file = "fig2a.seg";
        e.vertices = 63;
        e.edges = 126;
        e.profile = profile(4, 4, 63, 0);
        e.rigid = true;
        e.symmetry = "C1";
        e.motifs = {{"kite", 6}};
        e.notes = "asymmetric but not completely asymmetric: its six kites can be "
                  "rearranged into the order-3 symmetric fig2b";
        c.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "fig2b";
        e.kind = EntryKind::matchstick;
        e.seg_file = "fig2b.seg";
        e.vertices = 63;
        e.edges = 126;
        e.profile = profile(4, 4, 63, 0);
        e.rigid = true;
        e.rotation_order = 3;
        e.motifs = {{"kite", 6}};
        e.notes = "symmetric rearrangement of fig2a's six kites";
        c.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "fig3a";
        e.kind = EntryKind::matchstick;
        e.seg_file = "fig3a.seg";
        e.vertices = 60;
        e.edges = 121;
        e.profile = profile(4, 5, 58, 2);
        e.rigid = true;
        e.symmetry = "C1";
        e.shape_point_symmetric = true;
        e.notes = "asymmetric graph with a point-symmetric outer shape (see "
                  "fig3b-outline)";
        c.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "fig3b-outline";
        e.kind = EntryKind::outline;
        e.seg_file = "fig3b-outline.seg";
        e.vertices = 22;
        e.edges = 28;
        e.notes = "outer shape of fig3a drawn with diagonals; not a matchstick graph";
        c.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "fig4";
        e.kind = EntryKind::matchstick;
        e.seg_file = "fig4.seg";
        e.vertices = 66;
        e.edges = 132;
        e.profile = profile(4, 4, 66, 0);
        e.rigid = true;
        e.symmetry = "C1";
        e.shape_trivial = true;
        e.notes = "completely asymmetric 4-regular; smallest known symmetric "
                  "counterpart (the Harborth graph) has 104 edges";
        c.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "fig5";
        e.kind = EntryKind::matchstick;
        e.seg_file = "fig5.seg";
        e.vertices = 62;
        e.edges = 125;
        e.profile = profile(4, 5, 60, 2);
        e.rigid = true;
        e.symmetry = "C1";
        e.shape_trivial = true;
        e.motifs = {{"triplet-kite", 2}};
        e.notes = "completely asymmetric (4;5); smallest known symmetric counterpart "
                  "has 115 edges";
        c.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "fig6";
        e.kind = EntryKind::matchstick;
        e.seg_file = "fig6.seg";
        e.vertices = 63;
        e.edges = 128;
        e.profile = profile(4, 6, 61, 2);
        e.rigid = true;
        e.symmetry = "C1";
        e.shape_trivial = true;
        e.motifs = {{"triplet-kite", 2}};
        e.notes = "completely asymmetric (4;6), variant 1; smallest known symmetric "
                  "counterpart has 117 edges";
        c.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "fig7";
        e.kind = EntryKind::matchstick;
        e.seg_file = "fig7.seg";
        e.vertices = 63;
        e.edges = 128;
        e.profile = profile(4, 6, 61, 2);
        e.rigid = true;
        e.symmetry = "C1";
        e.shape_trivial = true;
        e.motifs = {{"triplet-kite", 2}};
        e.notes = "completely asymmetric (4;6), variant 2 with a different internal "
                  "geometry";
        c.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "fig8";
        e.kind = EntryKind::matchstick;
        e.seg_file = "fig8.seg";
        e.vertices = 93;
        e.edges = 189;
        e.profile = profile(4, 7, 91, 2);
        e.rigid = true;
        e.symmetry = "C1";
        e.shape_trivial = true;
        e.notes = "completely asymmetric (4;7); smallest known symmetric counterpart "
                  "has 159 edges";
        c.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "fig9";
        e.kind = EntryKind::matchstick;
        e.seg_file = "fig9.seg";
        e.vertices = 87;
        e.edges = 176;
        e.profile = profile(4, 8, 86, 1);
        e.rigid = true;
        e.symmetry = "C1";
        e.shape_trivial = true;
        e.motifs = {{"double-kite", 2}};
        e.notes = "completely asymmetric (4;8) built from two double-kites, two kites "
                  "and two slightly modified kites; smallest known symmetric "
                  "counterpart has 126 edges";
        c.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "fig10";
        e.kind = EntryKind::stub;
        e.vertices = 136;
        e.edges = 277;
        e.notes = "(4;9)-regular; no source coordinate data; smallest known symmetric "
                  "counterpart has 273 edges";
        c.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "fig11";
        e.kind = EntryKind::stub;
        e.vertices = 114;
        e.edges = 231;
        e.notes = "(4;10)-regular; no source coordinate data; built from three double "
                  "kites, two reverse double kites and one kite; also the smallest "
                  "known (4;10) example";
        c.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "fig12";
        e.kind = EntryKind::stub;
        e.vertices = 382;
        e.edges = 771;
        e.notes = "(4;11)-regular; no source coordinate data; fig13 is the detail "
                  "around its right degree-11 vertex";
        c.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "fig13";
        e.kind = EntryKind::pattern;
        e.seg_file = "fig13.seg";
        e.vertices = 91;
        e.edges = 179;
        e.rigid = true;
        e.fan_angles = {32.362519660072210, 40.49207000332465, 25.382433534610843,
                        34.890820876760450, 32.21894760945070, 34.514335947363630,
                        29.108515978283318, 36.31491131809427, 29.550687898877964,
                        35.065359484316880, 30.09939768884507};
        e.notes = "rigid detail around the degree-11 vertex of fig12; isostatic, so "
                  "removing any single edge makes it flexible; the two red edges "
                  "anchor the angle fan (vertex/edge counts from this transcription)";
        c.push_back(e);
    }
    return c;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = make_catalog();
    return entries;
}

const CatalogEntry* find_entry(std::string_view id) {
    for (const CatalogEntry& e : catalog())
        if (e.id == id) return &e;
    return nullptr;
}

std::string data_dir() {
    if (const char* env = std::getenv("MSG_CATALOG_DIR"); env && *env) return env;
    return MSG_DATA_DIR;
}

SegmentList load_entry_segments(const CatalogEntry& entry) {
    if (!entry.has_data())
        throw InputError("catalog entry '" + entry.id + "' has no segment data");
    const std::string path = data_dir() + "/" + entry.seg_file;
    std::ifstream in(path);
    if (!in) throw InputError("cannot open catalog file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_segments(ss.str());
}

std::vector<Pattern> load_patterns(const TolerancePolicy& tol) {
    static const std::pair<const char*, const char*> sources[] = {
        {"fig1a", "kite"},
        {"fig1b", "triplet-kite"},
        {"fig1c", "double-kite"},
        {"fig1d", "reverse-double-kite"},
    };
    std::vector<Pattern> out;
    for (const auto& [id, name] : sources) {
        const CatalogEntry* entry = find_entry(id);
        if (!entry) throw InputError(std::string("missing pattern entry ") + id);
        Embedding built = build_embedding(load_entry_segments(*entry), tol);
        RefineResult refined = refine(built, tol);
        if (!refined.converged)
            throw ConvergenceError(std::string("pattern ") + id + " did not refine");
        Pattern p;
        p.name = name;
        p.embedding = std::move(refined.embedding);
        const SymmetryReport sym = isometry_group(p.embedding, tol);
        p.automorphism_count = sym.rotation_order * (sym.mirror_count() > 0 ? 2 : 1);
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace msg
