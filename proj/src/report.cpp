#include "msg/report.hpp"

#include "msg/errors.hpp"
#include "msg/motifs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace msg {

namespace {

std::string num(double v, const char* fmt = "%.6g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

const char* yesno(bool b) { return b ? "true" : "false"; }

struct ReportBuilder {
    std::ostringstream out;
    std::vector<std::string> mismatches;
    bool expect = false;
    bool pipeline_ok = true; // refinement, verification and analysis succeeded

    void line(const std::string& key, const std::string& value) {
        out << key << ": " << value << "\n";
    }
    // Expectation comparison; recorded only under --expect.
    void check(const std::string& what, bool ok, const std::string& detail) {
        if (expect && !ok) mismatches.push_back(what + " (" + detail + ")");
    }
    void hard_fail() { pipeline_ok = false; }
    bool ok() const { return pipeline_ok && mismatches.empty(); }
};

// Angle fan anchored at the red-tagged edges around the highest-degree
// vertex: the fan starts at one red edge and proceeds so that its first angle
// is the angle between the two red edges. Both anchorings are tried and the
// one closer to the expected list wins.
void report_fan(ReportBuilder& rb, const Embedding& e, const std::vector<double>& expected) {
    const std::vector<int> deg = e.degrees();
    int center = 0;
    for (int v = 1; v < e.vertex_count(); ++v)
        if (deg[v] > deg[center]) center = v;

    std::vector<Edge> red;
    for (int i = 0; i < e.edge_count(); ++i) {
        const Edge edge = e.edges[i];
        if ((edge.u == center || edge.v == center) &&
            e.edge_tags[i].find("red") != std::string::npos)
            red.push_back(edge);
    }
    if (red.size() != 2) {
        rb.line("fan.error", "expected exactly 2 red edges at the fan vertex, found " +
                                 std::to_string(red.size()));
        rb.check("fan", false, "red anchor edges missing");
        return;
    }

    const int other_a = red[0].u == center ? red[0].v : red[0].u;
    const int other_b = red[1].u == center ? red[1].v : red[1].u;
    auto first_gap_is_red = [&](const AngleFan& fan, int start_other) {
        // first angle must end at the other red edge
        const double a0 = direction_angle(e.vertices[center], e.vertices[start_other]);
        const int mate = start_other == other_a ? other_b : other_a;
        const double a1 = direction_angle(e.vertices[center], e.vertices[mate]);
        double gap = fan.orientation == Orientation::ccw ? a1 - a0 : a0 - a1;
        gap = std::fmod(gap, 360.0);
        if (gap < 0) gap += 360.0;
        return std::abs(gap - fan.angles.front()) < 1e-9;
    };

    std::vector<AngleFan> anchored;
    for (const Edge& start : red) {
        for (Orientation o : {Orientation::ccw, Orientation::cw}) {
            AngleFan fan = angle_fan(e, center, start, o);
            const int start_other = start.u == center ? start.v : start.u;
            if (first_gap_is_red(fan, start_other)) anchored.push_back(fan);
        }
    }
    if (anchored.empty()) {
        rb.line("fan.error", "no anchored fan found");
        rb.check("fan", false, "anchoring failed");
        return;
    }

    auto max_err = [&](const AngleFan& fan) {
        if (expected.empty() || expected.size() != fan.angles.size()) return 0.0;
        double err = 0.0;
        for (std::size_t i = 0; i < expected.size(); ++i)
            err = std::max(err, std::abs(fan.angles[i] - expected[i]));
        return err;
    };
    const AngleFan* best = &anchored.front();
    for (const AngleFan& fan : anchored)
        if (max_err(fan) < max_err(*best)) best = &fan;

    double sum = 0.0;
    std::string angle_list;
    for (double a : best->angles) {
        sum += a;
        if (!angle_list.empty()) angle_list += " ";
        angle_list += num(a, "%.9f");
    }
    rb.line("fan.vertex", std::to_string(center));
    rb.line("fan.orientation", best->orientation == Orientation::cw ? "cw" : "ccw");
    rb.line("fan.angles", angle_list);
    rb.line("fan.sum", num(sum, "%.12f"));
    if (!expected.empty()) {
        const double err = max_err(*best);
        rb.line("fan.max_error_vs_expected", num(err, "%.3e"));
        rb.check("fan angles", expected.size() == best->angles.size() && err <= 1e-4,
                 "max error " + num(err, "%.3e"));
        rb.check("fan sum", std::abs(sum - 360.0) <= 1e-9,
                 "sum " + num(sum, "%.12f"));
    }
}

void report_pipeline(ReportBuilder& rb, const CatalogEntry* entry, const Embedding& raw,
                     const ReportOptions& opts) {
    const TolerancePolicy& tol = opts.tol;

    rb.line("vertices", std::to_string(raw.vertex_count()));
    rb.line("edges", std::to_string(raw.edge_count()));
    if (entry) {
        rb.check("vertices", raw.vertex_count() == entry->vertices,
                 "got " + std::to_string(raw.vertex_count()) + ", expected " +
                     std::to_string(entry->vertices));
        rb.check("edges", raw.edge_count() == entry->edges,
                 "got " + std::to_string(raw.edge_count()) + ", expected " +
                     std::to_string(entry->edges));
    }

    RefineResult refined;
    try {
        refined = refine(raw, tol);
    } catch (const Error& err) {
        rb.line("refine.error", err.what());
        rb.check("refine", false, err.what());
        rb.hard_fail();
        return;
    }
    rb.line("refine.converged", yesno(refined.converged));
    rb.line("refine.iterations", std::to_string(refined.iterations));
    rb.line("refine.final_residual", num(refined.final_residual, "%.3e"));
    rb.line("refine.displacement", num(refined.displacement, "%.3e"));
    rb.check("refine converged", refined.converged,
             "residual " + num(refined.final_residual, "%.3e"));
    if (!refined.converged) rb.hard_fail();
    const Embedding& e = refined.embedding;

    // Degree profile: explicit override first, then the catalog expectation.
    std::optional<std::pair<int, int>> prof = opts.profile;
    if (!prof && entry && entry->profile) prof = {{entry->profile->m, entry->profile->n}};

    const UnitCheck unit = check_unit_lengths(e, tol.unit_tol_refined);
    const NoncrossingCheck planar = check_noncrossing(e, tol);
    const bool connected = is_connected(e);
    rb.line("verify.unit_ok", yesno(unit.ok));
    rb.line("verify.unit_max_deviation", num(unit.max_abs_deviation, "%.3e"));
    rb.line("verify.planarity_ok", yesno(planar.ok));
    rb.line("verify.violations", std::to_string(planar.violations.size()));
    rb.line("verify.near_contacts", std::to_string(planar.near_contacts.size()));
    for (const EdgePairContact& nc : planar.near_contacts)
        rb.line("verify.near_contact",
                std::to_string(nc.edge_a) + "," + std::to_string(nc.edge_b) +
                    " separation " + num(nc.separation, "%.3e"));
    rb.line("verify.connected", yesno(connected));

    bool profile_ok = true;
    if (prof) {
        const ProfileCheck pc = check_degree_profile(e, prof->first, prof->second);
        rb.line("verify.profile",
                std::to_string(prof->first) + "," + std::to_string(prof->second));
        rb.line("verify.profile_ok", yesno(pc.ok));
        rb.line("verify.count_m", std::to_string(pc.profile.count_m));
        rb.line("verify.count_n", std::to_string(pc.profile.count_n));
        profile_ok = pc.ok;
        if (entry && entry->profile) {
            rb.check("degree profile", pc.ok, std::to_string(pc.offenders.size()) +
                                                  " offending vertices");
            if (pc.ok)
                rb.check("degree counts",
                         pc.profile.count_m == entry->profile->count_m &&
                             pc.profile.count_n == entry->profile->count_n,
                         "got " + std::to_string(pc.profile.count_m) + "/" +
                             std::to_string(pc.profile.count_n) + ", expected " +
                             std::to_string(entry->profile->count_m) + "/" +
                             std::to_string(entry->profile->count_n));
        }
    } else {
        rb.line("verify.profile", "skipped");
    }
    const bool pass = unit.ok && planar.ok && connected && profile_ok;
    rb.line("verify.pass", yesno(pass));
    rb.check("verification", pass, "unit/planarity/connectivity/profile");
    if (!pass) rb.hard_fail();

    RigidityResult rig;
    try {
        rig = analyze(e, tol);
        rb.line("rigidity.rank", std::to_string(rig.rank));
        rb.line("rigidity.dof", std::to_string(rig.dof));
        rb.line("rigidity.rigid", yesno(rig.rigid));
        if (entry && entry->rigid)
            rb.check("rigidity", rig.rigid == *entry->rigid,
                     "dof " + std::to_string(rig.dof));
    } catch (const Error& err) {
        rb.line("rigidity.error", err.what());
        rb.check("rigidity", false, err.what());
        rb.hard_fail();
    }

    try {
        const SymmetryReport sym = isometry_group(e, tol);
        rb.line("symmetry.group", sym.group);
        rb.line("symmetry.rotation_order", std::to_string(sym.rotation_order));
        rb.line("symmetry.mirrors", std::to_string(sym.mirror_count()));
        rb.line("symmetry.point_symmetric", yesno(sym.point_symmetric));
        if (!sym.mirror_axes_deg.empty()) {
            std::string axes;
            for (double a : sym.mirror_axes_deg) {
                if (!axes.empty()) axes += " ";
                axes += num(a, "%.6f");
            }
            rb.line("symmetry.mirror_axes_deg", axes);
        }
        if (entry && entry->symmetry)
            rb.check("symmetry group", sym.group == *entry->symmetry,
                     "got " + sym.group + ", expected " + *entry->symmetry);
        if (entry && entry->rotation_order)
            rb.check("rotation order", sym.rotation_order == *entry->rotation_order,
                     "got " + std::to_string(sym.rotation_order));

        const OuterShape shape = outer_boundary(e);
        const SymmetryReport ss = shape_symmetry(shape, tol);
        rb.line("boundary.vertices", std::to_string(shape.cycle.size()));
        rb.line("shape.group", ss.group);
        rb.line("shape.rotation_order", std::to_string(ss.rotation_order));
        rb.line("shape.mirrors", std::to_string(ss.mirror_count()));
        rb.line("shape.point_symmetric", yesno(ss.point_symmetric));
        if (entry && entry->shape_trivial)
            rb.check("shape symmetry trivial", ss.trivial() == *entry->shape_trivial,
                     "got " + ss.group);
        if (entry && entry->shape_point_symmetric)
            rb.check("shape point symmetric",
                     ss.point_symmetric == *entry->shape_point_symmetric,
                     "got " + std::string(yesno(ss.point_symmetric)));

        rb.line("asymmetric.rigid", yesno(rig.rigid));
        rb.line("asymmetric.graph_symmetry_trivial", yesno(sym.trivial()));
        rb.line("asymmetric.shape_symmetry_trivial", yesno(ss.trivial()));
        rb.line("asymmetric.decomposition",
                "not decided by this tool; see the motif inventory");
    } catch (const Error& err) {
        rb.line("symmetry.error", err.what());
        rb.check("symmetry", false, err.what());
        rb.hard_fail();
    }

    try {
        const std::vector<Pattern> patterns = load_patterns(tol);
        const MotifInventory inv = motif_inventory(e, patterns, tol);
        for (const PatternCount& pc : inv.counts) {
            rb.line("motifs." + pc.pattern + ".matches", std::to_string(pc.matches));
            rb.line("motifs." + pc.pattern + ".disjoint", std::to_string(pc.disjoint));
            rb.line("motifs." + pc.pattern + ".near", std::to_string(pc.near_matches));
            if (pc.matches > pc.disjoint)
                rb.line("motifs." + pc.pattern + ".surplus",
                        std::to_string(pc.matches - pc.disjoint) +
                            " overlapping placements beyond the disjoint set");
        }
        rb.line("motifs.coverage", num(inv.edge_coverage, "%.3f"));
        if (entry) {
            for (const MotifExpectation& me : entry->motifs) {
                int got = -1;
                for (const PatternCount& pc : inv.counts)
                    if (pc.pattern == me.pattern) got = pc.disjoint;
                rb.check("motif " + me.pattern, got == me.count,
                         "got " + std::to_string(got) + ", expected " +
                             std::to_string(me.count));
            }
        }
    } catch (const Error& err) {
        rb.line("motifs.error", err.what());
    }

    if (entry && !entry->fan_angles.empty()) report_fan(rb, e, entry->fan_angles);
}

} // namespace

ReportResult run_report_entry(const CatalogEntry& entry, const ReportOptions& opts) {
    ReportBuilder rb;
    rb.expect = opts.expect;
    rb.line("id", entry.id);
    rb.line("kind", to_string(entry.kind));
    if (!entry.notes.empty()) rb.line("notes", entry.notes);

    if (entry.kind == EntryKind::stub) {
        rb.line("vertices", std::to_string(entry.vertices));
        rb.line("edges", std::to_string(entry.edges));
        rb.line("status", "no source coordinate data; the recorded counts are "
                          "unverifiable");
        rb.line("summary", "no data");
        return {rb.out.str(), exit_no_data};
    }

    SegmentList sl = load_entry_segments(entry);
    rb.line("segments", std::to_string(sl.segments.size()));

    if (entry.kind == EntryKind::outline) {
        const Embedding outline =
            build_embedding(sl, opts.tol, BuildMode::outline);
        rb.line("vertices", std::to_string(outline.vertex_count()));
        rb.line("edges", std::to_string(outline.edge_count()));
        rb.line("status", "outline drawing; matchstick checks skipped");
        rb.check("vertices", outline.vertex_count() == entry.vertices,
                 "got " + std::to_string(outline.vertex_count()));
        rb.check("edges", outline.edge_count() == entry.edges,
                 "got " + std::to_string(outline.edge_count()));
        rb.line("summary", rb.ok() ? "pass" : "fail");
        return {rb.out.str(), rb.ok() ? exit_ok : exit_verification_failure};
    }

    rb.line("unit_estimate", num(estimate_unit(sl, opts.tol), "%.6f"));
    const Embedding raw = build_embedding(sl, opts.tol);
    report_pipeline(rb, &entry, raw, opts);

    if (opts.expect) {
        for (const std::string& m : rb.mismatches) rb.line("expect.mismatch", m);
        rb.line("expect.overall", rb.mismatches.empty() ? "ok" : "mismatch");
    }
    rb.line("summary", rb.ok() ? "pass" : "fail");
    return {rb.out.str(), rb.ok() ? exit_ok : exit_verification_failure};
}

ReportResult run_report_embedding(const Embedding& raw, const ReportOptions& opts) {
    ReportBuilder rb;
    rb.expect = false;
    if (!raw.name.empty()) rb.line("name", raw.name);
    report_pipeline(rb, nullptr, raw, opts);
    rb.line("summary", rb.ok() ? "pass" : "fail");
    return {rb.out.str(), rb.ok() ? exit_ok : exit_verification_failure};
}

} // namespace msg
