// msg: reconstruct, refine, verify and analyze matchstick graphs.
#include "msg/catalog.hpp"
#include "msg/errors.hpp"
#include "msg/motifs.hpp"
#include "msg/refine.hpp"
#include "msg/render.hpp"
#include "msg/report.hpp"
#include "msg/rigidity.hpp"
#include "msg/symmetry.hpp"
#include "msg/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace msg;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << content;
}

// Resolve a CLI input: catalog id, .seg file or .mge file.
struct Input {
    const CatalogEntry* entry = nullptr; // set when the name is a catalog id
    Embedding embedding;                 // raw (unrefined)
};

Input resolve(const std::string& name, const TolerancePolicy& tol) {
    Input in;
    if (const CatalogEntry* entry = find_entry(name)) {
        in.entry = entry;
        if (entry->kind == EntryKind::stub)
            throw InputError("catalog entry '" + name + "' has no data");
        const BuildMode mode = entry->kind == EntryKind::outline ? BuildMode::outline
                                                                 : BuildMode::matchstick;
        in.embedding = build_embedding(load_entry_segments(*entry), tol, mode);
        if (in.embedding.name.empty()) in.embedding.name = entry->id;
        return in;
    }
    if (name.ends_with(".seg")) {
        in.embedding = build_embedding(parse_segments(read_file(name)), tol);
        return in;
    }
    if (name.ends_with(".mge")) {
        in.embedding = read_embedding(read_file(name));
        return in;
    }
    throw InputError("'" + name + "' is neither a catalog id nor a .seg/.mge file");
}

std::optional<std::pair<int, int>> parse_profile(const std::string& text) {
    if (text.empty()) return std::nullopt;
    int m = 0, n = 0;
    if (std::sscanf(text.c_str(), "%d,%d", &m, &n) != 2 || m <= 0 || n <= 0)
        throw InputError("--profile expects 'm,n'");
    return {{m, n}};
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"matchstick graph toolkit"};
    app.require_subcommand(1);

    TolerancePolicy tol;
    app.add_option("--snap-tol", tol.snap_tol, "endpoint snapping radius (units)");
    app.add_option("--unit-tol", tol.unit_tol_raw, "relative raw unit-length band");
    app.add_option("--unit-tol-refined", tol.unit_tol_refined,
                   "absolute refined unit-length band");
    app.add_option("--rank-tol", tol.rank_tol, "relative singular-value cutoff");
    app.add_option("--sep-warn", tol.sep_warn, "near-contact warning separation");
    app.add_option("--sep-fail", tol.sep_fail, "contact separation threshold");
    app.add_option("--angle-tol", tol.angle_tol, "collinear-overlap angle (degrees)");

    std::string in_name, out_path, profile_text;

    auto* ingest = app.add_subcommand("ingest", "build an embedding from a segment list");
    ingest->add_option("input", in_name, "catalog id or .seg file")->required();
    ingest->add_option("-o,--output", out_path, "write the embedding (.mge)");

    auto* refine_cmd = app.add_subcommand("refine", "refine edge lengths to unit");
    refine_cmd->add_option("input", in_name, "catalog id, .seg or .mge file")->required();
    refine_cmd->add_option("-o,--output", out_path, "write the refined embedding (.mge)");

    auto* verify_cmd = app.add_subcommand("verify", "matchstick verification checks");
    verify_cmd->add_option("input", in_name, "catalog id, .seg or .mge file")->required();
    verify_cmd->add_option("--profile", profile_text, "degree profile 'm,n'");

    auto* rigidity_cmd = app.add_subcommand("rigidity", "infinitesimal rigidity analysis");
    rigidity_cmd->add_option("input", in_name, "catalog id, .seg or .mge file")->required();
    bool scan = false;
    rigidity_cmd->add_flag("--scan", scan, "also scan single-edge removals");

    auto* symmetry_cmd = app.add_subcommand("symmetry", "isometry group and outer shape");
    symmetry_cmd->add_option("input", in_name, "catalog id, .seg or .mge file")->required();

    auto* motifs_cmd = app.add_subcommand("motifs", "locate the rigid building blocks");
    motifs_cmd->add_option("input", in_name, "catalog id, .seg or .mge file")->required();

    auto* report_cmd = app.add_subcommand("report", "full pipeline report");
    report_cmd->add_option("input", in_name, "catalog id, .seg or .mge file")->required();
    bool expect = false;
    report_cmd->add_flag("--expect", expect, "compare against the catalog expectations");

    auto* render_cmd = app.add_subcommand("render", "emit an SVG drawing");
    render_cmd->add_option("input", in_name, "catalog id, .seg or .mge file")->required();
    render_cmd->add_option("-o,--output", out_path, "output .svg path");
    int highlight_degree = -1;
    render_cmd->add_option("--highlight-degree", highlight_degree,
                           "fill vertices of this degree in red");

    auto* catalog_cmd = app.add_subcommand("catalog", "list the bundled graphs");

    CLI11_PARSE(app, argc, argv);

    try {
        validate(tol);
        if (*ingest) {
            SegmentList sl;
            BuildMode mode = BuildMode::matchstick;
            if (const CatalogEntry* entry = find_entry(in_name)) {
                if (entry->kind == EntryKind::stub)
                    throw InputError("catalog entry '" + in_name + "' has no data");
                if (entry->kind == EntryKind::outline) mode = BuildMode::outline;
                sl = load_entry_segments(*entry);
            } else {
                sl = parse_segments(read_file(in_name));
            }
            const Embedding e = build_embedding(sl, tol, mode);
            if (mode == BuildMode::matchstick)
                std::printf("V=%d E=%d unit=%.6f\n", e.vertex_count(), e.edge_count(),
                            estimate_unit(sl, tol));
            else
                std::printf("V=%d E=%d\n", e.vertex_count(), e.edge_count());
            if (!out_path.empty()) write_file(out_path, write_embedding(e));
            return exit_ok;
        }

        if (*refine_cmd) {
            Input in = resolve(in_name, tol);
            RefineResult r = refine(in.embedding, tol);
            std::printf("converged: %s\niterations: %d\nfinal_residual: %.3e\n"
                        "displacement: %.3e\n",
                        r.converged ? "true" : "false", r.iterations, r.final_residual,
                        r.displacement);
            if (!out_path.empty()) write_file(out_path, write_embedding(r.embedding));
            return r.converged ? exit_ok : exit_verification_failure;
        }

        if (*verify_cmd) {
            Input in = resolve(in_name, tol);
            RefineResult r = refine(in.embedding, tol);
            auto prof = parse_profile(profile_text);
            if (!prof && in.entry && in.entry->profile)
                prof = {{in.entry->profile->m, in.entry->profile->n}};
            if (!prof)
                throw InputError("no degree profile known; pass --profile m,n");
            const VerificationReport rep =
                verify_matchstick(r.embedding, prof->first, prof->second, tol);
            std::printf("unit_ok: %s\nmax_abs_deviation: %.3e\nplanarity_ok: %s\n"
                        "violations: %zu\nnear_contacts: %zu\nprofile_ok: %s\n"
                        "count_m: %d\ncount_n: %d\nconnected: %s\nsummary: %s\n",
                        rep.unit.ok ? "true" : "false", rep.unit.max_abs_deviation,
                        rep.noncrossing.ok ? "true" : "false", rep.noncrossing.violations.size(),
                        rep.noncrossing.near_contacts.size(),
                        rep.profile.ok ? "true" : "false", rep.profile.profile.count_m,
                        rep.profile.profile.count_n, rep.connected ? "true" : "false",
                        rep.pass ? "pass" : "fail");
            return rep.pass ? exit_ok : exit_verification_failure;
        }

        if (*rigidity_cmd) {
            Input in = resolve(in_name, tol);
            RefineResult r = refine(in.embedding, tol);
            const RigidityResult rig = analyze(r.embedding, tol);
            std::printf("rank: %d\ndof: %d\nrigid: %s\n", rig.rank, rig.dof,
                        rig.rigid ? "true (infinitesimally)" : "false (infinitesimal flex found)");
            if (scan) {
                int flexible_after = 0;
                for (const EdgeRemoval& er : edge_removal_scan(r.embedding, tol)) {
                    if (er.dof_after >= 1 || er.disconnects) ++flexible_after;
                    std::printf("remove %d-%d: dof %d%s\n", er.edge.u, er.edge.v, er.dof_after,
                                er.disconnects ? " (disconnects)" : "");
                }
                std::printf("flexible_after_removal: %d of %d\n", flexible_after,
                            r.embedding.edge_count());
            }
            return exit_ok;
        }

        if (*symmetry_cmd) {
            Input in = resolve(in_name, tol);
            RefineResult r = refine(in.embedding, tol);
            const SymmetryReport sym = isometry_group(r.embedding, tol);
            std::printf("group: %s\nrotation_order: %d\nmirrors: %d\npoint_symmetric: %s\n",
                        sym.group.c_str(), sym.rotation_order, sym.mirror_count(),
                        sym.point_symmetric ? "true" : "false");
            for (double a : sym.mirror_axes_deg) std::printf("mirror_axis_deg: %.6f\n", a);
            const OuterShape shape = outer_boundary(r.embedding);
            const SymmetryReport ss = shape_symmetry(shape, tol);
            std::printf("boundary_vertices: %zu\nshape_group: %s\nshape_point_symmetric: %s\n",
                        shape.cycle.size(), ss.group.c_str(),
                        ss.point_symmetric ? "true" : "false");
            return exit_ok;
        }

        if (*motifs_cmd) {
            Input in = resolve(in_name, tol);
            RefineResult r = refine(in.embedding, tol);
            const std::vector<Pattern> patterns = load_patterns(tol);
            const MotifInventory inv = motif_inventory(r.embedding, patterns, tol);
            for (const PatternCount& pc : inv.counts)
                std::printf("%s: matches %d, disjoint %d, near %d\n", pc.pattern.c_str(),
                            pc.matches, pc.disjoint, pc.near_matches);
            std::printf("coverage: %.3f\n", inv.edge_coverage);
            for (const Pattern& p : patterns) {
                for (const MotifMatch& m : find_motifs(r.embedding, p, tol)) {
                    std::printf("%s match%s:", p.name.c_str(),
                                m.reflected ? " (reflected)" : "");
                    for (int v : m.host_vertices()) std::printf(" %d", v);
                    std::printf("\n");
                }
            }
            return exit_ok;
        }

        if (*report_cmd) {
            ReportOptions opts;
            opts.tol = tol;
            opts.expect = expect;
            if (const CatalogEntry* entry = find_entry(in_name)) {
                const ReportResult res = run_report_entry(*entry, opts);
                std::cout << res.text;
                return res.exit_code;
            }
            Input in = resolve(in_name, tol);
            const ReportResult res = run_report_embedding(in.embedding, opts);
            std::cout << res.text;
            return res.exit_code;
        }

        if (*render_cmd) {
            Input in = resolve(in_name, tol);
            RenderStyle style;
            style.highlight_degree = highlight_degree;
            emit(render_svg(in.embedding, style), out_path);
            return exit_ok;
        }

        if (*catalog_cmd) {
            std::printf("%-14s %-10s %5s %5s  %s\n", "id", "kind", "V", "E", "notes");
            for (const CatalogEntry& e : catalog())
                std::printf("%-14s %-10s %5d %5d  %s\n", e.id.c_str(),
                            to_string(e.kind).c_str(), e.vertices, e.edges, e.notes.c_str());
            return exit_ok;
        }
    } catch (const ParseError& err) {
        std::cerr << "parse error: " << err.what() << "\n";
        return exit_input_error;
    } catch (const ConvergenceError& err) {
        std::cerr << "convergence error: " << err.what() << "\n";
        return exit_verification_failure;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_input_error;
    }
    return exit_ok;
}
