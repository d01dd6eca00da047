#pragma once

#include "msg/catalog.hpp"
#include "msg/refine.hpp"
#include "msg/rigidity.hpp"
#include "msg/symmetry.hpp"
#include "msg/verify.hpp"

#include <optional>
#include <string>
#include <utility>

namespace msg {

// Exit codes shared by the CLI and the report pipeline.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failure = 1;
inline constexpr int exit_input_error = 2;
inline constexpr int exit_no_data = 3;

struct ReportOptions {
    TolerancePolicy tol;
    std::optional<std::pair<int, int>> profile; // overrides the catalog profile
    bool expect = false;                        // compare against the catalog entry
};

struct ReportResult {
    std::string text; // line-oriented "key: value" report
    int exit_code = exit_ok;
};

// Full pipeline for a catalog entry: ingest -> refine -> verify -> rigidity ->
// symmetry -> motifs, with expectation comparison when requested. Stub entries
// yield exit_no_data and print the recorded counts as unverifiable metadata;
// outline entries report counts only.
ReportResult run_report_entry(const CatalogEntry& entry, const ReportOptions& opts);

// Same pipeline for a loose embedding (no expectations available).
ReportResult run_report_embedding(const Embedding& raw, const ReportOptions& opts);

} // namespace msg
