#pragma once

#include "msg/embedding.hpp"

#include <utility>
#include <vector>

namespace msg {

struct UnitCheck {
    bool ok = false;
    double max_abs_deviation = 0.0;
};
UnitCheck check_unit_lengths(const Embedding& e, double tol);

struct EdgePairContact {
    int edge_a = 0; // edge indices, edge_a < edge_b
    int edge_b = 0;
    double separation = 0.0;
};

struct NoncrossingCheck {
    bool ok = false;
    std::vector<EdgePairContact> violations;    // separation <= sep_fail, or
                                                // collinear overlap at a shared vertex
    std::vector<EdgePairContact> near_contacts; // separation in (sep_fail, sep_warn]
};
NoncrossingCheck check_noncrossing(const Embedding& e, const TolerancePolicy& tol);

struct VerificationReport {
    UnitCheck unit;
    NoncrossingCheck noncrossing;
    ProfileCheck profile;
    bool connected = false;
    bool pass = false; // unit && noncrossing && profile && connected
};

VerificationReport verify_matchstick(const Embedding& e, int m, int n,
                                     const TolerancePolicy& tol = {});

} // namespace msg
