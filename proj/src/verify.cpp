#include "msg/verify.hpp"

#include <algorithm>
#include <cmath>

namespace msg {

UnitCheck check_unit_lengths(const Embedding& e, double tol) {
    UnitCheck uc;
    for (int i = 0; i < e.edge_count(); ++i)
        uc.max_abs_deviation = std::max(uc.max_abs_deviation, std::abs(e.edge_length(i) - 1.0));
    uc.ok = uc.max_abs_deviation <= tol;
    return uc;
}

NoncrossingCheck check_noncrossing(const Embedding& e, const TolerancePolicy& tol) {
    NoncrossingCheck nc;
    const int m = e.edge_count();
    for (int a = 0; a < m; ++a) {
        const Edge ea = e.edges[a];
        const Segment sa{e.vertices[ea.u], e.vertices[ea.v]};
        for (int b = a + 1; b < m; ++b) {
            const Edge eb = e.edges[b];
            const bool share_u = ea.u == eb.u || ea.u == eb.v;
            const bool share_v = ea.v == eb.u || ea.v == eb.v;
            if (share_u || share_v) {
                // Adjacent edges may touch only at the shared vertex; a near-zero
                // angle between them means two sticks lying on top of each other.
                const int pivot = share_u ? ea.u : ea.v;
                const int wa = share_u ? ea.v : ea.u;
                const int wb = eb.u == pivot ? eb.v : eb.u;
                double gap = std::abs(direction_angle(e.vertices[pivot], e.vertices[wa]) -
                                      direction_angle(e.vertices[pivot], e.vertices[wb]));
                if (gap > 180.0) gap = 360.0 - gap;
                if (gap < tol.angle_tol) nc.violations.push_back({a, b, 0.0});
                continue;
            }
            const Segment sb{e.vertices[eb.u], e.vertices[eb.v]};
            const double sep = segment_separation(sa, sb);
            if (sep <= tol.sep_fail)
                nc.violations.push_back({a, b, sep});
            else if (sep <= tol.sep_warn)
                nc.near_contacts.push_back({a, b, sep});
        }
    }
    nc.ok = nc.violations.empty();
    return nc;
}

VerificationReport verify_matchstick(const Embedding& e, int m, int n,
                                     const TolerancePolicy& tol) {
    VerificationReport r;
    r.unit = check_unit_lengths(e, tol.unit_tol_refined);
    r.noncrossing = check_noncrossing(e, tol);
    r.profile = check_degree_profile(e, m, n);
    r.connected = is_connected(e);
    r.pass = r.unit.ok && r.noncrossing.ok && r.profile.ok && r.connected;
    return r;
}

} // namespace msg
