#include "gwx/gv.hpp"

#include "gwx/errors.hpp"

namespace gwx {

bool gv_identification_applies(int c, bool primitive) { return c > 0 || (c == 0 && primitive); }

namespace {

void require_covered(const GenusTable& t) {
    if (!gv_identification_applies(t.c, t.primitive)) {
        throw ClassNotCovered("class with c1.beta = " + std::to_string(t.c) +
                              (t.primitive ? " (primitive)" : " (not primitive)") +
                              " is neither Fano nor primitive Calabi-Yau; GV = uGW is not available");
    }
}

}  // namespace

GVReport inspect_gv(const GenusTable& gv) {
    if (gv.kind != InvariantKind::GV) throw KindMismatch("inspect_gv: expected a gv table");
    GVReport report;
    report.table = gv;
    for (const auto& [g, v] : gv.values) {
        if (!v.is_integer()) report.non_integral_genera.push_back(g);
        if (!v.is_zero()) report.largest_nonzero_genus = g;
    }
    report.integral = report.non_integral_genera.empty();
    report.truncation_caveat = "values known only up to genus " + std::to_string(gv.g_max) +
                               "; vanishing above it is not checked";
    return report;
}

GVReport gv_from_gw(const GenusTable& t) {
    if (t.kind != InvariantKind::GW) throw KindMismatch("gv_from_gw: expected a gw table");
    require_covered(t);
    GenusTable table = ugw_from_gw(t);
    table.kind = InvariantKind::GV;
    return inspect_gv(table);
}

GenusTable gw_from_gv(const GenusTable& t) {
    if (t.kind != InvariantKind::GV) throw KindMismatch("gw_from_gv: expected a gv table");
    require_covered(t);
    GenusTable relabeled = t;
    relabeled.kind = InvariantKind::uGW;
    return gw_from_ugw(relabeled);
}

}  // namespace gwx
