#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gwx/wallcross.hpp"

namespace gwx {

/// GV invariants equal the uGW ones when the class is Fano (c > 0) or a
/// primitive Calabi-Yau class (c == 0 and primitive).
bool gv_identification_applies(int c, bool primitive);

struct GVReport {
    GenusTable table;  // kind GV
    bool integral = true;
    std::vector<int> non_integral_genera;
    std::optional<int> largest_nonzero_genus;
    std::string truncation_caveat;
};

/// Inverts the sine-power transform and checks integrality. Finiteness is
/// only reported up to g_max. Throws ClassNotCovered outside the Fano and
/// primitive Calabi-Yau cases.
GVReport gv_from_gw(const GenusTable& t);

/// Forward transform of a GV table. Throws ClassNotCovered as above.
GenusTable gw_from_gv(const GenusTable& t);

/// Integrality and largest-nonzero-genus bookkeeping for an existing GV table.
GVReport inspect_gv(const GenusTable& gv);

}  // namespace gwx
