#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gwx/hodge.hpp"
#include "gwx/partitions.hpp"
#include "gwx/rat.hpp"
#include "gwx/series.hpp"

namespace gwx {

enum class InvariantKind { GW, uGW, GV };

std::string to_string(InvariantKind kind);

/// Per-class table of invariants indexed by genus. Genera above g_max are
/// unknown, not zero. `c` is the intersection number of the class with
/// c1(X); `primitive` is caller-declared.
struct GenusTable {
    InvariantKind kind = InvariantKind::GW;
    int c = 0;
    bool primitive = false;
    int g_max = 0;
    std::map<int, Rat> values;

    /// Throws PreconditionViolation if a key is negative or above g_max.
    void validate() const;
    Rat value(int genus) const;  // zero when absent
    friend bool operator==(const GenusTable&, const GenusTable&) = default;
};

/// (sin(u/2)/(u/2))^{2g - 2 + c} + O(u^order).
RatSeries sine_factor(int g, int c, int order);

/// GW_h = sum_{g <= h} uGW_g [u^{2(h-g)}] S^{2g-2+c}. Absent input genera
/// count as zero; the output covers genera from the lowest input key to g_max.
GenusTable gw_from_ugw(const GenusTable& t);

/// Inverse of gw_from_ugw. Input keys must be contiguous from the lowest
/// present genus up to g_max (MissingGenus otherwise).
GenusTable ugw_from_gw(const GenusTable& t);

/// sum_{a1, a2} m2^{a2}/a2! * ff(m1 - a2, a1)/a1! * t1^{a1} t2^{a2}, with
/// t1 = S^2 - 1 and t2 = S^2 log S, truncated at u^order.
RatSeries eq_sum(const Rat& m1, const Rat& m2, int order);

/// (1 + t1)^{m1} exp(m2 log S), the closed form of eq_sum for integer m1.
RatSeries eq_sum_closed_form(long m1, const Rat& m2, int order);

/// Wall-crossing vertex data consumed by the raw sum: mu0[g] is mu_{g,0},
/// mu1[g] is mu_{g,1}; index 0 holds zeros.
struct MuTable {
    std::vector<MuValue> mu0;
    std::vector<Rat> mu1;

    int max_genus() const { return static_cast<int>(mu1.size()) - 1; }

    /// Values from the closed-form generating functions, genera 0..max_genus.
    static MuTable from_closed_forms(int max_genus);
};

/// Multiplier series of the threefold wall-crossing sum over a genus-g0
/// bracket with n primary insertions, built term by term from
/// ThreefoldPartitions: marked vertices contribute C(n,k1) times a
/// multinomial times prod mu_{g,1}; unmarked vertices insert
/// mu_{g,0}(-psi + H), reduced by the dilaton equation (psi parts, applied
/// first) and the divisor equations (H -> 2g0 - 2, c1 -> c). The u^{2d}
/// coefficient is the total weight of partitions adding genus d; the
/// constant term is 1.
RatSeries correction_raw_sum(int g0, int n, int c, int order);
RatSeries correction_raw_sum(int g0, int n, int c, int order, const MuTable& mu);

struct CellResult {
    int g0 = 0;
    int n = 0;
    int c = 0;
    bool passed = true;
    std::optional<int> mismatch_exponent{};
    std::string detail{};
};

struct IdentityReport {
    bool passed = true;
    std::vector<CellResult> cells;  // lexicographic in (g0, n, c)
    std::optional<CellResult> first_failure;
    int order = 0;
    std::string note;
};

/// Asserts correction_raw_sum(g0, n, c) == sine_factor(g0, c) coefficientwise
/// below u^order for every cell of the grid. Cells run in parallel; the report
/// order does not depend on scheduling.
IdentityReport verify_raw_equals_closed(int g0_max, int n_max, int c_min, int c_max, int order);
IdentityReport verify_raw_equals_closed(int g0_max, int n_max, int c_min, int c_max, int order,
                                        const MuTable& mu);

/// Compares eq_sum against its closed form on the (m1, m2) grid; cells are
/// reported with g0 = 0, n = m1, c = m2.
IdentityReport verify_eq_sum_grid(int m1_min, int m1_max, int m2_min, int m2_max, int order);

}  // namespace gwx
