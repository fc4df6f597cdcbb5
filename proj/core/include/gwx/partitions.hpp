#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "gwx/rat.hpp"

namespace gwx {

/// Index of one term of the threefold wall-crossing sum: the genus g0 left on
/// the bracket, the genera attached through marked points (g1, length <= n)
/// and the genera attached through unmarked vertices (g2). Both lists are
/// weakly decreasing with positive entries.
struct ThreefoldPartition {
    int g0 = 0;
    std::vector<int> g1;
    std::vector<int> g2;

    int genus() const;
    friend auto operator<=>(const ThreefoldPartition&, const ThreefoldPartition&) = default;
    friend bool operator==(const ThreefoldPartition&, const ThreefoldPartition&) = default;
};

/// One end component of a stable partition: genus, number of markings (0 or
/// 1 in the threefold regime) and a weakly decreasing ramification profile.
struct StablePart {
    int genus = 0;
    int markings = 0;
    std::vector<int> eta;

    int eta_size() const;
    int eta_length() const { return static_cast<int>(eta.size()); }
    friend auto operator<=>(const StablePart&, const StablePart&) = default;
    friend bool operator==(const StablePart&, const StablePart&) = default;
};

struct StablePartition {
    int g0 = 0;
    std::vector<StablePart> parts;  // canonical: sorted descending

    friend auto operator<=>(const StablePartition&, const StablePartition&) = default;
    friend bool operator==(const StablePartition&, const StablePartition&) = default;
};

/// total! / prod(parts[i]!). Throws PartsMismatch if the parts do not sum to
/// total, PreconditionViolation on negative entries.
BigInt multinomial(int total, std::span<const int> parts);

/// Multiplicities of the distinct values of a list, in order of first
/// appearance in sorted order. multiplicities({3,1,1}) == {1,2}.
std::vector<int> multiplicities(std::span<const int> values);

/// All weakly decreasing lists of positive integers summing to `total`, with
/// every part <= max_part and at most max_length parts.
std::vector<std::vector<int>> integer_partitions(int total, int max_part, int max_length);

/// Every ThreefoldPartition with g0 + |g1| + |g2| == g and len(g1) <= n, except
/// the trivial one (g0 == g, both lists empty). Sorted, duplicate-free.
std::vector<ThreefoldPartition> enumerate_threefold_partitions(int g, int n);

/// Part-level constraint 2 g_i - 2 + |eta| + l(eta) + n_i/2 == d0.
bool satisfies_wall_weight(const StablePart& part, const Rat& d0);

/// Genus constraint sum(g_i + l(eta_i)) + g0 - k == g.
bool satisfies_genus_sum(const StablePartition& p, int g);

/// All stable partitions of (g, n) at wall weight d0 with k >= 1 parts, each
/// |eta_i| <= eta_cap, sum n_i <= n, g0 >= 0 and k <= max_length.
///
/// Parts of genus 0 with a single ramification point leave the genus sum
/// unchanged, so without a length cap the set can be infinite; the default
/// cap is g + n + 1. Throws PreconditionViolation when d0 <= 0.
std::vector<StablePartition> enumerate_stable_partitions(int g, int n, const Rat& d0, int eta_cap,
                                                         std::optional<int> max_length = {});

}  // namespace gwx
