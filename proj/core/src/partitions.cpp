#include "gwx/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "gwx/errors.hpp"

namespace gwx {

int ThreefoldPartition::genus() const {
    return g0 + std::accumulate(g1.begin(), g1.end(), 0) + std::accumulate(g2.begin(), g2.end(), 0);
}

int StablePart::eta_size() const { return std::accumulate(eta.begin(), eta.end(), 0); }

BigInt multinomial(int total, std::span<const int> parts) {
    if (total < 0) throw PreconditionViolation("multinomial: negative total");
    long sum = 0;
    for (int p : parts) {
        if (p < 0) throw PreconditionViolation("multinomial: negative part");
        sum += p;
    }
    if (sum != total) {
        throw PartsMismatch("multinomial: parts sum to " + std::to_string(sum) + ", expected " +
                            std::to_string(total));
    }
    BigInt out = factorial(static_cast<unsigned long>(total));
    for (int p : parts) out /= factorial(static_cast<unsigned long>(p));
    return out;
}

std::vector<int> multiplicities(std::span<const int> values) {
    std::vector<int> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> out;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        out.push_back(static_cast<int>(j - i));
        i = j;
    }
    return out;
}

std::vector<std::vector<int>> integer_partitions(int total, int max_part, int max_length) {
    std::vector<std::vector<int>> out;
    if (total < 0 || max_length < 0) return out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        if (static_cast<int>(current.size()) == max_length) return;
        for (int part = std::min(remaining, cap); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    rec(total, max_part);
    return out;
}

std::vector<ThreefoldPartition> enumerate_threefold_partitions(int g, int n) {
    if (g < 0) throw PreconditionViolation("enumerate_threefold_partitions: g must be non-negative");
    if (n < 0) throw PreconditionViolation("enumerate_threefold_partitions: n must be non-negative");
    std::vector<ThreefoldPartition> out;
    for (int g0 = 0; g0 < g; ++g0) {
        const int rest = g - g0;
        for (int s1 = 0; s1 <= rest; ++s1) {
            for (auto& g1 : integer_partitions(s1, s1, n)) {
                for (auto& g2 : integer_partitions(rest - s1, rest - s1, rest - s1)) {
                    out.push_back({g0, g1, g2});
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool satisfies_wall_weight(const StablePart& part, const Rat& d0) {
    const Rat lhs = Rat(2L * part.genus - 2 + part.eta_size() + part.eta_length()) +
                    Rat(static_cast<long>(part.markings), 2L);
    return lhs == d0;
}

bool satisfies_genus_sum(const StablePartition& p, int g) {
    long sum = p.g0 - static_cast<long>(p.parts.size());
    for (const auto& part : p.parts) sum += part.genus + part.eta_length();
    return sum == g;
}

std::vector<StablePartition> enumerate_stable_partitions(int g, int n, const Rat& d0, int eta_cap,
                                                         std::optional<int> max_length) {
    if (d0.sign() <= 0) throw PreconditionViolation("enumerate_stable_partitions: wall weight must be positive");
    if (n < 0) throw PreconditionViolation("enumerate_stable_partitions: n must be non-negative");
    const int length_cap = max_length.value_or(g + n + 1);

    // Candidate parts: every (eta, n_i) with |eta| <= cap fixes g_i uniquely.
    std::vector<StablePart> candidates;
    for (int size = 1; size <= eta_cap; ++size) {
        for (auto& eta : integer_partitions(size, size, size)) {
            for (int marks = 0; marks <= std::min(1, n); ++marks) {
                // 2 g_i = d0 + 2 - |eta| - l(eta) - marks/2
                const Rat twice_genus = d0 + Rat(2L - size - static_cast<long>(eta.size())) -
                                        Rat(static_cast<long>(marks), 2L);
                if (!twice_genus.is_integer() || twice_genus.sign() < 0) continue;
                const long tg = twice_genus.num().get_si();
                if (tg % 2 != 0) continue;
                StablePart part{static_cast<int>(tg / 2), marks, eta};
                if (satisfies_wall_weight(part, d0)) candidates.push_back(std::move(part));
            }
        }
    }
    std::sort(candidates.begin(), candidates.end(), std::greater<>());

    std::vector<StablePartition> out;
    std::vector<StablePart> chosen;
    // Multisets as non-increasing index sequences into the sorted candidates.
    std::function<void(std::size_t, int, long)> rec = [&](std::size_t from, int marks_used, long genus_used) {
        if (!chosen.empty()) {
            const long g0 = g - genus_used + static_cast<long>(chosen.size());
            if (g0 >= 0) {
                StablePartition sp{static_cast<int>(g0), chosen};
                if (satisfies_genus_sum(sp, g)) out.push_back(std::move(sp));
            }
        }
        if (static_cast<int>(chosen.size()) == length_cap) return;
        for (std::size_t i = from; i < candidates.size(); ++i) {
            const auto& c = candidates[i];
            if (marks_used + c.markings > n) continue;
            chosen.push_back(c);
            rec(i, marks_used + c.markings, genus_used + c.genus + c.eta_length());
            chosen.pop_back();
        }
    };
    rec(0, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace gwx
