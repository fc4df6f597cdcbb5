#include "gwx/wallcross.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "gwx/errors.hpp"

namespace gwx {

std::string to_string(InvariantKind kind) {
    switch (kind) {
        case InvariantKind::GW: return "gw";
        case InvariantKind::uGW: return "ugw";
        case InvariantKind::GV: return "gv";
    }
    return "?";
}

void GenusTable::validate() const {
    if (g_max < 0) throw PreconditionViolation("g_max must be non-negative");
    for (const auto& [g, v] : values) {
        if (g < 0 || g > g_max) {
            throw PreconditionViolation("genus " + std::to_string(g) + " outside [0, " +
                                        std::to_string(g_max) + "]");
        }
    }
}

Rat GenusTable::value(int genus) const {
    const auto it = values.find(genus);
    return it == values.end() ? Rat(0) : it->second;
}

RatSeries sine_factor(int g, int c, int order) {
    if (order < 0) throw PreconditionViolation("sine_factor: order must be non-negative");
    return pow_int(sinc_half(order), 2L * g - 2 + c);
}

namespace {

void require_kind(const GenusTable& t, InvariantKind kind, const char* op) {
    if (t.kind != kind) {
        throw KindMismatch(std::string(op) + ": expected a " + to_string(kind) + " table, got " +
                           to_string(t.kind));
    }
}

// [u^{2j}] S^{2g-2+c} for j = 0..g_max-g.
std::vector<Rat> sine_factor_even_coeffs(int g, int c, int g_max) {
    const int order = 2 * (g_max - g) + 1;
    const RatSeries s = sine_factor(g, c, order);
    std::vector<Rat> out;
    for (int j = 0; 2 * j < order; ++j) out.push_back(s.coeff(2 * j));
    return out;
}

}  // namespace

GenusTable gw_from_ugw(const GenusTable& t) {
    require_kind(t, InvariantKind::uGW, "gw_from_ugw");
    t.validate();
    GenusTable out{InvariantKind::GW, t.c, t.primitive, t.g_max, {}};
    if (t.values.empty()) return out;
    const int lo = t.values.begin()->first;
    for (int h = lo; h <= t.g_max; ++h) out.values.emplace(h, Rat(0));
    for (const auto& [g, v] : t.values) {
        if (v.is_zero()) continue;
        const auto factor = sine_factor_even_coeffs(g, t.c, t.g_max);
        for (int h = g; h <= t.g_max; ++h) out.values[h] += v * factor[static_cast<std::size_t>(h - g)];
    }
    return out;
}

GenusTable ugw_from_gw(const GenusTable& t) {
    require_kind(t, InvariantKind::GW, "ugw_from_gw");
    t.validate();
    if (t.values.empty()) throw MissingGenus("ugw_from_gw: table has no values");
    const int lo = t.values.begin()->first;
    for (int h = lo; h <= t.g_max; ++h) {
        if (!t.values.contains(h)) {
            throw MissingGenus("ugw_from_gw: genus " + std::to_string(h) + " missing below g_max " +
                               std::to_string(t.g_max));
        }
    }
    GenusTable out{InvariantKind::uGW, t.c, t.primitive, t.g_max, {}};
    // Triangular with unit diagonal: [u^0] S^k = 1.
    std::vector<std::vector<Rat>> factors;
    for (int h = lo; h <= t.g_max; ++h) {
        Rat acc = t.values.at(h);
        for (int g = lo; g < h; ++g) {
            acc -= out.values.at(g) * factors[static_cast<std::size_t>(g - lo)][static_cast<std::size_t>(h - g)];
        }
        out.values.emplace(h, acc);
        factors.push_back(sine_factor_even_coeffs(h, t.c, t.g_max));
    }
    return out;
}

RatSeries eq_sum(const Rat& m1, const Rat& m2, int order) {
    if (order < 0) throw PreconditionViolation("eq_sum: order must be non-negative");
    const RatSeries s = sinc_half(order);
    const RatSeries s2 = s * s;
    const RatSeries t1 = s2 - RatSeries::one(order);
    const RatSeries t2 = s2 * log(s);

    // t1, t2 have valuation 2, so only 2 (a1 + a2) < order contributes.
    const int max_total = order > 0 ? (order - 1) / 2 : 0;
    std::vector<RatSeries> t1_pow{RatSeries::one(order)};
    std::vector<RatSeries> t2_pow{RatSeries::one(order)};
    for (int k = 1; k <= max_total; ++k) {
        t1_pow.push_back(t1_pow.back() * t1);
        t2_pow.push_back(t2_pow.back() * t2);
    }

    RatSeries total(order);
    for (int a2 = 0; a2 <= max_total; ++a2) {
        const Rat outer = pow(m2, a2) / Rat(factorial(static_cast<unsigned long>(a2)));
        for (int a1 = 0; a1 + a2 <= max_total; ++a1) {
            const Rat coef = outer * falling_factorial(m1 - Rat(a2), static_cast<unsigned long>(a1)) /
                             Rat(factorial(static_cast<unsigned long>(a1)));
            if (coef.is_zero()) continue;
            total = total + (t1_pow[static_cast<std::size_t>(a1)] * t2_pow[static_cast<std::size_t>(a2)]) * coef;
        }
    }
    return total;
}

RatSeries eq_sum_closed_form(long m1, const Rat& m2, int order) {
    const RatSeries s = sinc_half(order);
    return pow_int(s * s, m1) * exp(log(s) * m2);
}

MuTable MuTable::from_closed_forms(int max_genus) {
    MuTable t;
    t.mu0.push_back(MuValue{});
    t.mu1.push_back(Rat(0));
    if (max_genus < 1) return t;
    // One expansion for all genera instead of per-genus calls.
    const int order = 2 * max_genus + 1;
    const RatSeries s = sinc_half(order);
    const RatSeries s2 = s * s;
    const RatSeries s2_log = s2 * log(s);
    for (int g = 1; g <= max_genus; ++g) {
        const Rat a = s2.coeff(2 * g);
        const Rat b = s2_log.coeff(2 * g);
        t.mu0.push_back(MuValue{a, -a + Rat(3) * b, b, Rat(0)});
        t.mu1.push_back(a);
    }
    return t;
}

namespace {

// Bracket with primary insertions and one mu_{g,0}(-psi + H) per unmarked
// vertex, normalized by the bare bracket. Each insertion is
//   alpha psi + (divisor part), alpha = -z_coeff,
// with the divisor part already evaluated. Summing over which insertions
// contribute their psi part: removing the psi insertions one by one (dilaton,
// first) multiplies by 2g0 - 2 + (markings left after removal); the divisor
// parts then contribute their evaluated numbers.
Rat unmarked_bracket(int g0, int n, int c, const std::vector<int>& genera, const MuTable& mu) {
    const auto k2 = static_cast<unsigned>(genera.size());
    std::vector<Rat> psi_part;
    std::vector<Rat> divisor_part;
    for (int g : genera) {
        const MuValue& m = mu.mu0.at(static_cast<std::size_t>(g));
        if (!m.scalar.is_zero()) {
            throw PreconditionViolation("mu_{" + std::to_string(g) +
                                        ",0} has a degree-zero part; only classes of degree one reduce");
        }
        // z -> -psi + H:  z_coeff(-psi) + (z_coeff + h_coeff) H + c1_coeff c1
        psi_part.push_back(-m.z_coeff);
        divisor_part.push_back((m.z_coeff + m.h_coeff) * Rat(2L * g0 - 2) + m.c1_coeff * Rat(c));
    }
    Rat total(0);
    for (unsigned mask = 0; mask < (1U << k2); ++mask) {
        const int psi_count = std::popcount(mask);
        const int divisor_count = static_cast<int>(k2) - psi_count;
        Rat term(1);
        for (unsigned i = 0; i < k2; ++i) term *= (mask >> i & 1U) ? psi_part[i] : divisor_part[i];
        if (term.is_zero()) continue;
        for (int j = 0; j < psi_count; ++j) term *= Rat(2L * g0 - 2 + n + divisor_count + j);
        total += term;
    }
    return total;
}

Rat partition_weight(const ThreefoldPartition& p, int n, int c, const MuTable& mu) {
    const int k1 = static_cast<int>(p.g1.size());
    Rat w(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k1)));
    const auto m1 = multiplicities(p.g1);
    w *= Rat(multinomial(k1, m1));
    for (int g : p.g1) w *= mu.mu1.at(static_cast<std::size_t>(g));
    if (w.is_zero()) return w;
    // Sorted g2 stands for k2!/prod(m!) orderings, each weighted 1/k2!.
    for (int m : multiplicities(p.g2)) w /= Rat(factorial(static_cast<unsigned long>(m)));
    return w * unmarked_bracket(p.g0, n, c, p.g2, mu);
}

}  // namespace

RatSeries correction_raw_sum(int g0, int n, int c, int order) {
    const int max_delta = order > 0 ? (order - 1) / 2 : 0;
    return correction_raw_sum(g0, n, c, order, MuTable::from_closed_forms(max_delta));
}

RatSeries correction_raw_sum(int g0, int n, int c, int order, const MuTable& mu) {
    if (g0 < 0 || n < 0) throw PreconditionViolation("correction_raw_sum: g0 and n must be non-negative");
    if (order < 0) throw PreconditionViolation("correction_raw_sum: order must be non-negative");
    const int max_delta = order > 0 ? (order - 1) / 2 : 0;
    if (mu.max_genus() < max_delta) {
        throw PreconditionViolation("correction_raw_sum: mu table covers genus " +
                                    std::to_string(mu.max_genus()) + ", need " + std::to_string(max_delta));
    }
    std::vector<Rat> coeffs(static_cast<std::size_t>(order), Rat(0));
    if (order > 0) coeffs[0] = Rat(1);
    for (int delta = 1; delta <= max_delta; ++delta) {
        Rat acc(0);
        for (const auto& p : enumerate_threefold_partitions(g0 + delta, n)) {
            if (p.g0 != g0) continue;
            acc += partition_weight(p, n, c, mu);
        }
        coeffs[static_cast<std::size_t>(2 * delta)] = acc;
    }
    return RatSeries::from_coeffs(0, std::move(coeffs), order);
}

namespace {

template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const std::size_t workers =
        std::min<std::size_t>(count, std::max(1U, std::thread::hardware_concurrency()));
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        });
    }
}

std::optional<int> first_difference(const RatSeries& got, const RatSeries& want, int order) {
    for (int e = 0; e < order; ++e) {
        if (!(got.coeff(e) == want.coeff(e))) return e;
    }
    return std::nullopt;
}

void finalize(IdentityReport& report) {
    for (const auto& cell : report.cells) {
        if (!cell.passed) {
            report.passed = false;
            report.first_failure = cell;
            return;
        }
    }
}

}  // namespace

IdentityReport verify_raw_equals_closed(int g0_max, int n_max, int c_min, int c_max, int order) {
    const int max_delta = order > 0 ? (order - 1) / 2 : 0;
    return verify_raw_equals_closed(g0_max, n_max, c_min, c_max, order, MuTable::from_closed_forms(max_delta));
}

IdentityReport verify_raw_equals_closed(int g0_max, int n_max, int c_min, int c_max, int order,
                                        const MuTable& mu) {
    IdentityReport report;
    report.order = order;
    report.note = "coefficients of u^0 .. u^" + std::to_string(order - 1) + " compared exactly";
    for (int g0 = 0; g0 <= g0_max; ++g0) {
        for (int n = 0; n <= n_max; ++n) {
            for (int c = c_min; c <= c_max; ++c) report.cells.push_back(CellResult{.g0 = g0, .n = n, .c = c});
        }
    }
    parallel_for(report.cells.size(), [&](std::size_t i) {
        CellResult& cell = report.cells[i];
        try {
            const RatSeries raw = correction_raw_sum(cell.g0, cell.n, cell.c, order, mu);
            const RatSeries closed = sine_factor(cell.g0, cell.c, order);
            cell.mismatch_exponent = first_difference(raw, closed, order);
            if (cell.mismatch_exponent) {
                const int e = *cell.mismatch_exponent;
                cell.passed = false;
                cell.detail = "u^" + std::to_string(e) + ": raw " + raw.coeff(e).to_string() + " vs closed " +
                              closed.coeff(e).to_string();
            }
        } catch (const Error& err) {
            cell.passed = false;
            cell.detail = err.what();
        }
    });
    finalize(report);
    return report;
}

IdentityReport verify_eq_sum_grid(int m1_min, int m1_max, int m2_min, int m2_max, int order) {
    IdentityReport report;
    report.order = order;
    report.note = "cells list m1 as n and m2 as c";
    for (int m1 = m1_min; m1 <= m1_max; ++m1) {
        for (int m2 = m2_min; m2 <= m2_max; ++m2) report.cells.push_back(CellResult{.g0 = 0, .n = m1, .c = m2});
    }
    parallel_for(report.cells.size(), [&](std::size_t i) {
        CellResult& cell = report.cells[i];
        const RatSeries raw = eq_sum(Rat(cell.n), Rat(cell.c), order);
        const RatSeries closed = eq_sum_closed_form(cell.n, Rat(cell.c), order);
        cell.mismatch_exponent = first_difference(raw, closed, order);
        if (cell.mismatch_exponent) {
            const int e = *cell.mismatch_exponent;
            cell.passed = false;
            cell.detail = "u^" + std::to_string(e) + ": sum " + raw.coeff(e).to_string() + " vs closed " +
                          closed.coeff(e).to_string();
        }
    });
    finalize(report);
    return report;
}

}  // namespace gwx
