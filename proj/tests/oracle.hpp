#pragma once

// Test-only reference arithmetic on plain coefficient vectors. Nothing here
// goes through USeries: products are schoolbook, exp/log are the defining
// power series sum x^k/k! and sum (-1)^{k+1} x^k/k, and the sine series is
// taken straight from factorials.

#include <cstddef>
#include <random>
#include <vector>

#include "gwx/rat.hpp"

namespace oracle {

using gwx::Rat;
using Poly = std::vector<Rat>;  // index = power of u, length = truncation order

inline Poly zeros(int order) { return Poly(static_cast<std::size_t>(order), Rat(0)); }

inline Poly one(int order) {
    Poly p = zeros(order);
    if (order > 0) p[0] = Rat(1);
    return p;
}

inline Poly add(const Poly& a, const Poly& b) {
    Poly out = zeros(static_cast<int>(std::min(a.size(), b.size())));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline Poly scale(const Poly& a, const Rat& r) {
    Poly out = a;
    for (auto& x : out) x *= r;
    return out;
}

inline Poly mul(const Poly& a, const Poly& b) {
    Poly out = zeros(static_cast<int>(std::min(a.size(), b.size())));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; i + j < out.size() && j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

inline Poly power(const Poly& a, int k) {
    Poly out = one(static_cast<int>(a.size()));
    for (int i = 0; i < k; ++i) out = mul(out, a);
    return out;
}

/// sin(x)/x at x = u/2 from the Taylor coefficients (-1)^k x^{2k}/(2k+1)!.
inline Poly sinc_half(int order) {
    Poly p = zeros(order);
    for (int k = 0; 2 * k < order; ++k) {
        Rat c = Rat(gwx::BigInt(1), gwx::factorial(static_cast<unsigned long>(2 * k + 1))) *
                gwx::pow(Rat(1, 2), 2 * k);
        p[static_cast<std::size_t>(2 * k)] = (k % 2 == 0) ? c : -c;
    }
    return p;
}

/// S^2 from 2 - 2 cos u = sum_{k>=1} 2 (-1)^{k+1} u^{2k} / (2k)!, divided by u^2.
inline Poly sinc_half_squared_via_cosine(int order) {
    Poly p = zeros(order);
    for (int k = 1; 2 * k - 2 < order; ++k) {
        Rat c(gwx::BigInt(2), gwx::factorial(static_cast<unsigned long>(2 * k)));
        p[static_cast<std::size_t>(2 * k - 2)] = (k % 2 == 1) ? c : -c;
    }
    return p;
}

/// log(1 + x) = sum_{k>=1} (-1)^{k+1} x^k / k for x without constant term.
inline Poly log1p(const Poly& x) {
    const int order = static_cast<int>(x.size());
    Poly out = zeros(order);
    Poly xk = one(order);
    for (int k = 1; k < order; ++k) {
        xk = mul(xk, x);
        out = add(out, scale(xk, Rat((k % 2 == 1) ? 1 : -1, k)));
    }
    return out;
}

/// exp(x) = sum_k x^k / k! for x without constant term.
inline Poly exp(const Poly& x) {
    const int order = static_cast<int>(x.size());
    Poly out = one(order);
    Poly xk = one(order);
    for (int k = 1; k < order; ++k) {
        xk = mul(xk, x);
        out = add(out, scale(xk, Rat(gwx::BigInt(1), gwx::factorial(static_cast<unsigned long>(k)))));
    }
    return out;
}

/// log of a series with constant term 1.
inline Poly log(const Poly& a) {
    Poly x = a;
    x[0] -= Rat(1);
    return log1p(x);
}

/// Small random rational with numerator in [-9, 9] and denominator in [1, 6].
inline Rat random_rat(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 6);
    return Rat(num(rng), den(rng));
}

}  // namespace oracle
