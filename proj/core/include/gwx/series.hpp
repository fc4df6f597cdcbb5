#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "gwx/errors.hpp"
#include "gwx/rat.hpp"

namespace gwx {

// Coefficient-ring protocol. A ring type C used inside USeries must provide,
// findable by ADL:
//   C ring_zero_like(const C&);  C ring_one_like(const C&);
//   bool ring_is_zero(const C&); C ring_inverse(const C&)  (may throw)
//   C + C, C - C, -C, C * C, C * Rat, C == C
// The "like" argument carries ring parameters such as a degree cap.

inline Rat ring_zero_like(const Rat&) { return Rat(0); }
inline Rat ring_one_like(const Rat&) { return Rat(1); }
inline bool ring_is_zero(const Rat& r) { return r.is_zero(); }
inline Rat ring_inverse(const Rat& r) {
    if (r.is_zero()) throw NonInvertibleLeading("leading coefficient is zero");
    return r.inverse();
}

/// Truncated Laurent series in u:
///   sum_{e = valuation}^{order-1} c_e u^e + O(u^order).
///
/// The coefficient at `valuation` is nonzero unless the series is zero to its
/// order, in which case coeffs is empty and valuation == order. Values are
/// immutable once built; every operation returns a fresh series.
template <class C>
class USeries {
public:
    using coeff_type = C;

    /// The zero series O(u^order).
    explicit USeries(int order, C zero = C{})
        : valuation_(order), order_(order), zero_(ring_zero_like(zero)) {}

    /// Builds from coefficients of u^start, u^{start+1}, ...; entries at or
    /// beyond `order` are dropped and leading zeros are stripped.
    static USeries from_coeffs(int start, std::vector<C> coeffs, int order, C zero = C{}) {
        USeries s(order, std::move(zero));
        s.valuation_ = start;
        if (start < order) {
            const auto keep = static_cast<std::size_t>(order - start);
            if (coeffs.size() > keep) coeffs.resize(keep);
            while (coeffs.size() < keep) coeffs.push_back(s.zero_);
        } else {
            coeffs.clear();
        }
        s.coeffs_ = std::move(coeffs);
        s.normalize();
        return s;
    }

    static USeries monomial(C c, int exponent, int order) {
        C zero = ring_zero_like(c);
        return from_coeffs(exponent, {std::move(c)}, order, std::move(zero));
    }

    /// 1 + O(u^order) in the ring of `like`.
    static USeries one(int order, const C& like = C{}) {
        return monomial(ring_one_like(like), 0, order);
    }

    int valuation() const { return valuation_; }
    int order() const { return order_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<C>& coeffs() const { return coeffs_; }
    const C& zero_element() const { return zero_; }

    /// Coefficient of u^e. Throws PreconditionViolation when e >= order.
    C coeff(int e) const {
        if (e >= order_) {
            throw PreconditionViolation("coefficient of u^" + std::to_string(e) +
                                        " is beyond truncation order " + std::to_string(order_));
        }
        if (e < valuation_) return zero_;
        return coeffs_[static_cast<std::size_t>(e - valuation_)];
    }

    const C& leading() const {
        if (is_zero()) throw ZeroSeries("series is zero to its order");
        return coeffs_.front();
    }

    USeries truncate(int new_order) const {
        if (new_order >= order_) return *this;
        return from_coeffs(valuation_, coeffs_, new_order, zero_);
    }

    USeries operator-() const {
        std::vector<C> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(-c);
        return from_coeffs(valuation_, std::move(out), order_, zero_);
    }

    friend USeries operator+(const USeries& a, const USeries& b) { return combine(a, b, false); }
    friend USeries operator-(const USeries& a, const USeries& b) { return combine(a, b, true); }

    friend USeries operator*(const USeries& a, const USeries& b) {
        const int order = std::min(a.order_ + b.valuation_, b.order_ + a.valuation_);
        if (a.is_zero() || b.is_zero()) return USeries(order, a.zero_);
        const int start = a.valuation_ + b.valuation_;
        const auto len = static_cast<std::size_t>(std::max(0, order - start));
        std::vector<C> out(len, a.zero_);
        for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
            if (ring_is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size() && i + j < len; ++j) {
                out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return from_coeffs(start, std::move(out), order, a.zero_);
    }

    /// Coefficientwise scaling by a rational.
    friend USeries operator*(const USeries& a, const Rat& r) {
        std::vector<C> out;
        out.reserve(a.coeffs_.size());
        for (const auto& c : a.coeffs_) out.push_back(c * r);
        return from_coeffs(a.valuation_, std::move(out), a.order_, a.zero_);
    }
    friend USeries operator*(const Rat& r, const USeries& a) { return a * r; }

    /// Scaling by a ring element (not a series).
    USeries scaled(const C& c) const {
        std::vector<C> out;
        out.reserve(coeffs_.size());
        for (const auto& x : coeffs_) out.push_back(x * c);
        return from_coeffs(valuation_, std::move(out), order_, zero_);
    }

    /// Multiplies by u^k.
    USeries shifted(int k) const {
        return from_coeffs(valuation_ + k, coeffs_, order_ + k, zero_);
    }

    /// Representation equality: same order and same known coefficients.
    friend bool operator==(const USeries& a, const USeries& b) {
        return a.order_ == b.order_ && a.valuation_ == b.valuation_ && a.coeffs_ == b.coeffs_;
    }

    /// Agreement of all coefficients below min(a.order, b.order, order).
    friend bool equal_up_to(const USeries& a, const USeries& b, int order) {
        const int top = std::min({a.order_, b.order_, order});
        const int low = std::min(a.valuation_, b.valuation_);
        for (int e = low; e < top; ++e) {
            if (!(a.coeff(e) == b.coeff(e))) return false;
        }
        return true;
    }

private:
    static USeries combine(const USeries& a, const USeries& b, bool subtract) {
        const int order = std::min(a.order_, b.order_);
        const int start = std::min(a.valuation_, b.valuation_);
        const auto len = static_cast<std::size_t>(std::max(0, order - start));
        std::vector<C> out(len, a.zero_);
        for (std::size_t i = 0; i < len; ++i) {
            const int e = start + static_cast<int>(i);
            if (e >= a.valuation_ && e < a.order_) out[i] = a.coeffs_[static_cast<std::size_t>(e - a.valuation_)];
            if (e >= b.valuation_ && e < b.order_) {
                const C& y = b.coeffs_[static_cast<std::size_t>(e - b.valuation_)];
                out[i] = subtract ? out[i] - y : out[i] + y;
            }
        }
        return from_coeffs(start, std::move(out), order, a.zero_);
    }

    void normalize() {
        std::size_t lead = 0;
        while (lead < coeffs_.size() && ring_is_zero(coeffs_[lead])) ++lead;
        if (lead == coeffs_.size()) {
            coeffs_.clear();
            valuation_ = order_;
            return;
        }
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        valuation_ += static_cast<int>(lead);
    }

    int valuation_;
    int order_;
    std::vector<C> coeffs_;
    C zero_;
};

/// Multiplicative inverse; the result has valuation -a.valuation() and the
/// same relative precision as a.
template <class C>
USeries<C> inv(const USeries<C>& a) {
    if (a.is_zero()) throw ZeroSeries("cannot invert a series that is zero to its order");
    const C lead_inv = ring_inverse(a.leading());
    const auto& ac = a.coeffs();
    const std::size_t n = ac.size();
    std::vector<C> b(n, a.zero_element());
    if (n > 0) b[0] = lead_inv;
    for (std::size_t k = 1; k < n; ++k) {
        C acc = a.zero_element();
        for (std::size_t j = 1; j <= k; ++j) acc = acc + ac[j] * b[k - j];
        b[k] = -(acc * lead_inv);
    }
    const int v = a.valuation();
    return USeries<C>::from_coeffs(-v, std::move(b), a.order() - 2 * v, a.zero_element());
}

template <class C>
USeries<C> operator/(const USeries<C>& a, const USeries<C>& b) {
    return a * inv(b);
}

/// exp of a series without constant or Laurent part.
template <class C>
USeries<C> exp(const USeries<C>& a) {
    const int order = a.order();
    if (order <= 0 || (!a.is_zero() && a.valuation() < 1)) {
        throw NonzeroConstantTerm("exp requires a series with zero constant term and no Laurent part");
    }
    const auto n = static_cast<std::size_t>(order);
    std::vector<C> b(n, a.zero_element());
    b[0] = ring_one_like(a.zero_element());
    // n b_n = sum_{k=1}^{n} k a_k b_{n-k}
    for (std::size_t m = 1; m < n; ++m) {
        C acc = a.zero_element();
        for (std::size_t k = 1; k <= m; ++k) {
            const int e = static_cast<int>(k);
            if (e < a.valuation() && !a.is_zero()) continue;
            const C ak = a.coeff(e);
            if (ring_is_zero(ak)) continue;
            acc = acc + ak * b[m - k] * Rat(static_cast<long>(k));
        }
        b[m] = acc * Rat(1, static_cast<long>(m));
    }
    return USeries<C>::from_coeffs(0, std::move(b), order, a.zero_element());
}

/// log of a series with constant term exactly one.
template <class C>
USeries<C> log(const USeries<C>& a) {
    const C one = ring_one_like(a.zero_element());
    if (a.is_zero() || a.valuation() != 0 || !(a.leading() == one)) {
        throw ConstantTermNotOne("log requires constant term 1 and valuation 0");
    }
    const auto& ac = a.coeffs();
    const std::size_t n = ac.size();
    std::vector<C> b(n, a.zero_element());
    // b_m = a_m - (1/m) sum_{k=1}^{m-1} k b_k a_{m-k}
    for (std::size_t m = 1; m < n; ++m) {
        C acc = a.zero_element();
        for (std::size_t k = 1; k < m; ++k) {
            acc = acc + b[k] * ac[m - k] * Rat(static_cast<long>(k));
        }
        b[m] = ac[m] - acc * Rat(1, static_cast<long>(m));
    }
    return USeries<C>::from_coeffs(0, std::move(b), a.order(), a.zero_element());
}

/// Integer power by repeated squaring; negative exponents go through inv.
template <class C>
USeries<C> pow_int(const USeries<C>& a, long k) {
    if (k < 0) return pow_int(inv(a), -k);
    if (k == 0) {
        if (a.is_zero()) throw ZeroSeries("0^0 of a series that is zero to its order");
        return USeries<C>::one(a.order() - a.valuation(), a.zero_element());
    }
    USeries<C> result = a;
    USeries<C> base = a;
    auto e = static_cast<unsigned long>(k) - 1;
    while (e != 0) {
        if (e & 1UL) result = result * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return result;
}

/// Re-expresses a rational series in another ring through its unit:
/// each coefficient r becomes one_like(like) * r.
template <class C>
USeries<C> lift(const USeries<Rat>& s, const C& like) {
    const C one = ring_one_like(like);
    std::vector<C> out;
    out.reserve(s.coeffs().size());
    for (const auto& r : s.coeffs()) out.push_back(one * r);
    return USeries<C>::from_coeffs(s.valuation(), std::move(out), s.order(), ring_zero_like(like));
}

using RatSeries = USeries<Rat>;

/// sin(u/2)/(u/2) = sum_k (-1)^k u^{2k} / (4^k (2k+1)!) + O(u^order).
RatSeries sinc_half(int order);

std::ostream& operator<<(std::ostream& os, const RatSeries& s);

}  // namespace gwx
