#include "gwx/hodge.hpp"

#include <algorithm>
#include <sstream>

#include "gwx/errors.hpp"

namespace gwx {

// ---------------------------------------------------------------- GradedPoly

GradedPoly GradedPoly::constant(const Rat& c, int degree_cap) {
    return monomial(c, 0, 0, degree_cap);
}

GradedPoly GradedPoly::monomial(const Rat& c, int h_power, int c1_power, int degree_cap) {
    if (h_power < 0 || c1_power < 0) throw PreconditionViolation("GradedPoly: negative exponent");
    GradedPoly p(degree_cap);
    p.add_term({h_power, c1_power}, c);
    return p;
}

void GradedPoly::add_term(const Exponents& e, const Rat& c) {
    if (c.is_zero() || e.first + e.second > cap_) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rat GradedPoly::coeff(int h_power, int c1_power) const {
    const auto it = terms_.find({h_power, c1_power});
    return it == terms_.end() ? Rat(0) : it->second;
}

GradedPoly GradedPoly::operator-() const {
    GradedPoly out(cap_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

GradedPoly operator+(const GradedPoly& a, const GradedPoly& b) {
    GradedPoly out(std::min(a.cap_, b.cap_));
    for (const auto& [e, c] : a.terms_) out.add_term(e, c);
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

GradedPoly operator-(const GradedPoly& a, const GradedPoly& b) { return a + (-b); }

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
    GradedPoly out(std::min(a.cap_, b.cap_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
        }
    }
    return out;
}

GradedPoly operator*(const GradedPoly& a, const Rat& r) {
    GradedPoly out(a.cap_);
    if (r.is_zero()) return out;
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, c * r);
    return out;
}

std::string GradedPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << '-';
        first = false;
        const Rat mag = c.sign() < 0 ? -c : c;
        const bool bare = e.first == 0 && e.second == 0;
        if (bare || !(mag == Rat(1))) os << mag << (bare ? "" : "*");
        bool need_star = false;
        if (e.first > 0) {
            os << 'H';
            if (e.first > 1) os << '^' << e.first;
            need_star = true;
        }
        if (e.second > 0) {
            if (need_star) os << '*';
            os << "c1";
            if (e.second > 1) os << '^' << e.second;
        }
    }
    return os.str();
}

GradedPoly ring_zero_like(const GradedPoly& like) { return GradedPoly(like.degree_cap()); }
GradedPoly ring_one_like(const GradedPoly& like) { return GradedPoly::constant(Rat(1), like.degree_cap()); }
bool ring_is_zero(const GradedPoly& p) { return p.is_zero(); }

GradedPoly ring_inverse(const GradedPoly& p) {
    if (p.terms().size() != 1 || p.scalar().is_zero()) {
        throw NonInvertibleLeading("only nonzero scalar GradedPoly values are invertible here");
    }
    return GradedPoly::constant(p.scalar().inverse(), p.degree_cap());
}

// ------------------------------------------------------------------ ZLaurent

ZLaurent ZLaurent::monomial(const GradedPoly& c, int z_power, int floor) {
    ZLaurent out(c.degree_cap(), floor);
    out.add_term(z_power, c);
    return out;
}

void ZLaurent::add_term(int z_power, const GradedPoly& c) {
    if (z_power < floor_ || c.is_zero()) return;
    auto it = coeffs_.find(z_power);
    if (it == coeffs_.end()) {
        coeffs_.emplace(z_power, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) coeffs_.erase(it);
}

GradedPoly ZLaurent::coeff(int z_power) const {
    const auto it = coeffs_.find(z_power);
    return it == coeffs_.end() ? GradedPoly(cap_) : it->second;
}

ZLaurent ZLaurent::nonneg_part() const {
    ZLaurent out(cap_, std::max(floor_, 0));
    for (auto it = coeffs_.lower_bound(0); it != coeffs_.end(); ++it) out.coeffs_.emplace(*it);
    return out;
}

ZLaurent ZLaurent::shifted(int k) const {
    ZLaurent out(cap_, floor_ + k);
    for (const auto& [p, c] : coeffs_) out.coeffs_.emplace(p + k, c);
    return out;
}

ZLaurent ZLaurent::with_floor(int floor) const {
    ZLaurent out(cap_, floor);
    for (const auto& [p, c] : coeffs_) out.add_term(p, c);
    return out;
}

ZLaurent ZLaurent::operator-() const {
    ZLaurent out(cap_, floor_);
    for (const auto& [p, c] : coeffs_) out.coeffs_.emplace(p, -c);
    return out;
}

ZLaurent operator+(const ZLaurent& a, const ZLaurent& b) {
    ZLaurent out(std::min(a.cap_, b.cap_), std::max(a.floor_, b.floor_));
    for (const auto& [p, c] : a.coeffs_) out.add_term(p, c);
    for (const auto& [p, c] : b.coeffs_) out.add_term(p, c);
    return out;
}

ZLaurent operator-(const ZLaurent& a, const ZLaurent& b) { return a + (-b); }

ZLaurent operator*(const ZLaurent& a, const ZLaurent& b) {
    ZLaurent out(std::min(a.cap_, b.cap_), std::max(a.floor_, b.floor_));
    for (const auto& [pa, ca] : a.coeffs_) {
        for (const auto& [pb, cb] : b.coeffs_) out.add_term(pa + pb, ca * cb);
    }
    return out;
}

ZLaurent operator*(const ZLaurent& a, const Rat& r) {
    ZLaurent out(a.cap_, a.floor_);
    for (const auto& [p, c] : a.coeffs_) out.add_term(p, c * r);
    return out;
}

std::string ZLaurent::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << '(' << it->second.to_string() << ')';
        if (it->first != 0) os << "*z^" << it->first;
    }
    return os.str();
}

ZLaurent ring_zero_like(const ZLaurent& like) { return ZLaurent(like.degree_cap(), like.floor()); }

ZLaurent ring_one_like(const ZLaurent& like) {
    return ZLaurent::from_poly(GradedPoly::constant(Rat(1), like.degree_cap()), like.floor());
}

bool ring_is_zero(const ZLaurent& p) { return p.is_zero(); }

ZLaurent ring_inverse(const ZLaurent&) {
    throw NonInvertibleLeading("ZLaurent coefficients are not inverted");
}

ZLaurent substitute_shifted_variable(const ZLaurent& in_zprime, int floor) {
    const int cap = in_zprime.degree_cap();
    ZLaurent out(cap, floor);
    for (const auto& [p, c] : in_zprime.coeffs()) {
        if (p >= 0) {
            // (z - H)^p = sum_m C(p, m) (-H)^m z^{p-m}
            for (int m = 0; m <= std::min(p, cap); ++m) {
                const Rat coef = Rat(binomial(static_cast<unsigned long>(p), static_cast<unsigned long>(m))) *
                                 (m % 2 == 0 ? Rat(1) : Rat(-1));
                out = out + ZLaurent::monomial(c * GradedPoly::monomial(coef, m, 0, cap), p - m, floor);
            }
        } else {
            // (z - H)^{-q} = sum_m C(q-1+m, m) H^m z^{-q-m}
            const int q = -p;
            for (int m = 0; m <= cap && -q - m >= floor; ++m) {
                const Rat coef(binomial(static_cast<unsigned long>(q - 1 + m), static_cast<unsigned long>(m)));
                out = out + ZLaurent::monomial(c * GradedPoly::monomial(coef, m, 0, cap), -q - m, floor);
            }
        }
    }
    return out;
}

// ------------------------------------------------------------------ mu values

ZLaurent MuValue::to_zlaurent(int degree_cap, int floor) const {
    GradedPoly constant_part = GradedPoly::monomial(h_coeff, 1, 0, degree_cap) +
                               GradedPoly::monomial(c1_coeff, 0, 1, degree_cap) +
                               GradedPoly::constant(scalar, degree_cap);
    return ZLaurent::monomial(GradedPoly::constant(z_coeff, degree_cap), 1, floor) +
           ZLaurent::from_poly(constant_part, floor);
}

MuValue mu_g0(int g) {
    if (g < 1) throw PreconditionViolation("mu_g0: genus must be positive");
    const int order = 2 * g + 1;
    const RatSeries s = sinc_half(order);
    const RatSeries s2 = s * s;
    const RatSeries s2_log = s2 * log(s);
    const Rat a = s2.coeff(2 * g);
    const Rat b = s2_log.coeff(2 * g);
    return MuValue{a, -a + Rat(3) * b, b, Rat(0)};
}

Rat mu_g1(int g) {
    if (g < 1) throw PreconditionViolation("mu_g1: genus must be positive");
    const RatSeries s = sinc_half(2 * g + 1);
    return (s * s).coeff(2 * g);
}

std::map<int, ZLaurent> i_function_expansion(int order_u, int z_depth, int degree_cap) {
    return i_function_expansion(order_u, z_depth, degree_cap,
                                GradedPoly::monomial(Rat(3), 1, 0, degree_cap) + GradedPoly::c1(degree_cap));
}

std::map<int, ZLaurent> i_function_expansion(int order_u, int z_depth, int degree_cap,
                                             const GradedPoly& exponent_class) {
    if (order_u < 0) throw PreconditionViolation("i_function_expansion: order_u must be non-negative");
    if (z_depth < 1) throw PreconditionViolation("i_function_expansion: z_depth must be at least 1");
    if (degree_cap < 2) throw PreconditionViolation("i_function_expansion: degree_cap must be at least 2");

    // Work in z' down to z'^{-(z_depth+1)}: every factor of the exponential
    // has z'-power <= 0, so nothing dropped there can climb back above the
    // floor before the final multiplication by z'.
    const int inner_floor = -(z_depth + 1);
    const ZLaurent proto(degree_cap, inner_floor);
    const int order = order_u + 1;

    const RatSeries s = sinc_half(order);
    const RatSeries s2 = s * s;
    const USeries<ZLaurent> exponent =
        lift(log(s), proto).scaled(ZLaurent::monomial(exponent_class, -1, inner_floor));
    const USeries<ZLaurent> body = lift(s2, proto) * exp(exponent);

    std::map<int, ZLaurent> out;
    for (int g = 0; 2 * g <= order_u; ++g) {
        const ZLaurent in_zprime = body.coeff(2 * g).shifted(1);
        out.emplace(g, substitute_shifted_variable(in_zprime, -z_depth));
    }
    return out;
}

CheckReport verify_i_truncation(int order_u, int z_depth, int degree_cap) {
    return verify_i_truncation(i_function_expansion(order_u, z_depth, degree_cap), order_u);
}

CheckReport verify_i_truncation(const std::map<int, ZLaurent>& expansion, int order_u) {
    CheckReport report;
    for (int g = 1; 2 * g <= order_u; ++g) {
        ++report.cases;
        const auto it = expansion.find(g);
        if (it == expansion.end()) {
            report.passed = false;
            report.failing_genus = g;
            report.detail = "genus " + std::to_string(g) + " missing from expansion";
            return report;
        }
        const ZLaurent got = it->second.nonneg_part();
        const ZLaurent want = mu_g0(g).to_zlaurent(it->second.degree_cap(), 0);
        if (!(got == want)) {
            report.passed = false;
            report.failing_genus = g;
            report.detail = "genus " + std::to_string(g) + ": truncation " + got.to_string() +
                            " differs from closed form " + want.to_string();
            return report;
        }
    }
    return report;
}

CheckReport verify_i_ratio(int order_u) {
    if (order_u < 2) return CheckReport{};
    return verify_i_ratio(i_function_expansion(order_u), order_u);
}

CheckReport verify_i_ratio(const std::map<int, ZLaurent>& expansion, int order_u) {
    CheckReport report;
    for (int g = 1; 2 * g <= order_u; ++g) {
        ++report.cases;
        const auto it = expansion.find(g);
        if (it == expansion.end()) {
            report.passed = false;
            report.failing_genus = g;
            report.detail = "genus " + std::to_string(g) + " missing from expansion";
            return report;
        }
        const ZLaurent got = it->second.shifted(-1).nonneg_part();
        const ZLaurent want =
            ZLaurent::from_poly(GradedPoly::constant(mu_g1(g), it->second.degree_cap()), 0);
        if (!(got == want)) {
            report.passed = false;
            report.failing_genus = g;
            report.detail = "genus " + std::to_string(g) + ": [z>=0](I/z) = " + got.to_string() +
                            ", expected " + want.to_string();
            return report;
        }
    }
    return report;
}

}  // namespace gwx
