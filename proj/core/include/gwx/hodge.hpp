#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "gwx/rat.hpp"
#include "gwx/series.hpp"

namespace gwx {

/// Polynomial in the commuting symbols H and c1 with rational coefficients.
/// Terms of total degree above the cap are dropped on construction and after
/// every product. Binary operations use the smaller of the two caps.
class GradedPoly {
public:
    using Exponents = std::pair<int, int>;  // (power of H, power of c1)

    explicit GradedPoly(int degree_cap = 3) : cap_(degree_cap) {}

    static GradedPoly constant(const Rat& c, int degree_cap = 3);
    static GradedPoly monomial(const Rat& c, int h_power, int c1_power, int degree_cap = 3);
    static GradedPoly H(int degree_cap = 3) { return monomial(Rat(1), 1, 0, degree_cap); }
    static GradedPoly c1(int degree_cap = 3) { return monomial(Rat(1), 0, 1, degree_cap); }

    int degree_cap() const { return cap_; }
    const std::map<Exponents, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rat coeff(int h_power, int c1_power) const;
    Rat scalar() const { return coeff(0, 0); }

    GradedPoly operator-() const;
    friend GradedPoly operator+(const GradedPoly& a, const GradedPoly& b);
    friend GradedPoly operator-(const GradedPoly& a, const GradedPoly& b);
    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
    friend GradedPoly operator*(const GradedPoly& a, const Rat& r);
    friend GradedPoly operator*(const Rat& r, const GradedPoly& a) { return a * r; }

    /// Equal terms; the caps are not compared.
    friend bool operator==(const GradedPoly& a, const GradedPoly& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    void add_term(const Exponents& e, const Rat& c);

    std::map<Exponents, Rat> terms_;
    int cap_;
};

GradedPoly ring_zero_like(const GradedPoly& like);
GradedPoly ring_one_like(const GradedPoly& like);
bool ring_is_zero(const GradedPoly& p);
GradedPoly ring_inverse(const GradedPoly& p);  // scalars only

/// Finite Laurent polynomial in z with GradedPoly coefficients. Powers below
/// `floor` are discarded, which keeps products finite; every coefficient at
/// or above the floor is exact.
class ZLaurent {
public:
    explicit ZLaurent(int degree_cap = 3, int floor = -3) : cap_(degree_cap), floor_(floor) {}

    static ZLaurent monomial(const GradedPoly& c, int z_power, int floor);
    static ZLaurent from_poly(const GradedPoly& c, int floor) { return monomial(c, 0, floor); }

    int degree_cap() const { return cap_; }
    int floor() const { return floor_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Lowest / highest power with a nonzero coefficient. Undefined when zero.
    int z_min() const { return coeffs_.begin()->first; }
    int z_max() const { return coeffs_.rbegin()->first; }
    const std::map<int, GradedPoly>& coeffs() const { return coeffs_; }

    GradedPoly coeff(int z_power) const;

    /// Drops every negative power of z.
    ZLaurent nonneg_part() const;
    /// Multiplies by z^k (the floor moves with it).
    ZLaurent shifted(int k) const;
    ZLaurent with_floor(int floor) const;

    ZLaurent operator-() const;
    friend ZLaurent operator+(const ZLaurent& a, const ZLaurent& b);
    friend ZLaurent operator-(const ZLaurent& a, const ZLaurent& b);
    friend ZLaurent operator*(const ZLaurent& a, const ZLaurent& b);
    friend ZLaurent operator*(const ZLaurent& a, const Rat& r);

    friend bool operator==(const ZLaurent& a, const ZLaurent& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string() const;

private:
    void add_term(int z_power, const GradedPoly& c);

    std::map<int, GradedPoly> coeffs_;
    int cap_;
    int floor_;
};

ZLaurent ring_zero_like(const ZLaurent& like);
ZLaurent ring_one_like(const ZLaurent& like);
bool ring_is_zero(const ZLaurent& p);
ZLaurent ring_inverse(const ZLaurent& p);  // always throws NonInvertibleLeading

/// Rewrites a Laurent polynomial in z' as one in z under z' = z - H, expanding
/// (z - H)^p binomially (p >= 0) or as z^p (1 - H/z)^p (p < 0). Terms in H
/// beyond the degree cap vanish; powers of z below `floor` are dropped.
ZLaurent substitute_shifted_variable(const ZLaurent& in_zprime, int floor);

/// Truncated vertex function of genus g with no markings:
///   mu_{g,0}(z) = z_coeff z + h_coeff H + c1_coeff c1 + scalar.
struct MuValue {
    Rat z_coeff;
    Rat h_coeff;
    Rat c1_coeff;
    Rat scalar;

    ZLaurent to_zlaurent(int degree_cap, int floor) const;
    friend bool operator==(const MuValue&, const MuValue&) = default;
};

/// Coefficient of u^{2g} in S^2 ((z - H) + log S (3H + c1)) - z + H, with
/// S = sin(u/2)/(u/2). Requires g >= 1.
MuValue mu_g0(int g);

/// Coefficient of u^{2g} in S^2 - 1. Requires g >= 1.
Rat mu_g1(int g);

/// Genus-indexed Laurent expansion (in z, coefficients in H and c1) of
///   z' S^{(2 z' + A) / z'} = z' S^2 exp(A log S / z'),   z' = z - H,
/// with A = 3H + c1. The genus-0 entry is z - H; genus g >= 1 entries are the
/// triple Hodge integral I_{g,0}(z). `order_u` is the highest power of u
/// covered (inclusive), so genera 0 <= g <= order_u / 2 are present. Each
/// entry is exact for powers z^k with k >= -z_depth.
std::map<int, ZLaurent> i_function_expansion(int order_u, int z_depth = 3, int degree_cap = 3);

/// Same expansion with an arbitrary class in place of 3H + c1.
std::map<int, ZLaurent> i_function_expansion(int order_u, int z_depth, int degree_cap,
                                             const GradedPoly& exponent_class);

struct CheckReport {
    bool passed = true;
    std::optional<int> failing_genus;
    std::string detail;
    int cases = 0;
};

/// Checks that [z^{>=0}] of the expansion at genus g equals mu_g0(g) for
/// 1 <= g <= order_u / 2.
CheckReport verify_i_truncation(int order_u, int z_depth = 3, int degree_cap = 3);
CheckReport verify_i_truncation(const std::map<int, ZLaurent>& expansion, int order_u);

/// Checks that [z^{>=0}](I_{g,0}(z) / z) is the constant mu_g1(g) for
/// 1 <= g <= order_u / 2. order_u == 0 passes vacuously.
CheckReport verify_i_ratio(int order_u);
CheckReport verify_i_ratio(const std::map<int, ZLaurent>& expansion, int order_u);

}  // namespace gwx
