#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace gwx {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq.
class Rat {
public:
    Rat() = default;
    Rat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rat(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
    explicit Rat(const BigInt& n) : v_(n) {}
    Rat(const BigInt& num, const BigInt& den);
    Rat(long num, long den);

    /// Parses "p", "-p" or "p/q" (q != 0); whitespace is not accepted.
    /// Throws ParseError on malformed input.
    static Rat parse(std::string_view text);

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat inverse() const;

    /// "p/q" always, including "0/1" and "5/1".
    std::string to_fraction_string() const;
    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    Rat operator-() const { return from_raw(-v_); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

    const mpq_class& raw() const { return v_; }

private:
    static Rat from_raw(mpq_class v) {
        Rat r;
        r.v_ = std::move(v);
        r.v_.canonicalize();
        return r;
    }

    mpq_class v_{0};
};

Rat pow(const Rat& base, long exponent);

BigInt factorial(unsigned long n);

/// x (x-1) ... (x-k+1); equals 1 for k == 0.
Rat falling_factorial(const Rat& x, unsigned long k);

/// Binomial coefficient C(n, k) for non-negative n; zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);

}  // namespace gwx
