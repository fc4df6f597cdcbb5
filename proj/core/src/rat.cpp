#include "gwx/rat.hpp"

#include <ostream>

#include "gwx/errors.hpp"

namespace gwx {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (ch < '0' || ch > '9') return false;
    }
    return true;
}

}  // namespace

Rat::Rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw PreconditionViolation("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat::Rat(long num, long den) : Rat(BigInt(num), BigInt(den)) {}

Rat Rat::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num_text = body.substr(0, slash);
    const std::string_view den_text =
        slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num_text) || !all_digits(den_text)) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    BigInt num(std::string(num_text), 10);
    BigInt den(std::string(den_text), 10);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (negative) num = -num;
    return Rat(num, den);
}

Rat Rat::inverse() const {
    if (is_zero()) throw PreconditionViolation("inverse of zero");
    return from_raw(1 / v_);
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw PreconditionViolation("division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rat::to_fraction_string() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rat::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return to_fraction_string();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

Rat pow(const Rat& base, long exponent) {
    if (exponent < 0) return pow(base.inverse(), -exponent);
    Rat result(1);
    Rat b = base;
    auto e = static_cast<unsigned long>(exponent);
    while (e != 0) {
        if (e & 1UL) result *= b;
        e >>= 1;
        if (e != 0) b *= b;
    }
    return result;
}

BigInt factorial(unsigned long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Rat falling_factorial(const Rat& x, unsigned long k) {
    Rat out(1);
    for (unsigned long j = 0; j < k; ++j) out *= x - Rat(static_cast<long>(j));
    return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

}  // namespace gwx
