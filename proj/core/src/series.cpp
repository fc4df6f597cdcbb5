#include "gwx/series.hpp"

#include <ostream>

namespace gwx {

RatSeries sinc_half(int order) {
    if (order < 0) throw PreconditionViolation("sinc_half: order must be non-negative");
    std::vector<Rat> coeffs(static_cast<std::size_t>(order), Rat(0));
    // term_k = (-1)^k / (4^k (2k+1)!), built incrementally from term_{k-1}
    Rat term(1);
    for (int k = 0; 2 * k < order; ++k) {
        if (k > 0) term *= Rat(-1, 4L * (2 * k) * (2 * k + 1));
        coeffs[static_cast<std::size_t>(2 * k)] = term;
    }
    return RatSeries::from_coeffs(0, std::move(coeffs), order);
}

std::ostream& operator<<(std::ostream& os, const RatSeries& s) {
    bool first = true;
    for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
        const Rat& c = s.coeffs()[i];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        os << '(' << c << ")u^" << s.valuation() + static_cast<int>(i);
        first = false;
    }
    if (first) os << '0';
    return os << " + O(u^" << s.order() << ')';
}

}  // namespace gwx
