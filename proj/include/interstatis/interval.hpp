#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "interstatis/errors.hpp"

namespace interstatis {

// Closed real interval [lo, hi] with finite endpoints. Arithmetic follows
// Moore's rules: every operation returns the exact range of the pointwise
// operation over its operands, with endpoints computed in double precision
// (no directed rounding; the method is statistical, not verified computing).
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    explicit Interval(double value) : Interval(value, value) {}
    Interval(double lower, double upper) : lo(lower), hi(upper) {
        if (!std::isfinite(lo) || !std::isfinite(hi))
            throw std::invalid_argument("interval endpoints must be finite");
        if (lo > hi)
            throw std::invalid_argument("interval lower endpoint exceeds upper endpoint");
    }

    friend bool operator==(const Interval&, const Interval&) = default;
};

namespace detail {
inline Interval checked(double lo, double hi, const char* op) {
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw numeric_error(std::string("interval ") + op + " overflowed to a non-finite endpoint");
    return Interval(lo, hi);
}
} // namespace detail

inline Interval add(Interval a, Interval b) {
    return detail::checked(a.lo + b.lo, a.hi + b.hi, "add");
}

inline Interval sub(Interval a, Interval b) {
    return detail::checked(a.lo - b.hi, a.hi - b.lo, "sub");
}

// [a,b] * [c,d] = [min(ac,ad,bc,bd), max(ac,ad,bc,bd)]
inline Interval mul(Interval a, Interval b) {
    const double p1 = a.lo * b.lo;
    const double p2 = a.lo * b.hi;
    const double p3 = a.hi * b.lo;
    const double p4 = a.hi * b.hi;
    return detail::checked(std::min(std::min(p1, p2), std::min(p3, p4)),
                           std::max(std::max(p1, p2), std::max(p3, p4)), "mul");
}

// Exact range of x/y over the operands; the divisor must not contain zero.
// Computed as the min/max of the four endpoint quotients, which equals
// a * [1/b.hi, 1/b.lo] without the intermediate reciprocal rounding.
inline Interval div(Interval a, Interval b) {
    if (b.lo <= 0.0 && b.hi >= 0.0)
        throw numeric_error("interval division by an interval containing zero");
    const double q1 = a.lo / b.lo;
    const double q2 = a.lo / b.hi;
    const double q3 = a.hi / b.lo;
    const double q4 = a.hi / b.hi;
    return detail::checked(std::min(std::min(q1, q2), std::min(q3, q4)),
                           std::max(std::max(q1, q2), std::max(q3, q4)), "div");
}

inline Interval sqrt(Interval a) {
    if (a.lo < 0.0)
        throw numeric_error("interval sqrt of an interval with negative lower endpoint");
    return Interval(std::sqrt(a.lo), std::sqrt(a.hi));
}

// Real * interval, without embedding the scalar first (the arithmetic is
// defined between interval and real values directly).
inline Interval scalar_mul(double c, Interval a) {
    if (!std::isfinite(c))
        throw std::invalid_argument("scalar factor must be finite");
    if (c >= 0.0)
        return detail::checked(c * a.lo, c * a.hi, "scalar_mul");
    return detail::checked(c * a.hi, c * a.lo, "scalar_mul");
}

inline double midpoint(Interval a) { return 0.5 * (a.lo + a.hi); }
inline double width(Interval a) { return a.hi - a.lo; }
inline double radius(Interval a) { return 0.5 * (a.hi - a.lo); }

inline bool is_degenerate(Interval a, double tol = 0.0) { return width(a) <= tol; }
inline bool contains(Interval a, double x) { return a.lo <= x && x <= a.hi; }
inline bool contains(Interval outer, Interval inner) {
    return outer.lo <= inner.lo && inner.hi <= outer.hi;
}

inline Interval operator+(Interval a, Interval b) { return add(a, b); }
inline Interval operator-(Interval a, Interval b) { return sub(a, b); }
inline Interval operator*(Interval a, Interval b) { return mul(a, b); }
inline Interval operator/(Interval a, Interval b) { return div(a, b); }
inline Interval operator*(double c, Interval a) { return scalar_mul(c, a); }

} // namespace interstatis
