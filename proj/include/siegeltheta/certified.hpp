#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace siegeltheta {

using complex_t = std::complex<double>;

/// A complex value together with a rigorous absolute bound on its
/// truncation error. Round-off is not tracked; at binary64 and the
/// summation sizes used here it sits far below the truncation bounds.
struct certified_complex {
    complex_t value{0.0, 0.0};
    double err = 0.0;

    certified_complex() = default;
    certified_complex(complex_t v, double e) : value(v), err(e) {
        if (!(err >= 0.0)) throw std::invalid_argument("certified_complex: err must be >= 0");
    }
    explicit certified_complex(complex_t v) : value(v) {}
    explicit certified_complex(double v) : value(v, 0.0) {}

    double abs_value() const { return std::abs(value); }
    // Upper bound on the relative error; infinity when the bound swallows the value.
    double rel_err() const {
        const double a = std::abs(value);
        return a > err ? err / (a - err) : std::numeric_limits<double>::infinity();
    }
};

inline certified_complex operator+(const certified_complex& a, const certified_complex& b) {
    return {a.value + b.value, a.err + b.err};
}
inline certified_complex operator-(const certified_complex& a, const certified_complex& b) {
    return {a.value - b.value, a.err + b.err};
}
inline certified_complex operator-(const certified_complex& a) { return {-a.value, a.err}; }

inline certified_complex operator*(const certified_complex& a, const certified_complex& b) {
    // |(a+da)(b+db) - ab| <= |a||db| + |b||da| + |da||db|
    const double aa = std::abs(a.value), ab = std::abs(b.value);
    return {a.value * b.value, aa * b.err + ab * a.err + a.err * b.err};
}
inline certified_complex operator*(const certified_complex& a, const complex_t& c) {
    return {a.value * c, a.err * std::abs(c)};
}
inline certified_complex operator*(const complex_t& c, const certified_complex& a) { return a * c; }
inline certified_complex operator*(const certified_complex& a, double c) {
    return {a.value * c, a.err * std::abs(c)};
}
inline certified_complex operator*(double c, const certified_complex& a) { return a * c; }

inline certified_complex operator/(const certified_complex& a, const certified_complex& b) {
    const double ab = std::abs(b.value);
    if (!(b.err < ab))
        throw std::domain_error("certified division: denominator bound covers zero");
    // |(a+da)/(b+db) - a/b| <= (|da| + |a/b||db|) / (|b| - |db|)
    const complex_t q = a.value / b.value;
    return {q, (a.err + std::abs(q) * b.err) / (ab - b.err)};
}

inline certified_complex pow_int(certified_complex base, unsigned n) {
    certified_complex out(complex_t{1.0, 0.0});
    while (n) {
        if (n & 1u) out = out * base;
        base = base * base;
        n >>= 1u;
    }
    return out;
}

} // namespace siegeltheta
