#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace kgsym {

/// Exact rational scalar, always held in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& r)
{
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline bool is_zero(const Rational& r) { return r.is_zero(); }

/// Binomial coefficient as an exact rational.
inline Rational binomial(int n, int k)
{
    if (k < 0 || k > n) return Rational(0);
    Integer acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i;
    }
    return Rational(acc);
}

} // namespace kgsym
