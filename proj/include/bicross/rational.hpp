#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace bicross {

// Exact arbitrary-precision scalars. No floating point anywhere in the core.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline long long to_int64(const BigInt& v) {
    if (v > (std::numeric_limits<long long>::max)() ||
        v < (std::numeric_limits<long long>::min)())
        throw std::overflow_error("integer too large for int64 serialization: " + v.str());
    return static_cast<long long>(v);
}

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

// floor-mod into [0, m)
inline long long imod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace bicross
