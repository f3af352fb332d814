#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace welding {

// Exact arbitrary-precision scalars. cpp_rational keeps values in lowest
// terms with positive denominator, which is the canonical form everything
// downstream (printing, hashing, equality) relies on.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long n, long long d = 1) { return Rational(n, d); }

inline std::string to_string(const Rational& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// Parses "p" or "p/q". Throws on malformed input or q == 0.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        const Int num(s.substr(0, slash));
        const Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument(std::string("bad rational literal '") + s + "': " + e.what());
    }
}

inline Rational binomial(const Rational& a, long k) {
    // generalized binomial coefficient a(a-1)...(a-k+1)/k!
    Rational prod = 1;
    for (long i = 0; i < k; ++i) {
        prod *= a - i;
        prod /= (i + 1);
    }
    return prod;
}

inline Int factorial(long n) {
    Int f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace welding
