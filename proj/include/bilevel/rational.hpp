// Exact integer and rational value types used everywhere in the library.
// All certification arithmetic is exact; floating point appears only in
// optional decimal rendering for human-readable output.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bilevel {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

// Exact divisibility of a rational by a nonzero rational: q ∈ c·Z.
inline bool divisible(const Rat& q, const Rat& c) {
    if (c == 0) throw std::invalid_argument("divisible: zero modulus");
    return is_integer(Rat(q / c));
}

inline Int ipow(Int base, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

// "7/3" for non-integers, "7" for integers.
inline std::string rat_str(const Rat& q) {
    if (is_integer(q)) return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

// Fixed-point decimal rendering (display only; never used in computation).
inline std::string rat_decimal(const Rat& q, unsigned digits = 4) {
    Int n = rat_num(q), d = rat_den(q);
    bool neg = n < 0;
    if (neg) n = -n;
    Int scale = ipow(10, digits);
    Int scaled = (n * scale + d / 2) / d;  // rounded
    Int whole = scaled / scale, frac = scaled % scale;
    std::string fs = frac.str();
    fs.insert(fs.begin(), digits - fs.size(), '0');
    return (neg ? "-" : "") + whole.str() + "." + fs;
}

inline Int int_gcd(Int a, Int b) {
    return boost::multiprecision::gcd(a, b);
}

}  // namespace bilevel
