#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dahakit {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// usable inside classes whose own is_zero member would hide the free function
template <class S>
bool scalar_is_zero(const S& s) {
    return is_zero(s);
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline long to_long(const Rational& r) {
    if (!is_integer(r)) throw std::domain_error("rational " + r.get_str() + " is not an integer");
    if (!r.get_num().fits_slong_p()) throw std::overflow_error("integer out of range");
    return r.get_num().get_si();
}

inline long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline long pos_mod(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

inline long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline long lcm_long(long a, long b) { return a / gcd_long(a, b) * b; }

}  // namespace dahakit
