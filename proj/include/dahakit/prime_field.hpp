#pragma once

// Residues modulo a prime p. p = 0 marks a context-free integer constant
// that adopts the modulus of the other operand.

#include <string>

#include "dahakit/errors.hpp"
#include "dahakit/rational.hpp"

namespace dahakit {

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

class PrimeField {
   public:
    PrimeField() = default;
    PrimeField(long c) : v_(c) {}  // NOLINT(google-explicit-constructor)
    PrimeField(long c, long p) : v_(pos_mod(c, p)), p_(p) {
        if (!is_prime(p)) throw IncompatibleParameters("modulus " + std::to_string(p) + " is not prime");
    }

    long value() const { return v_; }
    long modulus() const { return p_; }
    friend bool is_zero(const PrimeField& a) { return a.canonical() == 0; }
    bool is_zero() const { return canonical() == 0; }

    PrimeField operator-() const { return make(-v_, p_); }
    friend PrimeField operator+(const PrimeField& a, const PrimeField& b) {
        return make(a.v_ + b.v_, common(a, b));
    }
    friend PrimeField operator-(const PrimeField& a, const PrimeField& b) {
        return make(a.v_ - b.v_, common(a, b));
    }
    friend PrimeField operator*(const PrimeField& a, const PrimeField& b) {
        long p = common(a, b);
        if (p == 0) return PrimeField(a.v_ * b.v_);
        return make(pos_mod(a.v_, p) * pos_mod(b.v_, p), p);
    }
    friend PrimeField operator/(const PrimeField& a, const PrimeField& b) {
        long p = common(a, b);
        return a * make(b.v_, p).inverse();
    }
    PrimeField& operator+=(const PrimeField& o) { return *this = *this + o; }
    PrimeField& operator-=(const PrimeField& o) { return *this = *this - o; }
    PrimeField& operator*=(const PrimeField& o) { return *this = *this * o; }
    PrimeField& operator/=(const PrimeField& o) { return *this = *this / o; }

    friend bool operator==(const PrimeField& a, const PrimeField& b) {
        long p = common(a, b);
        if (p == 0) return a.v_ == b.v_;
        return pos_mod(a.v_, p) == pos_mod(b.v_, p);
    }
    friend bool operator!=(const PrimeField& a, const PrimeField& b) { return !(a == b); }

    PrimeField inverse() const {
        if (is_zero()) throw DivisionByZero();
        if (p_ == 0) {
            if (v_ == 1 || v_ == -1) return PrimeField(v_);
            throw BackendMismatch("inverse of an integer constant without a modulus");
        }
        // extended Euclid on (v, p)
        long r0 = p_, r1 = v_, s0 = 0, s1 = 1;
        while (r1 != 0) {
            long q = r0 / r1;
            long r = r0 - q * r1;
            r0 = r1;
            r1 = r;
            long s = s0 - q * s1;
            s0 = s1;
            s1 = s;
        }
        return make(s0, p_);
    }

    std::string to_string() const { return std::to_string(canonical()); }
    friend std::string to_string(const PrimeField& a) { return a.to_string(); }

   private:
    long v_ = 0;
    long p_ = 0;

    long canonical() const { return p_ ? pos_mod(v_, p_) : v_; }

    static long common(const PrimeField& a, const PrimeField& b) {
        if (a.p_ == 0) return b.p_;
        if (b.p_ == 0) return a.p_;
        if (a.p_ != b.p_)
            throw BackendMismatch("prime moduli " + std::to_string(a.p_) + " and " + std::to_string(b.p_));
        return a.p_;
    }
    static PrimeField make(long v, long p) {
        PrimeField r;
        r.p_ = p;
        r.v_ = p ? pos_mod(v, p) : v;
        return r;
    }
};

}  // namespace dahakit
