#pragma once

// Rational functions over Q in a fixed set of Laurent variables.
// Equality is tested by cross-multiplication; gcd reduction runs only when
// the representation grows past a term threshold.

#include <array>
#include <cstddef>
#include <string>
#include <utility>

#include "dahakit/errors.hpp"
#include "dahakit/mpoly.hpp"

namespace dahakit {

template <class Vars>
class RatFunc {
   public:
    static constexpr std::size_t NV = Vars::count;
    using Poly = MPoly<NV>;
    using Exponent = typename Poly::Exponent;
    static constexpr std::size_t kGcdThreshold = 6;

    RatFunc() = default;
    RatFunc(long c) : num_(c), den_(1) {}                  // NOLINT(google-explicit-constructor)
    RatFunc(const Rational& c) : num_(c), den_(1) {}       // NOLINT(google-explicit-constructor)
    RatFunc(Poly num) : num_(std::move(num)), den_(1) {}   // NOLINT(google-explicit-constructor)
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZero();
        normalize();
    }

    static RatFunc var(std::size_t i, int power = 1) { return RatFunc(Poly::variable(i, power)); }
    static RatFunc monomial(const Exponent& e, const Coef& c = Coef(1)) {
        return RatFunc(Poly::monomial(e, c));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_polynomial() const { return den_.is_one(); }
    friend bool is_zero(const RatFunc& a) { return a.num_.is_zero(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ + b.num_);
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ - b.num_);
        if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.num_.is_zero() || b.num_.is_zero()) return RatFunc();
        if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_);
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.num_.is_zero()) throw DivisionByZero();
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inverse() const {
        if (num_.is_zero()) throw DivisionByZero();
        return RatFunc(den_, num_);
    }

    RatFunc pow(int k) const {
        if (k < 0) return inverse().pow(-k);
        if (den_.is_one()) return RatFunc(num_.pow(k));
        return RatFunc(num_.pow(k), den_.pow(k));
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        if (a.den_.is_one() && b.den_.is_one()) return a.num_ == b.num_;
        if (a.den_ == b.den_) return a.num_ == b.num_;
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    // fully reduced form: gcd removed regardless of size
    RatFunc reduced() const {
        RatFunc r = *this;
        r.cancel_gcd();
        return r;
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string(Vars::names);
        return "(" + num_.to_string(Vars::names) + ")/(" + den_.to_string(Vars::names) + ")";
    }
    friend std::string to_string(const RatFunc& a) { return a.to_string(); }

   private:
    Poly num_;
    Poly den_{1};

    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        if (den_.is_monomial()) {
            fold_monomial_denominator();
            return;
        }
        // strip a common monomial factor from the denominator, make it monic
        auto m = den_.min_exponent();
        for (auto& x : m) x = -x;
        den_ = den_.shifted(m);
        num_ = num_.shifted(m);
        Coef lc = den_.leading().c;
        if (!lc.is_one()) {
            Coef inv = Coef(1) / lc;
            den_ *= inv;
            num_ *= inv;
        }
        if (num_.size() + den_.size() > kGcdThreshold) cancel_gcd();
    }

    void fold_monomial_denominator() {
        const auto& t = den_.terms()[0];
        auto e = t.e;
        for (auto& x : e) x = -x;
        Coef inv = Coef(1) / t.c;
        num_ = num_.shifted(e) * inv;
        den_ = Poly(1);
    }

    void cancel_gcd() {
        if (den_.is_one() || num_.is_zero()) return;
        auto g = gcd(num_, den_);
        if (!g.is_constant()) {
            auto n = divide_exact(num_, g);
            auto d = divide_exact(den_, g);
            if (!n || !d) throw InternalError("gcd does not divide operands");
            num_ = std::move(*n);
            den_ = std::move(*d);
        }
        if (den_.is_monomial()) {
            fold_monomial_denominator();
            return;
        }
        Coef lc = den_.leading().c;
        if (!lc.is_one()) {
            Coef inv = Coef(1) / lc;
            den_ *= inv;
            num_ *= inv;
        }
    }
};

struct QtVars {
    static constexpr std::size_t count = 3;
    static constexpr std::array<const char*, 3> names{"u", "vs", "vl"};
    static constexpr const char* label = "qt";
};

struct KVars {
    static constexpr std::size_t count = 2;
    static constexpr std::array<const char*, 2> names{"ks", "kl"};
    static constexpr const char* label = "k";
};

// u = q^{1/(2m)}, vs = t_sht^{1/2}, vl = t_lng^{1/2}
using QtScalar = RatFunc<QtVars>;
// ks = k_sht, kl = k_lng
using KScalar = RatFunc<KVars>;

}  // namespace dahakit
