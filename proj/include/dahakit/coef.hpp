#pragma once

// Exact rational coefficient with an inline int64 fast path. Values that are
// integers fitting in 64 bits never touch GMP; everything else is held as a
// canonical mpq.

#include <cstdint>
#include <memory>
#include <string>
#include <utility>

#include "dahakit/rational.hpp"

namespace dahakit {

class Coef {
   public:
    Coef() = default;
    Coef(long v) : s_(v) {}  // NOLINT(google-explicit-constructor)
    Coef(int v) : s_(v) {}   // NOLINT(google-explicit-constructor)
    Coef(const Rational& r) { assign(r); }  // NOLINT(google-explicit-constructor)

    Coef(const Coef& o) : s_(o.s_), big_(o.big_ ? std::make_unique<Rational>(*o.big_) : nullptr) {}
    Coef(Coef&& o) noexcept = default;
    Coef& operator=(const Coef& o) {
        if (this != &o) {
            s_ = o.s_;
            big_ = o.big_ ? std::make_unique<Rational>(*o.big_) : nullptr;
        }
        return *this;
    }
    Coef& operator=(Coef&& o) noexcept = default;

    bool is_small() const { return !big_; }
    Rational to_rational() const { return big_ ? *big_ : Rational(static_cast<long>(s_)); }
    int sign() const { return big_ ? sgn(*big_) : (s_ > 0) - (s_ < 0); }
    bool is_one() const { return !big_ && s_ == 1; }
    std::string str() const { return big_ ? big_->get_str() : std::to_string(s_); }

    Coef operator-() const {
        if (!big_ && s_ != INT64_MIN) return Coef(static_cast<long>(-s_));
        return Coef(Rational(-to_rational()));
    }
    friend Coef operator+(const Coef& a, const Coef& b) {
        std::int64_t r;
        if (!a.big_ && !b.big_ && !__builtin_add_overflow(a.s_, b.s_, &r)) return Coef(static_cast<long>(r));
        return Coef(Rational(a.to_rational() + b.to_rational()));
    }
    friend Coef operator-(const Coef& a, const Coef& b) {
        std::int64_t r;
        if (!a.big_ && !b.big_ && !__builtin_sub_overflow(a.s_, b.s_, &r)) return Coef(static_cast<long>(r));
        return Coef(Rational(a.to_rational() - b.to_rational()));
    }
    friend Coef operator*(const Coef& a, const Coef& b) {
        std::int64_t r;
        if (!a.big_ && !b.big_ && !__builtin_mul_overflow(a.s_, b.s_, &r)) return Coef(static_cast<long>(r));
        return Coef(Rational(a.to_rational() * b.to_rational()));
    }
    friend Coef operator/(const Coef& a, const Coef& b) {
        if (b.sign() == 0) throw std::domain_error("coefficient division by zero");
        if (!a.big_ && !b.big_ && b.s_ != -1 && a.s_ % b.s_ == 0) return Coef(static_cast<long>(a.s_ / b.s_));
        return Coef(Rational(a.to_rational() / b.to_rational()));
    }
    Coef& operator+=(const Coef& o) {
        std::int64_t r;
        if (!big_ && !o.big_ && !__builtin_add_overflow(s_, o.s_, &r)) {
            s_ = r;
            return *this;
        }
        return *this = *this + o;
    }
    Coef& operator-=(const Coef& o) { return *this = *this - o; }
    Coef& operator*=(const Coef& o) { return *this = *this * o; }
    Coef& operator/=(const Coef& o) { return *this = *this / o; }

    friend bool operator==(const Coef& a, const Coef& b) {
        if (!a.big_ && !b.big_) return a.s_ == b.s_;
        if (!a.big_ || !b.big_) return false;  // both canonical: a small value is never stored big
        return *a.big_ == *b.big_;
    }
    friend bool operator!=(const Coef& a, const Coef& b) { return !(a == b); }
    friend bool operator<(const Coef& a, const Coef& b) {
        if (!a.big_ && !b.big_) return a.s_ < b.s_;
        return a.to_rational() < b.to_rational();
    }

   private:
    std::int64_t s_ = 0;
    std::unique_ptr<Rational> big_;

    void assign(const Rational& r) {
        if (r.get_den() == 1 && r.get_num().fits_slong_p()) {
            s_ = r.get_num().get_si();
            big_.reset();
        } else {
            s_ = 0;
            big_ = std::make_unique<Rational>(r);
            big_->canonicalize();
            if (big_->get_den() == 1 && big_->get_num().fits_slong_p()) {
                s_ = big_->get_num().get_si();
                big_.reset();
            }
        }
    }
};

inline int sgn(const Coef& c) { return c.sign(); }
inline Coef abs(const Coef& c) { return c.sign() < 0 ? -c : c; }

}  // namespace dahakit
