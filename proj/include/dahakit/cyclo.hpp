#pragma once

// Cyclotomic fields Q(z), z a primitive N-th root of unity. Elements are
// polynomials of degree < phi(N) reduced modulo the N-th cyclotomic
// polynomial. A default-constructed or integer-constructed element carries
// no field and adopts the field of the other operand.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "dahakit/errors.hpp"
#include "dahakit/rational.hpp"

namespace dahakit {

namespace upoly {

using Coeffs = std::vector<Rational>;

inline void trim(Coeffs& a) {
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

inline Coeffs mul(const Coeffs& a, const Coeffs& b) {
    if (a.empty() || b.empty()) return {};
    Coeffs r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

inline Coeffs sub(Coeffs a, const Coeffs& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// quotient and remainder of a by b (b nonzero)
inline std::pair<Coeffs, Coeffs> divmod(Coeffs a, const Coeffs& b) {
    trim(a);
    if (a.size() < b.size()) return {{}, a};
    Coeffs q(a.size() - b.size() + 1);
    Rational lead_inv = 1 / b.back();
    for (std::size_t k = a.size(); k-- >= b.size();) {
        Rational c = a[k] * lead_inv;
        std::size_t shift = k - (b.size() - 1);
        q[shift] = c;
        if (sgn(c) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    }
    a.resize(b.size() - 1);
    trim(a);
    trim(q);
    return {q, a};
}

// x^n - 1 divided by the cyclotomic polynomials of all proper divisors
inline Coeffs cyclotomic(long n) {
    Coeffs p(static_cast<std::size_t>(n) + 1);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = divmod(p, cyclotomic(d));
        if (!r.empty()) throw InternalError("cyclotomic division");
        p = q;
    }
    return p;
}

}  // namespace upoly

struct CycloField {
    long N;
    upoly::Coeffs phi;    // monic, degree phi(N)
    std::size_t degree;   // phi(N)
    std::vector<upoly::Coeffs> powers;  // z^j reduced, 0 <= j < N

    static std::shared_ptr<const CycloField> get(long n) {
        static std::mutex mu;
        static std::map<long, std::shared_ptr<const CycloField>> registry;
        if (n < 1) throw IncompatibleParameters("cyclotomic order must be positive");
        std::lock_guard<std::mutex> lock(mu);
        auto it = registry.find(n);
        if (it != registry.end()) return it->second;
        auto f = std::make_shared<CycloField>();
        f->N = n;
        f->phi = upoly::cyclotomic(n);
        f->degree = f->phi.size() - 1;
        for (long j = 0; j < n; ++j) {
            upoly::Coeffs mono(static_cast<std::size_t>(j) + 1);
            mono[static_cast<std::size_t>(j)] = 1;
            f->powers.push_back(f->reduce(std::move(mono)));
        }
        registry[n] = f;
        return f;
    }

    upoly::Coeffs reduce(upoly::Coeffs a) const {
        upoly::trim(a);
        if (a.size() <= degree) return a;
        for (std::size_t k = a.size(); k-- > degree;) {
            Rational c = a[k];
            if (sgn(c) == 0) continue;
            std::size_t shift = k - degree;
            for (std::size_t j = 0; j <= degree; ++j) a[shift + j] -= c * phi[j];
        }
        a.resize(degree);
        upoly::trim(a);
        return a;
    }
};

class CycloScalar {
   public:
    CycloScalar() = default;
    CycloScalar(long c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) c_.push_back(Rational(c));
    }
    CycloScalar(const Rational& c) {  // NOLINT(google-explicit-constructor)
        if (sgn(c) != 0) c_.push_back(c);
    }
    CycloScalar(std::shared_ptr<const CycloField> f, upoly::Coeffs c) : f_(std::move(f)) {
        c_ = f_->reduce(std::move(c));
    }

    // z^k in Q(zeta_N)
    static CycloScalar root_power(long N, long k) {
        auto f = CycloField::get(N);
        CycloScalar r;
        r.f_ = f;
        r.c_ = f->powers[static_cast<std::size_t>(pos_mod(k, N))];
        return r;
    }

    long order() const { return f_ ? f_->N : 0; }
    const upoly::Coeffs& coeffs() const { return c_; }
    friend bool is_zero(const CycloScalar& a) { return a.c_.empty(); }
    bool is_zero() const { return c_.empty(); }

    CycloScalar operator-() const {
        CycloScalar r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend CycloScalar operator+(const CycloScalar& a, const CycloScalar& b) {
        auto f = common(a, b);
        upoly::Coeffs r = a.c_;
        if (r.size() < b.c_.size()) r.resize(b.c_.size());
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        upoly::trim(r);
        return make(f, std::move(r));
    }
    friend CycloScalar operator-(const CycloScalar& a, const CycloScalar& b) {
        auto f = common(a, b);
        return make(f, upoly::sub(a.c_, b.c_));
    }
    friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b) {
        auto f = common(a, b);
        auto p = upoly::mul(a.c_, b.c_);
        if (f) p = f->reduce(std::move(p));
        return make(f, std::move(p));
    }
    friend CycloScalar operator/(const CycloScalar& a, const CycloScalar& b) { return a * b.inverse(); }
    CycloScalar& operator+=(const CycloScalar& o) { return *this = *this + o; }
    CycloScalar& operator-=(const CycloScalar& o) { return *this = *this - o; }
    CycloScalar& operator*=(const CycloScalar& o) { return *this = *this * o; }
    CycloScalar& operator/=(const CycloScalar& o) { return *this = *this / o; }

    friend bool operator==(const CycloScalar& a, const CycloScalar& b) {
        common(a, b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const CycloScalar& a, const CycloScalar& b) { return !(a == b); }

    CycloScalar inverse() const {
        if (c_.empty()) throw DivisionByZero();
        if (!f_) {
            if (c_.size() != 1) throw InternalError("unreduced context-free cyclotomic element");
            return CycloScalar(Rational(1 / c_[0]));
        }
        // extended Euclid: s*a + t*phi = g, g a nonzero constant
        upoly::Coeffs r0 = f_->phi, r1 = c_;
        upoly::Coeffs s0, s1{Rational(1)};
        while (r1.size() > 1) {
            auto [q, r] = upoly::divmod(r0, r1);
            auto s = upoly::sub(s0, upoly::mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s);
        }
        if (r1.empty()) throw InternalError("cyclotomic polynomial not irreducible");
        Rational inv = 1 / r1[0];
        for (auto& x : s1) x *= inv;
        return CycloScalar(f_, std::move(s1));
    }

    CycloScalar pow(long k) const {
        if (k < 0) return inverse().pow(-k);
        CycloScalar r(1), b = *this;
        while (k > 0) {
            if (k & 1) r *= b;
            k >>= 1;
            if (k) b *= b;
        }
        return r;
    }

    // field automorphism z -> z^a, gcd(a, N) = 1
    CycloScalar galois(long a) const {
        if (!f_) return *this;
        long N = f_->N;
        if (gcd_long(a, N) != 1) throw IncompatibleParameters("galois exponent not coprime to N");
        upoly::Coeffs r;
        for (std::size_t j = 0; j < c_.size(); ++j) {
            if (sgn(c_[j]) == 0) continue;
            const auto& p = f_->powers[static_cast<std::size_t>(pos_mod(static_cast<long>(j) * a, N))];
            if (r.size() < p.size()) r.resize(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) r[i] += c_[j] * p[i];
        }
        upoly::trim(r);
        return CycloScalar(f_, std::move(r));
    }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        for (std::size_t j = c_.size(); j-- > 0;) {
            if (sgn(c_[j]) == 0) continue;
            Rational a = abs(c_[j]);
            if (!s.empty()) s += sgn(c_[j]) < 0 ? " - " : " + ";
            else if (sgn(c_[j]) < 0) s += "-";
            if (j == 0 || a != 1) s += a.get_str() + (j ? "*" : "");
            if (j >= 1) s += "z";
            if (j > 1) s += "^" + std::to_string(j);
        }
        return s;
    }
    friend std::string to_string(const CycloScalar& a) { return a.to_string(); }

   private:
    std::shared_ptr<const CycloField> f_;
    upoly::Coeffs c_;

    static std::shared_ptr<const CycloField> common(const CycloScalar& a, const CycloScalar& b) {
        if (!a.f_) return b.f_;
        if (!b.f_) return a.f_;
        if (a.f_->N != b.f_->N)
            throw BackendMismatch("cyclotomic orders " + std::to_string(a.f_->N) + " and " +
                                  std::to_string(b.f_->N));
        return a.f_;
    }
    static CycloScalar make(const std::shared_ptr<const CycloField>& f, upoly::Coeffs c) {
        CycloScalar r;
        r.f_ = f;
        r.c_ = std::move(c);
        return r;
    }
};

}  // namespace dahakit
