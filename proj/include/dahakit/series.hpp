#pragma once

// Truncated Laurent series c_{-1} z^{-1} + c_0 + ... + c_K z^K over an exact
// base field, with at most a simple pole. The truncation order tracks
// precision: a product is known exactly up to the order its operands allow,
// and inverting a series of valuation one costs two orders.

#include <algorithm>
#include <climits>
#include <string>
#include <utility>
#include <vector>

#include "dahakit/errors.hpp"
#include "dahakit/rational.hpp"

namespace dahakit {

template <class S>
class SeriesScalar {
   public:
    static constexpr int kExact = INT_MAX / 4;

    SeriesScalar() : c_{S(0), S(0)} {}
    SeriesScalar(long c) : c_{S(0), S(c)} {}       // NOLINT(google-explicit-constructor)
    SeriesScalar(const S& c) : c_{S(0), c} {}      // NOLINT(google-explicit-constructor)

    // coeffs[0] is the order -1 coefficient; missing entries are zero
    SeriesScalar(char var, int K, std::vector<S> coeffs) : var_(var), K_(K) {
        if (K < -1) throw IncompatibleParameters("truncation order below -1");
        coeffs.resize(static_cast<std::size_t>(K) + 2, S(0));
        c_ = std::move(coeffs);
    }

    static SeriesScalar variable(char var, int K) {
        std::vector<S> c(static_cast<std::size_t>(K) + 2, S(0));
        if (K >= 1) c[2] = S(1);
        return SeriesScalar(var, K, std::move(c));
    }
    static SeriesScalar constant(char var, int K, const S& v) {
        std::vector<S> c(static_cast<std::size_t>(K) + 2, S(0));
        if (K >= 0) c[1] = v;
        return SeriesScalar(var, K, std::move(c));
    }

    bool is_exact_constant() const { return var_ == 0; }
    char var() const { return var_; }
    int trunc() const { return var_ == 0 ? kExact : K_; }

    // coefficient of z^j, -1 <= j
    S coeff(int j) const {
        if (j < -1) return S(0);
        if (var_ == 0) return j == 0 ? c_[1] : S(0);
        if (j > K_) return S(0);
        return c_[static_cast<std::size_t>(j + 1)];
    }

    // lowest order with nonzero coefficient; trunc()+1 for zero
    int valuation() const {
        int top = var_ == 0 ? 0 : K_;
        for (int j = -1; j <= top; ++j)
            if (!is_zero(coeff(j))) return j;
        return var_ == 0 ? kExact : K_ + 1;
    }

    friend bool is_zero(const SeriesScalar& a) { return a.valuation() > (a.var_ == 0 ? 0 : a.K_); }

    SeriesScalar truncate(int K) const {
        if (var_ == 0) return *this;
        if (K > K_) throw IncompatibleParameters("truncation order above available precision");
        std::vector<S> c(c_.begin(), c_.begin() + K + 2);
        return SeriesScalar(var_, K, std::move(c));
    }

    SeriesScalar operator-() const {
        SeriesScalar r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend SeriesScalar operator+(const SeriesScalar& a, const SeriesScalar& b) { return add(a, b, false); }
    friend SeriesScalar operator-(const SeriesScalar& a, const SeriesScalar& b) { return add(a, b, true); }

    friend SeriesScalar operator*(const SeriesScalar& a, const SeriesScalar& b) {
        char v = common(a, b);
        if (v == 0) return SeriesScalar(S(a.c_[1] * b.c_[1]));
        int va = a.valuation(), vb = b.valuation();
        long ka = a.trunc(), kb = b.trunc();
        long kr = std::min(ka + vb, kb + va);
        kr = std::min<long>(kr, std::max(a.var_ ? a.K_ : 0, b.var_ ? b.K_ : 0));
        kr = std::max<long>(kr, -1);
        if (!is_zero(S(a.coeff(-1) * b.coeff(-1))))
            throw NotInvertible("series product has a pole of order two");
        std::vector<S> c(static_cast<std::size_t>(kr) + 2, S(0));
        for (int n = -1; n <= kr; ++n) {
            S acc(0);
            for (int i = -1; i <= n + 1; ++i) {
                int j = n - i;
                if (i > ka || j > kb) continue;
                const S& x = a.coeff(i);
                if (is_zero(x)) continue;
                acc += x * b.coeff(j);
            }
            c[static_cast<std::size_t>(n + 1)] = acc;
        }
        return SeriesScalar(v, static_cast<int>(kr), std::move(c));
    }

    friend SeriesScalar operator/(const SeriesScalar& a, const SeriesScalar& b) { return a * b.inverse(); }
    SeriesScalar& operator+=(const SeriesScalar& o) { return *this = *this + o; }
    SeriesScalar& operator-=(const SeriesScalar& o) { return *this = *this - o; }
    SeriesScalar& operator*=(const SeriesScalar& o) { return *this = *this * o; }
    SeriesScalar& operator/=(const SeriesScalar& o) { return *this = *this / o; }

    // equal up to the common precision
    friend bool operator==(const SeriesScalar& a, const SeriesScalar& b) {
        common(a, b);
        int top = static_cast<int>(std::min<long>(a.trunc(), b.trunc()));
        if (top == kExact) top = 0;
        for (int j = -1; j <= top; ++j)
            if (a.coeff(j) != b.coeff(j)) return false;
        return true;
    }
    friend bool operator!=(const SeriesScalar& a, const SeriesScalar& b) { return !(a == b); }

    SeriesScalar inverse() const {
        if (var_ == 0) {
            if (is_zero(c_[1])) throw DivisionByZero();
            return SeriesScalar(S(S(1) / c_[1]));
        }
        int v = valuation();
        if (v > K_) throw DivisionByZero("inverse of a series that vanishes to the available precision");
        if (v > 1) throw NotInvertible("series of valuation " + std::to_string(v) + " needs a pole of order > 1");
        // a = z^v A with A(0) != 0, A known through order K - v
        int known = K_ - v;
        std::vector<S> A(static_cast<std::size_t>(known) + 1, S(0));
        for (int j = 0; j <= known; ++j) A[static_cast<std::size_t>(j)] = coeff(j + v);
        std::vector<S> B(A.size(), S(0));
        S inv0 = S(S(1) / A[0]);
        B[0] = inv0;
        for (std::size_t n = 1; n < A.size(); ++n) {
            S acc(0);
            for (std::size_t i = 1; i <= n; ++i) {
                if (is_zero(A[i])) continue;
                acc += A[i] * B[n - i];
            }
            B[n] = -(acc * inv0);
        }
        // result z^{-v} B, known through order known - v, capped at K
        int kr = std::min(K_, known - v);
        std::vector<S> c(static_cast<std::size_t>(kr) + 2, S(0));
        for (int j = -1; j <= kr; ++j) {
            int idx = j + v;
            if (idx >= 0 && idx < static_cast<int>(B.size())) c[static_cast<std::size_t>(j + 1)] = B[static_cast<std::size_t>(idx)];
        }
        return SeriesScalar(var_, kr, std::move(c));
    }

    std::string to_string() const {
        std::string s;
        std::string name(1, var_ ? var_ : 'z');
        int top = var_ == 0 ? 0 : K_;
        for (int j = -1; j <= top; ++j) {
            S x = coeff(j);
            if (is_zero(x)) continue;
            if (!s.empty()) s += " + ";
            s += "(" + dahakit_to_string(x) + ")";
            if (j != 0) s += "*" + name + (j == 1 ? "" : "^" + std::to_string(j));
        }
        if (s.empty()) s = "0";
        if (var_) s += " + O(" + name + "^" + std::to_string(K_ + 1) + ")";
        return s;
    }

   private:
    char var_ = 0;  // 0: exact constant (no variable, infinite precision)
    int K_ = 0;
    std::vector<S> c_;

    static std::string dahakit_to_string(const S& x) {
        using dahakit::to_string;
        return to_string(x);
    }

    static char common(const SeriesScalar& a, const SeriesScalar& b) {
        if (a.var_ == 0) return b.var_;
        if (b.var_ == 0) return a.var_;
        if (a.var_ != b.var_)
            throw BackendMismatch(std::string("series variables ") + a.var_ + " and " + b.var_);
        return a.var_;
    }

    static SeriesScalar add(const SeriesScalar& a, const SeriesScalar& b, bool subtract) {
        char v = common(a, b);
        if (v == 0) return SeriesScalar(S(subtract ? S(a.c_[1] - b.c_[1]) : S(a.c_[1] + b.c_[1])));
        int kr = static_cast<int>(std::min<long>(a.trunc(), b.trunc()));
        std::vector<S> c(static_cast<std::size_t>(kr) + 2, S(0));
        for (int j = -1; j <= kr; ++j)
            c[static_cast<std::size_t>(j + 1)] = subtract ? S(a.coeff(j) - b.coeff(j)) : S(a.coeff(j) + b.coeff(j));
        return SeriesScalar(v, kr, std::move(c));
    }
};

// exp(s) for a series without pole or constant term
template <class S>
SeriesScalar<S> series_exp(const SeriesScalar<S>& s) {
    if (s.valuation() < 1) throw NotInvertible("exponential of a series with nonzero constant or pole");
    SeriesScalar<S> result(1), term(1);
    int K = s.trunc();
    for (int n = 1; n <= K; ++n) {
        term = term * s * SeriesScalar<S>(S(Rational(1, n)));
        result += term;
    }
    return result.truncate(std::min(K, result.trunc()));
}

}  // namespace dahakit
