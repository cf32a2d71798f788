#pragma once

// Sparse polynomials keyed by lattice points: Laurent polynomials in X_b
// (b in P), double polynomials in X_b Y_c, and ordinary polynomials in the
// fundamental-weight coordinates.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dahakit/ratfunc.hpp"
#include "dahakit/rootdata.hpp"

namespace dahakit {

template <class K, class S>
class SparsePoly {
   public:
    using Key = K;
    using Scalar = S;
    using Term = std::pair<K, S>;

    SparsePoly() = default;
    explicit SparsePoly(const S& c) {
        if (!scalar_is_zero(c)) terms_.push_back({K{}, c});
    }

    static SparsePoly monomial(const K& k, const S& c = S(1)) {
        SparsePoly p;
        if (!scalar_is_zero(c)) p.terms_.push_back({k, c});
        return p;
    }
    // sorts, merges equal keys and drops zeros
    static SparsePoly from_terms(std::vector<Term> ts) {
        std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
        SparsePoly p;
        for (auto& t : ts) {
            if (!p.terms_.empty() && p.terms_.back().first == t.first) {
                p.terms_.back().second += t.second;
            } else {
                if (!p.terms_.empty() && scalar_is_zero(p.terms_.back().second)) p.terms_.pop_back();
                p.terms_.push_back(std::move(t));
            }
        }
        if (!p.terms_.empty() && scalar_is_zero(p.terms_.back().second)) p.terms_.pop_back();
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    friend bool is_zero(const SparsePoly& p) { return p.terms_.empty(); }

    S coeff(const K& k) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                                   [](const Term& t, const K& key) { return t.first < key; });
        if (it != terms_.end() && it->first == k) return it->second;
        return S(0);
    }

    SparsePoly operator-() const {
        SparsePoly r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }
    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, false); }
    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, true); }
    SparsePoly& operator+=(const SparsePoly& o) { return *this = merge(*this, o, false); }
    SparsePoly& operator-=(const SparsePoly& o) { return *this = merge(*this, o, true); }

    friend SparsePoly operator*(const S& c, const SparsePoly& p) {
        if (scalar_is_zero(c)) return SparsePoly();
        SparsePoly r;
        r.terms_.reserve(p.terms_.size());
        for (const auto& t : p.terms_) {
            S v = c * t.second;
            if (!scalar_is_zero(v)) r.terms_.push_back({t.first, std::move(v)});
        }
        return r;
    }
    friend SparsePoly operator*(const SparsePoly& p, const S& c) { return c * p; }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        std::vector<Term> ts;
        ts.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_) ts.push_back({x.first + y.first, x.second * y.second});
        return from_terms(std::move(ts));
    }

    // multiply by the monomial with key k
    SparsePoly shifted(const K& k) const {
        SparsePoly r = *this;
        for (auto& t : r.terms_) t.first = t.first + k;
        std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
        return r;
    }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].first == b.terms_[i].first) || !(a.terms_[i].second == b.terms_[i].second))
                return false;
        return true;
    }
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

    // apply a coefficient map (e.g. specialization)
    template <class T, class F>
    SparsePoly<K, T> map_coefficients(F f) const {
        std::vector<std::pair<K, T>> ts;
        for (const auto& t : terms_) ts.push_back({t.first, f(t.second)});
        return SparsePoly<K, T>::from_terms(std::move(ts));
    }

    std::string to_string(const std::function<std::string(const K&)>& key_str) const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& t : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + scalar_string(t.second) + ")*" + key_str(t.first);
        }
        return s;
    }

   private:
    std::vector<Term> terms_;

    static std::string scalar_string(const S& c) {
        using dahakit::to_string;
        return to_string(c);
    }

    static SparsePoly merge(const SparsePoly& a, const SparsePoly& b, bool subtract) {
        SparsePoly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
                Term t = b.terms_[j++];
                if (subtract) t.second = -t.second;
                r.terms_.push_back(std::move(t));
            } else {
                S c = subtract ? S(a.terms_[i].second - b.terms_[j].second)
                               : S(a.terms_[i].second + b.terms_[j].second);
                if (!scalar_is_zero(c)) r.terms_.push_back({a.terms_[i].first, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }
};

template <class S>
using LaurentPoly = SparsePoly<Weight, S>;

// key of a double monomial X_x Y_y
struct XYKey {
    Weight x, y;
    friend auto operator<=>(const XYKey&, const XYKey&) = default;
    friend XYKey operator+(const XYKey& a, const XYKey& b) { return {a.x + b.x, a.y + b.y}; }
};

template <class S>
using XYPoly = SparsePoly<XYKey, S>;

// ordinary polynomials in x_{omega_1}, ..., x_{omega_n}; keys are exponent vectors
template <class S>
using OrdinaryPoly = SparsePoly<Weight, S>;

inline std::string x_monomial_string(const Weight& w, std::size_t n) { return "X^" + weight_string(w, n); }
inline std::string xy_monomial_string(const XYKey& k, std::size_t n) {
    return "X^{" + weight_string(k.x, n) + "}Y^{" + weight_string(k.y, n) + "}";
}

// finite test basis {b : all |omega-coordinates| <= d}
struct ProbeBox {
    int degree = 0;
    std::vector<Weight> weights;

    ProbeBox(std::size_t rank, int d) : degree(d) {
        Weight w;
        enumerate(rank, d, 0, w);
    }

   private:
    void enumerate(std::size_t rank, int d, std::size_t i, Weight& w) {
        if (i == rank) {
            weights.push_back(w);
            return;
        }
        for (int x = -d; x <= d; ++x) {
            w[i] = x;
            enumerate(rank, d, i + 1, w);
        }
        w[i] = 0;
    }
};

// Laurent exponents with sum_i |b_i| <= d
inline std::vector<Weight> laurent_ball(std::size_t rank, int d) {
    std::vector<Weight> out;
    for (const auto& w : ProbeBox(rank, d).weights) {
        int s = 0;
        for (std::size_t i = 0; i < rank; ++i) s += std::abs(w[i]);
        if (s <= d) out.push_back(w);
    }
    return out;
}

// exponent vectors with total degree <= d (nonnegative)
inline std::vector<Weight> ordinary_monomials(std::size_t rank, int d) {
    std::vector<Weight> out;
    std::function<void(std::size_t, int, Weight&)> rec = [&](std::size_t i, int left, Weight& w) {
        if (i == rank) {
            out.push_back(w);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            w[i] = x;
            rec(i + 1, left - x, w);
        }
        w[i] = 0;
    };
    Weight w;
    rec(0, d, w);
    return out;
}

// ---- the q,t coefficient ring ----

// powers of q, t_nu^{1/2} inside QtScalar for a fixed root datum
struct QtParams {
    DatumPtr datum;

    // q^x for x in (1/(2m)) Z
    QtScalar q_pow(const Rational& x) const {
        Rational e = x * 2 * datum->m();
        QtScalar::Exponent ex{};
        ex[0] = static_cast<int>(to_long(e));
        return QtScalar::monomial(ex);
    }
    QtScalar q() const { return q_pow(Rational(1)); }
    // t_nu^{k/2}
    static QtScalar t_half_pow(int nu, int k) {
        QtScalar::Exponent ex{};
        ex[nu == 1 ? 1 : 2] = k;
        return QtScalar::monomial(ex);
    }
    static QtScalar t_half(int nu) { return t_half_pow(nu, 1); }
    // t^{1/2} - t^{-1/2}
    static QtScalar t_diff(int nu) { return t_half_pow(nu, 1) - t_half_pow(nu, -1); }
};

// X_lambda -> X_{w lambda} q^{-(w lambda, b)} for the element t_b w
inline LaurentPoly<QtScalar> monomial_action(const QtParams& P, const ExtAffineElement& x,
                                             const LaurentPoly<QtScalar>& p) {
    std::vector<LaurentPoly<QtScalar>::Term> ts;
    ts.reserve(p.size());
    for (const auto& [lam, c] : p.terms()) {
        Weight wl = x.w * lam;
        ts.push_back({wl, c * P.q_pow(-P.datum->inner(wl, x.b))});
    }
    return LaurentPoly<QtScalar>::from_terms(std::move(ts));
}

// X_{-rho} prod_{alpha > 0} (t_alpha^{1/2} X_alpha - t_alpha^{-1/2})
inline LaurentPoly<QtScalar> build_discriminant(const DatumPtr& d, std::size_t* raw_terms = nullptr) {
    using LP = LaurentPoly<QtScalar>;
    LP delta = LP::monomial(-d->rho());
    std::size_t raw = 1;
    for (const auto& a : d->positive_roots()) {
        LP f = LP::monomial(a.omega, QtParams::t_half(a.nu)) - LP::monomial(Weight{}, QtParams::t_half_pow(a.nu, -1));
        delta = delta * f;
        raw *= 2;
    }
    if (raw_terms) *raw_terms = raw;
    return delta;
}

}  // namespace dahakit
