#pragma once

// Sparse multivariate Laurent polynomials with rational coefficients, plus
// an exact multivariate gcd (recursive primitive PRS). Exponents may be
// negative; gcds are computed up to monomial units.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dahakit/coef.hpp"
#include "dahakit/rational.hpp"

namespace dahakit {

template <std::size_t NV>
class MPoly {
   public:
    using Exponent = std::array<int, NV>;
    struct Term {
        Exponent e;
        Coef c;
    };

    MPoly() = default;
    MPoly(long c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) terms_.push_back({Exponent{}, Coef(c)});
    }
    MPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
        if (sgn(c) != 0) terms_.push_back({Exponent{}, Coef(c)});
    }
    MPoly(const Coef& c) {  // NOLINT(google-explicit-constructor)
        if (sgn(c) != 0) terms_.push_back({Exponent{}, c});
    }

    static MPoly monomial(const Exponent& e, const Coef& c = Coef(1)) {
        MPoly p;
        if (sgn(c) != 0) p.terms_.push_back({e, c});
        return p;
    }
    static MPoly variable(std::size_t i, int power = 1) {
        Exponent e{};
        e[i] = power;
        return monomial(e);
    }

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].e == Exponent{});
    }
    bool is_one() const {
        return terms_.size() == 1 && terms_[0].e == Exponent{} && terms_[0].c.is_one();
    }
    Rational constant_term() const {
        for (const auto& t : terms_)
            if (t.e == Exponent{}) return t.c.to_rational();
        return Rational(0);
    }

    // lex-largest term
    const Term& leading() const {
        if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
        return terms_.back();
    }

    Exponent min_exponent() const {
        Exponent m{};
        if (terms_.empty()) return m;
        m = terms_[0].e;
        for (const auto& t : terms_)
            for (std::size_t i = 0; i < NV; ++i) m[i] = std::min(m[i], t.e[i]);
        return m;
    }
    Exponent max_exponent() const {
        Exponent m{};
        if (terms_.empty()) return m;
        m = terms_[0].e;
        for (const auto& t : terms_)
            for (std::size_t i = 0; i < NV; ++i) m[i] = std::max(m[i], t.e[i]);
        return m;
    }
    int degree(std::size_t var) const {
        if (terms_.empty()) return -1;
        int d = terms_[0].e[var];
        for (const auto& t : terms_) d = std::max(d, t.e[var]);
        return d;
    }
    bool involves(std::size_t var) const {
        for (const auto& t : terms_)
            if (t.e[var] != 0) return true;
        return false;
    }

    // multiply by the monomial x^delta
    MPoly shifted(const Exponent& delta) const {
        MPoly r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            Term nt{t.e, t.c};
            for (std::size_t i = 0; i < NV; ++i) nt.e[i] += delta[i];
            r.terms_.push_back(std::move(nt));
        }
        return r;
    }

    // rename variable i to perm[i]
    MPoly permuted(const std::array<std::size_t, NV>& perm) const {
        MPoly r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            Term nt{Exponent{}, t.c};
            for (std::size_t i = 0; i < NV; ++i) nt.e[perm[i]] = t.e[i];
            r.terms_.push_back(std::move(nt));
        }
        std::sort(r.terms_.begin(), r.terms_.end(), less_term);
        return r;
    }

    // coefficient of x_var^d, as a polynomial with x_var removed
    MPoly coefficient(std::size_t var, int d) const {
        MPoly r;
        for (const auto& t : terms_)
            if (t.e[var] == d) {
                Term nt{t.e, t.c};
                nt.e[var] = 0;
                r.terms_.push_back(std::move(nt));
            }
        std::sort(r.terms_.begin(), r.terms_.end(), less_term);
        return r;
    }

    MPoly operator-() const {
        MPoly r = *this;
        for (auto& t : r.terms_) t.c = -t.c;
        return r;
    }

    MPoly& operator+=(const MPoly& o) {
        *this = merge(*this, o, false);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        *this = merge(*this, o, true);
        return *this;
    }
    MPoly& operator*=(const MPoly& o) {
        *this = multiply(*this, o);
        return *this;
    }
    MPoly& operator*=(const Coef& c) {
        if (sgn(c) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& t : terms_) t.c *= c;
        return *this;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) { return merge(a, b, false); }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return merge(a, b, true); }
    friend MPoly operator*(const MPoly& a, const MPoly& b) { return multiply(a, b); }
    friend MPoly operator*(MPoly a, const Coef& c) {
        a *= c;
        return a;
    }
    friend MPoly operator*(const Coef& c, MPoly a) {
        a *= c;
        return a;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].e != b.terms_[i].e || a.terms_[i].c != b.terms_[i].c) return false;
        return true;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly pow(int k) const {
        if (k < 0) {
            if (!is_monomial()) throw std::domain_error("negative power of a non-monomial polynomial");
            Exponent e = terms_[0].e;
            for (auto& x : e) x *= k;
            Coef c = 1;
            for (int i = 0; i < -k; ++i) c /= terms_[0].c;
            return monomial(e, c);
        }
        MPoly r(1), base = *this;
        while (k > 0) {
            if (k & 1) r *= base;
            k >>= 1;
            if (k) base *= base;
        }
        return r;
    }

    std::string to_string(const std::array<const char*, NV>& names) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Coef& c = it->c;
            bool is_const = it->e == Exponent{};
            if (!first) os << (sgn(c) < 0 ? " - " : " + ");
            else if (sgn(c) < 0) os << "-";
            first = false;
            Coef a = abs(c);
            if (is_const || !a.is_one()) {
                os << a.str();
                if (!is_const) os << "*";
            }
            bool first_var = true;
            for (std::size_t i = 0; i < NV; ++i) {
                if (it->e[i] == 0) continue;
                if (!first_var) os << "*";
                first_var = false;
                os << names[i];
                if (it->e[i] != 1) os << "^" << it->e[i];
            }
        }
        return os.str();
    }

   private:
    std::vector<Term> terms_;  // sorted ascending by exponent (lex), no zero coefficients

    static bool less_term(const Term& a, const Term& b) { return a.e < b.e; }

    static MPoly merge(const MPoly& a, const MPoly& b, bool subtract) {
        MPoly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].e < b.terms_[j].e)) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || b.terms_[j].e < a.terms_[i].e) {
                Term t = b.terms_[j++];
                if (subtract) t.c = -t.c;
                r.terms_.push_back(std::move(t));
            } else {
                Coef c = subtract ? a.terms_[i].c - b.terms_[j].c : a.terms_[i].c + b.terms_[j].c;
                if (sgn(c) != 0) r.terms_.push_back({a.terms_[i].e, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    static MPoly multiply(const MPoly& a, const MPoly& b) {
        if (a.is_zero() || b.is_zero()) return MPoly();
        if (a.is_monomial()) return scale_shift(b, a.terms_[0]);
        if (b.is_monomial()) return scale_shift(a, b.terms_[0]);
        if (NV > 3 || !packable(a) || !packable(b)) return multiply_generic(a, b);
        // packed keys preserve lex order and add componentwise
        std::vector<std::pair<std::uint64_t, Coef>> prod;
        prod.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& x : a.terms_) {
            std::uint64_t kx = pack(x.e);
            for (const auto& y : b.terms_) prod.emplace_back(kx + pack(y.e) - kPackBias, x.c * y.c);
        }
        std::sort(prod.begin(), prod.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
        MPoly r;
        r.terms_.reserve(prod.size());
        std::size_t i = 0;
        while (i < prod.size()) {
            std::size_t j = i + 1;
            Coef c = std::move(prod[i].second);
            while (j < prod.size() && prod[j].first == prod[i].first) c += prod[j++].second;
            if (sgn(c) != 0) r.terms_.push_back({unpack(prod[i].first), std::move(c)});
            i = j;
        }
        return r;
    }

    static constexpr int kPackBits = 21;
    static constexpr std::int64_t kPackOffset = std::int64_t{1} << (kPackBits - 1);
    static constexpr std::int64_t kPackLimit = kPackOffset / 2;
    static constexpr std::uint64_t bias_of() {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < NV; ++i) k = (k << kPackBits) | static_cast<std::uint64_t>(kPackOffset);
        return k;
    }
    static constexpr std::uint64_t kPackBias = bias_of();

    static bool packable(const MPoly& p) {
        for (const auto& t : p.terms_)
            for (int x : t.e)
                if (x >= kPackLimit || x <= -kPackLimit) return false;
        return true;
    }
    static std::uint64_t pack(const Exponent& e) {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < NV; ++i) k = (k << kPackBits) | static_cast<std::uint64_t>(e[i] + kPackOffset);
        return k;
    }
    static Exponent unpack(std::uint64_t k) {
        Exponent e{};
        const std::uint64_t mask = (std::uint64_t{1} << kPackBits) - 1;
        for (std::size_t i = NV; i-- > 0;) {
            e[i] = static_cast<int>(static_cast<std::int64_t>(k & mask) - kPackOffset);
            k >>= kPackBits;
        }
        return e;
    }

    static MPoly multiply_generic(const MPoly& a, const MPoly& b) {
        std::vector<Term> prod;
        prod.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_) {
                Term t{x.e, x.c * y.c};
                for (std::size_t i = 0; i < NV; ++i) t.e[i] += y.e[i];
                prod.push_back(std::move(t));
            }
        std::sort(prod.begin(), prod.end(), less_term);
        MPoly r;
        for (auto& t : prod) {
            if (!r.terms_.empty() && r.terms_.back().e == t.e) {
                r.terms_.back().c += t.c;
                if (sgn(r.terms_.back().c) == 0) r.terms_.pop_back();
            } else {
                r.terms_.push_back(std::move(t));
            }
        }
        return r;
    }

    // lex order is translation invariant, so a monomial product keeps the order
    static MPoly scale_shift(const MPoly& p, const Term& m) {
        MPoly r;
        r.terms_.reserve(p.terms_.size());
        for (const auto& t : p.terms_) {
            Term nt{t.e, t.c * m.c};
            for (std::size_t i = 0; i < NV; ++i) nt.e[i] += m.e[i];
            r.terms_.push_back(std::move(nt));
        }
        return r;
    }
};

// Exact division in the Laurent ring; nullopt when b does not divide a.
template <std::size_t NV>
std::optional<MPoly<NV>> divide_exact(const MPoly<NV>& a, const MPoly<NV>& b) {
    using P = MPoly<NV>;
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return P();
    if (b.is_monomial()) {
        const auto& t = b.terms()[0];
        auto e = t.e;
        for (auto& x : e) x = -x;
        return a.shifted(e) * (Coef(1) / t.c);
    }
    // Newton polytope bounds: min(q) = min(a) - min(b), max(q) = max(a) - max(b)
    auto amin = a.min_exponent(), amax = a.max_exponent();
    auto bmin = b.min_exponent(), bmax = b.max_exponent();
    typename P::Exponent lo{}, hi{};
    for (std::size_t i = 0; i < NV; ++i) {
        lo[i] = amin[i] - bmin[i];
        hi[i] = amax[i] - bmax[i];
        if (lo[i] > hi[i]) return std::nullopt;
    }
    const auto& lb = b.leading();
    P q, r = a;
    while (!r.is_zero()) {
        const auto& lr = r.leading();
        typename P::Exponent d{};
        for (std::size_t i = 0; i < NV; ++i) {
            d[i] = lr.e[i] - lb.e[i];
            if (d[i] < lo[i] || d[i] > hi[i]) return std::nullopt;
        }
        P m = P::monomial(d, lr.c / lb.c);
        q += m;
        r -= m * b;
    }
    return q;
}

namespace detail {

template <std::size_t NV>
MPoly<NV> monic(const MPoly<NV>& p) {
    if (p.is_zero()) return p;
    return p * (Coef(1) / p.leading().c);
}

template <std::size_t NV>
MPoly<NV> to_polynomial(const MPoly<NV>& p) {
    auto m = p.min_exponent();
    for (auto& x : m) x = -x;
    return p.shifted(m);
}

template <std::size_t NV>
MPoly<NV> gcd_rec(const MPoly<NV>& a, const MPoly<NV>& b, int var);

template <std::size_t NV>
MPoly<NV> content(const MPoly<NV>& a, int var) {
    MPoly<NV> g;
    int d = a.degree(static_cast<std::size_t>(var));
    for (int j = 0; j <= d; ++j) {
        auto c = a.coefficient(static_cast<std::size_t>(var), j);
        if (c.is_zero()) continue;
        g = g.is_zero() ? monic(c) : gcd_rec(g, c, var - 1);
        if (g.is_constant()) return MPoly<NV>(1);
    }
    return g;
}

template <std::size_t NV>
MPoly<NV> primitive_part(const MPoly<NV>& a, int var) {
    if (a.is_zero()) return a;
    auto c = content(a, var);
    if (c.is_one()) return monic(a);
    auto q = divide_exact(a, c);
    if (!q) throw std::logic_error("content does not divide polynomial");
    return monic(*q);
}

template <std::size_t NV>
MPoly<NV> pseudo_remainder(MPoly<NV> r, const MPoly<NV>& b, int var) {
    auto v = static_cast<std::size_t>(var);
    int db = b.degree(v);
    auto lcb = b.coefficient(v, db);
    while (!r.is_zero() && r.degree(v) >= db) {
        int dr = r.degree(v);
        auto lcr = r.coefficient(v, dr);
        r = lcb * r - lcr * MPoly<NV>::variable(v, dr - db) * b;
    }
    return r;
}

template <std::size_t NV>
MPoly<NV> gcd_rec(const MPoly<NV>& a, const MPoly<NV>& b, int var) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (var < 0 || a.is_constant() || b.is_constant()) return MPoly<NV>(1);
    auto v = static_cast<std::size_t>(var);
    if (!a.involves(v) && !b.involves(v)) return gcd_rec(a, b, var - 1);
    auto ca = content(a, var), cb = content(b, var);
    auto gc = gcd_rec(ca, cb, var - 1);
    auto pa = primitive_part(a, var), pb = primitive_part(b, var);
    if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
    while (true) {
        if (pb.degree(v) == 0) {
            pa = MPoly<NV>(1);
            break;
        }
        auto r = pseudo_remainder(pa, pb, var);
        pa = pb;
        if (r.is_zero()) break;
        pb = primitive_part(r, var);
    }
    return monic(gc * pa);
}

}  // namespace detail

// gcd up to units (rational scalars and monomials); returned as a monic polynomial
template <std::size_t NV>
MPoly<NV> gcd(const MPoly<NV>& a, const MPoly<NV>& b) {
    if (a.is_zero()) return detail::monic(detail::to_polynomial(b));
    if (b.is_zero()) return detail::monic(detail::to_polynomial(a));
    // eliminate the variable of lowest degree first: it becomes the top index
    std::array<std::size_t, NV> order{}, perm{}, back{};
    for (std::size_t i = 0; i < NV; ++i) order[i] = i;
    auto key = [&](std::size_t v) {
        int da = a.degree(v) - a.min_exponent()[v], db = b.degree(v) - b.min_exponent()[v];
        return std::make_pair(std::min(da, db), std::max(da, db));
    };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return key(x) > key(y); });
    for (std::size_t k = 0; k < NV; ++k) {
        perm[order[k]] = k;
        back[k] = order[k];
    }
    auto g = detail::gcd_rec(detail::to_polynomial(a.permuted(perm)), detail::to_polynomial(b.permuted(perm)),
                             static_cast<int>(NV) - 1);
    return detail::monic(g.permuted(back));
}

}  // namespace dahakit
