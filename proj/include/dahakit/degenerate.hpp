#pragma once

// Degenerate and rational DAHA actions: trigonometric Dunkl operators on
// Q_k[X] and rational Dunkl operators on Q_k[x], their cross relations, and
// the Gaussian / tau structure.

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "dahakit/laurent.hpp"
#include "dahakit/linalg.hpp"
#include "dahakit/linop.hpp"
#include "dahakit/mpoly.hpp"
#include "dahakit/report.hpp"

namespace dahakit {

using KPoly = LaurentPoly<KScalar>;    // keys are X-weights
using OrdPoly = OrdinaryPoly<KScalar>;  // keys are exponent vectors in x_{omega_i}
using KOp = LinOp<KPoly>;
using QPoly4 = MPoly<kMaxRank>;  // ordinary polynomials over Q, used for exact division

inline KScalar k_param(int nu) { return KScalar::var(nu == 1 ? 0 : 1); }

inline std::string ord_monomial_string(const Weight& e, std::size_t n) { return "x^" + weight_string(e, n); }

inline QPoly4 qmonomial(const Weight& e) { return QPoly4::monomial(e.c); }

// the linear form x_c = sum_i c_i x_{omega_i}, c given by rational coordinates
inline QPoly4 linear_form(const std::vector<Rational>& c) {
    QPoly4 p;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (sgn(c[i]) == 0) continue;
        std::array<int, kMaxRank> e{};
        e[i] = 1;
        p += QPoly4::monomial(e, Coef(c[i]));
    }
    return p;
}
inline QPoly4 linear_form(const Weight& c, std::size_t n) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(Rational(c[i]));
    return linear_form(v);
}

inline OrdPoly to_ord(const QPoly4& p, const KScalar& scale = KScalar(1)) {
    std::vector<OrdPoly::Term> ts;
    for (const auto& t : p.terms()) {
        Weight w;
        w.c = t.e;
        ts.push_back({w, scale * KScalar(t.c.to_rational())});
    }
    return OrdPoly::from_terms(std::move(ts));
}

// substitute x_i -> images[i] in a monomial
inline QPoly4 substitute_monomial(const Weight& e, const std::vector<QPoly4>& images) {
    QPoly4 r(1);
    for (std::size_t i = 0; i < images.size(); ++i)
        if (e[i] > 0) r *= images[i].pow(e[i]);
    return r;
}

class DegenerateRep {
   public:
    DegenerateRep(const DegenerateRep&) = delete;
    DegenerateRep& operator=(const DegenerateRep&) = delete;
    explicit DegenerateRep(DatumPtr d) : d_(std::move(d)), n_(d_->rank()) {
        for (const auto& a : d_->positive_roots()) {
            pos_.push_back(a);
            xa_.push_back(linear_form(a.omega, n_));
            diff_trig_.push_back(make_trig_difference(a));
            diff_rat_.push_back(make_rational_difference(a, xa_.back()));
        }
    }

    const DatumPtr& datum() const { return d_; }
    const std::vector<Root>& positive_roots() const { return pos_; }
    KScalar k_of(const Root& a) const { return k_param(a.nu); }

    // (rho_k, b) = 1/2 sum_{alpha > 0} k_alpha (alpha, b)
    KScalar rho_k_pairing(const Weight& b) const {
        KScalar s;
        for (const auto& a : pos_) s += k_of(a) * KScalar(Rational(d_->inner(a.omega, b) / 2));
        return s;
    }

    // ---- trigonometric level, on Q_k[X] ----

    // (1 - s_alpha) / (1 - X_alpha^{-1}) for the j-th positive root
    const KOp& trig_difference(std::size_t j) const { return diff_trig_.at(j); }

    const KOp& trig_dunkl(const Weight& b) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = trig_.find(b);
        if (it != trig_.end()) return it->second;
        return trig_.emplace(b, make_trig_dunkl(b)).first->second;
    }
    // y_{[b,u]} = D_b + u
    KOp y(const Weight& b, const Rational& u = Rational(0)) const {
        if (sgn(u) == 0) return trig_dunkl(b);
        return trig_dunkl(b) + KOp::scalar(KScalar(u));
    }
    // X_c -> X_{w c}
    KOp reflect_x(const IMat& w, const std::string& tag) const {
        return KOp(tag, [w](const Weight& c) { return KPoly::monomial(w * c); }, false);
    }
    KOp simple_reflection_x(std::size_t i) const { return reflect_x(d_->s(i), "s" + std::to_string(i)); }
    KOp mult_x(const Weight& c) const { return KOp::multiply_by(KPoly::monomial(c), "X" + d_->weight_str(c)); }

    // ---- rational level, on Q_k[x] ----

    // (1 - s_alpha) / x_alpha on ordinary polynomials, exact
    const KOp& rational_difference(std::size_t j) const { return diff_rat_.at(j); }
    const QPoly4& x_root(std::size_t j) const { return xa_.at(j); }

    const KOp& rational_dunkl(const Weight& b) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = rat_.find(b);
        if (it != rat_.end()) return it->second;
        return rat_.emplace(b, make_rational_dunkl(b)).first->second;
    }
    // the derivation d_b, d_b(x_c) = (b, c)
    KOp derivation(const Weight& b) const {
        std::vector<Rational> pair;
        for (std::size_t i = 0; i < n_; ++i) pair.push_back(d_->inner(b, d_->omega(i)));
        std::size_t n = n_;
        return KOp("d" + d_->weight_str(b), [pair, n](const Weight& e) {
            std::vector<OrdPoly::Term> ts;
            for (std::size_t i = 0; i < n; ++i) {
                if (e[i] == 0 || sgn(pair[i]) == 0) continue;
                Weight f = e;
                f[i] -= 1;
                ts.push_back({f, KScalar(Rational(pair[i] * e[i]))});
            }
            return OrdPoly::from_terms(std::move(ts));
        }, false);
    }
    // x^e -> w(x^e), with w(x_c) = x_{w c}
    KOp reflect_ord(const IMat& w, const std::string& tag) const {
        std::vector<QPoly4> images;
        for (std::size_t i = 0; i < n_; ++i) images.push_back(linear_form(w * d_->omega(i), n_));
        return KOp(tag, [images](const Weight& e) { return to_ord(substitute_monomial(e, images)); });
    }
    KOp mult_ord(const OrdPoly& p, const std::string& tag) const { return KOp::multiply_by(p, tag); }
    // x_c for c with rational omega-coordinates
    OrdPoly x_form(const std::vector<Rational>& c) const { return to_ord(linear_form(c)); }
    OrdPoly x_form(const Weight& c) const { return to_ord(linear_form(c, n_)); }
    // x^2 = sum_i x_{omega_i} x_{alpha_i^vee}
    OrdPoly x_squared() const {
        QPoly4 s;
        for (std::size_t i = 0; i < n_; ++i) {
            std::vector<Rational> cor;
            for (std::size_t j = 0; j < n_; ++j) cor.push_back(rat(d_->simple_root(i)[j], d_->nu_simple(i)));
            s += linear_form(d_->omega(i), n_) * linear_form(cor);
        }
        return to_ord(s);
    }

    std::string witness_x(const Weight& w) const { return x_monomial_string(w, n_); }
    std::string witness_ord(const Weight& e) const { return ord_monomial_string(e, n_); }

   private:
    DatumPtr d_;
    std::size_t n_;
    std::vector<Root> pos_;
    std::vector<QPoly4> xa_;
    std::vector<KOp> diff_trig_, diff_rat_;
    mutable std::mutex mu_;
    mutable std::map<Weight, KOp> trig_, rat_;

    KOp make_trig_difference(const Root& a) const {
        const RootDatum* d = d_.get();
        Root al = a;
        return KOp("dd" + d_->weight_str(a.omega), [d, al](const Weight& c) {
            int k = d->pair_coroot(c, al);
            std::vector<KPoly::Term> ts;
            if (k > 0)
                for (int j = 0; j < k; ++j) ts.push_back({c - j * al.omega, KScalar(1)});
            else
                for (int j = 1; j <= -k; ++j) ts.push_back({c + j * al.omega, KScalar(-1)});
            return KPoly::from_terms(std::move(ts));
        });
    }

    KOp make_rational_difference(const Root& a, const QPoly4& xa) const {
        std::vector<QPoly4> images;
        // s_alpha(x_{omega_i}) = x_{omega_i} - (omega_i, alpha^vee) x_alpha
        for (std::size_t i = 0; i < n_; ++i)
            images.push_back(linear_form(d_->omega(i), n_) - QPoly4(Coef(static_cast<long>(a.coroot[i]))) * xa);
        std::string tag = "rd" + d_->weight_str(a.omega);
        return KOp(tag, [images, xa, tag](const Weight& e) {
            QPoly4 f = qmonomial(e);
            auto q = divide_exact(f - substitute_monomial(e, images), xa);
            if (!q) throw InternalError("reflection difference not divisible in " + tag);
            return to_ord(*q);
        });
    }

    KOp make_trig_dunkl(const Weight& b) const {
        std::vector<std::pair<KScalar, KOp>> parts;
        for (std::size_t j = 0; j < pos_.size(); ++j) {
            Rational ba = d_->inner(b, pos_[j].omega);
            if (sgn(ba) == 0) continue;
            parts.push_back({k_of(pos_[j]) * KScalar(ba), diff_trig_[j]});
        }
        KScalar shift = rho_k_pairing(b);
        const RootDatum* d = d_.get();
        return KOp("D" + d_->weight_str(b), [parts, shift, d, b](const Weight& c) {
            KPoly r = KPoly::monomial(c, KScalar(d->inner(b, c)) - shift);
            for (const auto& [s, op] : parts) r += s * op.image(c);
            return r;
        });
    }

    KOp make_rational_dunkl(const Weight& b) const {
        std::vector<std::pair<KScalar, KOp>> parts;
        for (std::size_t j = 0; j < pos_.size(); ++j) {
            Rational ba = d_->inner(b, pos_[j].omega);
            if (sgn(ba) == 0) continue;
            parts.push_back({k_of(pos_[j]) * KScalar(ba), diff_rat_[j]});
        }
        KOp der = derivation(b);
        return KOp("RD" + d_->weight_str(b), [parts, der](const Weight& e) {
            KPoly r = der.image(e);
            for (const auto& [s, op] : parts) r += s * op.image(e);
            return r;
        });
    }
};

// ---- suites ----

inline std::string compare_k(const KOp& a, const KOp& b, const std::vector<Weight>& probes,
                             const std::function<std::string(const Weight&)>& witness) {
    auto w = a.differs_on(b, probes);
    return w ? witness(*w) : std::string();
}

inline KOp commutator(const KOp& a, const KOp& b) { return a * b - b * a; }

// Dunkl commutativity, the x-y cross relations, the reflection relations and W-equivariance
inline Report dunkl_suite(const DatumPtr& d, int degree, int trig_degree = -1) {
    if (trig_degree < 0) trig_degree = degree;
    DegenerateRep R(d);
    const std::size_t n = d->rank();
    const auto ord = ordinary_monomials(n, degree);
    const auto box = laurent_ball(n, trig_degree);
    auto wo = [&](const Weight& e) { return R.witness_ord(e); };
    auto wx = [&](const Weight& e) { return R.witness_x(e); };
    Report rep;
    rep.suite = "degenerate";
    rep.type = d->label();
    rep.backend = "k";
    rep.params = {{"degree", degree}, {"trig_degree", trig_degree}, {"ordinary_probes", ord.size()},
                  {"laurent_probes", box.size()}};
    auto add = [&](const std::string& name, const std::function<CheckResult()>& f) { rep.add(timed(name, f)); };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::string tag = "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
            add("rational_commute" + tag, [&, i, j, tag] {
                auto w = compare_k(commutator(R.rational_dunkl(d->omega(i)), R.rational_dunkl(d->omega(j))), KOp(), ord, wo);
                return CheckResult::from("rational_commute" + tag, w.empty(), w);
            });
            add("trig_commute" + tag, [&, i, j, tag] {
                auto w = compare_k(commutator(R.trig_dunkl(d->omega(i)), R.trig_dunkl(d->omega(j))), KOp(), box, wx);
                return CheckResult::from("trig_commute" + tag, w.empty(), w);
            });
        }
    // D_b x_c - x_c D_b = (b,c) + sum k_alpha (b,alpha)(c,alpha^vee) s_alpha
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::string name = "cross[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
            add(name, [&, i, j, name] {
                Weight b = d->omega(i), c = d->omega(j);
                KOp xc = R.mult_ord(R.x_form(c), "x");
                KOp lhs = commutator(R.rational_dunkl(b), xc);
                KOp rhs = KOp::scalar(KScalar(d->inner(b, c)));
                for (const auto& a : R.positive_roots()) {
                    Rational coef = d->inner(b, a.omega) * d->pair_coroot(c, a);
                    if (sgn(coef) == 0) continue;
                    rhs = rhs + (R.k_of(a) * KScalar(coef)) * R.reflect_ord(d->reflection(a.omega), "s");
                }
                auto w = compare_k(lhs, rhs, ord, wo);
                return CheckResult::from(name, w.empty(), w);
            });
        }
    // s_j y_b - y_{s_j b} s_j = -k_j (b, alpha_j)
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            std::string name = "reflection_cross[" + std::to_string(j) + ",omega" + std::to_string(i + 1) + "]";
            add(name, [&, i, j, name] {
                Weight b = d->omega(i);
                KOp s = R.simple_reflection_x(j);
                KOp lhs = s * R.y(b) - R.y(d->s(j) * b) * s;
                KScalar rhs = -(k_param(d->nu_simple(j - 1)) * KScalar(d->inner(b, d->simple_root(j - 1))));
                auto w = compare_k(lhs, KOp::scalar(rhs), box, wx);
                return CheckResult::from(name, w.empty(), w);
            });
        }
    // w D_b w^{-1} = D_{w(b)}
    for (std::size_t i = 0; i < n; ++i) {
        std::string name = "W_equivariance[omega" + std::to_string(i + 1) + "]";
        add(name, [&, i, name] {
            Weight b = d->omega(i);
            for (const auto& w : d->weyl_elements()) {
                KOp lhs = R.reflect_ord(w, "w") * R.rational_dunkl(b) * R.reflect_ord(d->inverse(w), "w^-1");
                auto wit = compare_k(lhs, R.rational_dunkl(w * b), ord, wo);
                if (!wit.empty()) return CheckResult::fail(name, "w(b)=" + d->weight_str(w * b) + " at " + wit);
            }
            return CheckResult::pass(name);
        });
    }
    // degree drop: D_b maps homogeneous degree e to degree e - 1
    add("degree_drop", [&] {
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& e : ord) {
                int deg = 0;
                for (std::size_t k = 0; k < n; ++k) deg += e[k];
                KPoly img = R.rational_dunkl(d->omega(i)).image(e);
                for (const auto& [f, c] : img.terms()) {
                    int df = 0;
                    for (std::size_t k = 0; k < n; ++k) df += f[k];
                    if (df != deg - 1) return CheckResult::fail("degree_drop", R.witness_ord(e));
                }
            }
        return CheckResult::pass("degree_drop");
    });
    return rep;
}

// integer 2x2 matrices acting on the column (x, D)
using Mat2 = std::array<std::array<long, 2>, 2>;
inline Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) r[i][j] += a[i][k] * b[k][j];
    return r;
}

inline Report gaussian_tau_suite(const DatumPtr& d, int degree) {
    DegenerateRep R(d);
    const std::size_t n = d->rank();
    const auto ord = ordinary_monomials(n, degree);
    auto wo = [&](const Weight& e) { return R.witness_ord(e); };
    Report rep;
    rep.suite = "gaussian";
    rep.type = d->label();
    rep.backend = "k";
    rep.params = {{"degree", degree}, {"ordinary_probes", ord.size()}};
    auto add = [&](const std::string& name, const std::function<CheckResult()>& f) { rep.add(timed(name, f)); };

    OrdPoly half_x2 = KScalar(rat(1, 2)) * R.x_squared();
    KOp g = R.mult_ord(half_x2, "x2/2");
    for (std::size_t i = 0; i < n; ++i) {
        Weight b = d->omega(i);
        std::string s = "[omega" + std::to_string(i + 1) + "]";
        add("bracket_x2" + s, [&, b, s] {
            auto w = compare_k(commutator(R.rational_dunkl(b), g), R.mult_ord(R.x_form(b), "x_b"), ord, wo);
            return CheckResult::from("bracket_x2" + s, w.empty(), w);
        });
        add("double_bracket" + s, [&, b, s] {
            auto w = compare_k(commutator(commutator(g, R.rational_dunkl(b)), g), KOp(), ord, wo);
            return CheckResult::from("double_bracket" + s, w.empty(), w);
        });
        // sigma sends (x, D) to (D, -x); it preserves the cross relation
        add("sigma_cross" + s, [&, b, s] {
            for (std::size_t j = 0; j < n; ++j) {
                Weight c = d->omega(j);
                KOp lhs = commutator(KOp::scalar(KScalar(-1)) * R.mult_ord(R.x_form(b), "x_b"), R.rational_dunkl(c));
                KOp rhs = commutator(R.rational_dunkl(b), R.mult_ord(R.x_form(c), "x_c"));
                auto w = compare_k(lhs, rhs, ord, wo);
                if (!w.empty()) return CheckResult::fail("sigma_cross" + s, "c=" + d->weight_str(c) + " at " + w);
            }
            return CheckResult::pass("sigma_cross" + s);
        });
    }
    add("tau_braid", [] {
        Mat2 tp{{{1, 0}, {-1, 1}}}, tmi{{{1, 1}, {0, 1}}};
        Mat2 a = mat2_mul(mat2_mul(tp, tmi), tp), b = mat2_mul(mat2_mul(tmi, tp), tmi);
        Mat2 sigma{{{0, 1}, {-1, 0}}};
        return CheckResult::from("tau_braid", a == b && a == sigma, "tau products differ from (x,D) -> (D,-x)");
    });
    return rep;
}

}  // namespace dahakit
