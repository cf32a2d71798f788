#pragma once

// The degeneration chain as truncated formal series: the expansion of the
// trigonometric Dunkl operator under X_c = e^{w x_c}, its Bernoulli closed
// form, and the lift of T_i from G_i = G'_i on finite y-stable subspaces.

#include <string>
#include <vector>

#include "dahakit/intertwine.hpp"
#include "dahakit/scalars.hpp"

namespace dahakit {

// B+_0 .. B+_K, with z / (1 - e^{-z}) = sum B+_m z^m / m!
inline std::vector<Rational> bernoulli_plus(int K) {
    std::vector<Rational> B(static_cast<std::size_t>(K) + 1);
    B[0] = 1;
    // sum_{j<=m} C(m+1, j) B_j = 0 gives the minus convention
    for (int m = 1; m <= K; ++m) {
        Rational acc = 0;
        Integer binom = 1;  // C(m+1, j)
        for (int j = 0; j < m; ++j) {
            acc += Rational(binom) * B[static_cast<std::size_t>(j)];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        B[static_cast<std::size_t>(m)] = -acc / (m + 1);
    }
    for (int m = 1; m <= K; m += 2) B[static_cast<std::size_t>(m)] = -B[static_cast<std::size_t>(m)];
    return B;
}

inline Rational factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

// Laurent coefficients c_{-1}..c_K of 1 / (1 - e^{-w y}) in w, each a Laurent polynomial in y
inline std::vector<YScalar> inverse_one_minus_exp(int K) {
    using SY = SeriesScalar<YScalar>;
    const int inner = K + 2;
    SY s('w', inner, {YScalar(0), YScalar(0), -YScalar::var(0)});
    SY f = SY::constant('w', inner, YScalar(1)) - series_exp(s);
    SY g = f.inverse();
    std::vector<YScalar> out;
    for (int j = -1; j <= K; ++j) out.push_back(g.coeff(j));
    return out;
}

// coefficients -1..K of an operator-valued series
struct SeriesOperator {
    int K = 0;
    std::vector<KOp> coeffs;  // coeffs[j + 1] is the w^j coefficient
    const KOp& at(int j) const { return coeffs.at(static_cast<std::size_t>(j + 1)); }
};

class DunklExpansion {
   public:
    explicit DunklExpansion(const DegenerateRep& D) : D_(D) {
        const auto& d = D.datum();
        for (const auto& a : D.positive_roots())
            one_minus_s_.push_back(KOp::identity() - D.reflect_ord(d->reflection(a.omega), "s"));
    }

    // x_alpha^e (1 - s_alpha) for e >= 0, (1 - s_alpha) / x_alpha for e = -1
    KOp root_term(std::size_t j, int e) const {
        if (e == -1) return D_.rational_difference(j);
        if (e < -1) throw InternalError("pole of order " + std::to_string(-e) + " in a Dunkl expansion term");
        if (e == 0) return one_minus_s_[j];
        return D_.mult_ord(to_ord(D_.x_root(j).pow(e)), "xa^" + std::to_string(e)) * one_minus_s_[j];
    }

    // route (a): coefficients of 1/(1 - e^{-w y}) from series inversion, y -> x_alpha
    SeriesOperator route_series(const Weight& b, int K) const {
        auto c = inverse_one_minus_exp(K);
        return assemble(b, K, [&](std::size_t j, int order) {
            KOp op;
            const auto& cy = c[static_cast<std::size_t>(order + 1)];
            if (!cy.is_polynomial()) throw InternalError("non-Laurent coefficient in the series route");
            for (const auto& t : cy.num().terms()) op = op + KScalar(t.c.to_rational()) * root_term(j, t.e[0]);
            return op;
        });
    }

    // route (b): B+_{j+1}/(j+1)! x_alpha^j (1 - s_alpha)
    SeriesOperator route_bernoulli(const Weight& b, int K) const {
        auto B = bernoulli_plus(K + 1);
        return assemble(b, K, [&](std::size_t j, int order) {
            Rational r = B[static_cast<std::size_t>(order + 1)] / factorial(order + 1);
            if (sgn(r) == 0) return KOp();
            return KScalar(r) * root_term(j, order);
        });
    }

   private:
    const DegenerateRep& D_;
    std::vector<KOp> one_minus_s_;

    template <class Term>
    SeriesOperator assemble(const Weight& b, int K, Term term) const {
        const auto& d = D_.datum();
        SeriesOperator S{K, {}};
        for (int order = -1; order <= K; ++order) {
            KOp op = order == -1 ? D_.derivation(b) : KOp();
            for (std::size_t j = 0; j < D_.positive_roots().size(); ++j) {
                const Root& a = D_.positive_roots()[j];
                Rational ba = d->inner(b, a.omega);
                if (sgn(ba) == 0) continue;
                op = op + (D_.k_of(a) * KScalar(ba)) * term(j, order);
            }
            if (order == 0) op = op - KOp::scalar(D_.rho_k_pairing(b));
            S.coeffs.push_back(op);
        }
        return S;
    }
};

// x_c^i / i! as an ordinary polynomial
inline OrdPoly exp_term(const DegenerateRep& D, const Weight& c, int i) {
    return KScalar(Rational(1) / factorial(i)) * to_ord(linear_form(c, D.datum()->rank()).pow(i));
}

// first order j in [-1, K] where D_b(X_c) with X = e^{w x} differs from the expansion applied to e^{w x_c}
inline std::optional<int> substitution_mismatch(const DegenerateRep& D, const SeriesOperator& S, const Weight& b,
                                                const Weight& c) {
    KPoly lhs = D.trig_dunkl(b).image(c);
    for (int j = -1; j <= S.K; ++j) {
        OrdPoly l;
        if (j >= 0)
            for (const auto& [dw, a] : lhs.terms()) l += a * exp_term(D, dw, j);
        OrdPoly r;
        for (int i = 0; i <= j + 1; ++i) r += S.at(j - i)(exp_term(D, c, i));
        if (!(l == r)) return j;
    }
    return std::nullopt;
}

// ---- series matrices ----

// sum_{j=-1..K} w^j M_j with M_j exact matrices
class SeriesMatrix {
   public:
    using M = Matrix<KScalar>;
    SeriesMatrix() = default;
    SeriesMatrix(std::size_t n, int K) : n_(n), K_(K), c_(static_cast<std::size_t>(K) + 2, M(n, n)) {}

    static SeriesMatrix constant(const M& m, int K) {
        SeriesMatrix s(m.rows(), K);
        s.c_[1] = m;
        return s;
    }
    static SeriesMatrix scalar(const SeriesScalar<KScalar>& x, std::size_t n) {
        SeriesMatrix s(n, x.trunc());
        for (int j = -1; j <= s.K_; ++j) s.c_[static_cast<std::size_t>(j + 1)] = M::scalar(n, x.coeff(j));
        return s;
    }
    int trunc() const { return K_; }
    std::size_t dim() const { return n_; }
    const M& coeff(int j) const { return c_.at(static_cast<std::size_t>(j + 1)); }
    void set(int j, M m) { c_.at(static_cast<std::size_t>(j + 1)) = std::move(m); }
    int valuation() const {
        for (int j = -1; j <= K_; ++j)
            if (!coeff(j).is_zero_matrix()) return j;
        return K_ + 1;
    }
    SeriesMatrix truncate(int K) const {
        if (K > K_) throw IncompatibleParameters("truncation order above available precision");
        SeriesMatrix s(n_, K);
        for (int j = -1; j <= K; ++j) s.c_[static_cast<std::size_t>(j + 1)] = coeff(j);
        return s;
    }

    friend SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b) {
        SeriesMatrix s(a.n_, std::min(a.K_, b.K_));
        for (int j = -1; j <= s.K_; ++j) s.c_[static_cast<std::size_t>(j + 1)] = a.coeff(j) + b.coeff(j);
        return s;
    }
    friend SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b) {
        SeriesMatrix s(a.n_, std::min(a.K_, b.K_));
        for (int j = -1; j <= s.K_; ++j) s.c_[static_cast<std::size_t>(j + 1)] = a.coeff(j) - b.coeff(j);
        return s;
    }
    friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
        int va = a.valuation(), vb = b.valuation();
        int K = std::min(a.K_ + std::max(vb, -1), b.K_ + std::max(va, -1));
        K = std::min(K, std::max(a.K_, b.K_));
        if (va + vb < -1) throw NotInvertible("series matrix product has a pole of order two");
        SeriesMatrix s(a.n_, K);
        for (int i = va; i <= a.K_; ++i)
            for (int j = vb; j <= b.K_; ++j) {
                if (i + j > K) break;
                if (a.coeff(i).is_zero_matrix() || b.coeff(j).is_zero_matrix()) continue;
                auto& dst = s.c_[static_cast<std::size_t>(i + j + 1)];
                dst = dst + a.coeff(i) * b.coeff(j);
            }
        return s;
    }

    // first order where the series differs from zero
    std::optional<int> nonzero_order(int upto) const {
        for (int j = -1; j <= std::min(upto, K_); ++j)
            if (!coeff(j).is_zero_matrix()) return j;
        return std::nullopt;
    }

   private:
    std::size_t n_ = 0;
    int K_ = 0;
    std::vector<M> c_;
};

// evaluate a Laurent polynomial in y at a matrix
inline Matrix<KScalar> evaluate_at(const YScalar& p, const Matrix<KScalar>& y, const Matrix<KScalar>& yinv) {
    if (!p.is_polynomial()) throw InternalError("non-Laurent coefficient");
    Matrix<KScalar> r(y.rows(), y.cols());
    for (const auto& t : p.num().terms()) {
        int e = t.e[0];
        r = r + KScalar(t.c.to_rational()) * (e >= 0 ? y.pow(e) : yinv.pow(-e));
    }
    return r;
}

// T_i = G'_i (t^{1/2} + c Z) - c Z, Z = (e^{v y_alpha} - 1)^{-1}, t^{1/2} = e^{v nu k / 2}, c = t^{1/2} - t^{-1/2}
inline SeriesMatrix lift_T(const DegenerateRep& D, const SubspaceData<KScalar>& sd, std::size_t i, int K) {
    const auto& d = D.datum();
    int nu = d->nu_simple(i - 1);
    const int inner = K + 3;
    Matrix<KScalar> y = sd.restrict(D.trig_dunkl(d->simple_root(i - 1)));
    Matrix<KScalar> yinv = y.inverse();
    const std::size_t n = y.rows();

    // Z from the scalar expansion of 1/(e^{v y} - 1)
    using SY = SeriesScalar<YScalar>;
    SY s('v', inner + 2, {YScalar(0), YScalar(0), YScalar::var(0)});
    SY g = (series_exp(s) - SY::constant('v', inner + 2, YScalar(1))).inverse();
    SeriesMatrix Z(n, g.trunc());
    for (int j = -1; j <= g.trunc(); ++j)
        Z.set(j, evaluate_at(g.coeff(j), y, yinv));

    using SK = SeriesScalar<KScalar>;
    SK half('v', inner, {KScalar(0), KScalar(0), KScalar(rat(nu, 2)) * k_param(nu)});
    SK th = series_exp(half);
    SK c = th - th.inverse().truncate(th.trunc());
    SeriesMatrix G = SeriesMatrix::constant(G_degenerate(D, sd, i), inner);
    SeriesMatrix cZ = SeriesMatrix::scalar(c, n) * Z;
    SeriesMatrix T = G * (SeriesMatrix::scalar(th, n) + cZ) - cZ;
    return T.truncate(K);
}

struct LusztigOptions {
    int trunc = 6;         // expansion order for the Dunkl series
    int degree = 5;        // ordinary probe degree
    int laurent_degree = 2;  // Laurent probe box for the substitution check
    int lift_trunc = 3;
    std::vector<SubspaceSeed> seeds;  // empty: defaults
};

inline Report lusztig_suite(const DatumPtr& d, const LusztigOptions& opt = {}) {
    DegenerateRep D(d);
    DunklExpansion E(D);
    const std::size_t n = d->rank();
    const auto ord = ordinary_monomials(n, opt.degree);
    const auto box = ProbeBox(n, opt.laurent_degree).weights;
    auto wo = [&](const Weight& e) { return D.witness_ord(e); };
    Report rep;
    rep.suite = "lusztig";
    rep.type = d->label();
    rep.backend = "k";
    rep.params = {{"trunc", opt.trunc}, {"degree", opt.degree}, {"laurent_degree", opt.laurent_degree},
                  {"lift_trunc", opt.lift_trunc}};
    auto add = [&](const std::string& name, const std::function<CheckResult()>& f) { rep.add(timed(name, f)); };

    auto B = bernoulli_plus(std::max(opt.trunc + 1, 3));
    add("bernoulli_plus", [&] {
        bool ok = B[1] == rat(1, 2) && B[2] == rat(1, 6) && B[3] == 0;
        for (std::size_t m = 3; m < B.size(); m += 2) ok = ok && B[m] == 0;
        return CheckResult::from("bernoulli_plus", ok, "B+_1, B+_2 or an odd entry is off");
    });
    Json table = Json::array();
    for (const auto& x : B) table.push_back(x.get_str());
    rep.data["bernoulli_plus"] = table;

    for (std::size_t i = 0; i < n; ++i) {
        Weight b = d->omega(i);
        std::string s = "[omega" + std::to_string(i + 1) + "]";
        SeriesOperator A, Bz;
        add("routes_agree" + s, [&] {
            A = E.route_series(b, opt.trunc);
            Bz = E.route_bernoulli(b, opt.trunc);
            for (int j = -1; j <= opt.trunc; ++j) {
                auto w = compare_k(A.at(j), Bz.at(j), ord, wo);
                if (!w.empty()) return CheckResult::fail("routes_agree" + s, "order " + std::to_string(j) + " at " + w);
            }
            return CheckResult::pass("routes_agree" + s);
        });
        if (A.coeffs.empty()) continue;
        add("pole_is_rational_dunkl" + s, [&] {
            auto w = compare_k(A.at(-1), D.rational_dunkl(b), ord, wo);
            return CheckResult::from("pole_is_rational_dunkl" + s, w.empty(), w);
        });
        // (1 - s_alpha) kills 1, so only the shift survives, as for D_b(1) itself
        add("constant_term_on_1" + s, [&] {
            bool ok = A.at(0).image(Weight{}) == KPoly::monomial(Weight{}, -D.rho_k_pairing(b));
            return CheckResult::from("constant_term_on_1" + s, ok, "order-0 coefficient on 1 is not -(rho_k, b)");
        });
        add("substitution" + s, [&] {
            for (const auto& c : box) {
                auto j = substitution_mismatch(D, A, b, c);
                if (j) return CheckResult::fail("substitution" + s, "order " + std::to_string(*j) + " at " + D.witness_x(c));
            }
            return CheckResult::pass("substitution" + s);
        });
    }

    // lift of T_i on y-stable subspaces
    auto seeds = opt.seeds.empty() ? default_degenerate_seeds(D) : opt.seeds;
    if (seeds.empty()) rep.add(CheckResult::skipped("lift.subspace", "no default subspace for this type"));
    const int K = opt.lift_trunc;
    Json dims = Json::array();
    for (const auto& sp : seeds) {
        std::string prefix = "lift" + sp.label(n) + ".";
        std::optional<SubspaceData<KScalar>> sd;
        add(prefix + "subspace", [&] {
            sd = certify_subspace(degenerate_closing_ops(D), sp.seed, sp.lower, n);
            dims.push_back({{"seed", sp.label(n)}, {"dimension", sd->basis.size()}});
            return CheckResult::pass(prefix + "subspace");
        });
        if (!sd) continue;
        std::vector<SeriesMatrix> T;
        add(prefix + "build", [&] {
            for (std::size_t i = 1; i <= n; ++i) T.push_back(lift_T(D, *sd, i, K));
            return CheckResult::pass(prefix + "build");
        });
        if (T.size() != n) continue;
        const std::size_t dim = sd->basis.size();
        for (std::size_t i = 1; i <= n; ++i) {
            int nu = d->nu_simple(i - 1);
            std::string name = prefix + "classical_limit[" + std::to_string(i) + "]";
            add(name, [&, i] {
                auto w = matrix_diff_witness(T[i - 1].coeff(0), sd->restrict(D.simple_reflection_x(i)));
                bool ok = w.empty() && T[i - 1].valuation() >= 0;
                return CheckResult::from(name, ok, w.empty() ? "pole" : w);
            });
            name = prefix + "quadratic[" + std::to_string(i) + "]";
            add(name, [&, i, nu] {
                using SK = SeriesScalar<KScalar>;
                SK half('v', K + 2, {KScalar(0), KScalar(0), KScalar(rat(nu, 2)) * k_param(nu)});
                SK th = series_exp(half);
                SK thi = th.inverse().truncate(th.trunc());
                SeriesMatrix q = (T[i - 1] - SeriesMatrix::scalar(th, dim)) * (T[i - 1] + SeriesMatrix::scalar(thi, dim));
                auto j = q.nonzero_order(K);
                if (q.trunc() < K) return CheckResult::fail(name, "precision lost: known to order " + std::to_string(q.trunc()));
                return CheckResult::from(name, !j, j ? "order " + std::to_string(*j) : "");
            });
        }
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = i + 1; j <= n; ++j) {
                int m = d->braid_order(i, j);
                if (m == 0) continue;
                std::string name = prefix + "braid[" + std::to_string(i) + "," + std::to_string(j) + "]";
                add(name, [&, i, j, m] {
                    SeriesMatrix l = SeriesMatrix::constant(Matrix<KScalar>::identity(dim), K), r = l;
                    for (int t = 0; t < m; ++t) {
                        l = l * T[(t % 2 == 0 ? i : j) - 1];
                        r = r * T[(t % 2 == 0 ? j : i) - 1];
                    }
                    auto o = (l - r).nonzero_order(K);
                    return CheckResult::from(name, !o, o ? "order " + std::to_string(*o) : "");
                });
            }
    }
    rep.data["subspaces"] = dims;
    return rep;
}

}  // namespace dahakit
