#pragma once

// The polynomial representation on Q_{q,t}[X]: Demazure-Lusztig operators
// T_0..T_n, the group Pi, composite T_w, the commuting family Y_b, finite
// invariant subspaces, and the relation harness.

#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dahakit/laurent.hpp"
#include "dahakit/linalg.hpp"
#include "dahakit/linop.hpp"
#include "dahakit/report.hpp"

namespace dahakit {

using QtPoly = LaurentPoly<QtScalar>;
using QtOp = LinOp<QtPoly>;

// X_b times the divided difference (A^{-k} - 1)/(A - 1), A = X_a q^{qe}, as terms
template <class S, class QPow>
void divided_difference_terms(const Weight& b, const Weight& a, int qe, int k, const S& scale, QPow qpow,
                              std::vector<std::pair<Weight, S>>& out) {
    if (k > 0) {
        for (int j = 1; j <= k; ++j) out.push_back({b - j * a, -(scale * qpow(-j * qe))});
    } else {
        for (int j = 0; j < -k; ++j) out.push_back({b + j * a, scale * qpow(j * qe)});
    }
}

class PolyRep {
   public:
    PolyRep(const PolyRep&) = delete;
    PolyRep& operator=(const PolyRep&) = delete;
    explicit PolyRep(DatumPtr d) : d_(std::move(d)), P_{d_} {
        const std::size_t n = d_->rank();
        for (std::size_t i = 0; i <= n; ++i) {
            T_.push_back(make_T(i));
            int nu = d_->nu_affine(i);
            Tinv_.push_back(T_[i] - QtOp::scalar(QtParams::t_diff(nu)));
        }
        pi_[0] = QtOp::identity();
        for (int r : d_->minuscule()) pi_[r] = make_pi(r);
    }

    const DatumPtr& datum() const { return d_; }
    const QtParams& params() const { return P_; }

    // affine simple root data: finite part a and q-exponent, A = X_a q^{qe}
    std::pair<Weight, int> affine_root(std::size_t i) const {
        if (i == 0) return {-d_->theta(), 1};
        return {d_->simple_root(i - 1), 0};
    }
    // (b, alpha_i^vee), alpha_0^vee = -theta
    int coroot_pairing(std::size_t i, const Weight& b) const {
        if (i == 0) return -static_cast<int>(to_long(d_->inner(b, d_->theta())));
        return b[i - 1];
    }

    const QtOp& T(std::size_t i) const { return T_.at(i); }
    const QtOp& Tinv(std::size_t i) const { return Tinv_.at(i); }
    const QtOp& pi(int r) const { return pi_.at(r); }
    const QtOp& pi_inv(int r) const { return r == 0 ? pi_.at(0) : pi_.at(d_->star(r)); }

    // multiplication by X_b q^j
    QtOp X(const Weight& b, const Rational& j = Rational(0)) const {
        return QtOp::multiply_by(QtPoly::monomial(b, P_.q_pow(j)), "X" + d_->weight_str(b));
    }
    // multiplication by X_{alpha_i}, including X_{alpha_0} = q X_{-theta}
    QtOp X_affine_root(std::size_t i) const {
        auto [a, qe] = affine_root(i);
        return QtOp::multiply_by(QtPoly::monomial(a, P_.q_pow(qe)), "Xa" + std::to_string(i));
    }

    QtOp T_word(const ReducedWord& w) const {
        QtOp op = pi(w.r);
        for (int i : w.letters) op = op * T(static_cast<std::size_t>(i));
        return op;
    }
    QtOp T_word_inverse(const ReducedWord& w) const {
        QtOp op = QtOp::identity();
        for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) op = op * Tinv(static_cast<std::size_t>(*it));
        return op * pi_inv(w.r);
    }
    QtOp T_element(const ExtAffineElement& x) const { return T_word(d_->reduced_word(x)); }

    // Y_b = Y_{b+} Y_{c+}^{-1}, b = b+ - c+ with b+, c+ dominant
    QtOp Y(const Weight& b) const {
        {
            std::lock_guard<std::mutex> lock(y_mu_);
            auto it = y_cache_.find(b);
            if (it != y_cache_.end()) return it->second;
        }
        Weight bp, cp;
        for (std::size_t i = 0; i < d_->rank(); ++i) {
            bp[i] = std::max(b[i], 0);
            cp[i] = std::max(-b[i], 0);
        }
        QtOp op = QtOp::identity();
        if (!bp.is_zero()) op = T_word(d_->reduced_word(d_->translation(bp)));
        if (!cp.is_zero()) op = op * T_word_inverse(d_->reduced_word(d_->translation(cp)));
        op = op.retagged("Y" + d_->weight_str(b));
        std::lock_guard<std::mutex> lock(y_mu_);
        y_cache_.emplace(b, op);
        return op;
    }

    QtPoly apply_T(std::size_t i, const QtPoly& p) const { return T(i)(p); }
    QtPoly apply_T_inverse(std::size_t i, const QtPoly& p) const { return Tinv(i)(p); }
    QtPoly apply_Y(const Weight& b, const QtPoly& p) const { return Y(b)(p); }

    std::string witness(const Weight& w) const { return x_monomial_string(w, d_->rank()); }

   private:
    DatumPtr d_;
    QtParams P_;
    std::vector<QtOp> T_, Tinv_;
    std::map<int, QtOp> pi_;
    mutable std::mutex y_mu_;
    mutable std::map<Weight, QtOp> y_cache_;

    QtOp make_T(std::size_t i) const {
        auto [a, qe] = affine_root(i);
        int nu = d_->nu_affine(i);
        QtScalar th = QtParams::t_half(nu), td = QtParams::t_diff(nu);
        const PolyRep* self = this;
        QtParams P = P_;
        Weight aa = a;
        int qq = qe;
        return QtOp("T" + std::to_string(i), [self, P, aa, qq, th, td, i](const Weight& b) {
            int k = self->coroot_pairing(i, b);
            std::vector<QtPoly::Term> ts;
            auto qpow = [&P](int e) { return P.q_pow(Rational(e)); };
            // s_i(X_b) = X_b A^{-k}
            ts.push_back({b - k * aa, th * qpow(-k * qq)});
            divided_difference_terms(b, aa, qq, k, td, qpow, ts);
            return QtPoly::from_terms(std::move(ts));
        });
    }

    QtOp make_pi(int r) const {
        auto x = d_->pi(r);
        QtParams P = P_;
        return QtOp("pi" + std::to_string(r),
                    [P, x](const Weight& b) { return monomial_action(P, x, QtPoly::monomial(b)); });
    }
};

// ---- finite invariant subspaces ----

template <class S>
struct MatrixRestriction {
    std::vector<Weight> basis;
    Matrix<S> matrix;
    std::string tag;
};

// monomial closure of the seed under the operators; ClosureOverflow past the bound
template <class S>
std::vector<Weight> monomial_closure(const std::vector<LinOp<LaurentPoly<S>>>& ops, const std::vector<Weight>& seed,
                                     std::size_t rank, int bound) {
    std::set<Weight> seen;
    std::vector<Weight> stack;
    auto visit = [&](const Weight& w) {
        for (std::size_t i = 0; i < rank; ++i)
            if (std::abs(w[i]) > bound) throw ClosureOverflow(weight_string(w, rank));
        if (seen.insert(w).second) stack.push_back(w);
    };
    for (const auto& w : seed) visit(w);
    while (!stack.empty()) {
        Weight w = stack.back();
        stack.pop_back();
        for (const auto& op : ops) {
            auto img = op.image(w);
            for (const auto& t : img.terms()) visit(t.first);
        }
    }
    return {seen.begin(), seen.end()};
}

// matrix of op on span(basis); columns are images of basis monomials.
// Support outside basis is allowed only inside `ignorable` (a submodule being quotiented out).
template <class S>
MatrixRestriction<S> restrict_operator(const LinOp<LaurentPoly<S>>& op, const std::vector<Weight>& basis,
                                       const std::set<Weight>& ignorable = {}) {
    std::map<Weight, std::size_t> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = k;
    MatrixRestriction<S> r{basis, Matrix<S>(basis.size(), basis.size()), op.tag()};
    for (std::size_t col = 0; col < basis.size(); ++col) {
        auto img = op.image(basis[col]);
        for (const auto& [w, c] : img.terms()) {
            auto it = index.find(w);
            if (it == index.end()) {
                if (ignorable.count(w)) continue;
                throw InternalError("subspace not invariant under " + op.tag());
            }
            r.matrix(it->second, col) = c;
        }
    }
    return r;
}

// matrices of the operators on closure(seed) / closure(lower_seed)
template <class S>
std::vector<MatrixRestriction<S>> invariant_subspace(const std::vector<LinOp<LaurentPoly<S>>>& ops,
                                                     const std::vector<Weight>& seed, std::size_t rank, int bound,
                                                     const std::vector<Weight>& lower_seed = {}) {
    if (seed.empty()) return {};
    auto top = monomial_closure(ops, seed, rank, bound);
    std::set<Weight> low;
    if (!lower_seed.empty()) {
        auto l = monomial_closure(ops, lower_seed, rank, bound);
        low.insert(l.begin(), l.end());
    }
    std::vector<Weight> basis;
    for (const auto& w : top)
        if (!low.count(w)) basis.push_back(w);
    std::vector<MatrixRestriction<S>> out;
    for (const auto& op : ops) out.push_back(restrict_operator(op, basis, low));
    return out;
}

// ---- relation harness ----

// first probe where two operators differ, as a witness string; empty if equal
inline std::string compare_ops(const PolyRep& R, const QtOp& a, const QtOp& b, const std::vector<Weight>& probes) {
    auto w = a.differs_on(b, probes);
    return w ? R.witness(*w) : std::string();
}

inline CheckResult check_equal(const std::string& name, const PolyRep& R, const QtOp& a, const QtOp& b,
                               const std::vector<Weight>& probes) {
    auto w = compare_ops(R, a, b, probes);
    return CheckResult::from(name, w.empty(), w);
}

// braid word i j i ... with m factors
template <class Op>
Op alternating_product(const Op& a, const Op& b, int m) {
    Op r = Op::identity();
    for (int k = 0; k < m; ++k) r = r * (k % 2 == 0 ? a : b);
    return r;
}

inline std::vector<ExtAffineElement> random_affine_elements(const RootDatum& d, std::mt19937& gen, std::size_t count,
                                                            int max_letters) {
    std::vector<ExtAffineElement> out;
    const auto& mins = d.minuscule();
    for (std::size_t c = 0; c < count; ++c) {
        ExtAffineElement x = d.identity();
        int len = 1 + static_cast<int>(gen() % static_cast<unsigned>(max_letters));
        for (int k = 0; k < len; ++k) {
            unsigned pick = gen() % static_cast<unsigned>(d.rank() + 1 + mins.size());
            if (pick <= d.rank()) x = d.compose(x, d.simple(pick));
            else x = d.compose(x, d.pi(mins[pick - d.rank() - 1]));
        }
        out.push_back(x);
    }
    return out;
}

inline Report relation_suite(const DatumPtr& d, int degree, const std::function<void(const CheckResult&)>& progress = {}) {
    PolyRep R(d);
    const std::size_t n = d->rank();
    const auto probes = ProbeBox(n, degree).weights;
    Report rep;
    rep.suite = "polyrep";
    rep.type = d->label();
    rep.backend = "qt";
    rep.params = {{"degree", degree}, {"probe_monomials", probes.size()}};

    std::vector<std::function<CheckResult()>> jobs;
    std::vector<std::string> names;
    auto add = [&](std::string name, std::function<CheckResult()> f) {
        names.push_back(std::move(name));
        jobs.push_back(std::move(f));
    };

    // (o)
    for (std::size_t i = 0; i <= n; ++i) {
        std::string name = "quadratic[" + std::to_string(i) + "]";
        add(name, [&, i, name] {
            int nu = d->nu_affine(i);
            QtOp lhs = (R.T(i) - QtOp::scalar(QtParams::t_half(nu))) * (R.T(i) + QtOp::scalar(QtParams::t_half_pow(nu, -1)));
            return check_equal(name, R, lhs, QtOp(), probes);
        });
    }
    // inverse
    for (std::size_t i = 0; i <= n; ++i) {
        std::string name = "inverse[" + std::to_string(i) + "]";
        add(name, [&, i, name] { return check_equal(name, R, R.T(i) * R.Tinv(i), QtOp::identity(), probes); });
    }
    // (i)
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
            int m = d->braid_order(i, j);
            if (m == 0) continue;
            std::string name = "braid[" + std::to_string(i) + "," + std::to_string(j) + "]";
            add(name, [&, i, j, m, name] {
                return check_equal(name, R, alternating_product(R.T(i), R.T(j), m),
                                   alternating_product(R.T(j), R.T(i), m), probes);
            });
        }
    // (ii)
    for (int r : d->minuscule()) {
        auto perm = d->pi_node_permutation(r);
        for (std::size_t i = 0; i <= n; ++i) {
            std::string name = "pi_conjugation[" + std::to_string(r) + "," + std::to_string(i) + "]";
            std::size_t j = static_cast<std::size_t>(perm[i]);
            add(name, [&, r, i, j, name] {
                return check_equal(name, R, R.pi(r) * R.T(i) * R.pi_inv(r), R.T(j), probes);
            });
        }
    }
    // (iii), (iv)
    const auto bs = ProbeBox(n, degree).weights;
    for (std::size_t i = 0; i <= n; ++i) {
        std::string n3 = "TXT[" + std::to_string(i) + "]";
        add(n3, [&, i, n3] {
            std::size_t count = 0;
            for (const auto& b : bs) {
                if (R.coroot_pairing(i, b) != 1) continue;
                ++count;
                auto [a, qe] = R.affine_root(i);
                QtOp lhs = R.T(i) * R.X(b) * R.T(i);
                QtOp rhs = R.X(b - a, Rational(-qe));
                auto w = compare_ops(R, lhs, rhs, probes);
                if (!w.empty()) return CheckResult::fail(n3, "b=" + d->weight_str(b) + " at " + w);
            }
            return count ? CheckResult::pass(n3) : CheckResult::skipped(n3, "no b with pairing 1 in the box");
        });
        std::string n4 = "TX_commute[" + std::to_string(i) + "]";
        add(n4, [&, i, n4] {
            for (const auto& b : bs) {
                if (R.coroot_pairing(i, b) != 0) continue;
                auto w = compare_ops(R, R.T(i) * R.X(b), R.X(b) * R.T(i), probes);
                if (!w.empty()) return CheckResult::fail(n4, "b=" + d->weight_str(b) + " at " + w);
            }
            return CheckResult::pass(n4);
        });
    }
    // (v)
    for (int r : d->minuscule()) {
        std::string name = "piX[" + std::to_string(r) + "]";
        add(name, [&, r, name] {
            const auto& P = R.params();
            Weight wr_star = d->omega(static_cast<std::size_t>(d->star(r) - 1));
            IMat uinv = d->inverse(d->u(r));
            for (const auto& b : bs) {
                QtOp lhs = R.pi(r) * R.X(b) * R.pi_inv(r);
                QtOp rhs = QtOp::multiply_by(QtPoly::monomial(uinv * b, P.q_pow(d->inner(wr_star, b))), "Xpi");
                auto w = compare_ops(R, lhs, rhs, probes);
                if (!w.empty()) return CheckResult::fail(name, "b=" + d->weight_str(b) + " at " + w);
            }
            return CheckResult::pass(name);
        });
    }
    // Y family
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::string name = "Y_commute[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
            add(name, [&, i, j, name] {
                QtOp a = R.Y(d->omega(i)), b = R.Y(d->omega(j));
                return check_equal(name, R, a * b, b * a, probes);
            });
        }
    for (std::size_t i = 0; i < n; ++i) {
        std::string name = "Y_inverse[" + std::to_string(i + 1) + "]";
        add(name, [&, i, name] {
            return check_equal(name, R, R.Y(d->omega(i)) * R.Y(-d->omega(i)), QtOp::identity(), probes);
        });
    }
    if (n >= 2) {
        add("Y_additive", [&] {
            Weight b = d->omega(0), c = d->omega(1) - d->omega(0);
            return check_equal("Y_additive", R, R.Y(b) * R.Y(c), R.Y(b + c), probes);
        });
    }
    // T^{-1} Y_b T^{-1} = Y_b Y_{alpha_i}^{-1} and commutation, b = omega_j
    for (std::size_t i = 1; i <= n; ++i) {
        std::string name = "TY_cross[" + std::to_string(i) + "]";
        add(name, [&, i, name] {
            for (std::size_t j = 0; j < n; ++j) {
                Weight b = d->omega(j);
                QtOp lhs, rhs;
                if (j + 1 == i) {
                    lhs = R.Tinv(i) * R.Y(b) * R.Tinv(i);
                    rhs = R.Y(b - d->simple_root(i - 1));
                } else {
                    lhs = R.T(i) * R.Y(b);
                    rhs = R.Y(b) * R.T(i);
                }
                auto w = compare_ops(R, lhs, rhs, probes);
                if (!w.empty()) return CheckResult::fail(name, "b=" + d->weight_str(b) + " at " + w);
            }
            return CheckResult::pass(name);
        });
    }
    // T_v T_w = T_{vw} when lengths add
    add("length_additivity", [&] {
        std::mt19937 gen(20240611u);
        auto elems = random_affine_elements(*d, gen, 24, 4);
        std::size_t tested = 0;
        for (std::size_t a = 0; a < elems.size() && tested < 6; ++a)
            for (std::size_t b = 0; b < elems.size() && tested < 6; ++b) {
                auto vw = d->compose(elems[a], elems[b]);
                if (d->length(vw) != d->length(elems[a]) + d->length(elems[b])) continue;
                ++tested;
                auto w = compare_ops(R, R.T_element(elems[a]) * R.T_element(elems[b]), R.T_element(vw), probes);
                if (!w.empty()) return CheckResult::fail("length_additivity", "pair " + std::to_string(a) + "," +
                                                                                 std::to_string(b) + " at " + w);
            }
        return tested ? CheckResult::pass("length_additivity")
                      : CheckResult::skipped("length_additivity", "no additive pairs sampled");
    });
    // T_i(Delta) = -t_i^{-1/2} Delta
    for (std::size_t i = 1; i <= n; ++i) {
        std::string name = "discriminant[" + std::to_string(i) + "]";
        add(name, [&, i, name] {
            QtPoly delta = build_discriminant(d);
            QtPoly lhs = R.apply_T(i, delta);
            QtPoly rhs = -(QtParams::t_half_pow(d->nu_affine(i), -1) * delta);
            return CheckResult::from(name, lhs == rhs, lhs == rhs ? "" : "T_i(Delta) differs");
        });
    }

    for (std::size_t k = 0; k < jobs.size(); ++k) {
        rep.add(timed(names[k], jobs[k]));
        if (progress) progress(rep.checks.back());
    }
    return rep;
}

}  // namespace dahakit
