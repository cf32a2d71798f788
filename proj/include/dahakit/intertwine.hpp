#pragma once

// Y-intertwiners. The operator identities are checked in cleared form
// Psi_i = Phi_i (Y_{alpha_i}^{-1} - 1), which needs no Y-denominators; the
// normalized G_i are built as matrices on finite Y-stable subspaces.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dahakit/degenerate.hpp"
#include "dahakit/polyrep.hpp"

namespace dahakit {

// ---- q,t level ----

// T_{s_theta}
inline QtOp T_s_theta(const PolyRep& R) {
    const auto& d = R.datum();
    return R.T_element(d->finite(d->reflection(d->theta())));
}

// Y_{[b,j]} = Y_b q^{-j}
inline QtOp Y_affine(const PolyRep& R, const Weight& b, const Rational& j) {
    if (sgn(j) == 0) return R.Y(b);
    return R.params().q_pow(-j) * R.Y(b);
}

// Psi_i = T_i (Y_{alpha_i}^{-1} - 1) + (t_i^{1/2} - t_i^{-1/2}), i >= 1;
// Psi_0 = X_theta T_{s_theta} (Y_{alpha_0} - 1) - (t_0^{1/2} - t_0^{-1/2}), Y_{alpha_0} = q^{-1} Y_theta^{-1}
inline QtOp cleared_intertwiner(const PolyRep& R, std::size_t i) {
    const auto& d = R.datum();
    QtScalar td = QtParams::t_diff(d->nu_affine(i));
    if (i == 0) {
        QtOp y0 = Y_affine(R, -d->theta(), Rational(1));
        return R.X(d->theta()) * T_s_theta(R) * (y0 - QtOp::identity()) - QtOp::scalar(td);
    }
    return R.T(i) * (R.Y(-d->simple_root(i - 1)) - QtOp::identity()) + QtOp::scalar(td);
}

// s_i([b, 0]) as (finite part, level)
inline std::pair<Weight, Rational> affine_reflect_label(const RootDatum& d, std::size_t i, const Weight& b) {
    if (i == 0) return {d.reflection(d.theta()) * b, d.inner(b, d.theta())};
    return {d.s(i) * b, Rational(0)};
}

// ---- degenerate level ----

// Psi'_i = s_i y_{alpha_i} + nu_i k_i, i >= 1; Psi'_0 = X_theta s_theta (1 - y_theta) + k_0
inline KOp cleared_intertwiner_degenerate(const DegenerateRep& D, std::size_t i) {
    const auto& d = D.datum();
    if (i == 0) {
        KOp xs = D.mult_x(d->theta()) * D.reflect_x(d->reflection(d->theta()), "s_theta");
        return xs * (KOp::identity() - D.trig_dunkl(d->theta())) + KOp::scalar(k_param(1));
    }
    int nu = d->nu_simple(i - 1);
    return D.simple_reflection_x(i) * D.trig_dunkl(d->simple_root(i - 1)) +
           KOp::scalar(KScalar(static_cast<long>(nu)) * k_param(nu));
}

// ---- matrices ----

template <class S>
std::string matrix_diff_witness(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return "shape mismatch";
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (!(a(r, c) == b(r, c))) return "entry (" + std::to_string(r) + "," + std::to_string(c) + ")";
    return "";
}

// G = (A + c Z)(a0 + c Z)^{-1}, the common shape of G_i and G'_i
template <class S>
Matrix<S> normalized_intertwiner(const Matrix<S>& A, const Matrix<S>& Z, const S& a0, const S& c) {
    const std::size_t n = A.rows();
    Matrix<S> phi = Matrix<S>::scalar(n, a0) + c * Z;
    return (A + c * Z) * phi.inverse();
}

// restricted matrices of a family of operators on closure(seed) / closure(lower)
template <class S>
struct SubspaceData {
    std::vector<Weight> basis;
    std::set<Weight> lower;
    std::vector<Matrix<S>> gens;  // matrices of the closing operators, in order

    Matrix<S> restrict(const LinOp<LaurentPoly<S>>& op) const { return restrict_operator(op, basis, lower).matrix; }
};

template <class S>
SubspaceData<S> certify_subspace(const std::vector<LinOp<LaurentPoly<S>>>& ops, const std::vector<Weight>& seed,
                                 const std::vector<Weight>& lower_seed, std::size_t rank, int bound = 8) {
    SubspaceData<S> sd;
    auto top = monomial_closure(ops, seed, rank, bound);
    if (!lower_seed.empty()) {
        auto l = monomial_closure(ops, lower_seed, rank, bound);
        sd.lower.insert(l.begin(), l.end());
    }
    for (const auto& w : top)
        if (!sd.lower.count(w)) sd.basis.push_back(w);
    for (const auto& op : ops) sd.gens.push_back(sd.restrict(op));
    return sd;
}

// G'_i on a subspace closed under s_1..s_n and the trigonometric Dunkl operators
inline Matrix<KScalar> G_degenerate(const DegenerateRep& D, const SubspaceData<KScalar>& sd, std::size_t i) {
    const auto& d = D.datum();
    int nu = d->nu_simple(i - 1);
    Matrix<KScalar> s = sd.restrict(D.simple_reflection_x(i));
    Matrix<KScalar> Z = sd.restrict(D.trig_dunkl(d->simple_root(i - 1))).inverse();
    KScalar c = KScalar(static_cast<long>(nu)) * k_param(nu);
    return normalized_intertwiner(s, Z, KScalar(1), c);
}

// G_i on a subspace closed under T_1..T_n and Y
inline Matrix<QtScalar> G_qt(const PolyRep& R, const SubspaceData<QtScalar>& sd, std::size_t i) {
    const auto& d = R.datum();
    int nu = d->nu_simple(i - 1);
    const std::size_t n = sd.basis.size();
    Matrix<QtScalar> T = sd.restrict(R.T(i));
    Matrix<QtScalar> Yinv = sd.restrict(R.Y(-d->simple_root(i - 1)));
    Matrix<QtScalar> Z = (Yinv - Matrix<QtScalar>::identity(n)).inverse();
    return normalized_intertwiner(T, Z, QtParams::t_half(nu), QtParams::t_diff(nu));
}

inline std::vector<KOp> degenerate_closing_ops(const DegenerateRep& D) {
    const auto& d = D.datum();
    std::vector<KOp> ops;
    for (std::size_t i = 1; i <= d->rank(); ++i) ops.push_back(D.simple_reflection_x(i));
    for (std::size_t j = 0; j < d->rank(); ++j) ops.push_back(D.trig_dunkl(d->omega(j)));
    return ops;
}

inline std::vector<QtOp> qt_closing_ops(const PolyRep& R) {
    const auto& d = R.datum();
    std::vector<QtOp> ops;
    for (std::size_t i = 1; i <= d->rank(); ++i) ops.push_back(R.T(i));
    for (std::size_t j = 0; j < d->rank(); ++j) {
        ops.push_back(R.Y(d->omega(j)));
        ops.push_back(R.Y(-d->omega(j)));
    }
    return ops;
}

// a seed and the seed of the submodule quotiented out
struct SubspaceSeed {
    std::vector<Weight> seed;
    std::vector<Weight> lower;
    std::string label(std::size_t n) const {
        auto list = [n](const std::vector<Weight>& ws) {
            std::string s = "{";
            for (std::size_t k = 0; k < ws.size(); ++k) s += (k ? "," : "") + weight_string(ws[k], n);
            return s + "}";
        };
        return lower.empty() ? list(seed) : list(seed) + "/" + list(lower);
    }
};

// closure(lambda) modulo the span of the lower orbits in it; carries W.lambda
template <class S>
SubspaceSeed orbit_quotient_seed(const RootDatum& d, const std::vector<LinOp<LaurentPoly<S>>>& ops,
                                 const Weight& lambda, int bound = 8) {
    SubspaceSeed sp{{lambda}, {}};
    for (const auto& w : monomial_closure(ops, {lambda}, d.rank(), bound))
        if (w != lambda && d.dominant(w) == w) sp.lower.push_back(w);
    return sp;
}

// A1: the two-dimensional span of X_{+-omega}; rank >= 2: the regular orbit of rho
inline std::vector<SubspaceSeed> default_degenerate_seeds(const DegenerateRep& D) {
    const auto& d = *D.datum();
    if (d.rank() == 1) return {SubspaceSeed{{d.omega(0)}, {}}};
    if (d.weyl_order() > 8) return {};  // 12x12 matrices over Q(ks, kl) are too slow for a default run
    return {orbit_quotient_seed(d, degenerate_closing_ops(D), d.rho())};
}

inline std::vector<SubspaceSeed> default_qt_seeds(const PolyRep& R) {
    const auto& d = *R.datum();
    if (d.rank() == 1) return {SubspaceSeed{{d.omega(0)}, {}}};
    if (d.weyl_order() > 6) return {};
    return {orbit_quotient_seed(d, qt_closing_ops(R), d.rho())};
}

// unitarity, Y-conjugation and braid checks for a list of G matrices
template <class S, class YMat>
void G_matrix_checks(Report& rep, const RootDatum& d, const std::string& prefix, const std::vector<Matrix<S>>& G,
                     YMat ymat) {
    const std::size_t n = d.rank();
    const std::size_t dim = G.empty() ? 0 : G[0].rows();
    for (std::size_t i = 1; i <= n; ++i) {
        const auto& g = G[i - 1];
        std::string name = prefix + "unitarity[" + std::to_string(i) + "]";
        rep.add(timed(name, [&] {
            auto w = matrix_diff_witness(g * g, Matrix<S>::identity(dim));
            return CheckResult::from(name, w.empty(), w);
        }));
        name = prefix + "conjugation[" + std::to_string(i) + "]";
        rep.add(timed(name, [&] {
            Matrix<S> ginv = g.inverse();
            for (std::size_t j = 0; j < n; ++j) {
                Weight b = d.omega(j);
                auto w = matrix_diff_witness(g * ymat(b) * ginv, ymat(d.s(i) * b));
                if (!w.empty()) return CheckResult::fail(name, "b=" + d.weight_str(b) + " " + w);
            }
            return CheckResult::pass(name);
        }));
    }
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
            int m = d.braid_order(i, j);
            if (m == 0) continue;
            std::string name = prefix + "braid[" + std::to_string(i) + "," + std::to_string(j) + "]";
            rep.add(timed(name, [&] {
                Matrix<S> l = Matrix<S>::identity(dim), r = l;
                for (int k = 0; k < m; ++k) {
                    l = l * G[(k % 2 == 0 ? i : j) - 1];
                    r = r * G[(k % 2 == 0 ? j : i) - 1];
                }
                auto w = matrix_diff_witness(l, r);
                return CheckResult::from(name, w.empty(), w);
            }));
        }
}

struct IntertwineOptions {
    int degree = 3;           // probe box for the operator identities
    int label_degree = 1;     // box of Y-labels b
    std::vector<SubspaceSeed> seeds;  // empty: defaults
};

inline Report intertwine_suite_qt(const DatumPtr& d, const IntertwineOptions& opt = {}) {
    PolyRep R(d);
    const std::size_t n = d->rank();
    const auto probes = ProbeBox(n, opt.degree).weights;
    const auto labels = ProbeBox(n, opt.label_degree).weights;
    Report rep;
    rep.suite = "intertwine";
    rep.type = d->label();
    rep.backend = "qt";
    rep.params = {{"degree", opt.degree}, {"label_degree", opt.label_degree}, {"probe_monomials", probes.size()}};
    for (std::size_t i = 0; i <= n; ++i) {
        std::string name = "intertwining[" + std::to_string(i) + "]";
        rep.add(timed(name, [&, i] {
            QtOp psi = cleared_intertwiner(R, i);
            for (const auto& b : labels) {
                auto [sb, lev] = affine_reflect_label(*d, i, b);
                auto w = compare_ops(R, psi * R.Y(b), Y_affine(R, sb, lev) * psi, probes);
                if (!w.empty()) return CheckResult::fail(name, "b=" + d->weight_str(b) + " at " + w);
            }
            return CheckResult::pass(name);
        }));
    }
    auto seeds = opt.seeds.empty() ? default_qt_seeds(R) : opt.seeds;
    if (seeds.empty()) rep.add(CheckResult::skipped("G.subspace", "no default subspace for this type"));
    Json dims = Json::array();
    for (const auto& sp : seeds) {
        std::string prefix = "G" + sp.label(n) + ".";
        std::optional<SubspaceData<QtScalar>> sd;
        rep.add(timed(prefix + "subspace", [&] {
            sd = certify_subspace(qt_closing_ops(R), sp.seed, sp.lower, n);
            dims.push_back({{"seed", sp.label(n)}, {"dimension", sd->basis.size()}});
            return CheckResult::pass(prefix + "subspace");
        }));
        if (!sd) continue;
        std::vector<Matrix<QtScalar>> G;
        rep.add(timed(prefix + "build", [&] {
            for (std::size_t i = 1; i <= n; ++i) G.push_back(G_qt(R, *sd, i));
            return CheckResult::pass(prefix + "build");
        }));
        if (G.size() != n) continue;
        G_matrix_checks(rep, *d, prefix, G, [&](const Weight& b) { return sd->restrict(R.Y(b)); });
    }
    rep.data["subspaces"] = dims;
    return rep;
}

inline Report intertwine_suite_degenerate(const DatumPtr& d, const IntertwineOptions& opt = {}) {
    DegenerateRep D(d);
    const std::size_t n = d->rank();
    const auto probes = ProbeBox(n, opt.degree).weights;
    const auto labels = ProbeBox(n, opt.label_degree).weights;
    auto wx = [&](const Weight& e) { return D.witness_x(e); };
    Report rep;
    rep.suite = "intertwine";
    rep.type = d->label();
    rep.backend = "k";
    rep.params = {{"degree", opt.degree}, {"label_degree", opt.label_degree}, {"probe_monomials", probes.size()}};
    for (std::size_t i = 0; i <= n; ++i) {
        std::string name = "intertwining[" + std::to_string(i) + "]";
        rep.add(timed(name, [&, i] {
            KOp psi = cleared_intertwiner_degenerate(D, i);
            for (const auto& b : labels) {
                auto [sb, lev] = affine_reflect_label(*d, i, b);
                auto w = compare_k(psi * D.y(b), D.y(sb, lev) * psi, probes, wx);
                if (!w.empty()) return CheckResult::fail(name, "b=" + d->weight_str(b) + " at " + w);
            }
            return CheckResult::pass(name);
        }));
    }
    // on constants y_{alpha_i} acts by -nu_i k_i, so phi'_i vanishes there
    rep.add(timed("unit_subspace_singular", [&] {
        auto sd = certify_subspace(degenerate_closing_ops(D), {Weight{}}, {}, n);
        try {
            G_degenerate(D, sd, 1);
        } catch (const SingularMatrix&) {
            return CheckResult::pass("unit_subspace_singular");
        }
        return CheckResult::fail("unit_subspace_singular", "G'_1 built on span{1}");
    }));
    auto seeds = opt.seeds.empty() ? default_degenerate_seeds(D) : opt.seeds;
    if (seeds.empty()) rep.add(CheckResult::skipped("G'.subspace", "no default subspace for this type"));
    Json dims = Json::array();
    for (const auto& sp : seeds) {
        std::string prefix = "G'" + sp.label(n) + ".";
        std::optional<SubspaceData<KScalar>> sd;
        rep.add(timed(prefix + "subspace", [&] {
            sd = certify_subspace(degenerate_closing_ops(D), sp.seed, sp.lower, n);
            dims.push_back({{"seed", sp.label(n)}, {"dimension", sd->basis.size()}});
            return CheckResult::pass(prefix + "subspace");
        }));
        if (!sd) continue;
        std::vector<Matrix<KScalar>> G;
        rep.add(timed(prefix + "build", [&] {
            for (std::size_t i = 1; i <= n; ++i) G.push_back(G_degenerate(D, *sd, i));
            return CheckResult::pass(prefix + "build");
        }));
        if (G.size() != n) continue;
        G_matrix_checks(rep, *d, prefix, G, [&](const Weight& b) { return sd->restrict(D.trig_dunkl(b)); });
    }
    rep.data["subspaces"] = dims;
    return rep;
}

}  // namespace dahakit
