#pragma once

// The specialization t = 1, q a primitive N-th root of unity, N = 1 + h:
// the module Q(zeta)[P/NP] of W x (Weyl algebra with X^N = Y^N = 1), its
// irreducibility certificate, the orbit census, and the modular variant
// F_p[x]/(x^p).

#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dahakit/linalg.hpp"
#include "dahakit/report.hpp"
#include "dahakit/rootdata.hpp"
#include "dahakit/scalars.hpp"

namespace dahakit {

// column-sparse square matrix
template <class S>
class SparseMatrix {
   public:
    using Col = std::vector<std::pair<std::size_t, S>>;  // sorted by row, no zeros

    SparseMatrix() = default;
    explicit SparseMatrix(std::size_t n) : cols_(n) {}

    static SparseMatrix identity(std::size_t n, const S& one = S(1)) {
        SparseMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.cols_[i] = {{i, one}};
        return m;
    }
    static SparseMatrix scalar(std::size_t n, const S& s) {
        SparseMatrix m(n);
        if (!is_zero(s))
            for (std::size_t i = 0; i < n; ++i) m.cols_[i] = {{i, s}};
        return m;
    }

    std::size_t dim() const { return cols_.size(); }
    const Col& col(std::size_t j) const { return cols_[j]; }
    void set_col(std::size_t j, Col c) {
        normalize(c);
        cols_[j] = std::move(c);
    }

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
        SparseMatrix r(b.dim());
        for (std::size_t j = 0; j < b.dim(); ++j) {
            Col c;
            for (const auto& [k, v] : b.cols_[j])
                for (const auto& [i, w] : a.cols_[k]) c.push_back({i, w * v});
            r.set_col(j, std::move(c));
        }
        return r;
    }
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        if (a.dim() != b.dim()) return false;
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (a.cols_[j].size() != b.cols_[j].size()) return false;
            for (std::size_t k = 0; k < a.cols_[j].size(); ++k)
                if (a.cols_[j][k].first != b.cols_[j][k].first || !(a.cols_[j][k].second == b.cols_[j][k].second))
                    return false;
        }
        return true;
    }
    friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) { return !(a == b); }

    SparseMatrix pow(long k) const {
        SparseMatrix r = identity(dim()), b = *this;
        while (k > 0) {
            if (k & 1) r = r * b;
            k >>= 1;
            if (k) b = b * b;
        }
        return r;
    }
    template <class F>
    SparseMatrix map(F f) const {
        SparseMatrix r(dim());
        for (std::size_t j = 0; j < dim(); ++j) {
            Col c;
            for (const auto& [i, v] : cols_[j]) c.push_back({i, f(v)});
            r.set_col(j, std::move(c));
        }
        return r;
    }
    // rows as lists of (column, value)
    std::vector<Col> rows() const {
        std::vector<Col> r(dim());
        for (std::size_t j = 0; j < dim(); ++j)
            for (const auto& [i, v] : cols_[j]) r[i].push_back({j, v});
        return r;
    }
    // block diagonal sum with itself
    SparseMatrix doubled() const {
        const std::size_t n = dim();
        SparseMatrix r(2 * n);
        for (std::size_t j = 0; j < n; ++j) {
            r.cols_[j] = cols_[j];
            Col c;
            for (const auto& [i, v] : cols_[j]) c.push_back({i + n, v});
            r.cols_[j + n] = std::move(c);
        }
        return r;
    }

   private:
    std::vector<Col> cols_;

    static void normalize(Col& c) {
        std::sort(c.begin(), c.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        Col out;
        for (auto& e : c) {
            if (!out.empty() && out.back().first == e.first) {
                out.back().second += e.second;
            } else {
                if (!out.empty() && is_zero(out.back().second)) out.pop_back();
                out.push_back(e);
            }
        }
        if (!out.empty() && is_zero(out.back().second)) out.pop_back();
        c = std::move(out);
    }
};

// dimension of {A : A g_k = h_k A for all k}
template <class S>
std::size_t intertwiner_dimension(const std::vector<SparseMatrix<S>>& g, const std::vector<SparseMatrix<S>>& h) {
    const std::size_t n = g.at(0).dim();
    SparseEchelon<S> ech(n * n);
    auto var = [n](std::size_t u, std::size_t v) { return u * n + v; };
    for (std::size_t k = 0; k < g.size(); ++k) {
        auto hrows = h[k].rows();
        // (A g)_{uv} = sum_w A_{uw} g_{wv};  (h A)_{uv} = sum_w h_{uw} A_{wv}
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) {
                typename SparseEchelon<S>::Row row;
                for (const auto& [w, x] : g[k].col(v)) row.push_back({var(u, w), x});
                for (const auto& [w, x] : hrows[u]) row.push_back({var(w, v), -x});
                if (!row.empty()) ech.insert(std::move(row));
            }
    }
    return ech.nullity();
}

template <class S>
std::size_t commutant_dimension(const std::vector<SparseMatrix<S>>& gens) {
    return intertwiner_dimension(gens, gens);
}

// ---- the torus module Q(zeta)[P/NP] ----

inline long gcd_l(long a, long b) { return std::gcd(a, b); }

// [P:Q] = det of the Cartan matrix
inline long fundamental_group_order(const RootDatum& d) {
    const std::size_t n = d.rank();
    Matrix<Rational> c(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c(i, j) = d.cartan(i, j);
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && sgn(c(piv, col)) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            for (std::size_t k = 0; k < n; ++k) std::swap(c(piv, k), c(col, k));
            det = -det;
        }
        det *= c(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            Rational f = c(r, col) / c(col, col);
            for (std::size_t k = 0; k < n; ++k) c(r, k) -= f * c(col, k);
        }
    }
    return to_long(det);
}

class TorusModule {
   public:
    using M = SparseMatrix<CycloScalar>;

    TorusModule(DatumPtr d, long N) : d_(std::move(d)), N_(N), n_(d_->rank()) {
        if (N < 2) throw IncompatibleParameters("modulus below 2");
        if (gcd_l(d_->m(), N) != 1)
            throw IncompatibleParameters("m = " + std::to_string(d_->m()) + " is not coprime to N = " + std::to_string(N));
        long pq = fundamental_group_order(*d_);
        if (gcd_l(pq, N) != 1) throw IncompatibleParameters("[P:Q] = " + std::to_string(pq) + " is not coprime to N");
        for (std::size_t i = 0; i < n_; ++i)
            if (gcd_l(d_->nu_simple(i), N) != 1) throw IncompatibleParameters("root length not coprime to N");
        std::size_t dim = 1;
        for (std::size_t i = 0; i < n_; ++i) dim *= static_cast<std::size_t>(N);
        cosets_.resize(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            std::size_t r = k;
            for (std::size_t i = 0; i < n_; ++i) {
                cosets_[k][i] = static_cast<int>(r % static_cast<std::size_t>(N));
                r /= static_cast<std::size_t>(N);
            }
        }
    }

    const DatumPtr& datum() const { return d_; }
    long N() const { return N_; }
    std::size_t dim() const { return cosets_.size(); }
    const std::vector<Weight>& cosets() const { return cosets_; }

    Weight reduce(Weight c) const {
        for (std::size_t i = 0; i < n_; ++i) c[i] = static_cast<int>(pos_mod(c[i], N_));
        return c;
    }
    std::size_t index(const Weight& c) const {
        Weight r = reduce(c);
        std::size_t k = 0;
        for (std::size_t i = n_; i-- > 0;) k = k * static_cast<std::size_t>(N_) + static_cast<std::size_t>(r[i]);
        return k;
    }

    // z = q^{1/m}, a primitive N-th root of unity; q = z^m
    CycloScalar z_pow(long e) const { return CycloScalar::root_power(N_, e); }
    CycloScalar q_pow_inner(const Weight& a, const Weight& b, long sign = 1) const {
        return z_pow(sign * d_->inner_m(a, b));
    }

    // X_a delta_c = delta_{c+a}
    M X(const Weight& a) const {
        M m(dim());
        for (std::size_t k = 0; k < dim(); ++k) m.set_col(k, {{index(cosets_[k] + a), CycloScalar(1)}});
        return m;
    }
    // Y_b delta_c = q^{(b,c)} delta_c
    M Y(const Weight& b) const {
        M m(dim());
        for (std::size_t k = 0; k < dim(); ++k) m.set_col(k, {{k, q_pow_inner(b, cosets_[k])}});
        return m;
    }
    // w delta_c = delta_{w c}
    M W(const IMat& w) const {
        M m(dim());
        for (std::size_t k = 0; k < dim(); ++k) m.set_col(k, {{index(w * cosets_[k]), CycloScalar(1)}});
        return m;
    }
    M s(std::size_t i) const { return W(d_->s(i)); }

    std::vector<M> generators() const {
        std::vector<M> g;
        for (std::size_t i = 0; i < n_; ++i) {
            g.push_back(X(d_->omega(i)));
            g.push_back(Y(d_->omega(i)));
        }
        for (std::size_t i = 1; i <= n_; ++i) g.push_back(s(i));
        return g;
    }

   private:
    DatumPtr d_;
    long N_;
    std::size_t n_;
    std::vector<Weight> cosets_;
};

// ---- orbit census and Burnside counts ----

struct OrbitCensus {
    std::size_t orbits = 0;
    std::size_t free_orbits = 0;
    bool free_orbit_contains_rho = false;
    std::vector<std::size_t> sizes;
};

inline OrbitCensus orbit_census(const RootDatum& d, long N) {
    const std::size_t n = d.rank();
    std::size_t dim = 1;
    for (std::size_t i = 0; i < n; ++i) dim *= static_cast<std::size_t>(N);
    auto reduce = [&](Weight c) {
        for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<int>(pos_mod(c[i], N));
        return c;
    };
    std::set<Weight> seen;
    OrbitCensus oc;
    Weight rho = reduce(d.rho());
    for (std::size_t k = 0; k < dim; ++k) {
        Weight c;
        std::size_t r = k;
        for (std::size_t i = 0; i < n; ++i) {
            c[i] = static_cast<int>(r % static_cast<std::size_t>(N));
            r /= static_cast<std::size_t>(N);
        }
        if (seen.count(c)) continue;
        std::set<Weight> orb;
        for (const auto& w : d.weyl_elements()) orb.insert(reduce(w * c));
        seen.insert(orb.begin(), orb.end());
        ++oc.orbits;
        oc.sizes.push_back(orb.size());
        if (orb.size() == d.weyl_order()) {
            ++oc.free_orbits;
            if (orb.count(rho)) oc.free_orbit_contains_rho = true;
        }
    }
    std::sort(oc.sizes.begin(), oc.sizes.end());
    return oc;
}

// (1/|W|) sum_w sgn(w) #Fix(w on P/NP)
inline Rational sign_multiplicity(const RootDatum& d, long N) {
    const std::size_t n = d.rank();
    std::size_t dim = 1;
    for (std::size_t i = 0; i < n; ++i) dim *= static_cast<std::size_t>(N);
    long total = 0;
    for (const auto& w : d.weyl_elements()) {
        long fix = 0;
        for (std::size_t k = 0; k < dim; ++k) {
            Weight c;
            std::size_t r = k;
            for (std::size_t i = 0; i < n; ++i) {
                c[i] = static_cast<int>(r % static_cast<std::size_t>(N));
                r /= static_cast<std::size_t>(N);
            }
            Weight wc = w * c;
            bool fixed = true;
            for (std::size_t i = 0; i < n; ++i) fixed = fixed && pos_mod(wc[i] - c[i], N) == 0;
            fix += fixed;
        }
        total += d.sign(w) * fix;
    }
    return rat(total, static_cast<long>(d.weyl_order()));
}

// for r in O', b = rho + omega_r, w = u_r^{-1}: (w(rho) - b, alpha_i) = -N [i = r], 0 otherwise
inline std::string displayed_identity_witness(const RootDatum& d, long N) {
    for (int r : d.minuscule()) {
        Weight b = d.rho() + d.omega(static_cast<std::size_t>(r - 1));
        Weight v = d.inverse(d.u(r)) * d.rho() - b;
        for (std::size_t i = 1; i <= d.rank(); ++i) {
            Rational got = d.inner(v, d.simple_root(i - 1));
            Rational want = static_cast<int>(i) == r ? Rational(-N) : Rational(0);
            if (got != want)
                return "r=" + std::to_string(r) + " i=" + std::to_string(i) + " gives " + got.get_str();
        }
    }
    return "";
}

// ---- the modular module F_p[x]/(x^p) ----

class ModularModule {
   public:
    using M = SparseMatrix<PrimeField>;

    ModularModule(std::size_t rank, long p) : n_(rank), p_(p) {
        if (!is_prime(p)) throw IncompatibleParameters("modulus " + std::to_string(p) + " is not prime");
        std::size_t dim = 1;
        for (std::size_t i = 0; i < n_; ++i) dim *= static_cast<std::size_t>(p);
        dim_ = dim;
    }
    std::size_t dim() const { return dim_; }
    long p() const { return p_; }

    std::vector<int> exponent(std::size_t k) const {
        std::vector<int> e(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            e[i] = static_cast<int>(k % static_cast<std::size_t>(p_));
            k /= static_cast<std::size_t>(p_);
        }
        return e;
    }
    std::size_t index(const std::vector<int>& e) const {
        std::size_t k = 0;
        for (std::size_t i = n_; i-- > 0;) k = k * static_cast<std::size_t>(p_) + static_cast<std::size_t>(e[i]);
        return k;
    }
    PrimeField F(long v) const { return PrimeField(v, p_); }

    // multiplication by x_i, with x_i^p = 0
    M x(std::size_t i) const {
        M m(dim_);
        for (std::size_t k = 0; k < dim_; ++k) {
            auto e = exponent(k);
            if (e[i] + 1 >= p_) continue;
            ++e[i];
            m.set_col(k, {{index(e), F(1)}});
        }
        return m;
    }
    M partial(std::size_t i) const {
        M m(dim_);
        for (std::size_t k = 0; k < dim_; ++k) {
            auto e = exponent(k);
            if (e[i] == 0) continue;
            long c = e[i]--;
            m.set_col(k, {{index(e), F(c)}});
        }
        return m;
    }
    std::vector<M> generators() const {
        std::vector<M> g;
        for (std::size_t i = 0; i < n_; ++i) {
            g.push_back(x(i));
            g.push_back(partial(i));
        }
        return g;
    }

   private:
    std::size_t n_;
    long p_;
    std::size_t dim_ = 0;
};

// ---- suites ----

struct RootsOfUnityOptions {
    std::optional<long> modulus;  // cyclo: negative-control N; fp: the prime p
    std::size_t max_commutant_rank = 2;
};

template <class S>
std::string sparse_diff(const SparseMatrix<S>& a, const SparseMatrix<S>& b) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
        const auto& x = a.col(j);
        const auto& y = b.col(j);
        bool same = x.size() == y.size();
        for (std::size_t k = 0; same && k < x.size(); ++k) same = x[k].first == y[k].first && x[k].second == y[k].second;
        if (!same) return "column " + std::to_string(j);
    }
    return "";
}

inline Report roots_of_unity_suite(const DatumPtr& d, const RootsOfUnityOptions& opt = {}) {
    const std::size_t n = d->rank();
    const long N = 1 + d->coxeter_number();
    Report rep;
    rep.suite = "roots-of-unity";
    rep.type = d->label();
    rep.backend = "cyclo";
    rep.params = {{"N", N}};
    auto add = [&](const std::string& name, const std::function<CheckResult()>& f) { rep.add(timed(name, f)); };

    TorusModule V(d, N);
    using M = TorusModule::M;
    rep.data["dimension"] = V.dim();
    rep.data["q_root"] = "q^{1/" + std::to_string(d->m()) + "} = exp(2 pi i / " + std::to_string(N) + ")";
    std::size_t want_dim = 1;
    for (std::size_t i = 0; i < n; ++i) want_dim *= static_cast<std::size_t>(N);
    rep.data["expected_dimension"] = want_dim;
    add("dimension", [&] {
        std::size_t want = want_dim;
        return CheckResult::from("dimension", V.dim() == want,
                                 std::to_string(V.dim()) + " != " + std::to_string(want));
    });

    std::vector<M> X, Y, S;
    for (std::size_t i = 0; i < n; ++i) {
        X.push_back(V.X(d->omega(i)));
        Y.push_back(V.Y(d->omega(i)));
        S.push_back(V.s(i + 1));
    }
    const M I = M::identity(V.dim());
    add("X_power_N", [&] {
        for (std::size_t i = 0; i < n; ++i)
            if (X[i].pow(N) != I) return CheckResult::fail("X_power_N", "omega" + std::to_string(i + 1));
        return CheckResult::pass("X_power_N");
    });
    add("Y_power_N", [&] {
        for (std::size_t i = 0; i < n; ++i)
            if (Y[i].pow(N) != I) return CheckResult::fail("Y_power_N", "omega" + std::to_string(i + 1));
        return CheckResult::pass("Y_power_N");
    });
    add("XY_commutator", [&] {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Weight a = d->omega(i), b = d->omega(j);
                M lhs = X[i] * Y[j] * V.X(-a) * V.Y(-b);
                M rhs = M::scalar(V.dim(), V.q_pow_inner(a, b, -1));
                auto w = sparse_diff(lhs, rhs);
                if (!w.empty())
                    return CheckResult::fail("XY_commutator", "a=omega" + std::to_string(i + 1) + " b=omega" +
                                                                  std::to_string(j + 1) + " " + w);
            }
        return CheckResult::pass("XY_commutator");
    });
    add("X_Y_abelian", [&] {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (X[i] * X[j] != X[j] * X[i] || Y[i] * Y[j] != Y[j] * Y[i])
                    return CheckResult::fail("X_Y_abelian", std::to_string(i + 1) + "," + std::to_string(j + 1));
        return CheckResult::pass("X_Y_abelian");
    });
    add("W_relations", [&] {
        for (std::size_t i = 1; i <= n; ++i) {
            if (S[i - 1] * S[i - 1] != I) return CheckResult::fail("W_relations", "s" + std::to_string(i) + "^2");
            for (std::size_t j = i + 1; j <= n; ++j) {
                int m = d->braid_order(i, j);
                M l = I, r = I;
                for (int k = 0; k < m; ++k) {
                    l = l * S[(k % 2 == 0 ? i : j) - 1];
                    r = r * S[(k % 2 == 0 ? j : i) - 1];
                }
                if (l != r) return CheckResult::fail("W_relations", "braid " + std::to_string(i) + "," + std::to_string(j));
            }
        }
        return CheckResult::pass("W_relations");
    });
    add("W_equivariance", [&] {
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Weight a = d->omega(j);
                if (S[i - 1] * X[j] * S[i - 1] != V.X(d->s(i) * a) || S[i - 1] * Y[j] * S[i - 1] != V.Y(d->s(i) * a))
                    return CheckResult::fail("W_equivariance", "s" + std::to_string(i) + " omega" + std::to_string(j + 1));
            }
        return CheckResult::pass("W_equivariance");
    });

    if (n <= opt.max_commutant_rank) {
        auto gens = V.generators();
        add("commutant", [&] {
            std::size_t c = commutant_dimension(gens);
            rep.data["commutant_dimension"] = c;
            return CheckResult::from("commutant", c == 1, "dimension " + std::to_string(c));
        });
        add("commutant_double_control", [&] {
            std::vector<M> dbl;
            for (const auto& g : gens) dbl.push_back(g.doubled());
            std::size_t c = commutant_dimension(dbl);
            rep.data["commutant_dimension_doubled"] = c;
            return CheckResult::from("commutant_double_control", c == 4, "dimension " + std::to_string(c));
        });
        // epsilon: X -> sigma(Y), Y -> sigma(X), w -> w, with sigma: z -> z^{-1}
        add("epsilon_duality", [&] {
            auto sigma = [&](const M& m) { return m.map([](const CycloScalar& x) { return x.galois(-1); }); };
            std::vector<M> g, h, h_plain;
            for (std::size_t i = 0; i < n; ++i) {
                g.push_back(X[i]);
                h.push_back(sigma(Y[i]));
                h_plain.push_back(Y[i]);
                g.push_back(Y[i]);
                h.push_back(sigma(X[i]));
                h_plain.push_back(X[i]);
            }
            for (std::size_t i = 0; i < n; ++i) {
                g.push_back(S[i]);
                h.push_back(sigma(S[i]));
                h_plain.push_back(S[i]);
            }
            std::size_t dual = intertwiner_dimension(g, h);
            rep.data["epsilon_intertwiner_dimension"] = dual;
            rep.data["swap_without_galois_dimension"] = intertwiner_dimension(g, h_plain);
            return CheckResult::from("epsilon_duality", dual == 1, "intertwiner space of dimension " + std::to_string(dual));
        });
    } else {
        rep.add(CheckResult::skipped("commutant", "rank above " + std::to_string(opt.max_commutant_rank)));
    }

    add("orbit_census", [&] {
        auto oc = orbit_census(*d, N);
        Json sizes = Json::array();
        for (auto s : oc.sizes) sizes.push_back(s);
        rep.data["orbits"] = {{"count", oc.orbits}, {"free", oc.free_orbits}, {"sizes", sizes}};
        bool ok = oc.free_orbits == 1 && oc.free_orbit_contains_rho;
        return CheckResult::from("orbit_census", ok, std::to_string(oc.free_orbits) + " free orbits");
    });
    add("displayed_identity", [&] {
        auto w = displayed_identity_witness(*d, N);
        return CheckResult::from("displayed_identity", w.empty(), w);
    });
    add("sign_multiplicity", [&] {
        Rational m = sign_multiplicity(*d, N);
        rep.data["sign_multiplicity"] = m.get_str();
        return CheckResult::from("sign_multiplicity", m == 1, m.get_str());
    });
    if (opt.modulus && *opt.modulus != N) {
        Json ctl;
        ctl["N"] = *opt.modulus;
        ctl["sign_multiplicity"] = sign_multiplicity(*d, *opt.modulus).get_str();
        auto oc = orbit_census(*d, *opt.modulus);
        ctl["free_orbits"] = oc.free_orbits;
        rep.data["modulus_control"] = ctl;
    }
    return rep;
}

inline Report modular_suite(const DatumPtr& d, const RootsOfUnityOptions& opt = {}) {
    const std::size_t n = d->rank();
    const long p = opt.modulus.value_or(1 + d->coxeter_number());
    if (p != 1 + d->coxeter_number())
        throw IncompatibleParameters("modular mode needs p = 1 + h = " + std::to_string(1 + d->coxeter_number()));
    ModularModule V(n, p);
    using M = ModularModule::M;
    Report rep;
    rep.suite = "roots-of-unity";
    rep.type = d->label();
    rep.backend = "fp";
    rep.params = {{"p", p}};
    rep.data["dimension"] = V.dim();
    auto add = [&](const std::string& name, const std::function<CheckResult()>& f) { rep.add(timed(name, f)); };
    add("dimension", [&] {
        std::size_t want = 1;
        for (std::size_t i = 0; i < n; ++i) want *= static_cast<std::size_t>(p);
        return CheckResult::from("dimension", V.dim() == want, std::to_string(V.dim()));
    });
    add("heisenberg", [&] {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                M a = V.partial(i) * V.x(j), b = V.x(j) * V.partial(i);
                M want = i == j ? M::identity(V.dim(), V.F(1)) : M::scalar(V.dim(), V.F(0));
                // a - b == want  <=>  a == b + want
                M diff(V.dim());
                for (std::size_t c = 0; c < V.dim(); ++c) {
                    auto col = b.col(c);
                    for (const auto& e : want.col(c)) col.push_back(e);
                    diff.set_col(c, col);
                }
                if (a != diff) return CheckResult::fail("heisenberg", std::to_string(i) + "," + std::to_string(j));
            }
        return CheckResult::pass("heisenberg");
    });
    add("commutant", [&] {
        std::size_t c = commutant_dimension(V.generators());
        rep.data["commutant_dimension"] = c;
        return CheckResult::from("commutant", c == 1, "dimension " + std::to_string(c));
    });
    return rep;
}

}  // namespace dahakit
