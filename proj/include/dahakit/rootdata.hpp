#pragma once

// Root data for small irreducible types, the finite Weyl group as integer
// matrices on fundamental-weight coordinates, and the extended affine Weyl
// group W x| P with lengths and reduced words.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dahakit/errors.hpp"
#include "dahakit/rational.hpp"

namespace dahakit {

inline constexpr std::size_t kMaxRank = 4;

// lattice point in omega-coordinates; unused trailing coordinates stay zero
struct Weight {
    std::array<int, kMaxRank> c{};

    int& operator[](std::size_t i) { return c[i]; }
    int operator[](std::size_t i) const { return c[i]; }
    friend auto operator<=>(const Weight&, const Weight&) = default;

    friend Weight operator+(Weight a, const Weight& b) {
        for (std::size_t i = 0; i < kMaxRank; ++i) a.c[i] += b.c[i];
        return a;
    }
    friend Weight operator-(Weight a, const Weight& b) {
        for (std::size_t i = 0; i < kMaxRank; ++i) a.c[i] -= b.c[i];
        return a;
    }
    friend Weight operator-(Weight a) {
        for (auto& x : a.c) x = -x;
        return a;
    }
    friend Weight operator*(int k, Weight a) {
        for (auto& x : a.c) x *= k;
        return a;
    }
    Weight& operator+=(const Weight& o) { return *this = *this + o; }
    Weight& operator-=(const Weight& o) { return *this = *this - o; }
    bool is_zero() const { return c == std::array<int, kMaxRank>{}; }
};

inline Weight make_weight(std::initializer_list<int> xs) {
    Weight w;
    std::size_t i = 0;
    for (int x : xs) w.c[i++] = x;
    return w;
}

inline std::string weight_string(const Weight& w, std::size_t n) {
    std::string s = "(";
    for (std::size_t i = 0; i < n; ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + ")";
}

// b with level j; X_{[b,j]} = X_b q^j
struct AffineWeight {
    Weight b;
    Rational j;
    friend bool operator==(const AffineWeight& x, const AffineWeight& y) { return x.b == y.b && x.j == y.j; }
};

// integer matrix acting on omega-coordinates
struct IMat {
    std::array<std::array<int, kMaxRank>, kMaxRank> a{};

    static IMat identity(std::size_t n) {
        IMat m;
        for (std::size_t i = 0; i < n; ++i) m.a[i][i] = 1;
        return m;
    }
    friend auto operator<=>(const IMat&, const IMat&) = default;

    Weight operator*(const Weight& v) const {
        Weight r;
        for (std::size_t i = 0; i < kMaxRank; ++i) {
            int s = 0;
            for (std::size_t j = 0; j < kMaxRank; ++j) s += a[i][j] * v[j];
            r[i] = s;
        }
        return r;
    }
    IMat operator*(const IMat& o) const {
        IMat r;
        for (std::size_t i = 0; i < kMaxRank; ++i)
            for (std::size_t k = 0; k < kMaxRank; ++k) {
                if (a[i][k] == 0) continue;
                for (std::size_t j = 0; j < kMaxRank; ++j) r.a[i][j] += a[i][k] * o.a[k][j];
            }
        return r;
    }
};

struct Root {
    Weight omega;                        // omega-coordinates
    std::array<int, kMaxRank> simple{};  // coefficients on simple roots
    std::array<int, kMaxRank> coroot{};  // coefficients of the coroot on simple coroots
    int nu = 1;                          // (alpha, alpha) / 2
    bool positive = true;
    int height() const {
        int h = 0;
        for (int x : simple) h += x;
        return h;
    }
};

// element t_b w of the extended affine Weyl group: [z, zeta] -> [w z, zeta - (w z, b)]
struct ExtAffineElement {
    IMat w;
    Weight b;
    friend auto operator<=>(const ExtAffineElement&, const ExtAffineElement&) = default;
};

// pi_r s_{i_l} ... s_{i_1}; letters stored left to right, r = 0 for the identity of Pi
struct ReducedWord {
    int r = 0;
    std::vector<int> letters;
    std::size_t length() const { return letters.size(); }
};

class RootDatum {
   public:
    static std::shared_ptr<const RootDatum> get(const std::string& label) {
        static std::mutex mu;
        static std::map<std::string, std::shared_ptr<const RootDatum>> registry;
        std::lock_guard<std::mutex> lock(mu);
        auto it = registry.find(label);
        if (it != registry.end()) return it->second;
        auto d = std::shared_ptr<RootDatum>(new RootDatum(label));
        registry[label] = d;
        return d;
    }

    static std::vector<std::string> supported_types() {
        return {"A1", "A2", "A3", "B2", "C2", "C3", "D4", "G2"};
    }

    const std::string& label() const { return label_; }
    std::size_t rank() const { return n_; }
    int cartan(std::size_t i, std::size_t j) const { return alpha_[j][i]; }  // (alpha_j, alpha_i^vee)
    const Weight& simple_root(std::size_t i) const { return alpha_[i]; }
    int nu_simple(std::size_t i) const { return nu_[i]; }
    // node 0 is the affine node, short
    int nu_affine(std::size_t i) const { return i == 0 ? 1 : nu_[i - 1]; }
    const std::vector<Root>& roots() const { return roots_; }
    std::vector<Root> positive_roots() const {
        std::vector<Root> r;
        for (const auto& x : roots_)
            if (x.positive) r.push_back(x);
        return r;
    }
    const Weight& rho() const { return rho_; }
    const Weight& theta() const { return theta_; }
    int coxeter_number() const { return h_; }
    int m() const { return m_; }
    std::size_t weyl_order() const { return weyl_.size(); }
    const std::vector<IMat>& weyl_elements() const { return weyl_; }
    const IMat& w0() const { return w0_; }
    const std::vector<int>& minuscule() const { return minuscule_; }  // O' (1-based node indices)
    int star(int r) const { return star_.at(r); }
    const IMat& u(int r) const { return u_.at(r); }
    bool has_long_roots() const { return has_long_; }

    Weight omega(std::size_t i) const {
        Weight w;
        w[i] = 1;
        return w;
    }

    // (a, b) as a rational
    Rational inner(const Weight& a, const Weight& b) const { return rat(inner_m(a, b), m_); }
    // m * (a, b), always an integer
    long inner_m(const Weight& a, const Weight& b) const {
        long s = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) s += static_cast<long>(a[i]) * gram_m_[i][j] * b[j];
        }
        return s;
    }
    Rational inner(const AffineWeight& a, const AffineWeight& b) const { return inner(a.b, b.b); }

    // (lambda, alpha^vee)
    int pair_coroot(const Weight& lambda, const Root& a) const {
        int s = 0;
        for (std::size_t j = 0; j < n_; ++j) s += lambda[j] * a.coroot[j];
        return s;
    }

    int root_index(const Weight& omega_coords) const {
        auto it = root_lookup_.find(omega_coords);
        return it == root_lookup_.end() ? -1 : it->second;
    }
    bool is_root(const Weight& w) const { return root_index(w) >= 0; }
    bool is_positive_root(const Weight& w) const {
        int k = root_index(w);
        if (k < 0) throw InternalError("not a root: " + weight_string(w, n_));
        return roots_[static_cast<std::size_t>(k)].positive;
    }
    const Root& root(const Weight& w) const {
        int k = root_index(w);
        if (k < 0) throw InternalError("not a root: " + weight_string(w, n_));
        return roots_[static_cast<std::size_t>(k)];
    }

    // finite simple reflection s_i, 1 <= i <= n
    const IMat& s(std::size_t i) const { return refl_[i - 1]; }
    // reflection in the root with the given omega-coordinates
    IMat reflection(const Weight& alpha) const {
        const Root& a = root(alpha);
        IMat m = IMat::identity(n_);
        // s_a(l) = l - (l, a^vee) a
        for (std::size_t k = 0; k < n_; ++k)
            for (std::size_t j = 0; j < n_; ++j) m.a[k][j] -= a.omega[k] * a.coroot[j];
        return m;
    }
    IMat inverse(const IMat& w) const {
        auto it = inverse_.find(w);
        if (it == inverse_.end()) throw InternalError("not a Weyl group element");
        return it->second;
    }
    int finite_length(const IMat& w) const {
        int l = 0;
        for (const auto& a : roots_)
            if (a.positive && !is_positive_root(w * a.omega)) ++l;
        return l;
    }
    int sign(const IMat& w) const { return finite_length(w) % 2 ? -1 : 1; }

    // ---- extended affine Weyl group ----
    ExtAffineElement identity() const { return {IMat::identity(n_), Weight{}}; }
    ExtAffineElement translation(const Weight& b) const { return {IMat::identity(n_), b}; }
    ExtAffineElement finite(const IMat& w) const { return {w, Weight{}}; }
    // s_i for 0 <= i <= n; s_0 = t_theta s_theta
    ExtAffineElement simple(std::size_t i) const {
        if (i == 0) return {reflection(theta_), theta_};
        return {s(i), Weight{}};
    }
    // pi_r = t_{omega_r} u_r^{-1}
    ExtAffineElement pi(int r) const {
        if (r == 0) return identity();
        return {inverse(u(r)), omega(static_cast<std::size_t>(r - 1))};
    }
    ExtAffineElement compose(const ExtAffineElement& x, const ExtAffineElement& y) const {
        return {x.w * y.w, x.b + x.w * y.b};
    }
    ExtAffineElement inverse(const ExtAffineElement& x) const {
        IMat wi = inverse(x.w);
        return {wi, -(wi * x.b)};
    }
    AffineWeight act(const ExtAffineElement& x, const AffineWeight& z) const {
        Weight wz = x.w * z.b;
        return {wz, z.j - inner(wz, x.b)};
    }
    // image of the affine root [alpha, nu_alpha * j]; returns root and the integer j'
    std::pair<Weight, int> act_on_affine_root(const ExtAffineElement& x, const Weight& alpha, int j) const {
        Weight wa = x.w * alpha;
        int k = pair_coroot(x.b, root(wa));
        return {wa, j - k};
    }
    // affine simple root alpha_i as (finite root, j); alpha_0 = [-theta, 1]
    std::pair<Weight, int> affine_simple_root(std::size_t i) const {
        if (i == 0) return {-theta_, 1};
        return {alpha_[i - 1], 0};
    }
    static bool affine_root_positive(const RootDatum& d, const Weight& a, int j) {
        return j > 0 || (j == 0 && d.is_positive_root(a));
    }

    // number of positive affine roots sent to negative ones
    int length(const ExtAffineElement& x) const {
        int l = 0;
        for (const auto& a : roots_) {
            Weight wa = x.w * a.omega;
            int k = pair_coroot(x.b, root(wa));
            int jmin = a.positive ? 0 : 1;
            l += std::max(0, k - jmin);
            if (k >= jmin && !is_positive_root(wa)) ++l;
        }
        return l;
    }

    bool right_descent(const ExtAffineElement& x, std::size_t i) const {
        auto [a, j] = affine_simple_root(i);
        auto [wa, wj] = act_on_affine_root(x, a, j);
        return !affine_root_positive(*this, wa, wj);
    }

    ReducedWord reduced_word(ExtAffineElement x) const {
        std::vector<int> rev;
        bool progress = true;
        while (progress) {
            progress = false;
            for (std::size_t i = 0; i <= n_; ++i) {
                if (right_descent(x, i)) {
                    x = compose(x, simple(i));
                    rev.push_back(static_cast<int>(i));
                    progress = true;
                    break;
                }
            }
        }
        ReducedWord w;
        w.r = -1;
        if (x == identity()) w.r = 0;
        for (int r : minuscule_)
            if (x == pi(r)) w.r = r;
        if (w.r < 0) throw InternalError("length-zero element outside Pi");
        w.letters.assign(rev.rbegin(), rev.rend());
        return w;
    }

    ExtAffineElement evaluate(const ReducedWord& w) const {
        ExtAffineElement x = pi(w.r);
        for (int i : w.letters) x = compose(x, simple(static_cast<std::size_t>(i)));
        return x;
    }

    // permutation of affine nodes induced by pi_r
    std::vector<int> pi_node_permutation(int r) const {
        std::vector<int> perm(n_ + 1, -1);
        auto p = pi(r);
        for (std::size_t i = 0; i <= n_; ++i) {
            auto [a, j] = affine_simple_root(i);
            auto img = act_on_affine_root(p, a, j);
            for (std::size_t k = 0; k <= n_; ++k)
                if (affine_simple_root(k) == img) perm[i] = static_cast<int>(k);
        }
        return perm;
    }

    // affine Cartan entry (alpha_j, alpha_i^vee), nodes 0..n
    int affine_cartan(std::size_t i, std::size_t j) const {
        Weight aj = affine_simple_root(j).first;
        Weight ai = affine_simple_root(i).first;
        return pair_coroot(aj, root(ai));
    }
    // Coxeter exponent m_ij for affine nodes; 0 when infinite
    int braid_order(std::size_t i, std::size_t j) const {
        int p = affine_cartan(i, j) * affine_cartan(j, i);
        switch (p) {
            case 0: return 2;
            case 1: return 3;
            case 2: return 4;
            case 3: return 6;
            default: return 0;
        }
    }

    // W-orbit of b, optionally reduced coordinate-wise mod N
    std::set<Weight> orbit(const Weight& b, long N = 0) const {
        auto reduce = [&](Weight w) {
            if (N > 0)
                for (std::size_t i = 0; i < n_; ++i) w[i] = static_cast<int>(pos_mod(w[i], N));
            return w;
        };
        std::set<Weight> seen{reduce(b)};
        std::vector<Weight> stack{reduce(b)};
        while (!stack.empty()) {
            Weight x = stack.back();
            stack.pop_back();
            for (std::size_t i = 1; i <= n_; ++i) {
                Weight y = reduce(s(i) * x);
                if (seen.insert(y).second) stack.push_back(y);
            }
        }
        return seen;
    }

    // dominant representative of the W-orbit of b
    Weight dominant(Weight b) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < n_; ++i)
                if (b[i] < 0) {
                    b = s(i + 1) * b;
                    changed = true;
                }
        }
        return b;
    }

    std::string weight_str(const Weight& w) const { return weight_string(w, n_); }

   private:
    std::string label_;
    std::size_t n_ = 0;
    std::vector<int> nu_;
    std::vector<Weight> alpha_;  // simple roots in omega-coordinates
    std::array<std::array<long, kMaxRank>, kMaxRank> gram_m_{};  // m * (omega_i, omega_j)
    int m_ = 1;
    std::vector<Root> roots_;
    std::map<Weight, int> root_lookup_;
    Weight rho_, theta_;
    int h_ = 0;
    std::vector<IMat> refl_;
    std::vector<IMat> weyl_;
    std::map<IMat, IMat> inverse_;
    IMat w0_;
    std::vector<int> minuscule_;
    std::map<int, int> star_;
    std::map<int, IMat> u_;
    bool has_long_ = false;

    explicit RootDatum(const std::string& label) : label_(label) {
        std::vector<std::pair<int, int>> links;
        if (label == "A1") {
            nu_ = {1};
        } else if (label == "A2") {
            nu_ = {1, 1};
            links = {{0, 1}};
        } else if (label == "A3") {
            nu_ = {1, 1, 1};
            links = {{0, 1}, {1, 2}};
        } else if (label == "B2") {
            nu_ = {2, 1};
            links = {{0, 1}};
        } else if (label == "C2") {
            nu_ = {1, 2};
            links = {{0, 1}};
        } else if (label == "C3") {
            nu_ = {1, 1, 2};
            links = {{0, 1}, {1, 2}};
        } else if (label == "D4") {
            nu_ = {1, 1, 1, 1};
            links = {{0, 1}, {1, 2}, {1, 3}};
        } else if (label == "G2") {
            nu_ = {1, 3};
            links = {{0, 1}};
        } else {
            throw UnsupportedType(label);
        }
        n_ = nu_.size();
        build(links);
    }

    void build(const std::vector<std::pair<int, int>>& links) {
        const std::size_t n = n_;
        // Gram matrix of simple roots
        std::vector<std::vector<long>> B(n, std::vector<long>(n, 0));
        for (std::size_t i = 0; i < n; ++i) B[i][i] = 2 * nu_[i];
        for (auto [i, j] : links) {
            long v = -std::max(nu_[static_cast<std::size_t>(i)], nu_[static_cast<std::size_t>(j)]);
            B[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            B[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
        }
        // alpha_j in omega-coordinates: coordinate i is (alpha_j, alpha_i^vee) = B_ij / nu_i
        alpha_.assign(n, Weight{});
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) alpha_[j][i] = static_cast<int>(B[i][j] / nu_[i]);

        // omega-Gram G = C^{-1} diag(nu), C rows = alpha_j coordinates
        std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < n; ++i) aug[j][i] = alpha_[j][i];
            aug[j][n + j] = 1;
        }
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (sgn(aug[piv][col]) == 0) ++piv;
            std::swap(aug[piv], aug[col]);
            Rational inv = 1 / aug[col][col];
            for (auto& x : aug[col]) x *= inv;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col || sgn(aug[r][col]) == 0) continue;
                Rational f = aug[r][col];
                for (std::size_t k = 0; k < 2 * n; ++k) aug[r][k] -= f * aug[col][k];
            }
        }
        std::vector<std::vector<Rational>> G(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) G[i][j] = aug[i][n + j] * nu_[j];
        m_ = 1;
        for (auto& row : G)
            for (auto& x : row) m_ = static_cast<int>(lcm_long(m_, x.get_den().get_si()));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) gram_m_[i][j] = to_long(G[i][j] * m_);

        for (std::size_t i = 0; i < n; ++i) {
            IMat m = IMat::identity(n);
            for (std::size_t k = 0; k < n; ++k) m.a[k][i] -= alpha_[i][k];
            refl_.push_back(m);
        }

        build_roots();
        for (std::size_t i = 0; i < n; ++i) rho_[i] = 1;
        // theta: highest short root
        const Root* best = nullptr;
        for (const auto& a : roots_)
            if (a.positive && a.nu == 1 && (!best || a.height() > best->height())) best = &a;
        theta_ = best->omega;
        h_ = 1 + to_long(inner(rho_, theta_));
        for (const auto& a : roots_)
            if (a.nu > 1) has_long_ = true;

        build_weyl();
        build_minuscule();
    }

    void build_roots() {
        const std::size_t n = n_;
        std::vector<Root> all;
        std::set<Weight> seen;
        for (std::size_t i = 0; i < n; ++i) {
            Root r;
            r.omega = alpha_[i];
            r.simple[i] = 1;
            all.push_back(r);
            seen.insert(r.omega);
        }
        for (std::size_t k = 0; k < all.size(); ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                Root r = all[k];
                int c = r.omega[i];
                if (c == 0) continue;
                r.omega = r.omega - c * alpha_[i];
                r.simple[i] -= c;
                if (seen.insert(r.omega).second) all.push_back(r);
            }
        }
        for (auto& r : all) {
            r.positive = true;
            for (std::size_t i = 0; i < n; ++i)
                if (r.simple[i] < 0) r.positive = false;
            // (alpha, alpha) / 2 from the simple-root expansion
            long twice = 0;
            for (std::size_t i = 0; i < n; ++i) twice += static_cast<long>(r.simple[i]) * r.omega[i] * nu_[i];
            r.nu = static_cast<int>(twice / 2);
            for (std::size_t j = 0; j < n; ++j) r.coroot[j] = r.simple[j] * nu_[j] / r.nu;
        }
        std::sort(all.begin(), all.end(), [](const Root& a, const Root& b) {
            if (a.positive != b.positive) return a.positive;
            if (a.height() != b.height()) return std::abs(a.height()) < std::abs(b.height());
            return a.simple < b.simple;
        });
        roots_ = all;
        for (std::size_t k = 0; k < roots_.size(); ++k) root_lookup_[roots_[k].omega] = static_cast<int>(k);
    }

    void build_weyl() {
        const std::size_t n = n_;
        std::set<IMat> seen{IMat::identity(n)};
        weyl_.push_back(IMat::identity(n));
        for (std::size_t k = 0; k < weyl_.size(); ++k)
            for (std::size_t i = 0; i < n; ++i) {
                IMat x = weyl_[k] * refl_[i];
                if (seen.insert(x).second) weyl_.push_back(x);
            }
        for (const auto& w : weyl_)
            for (const auto& v : weyl_)
                if (w * v == IMat::identity(n)) {
                    inverse_[w] = v;
                    break;
                }
        for (const auto& w : weyl_)
            if (w * rho_ == -rho_) w0_ = w;
    }

    void build_minuscule() {
        const std::size_t n = n_;
        for (std::size_t r = 0; r < n; ++r) {
            bool minus = true;
            for (const auto& a : roots_)
                if (a.positive && a.coroot[r] > 1) minus = false;
            if (!minus) continue;
            int label = static_cast<int>(r + 1);
            minuscule_.push_back(label);
            Weight img = -(w0_ * omega(r));
            for (std::size_t k = 0; k < n; ++k)
                if (img == omega(k)) star_[label] = static_cast<int>(k + 1);
            // longest element of the stabilizer of omega_r
            IMat best = IMat::identity(n);
            int best_len = -1;
            for (const auto& w : weyl_) {
                if (!(w * omega(r) == omega(r))) continue;
                int l = finite_length(w);
                if (l > best_len) {
                    best_len = l;
                    best = w;
                }
            }
            u_[label] = w0_ * best;
        }
    }
};

using DatumPtr = std::shared_ptr<const RootDatum>;

inline DatumPtr build_root_datum(const std::string& label) { return RootDatum::get(label); }

}  // namespace dahakit
