#pragma once

// Exact dense matrices and a sparse row-echelon rank computation.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dahakit/errors.hpp"
#include "dahakit/rational.hpp"

namespace dahakit {

template <class S>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, S(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }
    static Matrix scalar(std::size_t n, const S& s) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    S& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        check_same(x, y);
        Matrix r = x;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += y.a_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        check_same(x, y);
        Matrix r = x;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= y.a_[k];
        return r;
    }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto& v : r.a_) v = -v;
        return r;
    }
    friend Matrix operator*(const S& s, const Matrix& x) {
        Matrix r = x;
        for (auto& v : r.a_) v = s * v;
        return r;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.c_ != y.r_) throw std::invalid_argument("matrix shape mismatch in product");
        Matrix r(x.r_, y.c_);
        for (std::size_t i = 0; i < x.r_; ++i)
            for (std::size_t k = 0; k < x.c_; ++k) {
                const S& v = x(i, k);
                if (is_zero(v)) continue;
                for (std::size_t j = 0; j < y.c_; ++j) {
                    const S& w = y(k, j);
                    if (is_zero(w)) continue;
                    r(i, j) += v * w;
                }
            }
        return r;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        if (x.r_ != y.r_ || x.c_ != y.c_) return false;
        for (std::size_t k = 0; k < x.a_.size(); ++k)
            if (!(x.a_[k] == y.a_[k])) return false;
        return true;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    bool is_zero_matrix() const {
        for (const auto& v : a_)
            if (!is_zero(v)) return false;
        return true;
    }

    Matrix pow(long k) const {
        Matrix r = identity(r_), b = *this;
        if (k < 0) {
            b = b.inverse();
            k = -k;
        }
        while (k > 0) {
            if (k & 1) r = r * b;
            k >>= 1;
            if (k) b = b * b;
        }
        return r;
    }

    // Gauss-Jordan; throws SingularMatrix
    Matrix inverse() const {
        if (r_ != c_) throw std::invalid_argument("inverse of a non-square matrix");
        const std::size_t n = r_;
        Matrix a = *this, inv = identity(n);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = n;
            for (std::size_t r = col; r < n; ++r)
                if (!is_zero(a(r, col))) {
                    piv = r;
                    break;
                }
            if (piv == n) throw SingularMatrix("no pivot in column " + std::to_string(col));
            if (piv != col) {
                a.swap_rows(piv, col);
                inv.swap_rows(piv, col);
            }
            S p = S(1) / a(col, col);
            for (std::size_t j = 0; j < n; ++j) {
                if (!is_zero(a(col, j))) a(col, j) = a(col, j) * p;
                if (!is_zero(inv(col, j))) inv(col, j) = inv(col, j) * p;
            }
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col || is_zero(a(r, col))) continue;
                S f = a(r, col);
                for (std::size_t j = 0; j < n; ++j) {
                    if (!is_zero(a(col, j))) a(r, j) -= f * a(col, j);
                    if (!is_zero(inv(col, j))) inv(r, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    }

    std::string to_string() const {
        using dahakit::to_string;
        std::string s = "[";
        for (std::size_t i = 0; i < r_; ++i) {
            s += i ? "; " : "";
            for (std::size_t j = 0; j < c_; ++j) s += (j ? ", " : "") + to_string((*this)(i, j));
        }
        return s + "]";
    }

   private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<S> a_;

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < c_; ++k) std::swap(a_[i * c_ + k], a_[j * c_ + k]);
    }
    static void check_same(const Matrix& x, const Matrix& y) {
        if (x.r_ != y.r_ || x.c_ != y.c_) throw std::invalid_argument("matrix shape mismatch");
    }
};

// Incremental sparse row echelon form; tracks the rank of the inserted rows.
template <class S>
class SparseEchelon {
   public:
    using Row = std::vector<std::pair<std::size_t, S>>;  // sorted by column, no zeros

    explicit SparseEchelon(std::size_t unknowns) : n_(unknowns) {}

    // returns true when the row increases the rank
    bool insert(Row row) {
        normalize(row);
        while (!row.empty()) {
            auto it = pivots_.find(row.front().first);
            if (it == pivots_.end()) {
                S inv = S(1) / row.front().second;
                for (auto& e : row) e.second = e.second * inv;
                pivots_.emplace(row.front().first, std::move(row));
                return true;
            }
            row = axpy(row, it->second, row.front().second);
        }
        return false;
    }

    std::size_t rank() const { return pivots_.size(); }
    std::size_t nullity() const { return n_ - pivots_.size(); }
    std::size_t unknowns() const { return n_; }

    // basis of the solution space of the inserted homogeneous equations
    std::vector<std::vector<S>> kernel_basis() const {
        // back-substitute to reduced form, free columns give basis vectors
        std::map<std::size_t, Row> red;
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            Row r = it->second;
            bool changed = true;
            while (changed) {
                changed = false;
                for (std::size_t k = 1; k < r.size(); ++k) {
                    auto p = red.find(r[k].first);
                    if (p != red.end()) {
                        r = axpy(r, p->second, r[k].second);
                        changed = true;
                        break;
                    }
                }
            }
            red[it->first] = r;
        }
        std::vector<std::vector<S>> basis;
        for (std::size_t f = 0; f < n_; ++f) {
            if (pivots_.count(f)) continue;
            std::vector<S> v(n_, S(0));
            v[f] = S(1);
            for (const auto& [pc, r] : red)
                for (std::size_t k = 1; k < r.size(); ++k)
                    if (r[k].first == f) v[pc] = -r[k].second;
            basis.push_back(std::move(v));
        }
        return basis;
    }

   private:
    std::size_t n_;
    std::map<std::size_t, Row> pivots_;

    static void normalize(Row& row) {
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        Row out;
        for (auto& e : row) {
            if (!out.empty() && out.back().first == e.first) {
                out.back().second += e.second;
            } else {
                if (!out.empty() && is_zero(out.back().second)) out.pop_back();
                out.push_back(e);
            }
        }
        if (!out.empty() && is_zero(out.back().second)) out.pop_back();
        row = std::move(out);
    }

    // row - f * pivot
    static Row axpy(const Row& row, const Row& pivot, const S& f) {
        Row out;
        out.reserve(row.size() + pivot.size());
        std::size_t i = 0, j = 0;
        while (i < row.size() || j < pivot.size()) {
            if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
                out.push_back(row[i++]);
            } else if (i == row.size() || pivot[j].first < row[i].first) {
                out.push_back({pivot[j].first, -(f * pivot[j].second)});
                ++j;
            } else {
                S v = row[i].second - f * pivot[j].second;
                if (!is_zero(v)) out.push_back({row[i].first, std::move(v)});
                ++i;
                ++j;
            }
        }
        return out;
    }
};

}  // namespace dahakit
