#pragma once

// Linear operators on sparse polynomial modules, defined by their values on
// monomials. Monomial images are memoized; the cache is guarded so one
// operator can be evaluated from several workers.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dahakit/parallel.hpp"

namespace dahakit {

template <class P>
class LinOp {
   public:
    using Key = typename P::Key;
    using Scalar = typename P::Scalar;
    using MonoFn = std::function<P(const Key&)>;

    LinOp() : LinOp("0", [](const Key&) { return P(); }, false) {}
    LinOp(std::string tag, MonoFn f, bool cache = true)
        : node_(std::make_shared<Node>(std::move(tag), std::move(f), cache)) {}

    static LinOp identity() {
        return LinOp("1", [](const Key& k) { return P::monomial(k); }, false);
    }
    static LinOp scalar(const Scalar& s, std::string tag = "c") {
        return LinOp(std::move(tag), [s](const Key& k) { return P::monomial(k, s); }, false);
    }
    // left multiplication by a fixed element of the module ring
    static LinOp multiply_by(const P& m, std::string tag) {
        return LinOp(std::move(tag), [m](const Key& k) { return m.shifted(k); }, false);
    }

    const std::string& tag() const { return node_->tag; }

    P image(const Key& k) const {
        if (!node_->cache) return node_->f(k);
        {
            std::lock_guard<std::mutex> lock(node_->mu);
            auto it = node_->memo.find(k);
            if (it != node_->memo.end()) return it->second;
        }
        P v = node_->f(k);
        std::lock_guard<std::mutex> lock(node_->mu);
        node_->memo.emplace(k, v);
        return v;
    }

    P operator()(const P& p) const {
        if (p.size() == 1) {
            const auto& [k, c] = p.terms()[0];
            return c * image(k);
        }
        std::vector<typename P::Term> ts;
        for (const auto& [k, c] : p.terms()) {
            P img = image(k);
            for (const auto& [k2, c2] : img.terms()) ts.push_back({k2, c * c2});
        }
        return P::from_terms(std::move(ts));
    }

    // (a * b)(p) = a(b(p))
    friend LinOp operator*(const LinOp& a, const LinOp& b) {
        return LinOp("(" + a.tag() + " " + b.tag() + ")", [a, b](const Key& k) { return a(b.image(k)); });
    }
    friend LinOp operator+(const LinOp& a, const LinOp& b) {
        return LinOp("(" + a.tag() + " + " + b.tag() + ")",
                     [a, b](const Key& k) { return a.image(k) + b.image(k); }, false);
    }
    friend LinOp operator-(const LinOp& a, const LinOp& b) {
        return LinOp("(" + a.tag() + " - " + b.tag() + ")",
                     [a, b](const Key& k) { return a.image(k) - b.image(k); }, false);
    }
    friend LinOp operator*(const Scalar& s, const LinOp& a) {
        return LinOp("c" + a.tag(), [s, a](const Key& k) { return s * a.image(k); }, false);
    }

    LinOp pow(int k) const {
        LinOp r = identity();
        for (int i = 0; i < k; ++i) r = *this * r;
        return r;
    }

    LinOp retagged(std::string tag) const {
        LinOp r = *this;
        auto self = *this;
        r.node_ = std::make_shared<Node>(std::move(tag), [self](const Key& k) { return self.image(k); }, false);
        return r;
    }

    // first probe monomial on which the operators differ
    std::optional<Key> differs_on(const LinOp& other, const std::vector<Key>& probes) const {
        auto flags = parallel_map<char>(probes.size(), [&](std::size_t i) {
            return static_cast<char>(!(image(probes[i]) == other.image(probes[i])));
        });
        for (std::size_t i = 0; i < probes.size(); ++i)
            if (flags[i]) return probes[i];
        return std::nullopt;
    }

   private:
    struct Node {
        Node(std::string t, MonoFn fn, bool c) : tag(std::move(t)), f(std::move(fn)), cache(c) {}
        std::string tag;
        MonoFn f;
        bool cache;
        std::mutex mu;
        std::map<Key, P> memo;
    };
    std::shared_ptr<Node> node_;
};

}  // namespace dahakit
