#pragma once
#include <map>
#include <string>
#include <utility>

#include "gt/rational.hpp"
#include "gt/word.hpp"

namespace gt {

// Scalar b0 + b1*b in Q[b]/(b^2).  b is the skein parameter; planar results
// always live in the b1 == 0 part.
struct Coefficient {
    Rational b0, b1;

    Coefficient() = default;
    Coefficient(Rational v) : b0(std::move(v)) {}  // NOLINT: implicit by design
    Coefficient(Rational v0, Rational v1) : b0(std::move(v0)), b1(std::move(v1)) {}
    static Coefficient one() { return Coefficient(Rational(1)); }

    bool is_zero() const { return b0 == 0 && b1 == 0; }
    bool operator==(const Coefficient&) const = default;

    Coefficient& operator+=(const Coefficient& o) {
        b0 += o.b0;
        b1 += o.b1;
        return *this;
    }
    Coefficient& operator-=(const Coefficient& o) {
        b0 -= o.b0;
        b1 -= o.b1;
        return *this;
    }
    friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
    friend Coefficient operator-(const Coefficient& a) { return {-a.b0, -a.b1}; }
    friend Coefficient operator*(const Coefficient& a, const Coefficient& b) {
        return {a.b0 * b.b0, a.b0 * b.b1 + a.b1 * b.b0};  // b^2 = 0
    }
    // Multiplication by b: shifts b0 up, drops b1.
    Coefficient times_b() const { return {Rational(0), b0}; }
};

std::string format_coefficient(const Coefficient& c);

// Linear combination over sorted keys; zero coefficients are pruned so that
// equality of maps is equality of elements.
template <class Key>
struct Combo {
    std::map<Key, Coefficient> terms;

    void add(const Key& k, const Coefficient& c) {
        if (c.is_zero()) return;
        auto it = terms.find(k);
        if (it == terms.end()) {
            terms.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    Combo& operator+=(const Combo& o) {
        for (const auto& [k, c] : o.terms) add(k, c);
        return *this;
    }
    Combo& operator-=(const Combo& o) {
        for (const auto& [k, c] : o.terms) add(k, -c);
        return *this;
    }
    friend Combo operator+(Combo a, const Combo& b) { return a += b; }
    friend Combo operator-(Combo a, const Combo& b) { return a -= b; }
    Combo scaled(const Coefficient& s) const {
        Combo r;
        for (const auto& [k, c] : terms) r.add(k, c * s);
        return r;
    }
    bool is_zero() const { return terms.empty(); }
    bool operator==(const Combo&) const = default;
};

using PathCombo = Combo<GroupWord>;
using LoopCombo = Combo<CyclicClass>;
// Loop-tensor-path: the shape of the self-intersection map before closing.
using TensorElement = Combo<std::pair<CyclicClass, GroupWord>>;
// Exterior square of loop space: keys are strictly ordered pairs, and a key
// (a, b) stands for a (x) b - b (x) a.
using WedgeElement = Combo<std::pair<CyclicClass, CyclicClass>>;

inline LoopCombo loop_combo(const CyclicClass& c) {
    LoopCombo r;
    r.add(c, Coefficient::one());
    return r;
}
inline PathCombo path_combo(const GroupWord& w) {
    PathCombo r;
    r.add(w, Coefficient::one());
    return r;
}

// Conjugacy-class projection ("trace"): kills the difference uv - vu.
LoopCombo trace_to_loops(const PathCombo& x);

// Accumulate c * (a /\ b): drops a == b, swaps-and-negates when b < a.
void wedge_normalize(WedgeElement& out, const CyclicClass& a, const CyclicClass& b,
                     const Coefficient& c);

// Alt((1 (x) trace) t): each (loop, path) term becomes loop /\ |path|.
WedgeElement alt_close(const TensorElement& t);

std::string format_path_combo(const PathCombo& x);
std::string format_loop_combo(const LoopCombo& x);
std::string format_tensor(const TensorElement& x);
std::string format_wedge(const WedgeElement& x);

}  // namespace gt
