#pragma once
#include <array>
#include <map>
#include <string>
#include <utility>

#include "gt/rational.hpp"
#include "gt/word.hpp"

namespace gt {

// Associated-graded model: monomial words in letters x1..xp (no inverses),
// graded by length, truncated above degree `trunc`.  Monomials reuse
// GroupWord/CyclicClass with all letters positive; cyclic_canonical on such
// words is a pure minimal rotation.

struct GradedElement {
    int trunc = 8;
    std::map<GroupWord, Rational> terms;

    GradedElement() = default;
    explicit GradedElement(int n) : trunc(n) {}

    void add(const GroupWord& w, const Rational& c);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const GradedElement& o) const { return terms == o.terms; }
    GradedElement& operator+=(const GradedElement& o);
    GradedElement& operator-=(const GradedElement& o);
    friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
    friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
    GradedElement scaled(const Rational& s) const;
    // Homogeneous component of the given length.
    GradedElement component(int degree) const;
    // Smallest length with a nonzero coefficient, or -1 when zero.
    int lowest_degree() const;
};

struct CyclicGradedElement {
    int trunc = 8;
    std::map<CyclicClass, Rational> terms;

    CyclicGradedElement() = default;
    explicit CyclicGradedElement(int n) : trunc(n) {}

    void add(const CyclicClass& w, const Rational& c);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const CyclicGradedElement& o) const { return terms == o.terms; }
    CyclicGradedElement& operator+=(const CyclicGradedElement& o);
    CyclicGradedElement& operator-=(const CyclicGradedElement& o);
    friend CyclicGradedElement operator+(CyclicGradedElement a, const CyclicGradedElement& b) {
        return a += b;
    }
    friend CyclicGradedElement operator-(CyclicGradedElement a, const CyclicGradedElement& b) {
        return a -= b;
    }
    CyclicGradedElement scaled(const Rational& s) const;
    CyclicGradedElement component(int degree) const;
    int lowest_degree() const;
};

struct GradedTensor {
    int trunc = 8;
    std::map<std::pair<CyclicClass, GroupWord>, Rational> terms;
    void add(const std::pair<CyclicClass, GroupWord>& k, const Rational& c);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const GradedTensor& o) const { return terms == o.terms; }
};

struct GradedWedge {
    int trunc = 8;
    std::map<std::pair<CyclicClass, CyclicClass>, Rational> terms;
    // c * (a /\ b), normalized: a == b dropped, unordered pairs flipped with sign.
    void add_wedge(const CyclicClass& a, const CyclicClass& b, const Rational& c);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const GradedWedge& o) const { return terms == o.terms; }
    GradedWedge& operator+=(const GradedWedge& o);
    GradedWedge& operator-=(const GradedWedge& o);
    friend GradedWedge operator+(GradedWedge a, const GradedWedge& b) { return a += b; }
    friend GradedWedge operator-(GradedWedge a, const GradedWedge& b) { return a -= b; }
    GradedWedge component(int degree) const;  // total length of the pair
};

void require_same_trunc(int a, int b);

// Word-level formulas, applied to one chosen rotation / one linear word.
// The public operations below canonicalize first; tests use these raw
// variants to confirm the results do not depend on the chosen rotation.
CyclicGradedElement gr_bracket_words(const GroupWord& z, const GroupWord& w, int trunc);
GradedTensor gr_mu_word(const GroupWord& w, int trunc);
GradedWedge gr_delta_word(const GroupWord& w, int trunc);

CyclicGradedElement gr_bracket(const CyclicGradedElement& z, const CyclicGradedElement& w);
GradedTensor gr_mu(const GradedElement& x);
GradedWedge gr_delta(const CyclicGradedElement& x);
CyclicGradedElement gr_trace(const GradedElement& x);

// wedge-normalized Alt of (id (x) trace) applied to a tensor.
GradedWedge alt_close_graded(const GradedTensor& t);

// Truncated product of the underlying tensor algebra (concatenation).
GradedElement gr_multiply(const GradedElement& a, const GradedElement& b);

// Residuals of the Lie-bialgebra axioms; all must vanish.
CyclicGradedElement jacobi_residual(const CyclicGradedElement& a, const CyclicGradedElement& b,
                                    const CyclicGradedElement& c);
// (delta (x) id) delta summed over cyclic rotations of the three slots.
std::map<std::array<CyclicClass, 3>, Rational> cojacobi_residual(const CyclicGradedElement& a);
// delta[x,y] - x.delta(y) + y.delta(x), the factorwise adjoint action.
GradedWedge cocycle_residual(const CyclicGradedElement& x, const CyclicGradedElement& y);

std::string format_graded(const GradedElement& x);
std::string format_cyclic_graded(const CyclicGradedElement& x);
std::string format_graded_tensor(const GradedTensor& x);
std::string format_graded_wedge(const GradedWedge& x);

}  // namespace gt
