#pragma once
#include <utility>

#include "gt/combo.hpp"
#include "gt/graded.hpp"
#include "gt/word.hpp"

namespace gt {

// Truncated exponential expansion: the generator gi goes to e^{x_i} and its
// inverse to e^{-x_i} in the free associative algebra on x1..xp, everything
// cut off above degree trunc.  The expansion is multiplicative modulo the
// cutoff, and on free loop classes it factors through the trace.
//
// Degrees are I-adic: the class of a loop has degree 0 (its expansion starts
// with |1|), so leading-term statements are about augmentation-reduced
// inputs.  phi_reduced subtracts the augmentation automatically; the lowest
// surviving degree of the result is the symbol degree of the input.
struct ExpansionConfig {
    int p = 2;      // puncture count: letters up to x_p
    int trunc = 6;  // truncation degree, at least 1
};

GradedElement phi_path(const GroupWord& w, const ExpansionConfig& cfg);
CyclicGradedElement phi_loop(const LoopCombo& x, const ExpansionConfig& cfg);
// Factorwise expansion of a wedge of loop classes.
GradedWedge phi_wedge(const WedgeElement& x, const ExpansionConfig& cfg);

// phi of x minus (sum of coefficients of x) times the constant class.
CyclicGradedElement phi_reduced(const LoopCombo& x, const ExpansionConfig& cfg);

// Lowest nonzero homogeneous piece, as (degree, piece).  Throws InputError
// when the element is zero within the truncation: a genuine zero and an
// element living entirely above the cutoff are indistinguishable here.
std::pair<int, GradedElement> symbol(const GradedElement& x);
std::pair<int, CyclicGradedElement> symbol(const CyclicGradedElement& x);

// Leading-behaviour comparison of the geometric bracket against the graded
// bracket of the symbols.  With input symbols in degrees r and s the bracket
// drops one filtration step, so the piece to compare sits in degree r+s-1;
// below that degree the image must vanish outright.  When the graded bracket
// of the symbols is itself zero the comparison degenerates to that vanishing
// statement one degree further up.
struct BracketSymbolReport {
    bool conclusive = true;     // false: the truncation cannot see degree r+s-1
    int r = 0, s = 0;           // symbol degrees of the inputs (-1: undetectable)
    int degree_checked = -1;    // r + s - 1, or -1 for trivial input
    CyclicGradedElement lhs;    // that homogeneous piece of phi([a, b])
    CyclicGradedElement rhs;    // graded bracket of the symbols, order (b, a)
    bool low_degree_ok = false; // phi([a, b]) has nothing below degree_checked
    bool equal = false;
    bool passed() const { return conclusive && low_degree_ok && equal; }
};

BracketSymbolReport check_bracket_symbol(const LoopCombo& a, const LoopCombo& b,
                                         const ExpansionConfig& cfg);

// Same comparison for the cobracket: the piece in degree r-1 of the expanded
// geometric cobracket against the graded cobracket of the symbol.
struct CobracketSymbolReport {
    bool conclusive = true;
    int r = 0;
    int degree_checked = -1;
    GradedWedge lhs;
    GradedWedge rhs;
    bool low_degree_ok = false;
    bool equal = false;
    bool passed() const { return conclusive && low_degree_ok && equal; }
};

CobracketSymbolReport check_cobracket_symbol(const LoopCombo& a, const ExpansionConfig& cfg);

// Demonstration helper with no identity attached: the full mismatch
// (phi x phi)(delta a) - gr_delta(phi_reduced(a)).  The leading piece
// vanishes -- that is check_cobracket_symbol -- but the expansion is not
// homomorphic for the cobracket beyond it, and this exposes the difference.
GradedWedge delta_expansion_residual(const LoopCombo& a, const ExpansionConfig& cfg);

}  // namespace gt
