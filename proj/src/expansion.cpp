#include "gt/expansion.hpp"

#include <cstdlib>

#include "gt/errors.hpp"
#include "gt/planar.hpp"

namespace gt {
namespace {

void check_config(const ExpansionConfig& cfg) {
    if (cfg.p < 1) throw InputError("expansion needs at least one puncture");
    if (cfg.trunc < 1) throw InputError("expansion truncation degree must be at least 1");
}

// e^{x_i} (letter +i) or e^{-x_i} (letter -i), cut above cfg.trunc.
GradedElement letter_exponential(Letter l, const ExpansionConfig& cfg) {
    GradedElement out(cfg.trunc);
    GroupWord power;
    Rational coeff(1);
    out.add(power, coeff);
    for (int k = 1; k <= cfg.trunc; ++k) {
        power.letters.push_back(std::abs(l));
        coeff /= l > 0 ? k : -k;
        out.add(power, coeff);
    }
    return out;
}

Rational plain_part(const Coefficient& c) {
    if (c.b1 != 0) throw InputError("expansion input has a b-dependent coefficient");
    return c.b0;
}

// The constant class is central for the bracket and killed by the cobracket,
// so dropping it changes no result; it also keeps the geometric pipeline off
// the degenerate empty representative.
LoopCombo strip_constant(LoopCombo x) {
    x.terms.erase(CyclicClass{});
    return x;
}

}  // namespace

GradedElement phi_path(const GroupWord& w, const ExpansionConfig& cfg) {
    check_config(cfg);
    if (max_index(w) > cfg.p) throw InputError("expansion letter index exceeds puncture count");
    GradedElement out(cfg.trunc);
    out.add(GroupWord{}, 1);
    for (Letter l : w.letters) out = gr_multiply(out, letter_exponential(l, cfg));
    return out;
}

CyclicGradedElement phi_loop(const LoopCombo& x, const ExpansionConfig& cfg) {
    check_config(cfg);
    CyclicGradedElement out(cfg.trunc);
    for (const auto& [cls, c] : x.terms)
        out += gr_trace(phi_path(cls.rep, cfg)).scaled(plain_part(c));
    return out;
}

GradedWedge phi_wedge(const WedgeElement& x, const ExpansionConfig& cfg) {
    check_config(cfg);
    GradedWedge out;
    out.trunc = cfg.trunc;
    for (const auto& [pair, c] : x.terms) {
        Rational base = plain_part(c);
        CyclicGradedElement left = gr_trace(phi_path(pair.first.rep, cfg));
        CyclicGradedElement right = gr_trace(phi_path(pair.second.rep, cfg));
        for (const auto& [m, cm] : left.terms)
            for (const auto& [n, cn] : right.terms) out.add_wedge(m, n, base * cm * cn);
    }
    return out;
}

CyclicGradedElement phi_reduced(const LoopCombo& x, const ExpansionConfig& cfg) {
    check_config(cfg);
    Rational total(0);
    for (const auto& [cls, c] : x.terms) total += plain_part(c);
    CyclicGradedElement out = phi_loop(x, cfg);
    out.add(CyclicClass{}, -total);
    return out;
}

std::pair<int, GradedElement> symbol(const GradedElement& x) {
    int d = x.lowest_degree();
    if (d < 0) throw InputError("symbol undetectable: element is zero within the truncation");
    return {d, x.component(d)};
}

std::pair<int, CyclicGradedElement> symbol(const CyclicGradedElement& x) {
    int d = x.lowest_degree();
    if (d < 0) throw InputError("symbol undetectable: element is zero within the truncation");
    return {d, x.component(d)};
}

BracketSymbolReport check_bracket_symbol(const LoopCombo& a, const LoopCombo& b,
                                         const ExpansionConfig& cfg) {
    check_config(cfg);
    BracketSymbolReport rep;
    LoopCombo as = strip_constant(a);
    LoopCombo bs = strip_constant(b);
    // A pure multiple of the constant class brackets to zero with
    // everything; report that directly instead of hunting for a symbol the
    // input does not have.
    if (as.is_zero() || bs.is_zero()) {
        rep.low_degree_ok = rep.equal = true;
        return rep;
    }
    CyclicGradedElement ra = phi_reduced(a, cfg);
    CyclicGradedElement rb = phi_reduced(b, cfg);
    if (ra.is_zero() || rb.is_zero()) {
        // Symbol invisible within the truncation: nothing can be concluded.
        rep.conclusive = false;
        rep.r = rep.s = -1;
        return rep;
    }
    auto [r, sym_a] = symbol(ra);
    auto [s, sym_b] = symbol(rb);
    rep.r = r;
    rep.s = s;
    rep.degree_checked = r + s - 1;
    if (rep.degree_checked > cfg.trunc) {
        rep.conclusive = false;
        return rep;
    }
    // The graded bracket formula and the geometric bracket inherit opposite
    // overall signs from their sources, so the expansion intertwines the
    // geometric bracket with the graded bracket taken in the opposite order.
    // Both orders agree (at zero) whenever either symbol has degree one,
    // which is why small corpora cannot distinguish them.
    rep.rhs = gr_bracket(sym_b, sym_a);
    CyclicGradedElement image = phi_loop(goldman_bracket_geometric(as, bs, cfg.p), cfg);
    rep.lhs = image.component(rep.degree_checked);
    int low = image.lowest_degree();
    rep.low_degree_ok = low < 0 || low >= rep.degree_checked;
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

CobracketSymbolReport check_cobracket_symbol(const LoopCombo& a, const ExpansionConfig& cfg) {
    check_config(cfg);
    CobracketSymbolReport rep;
    LoopCombo as = strip_constant(a);
    if (as.is_zero()) {
        rep.low_degree_ok = rep.equal = true;
        return rep;
    }
    CyclicGradedElement reduced = phi_reduced(a, cfg);
    if (reduced.is_zero()) {
        rep.conclusive = false;
        rep.r = -1;
        return rep;
    }
    auto [r, sym] = symbol(reduced);
    rep.r = r;
    rep.degree_checked = r - 1;
    rep.rhs = gr_delta(sym);
    GradedWedge image = phi_wedge(delta_geometric(as, cfg.p), cfg);
    rep.lhs = image.component(rep.degree_checked);
    rep.low_degree_ok = true;
    for (int d = 0; d < rep.degree_checked; ++d)
        if (!image.component(d).is_zero()) {
            rep.low_degree_ok = false;
            break;
        }
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

GradedWedge delta_expansion_residual(const LoopCombo& a, const ExpansionConfig& cfg) {
    check_config(cfg);
    GradedWedge image = phi_wedge(delta_geometric(strip_constant(a), cfg.p), cfg);
    image -= gr_delta(phi_reduced(a, cfg));
    return image;
}

}  // namespace gt
