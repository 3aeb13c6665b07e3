#include "gt/combo.hpp"

namespace gt {

std::string format_coefficient(const Coefficient& c) {
    if (c.b1 == 0) return format_rational(c.b0);
    std::string s = "(" + format_rational(c.b0);
    if (c.b1 > 0)
        s += " + " + format_rational(c.b1) + " b)";
    else
        s += " - " + format_rational(-c.b1) + " b)";
    return s;
}

LoopCombo trace_to_loops(const PathCombo& x) {
    LoopCombo r;
    for (const auto& [w, c] : x.terms) r.add(cyclic_canonical(w), c);
    return r;
}

void wedge_normalize(WedgeElement& out, const CyclicClass& a, const CyclicClass& b,
                     const Coefficient& c) {
    auto cmp = a <=> b;
    if (cmp == 0) return;
    if (cmp < 0)
        out.add({a, b}, c);
    else
        out.add({b, a}, -c);
}

WedgeElement alt_close(const TensorElement& t) {
    WedgeElement r;
    for (const auto& [key, c] : t.terms)
        wedge_normalize(r, key.first, cyclic_canonical(key.second), c);
    return r;
}

namespace {

template <class Terms, class KeyFormat>
std::string format_terms(const Terms& terms, KeyFormat&& key_format) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [key, coeff] : terms) {
        bool negate = coeff.b1 == 0 && coeff.b0 < 0;
        Coefficient shown = negate ? -coeff : coeff;
        if (out.empty()) {
            if (negate) out += "-";
        } else {
            out += negate ? " - " : " + ";
        }
        if (!(shown.b1 == 0 && shown.b0 == 1)) out += format_coefficient(shown) + " ";
        out += key_format(key);
    }
    return out;
}

}  // namespace

std::string format_path_combo(const PathCombo& x) {
    return format_terms(x.terms, [](const GroupWord& w) { return format_group_word(w); });
}

std::string format_loop_combo(const LoopCombo& x) {
    return format_terms(x.terms, [](const CyclicClass& c) { return format_cyclic(c); });
}

std::string format_tensor(const TensorElement& x) {
    return format_terms(x.terms, [](const std::pair<CyclicClass, GroupWord>& k) {
        return format_cyclic(k.first) + " (x) " + format_group_word(k.second);
    });
}

std::string format_wedge(const WedgeElement& x) {
    return format_terms(x.terms, [](const std::pair<CyclicClass, CyclicClass>& k) {
        return format_cyclic(k.first) + " /\\ " + format_cyclic(k.second);
    });
}

}  // namespace gt
