#include "gt/graded.hpp"

#include "gt/errors.hpp"

namespace gt {

namespace {

void check_positive(const GroupWord& w) {
    for (Letter l : w.letters)
        if (l <= 0) throw InputError("graded words use positive letters only");
}

std::vector<Letter> concat(std::initializer_list<std::pair<const std::vector<Letter>*,
                                                           std::pair<std::size_t, std::size_t>>>
                               pieces) {
    std::vector<Letter> out;
    for (const auto& [src, range] : pieces)
        out.insert(out.end(), src->begin() + range.first, src->begin() + range.second);
    return out;
}

template <class Terms, class KeyFormat>
std::string format_rat_terms(const Terms& terms, KeyFormat&& key_format) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [key, coeff] : terms) {
        bool negate = coeff < 0;
        Rational shown = negate ? Rational(-coeff) : coeff;
        if (out.empty()) {
            if (negate) out += "-";
        } else {
            out += negate ? " - " : " + ";
        }
        if (shown != 1) out += format_rational(shown) + " ";
        out += key_format(key);
    }
    return out;
}

std::string fmt_mon(const GroupWord& w) { return format_letters(w.letters, 'x'); }
std::string fmt_cyc_mon(const CyclicClass& c) {
    return "|" + format_letters(c.rep.letters, 'x') + "|";
}

}  // namespace

void require_same_trunc(int a, int b) {
    if (a != b) throw InputError("mixed truncation degrees");
}

void GradedElement::add(const GroupWord& w, const Rational& c) {
    if (c == 0 || static_cast<int>(w.size()) > trunc) return;
    check_positive(w);
    auto it = terms.find(w);
    if (it == terms.end())
        terms.emplace(w, c);
    else if ((it->second += c) == 0)
        terms.erase(it);
}

GradedElement& GradedElement::operator+=(const GradedElement& o) {
    require_same_trunc(trunc, o.trunc);
    for (const auto& [k, c] : o.terms) add(k, c);
    return *this;
}
GradedElement& GradedElement::operator-=(const GradedElement& o) {
    require_same_trunc(trunc, o.trunc);
    for (const auto& [k, c] : o.terms) add(k, -c);
    return *this;
}
GradedElement GradedElement::scaled(const Rational& s) const {
    GradedElement r(trunc);
    if (s != 0)
        for (const auto& [k, c] : terms) r.terms.emplace(k, c * s);
    return r;
}
GradedElement GradedElement::component(int degree) const {
    GradedElement r(trunc);
    for (const auto& [k, c] : terms)
        if (static_cast<int>(k.size()) == degree) r.terms.emplace(k, c);
    return r;
}
int GradedElement::lowest_degree() const {
    int best = -1;
    for (const auto& [k, c] : terms) {
        (void)c;
        int d = static_cast<int>(k.size());
        if (best < 0 || d < best) best = d;
    }
    return best;
}

void CyclicGradedElement::add(const CyclicClass& w, const Rational& c) {
    if (c == 0 || static_cast<int>(w.size()) > trunc) return;
    check_positive(w.rep);
    auto it = terms.find(w);
    if (it == terms.end())
        terms.emplace(w, c);
    else if ((it->second += c) == 0)
        terms.erase(it);
}

CyclicGradedElement& CyclicGradedElement::operator+=(const CyclicGradedElement& o) {
    require_same_trunc(trunc, o.trunc);
    for (const auto& [k, c] : o.terms) add(k, c);
    return *this;
}
CyclicGradedElement& CyclicGradedElement::operator-=(const CyclicGradedElement& o) {
    require_same_trunc(trunc, o.trunc);
    for (const auto& [k, c] : o.terms) add(k, -c);
    return *this;
}
CyclicGradedElement CyclicGradedElement::scaled(const Rational& s) const {
    CyclicGradedElement r(trunc);
    if (s != 0)
        for (const auto& [k, c] : terms) r.terms.emplace(k, c * s);
    return r;
}
CyclicGradedElement CyclicGradedElement::component(int degree) const {
    CyclicGradedElement r(trunc);
    for (const auto& [k, c] : terms)
        if (static_cast<int>(k.size()) == degree) r.terms.emplace(k, c);
    return r;
}
int CyclicGradedElement::lowest_degree() const {
    int best = -1;
    for (const auto& [k, c] : terms) {
        (void)c;
        int d = static_cast<int>(k.size());
        if (best < 0 || d < best) best = d;
    }
    return best;
}

void GradedTensor::add(const std::pair<CyclicClass, GroupWord>& k, const Rational& c) {
    if (c == 0) return;
    if (static_cast<int>(k.first.size() + k.second.size()) > trunc) return;
    auto it = terms.find(k);
    if (it == terms.end())
        terms.emplace(k, c);
    else if ((it->second += c) == 0)
        terms.erase(it);
}

void GradedWedge::add_wedge(const CyclicClass& a, const CyclicClass& b, const Rational& c) {
    if (c == 0) return;
    if (static_cast<int>(a.size() + b.size()) > trunc) return;
    auto cmp = a <=> b;
    if (cmp == 0) return;
    auto key = cmp < 0 ? std::pair{a, b} : std::pair{b, a};
    Rational v = cmp < 0 ? c : -c;
    auto it = terms.find(key);
    if (it == terms.end())
        terms.emplace(key, v);
    else if ((it->second += v) == 0)
        terms.erase(it);
}
GradedWedge& GradedWedge::operator+=(const GradedWedge& o) {
    require_same_trunc(trunc, o.trunc);
    for (const auto& [k, c] : o.terms) add_wedge(k.first, k.second, c);
    return *this;
}
GradedWedge& GradedWedge::operator-=(const GradedWedge& o) {
    require_same_trunc(trunc, o.trunc);
    for (const auto& [k, c] : o.terms) add_wedge(k.first, k.second, -c);
    return *this;
}
GradedWedge GradedWedge::component(int degree) const {
    GradedWedge r;
    r.trunc = trunc;
    for (const auto& [k, c] : terms)
        if (static_cast<int>(k.first.size() + k.second.size()) == degree) r.terms.emplace(k, c);
    return r;
}

CyclicGradedElement gr_bracket_words(const GroupWord& z, const GroupWord& w, int trunc) {
    CyclicGradedElement out(trunc);
    const auto& zv = z.letters;
    const auto& wv = w.letters;
    const std::size_t l = zv.size(), m = wv.size();
    for (std::size_t j = 0; j < l; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
            if (zv[j] != wv[k]) continue;
            // Glue the z-loop into w at the matched letter, either just after
            // (first term) or just before it (second term).
            auto word1 = concat({{&wv, {0, k}}, {&zv, {j + 1, l}}, {&zv, {0, j + 1}}, {&wv, {k + 1, m}}});
            auto word2 = concat({{&wv, {0, k}}, {&zv, {j, l}}, {&zv, {0, j}}, {&wv, {k + 1, m}}});
            out.add(cyclic_canonical(GroupWord{std::move(word1)}), 1);
            out.add(cyclic_canonical(GroupWord{std::move(word2)}), -1);
        }
    }
    return out;
}

GradedTensor gr_mu_word(const GroupWord& w, int trunc) {
    GradedTensor out;
    out.trunc = trunc;
    const auto& v = w.letters;
    const std::size_t m = v.size();
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = j + 1; k < m; ++k) {
            if (v[j] != v[k]) continue;
            auto loop1 = concat({{&v, {j, k}}});
            auto rest1 = concat({{&v, {0, j}}, {&v, {k + 1, m}}});
            auto loop2 = concat({{&v, {j + 1, k}}});
            auto rest2 = concat({{&v, {0, j + 1}}, {&v, {k + 1, m}}});
            out.add({cyclic_canonical(GroupWord{std::move(loop1)}), GroupWord{std::move(rest1)}}, 1);
            out.add({cyclic_canonical(GroupWord{std::move(loop2)}), GroupWord{std::move(rest2)}}, -1);
        }
    }
    return out;
}

GradedWedge gr_delta_word(const GroupWord& w, int trunc) {
    GradedWedge out;
    out.trunc = trunc;
    const auto& v = w.letters;
    const std::size_t m = v.size();
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = j + 1; k < m; ++k) {
            if (v[j] != v[k]) continue;
            auto a1 = concat({{&v, {j, k}}});
            auto b1 = concat({{&v, {k + 1, m}}, {&v, {0, j}}});
            auto a2 = concat({{&v, {k, m}}, {&v, {0, j}}});
            auto b2 = concat({{&v, {j + 1, k}}});
            out.add_wedge(cyclic_canonical(GroupWord{std::move(a1)}),
                          cyclic_canonical(GroupWord{std::move(b1)}), 1);
            out.add_wedge(cyclic_canonical(GroupWord{std::move(a2)}),
                          cyclic_canonical(GroupWord{std::move(b2)}), 1);
        }
    }
    return out;
}

CyclicGradedElement gr_bracket(const CyclicGradedElement& z, const CyclicGradedElement& w) {
    require_same_trunc(z.trunc, w.trunc);
    CyclicGradedElement out(z.trunc);
    for (const auto& [zk, zc] : z.terms)
        for (const auto& [wk, wc] : w.terms) {
            auto part = gr_bracket_words(zk.rep, wk.rep, z.trunc);
            for (const auto& [k, c] : part.terms) out.add(k, c * zc * wc);
        }
    return out;
}

GradedTensor gr_mu(const GradedElement& x) {
    GradedTensor out;
    out.trunc = x.trunc;
    for (const auto& [w, c] : x.terms) {
        auto part = gr_mu_word(w, x.trunc);
        for (const auto& [k, v] : part.terms) out.add(k, v * c);
    }
    return out;
}

GradedWedge gr_delta(const CyclicGradedElement& x) {
    GradedWedge out;
    out.trunc = x.trunc;
    for (const auto& [w, c] : x.terms) {
        auto part = gr_delta_word(w.rep, x.trunc);
        for (const auto& [k, v] : part.terms) out.add_wedge(k.first, k.second, v * c);
    }
    return out;
}

CyclicGradedElement gr_trace(const GradedElement& x) {
    CyclicGradedElement out(x.trunc);
    for (const auto& [w, c] : x.terms) out.add(cyclic_canonical(w), c);
    return out;
}

GradedWedge alt_close_graded(const GradedTensor& t) {
    GradedWedge out;
    out.trunc = t.trunc;
    for (const auto& [k, c] : t.terms) out.add_wedge(k.first, cyclic_canonical(k.second), c);
    return out;
}

GradedElement gr_multiply(const GradedElement& a, const GradedElement& b) {
    require_same_trunc(a.trunc, b.trunc);
    GradedElement out(a.trunc);
    for (const auto& [ak, ac] : a.terms)
        for (const auto& [bk, bc] : b.terms) {
            if (static_cast<int>(ak.size() + bk.size()) > a.trunc) continue;
            GroupWord w = ak;
            w.letters.insert(w.letters.end(), bk.letters.begin(), bk.letters.end());
            out.add(w, ac * bc);
        }
    return out;
}

CyclicGradedElement jacobi_residual(const CyclicGradedElement& a, const CyclicGradedElement& b,
                                    const CyclicGradedElement& c) {
    auto r = gr_bracket(a, gr_bracket(b, c));
    r += gr_bracket(b, gr_bracket(c, a));
    r += gr_bracket(c, gr_bracket(a, b));
    return r;
}

namespace {

using Triple = std::array<CyclicClass, 3>;

void add_triple(std::map<Triple, Rational>& m, const Triple& t, const Rational& c) {
    if (c == 0) return;
    auto it = m.find(t);
    if (it == m.end())
        m.emplace(t, c);
    else if ((it->second += c) == 0)
        m.erase(it);
}

// Expand a wedge into its two tensor terms and feed them to `emit`.
template <class Emit>
void expand_wedge(const GradedWedge& w, Emit&& emit) {
    for (const auto& [k, c] : w.terms) {
        emit(k.first, k.second, c);
        emit(k.second, k.first, -c);
    }
}

}  // namespace

std::map<Triple, Rational> cojacobi_residual(const CyclicGradedElement& a) {
    std::map<Triple, Rational> tensor3;
    expand_wedge(gr_delta(a), [&](const CyclicClass& u, const CyclicClass& v, const Rational& c) {
        CyclicGradedElement head(a.trunc);
        head.add(u, 1);
        expand_wedge(gr_delta(head),
                     [&](const CyclicClass& s, const CyclicClass& t, const Rational& d) {
                         add_triple(tensor3, {s, t, v}, c * d);
                     });
    });
    std::map<Triple, Rational> out;
    for (const auto& [t, c] : tensor3) {
        add_triple(out, t, c);
        add_triple(out, {t[1], t[2], t[0]}, c);
        add_triple(out, {t[2], t[0], t[1]}, c);
    }
    return out;
}

GradedWedge cocycle_residual(const CyclicGradedElement& x, const CyclicGradedElement& y) {
    GradedWedge r = gr_delta(gr_bracket(x, y));
    // Subtract z.(u /\ v) = [z,u] /\ v + u /\ [z,v].  Acting on the first
    // slot of the alternating expansion (u,v,c), (v,u,-c) yields both terms
    // exactly once.
    auto act = [&](const CyclicGradedElement& z, const GradedWedge& w, const Rational& sign) {
        expand_wedge(w, [&](const CyclicClass& u, const CyclicClass& v, const Rational& c) {
            CyclicGradedElement uu(z.trunc);
            uu.add(u, 1);
            auto zu = gr_bracket(z, uu);
            for (const auto& [k, d] : zu.terms) r.add_wedge(k, v, -sign * c * d);
        });
    };
    // Residual of delta[x,y] = x.delta(y) - y.delta(x).
    act(x, gr_delta(y), 1);
    act(y, gr_delta(x), -1);
    return r;
}

std::string format_graded(const GradedElement& x) { return format_rat_terms(x.terms, fmt_mon); }
std::string format_cyclic_graded(const CyclicGradedElement& x) {
    return format_rat_terms(x.terms, fmt_cyc_mon);
}
std::string format_graded_tensor(const GradedTensor& x) {
    return format_rat_terms(x.terms, [](const std::pair<CyclicClass, GroupWord>& k) {
        return fmt_cyc_mon(k.first) + " (x) " + fmt_mon(k.second);
    });
}
std::string format_graded_wedge(const GradedWedge& x) {
    return format_rat_terms(x.terms, [](const std::pair<CyclicClass, CyclicClass>& k) {
        return fmt_cyc_mon(k.first) + " /\\ " + fmt_cyc_mon(k.second);
    });
}

}  // namespace gt
