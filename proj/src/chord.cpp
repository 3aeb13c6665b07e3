#include "gt/chord.hpp"

#include <algorithm>
#include <limits>

#include "gt/errors.hpp"

namespace gt {

namespace {

// Wide enough for any word these operations produce; the graded containers
// drop terms above their truncation degree, which is never wanted here.
constexpr int kNoTruncation = std::numeric_limits<int>::max() / 2;

void check_monomial(const GroupWord& w, const char* what) {
    for (Letter l : w.letters)
        if (l <= 0) throw InputError(std::string(what) + " must use positive letters");
}

GroupWord concat(const GroupWord& a, const GroupWord& b) {
    GroupWord out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

// One chord endpoint as it appears along a component.
struct Entry {
    std::size_t chord = 0;
    int end = 0;  // 0 = first site, 1 = second site
};

const ChordSite& site_of(const ChordDiagram& d, const Entry& e) {
    const auto& [a, b] = d.chords[e.chord];
    return e.end == 0 ? a : b;
}

const ChordSite& partner_of(const ChordDiagram& d, const Entry& e) {
    const auto& [a, b] = d.chords[e.chord];
    return e.end == 0 ? b : a;
}

// Per-component endpoint sequences, ordered by position.  validate_diagram
// guarantees the positions of each component are exactly 0..n-1.
std::vector<std::vector<Entry>> component_entries(const ChordDiagram& d) {
    std::vector<std::vector<Entry>> lists(d.components());
    for (std::size_t k = 0; k < d.chords.size(); ++k) {
        lists[d.chords[k].first.component].push_back({k, 0});
        lists[d.chords[k].second.component].push_back({k, 1});
    }
    for (auto& list : lists)
        std::sort(list.begin(), list.end(), [&](const Entry& x, const Entry& y) {
            return site_of(d, x).position < site_of(d, y).position;
        });
    return lists;
}

// Pole letter read at an endpoint whose partner sits on a pole.
Letter pole_letter(const ChordDiagram& d, const Entry& e) {
    const ChordSite& far = partner_of(d, e);
    if (!d.is_pole(far.component))
        throw ConsistencyError("readout reached a strand-strand chord");
    return d.pole_index(far.component);
}

GroupWord read_word(const ChordDiagram& d, const std::vector<Entry>& list) {
    GroupWord w;
    for (const Entry& e : list) w.letters.push_back(pole_letter(d, e));
    return w;
}

ChordWord read_out(const ChordDiagram& d, const std::vector<std::vector<Entry>>& circles,
                   const std::vector<std::vector<Entry>>& bottoms, int a_power) {
    ChordWord out;
    out.a_power = a_power;
    for (const auto& list : circles) out.circles.push_back(cyclic_canonical(read_word(d, list)));
    std::sort(out.circles.begin(), out.circles.end());
    for (const auto& list : bottoms) out.bottoms.push_back(read_word(d, list));
    return out;
}

std::vector<Entry> slice(const std::vector<Entry>& v, std::size_t from, std::size_t to) {
    return {v.begin() + static_cast<std::ptrdiff_t>(from),
            v.begin() + static_cast<std::ptrdiff_t>(to)};
}

// Cyclic tail-then-head of a circle list, skipping the entry at `cut`.
std::vector<Entry> rotate_after(const std::vector<Entry>& v, std::size_t cut) {
    std::vector<Entry> out;
    out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(cut) + 1, v.end());
    out.insert(out.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(cut));
    return out;
}

void append(std::vector<Entry>& v, const std::vector<Entry>& w) {
    v.insert(v.end(), w.begin(), w.end());
}

// Replaces the strand-strand chord at `self` by its oriented smoothing: the
// strands are cut at the two endpoints and rejoined the other way, so a
// self-chord splits its component and a chord between two components fuses
// them.  Returns the readout of what remains, which must be pole chords.
ChordWord smooth_and_read(const ChordDiagram& d, std::size_t self, int a_power) {
    auto lists = component_entries(d);
    std::vector<std::vector<Entry>> circles, bottoms;
    const std::size_t nc = static_cast<std::size_t>(d.circles);
    const std::size_t nb = static_cast<std::size_t>(d.bottoms);

    const ChordSite& sp = d.chords[self].first;
    const ChordSite& sq = d.chords[self].second;
    auto locate = [&](const ChordSite& s) {
        const auto& list = lists[s.component];
        for (std::size_t i = 0; i < list.size(); ++i)
            if (site_of(d, list[i]).position == s.position && lists[s.component][i].chord == self)
                return i;
        throw ConsistencyError("smoothed chord endpoint not found on its component");
    };
    std::size_t ip = locate(sp), iq = locate(sq);

    // Untouched strand components come over as they are.
    for (std::size_t id = 0; id < nc + nb; ++id) {
        if (id == sp.component || id == sq.component) continue;
        (id < nc ? circles : bottoms).push_back(lists[id]);
    }

    if (sp.component == sq.component) {
        const auto& list = lists[sp.component];
        auto [i, j] = std::minmax(ip, iq);
        std::vector<Entry> mid = slice(list, i + 1, j);
        std::vector<Entry> rest = slice(list, j + 1, list.size());
        append(rest, slice(list, 0, i));
        if (d.is_circle(sp.component)) {
            circles.push_back(std::move(mid));
            circles.push_back(std::move(rest));
        } else {
            // On an interval the outer part stays open, the middle closes up.
            std::vector<Entry> outer = slice(list, 0, i);
            append(outer, slice(list, j + 1, list.size()));
            circles.push_back(std::move(mid));
            bottoms.push_back(std::move(outer));
        }
    } else if (d.is_circle(sp.component) && d.is_circle(sq.component)) {
        std::vector<Entry> fused = rotate_after(lists[sp.component], ip);
        append(fused, rotate_after(lists[sq.component], iq));
        circles.push_back(std::move(fused));
    } else if (d.is_bottom(sp.component) && d.is_bottom(sq.component)) {
        const auto& bp = lists[sp.component];
        const auto& bq = lists[sq.component];
        std::vector<Entry> first = slice(bp, 0, ip);
        append(first, slice(bq, iq + 1, bq.size()));
        std::vector<Entry> second = slice(bq, 0, iq);
        append(second, slice(bp, ip + 1, bp.size()));
        // Keep the interval that starts like the lower-id one first.
        if (sp.component < sq.component) {
            bottoms.push_back(std::move(first));
            bottoms.push_back(std::move(second));
        } else {
            bottoms.push_back(std::move(second));
            bottoms.push_back(std::move(first));
        }
    } else {
        // Interval-circle: the circle opens up and is spliced in place.
        const bool p_on_bottom = d.is_bottom(sp.component);
        const auto& bottom = lists[p_on_bottom ? sp.component : sq.component];
        const auto& circle = lists[p_on_bottom ? sq.component : sp.component];
        std::size_t ib = p_on_bottom ? ip : iq;
        std::size_t ic = p_on_bottom ? iq : ip;
        std::vector<Entry> spliced = slice(bottom, 0, ib);
        append(spliced, rotate_after(circle, ic));
        append(spliced, slice(bottom, ib + 1, bottom.size()));
        bottoms.push_back(std::move(spliced));
    }
    return read_out(d, circles, bottoms, a_power);
}

// Rebuilds a diagram from explicit per-component entry sequences.
ChordDiagram from_entries(const ChordDiagram& base,
                          const std::vector<std::vector<Entry>>& lists) {
    ChordDiagram out = base;
    for (std::size_t id = 0; id < lists.size(); ++id)
        for (std::size_t pos = 0; pos < lists[id].size(); ++pos) {
            const Entry& e = lists[id][pos];
            ChordSite& s =
                e.end == 0 ? out.chords[e.chord].first : out.chords[e.chord].second;
            s.component = id;
            s.position = pos;
        }
    return out;
}

std::string format_rational_terms(const std::map<ChordWord, Rational>& terms) {
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
        out += format_chord_word(key);
    }
    return out;
}

}  // namespace

int ChordDiagram::strand_strand_chords() const {
    int n = 0;
    for (const auto& [a, b] : chords)
        if (!is_pole(a.component) && !is_pole(b.component)) ++n;
    return n;
}

void validate_diagram(const ChordDiagram& d) {
    if (d.circles < 0 || d.bottoms < 0 || d.poles < 0)
        throw InputError("negative skeleton component count");
    if (d.a_power < 0) throw InputError("negative power of a");
    std::vector<std::vector<std::size_t>> positions(d.components());
    for (const auto& [a, b] : d.chords) {
        for (const ChordSite& s : {a, b}) {
            if (s.component >= d.components())
                throw InputError("chord endpoint on a component that does not exist");
            positions[s.component].push_back(s.position);
        }
        if (d.is_pole(a.component) && d.is_pole(b.component))
            throw InputError("chord joins two poles");
    }
    for (auto& pos : positions) {
        std::sort(pos.begin(), pos.end());
        for (std::size_t i = 0; i < pos.size(); ++i)
            if (pos[i] != i)
                throw InputError("component positions must be exactly 0..n-1");
    }
}

void ChordCombo::add(const ChordWord& w, const Rational& c) {
    if (c == 0) return;
    auto it = terms.find(w);
    if (it == terms.end())
        terms.emplace(w, c);
    else if ((it->second += c) == 0)
        terms.erase(it);
}

ChordCombo& ChordCombo::operator+=(const ChordCombo& o) {
    for (const auto& [k, c] : o.terms) add(k, c);
    return *this;
}

ChordCombo& ChordCombo::operator-=(const ChordCombo& o) {
    for (const auto& [k, c] : o.terms) add(k, -c);
    return *this;
}

ChordCombo ChordCombo::scaled(const Rational& s) const {
    ChordCombo out;
    for (const auto& [k, c] : terms) out.add(k, c * s);
    return out;
}

std::string format_chord_word(const ChordWord& w) {
    std::string out;
    if (w.a_power == 1)
        out = "a";
    else if (w.a_power > 1)
        out = "a^" + std::to_string(w.a_power);
    for (const auto& c : w.circles) {
        if (!out.empty()) out += " ";
        out += "|" + format_letters(c.rep.letters, 'x') + "|";
    }
    for (const auto& b : w.bottoms) {
        if (!out.empty()) out += " ";
        out += "(" + format_letters(b.letters, 'x') + ")";
    }
    return out.empty() ? "1" : out;
}

std::string format_chord_combo(const ChordCombo& x) { return format_rational_terms(x.terms); }

ChordCombo chord_normal_form(const ChordDiagram& d, ChordQuotient quotient) {
    validate_diagram(d);
    ChordCombo out;
    const int s = d.s_degree();
    const int limit = quotient == ChordQuotient::mod_s ? 0 : 1;
    if (s > limit) return out;

    auto lists = component_entries(d);
    const std::size_t nc = static_cast<std::size_t>(d.circles);
    const std::size_t nb = static_cast<std::size_t>(d.bottoms);
    if (s == 0 || d.a_power == s) {
        std::vector<std::vector<Entry>> circles(lists.begin(), lists.begin() + nc);
        std::vector<std::vector<Entry>> bottoms(lists.begin() + nc, lists.begin() + nc + nb);
        out.add(read_out(d, circles, bottoms, d.a_power), 1);
        return out;
    }
    // Exactly one strand-strand chord and no a: trade it for a factor of a.
    for (std::size_t k = 0; k < d.chords.size(); ++k)
        if (!d.is_pole(d.chords[k].first.component) && !d.is_pole(d.chords[k].second.component)) {
            out.add(smooth_and_read(d, k, 1), 1);
            return out;
        }
    throw ConsistencyError("self degree 1 diagram without a strand-strand chord");
}

std::vector<FourTermRelation> four_t_neighbors(const ChordDiagram& d) {
    validate_diagram(d);
    std::vector<FourTermRelation> out;
    const auto base_lists = component_entries(d);

    for (std::size_t u = 0; u < d.chords.size(); ++u) {
        const auto& [ua, ub] = d.chords[u];
        // The fixed chord must live on strands; a slide along a pole swaps
        // commuting endings and generates nothing at the graded level.
        if (d.is_pole(ua.component) || d.is_pole(ub.component)) continue;
        for (std::size_t v = 0; v < d.chords.size(); ++v) {
            if (v == u) continue;
            for (int slider = 0; slider < 2; ++slider) {
                // Only strand endings slide; endings on a pole commute with
                // everything and take part in no relation.
                const ChordSite& moving =
                    slider == 0 ? d.chords[v].first : d.chords[v].second;
                if (d.is_pole(moving.component)) continue;
                // Remove the sliding endpoint wherever it currently sits.
                auto lists = base_lists;
                for (auto& list : lists)
                    std::erase_if(list, [&](const Entry& e) {
                        return e.chord == v && e.end == slider;
                    });
                auto find_entry = [&](std::size_t chord, int end) {
                    for (std::size_t id = 0; id < lists.size(); ++id)
                        for (std::size_t i = 0; i < lists[id].size(); ++i)
                            if (lists[id][i].chord == chord && lists[id][i].end == end)
                                return std::pair{id, i};
                    throw ConsistencyError("4T anchor endpoint missing");
                };
                auto placed = [&](std::size_t comp, std::size_t at) {
                    auto copy = lists;
                    copy[comp].insert(copy[comp].begin() + static_cast<std::ptrdiff_t>(at),
                                      Entry{v, slider});
                    return from_entries(d, copy);
                };
                auto [ca, ia] = find_entry(u, 0);
                auto [cb, ib] = find_entry(u, 1);
                out.push_back(FourTermRelation{{{placed(ca, ia + 1), +1},
                                                {placed(ca, ia), -1},
                                                {placed(cb, ib + 1), +1},
                                                {placed(cb, ib), -1}}});
            }
        }
    }
    return out;
}

std::pair<ChordDiagram, int> flip_chord(const ChordDiagram& d) {
    validate_diagram(d);
    std::vector<std::size_t> counts(d.components(), 0);
    for (const auto& [a, b] : d.chords) {
        ++counts[a.component];
        ++counts[b.component];
    }
    ChordDiagram out = d;
    for (auto& chord : out.chords)
        for (ChordSite* s : {&chord.first, &chord.second})
            if (!d.is_pole(s->component))
                s->position = counts[s->component] - 1 - s->position;
    return {out, d.s_degree() % 2 == 0 ? 1 : -1};
}

ChordCombo flip_chord(const ChordCombo& x) {
    ChordCombo out;
    for (const auto& [w, c] : x.terms) {
        ChordWord m;
        m.a_power = w.a_power;
        for (const auto& circ : w.circles) {
            GroupWord r = circ.rep;
            std::reverse(r.letters.begin(), r.letters.end());
            m.circles.push_back(cyclic_canonical(r));
        }
        std::sort(m.circles.begin(), m.circles.end());
        for (const auto& b : w.bottoms) {
            GroupWord r = b;
            std::reverse(r.letters.begin(), r.letters.end());
            m.bottoms.push_back(std::move(r));
        }
        out.add(m, w.a_power % 2 == 0 ? c : -c);
    }
    return out;
}

ChordDiagram gr_lift(const GroupWord& w, LiftOrder order, int poles) {
    check_monomial(w, "lifted words");
    int top = max_index(w);
    if (poles == 0) poles = top;
    if (poles < top) throw InputError("word uses a pole beyond the skeleton");

    ChordDiagram d;
    d.bottoms = 1;
    d.poles = poles;
    d.chords.resize(w.size());
    std::vector<std::size_t> next(static_cast<std::size_t>(poles), 0);
    // Walk the strand in lift order so each pole numbers its endpoints to
    // match the strand (ascending) or oppose it (descending).
    for (std::size_t step = 0; step < w.size(); ++step) {
        std::size_t k =
            order == LiftOrder::ascending ? step : w.size() - 1 - step;
        std::size_t pole = static_cast<std::size_t>(w.letters[k]) - 1;
        d.chords[k] = {ChordSite{0, k}, ChordSite{1 + pole, next[pole]++}};
    }
    return d;
}

PhiTerm flip_phi(const PhiTerm& x) { return {x.w, x.v, -x.coeff}; }

void SplitTensor::add(const GroupWord& u, const GroupWord& w, const Rational& c) {
    if (c == 0) return;
    auto key = std::pair{u, w};
    auto it = terms.find(key);
    if (it == terms.end())
        terms.emplace(std::move(key), c);
    else if ((it->second += c) == 0)
        terms.erase(it);
}

SplitTensor& SplitTensor::operator+=(const SplitTensor& o) {
    for (const auto& [k, c] : o.terms) add(k.first, k.second, c);
    return *this;
}

SplitTensor& SplitTensor::operator-=(const SplitTensor& o) {
    for (const auto& [k, c] : o.terms) add(k.first, k.second, -c);
    return *this;
}

HalfElement lambda_alg(const GroupWord& d, LiftOrder order, const std::vector<PhiTerm>& phi) {
    check_monomial(d, "lifted words");
    HalfElement out;
    out.words.trunc = kNoTruncation;
    out.words.add(d, 1);
    const Rational half(1, 2);
    for (const PhiTerm& x : phi) {
        check_monomial(x.v, "pole words");
        check_monomial(x.w, "pole words");
        if (order == LiftOrder::ascending) {
            // [d, x] = d(vtw) - (vtw)d
            out.chords.add(concat(d, x.v), x.w, x.coeff);
            out.chords.add(x.v, concat(x.w, d), -x.coeff);
        } else {
            // [x#, d] = x#d - dx# with x# = -wtv
            out.chords.add(x.w, concat(x.v, d), -x.coeff);
            out.chords.add(concat(d, x.w), x.v, x.coeff);
        }
    }
    if (order == LiftOrder::ascending)
        out.chords.add(d, GroupWord{}, half);
    else
        out.chords.add(GroupWord{}, d, half);
    return out;
}

GradedWedge alt_close_split(const SplitTensor& x) {
    GradedWedge out;
    out.trunc = kNoTruncation;
    for (const auto& [key, c] : x.terms) {
        CyclicClass head = cyclic_canonical(key.second);
        CyclicClass tail = cyclic_canonical(key.first);
        out.add_wedge(head, tail, c);
        out.add_wedge(tail, head, -c);
    }
    return out;
}

GradedWedge epsilon_one(const GroupWord& b, const PhiTerm& x) {
    check_monomial(b, "pole words");
    check_monomial(x.v, "pole words");
    check_monomial(x.w, "pole words");
    PhiTerm xf = flip_phi(x);
    SplitTensor comm;
    // [b, x]
    comm.add(concat(b, x.v), x.w, x.coeff);
    comm.add(x.v, concat(x.w, b), -x.coeff);
    // - [x#, b]
    comm.add(xf.v, concat(xf.w, b), -xf.coeff);
    comm.add(concat(b, xf.v), xf.w, xf.coeff);
    return alt_close_split(comm);
}

GradedWedge epsilon_two(const GroupWord& b) {
    check_monomial(b, "pole words");
    GradedWedge out;
    out.trunc = kNoTruncation;
    CyclicClass one = cyclic_canonical(GroupWord{});
    CyclicClass cls = cyclic_canonical(b);
    // Alt(|1| (x) |b| + |b| (x) |1|)
    out.add_wedge(one, cls, 1);
    out.add_wedge(cls, one, -1);
    out.add_wedge(cls, one, 1);
    out.add_wedge(one, cls, -1);
    return out;
}

std::vector<ConwayDegree> conway_exponential_identity(int n) {
    if (n < 1) throw InputError("truncation degree must be at least 1");
    using Poly = std::vector<Rational>;  // coefficients of a^0..a^n
    const std::size_t len = static_cast<std::size_t>(n) + 1;
    auto mul = [&](const Poly& p, const Poly& q) {
        Poly r(len, 0);
        for (std::size_t i = 0; i < len; ++i)
            for (std::size_t j = 0; i + j < len; ++j) r[i + j] += p[i] * q[j];
        return r;
    };
    // A two-strand element is (parallel part, crossed part); stacking
    // composes the connections, so swap * swap feeds back into parallel.
    struct Element {
        Poly par, cross;
    };
    auto multiply = [&](const Element& x, const Element& y) {
        Poly par = mul(x.par, y.par);
        Poly qq = mul(x.cross, y.cross);
        Poly cross = mul(x.par, y.cross);
        Poly qp = mul(x.cross, y.par);
        for (std::size_t i = 0; i < len; ++i) {
            par[i] += qq[i];
            cross[i] += qp[i];
        }
        return Element{par, cross};
    };
    auto exponential = [&](const Element& x) {
        Element sum{Poly(len, 0), Poly(len, 0)};
        Element term{Poly(len, 0), Poly(len, 0)};
        term.par[0] = 1;  // identity
        for (int k = 0;; ++k) {
            bool live = false;
            for (std::size_t i = 0; i < len; ++i)
                if (term.par[i] != 0 || term.cross[i] != 0) live = true;
            if (!live) break;
            for (std::size_t i = 0; i < len; ++i) {
                sum.par[i] += term.par[i];
                sum.cross[i] += term.cross[i];
            }
            term = multiply(term, x);
            for (std::size_t i = 0; i < len; ++i) {
                term.par[i] /= k + 1;
                term.cross[i] /= k + 1;
            }
        }
        return sum;
    };

    // One chord is a times the swap; a chord with weight c is c*a on the
    // crossed component.
    auto chord_multiple = [&](const Rational& c) {
        Element e{Poly(len, 0), Poly(len, 0)};
        if (n >= 1) e.cross[1] = c;
        return e;
    };
    const Rational half(1, 2);
    Element pos = exponential(chord_multiple(half));
    Element neg = exponential(chord_multiple(-half));
    Element diff{Poly(len, 0), Poly(len, 0)};
    for (std::size_t i = 0; i < len; ++i) {
        diff.par[i] = pos.par[i] - neg.par[i];
        diff.cross[i] = pos.cross[i] - neg.cross[i];
    }
    Element swap{Poly(len, 0), Poly(len, 0)};
    swap.cross[0] = 1;
    Element lhs = multiply(diff, swap);

    // The scalar series e^{a/2} - e^{-a/2} on the parallel connection.
    Poly scalar(len, 0);
    {
        Rational plus_term = 1, minus_term = 1;
        for (std::size_t k = 0; k < len; ++k) {
            scalar[k] = plus_term - minus_term;
            plus_term /= 2 * (static_cast<int>(k) + 1);
            minus_term /= -2 * (static_cast<int>(k) + 1);
        }
    }
    Element rhs{scalar, Poly(len, 0)};

    std::vector<ConwayDegree> report;
    for (int deg = 0; deg <= n; ++deg) {
        ConwayDegree row;
        row.degree = deg;
        row.lhs_parallel = lhs.par[static_cast<std::size_t>(deg)];
        row.lhs_crossed = lhs.cross[static_cast<std::size_t>(deg)];
        row.rhs_parallel = rhs.par[static_cast<std::size_t>(deg)];
        row.rhs_crossed = rhs.cross[static_cast<std::size_t>(deg)];
        row.equal = row.lhs_parallel == row.rhs_parallel && row.lhs_crossed == row.rhs_crossed;
        report.push_back(row);
    }
    return report;
}

}  // namespace gt
