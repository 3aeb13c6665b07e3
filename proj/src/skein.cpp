#include "gt/skein.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gt/errors.hpp"

namespace gt {

namespace {

// Sum of resolved crossing signs; marked double points carry no sign.
int writhe_of(const std::vector<DiagramCrossing>& crossings) {
    int w = 0;
    for (const auto& c : crossings)
        if (c.state != CrossingState::marked) w += crossing_sign(c);
    return w;
}

// Event letters strictly before resp. after a single parameter.
std::pair<std::vector<Letter>, std::vector<Letter>> split_at(const std::vector<RayEvent>& events,
                                                             const CurveTime& t) {
    std::vector<Letter> before, after;
    for (const auto& e : events) {
        if (e.t < t)
            before.push_back(e.letter);
        else if (t < e.t)
            after.push_back(e.letter);
        else
            throw GenericityError("ray event at a crossing parameter");
    }
    return {before, after};
}

std::vector<DiagramCrossing> self_records(const CurveData& data, std::size_t strand,
                                          CrossingState state) {
    std::vector<DiagramCrossing> out;
    out.reserve(data.crossings.size());
    for (const auto& q : data.crossings)
        out.push_back({strand, strand, q.t1, q.t2, q.at, q.eps, state});
    return out;
}

bool within(const CurveTime& t, std::size_t begin, std::size_t end) {
    return t.edge >= begin && t.edge < end;
}

// The shared open lift: curve, crossing list in ascending resolution, the
// descending target, and the positions of the two framing curl crossings.
struct OpenLift {
    CurveData data;
    std::vector<DiagramCrossing> crossings;  // all second_over (under-first)
    std::vector<CrossingState> descending;
    std::size_t kg = 0, kf = 0;  // indices into `crossings`
};

OpenLift build_open_lift(const GroupWord& w, int p, SynthesisOptions opts) {
    opts.framing = true;
    OpenCurve oc;
    OpenLift lift;
    lift.data = analyzed_open_path(w.letters, p, opts, &oc);
    lift.crossings = self_records(lift.data, 0, CrossingState::second_over);

    bool seen_kg = false, seen_kf = false;
    lift.descending.assign(lift.crossings.size(), CrossingState::first_over);
    for (std::size_t i = 0; i < lift.crossings.size(); ++i) {
        const auto& c = lift.crossings[i];
        bool in_kg = within(c.ta, oc.kg_edge_begin, oc.kg_edge_end) &&
                     within(c.tb, oc.kg_edge_begin, oc.kg_edge_end);
        bool in_kf = within(c.ta, oc.kf_edge_begin, oc.kf_edge_end) &&
                     within(c.tb, oc.kf_edge_begin, oc.kf_edge_end);
        if (in_kg) {
            if (seen_kg || c.eps != -1) throw ConsistencyError("unexpected crossing in the ccw curl");
            seen_kg = true;
            lift.kg = i;
            // The ccw curl keeps its under-first resolution: it is the
            // positive kink shared by both lifts.
            lift.descending[i] = CrossingState::second_over;
        } else if (in_kf) {
            if (seen_kf || c.eps != 1) throw ConsistencyError("unexpected crossing in the cw curl");
            seen_kf = true;
            lift.kf = i;
        }
    }
    if (!seen_kg || !seen_kf) throw ConsistencyError("framing curl crossing not found");
    return lift;
}

TangleDiagram diagram_from(CurveData data, std::vector<DiagramCrossing> crossings, int p) {
    TangleDiagram d;
    d.strands.push_back(std::move(data));
    d.crossings = std::move(crossings);
    d.writhe = writhe_of(d.crossings);
    d.p = p;
    return d;
}

// A small curl on the eastbound closing run of a closed representative,
// based at `base`: counterclockwise for handed +1 (a positive kink when
// resolved under-first), clockwise for handed -1.
void append_curl_east(std::vector<Point>& pts, const Point& base, const Rational& r, int handed) {
    Rational h(handed);
    auto add = [&](const Rational& dx, const Rational& dy) {
        pts.push_back({base.x + dx, base.y + h * dy});
    };
    add(3 * r, 0);  // the entry edge carries the crossing
    add(3 * r, r);
    add(r, r);
    add(r, -r);  // back across the run
    add(Rational(7, 2) * r, -r);
    add(4 * r, 0);
}

std::vector<Letter> word_of_strand(const CurveData& s) {
    std::vector<Letter> letters;
    letters.reserve(s.events.size());
    for (const auto& e : s.events) letters.push_back(e.letter);
    return letters;
}

void push_component(SkeinClass& cls, const CurveData& s) {
    if (s.curve.closed)
        cls.circles.push_back(cyclic_canonical(GroupWord{word_of_strand(s)}));
    else
        cls.intervals.push_back(reduce_word(GroupWord{word_of_strand(s)}));
}

void sort_circles(SkeinClass& cls) { std::sort(cls.circles.begin(), cls.circles.end()); }

std::vector<std::size_t> default_order(const std::vector<DiagramCrossing>& crossings) {
    std::vector<std::size_t> order(crossings.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        const auto& a = crossings[i];
        const auto& b = crossings[j];
        if (a.strand_a != b.strand_a) return a.strand_a < b.strand_a;
        if (!(a.ta == b.ta)) return a.ta < b.ta;
        if (a.strand_b != b.strand_b) return a.strand_b < b.strand_b;
        return a.tb < b.tb;
    });
    return order;
}

}  // namespace

int crossing_sign(const DiagramCrossing& c) {
    switch (c.state) {
        case CrossingState::first_over:
            return c.eps;
        case CrossingState::second_over:
            return -c.eps;
        case CrossingState::marked:
            break;
    }
    throw InputError("marked double point has no crossing sign");
}

int TangleDiagram::circles() const {
    int n = 0;
    for (const auto& s : strands) n += s.curve.closed ? 1 : 0;
    return n;
}

int TangleDiagram::intervals() const { return static_cast<int>(strands.size()) - circles(); }

int TangleDiagram::s_degree() const {
    int n = 0;
    for (const auto& c : crossings) n += c.state == CrossingState::marked ? 1 : 0;
    return n;
}

TangleDiagram lift_ascending(const GroupWord& w, int p, const SynthesisOptions& opts) {
    OpenLift lift = build_open_lift(w, p, opts);
    return diagram_from(std::move(lift.data), std::move(lift.crossings), p);
}

TangleDiagram lift_descending(const GroupWord& w, int p, const SynthesisOptions& opts) {
    OpenLift lift = build_open_lift(w, p, opts);
    for (std::size_t i = 0; i < lift.crossings.size(); ++i)
        lift.crossings[i].state = lift.descending[i];
    return diagram_from(std::move(lift.data), std::move(lift.crossings), p);
}

TangleDiagram lift_loop_ascending(const CyclicClass& c, int p, int layer, int tweak) {
    for (int t = tweak; t < tweak + 32; ++t) {
        SynthesisOptions opts;
        opts.layer = layer;
        opts.tweak = t;
        PLLoop loop = standard_loop_raw(c.rep.letters, p, opts);
        try {
            CurveData bare = analyze_curve(loop, p);
            int natural = 0;
            for (const auto& q : bare.crossings) natural -= q.eps;  // under-first signs
            int deficit = 1 - natural;
            if (deficit != 0) {
                // The closing run goes east from the last point to the
                // first; park the correction curls along it.
                int n = std::abs(deficit);
                int handed = deficit > 0 ? 1 : -1;
                Rational r(1, 128L * n);
                Point q1 = loop.points.back();
                for (int k = 0; k < n; ++k) {
                    Point base{q1.x + Rational(1, 40) + Rational(6 * k) * r, q1.y};
                    append_curl_east(loop.points, base, r, handed);
                }
            }
            CurveData data = analyze_curve(loop, p);
            auto records = self_records(data, 0, CrossingState::second_over);
            TangleDiagram d = diagram_from(std::move(data), std::move(records), p);
            if (d.writhe != 1) throw ConsistencyError("loop lift writhe normalization failed");
            return d;
        } catch (const GenericityError&) {
            if (t == tweak + 31) throw;
        }
    }
    throw GenericityError("unreachable");
}

TangleDiagram stack(const TangleDiagram& lower, const TangleDiagram& upper) {
    if (lower.p != upper.p) throw InputError("stacking diagrams over different discs");
    TangleDiagram d;
    d.p = lower.p;
    d.strands = lower.strands;
    d.strands.insert(d.strands.end(), upper.strands.begin(), upper.strands.end());
    d.crossings = lower.crossings;
    std::size_t offset = lower.strands.size();
    for (DiagramCrossing c : upper.crossings) {
        c.strand_a += offset;
        c.strand_b += offset;
        d.crossings.push_back(c);
    }
    for (std::size_t i = 0; i < lower.strands.size(); ++i) {
        for (std::size_t j = 0; j < upper.strands.size(); ++j) {
            for (const auto& q : cross_curves(lower.strands[i], upper.strands[j]))
                d.crossings.push_back(
                    {i, offset + j, q.ta, q.tb, q.at, q.eps, CrossingState::second_over});
        }
    }
    d.writhe = writhe_of(d.crossings);
    return d;
}

TangleDiagram flip_diagram(const TangleDiagram& d) {
    TangleDiagram out;
    out.p = d.p;
    for (const auto& s : d.strands) {
        PLLoop rev = s.curve;
        std::reverse(rev.points.begin(), rev.points.end());
        out.strands.push_back(analyze_curve(rev, d.p));
    }
    // Self-crossings: reversing the strand swaps the visit order, and the
    // mirror swaps over and under, so the resolution flag survives as-is.
    for (std::size_t i = 0; i < out.strands.size(); ++i) {
        for (const auto& q : out.strands[i].crossings) {
            const DiagramCrossing* old = nullptr;
            for (const auto& c : d.crossings)
                if (c.strand_a == i && c.strand_b == i && c.at == q.at) old = &c;
            if (!old) throw ConsistencyError("flip lost a self-crossing");
            out.crossings.push_back({i, i, q.t1, q.t2, q.at, q.eps, old->state});
        }
    }
    // Strand-strand crossings keep their strand roles, so there the mirror
    // flips the resolution.
    for (const auto& c : d.crossings) {
        if (c.strand_a == c.strand_b) continue;
        bool found = false;
        for (const auto& q : cross_curves(out.strands[c.strand_a], out.strands[c.strand_b])) {
            if (!(q.at == c.at)) continue;
            CrossingState state = c.state;
            if (state == CrossingState::first_over)
                state = CrossingState::second_over;
            else if (state == CrossingState::second_over)
                state = CrossingState::first_over;
            out.crossings.push_back({c.strand_a, c.strand_b, q.ta, q.tb, q.at, q.eps, state});
            found = true;
        }
        if (!found) throw ConsistencyError("flip lost a strand-strand crossing");
    }
    out.writhe = writhe_of(out.crossings);
    return out;
}

std::string format_skein_class(const SkeinClass& c) {
    std::string s;
    for (const auto& circle : c.circles) {
        if (!s.empty()) s += ' ';
        s += format_cyclic(circle);
    }
    for (const auto& path : c.intervals) {
        if (!s.empty()) s += ' ';
        s += format_group_word(path);
    }
    return s.empty() ? "(empty skeleton)" : s;
}

SkeinClass diagram_class(const TangleDiagram& d) {
    SkeinClass cls;
    for (const auto& s : d.strands) push_component(cls, s);
    sort_circles(cls);
    return cls;
}

SkeinClass smooth_class(const TangleDiagram& d, std::size_t ci) {
    if (ci >= d.crossings.size()) throw InputError("crossing index out of range");
    const DiagramCrossing& c = d.crossings[ci];
    SkeinClass cls;
    for (std::size_t i = 0; i < d.strands.size(); ++i) {
        if (i == c.strand_a || i == c.strand_b) continue;
        push_component(cls, d.strands[i]);
    }
    if (c.strand_a == c.strand_b) {
        // Oriented smoothing of a self-crossing: the middle arc closes into
        // a circle, the rest keeps the strand's shape.
        const CurveData& s = d.strands[c.strand_a];
        auto [mid, rest] = split_events(s.events, c.ta, c.tb);
        cls.circles.push_back(cyclic_canonical(GroupWord{mid}));
        if (s.curve.closed)
            cls.circles.push_back(cyclic_canonical(GroupWord{rest}));
        else
            cls.intervals.push_back(reduce_word(GroupWord{rest}));
    } else {
        // Smoothing a crossing of distinct strands concatenates them.
        const CurveData& a = d.strands[c.strand_a];
        const CurveData& b = d.strands[c.strand_b];
        if (a.curve.closed && b.curve.closed) {
            std::vector<Letter> fused = rotate_events(a.events, c.ta);
            auto tail = rotate_events(b.events, c.tb);
            fused.insert(fused.end(), tail.begin(), tail.end());
            cls.circles.push_back(cyclic_canonical(GroupWord{fused}));
        } else if (!a.curve.closed && b.curve.closed) {
            auto [before, after] = split_at(a.events, c.ta);
            auto loop = rotate_events(b.events, c.tb);
            before.insert(before.end(), loop.begin(), loop.end());
            before.insert(before.end(), after.begin(), after.end());
            cls.intervals.push_back(reduce_word(GroupWord{before}));
        } else if (a.curve.closed && !b.curve.closed) {
            auto [before, after] = split_at(b.events, c.tb);
            auto loop = rotate_events(a.events, c.ta);
            before.insert(before.end(), loop.begin(), loop.end());
            before.insert(before.end(), after.begin(), after.end());
            cls.intervals.push_back(reduce_word(GroupWord{before}));
        } else {
            throw InputError("smoothing two open strands is not defined here");
        }
    }
    sort_circles(cls);
    return cls;
}

SkeinNormalForm telescope_normalize(const TangleDiagram& d, const std::vector<CrossingState>& target,
                                    std::vector<std::size_t> order) {
    if (target.size() != d.crossings.size())
        throw InputError("target resolution size does not match the crossing list");
    if (order.empty()) {
        order = default_order(d.crossings);
    } else {
        std::vector<std::size_t> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (i >= d.crossings.size() || sorted[i] != i)
                throw InputError("switching order must visit each crossing once");
    }
    SkeinNormalForm nf;
    nf.word_part.add(diagram_class(d), Coefficient::one());
    for (std::size_t idx : order) {
        if (d.crossings[idx].state == target[idx]) continue;
        if (d.crossings[idx].state == CrossingState::marked ||
            target[idx] == CrossingState::marked)
            throw InputError("telescoping switches resolved crossings only");
        // Switching a crossing x: D = D_switched + sign(x) b (smoothing at x).
        // Later switches happen at other crossings, so the sign is read off
        // the original resolution.
        int sign = crossing_sign(d.crossings[idx]);
        nf.b_part.add(smooth_class(d, idx), Coefficient(Rational(sign)));
        ++nf.emissions;
    }
    return nf;
}

SkeinCombo b_check(const std::vector<std::pair<TangleDiagram, Coefficient>>& x) {
    SkeinCombo out;
    for (const auto& [d, coeff] : x) {
        int k = d.s_degree();
        if (k >= 2) continue;
        if (k == 1) {
            // One unresolved double point is one factor of b; anything on
            // top of the coefficient's own b dies.
            std::size_t marked = 0;
            for (std::size_t i = 0; i < d.crossings.size(); ++i)
                if (d.crossings[i].state == CrossingState::marked) marked = i;
            out.add(smooth_class(d, marked), Coefficient(coeff.b0));
            continue;
        }
        out.add(diagram_class(d), Coefficient(coeff.b1));
        for (std::size_t i = 0; i < d.crossings.size(); ++i) {
            Rational half(crossing_sign(d.crossings[i]), 2);
            out.add(smooth_class(d, i), Coefficient(half * coeff.b0));
        }
    }
    return out;
}

LoopCombo bracket_skein_stacked(const TangleDiagram& ka, const TangleDiagram& kb) {
    TangleDiagram d = stack(ka, kb);
    std::vector<CrossingState> target;
    target.reserve(d.crossings.size());
    for (const auto& c : d.crossings)
        target.push_back(c.strand_a == c.strand_b ? c.state : CrossingState::first_over);
    SkeinNormalForm nf = telescope_normalize(d, target);

    SkeinCombo swapped;
    swapped.add(diagram_class(stack(kb, ka)), Coefficient::one());
    if (nf.word_part != swapped)
        throw ConsistencyError("stacking commutator left a nonzero word part");

    LoopCombo out;
    for (const auto& [cls, c] : nf.b_part.terms) {
        if (cls.circles.size() != 1 || !cls.intervals.empty())
            throw ConsistencyError("commutator smoothing did not close into one circle");
        out.add(cls.circles.front(), c);
    }
    return out;
}

LoopCombo bracket_skein(const CyclicClass& a, const CyclicClass& b, int p, int layer_a,
                        int layer_b) {
    if (layer_a == layer_b) throw InputError("stacked lifts need distinct layers");
    TangleDiagram ka = lift_loop_ascending(a, p, layer_a);
    for (int attempt = 0; attempt < 32; ++attempt) {
        try {
            return bracket_skein_stacked(ka, lift_loop_ascending(b, p, layer_b, attempt));
        } catch (const GenericityError&) {
            if (attempt == 31) throw;
        }
    }
    throw GenericityError("unreachable");
}

LoopCombo bracket_skein(const LoopCombo& x, const LoopCombo& y, int p) {
    LoopCombo out;
    for (const auto& [a, ca] : x.terms)
        for (const auto& [b, cb] : y.terms) out += bracket_skein(a, b, p).scaled(ca * cb);
    return out;
}

TensorElement mu_skein(const GroupWord& w, int p, const SynthesisOptions& opts) {
    OpenLift lift = build_open_lift(w, p, opts);
    TangleDiagram asc = diagram_from(lift.data, lift.crossings, p);
    SkeinNormalForm nf = telescope_normalize(asc, lift.descending);
    TensorElement out;
    for (const auto& [cls, c] : nf.b_part.terms) {
        if (cls.circles.size() != 1 || cls.intervals.size() != 1)
            throw ConsistencyError("lift difference smoothing has the wrong skeleton");
        out.add({cls.circles.front(), cls.intervals.front()}, c);
    }
    return out;
}

WedgeElement delta_skein(const LoopCombo& x, int p) {
    WedgeElement out;
    for (const auto& [cls, c] : x.terms) out += alt_close(mu_skein(cls.rep, p)).scaled(c);
    return out;
}

}  // namespace gt
