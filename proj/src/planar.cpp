#include "gt/planar.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "gt/errors.hpp"

namespace gt {

namespace {

Rational rat(long num, long den = 1) { return Rational(num, den); }

Rational cross_det(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }

int sign_of(const Rational& q) { return q == 0 ? 0 : (q > 0 ? 1 : -1); }

Point sub(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }

// Strictly between the endpoints of a collinear segment?
bool within_span(const Point& p, const Point& a, const Point& b) {
    auto between = [](const Rational& v, const Rational& lo, const Rational& hi) {
        return lo <= hi ? (lo <= v && v <= hi) : (hi <= v && v <= lo);
    };
    return between(p.x, a.x, b.x) && between(p.y, a.y, b.y);
}

struct Edge {
    Point a, b;
    std::size_t index;
};

std::vector<Edge> edges_of(const PLLoop& c) {
    std::vector<Edge> out;
    std::size_t n = c.edge_count();
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back({c.points[i], c.points[(i + 1) % c.points.size()], i});
    return out;
}

// Conservative double-precision boxes used only to skip far-apart pairs;
// every surviving pair is retested exactly.
struct Box {
    double xlo, xhi, ylo, yhi;
};

Box box_of(const Edge& e) {
    auto d = [](const Rational& q) { return q.convert_to<double>(); };
    const double pad = 1e-9;
    double x1 = d(e.a.x), x2 = d(e.b.x), y1 = d(e.a.y), y2 = d(e.b.y);
    return {std::min(x1, x2) - pad, std::max(x1, x2) + pad, std::min(y1, y2) - pad,
            std::max(y1, y2) + pad};
}

bool boxes_disjoint(const Box& p, const Box& q) {
    return p.xhi < q.xlo || q.xhi < p.xlo || p.yhi < q.ylo || q.yhi < p.ylo;
}

struct EdgeHit {
    Rational s_a, s_b;
    Point at;
    int det_sign;  // sign det(dir_a, dir_b)
};

// Proper transverse intersection of two non-adjacent edges, throwing on any
// touching or overlap.
std::optional<EdgeHit> edge_intersection(const Edge& ea, const Edge& eb) {
    Point da = sub(ea.b, ea.a), db = sub(eb.b, eb.a);
    int o1 = orientation(ea.a, ea.b, eb.a);
    int o2 = orientation(ea.a, ea.b, eb.b);
    int o3 = orientation(eb.a, eb.b, ea.a);
    int o4 = orientation(eb.a, eb.b, ea.b);
    if (o1 == 0 && o2 == 0) {
        // Collinear: any shared point is an overlap.
        if (within_span(eb.a, ea.a, ea.b) || within_span(eb.b, ea.a, ea.b) ||
            within_span(ea.a, eb.a, eb.b) || within_span(ea.b, eb.a, eb.b))
            throw GenericityError("collinear overlapping edges");
        return std::nullopt;
    }
    if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) {
        if ((o1 == 0 && within_span(eb.a, ea.a, ea.b)) ||
            (o2 == 0 && within_span(eb.b, ea.a, ea.b)) ||
            (o3 == 0 && within_span(ea.a, eb.a, eb.b)) ||
            (o4 == 0 && within_span(ea.b, eb.a, eb.b)))
            throw GenericityError("edge endpoint touches another edge");
        return std::nullopt;
    }
    if (o1 * o2 < 0 && o3 * o4 < 0) {
        Rational denom = cross_det(da, db);
        Point diff = sub(eb.a, ea.a);
        Rational s_a = cross_det(diff, db) / denom;
        Rational s_b = cross_det(diff, da) / denom;
        Point at{ea.a.x + s_a * da.x, ea.a.y + s_a * da.y};
        return EdgeHit{s_a, s_b, at, sign_of(denom)};
    }
    return std::nullopt;
}

void check_edge_valid(const Edge& e) {
    if (e.a == e.b) throw InputError("zero-length edge");
}

void check_inside_disc(const PLLoop& c, int p) {
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        const Point& pt = c.points[i];
        bool is_endpoint = !c.closed && (i == 0 || i + 1 == c.points.size());
        if (pt.x <= 0 || pt.x >= rat(p + 1) || pt.y >= 1 || pt.y < -1 ||
            (pt.y == -1 && !is_endpoint))
            throw InputError("curve leaves the disc");
    }
}

void check_rays_and_punctures(const std::vector<Edge>& edges, int p) {
    for (const Edge& e : edges) {
        for (int i = 1; i <= p; ++i) {
            Point punct{rat(i), rat(0)};
            if (orientation(e.a, e.b, punct) == 0 && within_span(punct, e.a, e.b))
                throw GenericityError("curve passes through a puncture");
        }
    }
}

std::vector<RayEvent> collect_events(const std::vector<Edge>& edges, int p) {
    std::vector<RayEvent> events;
    for (const Edge& e : edges) {
        // Vertices may not sit on a cut ray (or at a puncture).
        for (const Point* v : {&e.a, &e.b}) {
            if (v->y >= 0 && v->y < 1) {
                Rational ix = v->x;
                if (denominator(ix) == 1 && ix >= 1 && ix <= p)
                    throw GenericityError("vertex on a cut ray");
            }
        }
        for (int i = 1; i <= p; ++i) {
            int sa = sign_of(e.a.x - rat(i));
            int sb = sign_of(e.b.x - rat(i));
            if (sa * sb >= 0) continue;  // vertex-on-line handled above
            Rational s = (rat(i) - e.a.x) / (e.b.x - e.a.x);
            Rational y = e.a.y + s * (e.b.y - e.a.y);
            if (y == 0) throw GenericityError("curve passes through a puncture");
            if (y < 0 || y >= 1) continue;
            Letter letter = sb < 0 ? static_cast<Letter>(i) : -static_cast<Letter>(i);
            events.push_back({CurveTime{e.index, s}, letter});
        }
    }
    std::sort(events.begin(), events.end(),
              [](const RayEvent& x, const RayEvent& y) { return x.t < y.t; });
    return events;
}

void check_crossing_off_rays(const Point& at, int p) {
    if (at.y > 0 && denominator(at.x) == 1 && at.x >= 1 && at.x <= p)
        throw GenericityError("crossing point on a cut ray");
}

bool adjacent_edges(const PLLoop& c, std::size_t i, std::size_t j) {
    if (j == i + 1) return true;
    return c.closed && i == 0 && j + 1 == c.edge_count();
}

}  // namespace

int orientation(const Point& a, const Point& b, const Point& c) {
    return sign_of(cross_det(sub(b, a), sub(c, a)));
}

CurveData analyze_curve(const PLLoop& curve, int p) {
    if (p < 1) throw InputError("need at least one puncture");
    if (curve.points.size() < (curve.closed ? 3u : 2u)) throw InputError("too few points");
    check_inside_disc(curve, p);
    auto edges = edges_of(curve);
    for (const Edge& e : edges) check_edge_valid(e);
    check_rays_and_punctures(edges, p);

    // Doubling back makes the rotation number ill-defined and creates
    // overlapping adjacent edges.
    for (std::size_t i = 0; i < edges.size(); ++i) {
        std::size_t j = (i + 1) % edges.size();
        if (!curve.closed && j == 0) break;
        Point u = sub(edges[i].b, edges[i].a), v = sub(edges[j].b, edges[j].a);
        if (cross_det(u, v) == 0 && u.x * v.x + u.y * v.y < 0)
            throw GenericityError("curve doubles back at a vertex");
    }

    CurveData data;
    data.curve = curve;
    data.p = p;
    data.events = collect_events(edges, p);

    std::vector<Box> boxes;
    boxes.reserve(edges.size());
    for (const Edge& e : edges) boxes.push_back(box_of(e));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (adjacent_edges(curve, i, j)) continue;
            if (boxes_disjoint(boxes[i], boxes[j])) continue;
            auto hit = edge_intersection(edges[i], edges[j]);
            if (!hit) continue;
            check_crossing_off_rays(hit->at, p);
            data.crossings.push_back(SelfCrossing{CurveTime{i, hit->s_a}, CurveTime{j, hit->s_b},
                                                  hit->at, kDiscOrientation * hit->det_sign});
        }
    }
    std::sort(data.crossings.begin(), data.crossings.end(),
              [](const SelfCrossing& a, const SelfCrossing& b) {
                  return a.t1 != b.t1 ? a.t1 < b.t1 : a.t2 < b.t2;
              });
    for (std::size_t i = 1; i < data.crossings.size(); ++i)
        if (data.crossings[i].at == data.crossings[i - 1].at)
            throw GenericityError("triple point");
    return data;
}

std::vector<PairCrossing> cross_curves(const CurveData& a, const CurveData& b) {
    if (a.p != b.p) throw InputError("curves analyzed over different discs");
    auto ea = edges_of(a.curve), eb = edges_of(b.curve);
    std::vector<Box> ba, bb;
    for (const Edge& e : ea) ba.push_back(box_of(e));
    for (const Edge& e : eb) bb.push_back(box_of(e));
    std::vector<PairCrossing> out;
    for (std::size_t i = 0; i < ea.size(); ++i) {
        for (std::size_t j = 0; j < eb.size(); ++j) {
            if (boxes_disjoint(ba[i], bb[j])) continue;
            auto hit = edge_intersection(ea[i], eb[j]);
            if (!hit) continue;
            check_crossing_off_rays(hit->at, a.p);
            out.push_back(PairCrossing{CurveTime{i, hit->s_a}, CurveTime{j, hit->s_b}, hit->at,
                                       kDiscOrientation * hit->det_sign});
        }
    }
    std::sort(out.begin(), out.end(), [](const PairCrossing& x, const PairCrossing& y) {
        return x.ta != y.ta ? x.ta < y.ta : x.tb < y.tb;
    });
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i].at == out[i - 1].at) throw GenericityError("triple point between curves");
    // A crossing of the two curves coinciding with a self-crossing of either
    // would also be a triple point.
    for (const auto& q : out)
        for (const CurveData* cd : {&a, &b})
            for (const auto& s : cd->crossings)
                if (s.at == q.at) throw GenericityError("triple point between curves");
    return out;
}

int rotation_number(const PLLoop& curve) {
    if (!curve.closed) throw InputError("rotation number needs a closed curve");
    if (curve.points.size() < 3) throw InputError("too few points");
    std::vector<Point> dirs;
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        Point d = sub(curve.points[(i + 1) % curve.points.size()], curve.points[i]);
        if (d.x == 0 && d.y == 0) throw InputError("zero-length edge");
        dirs.push_back(d);
    }
    int winding = 0;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        const Point& u = dirs[i];
        const Point& v = dirs[(i + 1) % dirs.size()];
        if (cross_det(u, v) == 0) {
            if (u.x * v.x + u.y * v.y < 0) throw GenericityError("direction reversal");
            continue;  // same direction, no turn
        }
        // Count signed crossings of the positive x-axis by the chord u -> v.
        bool up = u.y < 0 && v.y >= 0;
        bool down = u.y >= 0 && v.y < 0;
        if (!up && !down) continue;
        Rational x_at = u.x + (v.x - u.x) * (-u.y) / (v.y - u.y);
        if (x_at == 0) throw GenericityError("direction reversal");
        if (x_at > 0) winding += up ? 1 : -1;
    }
    return winding;
}

namespace {

std::vector<Letter> event_letters(const std::vector<RayEvent>& events) {
    std::vector<Letter> out;
    out.reserve(events.size());
    for (const auto& e : events) out.push_back(e.letter);
    return out;
}

}  // namespace

CyclicClass loop_word(const PLLoop& curve, int p) {
    if (!curve.closed) throw InputError("loop_word needs a closed curve");
    auto data = analyze_curve(curve, p);
    return cyclic_canonical(GroupWord{event_letters(data.events)});
}

GroupWord path_word(const PLLoop& curve, int p) {
    if (curve.closed) throw InputError("path_word needs an open curve");
    auto data = analyze_curve(curve, p);
    return reduce_word(GroupWord{event_letters(data.events)});
}

// ---- canonical curve synthesis ------------------------------------------

namespace {

constexpr long kCurlR = 128;  // curl radius 1/128: loop diameter 1/64

// A small curl on a vertical stem at `base`, travelling in y-direction
// stem_dir (+1 up, -1 down).  handed = +1 loops to the right of travel
// first.  Appends the seven chain points ending 4r further along, and
// reports the curl's screen rotation contribution.
int append_curl(std::vector<Point>& pts, const Point& base, int stem_dir, int handed) {
    Rational r(1, kCurlR);
    Rational sd(stem_dir);
    Rational h(handed);
    auto add = [&](const Rational& dx, const Rational& dy) {
        pts.push_back({base.x + dx, base.y + sd * dy});
    };
    add(0, 3 * r);              // stem continues; crossing lands on this edge
    add(h * r, 3 * r);          // out to the side
    add(h * r, r);              // back along the stem
    add(-h * r, r);             // across the stem: the curl crossing
    add(-h * r, rat(7, 2) * r);
    add(0, 4 * r);              // rejoin the stem
    // Screen rotation: +1 when the loop runs counterclockwise.
    return -stem_dir * handed;
}

struct Consts {
    int m;  // letter count
    long M;
    Rational layer_shift, tweak_shift;

    Consts(std::size_t letters, int layer, int tweak) {
        if (layer < 0 || layer > 7) throw InputError("layer must be in 0..7");
        if (tweak < 0) throw InputError("negative tweak");
        m = static_cast<int>(letters);
        M = static_cast<long>(letters ? letters : 1) + 2;
        layer_shift = Rational(layer, 521);
        tweak_shift = Rational(tweak, 1031);
    }

    // Petal size parameter for occurrence j: strictly decreasing in j, and
    // distinct across layers/tweaks because 521 and 1031 are primes larger
    // than any denominator 8M in play.
    Rational u(int j) const { return Rational(M - j, 8 * M) + layer_shift + tweak_shift; }
    Rational w(int j) const { return rat(1, 4) + u(j); }
    Rational h(int j) const { return rat(1, 4) + u(j); }
    Rational g(int j) const { return rat(1, 8) + u(j) / 2; }
    Rational zeta(int j) const { return u(j) / 5; }
};

// Appends the rectangle petal for occurrence j of letter l; the first point
// appended is the entry corner, the last the exit corner.
void append_petal(std::vector<Point>& pts, const Consts& c, int j, Letter l) {
    int i = std::abs(l);
    Rational w = c.w(j), h = c.h(j), g = c.g(j), z = c.zeta(j);
    Rational xi(i);
    if (l > 0) {
        // Counterclockwise; the top edge crosses the ray westward: reads gi.
        pts.push_back({xi - w + z, -g});
        pts.push_back({xi + w, -g});
        pts.push_back({xi + w, h});
        pts.push_back({xi - w, h});
        pts.push_back({xi - w, -g});
    } else {
        // Clockwise; eastward top-edge crossing reads gi^-1.
        pts.push_back({xi + w - z, -g});
        pts.push_back({xi - w, -g});
        pts.push_back({xi - w, h});
        pts.push_back({xi + w, h});
        pts.push_back({xi + w, -g});
    }
}

void check_letters(const std::vector<Letter>& letters, int p) {
    if (p < 1) throw InputError("need at least one puncture");
    for (Letter l : letters)
        if (l == 0 || std::abs(l) > p) throw InputError("letter out of range");
}

}  // namespace

OpenCurve standard_open_path(const std::vector<Letter>& letters, int p,
                             const SynthesisOptions& opts) {
    check_letters(letters, p);
    Consts c(letters.size(), opts.layer, opts.tweak);

    // First pass: build without rotation kinks to measure the closed-up
    // rotation, then rebuild with the compensating curls in place.
    auto build = [&](int kinks) {
        OpenCurve out;
        std::vector<Point>& pts = out.curve.points;
        out.curve.closed = false;
        Point start = PuncturedDisc::start_mark();  // (3/5, -1)
        Rational s_top = rat(-2, 5) + c.layer_shift / 4 + c.tweak_shift / 4;
        pts.push_back(start);
        if (kinks != 0) {
            int handed = kinks > 0 ? 1 : -1;  // clockwise curls kill positive rotation
            Rational base_y = rat(-31, 32) + Rational(opts.kink_variant, 64);
            pts.push_back({start.x, base_y});
            Point cursor{start.x, base_y};
            for (int k = 0; k < std::abs(kinks); ++k) {
                append_curl(pts, cursor, +1, handed);
                cursor = pts.back();
            }
            if (cursor.y >= s_top - rat(1, 16))
                throw InputError("word needs more kinks than the corridor holds");
        }
        pts.push_back({start.x, s_top});
        out.rotation_kinks = kinks;

        for (std::size_t j = 0; j < letters.size(); ++j)
            append_petal(pts, c, static_cast<int>(j), letters[j]);

        // Route home left of the start stub, crossing the column x = 3/5
        // well above its top.
        Point g1{rat(14, 25) + c.layer_shift / 4, rat(-7, 20) + c.tweak_shift / 8};
        Point f1{rat(1, 2) + c.layer_shift / 2, rat(-9, 16) + c.tweak_shift / 4};
        Point f2{rat(2, 5), rat(-13, 16) + c.layer_shift / 4};
        pts.push_back(g1);
        pts.push_back(f1);
        pts.push_back(f2);
        if (opts.framing) {
            // Writhe-balancing curl pair on the final descent, net rotation
            // zero.  The clockwise curl carries eps +1 and plays the K_f role
            // in the lift construction; the counterclockwise one (eps -1) is
            // K_g.  Appended ccw-first so the stem re-centers before K_f.
            Point base{f2.x, rat(-27, 32)};
            pts.push_back(base);
            out.kg_edge_begin = pts.size() - 1;
            append_curl(pts, base, -1, +1);  // ccw on a downward stem: eps -1
            out.kg_edge_end = pts.size() - 1;
            Point base2 = pts.back();
            out.kf_edge_begin = pts.size() - 1;
            append_curl(pts, base2, -1, -1);  // cw: eps +1
            out.kf_edge_end = pts.size() - 1;
        }
        pts.push_back(PuncturedDisc::end_mark());  // (2/5, -1)
        return out;
    };

    OpenCurve bare = build(0);
    PLLoop closure = bare.curve;
    closure.closed = true;  // the implicit closing edge is exactly nu reversed
    int rot = rotation_number(closure);
    if (rot == 0) return bare;
    OpenCurve fixed = build(rot);
    PLLoop check = fixed.curve;
    check.closed = true;
    if (rotation_number(check) != 0)
        throw ConsistencyError("kink insertion failed to normalize rotation");
    return fixed;
}

PLLoop standard_loop_raw(const std::vector<Letter>& letters, int p, const SynthesisOptions& opts) {
    check_letters(letters, p);
    Consts c(letters.size(), opts.layer, opts.tweak);
    Rational qy = rat(-3, 4) - Rational(opts.layer, 64) - Rational(opts.tweak, 256);
    Rational qx_shift = Rational(opts.layer, 512) + Rational(opts.tweak, 2048);
    PLLoop loop;
    loop.closed = true;
    loop.points.push_back({rat(11, 20) + qx_shift, qy});
    if (letters.empty()) {
        loop.points.push_back({rat(1, 2) + qx_shift, qy + rat(1, 8)});
    } else {
        for (std::size_t j = 0; j < letters.size(); ++j)
            append_petal(loop.points, c, static_cast<int>(j), letters[j]);
    }
    loop.points.push_back({rat(9, 20) - qx_shift, qy});
    return loop;
}

PLLoop standard_loop(const CyclicClass& w, int p, int layer) {
    SynthesisOptions opts;
    opts.layer = layer;
    for (int tweak = 0; tweak < 32; ++tweak) {
        opts.tweak = tweak;
        PLLoop candidate = standard_loop_raw(w.rep.letters, p, opts);
        try {
            analyze_curve(candidate, p);
            return candidate;
        } catch (const GenericityError&) {
            if (tweak == 31) throw;
        }
    }
    throw GenericityError("unreachable");
}

// ---- the three geometric operations -------------------------------------

std::pair<std::vector<Letter>, std::vector<Letter>> split_events(
    const std::vector<RayEvent>& events, const CurveTime& t1, const CurveTime& t2) {
    std::vector<Letter> mid, rest;
    for (const auto& e : events) {
        if (t1 < e.t && e.t < t2)
            mid.push_back(e.letter);
        else if (e.t < t1 || t2 < e.t)
            rest.push_back(e.letter);
        else
            throw GenericityError("ray event at a crossing parameter");
    }
    return {mid, rest};
}

std::vector<Letter> rotate_events(const std::vector<RayEvent>& events, const CurveTime& t) {
    std::vector<Letter> out;
    out.reserve(events.size());
    for (const auto& e : events)
        if (t < e.t) out.push_back(e.letter);
    for (const auto& e : events) {
        if (e.t < t)
            out.push_back(e.letter);
        else if (e.t == t)
            throw GenericityError("ray event at a crossing parameter");
    }
    return out;
}

CurveData analyzed_open_path(const std::vector<Letter>& letters, int p,
                             const SynthesisOptions& opts, OpenCurve* info_out) {
    for (int tweak = opts.tweak; tweak < opts.tweak + 32; ++tweak) {
        SynthesisOptions attempt = opts;
        attempt.tweak = tweak;
        OpenCurve oc = standard_open_path(letters, p, attempt);
        try {
            CurveData data = analyze_curve(oc.curve, p);
            if (info_out) *info_out = oc;
            return data;
        } catch (const GenericityError&) {
            if (tweak == opts.tweak + 31) throw;
        }
    }
    throw GenericityError("unreachable");
}

TensorElement mu_geometric(const GroupWord& w, int p, const SynthesisOptions& opts) {
    OpenCurve oc;
    CurveData data = analyzed_open_path(w.letters, p, opts, &oc);
    TensorElement out;
    for (const auto& q : data.crossings) {
        auto [mid, rest] = split_events(data.events, q.t1, q.t2);
        CyclicClass loop_part = cyclic_canonical(GroupWord{mid});
        GroupWord path_part = reduce_word(GroupWord{rest});
        out.add({loop_part, path_part}, Coefficient(Rational(-q.eps)));
    }
    return out;
}

LoopCombo bracket_from_data(const CurveData& a, const CurveData& b) {
    LoopCombo out;
    for (const auto& q : cross_curves(a, b)) {
        std::vector<Letter> fused = rotate_events(a.events, q.ta);
        auto tail = rotate_events(b.events, q.tb);
        fused.insert(fused.end(), tail.begin(), tail.end());
        out.add(cyclic_canonical(GroupWord{fused}), Coefficient(Rational(-q.eps)));
    }
    return out;
}

LoopCombo goldman_bracket_geometric(const LoopCombo& x, const LoopCombo& y, int p) {
    LoopCombo out;
    std::map<CyclicClass, CurveData> cache_a, cache_b;
    for (const auto& [ca, coeff_a] : x.terms) {
        for (const auto& [cb, coeff_b] : y.terms) {
            auto ita = cache_a.find(ca);
            if (ita == cache_a.end())
                ita = cache_a.emplace(ca, analyze_curve(standard_loop(ca, p, 0), p)).first;
            auto itb = cache_b.find(cb);
            if (itb == cache_b.end())
                itb = cache_b.emplace(cb, analyze_curve(standard_loop(cb, p, 1), p)).first;
            LoopCombo part;
            try {
                part = bracket_from_data(ita->second, itb->second);
            } catch (const GenericityError&) {
                // Perturb the second curve and retry once per tweak.
                SynthesisOptions o;
                o.layer = 1;
                LoopCombo done;
                bool ok = false;
                for (int tweak = 1; tweak < 32 && !ok; ++tweak) {
                    o.tweak = tweak;
                    try {
                        CurveData alt = analyze_curve(standard_loop_raw(cb.rep.letters, p, o), p);
                        done = bracket_from_data(ita->second, alt);
                        ok = true;
                    } catch (const GenericityError&) {
                    }
                }
                if (!ok) throw;
                part = done;
            }
            out += part.scaled(coeff_a * coeff_b);
        }
    }
    return out;
}

WedgeElement delta_geometric(const LoopCombo& x, int p) {
    WedgeElement out;
    for (const auto& [cls, coeff] : x.terms) {
        TensorElement mu = mu_geometric(cls.rep, p);
        WedgeElement part = alt_close(mu);
        wedge_normalize(part, cls, CyclicClass{}, Coefficient::one());  // framing term
        out += part.scaled(coeff);
    }
    return out;
}

}  // namespace gt
