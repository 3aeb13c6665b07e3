#pragma once
#include <cstddef>
#include <vector>

#include "gt/combo.hpp"
#include "gt/rational.hpp"
#include "gt/word.hpp"

namespace gt {

// Model surface: the rectangle [0, p+1] x [-1, 1] with punctures at (i, 0),
// i = 1..p.  Loops are free homotopy classes in the complement; open curves
// run from the start mark at (0.6, -1) to the end mark at (0.4, -1), and nu
// is the boundary arc from the end mark back to the start mark along the
// bottom edge.  The cut ray above puncture i is the vertical segment
// {(i, y) : 0 < y < 1}; crossing it westward reads gi, eastward gi^-1.
//
// Intersection signs: eps = kDiscOrientation * sign det(d1, d2) with d1, d2
// the tangents in visit order.  The disc carries the standard orientation of
// the plane, so the constant is +1; it is named rather than inlined because
// every sign downstream (bracket, self-intersection terms, skein smoothings)
// is relative to this one choice.
inline constexpr int kDiscOrientation = 1;

struct Point {
    Rational x, y;
    bool operator==(const Point&) const = default;
};

// Piecewise-linear curve.  Closed: edge i joins points[i] to points[(i+1)%n].
// Open: edge i joins points[i] to points[i+1].
struct PLLoop {
    std::vector<Point> points;
    bool closed = true;

    std::size_t edge_count() const {
        return closed ? points.size() : (points.empty() ? 0 : points.size() - 1);
    }
};

struct PuncturedDisc {
    int p = 2;
    static Point start_mark() { return {Rational(3, 5), Rational(-1)}; }
    static Point end_mark() { return {Rational(2, 5), Rational(-1)}; }
    Point puncture(int i) const { return {Rational(i), Rational(0)}; }
};

// Sign of det(b - a, c - a): +1 left turn, -1 right turn, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);

// Position along a curve: edge index plus the fraction along that edge.
struct CurveTime {
    std::size_t edge;
    Rational s;  // in (0, 1) for crossings
    bool operator==(const CurveTime&) const = default;
    bool operator<(const CurveTime& o) const {
        return edge != o.edge ? edge < o.edge : s < o.s;
    }
};

struct SelfCrossing {
    CurveTime t1, t2;  // t1 < t2
    Point at;
    int eps;  // kDiscOrientation * sign det(dir(t1), dir(t2))
};

struct PairCrossing {
    CurveTime ta, tb;  // position on the first resp. second curve
    Point at;
    int eps;  // kDiscOrientation * sign det(dir_a, dir_b)
};

struct RayEvent {
    CurveTime t;
    Letter letter;
};

// Validated curve with its cut-ray events and transverse self-crossings,
// both sorted along the curve.
struct CurveData {
    PLLoop curve;
    int p = 0;  // puncture count the events were computed against
    std::vector<RayEvent> events;
    std::vector<SelfCrossing> crossings;
};

// Validates genericity (no zero-length edges -> InputError; no touching,
// collinear overlaps, triple points, crossings at vertices, ray crossings at
// vertices, curve through a puncture -> GenericityError) and collects data.
CurveData analyze_curve(const PLLoop& curve, int p);

// Transverse crossings between two curves (each already generic on its own);
// throws GenericityError if the pair fails mutual transversality.
std::vector<PairCrossing> cross_curves(const CurveData& a, const CurveData& b);

// Turning number of a closed PL curve: winding of its edge-direction polygon
// around the origin.  Counterclockwise convex polygons give +1.  Zero-length
// edges are an input error, a direction reversal (antiparallel consecutive
// edges) a genericity error.
int rotation_number(const PLLoop& curve);

// The word read off the cut rays.  Closed curves give the free class, open
// curves the based word of the nu-closure (nu crosses no rays).
CyclicClass loop_word(const PLLoop& curve, int p);
GroupWord path_word(const PLLoop& curve, int p);

struct SynthesisOptions {
    int layer = 0;       // 0..7: disjoint constant families for stacking
    int tweak = 0;       // internal perturbation index used by retries
    bool framing = false;  // append the writhe-balancing curl pair (skein lifts)
    int kink_variant = 0;  // alternative kink placements, same class
};

struct OpenCurve {
    PLLoop curve;  // runs start mark -> end mark, closes up with rotation 0
    int rotation_kinks = 0;    // signed count of compensating kinks inserted
    std::size_t kf_edge_begin = 0, kf_edge_end = 0;  // eps +1 framing curl edges
    std::size_t kg_edge_begin = 0, kg_edge_end = 0;  // eps -1 curl (framing only)
};

// Canonical embedded-petal representative of a based loop given by raw
// letters (not necessarily reduced).  Counterclockwise rectangle around
// puncture i for letter +i, clockwise for -i; its closure reads exactly the
// input letters.  Throws InputError for letters out of range or words too
// long for the kink corridor.
OpenCurve standard_open_path(const std::vector<Letter>& letters, int p,
                             const SynthesisOptions& opts = {});

// standard_open_path plus analysis, bumping the tweak on genericity failures
// until the curve passes.  info_out, when given, receives the synthesis
// record of the accepted attempt.
CurveData analyzed_open_path(const std::vector<Letter>& letters, int p,
                             const SynthesisOptions& opts = {}, OpenCurve* info_out = nullptr);

// Ray-event letters strictly inside (t1, t2), and the complement in curve
// order.  The complement reads the based word of the outer piece when the
// curve is open, and (up to rotation) the outer cycle when it is closed.
std::pair<std::vector<Letter>, std::vector<Letter>> split_events(
    const std::vector<RayEvent>& events, const CurveTime& t1, const CurveTime& t2);

// Event letters of a closed curve in cyclic order starting just after t.
std::vector<Letter> rotate_events(const std::vector<RayEvent>& events, const CurveTime& t);

// Closed representative of the cyclic word given by raw letters.
PLLoop standard_loop_raw(const std::vector<Letter>& letters, int p,
                         const SynthesisOptions& opts = {});

// Spec entry point: representative of a class, layer in 0..7.
PLLoop standard_loop(const CyclicClass& w, int p, int layer = 0);

// Goldman bracket, computed from transverse representatives:
//   [x, y] = sum over crossings q of  -eps(q) |x_q y_q|.
LoopCombo goldman_bracket_geometric(const LoopCombo& x, const LoopCombo& y, int p);

// Single-pair bracket from precomputed curve data (callers may cache the
// analysis when sweeping a corpus).
LoopCombo bracket_from_data(const CurveData& a, const CurveData& b);

// Self-intersection map on based loops:
//   mu(w) = sum over self-crossings (t1 < t2) of  -eps |mid| (x) rest,
// computed on the rotation-normalized canonical open representative.
TensorElement mu_geometric(const GroupWord& w, int p, const SynthesisOptions& opts = {});

// Enhanced cobracket: delta = Alt((1 (x) trace) mu) + |w| /\ |1|.
WedgeElement delta_geometric(const LoopCombo& x, int p);

}  // namespace gt
