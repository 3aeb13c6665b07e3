#include <algorithm>
#include <random>

#include "doctest.h"
#include "gt/errors.hpp"
#include "gt/planar.hpp"
#include "gt/skein.hpp"
#include "helpers.hpp"

using namespace gt;
using gt::testing::all_reduced_words;

namespace {

GroupWord grp(const std::string& text) {
    return GroupWord{parse_word_text(text, Alphabet::group).letters};
}

CyclicClass cyc(const std::string& text) { return cyclic_canonical(grp(text)); }

PLLoop polygon(std::initializer_list<std::pair<long, long>> sixteenths, bool closed = true) {
    PLLoop out;
    for (auto [x, y] : sixteenths) out.points.push_back({Rational(x, 16), Rational(y, 16)});
    out.closed = closed;
    return out;
}

TangleDiagram closed_diagram(const PLLoop& loop, int p) {
    TangleDiagram d;
    d.p = p;
    d.strands.push_back(analyze_curve(loop, p));
    for (const auto& q : d.strands[0].crossings)
        d.crossings.push_back({0, 0, q.t1, q.t2, q.at, q.eps, CrossingState::second_over});
    for (const auto& c : d.crossings) d.writhe += crossing_sign(c);
    return d;
}

SkeinClass circles_only(std::initializer_list<std::string> texts) {
    SkeinClass cls;
    for (const auto& t : texts) cls.circles.push_back(cyc(t));
    std::sort(cls.circles.begin(), cls.circles.end());
    return cls;
}

// Stacks two loop lifts, nudging the upper one until the pair is generic.
TangleDiagram stacked_lifts(const CyclicClass& a, const CyclicClass& b, int p, int layer_a,
                            int layer_b) {
    auto lower = lift_loop_ascending(a, p, layer_a);
    for (int tweak = 0;; ++tweak) {
        try {
            return stack(lower, lift_loop_ascending(b, p, layer_b, tweak));
        } catch (const GenericityError&) {
            if (tweak >= 31) throw;
        }
    }
}

std::vector<CyclicClass> class_corpus(int max_len, int p) {
    std::vector<CyclicClass> classes;
    for (const auto& w : all_reduced_words(max_len, p)) classes.push_back(cyclic_canonical(w));
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    return classes;
}

}  // namespace

TEST_CASE("ascending lifts resolve every crossing under-first") {
    auto d = lift_ascending(grp("g1"), 2);
    REQUIRE(d.strands.size() == 1);
    CHECK_FALSE(d.strands[0].curve.closed);
    REQUIRE(d.crossings.size() == 3);  // rotation kink, ccw curl, cw curl
    int positives = 0;
    for (const auto& c : d.crossings) {
        CHECK(c.state == CrossingState::second_over);
        if (crossing_sign(c) == 1) {
            ++positives;
            CHECK(c.eps == -1);  // only the ccw curl comes out positive
        }
    }
    CHECK(positives == 1);
    CHECK(d.writhe == -1);
}

TEST_CASE("descending lift shares the curve and keeps both curls positive") {
    auto asc = lift_ascending(grp("g1"), 2);
    auto desc = lift_descending(grp("g1"), 2);
    CHECK(asc.strands[0].curve.points == desc.strands[0].curve.points);
    REQUIRE(desc.crossings.size() == 3);
    int under_first = 0;
    for (const auto& c : desc.crossings) {
        CHECK(crossing_sign(c) == 1);
        if (c.state == CrossingState::second_over) {
            ++under_first;
            CHECK(c.eps == -1);
        }
    }
    CHECK(under_first == 1);  // the ccw curl is the one unswitched crossing
    CHECK(desc.writhe == 3);
}

TEST_CASE("ascending open lifts always close up with writhe -1") {
    for (const auto& w : all_reduced_words(3, 2)) {
        auto d = lift_ascending(w, 2);
        CHECK(d.writhe == -1);
        SkeinClass cls = diagram_class(d);
        CHECK(cls.circles.empty());
        REQUIRE(cls.intervals.size() == 1);
        CHECK(cls.intervals[0] == reduce_word(w));
    }
    for (const auto& w : all_reduced_words(2, 3)) CHECK(lift_ascending(w, 3).writhe == -1);
}

TEST_CASE("loop lifts normalize the writhe to +1") {
    for (const auto& cls : class_corpus(3, 2)) {
        auto d = lift_loop_ascending(cls, 2);
        CHECK(d.writhe == 1);
        CHECK(diagram_class(d).circles == std::vector<CyclicClass>{cls});
        CHECK(diagram_class(d).intervals.empty());
    }
}

TEST_CASE("the trivial loop lift is an unknot with one positive kink") {
    auto d = lift_loop_ascending(cyc("1"), 2);
    REQUIRE(d.crossings.size() == 1);
    CHECK(crossing_sign(d.crossings[0]) == 1);
    CHECK(d.writhe == 1);
    CHECK(smooth_class(d, 0) == circles_only({"1", "1"}));
}

TEST_CASE("crossing signs come from the resolution and the frame") {
    DiagramCrossing c;
    c.eps = -1;
    c.state = CrossingState::first_over;
    CHECK(crossing_sign(c) == -1);
    c.state = CrossingState::second_over;
    CHECK(crossing_sign(c) == 1);
    c.state = CrossingState::marked;
    CHECK_THROWS_AS(crossing_sign(c), InputError);
}

TEST_CASE("telescoping with the target already reached emits nothing") {
    auto d = lift_ascending(grp("g1 g2"), 2);
    std::vector<CrossingState> target;
    for (const auto& c : d.crossings) target.push_back(c.state);
    auto nf = telescope_normalize(d, target);
    CHECK(nf.emissions == 0);
    CHECK(nf.b_part.is_zero());
    SkeinCombo expect;
    expect.add(diagram_class(d), Coefficient::one());
    CHECK(nf.word_part == expect);
}

TEST_CASE("switching the kink of the trivial loop emits one double circle") {
    auto d = lift_loop_ascending(cyc("1"), 2);
    auto nf = telescope_normalize(d, {CrossingState::first_over});
    CHECK(nf.emissions == 1);
    SkeinCombo expect;
    expect.add(circles_only({"1", "1"}), Coefficient::one());
    CHECK(nf.b_part == expect);
}

TEST_CASE("the b-part of a telescoped difference ignores the switching order") {
    auto w = grp("g1 g2^-1 g1");
    auto asc = lift_ascending(w, 2);
    auto desc = lift_descending(w, 2);
    std::vector<CrossingState> target;
    for (const auto& c : desc.crossings) target.push_back(c.state);

    auto base = telescope_normalize(asc, target);
    std::vector<std::size_t> order(asc.crossings.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937 rng(77);
    for (int trial = 0; trial < 8; ++trial) {
        std::shuffle(order.begin(), order.end(), rng);
        auto nf = telescope_normalize(asc, target, order);
        CHECK(nf.b_part == base.b_part);
        CHECK(nf.emissions == base.emissions);
    }
    CHECK_THROWS_AS(telescope_normalize(asc, target, {0, 0, 1}), InputError);
}

TEST_CASE("switching every crossing except the ccw curl emits once per switch") {
    for (const auto& w : all_reduced_words(2, 2)) {
        auto asc = lift_ascending(w, 2);
        auto desc = lift_descending(w, 2);
        std::vector<CrossingState> target;
        for (const auto& c : desc.crossings) target.push_back(c.state);
        auto nf = telescope_normalize(asc, target);
        CHECK(nf.emissions == static_cast<int>(asc.crossings.size()) - 1);
    }
}

TEST_CASE("mu of a generator and of the identity") {
    TensorElement expect;
    expect.add({cyc("1"), grp("g1")}, Coefficient(Rational(-2)));
    CHECK(mu_skein(grp("g1"), 2) == expect);

    TensorElement unit;
    unit.add({cyc("1"), grp("1")}, Coefficient(Rational(-2)));
    CHECK(mu_skein(grp("1"), 2) == unit);
}

TEST_CASE("mu from the lift difference matches the turning-point sum") {
    for (const auto& w : all_reduced_words(3, 2)) {
        TensorElement shifted = mu_skein(w, 2);
        shifted.add({cyc("1"), reduce_word(w)}, Coefficient::one());
        CHECK(shifted == mu_geometric(w, 2));
    }
    for (const auto& w : all_reduced_words(2, 3)) {
        TensorElement shifted = mu_skein(w, 3);
        shifted.add({cyc("1"), reduce_word(w)}, Coefficient::one());
        CHECK(shifted == mu_geometric(w, 3));
    }
}

TEST_CASE("mu does not depend on layer or kink placement") {
    auto w = grp("g1 g2^-1");
    auto base = mu_skein(w, 2);
    for (int layer : {1, 2}) {
        SynthesisOptions opts;
        opts.layer = layer;
        CHECK(mu_skein(w, 2, opts) == base);
    }
    for (int variant : {1, 2, 3}) {
        SynthesisOptions opts;
        opts.kink_variant = variant;
        CHECK(mu_skein(w, 2, opts) == base);
    }
}

TEST_CASE("cobracket from lifts agrees with the direct construction") {
    CHECK(delta_skein(loop_combo(cyc("1")), 2).is_zero());
    CHECK(delta_skein(loop_combo(cyc("g1^-1")), 2).is_zero());

    WedgeElement expect;
    wedge_normalize(expect, cyc("g1"), cyc("1"), Coefficient(Rational(2)));
    CHECK(delta_skein(loop_combo(cyc("g1")), 2) == expect);

    for (const auto& cls : class_corpus(3, 2))
        CHECK(delta_skein(loop_combo(cls), 2) == delta_geometric(loop_combo(cls), 2));
}

TEST_CASE("stacked loop lifts commute up to the resolved word part") {
    auto d = stacked_lifts(cyc("g1"), cyc("g2"), 2, 0, 1);
    REQUIRE(d.strands.size() == 2);
    CHECK(d.crossings.size() >= 2);
    for (const auto& c : d.crossings) {
        if (c.strand_a != c.strand_b) CHECK(c.state == CrossingState::second_over);
    }
    SkeinClass both = diagram_class(d);
    CHECK(both.circles == std::vector<CyclicClass>{cyc("g1"), cyc("g2")});
    CHECK_THROWS_AS(
        stack(lift_loop_ascending(cyc("g1"), 2), lift_loop_ascending(cyc("g1"), 3)), InputError);
}

TEST_CASE("stacking brackets agree with the crossing-sum bracket") {
    CHECK(bracket_skein(cyc("g1"), cyc("g2"), 2).is_zero());
    CHECK(bracket_skein(cyc("g1"), cyc("g1"), 2).is_zero());

    // Loops around both punctures and around one nest inside each other.
    CHECK(bracket_skein(cyc("g1 g2"), cyc("g1"), 2).is_zero());

    auto a = cyc("g1 g2^-1");
    auto b = cyc("g2 g1^-1");
    auto direct = goldman_bracket_geometric(loop_combo(a), loop_combo(b), 2);
    LoopCombo commutators;
    commutators.add(cyc("g1 g2 g1^-1 g2^-1"), Coefficient::one());
    commutators.add(cyc("g1 g2^-1 g1^-1 g2"), Coefficient(Rational(-1)));
    CHECK(direct == commutators);
    CHECK(bracket_skein(a, b, 2) == direct);

    for (const auto& x : class_corpus(2, 2))
        for (const auto& y : class_corpus(2, 2))
            CHECK(bracket_skein(x, y, 2) ==
                  goldman_bracket_geometric(loop_combo(x), loop_combo(y), 2));
}

TEST_CASE("the bracket does not care which layers the lifts use") {
    auto a = cyc("g1 g2");
    auto b = cyc("g2^-1 g1");
    auto base = bracket_skein(a, b, 2, 0, 1);
    CHECK(bracket_skein(a, b, 2, 1, 0) == base);
    CHECK(bracket_skein(a, b, 2, 2, 5) == base);
    CHECK_THROWS_AS(bracket_skein(a, b, 2, 3, 3), InputError);
}

TEST_CASE("b-degree-one readout of resolved and marked diagrams") {
    auto d = lift_loop_ascending(cyc("g1"), 2);

    SkeinCombo from_b;
    from_b.add(diagram_class(d), Coefficient::one());
    CHECK(b_check({{d, Coefficient::one().times_b()}}) == from_b);
    CHECK(b_check({{d, Coefficient::one().times_b().times_b()}}).is_zero());

    auto unknot = lift_loop_ascending(cyc("1"), 2);
    SkeinCombo half;
    half.add(circles_only({"1", "1"}), Coefficient(Rational(1, 2)));
    CHECK(b_check({{unknot, Coefficient::one()}}) == half);

    auto marked = lift_ascending(grp("g1"), 2);
    marked.crossings[1].state = CrossingState::marked;
    SkeinCombo expect;
    expect.add(smooth_class(marked, 1), Coefficient::one());
    CHECK(b_check({{marked, Coefficient::one()}}) == expect);

    auto doubly = lift_ascending(grp("g1"), 2);
    doubly.crossings[0].state = CrossingState::marked;
    doubly.crossings[1].state = CrossingState::marked;
    CHECK(b_check({{doubly, Coefficient::one()}}).is_zero());
}

TEST_CASE("b-degree-one readout is blind to a poked finger") {
    auto plain = closed_diagram(polygon({{8, -8}, {24, -8}, {24, 8}, {8, 8}}), 2);
    auto poked = closed_diagram(polygon({{8, -8},
                                         {24, -8},
                                         {24, 8},
                                         {11, 8},
                                         {11, -11},
                                         {9, -11},
                                         {9, 8},
                                         {8, 8}}),
                                2);
    REQUIRE(plain.crossings.empty());
    REQUIRE(poked.crossings.size() == 2);
    CHECK(diagram_class(plain) == diagram_class(poked));
    CHECK(b_check({{plain, Coefficient::one()}}) == b_check({{poked, Coefficient::one()}}));
    CHECK(b_check({{plain, Coefficient::one().times_b()}}) ==
          b_check({{poked, Coefficient::one().times_b()}}));
}

TEST_CASE("b-degree-one readout is blind to sliding a strand over a crossing") {
    auto low = closed_diagram(
        polygon({{4, -6}, {20, 12}, {20, -4}, {4, 10}, {4, 1}, {19, 1}, {19, -6}}), 2);
    auto high = closed_diagram(
        polygon({{4, -6}, {20, 12}, {20, -4}, {4, 10}, {4, 5}, {19, 5}, {19, -6}}), 2);
    REQUIRE(low.crossings.size() == 4);
    REQUIRE(high.crossings.size() == 4);
    CHECK(diagram_class(low) == diagram_class(high));
    auto readout = b_check({{low, Coefficient::one()}});
    CHECK_FALSE(readout.is_zero());
    CHECK(readout == b_check({{high, Coefficient::one()}}));
}

TEST_CASE("flipping a diagram reverses words and negates the writhe") {
    auto d = lift_ascending(grp("g1 g2"), 2);
    auto f = flip_diagram(d);
    CHECK(f.writhe == -d.writhe);
    SkeinClass cls = diagram_class(f);
    REQUIRE(cls.intervals.size() == 1);
    CHECK(cls.intervals[0] == grp("g2^-1 g1^-1"));
    // Self-crossing resolutions ride along: the flip of an ascending lift
    // still resolves every self-crossing under-first.
    for (const auto& c : f.crossings) CHECK(c.state == CrossingState::second_over);

    auto ff = flip_diagram(f);
    CHECK(ff.writhe == d.writhe);
    CHECK(ff.strands[0].curve.points == d.strands[0].curve.points);
    CHECK(diagram_class(ff) == diagram_class(d));
}

TEST_CASE("flipping a stack hands the crossings to the other strand") {
    auto d = stacked_lifts(cyc("g1"), cyc("g2"), 2, 0, 1);
    auto f = flip_diagram(d);
    CHECK(f.writhe == -d.writhe);
    for (const auto& c : f.crossings) {
        if (c.strand_a != c.strand_b) CHECK(c.state == CrossingState::first_over);
    }
}
