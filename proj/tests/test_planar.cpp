#include <algorithm>
#include <random>

#include "doctest.h"
#include "gt/errors.hpp"
#include "gt/planar.hpp"
#include "helpers.hpp"

using namespace gt;
using gt::testing::all_reduced_words;
using gt::testing::random_reduced_word;

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

WedgeElement wedge(const CyclicClass& a, const CyclicClass& b, const Rational& c) {
    WedgeElement out;
    wedge_normalize(out, a, b, Coefficient(c));
    return out;
}

WedgeElement delta_of(const std::string& text, int p) {
    return delta_geometric(loop_combo(cyc(text)), p);
}

}  // namespace

TEST_CASE("rotation number of simple polygons") {
    // unit-ish ccw square floating left of the punctures
    auto ccw = polygon({{-8, -8}, {-4, -8}, {-4, -4}, {-8, -4}});
    CHECK(rotation_number(ccw) == 1);

    auto cw = polygon({{-8, -8}, {-8, -4}, {-4, -4}, {-4, -8}});
    CHECK(rotation_number(cw) == -1);

    // bow tie: two lobes traversed with opposite handedness
    auto eight = polygon({{-12, -8}, {-4, -8}, {-12, -4}, {-4, -4}});
    CHECK(rotation_number(eight) == 0);

    // doubling straight back along an edge is not a generic direction sequence
    auto spike = polygon({{-8, -8}, {-4, -8}, {-2, -8}, {-8, -8}, {-6, -4}});
    CHECK_THROWS_AS(rotation_number(spike), GenericityError);
}

TEST_CASE("curve validation rejects degenerate input") {
    auto repeated = polygon({{-8, -8}, {-8, -8}, {-4, -4}});
    CHECK_THROWS_AS(analyze_curve(repeated, 2), InputError);

    // vertex sitting exactly on the cut ray above puncture 1
    auto on_ray = polygon({{14, 8}, {16, 12}, {18, 8}});
    CHECK_THROWS_AS(analyze_curve(on_ray, 2), GenericityError);

    // crossing point exactly on the cut ray: X centered at (1, 1/2)
    auto x_on_ray = polygon({{14, 6}, {18, 10}, {18, 6}, {14, 10}});
    CHECK_THROWS_AS(analyze_curve(x_on_ray, 2), GenericityError);

    // triple point: three edges through (3/8, -1/2)
    auto triple = polygon({{2, -12}, {10, -4}, {10, -12}, {2, -4}, {2, -8}, {10, -8}});
    CHECK_THROWS_AS(analyze_curve(triple, 2), GenericityError);

    // leaves the disc region (above the top)
    auto outside = polygon({{-8, 8}, {-4, 40}, {-12, 12}});
    CHECK_THROWS_AS(analyze_curve(outside, 2), InputError);
}

TEST_CASE("crossing signs follow the frame orientation") {
    // Two overlapping rectangles west of puncture 1.  Walking the first one,
    // its eastbound top edge meets a southbound then a northbound edge of the
    // second, then the westbound bottom edge meets them in reverse.
    auto a = analyze_curve(polygon({{2, -8}, {14, -8}, {14, -12}, {2, -12}}), 2);
    auto b = analyze_curve(polygon({{10, -14}, {10, -6}, {6, -6}, {6, -14}}), 2);
    auto hits = cross_curves(a, b);
    REQUIRE(hits.size() == 4);
    CHECK(hits[0].eps == -1);  // det(east, south) < 0
    CHECK(hits[1].eps == 1);   // det(east, north) > 0
    CHECK(hits[2].eps == -1);  // det(west, north) < 0
    CHECK(hits[3].eps == 1);   // det(west, south) > 0
}

TEST_CASE("standard loops read back their word") {
    for (int p : {2, 3}) {
        for (const auto& w : all_reduced_words(p == 2 ? 4 : 2, p)) {
            CyclicClass cls = cyclic_canonical(w);
            for (int layer : {0, 1}) {
                PLLoop curve = standard_loop(cls, p, layer);
                CHECK(loop_word(curve, p) == cls);
            }
        }
    }
}

TEST_CASE("standard open paths read back the reduced word") {
    for (const auto& w : all_reduced_words(3, 2)) {
        OpenCurve oc = standard_open_path(w.letters, 2);
        CHECK(path_word(oc.curve, 2) == w);
    }
    // unreduced input draws every petal but reads back reduced
    OpenCurve oc = standard_open_path({1, 2, -2, 1}, 2);
    CHECK(path_word(oc.curve, 2) == grp("g1^2"));
}

TEST_CASE("open paths close up with an odd crossing count") {
    // Whitney: rotation = crossings + 1 mod 2, and the closure has rotation 0.
    for (const auto& w : all_reduced_words(3, 2)) {
        OpenCurve oc = standard_open_path(w.letters, 2);
        CurveData data = analyze_curve(oc.curve, 2);
        CHECK(data.crossings.size() % 2 == 1);
    }
}

TEST_CASE("compensating kink counts for small words") {
    CHECK(standard_open_path({}, 2).rotation_kinks == 1);
    CHECK(standard_open_path({1}, 2).rotation_kinks == 1);
    // a clockwise petal's exit strand already crosses the entry stub, so the
    // closure sits at rotation zero without help
    CHECK(standard_open_path({-1}, 2).rotation_kinks == 0);
    CHECK(standard_open_path({1, 1}, 2).rotation_kinks == 2);
    CHECK(standard_open_path({1, 2}, 2).rotation_kinks == 2);
    CHECK(standard_open_path({1, -2}, 2).rotation_kinks == 1);
}

TEST_CASE("self-intersection map on the trivial word") {
    TensorElement expected;
    expected.add({CyclicClass{}, GroupWord{}}, Coefficient(-1));
    CHECK(mu_geometric(GroupWord{}, 2) == expected);
}

TEST_CASE("self-intersection map on a generator") {
    TensorElement expected;
    expected.add({CyclicClass{}, grp("g1")}, Coefficient(-1));
    CHECK(mu_geometric(grp("g1"), 2) == expected);

    // the inverse generator's representative is a lasso: the loop factor
    // carries the petal and the path factor is trivial
    TensorElement inv;
    inv.add({cyc("g1^-1"), GroupWord{}}, Coefficient(-1));
    CHECK(mu_geometric(grp("g1^-1"), 2) == inv);
}

TEST_CASE("self-intersection map on a generator squared") {
    TensorElement expected;
    expected.add({CyclicClass{}, grp("g1^2")}, Coefficient(-2));
    expected.add({cyc("g1"), grp("g1")}, Coefficient(1));
    CHECK(mu_geometric(grp("g1^2"), 2) == expected);
}

TEST_CASE("self-intersection output is independent of synthesis knobs") {
    for (const auto& text : {"g1 g2", "g1^2 g2^-1", "g2 g1 g2"}) {
        GroupWord w = grp(text);
        TensorElement base = mu_geometric(w, 2);
        for (int variant : {1, 2}) {
            SynthesisOptions opts;
            opts.kink_variant = variant;
            CHECK(mu_geometric(w, 2, opts) == base);
        }
        SynthesisOptions layered;
        layered.layer = 1;
        CHECK(mu_geometric(w, 2, layered) == base);
    }
}

TEST_CASE("cobracket pinned values on powers of a generator") {
    CHECK(delta_geometric(loop_combo(CyclicClass{}), 2).is_zero());
    CHECK(delta_of("g1", 2) == wedge(cyc("g1"), CyclicClass{}, 2));
    CHECK(delta_of("g1^-1", 2).is_zero());
    CHECK(delta_of("g1^2", 2) == wedge(cyc("g1^2"), CyclicClass{}, 3));
    CHECK(delta_of("g1^3", 2) == wedge(cyc("g1^3"), CyclicClass{}, 4));
}

TEST_CASE("cobracket of an embedded two-puncture loop") {
    // |g1 g2| has an embedded representative, so only the single kink and the
    // framing term survive.
    CHECK(delta_of("g1 g2", 2) == wedge(cyc("g1 g2"), CyclicClass{}, 2));
}

TEST_CASE("cobracket is well-defined on conjugacy classes") {
    std::mt19937 rng(20240811);
    for (const auto& text : {"g1 g2", "g1^2 g2", "g1 g2^-1 g1"}) {
        GroupWord w = grp(text);
        TensorElement mu = mu_geometric(w, 2);
        WedgeElement base = alt_close(mu);
        wedge_normalize(base, cyclic_canonical(w), CyclicClass{}, Coefficient::one());
        for (int trial = 0; trial < 3; ++trial) {
            GroupWord u = random_reduced_word(rng, 2, 2);
            GroupWord conj = u;
            conj.letters.insert(conj.letters.end(), w.letters.begin(), w.letters.end());
            for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it)
                conj.letters.push_back(-*it);
            conj = reduce_word(conj);
            WedgeElement moved = alt_close(mu_geometric(conj, 2));
            wedge_normalize(moved, cyclic_canonical(conj), CyclicClass{}, Coefficient::one());
            CHECK(moved == base);
        }
    }
}

TEST_CASE("cobracket is linear") {
    LoopCombo x;
    x.add(cyc("g1"), Coefficient(2));
    x.add(cyc("g1^2"), Coefficient(Rational(-3)));
    WedgeElement expected = wedge(cyc("g1"), CyclicClass{}, 4);
    expected += wedge(cyc("g1^2"), CyclicClass{}, Rational(-9));
    CHECK(delta_geometric(x, 2) == expected);
}

TEST_CASE("bracket vanishes on disjoint and nested classes") {
    auto bracket = [](const std::string& a, const std::string& b, int p) {
        return goldman_bracket_geometric(loop_combo(cyclic_canonical(grp(a))),
                                         loop_combo(cyclic_canonical(grp(b))), p);
    };
    CHECK(bracket("g1", "g2", 2).is_zero());
    CHECK(bracket("g1", "g1", 2).is_zero());
    CHECK(bracket("g1^2", "g1^3", 2).is_zero());
    CHECK(bracket("g1 g2", "g1", 2).is_zero());
    CHECK(bracket("g1 g2", "g1 g2", 2).is_zero());
}

TEST_CASE("bracket is antisymmetric and nonzero on linked classes") {
    LoopCombo a = loop_combo(cyc("g1 g2^2"));
    LoopCombo b = loop_combo(cyc("g2 g3^2"));
    LoopCombo ab = goldman_bracket_geometric(a, b, 3);
    LoopCombo ba = goldman_bracket_geometric(b, a, 3);
    CHECK(!ab.is_zero());
    CHECK(ab == ba.scaled(Coefficient(Rational(-1))));
}

TEST_CASE("bracket is bilinear") {
    LoopCombo a = loop_combo(cyc("g1 g2"));
    LoopCombo b = loop_combo(cyc("g1^-1 g2"));
    LoopCombo c = loop_combo(cyc("g1"));
    LoopCombo sum = a.scaled(Coefficient(2));
    sum += b;
    LoopCombo left = goldman_bracket_geometric(sum, c, 2);
    LoopCombo right = goldman_bracket_geometric(a, c, 2).scaled(Coefficient(2));
    right += goldman_bracket_geometric(b, c, 2);
    CHECK(left == right);
}

TEST_CASE("bracket satisfies the Jacobi identity on a linked triple") {
    LoopCombo x = loop_combo(cyc("g1 g2"));
    LoopCombo y = loop_combo(cyc("g1^-1 g2"));
    LoopCombo z = loop_combo(cyc("g1"));
    auto br = [](const LoopCombo& u, const LoopCombo& v) {
        return goldman_bracket_geometric(u, v, 2);
    };
    LoopCombo total = br(br(x, y), z);
    total += br(br(y, z), x);
    total += br(br(z, x), y);
    CHECK(total.is_zero());
}

TEST_CASE("bracket ignores the presentation of the input words") {
    std::mt19937 rng(7041);
    for (int trial = 0; trial < 4; ++trial) {
        GroupWord w1 = random_reduced_word(rng, 3, 2);
        GroupWord w2 = random_reduced_word(rng, 2, 2);
        LoopCombo base = goldman_bracket_geometric(loop_combo(cyclic_canonical(w1)),
                                                   loop_combo(cyclic_canonical(w2)), 2);
        // insert a cancelling pair and a rotation: same free-homotopy classes
        GroupWord noisy = w1;
        Letter g = static_cast<Letter>(trial % 2 + 1);
        noisy.letters.insert(noisy.letters.begin() + 1, {g, -g});
        std::rotate(noisy.letters.begin(), noisy.letters.begin() + 2, noisy.letters.end());
        LoopCombo moved = goldman_bracket_geometric(loop_combo(cyclic_canonical(noisy)),
                                                    loop_combo(cyclic_canonical(w2)), 2);
        CHECK(moved == base);
    }
}
