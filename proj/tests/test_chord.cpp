#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "gt/chord.hpp"
#include "gt/errors.hpp"
#include "helpers.hpp"

using namespace gt;

namespace {

GroupWord mon(const std::string& text) {
    return GroupWord{parse_word_text(text, Alphabet::graded).letters};
}

CyclicClass cyc(const std::string& text) { return cyclic_canonical(mon(text)); }

// One circle (or one bottom interval) whose position k is chord-tied to the
// pole named by letters[k].
ChordDiagram pole_strand(bool circle, const std::vector<int>& letters, int poles = 0) {
    for (int l : letters) poles = std::max(poles, l);
    ChordDiagram d;
    d.circles = circle ? 1 : 0;
    d.bottoms = circle ? 0 : 1;
    d.poles = poles;
    std::vector<std::size_t> next(static_cast<std::size_t>(poles), 0);
    for (std::size_t k = 0; k < letters.size(); ++k) {
        std::size_t pole = static_cast<std::size_t>(letters[k]) - 1;
        d.chords.push_back({ChordSite{0, k}, ChordSite{1 + pole, next[pole]++}});
    }
    return d;
}

ChordWord word_of(std::vector<std::string> circles, std::vector<std::string> bottoms,
                  int a_power = 0) {
    ChordWord w;
    w.a_power = a_power;
    for (const auto& c : circles) w.circles.push_back(cyc(c));
    std::sort(w.circles.begin(), w.circles.end());
    for (const auto& b : bottoms) w.bottoms.push_back(mon(b));
    return w;
}

ChordCombo single(const ChordWord& w, Rational c = 1) {
    ChordCombo out;
    out.add(w, c);
    return out;
}

// Every admissible diagram with the given chord count on a one-strand
// skeleton: each chord is either strand-strand or runs to one of the poles,
// and the strand endpoints take every possible order.
std::vector<ChordDiagram> one_strand_diagrams(bool circle, int chords, int poles) {
    std::vector<ChordDiagram> out;
    std::vector<int> type(static_cast<std::size_t>(chords), 0);  // 0 = ss, i = pole i
    while (true) {
        std::vector<std::pair<int, int>> tokens;  // (chord, end) on the strand
        for (int k = 0; k < chords; ++k) {
            tokens.push_back({k, 0});
            if (type[static_cast<std::size_t>(k)] == 0) tokens.push_back({k, 1});
        }
        std::sort(tokens.begin(), tokens.end());
        do {
            ChordDiagram d;
            d.circles = circle ? 1 : 0;
            d.bottoms = circle ? 0 : 1;
            d.poles = poles;
            d.chords.resize(static_cast<std::size_t>(chords));
            std::vector<std::size_t> next(static_cast<std::size_t>(poles), 0);
            for (std::size_t pos = 0; pos < tokens.size(); ++pos) {
                auto [k, end] = tokens[pos];
                auto& chord = d.chords[static_cast<std::size_t>(k)];
                (end == 0 ? chord.first : chord.second) = ChordSite{0, pos};
            }
            for (int k = 0; k < chords; ++k) {
                int t = type[static_cast<std::size_t>(k)];
                if (t > 0) {
                    std::size_t pole = static_cast<std::size_t>(t) - 1;
                    d.chords[static_cast<std::size_t>(k)].second =
                        ChordSite{1 + pole, next[pole]++};
                }
            }
            out.push_back(std::move(d));
        } while (std::next_permutation(tokens.begin(), tokens.end()));
        // Odometer over chord types.
        int k = 0;
        while (k < chords && ++type[static_cast<std::size_t>(k)] > poles)
            type[static_cast<std::size_t>(k++)] = 0;
        if (k == chords) break;
    }
    return out;
}

}  // namespace

TEST_CASE("diagram validation") {
    ChordDiagram good = pole_strand(true, {1, 2});
    CHECK_NOTHROW(validate_diagram(good));
    CHECK(good.t_degree() == 2);
    CHECK(good.s_degree() == 0);

    ChordDiagram pole_pole = good;
    pole_pole.chords.push_back({ChordSite{1, 1}, ChordSite{2, 1}});
    CHECK_THROWS_AS(validate_diagram(pole_pole), InputError);

    ChordDiagram gapped = good;
    gapped.chords[1].first.position = 5;
    CHECK_THROWS_AS(validate_diagram(gapped), InputError);

    ChordDiagram stray = good;
    stray.chords[0].second.component = 9;
    CHECK_THROWS_AS(validate_diagram(stray), InputError);

    ChordDiagram negative = good;
    negative.a_power = -1;
    CHECK_THROWS_AS(validate_diagram(negative), InputError);
}

TEST_CASE("pole-word readout of a circle diagram") {
    ChordDiagram d = pole_strand(true, {3, 3, 2, 2, 1, 1, 2, 3});
    auto nf = chord_normal_form(d, ChordQuotient::mod_s);
    CHECK(nf == single(word_of({"x3^2 x2^2 x1^2 x2 x3"}, {})));
    CHECK(format_chord_combo(nf) == "|x1^2 x2 x3^3 x2^2|");

    // The order in which endings sit on each pole carries no information.
    ChordDiagram shuffled = d;
    std::swap(shuffled.chords[0].second.position, shuffled.chords[1].second.position);
    std::swap(shuffled.chords[2].second.position, shuffled.chords[6].second.position);
    CHECK(chord_normal_form(shuffled, ChordQuotient::mod_s) == nf);

    CHECK(chord_normal_form(pole_strand(false, {1, 2, 1}), ChordQuotient::mod_s) ==
          single(word_of({}, {"x1 x2 x1"})));
}

TEST_CASE("self chords and framing die in the pole-word quotient") {
    ChordDiagram selfed = pole_strand(true, {1});
    selfed.chords.push_back({ChordSite{0, 1}, ChordSite{0, 2}});
    CHECK(chord_normal_form(selfed, ChordQuotient::mod_s).is_zero());
    CHECK_FALSE(chord_normal_form(selfed, ChordQuotient::mod_s2).is_zero());

    ChordDiagram framed = pole_strand(true, {1});
    framed.a_power = 1;
    CHECK(chord_normal_form(framed, ChordQuotient::mod_s).is_zero());
    CHECK(chord_normal_form(framed, ChordQuotient::mod_s2) == single(word_of({"x1"}, {}, 1)));
}

TEST_CASE("conway smoothing of a self chord on one strand") {
    // Interval [S A S B]: the middle closes to a circle, the tail stays.
    ChordDiagram d;
    d.bottoms = 1;
    d.poles = 2;
    d.chords = {{ChordSite{0, 0}, ChordSite{0, 2}},
                {ChordSite{0, 1}, ChordSite{1, 0}},
                {ChordSite{0, 3}, ChordSite{2, 0}}};
    CHECK(chord_normal_form(d, ChordQuotient::mod_s2) == single(word_of({"x1"}, {"x2"}, 1)));

    // Adjacent endpoints pinch off an empty circle.
    ChordDiagram kink;
    kink.bottoms = 1;
    kink.poles = 1;
    kink.chords = {{ChordSite{0, 1}, ChordSite{0, 2}}, {ChordSite{0, 0}, ChordSite{1, 0}}};
    CHECK(chord_normal_form(kink, ChordQuotient::mod_s2) == single(word_of({"1"}, {"x1"}, 1)));

    // On a circle the self chord splits both arcs into circles.
    ChordDiagram split = pole_strand(true, {1, 2});
    split.chords.push_back({ChordSite{0, 2}, ChordSite{0, 3}});
    std::swap(split.chords[1].first.position, split.chords[2].first.position);
    // Circle order is now [p1, S, p2, S]: arcs carry x2 and x1.
    CHECK(chord_normal_form(split, ChordQuotient::mod_s2) ==
          single(word_of({"x1", "x2"}, {}, 1)));
}

TEST_CASE("conway smoothing across strand components") {
    // Parallel intervals tied by one self chord exchange their tails.
    ChordDiagram par;
    par.bottoms = 2;
    par.poles = 2;
    par.chords = {{ChordSite{0, 1}, ChordSite{1, 0}},
                  {ChordSite{0, 0}, ChordSite{2, 0}},
                  {ChordSite{1, 1}, ChordSite{3, 0}}};
    CHECK(chord_normal_form(par, ChordQuotient::mod_s2) ==
          single(word_of({}, {"x1 x2", "1"}, 1)));

    // Two circles fuse into one.
    ChordDiagram fuse;
    fuse.circles = 2;
    fuse.poles = 2;
    fuse.chords = {{ChordSite{0, 1}, ChordSite{1, 1}},
                   {ChordSite{0, 0}, ChordSite{2, 0}},
                   {ChordSite{1, 0}, ChordSite{3, 0}}};
    CHECK(chord_normal_form(fuse, ChordQuotient::mod_s2) == single(word_of({"x1 x2"}, {}, 1)));

    // A circle spliced into an interval at the chord point.
    ChordDiagram splice;
    splice.circles = 1;
    splice.bottoms = 1;
    splice.poles = 3;
    splice.chords = {{ChordSite{1, 1}, ChordSite{0, 0}},
                     {ChordSite{1, 0}, ChordSite{2, 0}},
                     {ChordSite{1, 2}, ChordSite{3, 0}},
                     {ChordSite{0, 1}, ChordSite{4, 0}}};
    CHECK(chord_normal_form(splice, ChordQuotient::mod_s2) ==
          single(word_of({}, {"x1 x3 x2"}, 1)));
}

TEST_CASE("self degree at least two is zero in both quotients") {
    ChordDiagram two_self;
    two_self.circles = 1;
    two_self.chords = {{ChordSite{0, 0}, ChordSite{0, 2}}, {ChordSite{0, 1}, ChordSite{0, 3}}};
    CHECK(chord_normal_form(two_self, ChordQuotient::mod_s).is_zero());
    CHECK(chord_normal_form(two_self, ChordQuotient::mod_s2).is_zero());

    ChordDiagram framed_self = pole_strand(true, {1});
    framed_self.chords.push_back({ChordSite{0, 1}, ChordSite{0, 2}});
    framed_self.a_power = 1;
    CHECK(chord_normal_form(framed_self, ChordQuotient::mod_s2).is_zero());

    ChordDiagram doubly_framed = pole_strand(true, {1});
    doubly_framed.a_power = 2;
    CHECK(chord_normal_form(doubly_framed, ChordQuotient::mod_s2).is_zero());
}

TEST_CASE("4T relations: shape of the emitted instances") {
    ChordDiagram d = pole_strand(true, {1, 2});
    d.chords.push_back({ChordSite{0, 2}, ChordSite{0, 3}});
    auto rels = four_t_neighbors(d);
    // One strand-strand chord to fix; each pole chord has one sliding end.
    CHECK(rels.size() == 2);
    for (const auto& rel : rels)
        for (const auto& [term, sign] : rel) {
            CHECK((sign == 1 || sign == -1));
            CHECK(term.t_degree() == d.t_degree());
            CHECK_NOTHROW(validate_diagram(term));
            for (const auto& [a, b] : term.chords)
                CHECK_FALSE((term.is_pole(a.component) && term.is_pole(b.component)));
        }

    // No strand-strand chord, no instances.
    CHECK(four_t_neighbors(pole_strand(true, {1, 2, 1})).empty());
}

TEST_CASE("4T relations: normal forms are invariant, exhaustively") {
    long instances = 0;
    long live_sums = 0;
    for (bool circle : {true, false})
        for (int chords : {2, 3})
            for (const ChordDiagram& d : one_strand_diagrams(circle, chords, 3))
                for (const auto& rel : four_t_neighbors(d)) {
                    ++instances;
                    ChordCombo pole_sum, conway_sum;
                    bool nonzero_term = false;
                    for (const auto& [term, sign] : rel) {
                        pole_sum += chord_normal_form(term, ChordQuotient::mod_s)
                                        .scaled(sign);
                        auto part = chord_normal_form(term, ChordQuotient::mod_s2);
                        if (!part.is_zero()) nonzero_term = true;
                        conway_sum += part.scaled(sign);
                    }
                    if (nonzero_term) ++live_sums;
                    CHECK(pole_sum.is_zero());
                    CHECK(conway_sum.is_zero());
                }
    CHECK(instances > 10000);
    // The checks must not pass for want of content: many instances have
    // individually nonzero terms whose smoothings cancel.
    CHECK(live_sums > 1000);
}

TEST_CASE("flip reverses strands and counts self degree") {
    auto [flipped, sign] = flip_chord(pole_strand(false, {1, 2, 3}));
    CHECK(sign == 1);
    CHECK(chord_normal_form(flipped, ChordQuotient::mod_s) ==
          single(word_of({}, {"x3 x2 x1"})));

    ChordDiagram selfed = pole_strand(false, {1, 2});
    selfed.chords.push_back({ChordSite{0, 2}, ChordSite{0, 3}});
    auto [once, s1] = flip_chord(selfed);
    CHECK(s1 == -1);
    auto [twice, s2] = flip_chord(once);
    CHECK(s2 == -1);
    CHECK(twice == selfed);
}

TEST_CASE("flip commutes with normal forms over a corpus") {
    for (bool circle : {true, false})
        for (const ChordDiagram& d : one_strand_diagrams(circle, 2, 2)) {
            auto [flipped, sign] = flip_chord(d);
            for (auto q : {ChordQuotient::mod_s, ChordQuotient::mod_s2})
                CHECK(chord_normal_form(flipped, q).scaled(sign) ==
                      flip_chord(chord_normal_form(d, q)));
        }
}

TEST_CASE("flip of normal-form words") {
    ChordCombo x = single(word_of({"x1 x2 x3"}, {"x1 x2"}, 1), Rational(2));
    ChordCombo expect = single(word_of({"x3 x2 x1"}, {"x2 x1"}, 1), Rational(-2));
    CHECK(flip_chord(x) == expect);
    CHECK(flip_chord(flip_chord(x)) == x);

    // s = 0 words keep their sign.
    ChordCombo plain = single(word_of({}, {"x1 x2"}));
    CHECK(flip_chord(plain) == single(word_of({}, {"x2 x1"})));
}

TEST_CASE("phi terms flip to minus the reversed term") {
    PhiTerm x{mon("x2"), mon("x3"), Rational(5)};
    PhiTerm xf = flip_phi(x);
    CHECK(xf.v == mon("x3"));
    CHECK(xf.w == mon("x2"));
    CHECK(xf.coeff == -5);
    PhiTerm back = flip_phi(xf);
    CHECK(back.v == x.v);
    CHECK(back.w == x.w);
    CHECK(back.coeff == x.coeff);
}

TEST_CASE("graded lifts of words") {
    GroupWord w = mon("x1 x2 x1");
    ChordDiagram asc = gr_lift(w, LiftOrder::ascending);
    CHECK(asc.poles == 2);
    CHECK(chord_normal_form(asc, ChordQuotient::mod_s) == single(word_of({}, {"x1 x2 x1"})));

    ChordDiagram desc = gr_lift(w, LiftOrder::descending);
    CHECK(asc != desc);  // pole 1 numbers its endings the other way round
    for (auto q : {ChordQuotient::mod_s, ChordQuotient::mod_s2})
        CHECK(chord_normal_form(asc, q) == chord_normal_form(desc, q));

    // Distinct letters leave nothing to reorder.
    CHECK(gr_lift(mon("x1 x2"), LiftOrder::ascending) ==
          gr_lift(mon("x1 x2"), LiftOrder::descending));

    ChordDiagram empty = gr_lift(GroupWord{}, LiftOrder::ascending);
    CHECK(empty.chords.empty());
    CHECK(chord_normal_form(empty, ChordQuotient::mod_s) == single(word_of({}, {"1"})));

    CHECK(gr_lift(w, LiftOrder::ascending, 5).poles == 5);
    CHECK(chord_normal_form(gr_lift(w, LiftOrder::ascending, 5), ChordQuotient::mod_s) ==
          single(word_of({}, {"x1 x2 x1"})));
    CHECK_THROWS_AS(gr_lift(w, LiftOrder::ascending, 1), InputError);
    CHECK_THROWS_AS(gr_lift(GroupWord{{1, -2}}, LiftOrder::ascending), InputError);
}

TEST_CASE("algebraic lift with an empty series") {
    GroupWord d = mon("x1 x2");
    HalfElement asc = lambda_alg(d, LiftOrder::ascending, {});
    HalfElement expect;
    expect.words.trunc = asc.words.trunc;
    expect.words.add(d, 1);
    expect.chords.add(d, GroupWord{}, Rational(1, 2));
    CHECK(asc == expect);

    HalfElement desc = lambda_alg(d, LiftOrder::descending, {});
    SplitTensor desc_chords;
    desc_chords.add(GroupWord{}, d, Rational(1, 2));
    CHECK(desc.words == expect.words);
    CHECK(desc.chords == desc_chords);

    // The two directions differ exactly by where the half chord sits.
    SplitTensor framing = asc.chords;
    framing -= desc.chords;
    SplitTensor expect_framing;
    expect_framing.add(d, GroupWord{}, Rational(1, 2));
    expect_framing.add(GroupWord{}, d, Rational(-1, 2));
    CHECK(framing == expect_framing);
}

TEST_CASE("algebraic lift of the empty word sees no commutator") {
    PhiTerm x{mon("x2"), mon("x3"), Rational(7)};
    HalfElement lift = lambda_alg(GroupWord{}, LiftOrder::ascending, {x});
    SplitTensor only_framing;
    only_framing.add(GroupWord{}, GroupWord{}, Rational(1, 2));
    CHECK(lift.chords == only_framing);
}

TEST_CASE("algebraic lift stacks pole words through the series") {
    GroupWord d = mon("x1");
    PhiTerm x{mon("x2"), mon("x3"), Rational(3)};
    HalfElement asc = lambda_alg(d, LiftOrder::ascending, {x});
    SplitTensor expect;
    expect.add(mon("x1 x2"), mon("x3"), Rational(3));
    expect.add(mon("x2"), mon("x3 x1"), Rational(-3));
    expect.add(d, GroupWord{}, Rational(1, 2));
    CHECK(asc.chords == expect);

    HalfElement desc = lambda_alg(d, LiftOrder::descending, {x});
    SplitTensor expect_desc;
    expect_desc.add(mon("x3"), mon("x2 x1"), Rational(-3));
    expect_desc.add(mon("x1 x3"), mon("x2"), Rational(3));
    expect_desc.add(GroupWord{}, d, Rational(1, 2));
    CHECK(desc.chords == expect_desc);
}

TEST_CASE("closing split words alternates the two cycles") {
    SplitTensor t;
    t.add(mon("x1"), mon("x2 x3"), Rational(1));
    GradedWedge closed = alt_close_split(t);
    CHECK_FALSE(closed.is_zero());
    // Alt(|x2 x3| (x) |x1|) lands on one wedge pair with weight 2.
    GradedWedge expect;
    expect.trunc = closed.trunc;
    expect.add_wedge(cyc("x2 x3"), cyc("x1"), 2);
    CHECK(closed == expect);

    // Symmetric splits close to zero.
    SplitTensor sym;
    sym.add(mon("x1"), mon("x1"), Rational(4));
    CHECK(alt_close_split(sym).is_zero());
}

TEST_CASE("commutator cancellation closes to zero") {
    CHECK(epsilon_one(mon("x1"), {mon("x2"), mon("x3"), Rational(1)}).is_zero());

    // Half of the combination alone does not cancel: the test has teeth.
    SplitTensor half;
    half.add(mon("x1 x2"), mon("x3"), Rational(1));
    half.add(mon("x2"), mon("x3 x1"), Rational(-1));
    CHECK_FALSE(alt_close_split(half).is_zero());

    std::mt19937 rng(20260823);
    std::uniform_int_distribution<int> len(0, 4), letter(1, 3), weight(1, 9);
    for (int trial = 0; trial < 200; ++trial) {
        auto random_mon = [&] {
            GroupWord w;
            int n = len(rng);
            for (int i = 0; i < n; ++i) w.letters.push_back(letter(rng));
            return w;
        };
        PhiTerm x{random_mon(), random_mon(), Rational(weight(rng))};
        CHECK(epsilon_one(random_mon(), x).is_zero());
    }
}

TEST_CASE("framing cancellation closes to zero") {
    CHECK(epsilon_two(mon("x1 x2")).is_zero());
    CHECK(epsilon_two(GroupWord{}).is_zero());

    // Without the symmetrising partner the same closure survives.
    GradedWedge lone;
    lone.add_wedge(cyc("1"), cyc("x1 x2"), 1);
    lone.add_wedge(cyc("x1 x2"), cyc("1"), -1);
    CHECK_FALSE(lone.is_zero());

    std::mt19937 rng(4096);
    std::uniform_int_distribution<int> len(0, 4), letter(1, 3);
    for (int trial = 0; trial < 100; ++trial) {
        GroupWord w;
        int n = len(rng);
        for (int i = 0; i < n; ++i) w.letters.push_back(letter(rng));
        CHECK(epsilon_two(w).is_zero());
    }
}

TEST_CASE("conway exponential identity degree by degree") {
    auto report = conway_exponential_identity(5);
    REQUIRE(report.size() == 6);
    for (const auto& row : report) {
        CHECK(row.equal);
        CHECK(row.lhs_crossed == 0);
        CHECK(row.rhs_crossed == 0);
        if (row.degree % 2 == 0) CHECK(row.lhs_parallel == 0);
    }
    CHECK(report[1].lhs_parallel == 1);
    CHECK(report[3].lhs_parallel == Rational(1, 24));
    CHECK(report[5].lhs_parallel == Rational(1, 1920));

    auto linear = conway_exponential_identity(1);
    REQUIRE(linear.size() == 2);
    CHECK(linear[1].lhs_parallel == 1);
    CHECK(linear[1].equal);

    CHECK_THROWS_AS(conway_exponential_identity(0), InputError);
}

TEST_CASE("chord word formatting") {
    CHECK(format_chord_word(word_of({"x1"}, {"x2 x3"}, 1)) == "a |x1| (x2 x3)");
    CHECK(format_chord_word(word_of({"1"}, {"1"})) == "|1| (1)");
    CHECK(format_chord_word(ChordWord{}) == "1");
    CHECK(format_chord_combo(ChordCombo{}) == "0");
    ChordCombo mixed = single(word_of({}, {"x1"}), Rational(1, 2));
    mixed.add(word_of({}, {"x2"}), Rational(-1));
    CHECK(format_chord_combo(mixed) == "1/2 (x1) - (x2)");
}
