#pragma once
#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gt/graded.hpp"
#include "gt/rational.hpp"
#include "gt/word.hpp"

namespace gt {

// Chord diagrams on a skeleton of circles, bottom intervals and poles.
// Component ids number the circles first, then the bottom intervals, then
// the poles.  A chord joins two sites; sites on the same component carry
// position indices 0..n-1 along that component (for circles the positions
// fix one rotation of the cyclic order).  Pole-pole chords are not allowed.
//
// Two gradings run through everything below: the total degree t counts
// chords plus the exponent of the framing variable a, and the self degree s
// counts strand-strand chords plus the exponent of a.  Swapping two chord
// endings that sit on the same pole costs one unit of s, so inside a fixed
// graded piece the order of endings on a pole carries no information; the
// position indices on poles are kept only so diagrams round-trip through
// serialization unchanged.

struct ChordSite {
    std::size_t component = 0;
    std::size_t position = 0;

    bool operator==(const ChordSite&) const = default;
    auto operator<=>(const ChordSite&) const = default;
};

struct ChordDiagram {
    int circles = 0;
    int bottoms = 0;
    int poles = 0;
    std::vector<std::pair<ChordSite, ChordSite>> chords;
    int a_power = 0;

    bool operator==(const ChordDiagram&) const = default;

    std::size_t components() const {
        return static_cast<std::size_t>(circles + bottoms + poles);
    }
    bool is_circle(std::size_t id) const { return id < static_cast<std::size_t>(circles); }
    bool is_bottom(std::size_t id) const {
        return id >= static_cast<std::size_t>(circles) &&
               id < static_cast<std::size_t>(circles + bottoms);
    }
    bool is_pole(std::size_t id) const {
        return id >= static_cast<std::size_t>(circles + bottoms) && id < components();
    }
    // Pole index 1..p of a pole component id.
    int pole_index(std::size_t id) const { return static_cast<int>(id) - circles - bottoms + 1; }

    int strand_strand_chords() const;
    int t_degree() const { return static_cast<int>(chords.size()) + a_power; }
    int s_degree() const { return strand_strand_chords() + a_power; }
};

// Checks component counts, site ranges, per-component position sequences
// (each component's referenced positions must be exactly 0..n-1) and the
// no-pole-pole-chord rule.  Throws InputError on any violation.
void validate_diagram(const ChordDiagram& d);

// The two quotients with word-valued normal forms: mod_s kills everything of
// self degree >= 1, mod_s2 kills self degree >= 2 and rewrites the single
// strand-strand chord of an s = 1 diagram as a times its oriented smoothing.
enum class ChordQuotient { mod_s, mod_s2 };

// Normal form value: a power of a and one pole-letter word per strand
// component, cyclic on circles (kept sorted) and linear on bottom intervals
// (kept in component order).
struct ChordWord {
    int a_power = 0;
    std::vector<CyclicClass> circles;
    std::vector<GroupWord> bottoms;

    bool operator==(const ChordWord&) const = default;
    auto operator<=>(const ChordWord&) const = default;
};

struct ChordCombo {
    std::map<ChordWord, Rational> terms;

    void add(const ChordWord& w, const Rational& c);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const ChordCombo&) const = default;
    ChordCombo& operator+=(const ChordCombo& o);
    ChordCombo& operator-=(const ChordCombo& o);
    friend ChordCombo operator+(ChordCombo a, const ChordCombo& b) { return a += b; }
    friend ChordCombo operator-(ChordCombo a, const ChordCombo& b) { return a -= b; }
    ChordCombo scaled(const Rational& s) const;
};

std::string format_chord_word(const ChordWord& w);
std::string format_chord_combo(const ChordCombo& x);

ChordCombo chord_normal_form(const ChordDiagram& d, ChordQuotient quotient);

// One 4T relation: four signed diagrams summing to zero in the diagram
// space.  A relation is generated by a strand-strand chord u = (A, B) and a
// second chord's fixed far end D; the near end is placed just after A, just
// before A, just after B and just before B with signs +, -, +, -.
using FourTermRelation = std::array<std::pair<ChordDiagram, int>, 4>;

// All 4T relation instances generated from the chord pairs of d, keeping
// every other endpoint where it is.  Only instances whose sliding endpoint
// stays on strand components exist; with the fixed chord forced onto
// strands, no emitted term can contain a pole-pole chord.
std::vector<FourTermRelation> four_t_neighbors(const ChordDiagram& d);

// Vertical mirror image with poles re-ascended: every strand component is
// reversed and the coefficient picks up (-1)^s, which includes a -> -a.
std::pair<ChordDiagram, int> flip_chord(const ChordDiagram& d);
ChordCombo flip_chord(const ChordCombo& x);

enum class LiftOrder { ascending, descending };

// Chord-diagram presentation of a monomial word on one bottom interval:
// letter k of w becomes a chord from strand position k to its pole.  The
// pole position lists follow the strand order (ascending) or oppose it
// (descending); `poles` = 0 sizes the skeleton by the largest letter.
ChordDiagram gr_lift(const GroupWord& w, LiftOrder order, int poles = 0);

// One term v t w of a formal series with a single two-strand chord t
// between pole words v and w.  The flip reverses the picture: (vtw)# = -wtv.
struct PhiTerm {
    GroupWord v;
    GroupWord w;
    Rational coeff = Rational(1);
};

PhiTerm flip_phi(const PhiTerm& x);

// Self degree 1 elements written as u t w: the strand carries the pole word
// u, then the self chord t, then the pole word w.
struct SplitTensor {
    std::map<std::pair<GroupWord, GroupWord>, Rational> terms;

    void add(const GroupWord& u, const GroupWord& w, const Rational& c);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const SplitTensor&) const = default;
    SplitTensor& operator+=(const SplitTensor& o);
    SplitTensor& operator-=(const SplitTensor& o);
    friend SplitTensor operator+(SplitTensor a, const SplitTensor& b) { return a += b; }
    friend SplitTensor operator-(SplitTensor a, const SplitTensor& b) { return a -= b; }
};

// Value of the algebraic lift: the self degree 0 part is a combination of
// plain words, the self degree 1 part a combination of split words u t w.
struct HalfElement {
    GradedElement words;
    SplitTensor chords;

    bool operator==(const HalfElement&) const = default;
};

// The corrected lift of a word d: the bare word, plus the commutator with
// the series phi, plus the framing term that puts half a self chord at the
// far end of the strand -- after d for the ascending lift, before d for the
// descending one.  Products stack pole words: b(utw) = (bu)tw, (utw)b =
// ut(wb).
HalfElement lambda_alg(const GroupWord& d, LiftOrder order, const std::vector<PhiTerm>& phi);

// Closes u t w on the interval to a pair of cycles, |w| (x) |u|, and
// antisymmetrises.  Companion of alt_close_graded for split words.
GradedWedge alt_close_split(const SplitTensor& x);

// The two cancellation residues behind the cobracket formality argument,
// both identically zero.  epsilon_one closes the commutator combination
// [b, x] - [x#, b]; epsilon_two evaluates Alt(|1| (x) |b| + |b| (x) |1|).
GradedWedge epsilon_one(const GroupWord& b, const PhiTerm& x);
GradedWedge epsilon_two(const GroupWord& b);

// Degree-by-degree comparison of (e^{C/2} - e^{-C/2}) swap with
// (e^{a/2} - e^{-a/2}) smoothing in the two-strand chord algebra, where the
// Conway relation reads a single chord as a times the swap.  Elements are
// pairs of a-polynomials split by connection: parallel strands or crossed.
struct ConwayDegree {
    int degree = 0;
    Rational lhs_parallel, lhs_crossed;
    Rational rhs_parallel, rhs_crossed;
    bool equal = false;
};

std::vector<ConwayDegree> conway_exponential_identity(int n);

}  // namespace gt
