#pragma once
#include <cstddef>
#include <utility>
#include <vector>

#include "gt/combo.hpp"
#include "gt/planar.hpp"
#include "gt/word.hpp"

namespace gt {

// Resolution of a strand-strand double point in the bottom projection.
// "first" is the passage met first: for a self-crossing that is the earlier
// parameter, for a crossing of two strands it is the passage on strand_a.
// A marked crossing is an unresolved double point (one unit of b).
enum class CrossingState { first_over, second_over, marked };

struct DiagramCrossing {
    std::size_t strand_a = 0, strand_b = 0;  // equal for self-crossings
    CurveTime ta, tb;                        // ta on strand_a, tb on strand_b; ta < tb when self
    Point at;
    int eps = 0;  // planar sign det(dir_a, dir_b), visit order
    CrossingState state = CrossingState::second_over;
};

// Sign of the resolved crossing in space: det(over direction, under
// direction).  Throws InputError on a marked crossing.
int crossing_sign(const DiagramCrossing& c);

// A tangle in the thickened disc, presented by its bottom projection: the
// underlying curves plus a resolution of every double point.  Equality is
// never needed on diagrams themselves, only on their quotient classes below.
struct TangleDiagram {
    std::vector<CurveData> strands;  // each open (bottom interval) or closed (circle)
    std::vector<DiagramCrossing> crossings;
    int writhe = 0;  // cached sum of crossing_sign over resolved crossings
    int p = 0;

    int circles() const;    // skeleton: closed components
    int intervals() const;  // skeleton: bottom-to-bottom components
    int s_degree() const;   // marked double points
};

// Framed lifts of a based word: both ride the same underlying curve (the
// canonical open representative with the framing curl pair appended) and
// differ only in crossing resolutions.  Ascending resolves every crossing
// under-first; descending resolves the curve's own crossings over-first and
// carries the framing convention on the two curls (both positive kinks).
TangleDiagram lift_ascending(const GroupWord& w, int p, const SynthesisOptions& opts = {});
TangleDiagram lift_descending(const GroupWord& w, int p, const SynthesisOptions& opts = {});

// Framed lift of a free loop: closed canonical representative, every
// crossing under-first, curls appended on the closing run until the writhe
// reaches +1.  tweak seeds the genericity retry.
TangleDiagram lift_loop_ascending(const CyclicClass& c, int p, int layer = 0, int tweak = 0);

// Union diagram with every `upper` strand crossing over every `lower`
// strand; self-crossings of each factor keep their resolutions.  Throws
// GenericityError when the factors are not mutually generic.
TangleDiagram stack(const TangleDiagram& lower, const TangleDiagram& upper);

// Mirror across the ceiling: reverses every strand, swaps over and under at
// every crossing, and trades the roles of the two endpoint marks.
TangleDiagram flip_diagram(const TangleDiagram& d);

// Class of a diagram once all crossing data is forgotten: the per-component
// homotopy words.  Circle classes are sorted; interval words keep strand
// order.
struct SkeinClass {
    std::vector<CyclicClass> circles;
    std::vector<GroupWord> intervals;
    bool operator==(const SkeinClass&) const = default;
    auto operator<=>(const SkeinClass&) const = default;
};
using SkeinCombo = Combo<SkeinClass>;

std::string format_skein_class(const SkeinClass& c);

SkeinClass diagram_class(const TangleDiagram& d);

// Oriented smoothing at crossing ci, reduced to its class: a self-crossing
// splits the strand in two, a strand-strand crossing fuses the two strands.
SkeinClass smooth_class(const TangleDiagram& d, std::size_t ci);

// b-graded normal form: classes plus b times classes (b^2 = 0 throughout).
// b_part coefficients are the multipliers of b.
struct SkeinNormalForm {
    SkeinCombo word_part;
    SkeinCombo b_part;
    int emissions = 0;  // crossing switches performed, before class merging
};

// Rewrites d to the target resolution by switching off-target crossings one
// at a time; each switch emits (sign of the crossing as currently resolved)
// times b times the smoothing at that crossing.  The default switching order
// is by (strand, first parameter); an explicit visiting order (a permutation
// of the crossing indices) may be supplied instead.  The b_part does not
// depend on the order.
SkeinNormalForm telescope_normalize(const TangleDiagram& d,
                                    const std::vector<CrossingState>& target,
                                    std::vector<std::size_t> order = {});

// Division by b on a sum of raw diagrams.  A term's total b-degree is its
// coefficient degree plus its marked double points: degree >= 2 vanishes,
// degree 1 maps to the class of the (marked point smoothed) diagram, and
// degree 0 to half the signed sum of its single smoothings.
SkeinCombo b_check(const std::vector<std::pair<TangleDiagram, Coefficient>>& x);

// Goldman bracket through the stacking commutator: telescope the mixed
// crossings of stack(K_a, K_b) to their flipped resolution and divide the
// difference by b.  Throws ConsistencyError if the word parts fail to
// cancel or a smoothing fails to close into a single circle.
LoopCombo bracket_skein(const CyclicClass& a, const CyclicClass& b, int p, int layer_a = 0,
                        int layer_b = 1);
LoopCombo bracket_skein(const LoopCombo& x, const LoopCombo& y, int p);

// Same commutator with the lifts already in hand, for sweeps that reuse one
// lift against many partners.  Throws GenericityError if the two lifts fail
// to stack transversally; callers should then re-lift with a fresh tweak.
LoopCombo bracket_skein_stacked(const TangleDiagram& ka, const TangleDiagram& kb);

// Self-intersection map through the lift difference: telescope the
// ascending lift to the descending one (curve crossings in traversal order,
// the framing curl last) and divide by b.  Satisfies
//   mu_skein(w) + |1| (x) w = mu_geometric(w).
TensorElement mu_skein(const GroupWord& w, int p, const SynthesisOptions& opts = {});

// Cobracket: close and alternate mu_skein termwise.  The framing correction
// is already inside mu_skein, so this equals delta_geometric exactly.
WedgeElement delta_skein(const LoopCombo& x, int p);

}  // namespace gt
