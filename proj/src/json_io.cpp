#include "gt/json_io.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "gt/errors.hpp"

namespace gt {

namespace {

const Json& need(const Json& j, const char* key) {
    if (!j.is_object()) throw ParseError(std::string("expected an object holding '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing key '") + key + "'");
    return *it;
}

long long need_int(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_number_integer()) throw ParseError(std::string("key '") + key + "' must be an integer");
    return v.get<long long>();
}

bool need_bool(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_boolean()) throw ParseError(std::string("key '") + key + "' must be a boolean");
    return v.get<bool>();
}

std::string need_string(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_string()) throw ParseError(std::string("key '") + key + "' must be a string");
    return v.get<std::string>();
}

const Json& need_array(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_array()) throw ParseError(std::string("key '") + key + "' must be an array");
    return v;
}

Rational rational_field(const Json& j, const char* key) {
    return parse_rational(need_string(j, key));
}

// Shared readers for the four word flavours appearing inside term lists.
GroupWord based_word(const std::string& text, Alphabet alphabet, int max_index) {
    ParsedWord pw = parse_word_text(text, alphabet, max_index);
    if (pw.cyclic) throw ParseError("based word expected, got a |...| class: " + text);
    return GroupWord{pw.letters};
}

CyclicClass loop_word_of(const std::string& text, Alphabet alphabet, int max_index) {
    ParsedWord pw = parse_word_text(text, alphabet, max_index);
    return cyclic_canonical(GroupWord{pw.letters});
}

template <class Fill>
void read_terms(const Json& j, Fill&& fill) {
    const Json& terms = need_array(j, "terms");
    for (const Json& t : terms) fill(t);
}

}  // namespace

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t pos = e.byte > 0 ? e.byte - 1 : std::string::npos;
        throw ParseError(std::string("bad JSON: ") + e.what(), pos);
    }
}

Json coefficient_to_json(const Coefficient& c) {
    return Json{{"b0", format_rational(c.b0)}, {"b1", format_rational(c.b1)}};
}

Coefficient coefficient_from_json(const Json& j) {
    return {rational_field(j, "b0"), rational_field(j, "b1")};
}

// ---- term lists ---------------------------------------------------------

Json path_combo_to_json(const PathCombo& x) {
    Json terms = Json::array();
    for (const auto& [w, c] : x.terms)
        terms.push_back({{"coeff", coefficient_to_json(c)}, {"word", format_group_word(w)}});
    return Json{{"terms", terms}};
}

PathCombo path_combo_from_json(const Json& j, int max_index) {
    PathCombo r;
    read_terms(j, [&](const Json& t) {
        r.add(based_word(need_string(t, "word"), Alphabet::group, max_index),
              coefficient_from_json(need(t, "coeff")));
    });
    return r;
}

Json loop_combo_to_json(const LoopCombo& x) {
    Json terms = Json::array();
    for (const auto& [w, c] : x.terms)
        terms.push_back({{"coeff", coefficient_to_json(c)}, {"word", format_cyclic(w)}});
    return Json{{"terms", terms}};
}

LoopCombo loop_combo_from_json(const Json& j, int max_index) {
    LoopCombo r;
    read_terms(j, [&](const Json& t) {
        r.add(loop_word_of(need_string(t, "word"), Alphabet::group, max_index),
              coefficient_from_json(need(t, "coeff")));
    });
    return r;
}

Json tensor_to_json(const TensorElement& x) {
    Json terms = Json::array();
    for (const auto& [k, c] : x.terms)
        terms.push_back({{"coeff", coefficient_to_json(c)},
                         {"loop", format_cyclic(k.first)},
                         {"path", format_group_word(k.second)}});
    return Json{{"terms", terms}};
}

TensorElement tensor_from_json(const Json& j, int max_index) {
    TensorElement r;
    read_terms(j, [&](const Json& t) {
        r.add({loop_word_of(need_string(t, "loop"), Alphabet::group, max_index),
               based_word(need_string(t, "path"), Alphabet::group, max_index)},
              coefficient_from_json(need(t, "coeff")));
    });
    return r;
}

Json wedge_to_json(const WedgeElement& x) {
    Json terms = Json::array();
    for (const auto& [k, c] : x.terms)
        terms.push_back({{"coeff", coefficient_to_json(c)},
                         {"left", format_cyclic(k.first)},
                         {"right", format_cyclic(k.second)}});
    return Json{{"terms", terms}};
}

WedgeElement wedge_from_json(const Json& j, int max_index) {
    WedgeElement r;
    read_terms(j, [&](const Json& t) {
        wedge_normalize(r, loop_word_of(need_string(t, "left"), Alphabet::group, max_index),
                        loop_word_of(need_string(t, "right"), Alphabet::group, max_index),
                        coefficient_from_json(need(t, "coeff")));
    });
    return r;
}

// ---- graded variants ----------------------------------------------------

namespace {

Json rat_coeff_json(const Rational& c) {
    return Json{{"b0", format_rational(c)}, {"b1", "0"}};
}

Rational rat_coeff(const Json& j) {
    Coefficient c = coefficient_from_json(j);
    if (c.b1 != 0) throw ParseError("graded coefficients carry no b part");
    return c.b0;
}

std::string fmt_mon(const GroupWord& w) { return format_letters(w.letters, 'x'); }
std::string fmt_cyc_mon(const CyclicClass& c) {
    return "|" + format_letters(c.rep.letters, 'x') + "|";
}

}  // namespace

Json graded_to_json(const GradedElement& x) {
    Json terms = Json::array();
    for (const auto& [w, c] : x.terms)
        terms.push_back({{"coeff", rat_coeff_json(c)}, {"word", fmt_mon(w)}});
    return Json{{"terms", terms}};
}

GradedElement graded_from_json(const Json& j, int trunc, int max_index) {
    GradedElement r(trunc);
    read_terms(j, [&](const Json& t) {
        r.add(based_word(need_string(t, "word"), Alphabet::graded, max_index),
              rat_coeff(need(t, "coeff")));
    });
    return r;
}

Json cyclic_graded_to_json(const CyclicGradedElement& x) {
    Json terms = Json::array();
    for (const auto& [w, c] : x.terms)
        terms.push_back({{"coeff", rat_coeff_json(c)}, {"word", fmt_cyc_mon(w)}});
    return Json{{"terms", terms}};
}

CyclicGradedElement cyclic_graded_from_json(const Json& j, int trunc, int max_index) {
    CyclicGradedElement r(trunc);
    read_terms(j, [&](const Json& t) {
        r.add(loop_word_of(need_string(t, "word"), Alphabet::graded, max_index),
              rat_coeff(need(t, "coeff")));
    });
    return r;
}

Json graded_tensor_to_json(const GradedTensor& x) {
    Json terms = Json::array();
    for (const auto& [k, c] : x.terms)
        terms.push_back({{"coeff", rat_coeff_json(c)},
                         {"loop", fmt_cyc_mon(k.first)},
                         {"path", fmt_mon(k.second)}});
    return Json{{"terms", terms}};
}

Json graded_wedge_to_json(const GradedWedge& x) {
    Json terms = Json::array();
    for (const auto& [k, c] : x.terms)
        terms.push_back({{"coeff", rat_coeff_json(c)},
                         {"left", fmt_cyc_mon(k.first)},
                         {"right", fmt_cyc_mon(k.second)}});
    return Json{{"terms", terms}};
}

GradedWedge graded_wedge_from_json(const Json& j, int trunc, int max_index) {
    GradedWedge r;
    r.trunc = trunc;
    read_terms(j, [&](const Json& t) {
        r.add_wedge(loop_word_of(need_string(t, "left"), Alphabet::graded, max_index),
                    loop_word_of(need_string(t, "right"), Alphabet::graded, max_index),
                    rat_coeff(need(t, "coeff")));
    });
    return r;
}

// ---- curves -------------------------------------------------------------

Json pl_loop_to_json(const PLLoop& curve) {
    Json points = Json::array();
    for (const Point& q : curve.points)
        points.push_back(Json::array({format_rational(q.x), format_rational(q.y)}));
    return Json{{"points", points}, {"closed", curve.closed}};
}

PLLoop pl_loop_from_json(const Json& j) {
    PLLoop curve;
    const Json& points = need_array(j, "points");
    for (const Json& q : points) {
        if (!q.is_array() || q.size() != 2 || !q[0].is_string() || !q[1].is_string())
            throw ParseError("curve point must be a pair of rational strings");
        curve.points.push_back(
            {parse_rational(q[0].get<std::string>()), parse_rational(q[1].get<std::string>())});
    }
    curve.closed = need_bool(j, "closed");
    return curve;
}

// ---- tangle diagrams ----------------------------------------------------

namespace {

Json curve_time_to_json(const CurveTime& t) {
    return Json{{"edge", t.edge}, {"s", format_rational(t.s)}};
}

CurveTime curve_time_from_json(const Json& j) {
    long long edge = need_int(j, "edge");
    if (edge < 0) throw ParseError("edge index must be nonnegative");
    return {static_cast<std::size_t>(edge), rational_field(j, "s")};
}

int state_code(CrossingState s) {
    switch (s) {
        case CrossingState::first_over: return 1;
        case CrossingState::second_over: return 2;
        case CrossingState::marked: return 0;
    }
    throw ConsistencyError("unreachable crossing state");
}

CrossingState state_from_code(long long code) {
    switch (code) {
        case 1: return CrossingState::first_over;
        case 2: return CrossingState::second_over;
        case 0: return CrossingState::marked;
        default: throw ParseError("crossing 'over' must be 0, 1 or 2");
    }
}

}  // namespace

Json diagram_to_json(const TangleDiagram& d) {
    Json strands = Json::array();
    for (const CurveData& s : d.strands) strands.push_back(pl_loop_to_json(s.curve));
    Json crossings = Json::array();
    for (const DiagramCrossing& c : d.crossings)
        crossings.push_back({{"strands", Json::array({c.strand_a, c.strand_b})},
                             {"at", Json::array({curve_time_to_json(c.ta), curve_time_to_json(c.tb)})},
                             {"over", state_code(c.state)}});
    return Json{{"p", d.p}, {"strands", strands}, {"crossings", crossings}, {"writhe", d.writhe}};
}

TangleDiagram diagram_from_json(const Json& j) {
    TangleDiagram d;
    long long p = need_int(j, "p");
    if (p < 1) throw ParseError("'p' must be at least 1");
    d.p = static_cast<int>(p);
    for (const Json& s : need_array(j, "strands"))
        d.strands.push_back(analyze_curve(pl_loop_from_json(s), d.p));

    // Recompute the double points and require the listed crossings to cover
    // them exactly (in either strand order for mixed crossings).
    std::size_t expected = 0;
    for (const CurveData& s : d.strands) expected += s.crossings.size();
    std::map<std::pair<std::size_t, std::size_t>, std::vector<PairCrossing>> mixed;
    for (std::size_t a = 0; a < d.strands.size(); ++a)
        for (std::size_t b = a + 1; b < d.strands.size(); ++b) {
            mixed[{a, b}] = cross_curves(d.strands[a], d.strands[b]);
            expected += mixed[{a, b}].size();
        }

    std::map<std::pair<std::pair<std::size_t, CurveTime>, std::pair<std::size_t, CurveTime>>, int>
        seen;
    const Json& crossings = need_array(j, "crossings");
    for (const Json& cj : crossings) {
        const Json& strands = need_array(cj, "strands");
        const Json& at = need_array(cj, "at");
        if (strands.size() != 2 || !strands[0].is_number_integer() ||
            !strands[1].is_number_integer())
            throw ParseError("crossing 'strands' must be a pair of indices");
        if (at.size() != 2) throw ParseError("crossing 'at' must be a pair of times");
        long long sa = strands[0].get<long long>(), sb = strands[1].get<long long>();
        if (sa < 0 || sb < 0 || sa >= static_cast<long long>(d.strands.size()) ||
            sb >= static_cast<long long>(d.strands.size()))
            throw InputError("crossing strand index out of range");
        DiagramCrossing c;
        c.strand_a = static_cast<std::size_t>(sa);
        c.strand_b = static_cast<std::size_t>(sb);
        c.ta = curve_time_from_json(at[0]);
        c.tb = curve_time_from_json(at[1]);
        c.state = state_from_code(need_int(cj, "over"));
        bool found = false;
        if (c.strand_a == c.strand_b) {
            if (!(c.ta < c.tb)) throw InputError("self-crossing times out of order");
            for (const SelfCrossing& sc : d.strands[c.strand_a].crossings)
                if (sc.t1 == c.ta && sc.t2 == c.tb) {
                    c.at = sc.at;
                    c.eps = sc.eps;
                    found = true;
                    break;
                }
        } else {
            auto key = std::minmax(c.strand_a, c.strand_b);
            for (const PairCrossing& pc : mixed[{key.first, key.second}]) {
                bool direct = c.strand_a == key.first;
                const CurveTime& ta = direct ? pc.ta : pc.tb;
                const CurveTime& tb = direct ? pc.tb : pc.ta;
                if (ta == c.ta && tb == c.tb) {
                    c.at = pc.at;
                    c.eps = direct ? pc.eps : -pc.eps;
                    found = true;
                    break;
                }
            }
        }
        if (!found) throw InputError("crossing does not match the strand geometry");
        auto norm = std::make_pair(std::make_pair(c.strand_a, c.ta),
                                   std::make_pair(c.strand_b, c.tb));
        if (norm.second < norm.first) std::swap(norm.first, norm.second);
        if (seen[norm]++ > 0) throw InputError("duplicate crossing entry");
        d.crossings.push_back(c);
    }
    if (d.crossings.size() != expected)
        throw InputError("crossing list does not cover every double point");
    d.writhe = 0;
    for (const DiagramCrossing& c : d.crossings)
        if (c.state != CrossingState::marked) d.writhe += crossing_sign(c);
    return d;
}

Json skein_class_to_json(const SkeinClass& c) {
    Json circles = Json::array();
    for (const CyclicClass& w : c.circles) circles.push_back(format_cyclic(w));
    Json intervals = Json::array();
    for (const GroupWord& w : c.intervals) intervals.push_back(format_group_word(w));
    return Json{{"circles", circles}, {"intervals", intervals}};
}

SkeinClass skein_class_from_json(const Json& j, int max_index) {
    SkeinClass c;
    for (const Json& w : need_array(j, "circles")) {
        if (!w.is_string()) throw ParseError("circle entries must be word strings");
        c.circles.push_back(loop_word_of(w.get<std::string>(), Alphabet::group, max_index));
    }
    for (const Json& w : need_array(j, "intervals")) {
        if (!w.is_string()) throw ParseError("interval entries must be word strings");
        c.intervals.push_back(
            reduce_word(based_word(w.get<std::string>(), Alphabet::group, max_index)));
    }
    std::sort(c.circles.begin(), c.circles.end());
    return c;
}

Json skein_combo_to_json(const SkeinCombo& x) {
    Json terms = Json::array();
    for (const auto& [k, c] : x.terms)
        terms.push_back({{"coeff", coefficient_to_json(c)}, {"class", skein_class_to_json(k)}});
    return Json{{"terms", terms}};
}

Json normal_form_to_json(const SkeinNormalForm& nf) {
    return Json{{"word_part", skein_combo_to_json(nf.word_part)},
                {"b_part", skein_combo_to_json(nf.b_part)},
                {"emissions", nf.emissions}};
}

// ---- chord diagrams -----------------------------------------------------

namespace {

Json site_to_json(const ChordSite& s) { return Json::array({s.component, s.position}); }

ChordSite site_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw ParseError("chord site must be [component, position]");
    long long comp = j[0].get<long long>(), pos = j[1].get<long long>();
    if (comp < 0 || pos < 0) throw ParseError("chord site indices must be nonnegative");
    return {static_cast<std::size_t>(comp), static_cast<std::size_t>(pos)};
}

}  // namespace

Json chord_to_json(const ChordDiagram& d) {
    Json chords = Json::array();
    for (const auto& [a, b] : d.chords)
        chords.push_back(Json::array({site_to_json(a), site_to_json(b)}));
    return Json{{"skeleton", Json{{"circles", d.circles}, {"bottoms", d.bottoms}, {"poles", d.poles}}},
                {"chords", chords},
                {"a_power", d.a_power}};
}

ChordDiagram chord_from_json(const Json& j) {
    ChordDiagram d;
    const Json& skeleton = need(j, "skeleton");
    d.circles = static_cast<int>(need_int(skeleton, "circles"));
    d.bottoms = static_cast<int>(need_int(skeleton, "bottoms"));
    d.poles = static_cast<int>(need_int(skeleton, "poles"));
    for (const Json& cj : need_array(j, "chords")) {
        if (!cj.is_array() || cj.size() != 2) throw ParseError("chord must be a pair of sites");
        d.chords.emplace_back(site_from_json(cj[0]), site_from_json(cj[1]));
    }
    d.a_power = static_cast<int>(need_int(j, "a_power"));
    validate_diagram(d);
    return d;
}

Json chord_word_to_json(const ChordWord& w) {
    Json circles = Json::array();
    for (const CyclicClass& c : w.circles) circles.push_back(fmt_cyc_mon(c));
    Json bottoms = Json::array();
    for (const GroupWord& b : w.bottoms) bottoms.push_back(fmt_mon(b));
    return Json{{"a_power", w.a_power}, {"circles", circles}, {"bottoms", bottoms}};
}

Json chord_combo_to_json(const ChordCombo& x) {
    Json terms = Json::array();
    for (const auto& [w, c] : x.terms)
        terms.push_back({{"coeff", format_rational(c)}, {"word", chord_word_to_json(w)}});
    return Json{{"terms", terms}};
}

// ---- symbol-check reports ----------------------------------------------

Json bracket_report_to_json(const BracketSymbolReport& rep) {
    return Json{{"degree_checked", rep.degree_checked},
                {"lhs", cyclic_graded_to_json(rep.lhs)},
                {"rhs", cyclic_graded_to_json(rep.rhs)},
                {"equal", rep.equal},
                {"conclusive", rep.conclusive},
                {"low_degree_ok", rep.low_degree_ok},
                {"r", rep.r},
                {"s", rep.s},
                {"passed", rep.passed()}};
}

Json cobracket_report_to_json(const CobracketSymbolReport& rep) {
    return Json{{"degree_checked", rep.degree_checked},
                {"lhs", graded_wedge_to_json(rep.lhs)},
                {"rhs", graded_wedge_to_json(rep.rhs)},
                {"equal", rep.equal},
                {"conclusive", rep.conclusive},
                {"low_degree_ok", rep.low_degree_ok},
                {"r", rep.r},
                {"passed", rep.passed()}};
}

Json error_to_json(const std::string& type, const std::string& message, std::size_t position) {
    Json detail{{"type", type}, {"message", message}};
    if (position == std::string::npos)
        detail["position"] = nullptr;
    else
        detail["position"] = position;
    return Json{{"error", detail}};
}

}  // namespace gt
