#pragma once
#include <nlohmann/json.hpp>

#include <cstddef>
#include <string>

#include "gt/chord.hpp"
#include "gt/combo.hpp"
#include "gt/expansion.hpp"
#include "gt/graded.hpp"
#include "gt/planar.hpp"
#include "gt/skein.hpp"

namespace gt {

// Structured I/O for every public value type.  Writers emit the documented
// schemas; readers validate and throw ParseError for malformed JSON (wrong
// shape, bad numbers, unknown words) and InputError for well-formed JSON
// describing an inconsistent object (e.g. a crossing list that does not
// match the strand geometry).  Key order follows the schema examples, so
// serialization is byte-deterministic.
using Json = nlohmann::ordered_json;

// json text -> value; syntax errors become ParseError with a byte offset.
Json parse_json_text(const std::string& text);

// ---- scalars ------------------------------------------------------------
// Coefficient: {"b0":"3/2","b1":"0"}; rationals travel as strings.
Json coefficient_to_json(const Coefficient& c);
Coefficient coefficient_from_json(const Json& j);

// ---- term lists ---------------------------------------------------------
// {"terms":[{"coeff":{...},"word":"g1 g2"}]}.  Loop words may wear the
// |...| wrapper; based words must not.  Tensor terms split the key into
// "loop" and "path", wedge terms into "left" and "right".  The graded
// variants use the same shapes with letter namespace "x".
Json path_combo_to_json(const PathCombo& x);
PathCombo path_combo_from_json(const Json& j, int max_index = 0);
Json loop_combo_to_json(const LoopCombo& x);
LoopCombo loop_combo_from_json(const Json& j, int max_index = 0);
Json tensor_to_json(const TensorElement& x);
TensorElement tensor_from_json(const Json& j, int max_index = 0);
Json wedge_to_json(const WedgeElement& x);
WedgeElement wedge_from_json(const Json& j, int max_index = 0);

Json graded_to_json(const GradedElement& x);
GradedElement graded_from_json(const Json& j, int trunc, int max_index = 0);
Json cyclic_graded_to_json(const CyclicGradedElement& x);
CyclicGradedElement cyclic_graded_from_json(const Json& j, int trunc, int max_index = 0);
Json graded_tensor_to_json(const GradedTensor& x);
Json graded_wedge_to_json(const GradedWedge& x);
GradedWedge graded_wedge_from_json(const Json& j, int trunc, int max_index = 0);

// ---- curves -------------------------------------------------------------
// {"points":[["num/den","num/den"],...],"closed":true}
Json pl_loop_to_json(const PLLoop& curve);
PLLoop pl_loop_from_json(const Json& j);

// ---- tangle diagrams ----------------------------------------------------
// {"p":2,"strands":[<curve>,...],"crossings":[{"strands":[a,b],
//  "at":[{"edge":i,"s":"1/2"},...],"over":1}],"writhe":w}
// "over" is 1 (first passage over), 2 (second over) or 0 (marked).  The
// reader re-analyzes the strands and requires the crossing list to match
// the recomputed double points exactly; "writhe" is informational.
Json diagram_to_json(const TangleDiagram& d);
TangleDiagram diagram_from_json(const Json& j);

Json skein_class_to_json(const SkeinClass& c);
SkeinClass skein_class_from_json(const Json& j, int max_index = 0);
Json skein_combo_to_json(const SkeinCombo& x);
// {"word_part":[{"coeff":...,"class":...}],"b_part":[...],"emissions":n}
Json normal_form_to_json(const SkeinNormalForm& nf);

// ---- chord diagrams -----------------------------------------------------
// {"skeleton":{"circles":1,"bottoms":0,"poles":2},
//  "chords":[[[component,position],[component,position]],...],"a_power":0}
Json chord_to_json(const ChordDiagram& d);
ChordDiagram chord_from_json(const Json& j);
Json chord_word_to_json(const ChordWord& w);
Json chord_combo_to_json(const ChordCombo& x);

// ---- symbol-check reports ----------------------------------------------
// {"degree_checked":d,"lhs":...,"rhs":...,"equal":true,...}
Json bracket_report_to_json(const BracketSymbolReport& rep);
Json cobracket_report_to_json(const CobracketSymbolReport& rep);

// ---- structured errors --------------------------------------------------
// {"error":{"type":"parse","message":"...","position":12}}; position is
// null when unknown and for the non-textual error kinds.
Json error_to_json(const std::string& type, const std::string& message,
                   std::size_t position = std::string::npos);

}  // namespace gt
