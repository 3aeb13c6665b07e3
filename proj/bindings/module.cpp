#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "gt/chord.hpp"
#include "gt/cli.hpp"
#include "gt/combo.hpp"
#include "gt/errors.hpp"
#include "gt/expansion.hpp"
#include "gt/graded.hpp"
#include "gt/json_io.hpp"
#include "gt/planar.hpp"
#include "gt/skein.hpp"
#include "gt/word.hpp"

namespace py = pybind11;
using namespace gt;

namespace {

// The python surface mirrors the CLI: words and results travel as the same
// strings the command line accepts and prints, with fmt="json" switching the
// result to the documented JSON encoding.

CyclicClass loop_arg(const std::string& text, int p) {
    return cyclic_canonical(GroupWord{parse_word_text(text, Alphabet::group, p).letters});
}

GroupWord path_arg(const std::string& text, int p) {
    ParsedWord pw = parse_word_text(text, Alphabet::group, p);
    if (pw.cyclic) throw InputError("a based word is required, not a |...| class");
    return GroupWord{pw.letters};
}

std::vector<Letter> graded_arg(const std::string& text, int p, int trunc, bool based) {
    ParsedWord pw = parse_word_text(text, Alphabet::graded, p);
    if (based && pw.cyclic) throw InputError("a based word is required, not a |...| class");
    if (static_cast<int>(pw.letters.size()) > trunc)
        throw InputError("word length exceeds the truncation degree; raise trunc");
    return pw.letters;
}

std::string render(const std::string& fmt, const std::string& text, const Json& j) {
    if (fmt == "json") return j.dump();
    if (fmt == "text") return text;
    throw InputError("fmt must be \"text\" or \"json\"");
}

std::string py_bracket(const std::string& a, const std::string& b, int p,
                       const std::string& model, int trunc, const std::string& fmt) {
    if (model == "graded") {
        CyclicGradedElement ea(trunc), eb(trunc);
        ea.add(cyclic_canonical(GroupWord{graded_arg(a, p, trunc, false)}), 1);
        eb.add(cyclic_canonical(GroupWord{graded_arg(b, p, trunc, false)}), 1);
        CyclicGradedElement r = gr_bracket(ea, eb);
        return render(fmt, format_cyclic_graded(r), cyclic_graded_to_json(r));
    }
    LoopCombo x = loop_combo(loop_arg(a, p));
    LoopCombo y = loop_combo(loop_arg(b, p));
    LoopCombo r;
    if (model == "skein")
        r = bracket_skein(x, y, p);
    else if (model == "geometric")
        r = goldman_bracket_geometric(x, y, p);
    else
        throw InputError("model must be \"geometric\", \"skein\", or \"graded\"");
    return render(fmt, format_loop_combo(r), loop_combo_to_json(r));
}

std::string py_mu(const std::string& w, int p, const std::string& model, int trunc,
                  const std::string& fmt) {
    if (model == "graded") {
        GradedElement e(trunc);
        e.add(GroupWord{graded_arg(w, p, trunc, true)}, 1);
        GradedTensor r = gr_mu(e);
        return render(fmt, format_graded_tensor(r), graded_tensor_to_json(r));
    }
    GroupWord word = path_arg(w, p);
    TensorElement r;
    if (model == "skein")
        r = mu_skein(word, p);
    else if (model == "geometric")
        r = mu_geometric(word, p);
    else
        throw InputError("model must be \"geometric\", \"skein\", or \"graded\"");
    return render(fmt, format_tensor(r), tensor_to_json(r));
}

std::string py_cobracket(const std::string& w, int p, const std::string& model, int trunc,
                         const std::string& fmt) {
    if (model == "graded") {
        CyclicGradedElement e(trunc);
        e.add(cyclic_canonical(GroupWord{graded_arg(w, p, trunc, false)}), 1);
        GradedWedge r = gr_delta(e);
        return render(fmt, format_graded_wedge(r), graded_wedge_to_json(r));
    }
    LoopCombo x = loop_combo(loop_arg(w, p));
    WedgeElement r;
    if (model == "skein")
        r = delta_skein(x, p);
    else if (model == "geometric")
        r = delta_geometric(x, p);
    else
        throw InputError("model must be \"geometric\", \"skein\", or \"graded\"");
    return render(fmt, format_wedge(r), wedge_to_json(r));
}

py::tuple py_run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(gtdisc, m) {
    m.doc() = "Free-loop operations on the punctured disc: Goldman bracket, "
              "self-intersection map, and Turaev cobracket, each computed "
              "geometrically, through the stacked-annuli skein, or on the "
              "associated graded of cyclic words.";

    py::register_exception<ParseError>(m, "WordParseError", PyExc_ValueError);
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<GenericityError>(m, "GenericityError", PyExc_RuntimeError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

    m.def("bracket", &py_bracket, py::arg("a"), py::arg("b"), py::arg("p"),
          py::arg("model") = "geometric", py::arg("trunc") = 6, py::arg("fmt") = "text",
          "Bracket of two free loop classes.  Words use generators g1..gp "
          "(x1..xp for model=\"graded\"); the result is a formatted term list.");
    m.def("mu", &py_mu, py::arg("w"), py::arg("p"), py::arg("model") = "geometric",
          py::arg("trunc") = 6, py::arg("fmt") = "text",
          "Self-intersection map of a based word, landing in loop-tensor-path "
          "terms.  The skein and geometric models differ by the unit term "
          "|1| (x) w.");
    m.def("cobracket", &py_cobracket, py::arg("w"), py::arg("p"),
          py::arg("model") = "geometric", py::arg("trunc") = 6, py::arg("fmt") = "text",
          "Cobracket of a free loop class as a wedge of loop classes.");
    m.def("run", &py_run, py::arg("args"),
          "Run the gt command line with the given argument list; returns "
          "(exit_code, stdout, stderr).  Gives access to the crosscheck and "
          "check suites and to every documented flag.");
}
