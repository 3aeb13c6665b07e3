#include "gt/cli.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gt/chord.hpp"
#include "gt/combo.hpp"
#include "gt/errors.hpp"
#include "gt/expansion.hpp"
#include "gt/graded.hpp"
#include "gt/json_io.hpp"
#include "gt/parallel.hpp"
#include "gt/planar.hpp"
#include "gt/skein.hpp"
#include "gt/word.hpp"

namespace gt {
namespace {

struct RunConfig {
    int p = 2;
    int trunc = 6;
    std::uint64_t seed = 1;
    int trials = 100;
    int max_len = 3;
    std::string format = "text";
    bool json() const { return format == "json"; }
};

// ---- argument parsing ---------------------------------------------------

CyclicClass parse_loop_arg(const std::string& text, int p) {
    ParsedWord pw = parse_word_text(text, Alphabet::group, p);
    return cyclic_canonical(GroupWord{pw.letters});
}

GroupWord parse_path_arg(const std::string& text, int p) {
    ParsedWord pw = parse_word_text(text, Alphabet::group, p);
    if (pw.cyclic) throw InputError("a based word is required, not a |...| class");
    return GroupWord{pw.letters};
}

std::vector<Letter> parse_graded_arg(const std::string& text, const RunConfig& cfg, bool based) {
    ParsedWord pw = parse_word_text(text, Alphabet::graded, cfg.p);
    if (based && pw.cyclic) throw InputError("a based word is required, not a |...| class");
    if (static_cast<int>(pw.letters.size()) > cfg.trunc)
        throw InputError("word length exceeds the truncation degree; raise -N");
    return pw.letters;
}

// ---- corpora ------------------------------------------------------------
// All corpus enumerations are length-lexicographic (the word ordering), so
// case indices and first-counterexample reports are stable across runs.

std::vector<GroupWord> reduced_words(int p, int max_len) {
    std::set<GroupWord> acc;
    std::vector<Letter> cur;
    auto rec = [&](auto&& self, int rest) -> void {
        acc.insert(GroupWord{cur});
        if (rest == 0) return;
        for (int i = 1; i <= p; ++i)
            for (Letter l : {i, -i}) {
                if (!cur.empty() && cur.back() == -l) continue;
                cur.push_back(l);
                self(self, rest - 1);
                cur.pop_back();
            }
    };
    rec(rec, max_len);
    return {acc.begin(), acc.end()};
}

std::vector<CyclicClass> loop_classes(int p, int max_len) {
    std::set<CyclicClass> acc;
    for (const GroupWord& w : reduced_words(p, max_len)) {
        CyclicClass c = cyclic_canonical(w);
        if (!c.empty()) acc.insert(c);
    }
    return {acc.begin(), acc.end()};
}

std::vector<CyclicClass> monomial_classes(int p, int max_len) {
    std::set<CyclicClass> acc;
    std::vector<Letter> cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (!cur.empty()) acc.insert(cyclic_canonical(GroupWord{cur}));
        if (rest == 0) return;
        for (int i = 1; i <= p; ++i) {
            cur.push_back(i);
            self(self, rest - 1);
            cur.pop_back();
        }
    };
    rec(rec, max_len);
    return {acc.begin(), acc.end()};
}

// ---- suite plumbing -----------------------------------------------------

struct SuiteResult {
    std::string suite;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::size_t skipped = 0;  // inconclusive symbol checks, not failures
    std::string first_text;
    Json first_json = nullptr;
    std::vector<std::string> extra_lines;
    std::vector<std::pair<std::string, Json>> extra_fields;
    bool pass() const { return failures == 0; }
};

// Scans the per-case flags and renders the first failure through `detail`,
// which returns the (text, json) description for a case index.
template <class Detail>
void collect_failures(SuiteResult& r, const std::vector<std::uint8_t>& ok, Detail&& detail) {
    for (std::size_t k = 0; k < ok.size(); ++k) {
        if (ok[k]) continue;
        if (r.failures++ == 0) {
            auto [text, j] = detail(k);
            r.first_text = std::move(text);
            r.first_json = std::move(j);
        }
    }
}

std::string case_phrase(std::size_t n) {
    return n == 1 ? std::string("1 case") : std::to_string(n) + " cases";
}

int emit_suite(const SuiteResult& r, const RunConfig& cfg, std::ostream& out, bool counts) {
    if (cfg.json()) {
        Json j{{"suite", r.suite},
               {"config",
                Json{{"punctures", cfg.p},
                     {"degree", cfg.trunc},
                     {"seed", cfg.seed},
                     {"trials", cfg.trials},
                     {"max_len", cfg.max_len}}},
               {"cases", r.cases},
               {"failures", r.failures},
               {"skipped", r.skipped},
               {"pass", r.pass()},
               {"first_counterexample", r.pass() ? Json(nullptr) : r.first_json}};
        for (const auto& [key, value] : r.extra_fields) j[key] = value;
        out << j.dump() << "\n";
        return r.pass() ? 0 : 4;
    }
    if (r.pass()) {
        if (!counts)
            out << "PASS\n";
        else if (r.cases == 0)
            out << "PASS (trivial corpus)\n";
        else
            out << "PASS (" << case_phrase(r.cases) << ")\n";
    } else {
        out << "FAIL (" << r.failures << " of " << case_phrase(r.cases) << ")\n";
        out << "first counterexample: " << r.first_text << "\n";
    }
    if (r.skipped > 0)
        out << "note: " << r.skipped << " inconclusive (skipped; raise -N to decide them)\n";
    for (const std::string& line : r.extra_lines) out << line << "\n";
    return r.pass() ? 0 : 4;
}

// ---- compute commands ---------------------------------------------------

int emit_value(const RunConfig& cfg, std::ostream& out, const std::string& text, const Json& j) {
    if (cfg.json())
        out << j.dump() << "\n";
    else
        out << text << "\n";
    return 0;
}

int cmd_bracket(const RunConfig& cfg, const std::string& model, const std::string& a_text,
                const std::string& b_text, std::ostream& out) {
    if (model == "graded") {
        CyclicGradedElement ea(cfg.trunc), eb(cfg.trunc);
        ea.add(cyclic_canonical(GroupWord{parse_graded_arg(a_text, cfg, false)}), 1);
        eb.add(cyclic_canonical(GroupWord{parse_graded_arg(b_text, cfg, false)}), 1);
        CyclicGradedElement result = gr_bracket(ea, eb);
        return emit_value(cfg, out, format_cyclic_graded(result), cyclic_graded_to_json(result));
    }
    LoopCombo x = loop_combo(parse_loop_arg(a_text, cfg.p));
    LoopCombo y = loop_combo(parse_loop_arg(b_text, cfg.p));
    LoopCombo result =
        model == "skein" ? bracket_skein(x, y, cfg.p) : goldman_bracket_geometric(x, y, cfg.p);
    return emit_value(cfg, out, format_loop_combo(result), loop_combo_to_json(result));
}

int cmd_mu(const RunConfig& cfg, const std::string& model, const std::string& w_text,
           std::ostream& out) {
    if (model == "graded") {
        GradedElement e(cfg.trunc);
        e.add(GroupWord{parse_graded_arg(w_text, cfg, true)}, 1);
        GradedTensor result = gr_mu(e);
        return emit_value(cfg, out, format_graded_tensor(result), graded_tensor_to_json(result));
    }
    GroupWord w = parse_path_arg(w_text, cfg.p);
    TensorElement result = model == "skein" ? mu_skein(w, cfg.p) : mu_geometric(w, cfg.p);
    return emit_value(cfg, out, format_tensor(result), tensor_to_json(result));
}

int cmd_cobracket(const RunConfig& cfg, const std::string& model, const std::string& w_text,
                  std::ostream& out) {
    if (model == "graded") {
        CyclicGradedElement e(cfg.trunc);
        e.add(cyclic_canonical(GroupWord{parse_graded_arg(w_text, cfg, false)}), 1);
        GradedWedge result = gr_delta(e);
        return emit_value(cfg, out, format_graded_wedge(result), graded_wedge_to_json(result));
    }
    LoopCombo x = loop_combo(parse_loop_arg(w_text, cfg.p));
    WedgeElement result = model == "skein" ? delta_skein(x, cfg.p) : delta_geometric(x, cfg.p);
    return emit_value(cfg, out, format_wedge(result), wedge_to_json(result));
}

// ---- crosscheck suites --------------------------------------------------

SuiteResult crosscheck_bracket(const RunConfig& cfg) {
    SuiteResult r;
    r.suite = "crosscheck-bracket";
    std::vector<CyclicClass> classes = loop_classes(cfg.p, cfg.max_len);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i; j < classes.size(); ++j) pairs.emplace_back(i, j);
    r.cases = pairs.size();
    std::vector<std::uint8_t> ok(pairs.size(), 1);
    parallel_for(pairs.size(), [&](std::size_t k) {
        LoopCombo x = loop_combo(classes[pairs[k].first]);
        LoopCombo y = loop_combo(classes[pairs[k].second]);
        ok[k] = goldman_bracket_geometric(x, y, cfg.p) == bracket_skein(x, y, cfg.p) ? 1 : 0;
    });
    collect_failures(r, ok, [&](std::size_t k) {
        LoopCombo x = loop_combo(classes[pairs[k].first]);
        LoopCombo y = loop_combo(classes[pairs[k].second]);
        LoopCombo geo = goldman_bracket_geometric(x, y, cfg.p);
        LoopCombo skein = bracket_skein(x, y, cfg.p);
        std::string text = format_cyclic(classes[pairs[k].first]) + ", " +
                           format_cyclic(classes[pairs[k].second]) +
                           ": geometric = " + format_loop_combo(geo) +
                           ", skein = " + format_loop_combo(skein);
        Json j{{"a", format_cyclic(classes[pairs[k].first])},
               {"b", format_cyclic(classes[pairs[k].second])},
               {"geometric", loop_combo_to_json(geo)},
               {"skein", loop_combo_to_json(skein)}};
        return std::make_pair(text, j);
    });
    return r;
}

SuiteResult crosscheck_mu(const RunConfig& cfg) {
    SuiteResult r;
    r.suite = "crosscheck-mu";
    std::vector<GroupWord> words = reduced_words(cfg.p, cfg.max_len);
    std::vector<CyclicClass> classes = loop_classes(cfg.p, cfg.max_len);
    r.cases = words.size() + classes.size();
    auto mu_sides = [&](const GroupWord& w) {
        TensorElement skein = mu_skein(w, cfg.p);
        skein.add({CyclicClass{}, w}, Coefficient::one());
        return std::make_pair(mu_geometric(w, cfg.p), std::move(skein));
    };
    std::vector<std::uint8_t> ok(r.cases, 1);
    parallel_for(r.cases, [&](std::size_t k) {
        if (k < words.size()) {
            auto [geo, skein] = mu_sides(words[k]);
            ok[k] = geo == skein ? 1 : 0;
        } else {
            LoopCombo x = loop_combo(classes[k - words.size()]);
            ok[k] = delta_geometric(x, cfg.p) == delta_skein(x, cfg.p) ? 1 : 0;
        }
    });
    collect_failures(r, ok, [&](std::size_t k) {
        if (k < words.size()) {
            auto [geo, skein] = mu_sides(words[k]);
            std::string text = "mu(" + format_group_word(words[k]) +
                               "): geometric = " + format_tensor(geo) +
                               ", skein + 1 (x) w = " + format_tensor(skein);
            Json j{{"word", format_group_word(words[k])},
                   {"geometric", tensor_to_json(geo)},
                   {"skein_plus_unit", tensor_to_json(skein)}};
            return std::make_pair(text, j);
        }
        LoopCombo x = loop_combo(classes[k - words.size()]);
        WedgeElement geo = delta_geometric(x, cfg.p);
        WedgeElement skein = delta_skein(x, cfg.p);
        std::string text = "delta(" + format_cyclic(classes[k - words.size()]) +
                           "): geometric = " + format_wedge(geo) +
                           ", skein = " + format_wedge(skein);
        Json j{{"word", format_cyclic(classes[k - words.size()])},
               {"geometric", wedge_to_json(geo)},
               {"skein", wedge_to_json(skein)}};
        return std::make_pair(text, j);
    });
    return r;
}

// ---- property suites ----------------------------------------------------

std::vector<CyclicGradedElement> class_elements(const std::vector<CyclicClass>& classes,
                                                int trunc) {
    std::vector<CyclicGradedElement> out;
    out.reserve(classes.size());
    for (const CyclicClass& c : classes) {
        CyclicGradedElement e(trunc);
        e.add(c, 1);
        out.push_back(std::move(e));
    }
    return out;
}

std::string fmt_cyc_mon(const CyclicClass& c) {
    return "|" + format_letters(c.rep.letters, 'x') + "|";
}

SuiteResult check_jacobi(const RunConfig& cfg) {
    SuiteResult r;
    r.suite = "jacobi";
    std::vector<CyclicClass> classes = monomial_classes(cfg.p, cfg.max_len);
    std::vector<CyclicGradedElement> elems =
        class_elements(classes, std::max(1, 3 * cfg.max_len));
    std::size_t n = classes.size();
    r.cases = n * n * n;
    std::vector<std::uint8_t> ok(r.cases, 1);
    parallel_for(r.cases, [&](std::size_t k) {
        std::size_t i = k / (n * n), j = (k / n) % n, l = k % n;
        ok[k] = jacobi_residual(elems[i], elems[j], elems[l]).is_zero() ? 1 : 0;
    });
    collect_failures(r, ok, [&](std::size_t k) {
        std::size_t i = k / (n * n), j = (k / n) % n, l = k % n;
        CyclicGradedElement res = jacobi_residual(elems[i], elems[j], elems[l]);
        std::string text = "jacobi(" + fmt_cyc_mon(classes[i]) + ", " + fmt_cyc_mon(classes[j]) +
                           ", " + fmt_cyc_mon(classes[l]) + ") = " + format_cyclic_graded(res);
        Json jj{{"a", fmt_cyc_mon(classes[i])},
                {"b", fmt_cyc_mon(classes[j])},
                {"c", fmt_cyc_mon(classes[l])},
                {"residual", cyclic_graded_to_json(res)}};
        return std::make_pair(text, jj);
    });
    return r;
}

SuiteResult check_cojacobi(const RunConfig& cfg) {
    SuiteResult r;
    r.suite = "cojacobi";
    std::vector<CyclicClass> classes = monomial_classes(cfg.p, cfg.max_len);
    std::vector<CyclicGradedElement> elems = class_elements(classes, std::max(1, cfg.max_len));
    r.cases = classes.size();
    std::vector<std::uint8_t> ok(r.cases, 1);
    parallel_for(r.cases, [&](std::size_t k) {
        ok[k] = cojacobi_residual(elems[k]).empty() ? 1 : 0;
    });
    collect_failures(r, ok, [&](std::size_t k) {
        auto res = cojacobi_residual(elems[k]);
        std::string text = "cojacobi(" + fmt_cyc_mon(classes[k]) + ") has " +
                           std::to_string(res.size()) + " surviving terms";
        Json terms = Json::array();
        for (const auto& [key, c] : res)
            terms.push_back(Json{{"coeff", format_rational(c)},
                                 {"factors", Json::array({fmt_cyc_mon(key[0]), fmt_cyc_mon(key[1]),
                                                          fmt_cyc_mon(key[2])})}});
        return std::make_pair(text, Json{{"word", fmt_cyc_mon(classes[k])}, {"residual", terms}});
    });
    return r;
}

SuiteResult check_cocycle(const RunConfig& cfg) {
    SuiteResult r;
    r.suite = "cocycle";
    std::vector<CyclicClass> classes = monomial_classes(cfg.p, cfg.max_len);
    std::vector<CyclicGradedElement> elems =
        class_elements(classes, std::max(1, 2 * cfg.max_len));
    std::size_t n = classes.size();
    r.cases = n * n;
    std::vector<std::uint8_t> ok(r.cases, 1);
    parallel_for(r.cases, [&](std::size_t k) {
        ok[k] = cocycle_residual(elems[k / n], elems[k % n]).is_zero() ? 1 : 0;
    });
    collect_failures(r, ok, [&](std::size_t k) {
        GradedWedge res = cocycle_residual(elems[k / n], elems[k % n]);
        std::string text = "cocycle(" + fmt_cyc_mon(classes[k / n]) + ", " +
                           fmt_cyc_mon(classes[k % n]) + ") = " + format_graded_wedge(res);
        Json j{{"x", fmt_cyc_mon(classes[k / n])},
               {"y", fmt_cyc_mon(classes[k % n])},
               {"residual", graded_wedge_to_json(res)}};
        return std::make_pair(text, j);
    });
    return r;
}

SuiteResult check_epsilon(const RunConfig& cfg) {
    SuiteResult r;
    r.suite = "epsilon";
    struct EpsCase {
        GroupWord b, v, w;
        Rational coeff;
    };
    // Inputs are drawn sequentially so the corpus depends only on the seed;
    // evaluation order is then free to parallelize.
    std::mt19937_64 rng(cfg.seed);
    auto random_word = [&]() {
        GroupWord w;
        std::size_t len = rng() % 5;  // lengths 0..4
        for (std::size_t i = 0; i < len; ++i)
            w.letters.push_back(1 + static_cast<Letter>(rng() % 3));
        return w;
    };
    std::vector<EpsCase> inputs;
    inputs.reserve(static_cast<std::size_t>(cfg.trials));
    for (int t = 0; t < cfg.trials; ++t) {
        EpsCase e;
        e.b = random_word();
        e.v = random_word();
        e.w = random_word();
        int num = 1 + static_cast<int>(rng() % 5);
        if (rng() % 2) num = -num;
        e.coeff = Rational(num, 1 + static_cast<int>(rng() % 2));
        inputs.push_back(std::move(e));
    }
    r.cases = inputs.size();
    std::vector<std::uint8_t> ok(r.cases, 1);
    parallel_for(r.cases, [&](std::size_t k) {
        const EpsCase& e = inputs[k];
        GradedWedge one = epsilon_one(e.b, PhiTerm{e.v, e.w, e.coeff});
        GradedWedge two = epsilon_two(e.b);
        ok[k] = (one.is_zero() && two.is_zero()) ? 1 : 0;
    });
    collect_failures(r, ok, [&](std::size_t k) {
        const EpsCase& e = inputs[k];
        GradedWedge one = epsilon_one(e.b, PhiTerm{e.v, e.w, e.coeff});
        GradedWedge two = epsilon_two(e.b);
        auto mono = [](const GroupWord& w) { return format_letters(w.letters, 'x'); };
        std::string text = "trial " + std::to_string(k) + ": B=" + mono(e.b) + ", v=" + mono(e.v) +
                           ", w=" + mono(e.w) + ", coeff=" + format_rational(e.coeff) +
                           ": epsilon1 = " + format_graded_wedge(one) +
                           ", epsilon2 = " + format_graded_wedge(two);
        Json j{{"trial", k},
               {"B", mono(e.b)},
               {"v", mono(e.v)},
               {"w", mono(e.w)},
               {"coeff", format_rational(e.coeff)},
               {"epsilon_one", graded_wedge_to_json(one)},
               {"epsilon_two", graded_wedge_to_json(two)}};
        return std::make_pair(text, j);
    });
    return r;
}

SuiteResult check_conway(const RunConfig& cfg) {
    SuiteResult r;
    r.suite = "conway-exp";
    std::vector<ConwayDegree> rows = conway_exponential_identity(cfg.trunc);
    r.cases = rows.size();
    std::vector<std::uint8_t> ok(r.cases, 1);
    for (std::size_t k = 0; k < rows.size(); ++k) ok[k] = rows[k].equal ? 1 : 0;
    collect_failures(r, ok, [&](std::size_t k) {
        const ConwayDegree& row = rows[k];
        std::string text = "degree " + std::to_string(row.degree) + ": swap side (" +
                           format_rational(row.lhs_parallel) + ", " +
                           format_rational(row.lhs_crossed) + ") vs smoothing side (" +
                           format_rational(row.rhs_parallel) + ", " +
                           format_rational(row.rhs_crossed) + ")";
        Json j{{"degree", row.degree},
               {"lhs", Json::array({format_rational(row.lhs_parallel),
                                    format_rational(row.lhs_crossed)})},
               {"rhs", Json::array({format_rational(row.rhs_parallel),
                                    format_rational(row.rhs_crossed)})}};
        return std::make_pair(text, j);
    });
    return r;
}

SuiteResult check_symbols(const RunConfig& cfg) {
    SuiteResult r;
    r.suite = "symbols";
    std::vector<CyclicClass> classes = loop_classes(cfg.p, cfg.max_len);
    std::vector<LoopCombo> combos;
    combos.reserve(classes.size());
    for (const CyclicClass& c : classes) {
        LoopCombo x = loop_combo(c);
        x.add(CyclicClass{}, Coefficient(Rational(-1)));
        combos.push_back(std::move(x));
    }
    ExpansionConfig ecfg{cfg.p, cfg.trunc};
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < combos.size(); ++i)
        for (std::size_t j = i; j < combos.size(); ++j) pairs.emplace_back(i, j);
    std::size_t n_cobr = combos.size();
    r.cases = n_cobr + pairs.size();
    std::vector<std::uint8_t> ok(r.cases, 1), skip(r.cases, 0);
    parallel_for(r.cases, [&](std::size_t k) {
        if (k < n_cobr) {
            CobracketSymbolReport rep = check_cobracket_symbol(combos[k], ecfg);
            if (!rep.conclusive)
                skip[k] = 1;
            else
                ok[k] = (rep.low_degree_ok && rep.equal) ? 1 : 0;
        } else {
            auto [i, j] = pairs[k - n_cobr];
            BracketSymbolReport rep = check_bracket_symbol(combos[i], combos[j], ecfg);
            if (!rep.conclusive)
                skip[k] = 1;
            else
                ok[k] = (rep.low_degree_ok && rep.equal) ? 1 : 0;
        }
    });
    for (std::uint8_t s : skip) r.skipped += s;
    collect_failures(r, ok, [&](std::size_t k) {
        if (k < n_cobr) {
            CobracketSymbolReport rep = check_cobracket_symbol(combos[k], ecfg);
            std::string text = "cobracket symbol of " + format_cyclic(classes[k]) +
                               " - |1|: leading term " + format_graded_wedge(rep.lhs) +
                               " vs graded " + format_graded_wedge(rep.rhs);
            return std::make_pair(text, cobracket_report_to_json(rep));
        }
        auto [i, j] = pairs[k - n_cobr];
        BracketSymbolReport rep = check_bracket_symbol(combos[i], combos[j], ecfg);
        std::string text = "bracket symbol of (" + format_cyclic(classes[i]) + " - |1|, " +
                           format_cyclic(classes[j]) + " - |1|): leading term " +
                           format_cyclic_graded(rep.lhs) + " vs graded " +
                           format_cyclic_graded(rep.rhs);
        return std::make_pair(text, bracket_report_to_json(rep));
    });
    // One full residual, to show what the leading-term statement does not
    // claim: beyond degree r-1 the expanded cobracket and the graded
    // cobracket genuinely differ.
    if (cfg.p >= 2 && cfg.max_len >= 2) {
        LoopCombo sample = loop_combo(cyclic_canonical(GroupWord{{1, 2}}));
        sample.add(CyclicClass{}, Coefficient(Rational(-1)));
        GradedWedge residual = delta_expansion_residual(sample, ecfg);
        r.extra_lines.push_back("delta residual sample (|g1 g2| - |1|): " +
                                format_graded_wedge(residual));
        r.extra_fields.emplace_back(
            "residual_sample",
            Json{{"input", "|g1 g2| - |1|"}, {"value", graded_wedge_to_json(residual)}});
    }
    return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Goldman bracket and Turaev cobracket of free loops on a punctured disc"};
    app.name("gt");
    app.add_option("-p,--punctures", cfg.p, "number of punctures")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("-N,--degree", cfg.trunc, "truncation degree for graded computations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for randomized suites")->capture_default_str();
    app.add_option("--trials", cfg.trials, "trial count for randomized suites")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_option("--max-len", cfg.max_len, "maximum word length for corpus suites")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.require_subcommand(1);

    std::string model, first, second, which, suite;
    auto add_model = [&](CLI::App* sub) {
        sub->add_option("model", model, "geometric | skein | graded")
            ->required()
            ->check(CLI::IsMember({"geometric", "skein", "graded"}));
        sub->fallthrough();
    };
    CLI::App* bracket = app.add_subcommand("bracket", "bracket of two loop classes");
    add_model(bracket);
    bracket->add_option("first", first, "first loop word")->required();
    bracket->add_option("second", second, "second loop word")->required();

    CLI::App* mu = app.add_subcommand("mu", "self-intersection map of a based loop");
    add_model(mu);
    mu->add_option("word", first, "based word")->required();

    CLI::App* cobracket = app.add_subcommand("cobracket", "enhanced cobracket of a loop class");
    add_model(cobracket);
    cobracket->add_option("word", first, "loop word")->required();

    CLI::App* crosscheck =
        app.add_subcommand("crosscheck", "compare the geometric and skein models on a corpus");
    crosscheck->add_option("which", which, "bracket | mu")
        ->required()
        ->check(CLI::IsMember({"bracket", "mu"}));
    crosscheck->fallthrough();

    CLI::App* check = app.add_subcommand("check", "run a property suite");
    check->add_option("suite", suite,
                      "jacobi | cojacobi | cocycle | epsilon | conway-exp | symbols")
        ->required()
        ->check(CLI::IsMember(
            {"jacobi", "cojacobi", "cocycle", "epsilon", "conway-exp", "symbols"}));
    check->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        if (cfg.json())
            err << error_to_json("parse", e.what()).dump() << "\n";
        else
            err << "error (parse): " << e.what() << "\n";
        return 2;
    }

    auto report = [&](const char* type, const std::string& message, std::size_t position,
                      int code) {
        if (cfg.json())
            err << error_to_json(type, message, position).dump() << "\n";
        else
            err << "error (" << type << "): " << message << "\n";
        return code;
    };
    try {
        if (bracket->parsed()) return cmd_bracket(cfg, model, first, second, out);
        if (mu->parsed()) return cmd_mu(cfg, model, first, out);
        if (cobracket->parsed()) return cmd_cobracket(cfg, model, first, out);
        if (crosscheck->parsed()) {
            SuiteResult r = which == "bracket" ? crosscheck_bracket(cfg) : crosscheck_mu(cfg);
            return emit_suite(r, cfg, out, true);
        }
        SuiteResult r;
        if (suite == "jacobi")
            r = check_jacobi(cfg);
        else if (suite == "cojacobi")
            r = check_cojacobi(cfg);
        else if (suite == "cocycle")
            r = check_cocycle(cfg);
        else if (suite == "epsilon")
            r = check_epsilon(cfg);
        else if (suite == "conway-exp")
            r = check_conway(cfg);
        else
            r = check_symbols(cfg);
        return emit_suite(r, cfg, out, false);
    } catch (const ParseError& e) {
        return report("parse", e.what(), e.position, 2);
    } catch (const InputError& e) {
        return report("input", e.what(), std::string::npos, 3);
    } catch (const GenericityError& e) {
        return report("genericity", e.what(), std::string::npos, 3);
    } catch (const ConsistencyError& e) {
        return report("consistency", e.what(), std::string::npos, 3);
    }
}

}  // namespace gt
