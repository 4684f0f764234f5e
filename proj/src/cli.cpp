#include "tptl/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tptl/compile.hpp"
#include "tptl/corpus.hpp"
#include "tptl/errors.hpp"
#include "tptl/fragment.hpp"
#include "tptl/mitl.hpp"
#include "tptl/normalize.hpp"
#include "tptl/nta.hpp"
#include "tptl/parser.hpp"
#include "tptl/reduction.hpp"
#include "tptl/region.hpp"
#include "tptl/semantics.hpp"

namespace tptl {

namespace {

struct Inputs {
    std::string formula_file;
    std::string expr;
    bool mitl = false;
    std::string word_file;
    std::string word_text;
    std::string ata_file;
    std::string out_file;
    std::string format = "text";
    std::size_t pos = 1;
    std::size_t state_cap = 0;
    std::uint64_t seed = 1;
    std::size_t count = 500;
    std::size_t words = 5;
    bool force = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string formula_text(const Inputs& in) {
    if (!in.expr.empty()) return in.expr;
    if (!in.formula_file.empty()) return read_file(in.formula_file);
    throw std::runtime_error("a formula is required (--formula FILE or --expr TEXT)");
}

Formula load_formula(const Inputs& in) {
    std::string text = formula_text(in);
    if (in.mitl) return mitl_to_tptl0inf(parse_mitl(text));
    return parse_tptl(text);
}

TimedWord load_word(const Inputs& in) {
    if (!in.word_text.empty()) {
        std::string t = in.word_text;
        for (char& c : t)
            if (c == ' ' || c == ',' || c == ';') c = '\n';
        return TimedWord::parse_text(t);
    }
    if (in.word_file.empty()) throw std::runtime_error("a word is required (--word FILE or --word-text TEXT)");
    std::string text = read_file(in.word_file);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') return TimedWord::from_json(nlohmann::json::parse(text));
    return TimedWord::parse_text(text);
}

void emit(const Inputs& in, std::ostream& out, const std::string& payload) {
    if (in.out_file.empty()) {
        out << payload;
        if (!payload.empty() && payload.back() != '\n') out << '\n';
        return;
    }
    std::ofstream f(in.out_file);
    if (!f) throw std::runtime_error("cannot write " + in.out_file);
    f << payload;
}

void require_format(const Inputs& in, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (in.format == a) return;
    throw std::runtime_error("format '" + in.format + "' is not available for this command");
}

// Parses, checks closure and membership in the fragment, then normalizes.
Formula prepare(const Formula& f, bool force, std::ostream& err, bool& rejected) {
    rejected = false;
    if (!f.is_closed()) throw OpenFormula("formula has free clocks: " + f.to_string());
    FragmentReport rep = classify(f);
    if (!rep.in_fragment && !force) {
        err << "formula is not in the unilateral fragment; offending subformulas:\n";
        for (const auto& o : rep.offenders) err << "  " << o.path << ": " << o.subformula.to_string() << "\n";
        rejected = true;
    }
    return normalize(f);
}

int cmd_check(const Inputs& in, std::ostream& out, std::ostream& err) {
    require_format(in, {"text", "json", "dot"});
    Formula f = load_formula(in);
    bool rejected = false;
    Formula g = prepare(f, in.force, err, rejected);
    if (rejected) return 2;
    CompileOutput c = compile_tptl_to_vwata(g);
    Nta n = subsetize(c.ata);
    RegionOptions ro;
    ro.state_cap = in.state_cap;
    if (in.format == "dot") {
        emit(in, out, region_graph_to_dot(n, build_region_graph(n, ro)));
        return 0;
    }
    EmptinessResult r = check_emptiness(n, ro);
    if (r.sat && !language_member(*r.witness, f))
        throw Infeasible("witness does not satisfy the formula:\n" + r.witness->to_text());
    NtaStats st = nta_stats(n);
    if (in.format == "json") {
        nlohmann::json j{{"verdict", r.sat ? "SAT" : "UNSAT"},
                         {"formula", f.to_string()},
                         {"witness", r.sat ? r.witness->to_json() : nlohmann::json(nullptr)},
                         {"stats",
                          {{"formula_size", formula_size(f)},
                           {"ata_locations", c.ata.num_locations()},
                           {"nta", st.to_json()},
                           {"region_nodes_explored", r.nodes_explored}}}};
        emit(in, out, j.dump(2));
    } else {
        emit(in, out, r.sat ? "SAT\n" + r.witness->to_text() : std::string("UNSAT\n"));
    }
    return r.sat ? 0 : 1;
}

int cmd_eval(const Inputs& in, std::ostream& out) {
    require_format(in, {"text", "json"});
    TimedWord w = load_word(in);
    bool v;
    if (in.mitl) {
        v = eval_mitl(w, in.pos, parse_mitl(formula_text(in)));
    } else {
        Formula f = parse_tptl(formula_text(in));
        if (!f.is_closed()) throw OpenFormula("formula has free clocks: " + f.to_string());
        v = eval_tptl(w, in.pos, {}, f);
    }
    if (in.format == "json")
        emit(in, out, nlohmann::json{{"value", v}, {"pos", in.pos}}.dump(2));
    else
        emit(in, out, v ? "true" : "false");
    return v ? 0 : 1;
}

int cmd_compile(const Inputs& in, std::ostream& out, std::ostream& err) {
    require_format(in, {"text", "json", "dot"});
    Formula f = load_formula(in);
    bool rejected = false;
    Formula g = prepare(f, in.force, err, rejected);
    if (rejected) return 2;
    CompileOutput c = compile_tptl_to_vwata(g);
    err << "locations: " << c.ata.num_locations() << " (bound " << formula_size(f) + 1 << ")\n";
    if (in.format == "dot") {
        emit(in, out, ata_to_dot(c.ata));
    } else if (in.format == "json") {
        emit(in, out, ata_to_json(c.ata).dump(2));
    } else {
        std::string s;
        for (int q = 0; q < c.ata.num_locations(); ++q)
            s += c.ata.locations[q] + (c.ata.accepting[q] ? " (accepting)" : "") + ": " + c.location_formula[q].to_string() + "\n";
        emit(in, out, s);
    }
    return 0;
}

int cmd_subsetize(const Inputs& in, std::ostream& out, std::ostream& err) {
    require_format(in, {"text", "json", "dot"});
    Ata a;
    if (!in.ata_file.empty()) {
        a = ata_from_json(nlohmann::json::parse(read_file(in.ata_file)));
    } else {
        bool rejected = false;
        Formula g = prepare(load_formula(in), in.force, err, rejected);
        if (rejected) return 2;
        a = compile_tptl_to_vwata(g).ata;
    }
    Nta n = subsetize(a);
    NtaStats st = nta_stats(n);
    err << "locations: " << st.locations << " (worst case " << static_cast<double>(st.worst_case_locations)
        << "), transitions: " << st.transitions << ", clock copies: " << st.copies_used << " (bound " << st.copy_bound
        << ")\n";
    if (in.format == "dot") {
        emit(in, out, nta_to_dot(n));
    } else if (in.format == "json") {
        emit(in, out, nta_to_json(n).dump(2));
    } else {
        std::string s;
        for (std::size_t i = 0; i < n.locations.size(); ++i)
            s += "l" + std::to_string(i) + (n.accepting[i] ? " (accepting)" : "") + ": " + to_string(n.locations[i], n) + "\n";
        emit(in, out, s);
    }
    return 0;
}

int cmd_translate(const Inputs& in, std::ostream& out) {
    require_format(in, {"text", "json"});
    MitlFormula m = parse_mitl(formula_text(in));
    Formula f = mitl_to_tptl0inf(m);
    if (in.format == "json") {
        FragmentReport rep = classify(f);
        emit(in, out,
             nlohmann::json{{"mitl", m.to_string()}, {"tptl", f.to_string()}, {"size", formula_size(f)},
                            {"in_fragment", rep.in_fragment}}
                 .dump(2));
    } else {
        emit(in, out, f.to_string());
    }
    return 0;
}

int cmd_corpus(const Inputs& in, std::ostream& out) {
    require_format(in, {"json", "text"});
    auto corpus = fragment_corpus(in.seed, in.count, in.words);
    if (in.format == "text") {
        std::string s;
        for (const auto& e : corpus) s += e.formula.to_string() + "\n";
        emit(in, out, s);
    } else {
        emit(in, out, corpus_to_json(corpus, in.seed).dump(2));
    }
    return 0;
}

int cmd_bounded(const Inputs& in, std::ostream& out, std::ostream& err) {
    bool rejected = false;
    Formula g = prepare(load_formula(in), in.force, err, rejected);
    if (rejected) return 2;
    Ata a = compile_tptl_to_vwata(g).ata;
    BoundedRunReport r = check_bounded_run(a, alphabet_projection(a, load_word(in)));
    emit(in, out, r.to_json(a).dump(2));
    return r.violations.empty() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Satisfiability checking for unilateral timed propositional temporal logic", "tptlsat"};
    app.require_subcommand(1);
    Inputs in;
    auto formula_opts = [&](CLI::App* s) {
        s->add_option("--formula", in.formula_file, "file holding the formula");
        s->add_option("--expr", in.expr, "formula text");
        s->add_flag("--mitl", in.mitl, "read the formula as MITL and translate it");
    };
    auto common = [&](CLI::App* s) {
        s->add_option("--out", in.out_file, "write the main output here instead of stdout");
        s->add_option("--format", in.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
    };
    auto word_opts = [&](CLI::App* s) {
        s->add_option("--word", in.word_file, "timed word file (text or JSON)");
        s->add_option("--word-text", in.word_text, "inline timed word such as \"a@0 b@3/2\"");
    };

    auto* check = app.add_subcommand("check", "decide satisfiability and print a witness");
    formula_opts(check);
    common(check);
    check->add_option("--state-cap", in.state_cap, "region graph node limit")->check(CLI::PositiveNumber);
    check->add_flag("--force", in.force, "run the pipeline on formulas outside the fragment");

    auto* eval = app.add_subcommand("eval", "evaluate a formula on a timed word");
    formula_opts(eval);
    word_opts(eval);
    common(eval);
    eval->add_option("--pos", in.pos, "1-based position")->check(CLI::PositiveNumber);

    auto* compile = app.add_subcommand("compile", "compile a formula to a very weak alternating timed automaton");
    formula_opts(compile);
    common(compile);
    compile->add_flag("--force", in.force, "compile formulas outside the fragment");

    auto* subs = app.add_subcommand("subsetize", "build the timed automaton over clock copies");
    formula_opts(subs);
    common(subs);
    subs->add_option("--ata", in.ata_file, "alternating automaton JSON instead of a formula");
    subs->add_flag("--force", in.force, "accept formulas outside the fragment");

    auto* tr = app.add_subcommand("translate", "translate MITL into the unilateral fragment");
    tr->add_option("--formula", in.formula_file, "file holding the MITL formula");
    tr->add_option("--expr", in.expr, "MITL formula text");
    common(tr);

    auto* corpus = app.add_subcommand("corpus", "generate a seeded random formula and word corpus");
    common(corpus);
    corpus->add_option("--seed", in.seed, "random seed");
    corpus->add_option("--count", in.count, "number of formulas")->check(CLI::PositiveNumber);
    corpus->add_option("--words", in.words, "words per formula");

    auto* bounded = app.add_subcommand("bounded", "explore reduced runs and report repeated locations");
    formula_opts(bounded);
    word_opts(bounded);
    common(bounded);
    bounded->add_flag("--force", in.force, "accept formulas outside the fragment");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*check) return cmd_check(in, out, err);
        if (*eval) return cmd_eval(in, out);
        if (*compile) return cmd_compile(in, out, err);
        if (*subs) return cmd_subsetize(in, out, err);
        if (*tr) return cmd_translate(in, out);
        if (*corpus) return cmd_corpus(in, out);
        if (*bounded) return cmd_bounded(in, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace tptl
