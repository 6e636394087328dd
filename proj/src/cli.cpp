#include "nomfix/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "nomfix/error.hpp"
#include "nomfix/fixpoint.hpp"
#include "nomfix/fresh.hpp"
#include "nomfix/permgroups.hpp"
#include "nomfix/proof_io.hpp"
#include "nomfix/random.hpp"
#include "nomfix/semantics.hpp"
#include "nomfix/strong.hpp"
#include "nomfix/syntax.hpp"
#include "nomfix/unify.hpp"

namespace nomfix {

nlohmann::json to_json(const Report& r) {
    nlohmann::json j;
    j["command"] = r.command;
    j["system"] = r.system;
    j["verdict"] = r.verdict;
    j["output"] = r.output;
    j["diagnostics"] = r.diagnostics;
    j["derivation"] = r.derivation ? *r.derivation : nlohmann::json(nullptr);
    j["exit_code"] = r.exit_code;
    return j;
}

Report report_from_json(const nlohmann::json& j) {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.system = j.at("system").get<std::string>();
    r.verdict = j.at("verdict").get<std::string>();
    r.output = j.at("output").get<std::vector<std::string>>();
    r.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
    if (!j.at("derivation").is_null()) r.derivation = j.at("derivation");
    r.exit_code = j.at("exit_code").get<int>();
    return r;
}

std::string render(const Report& r, bool json) {
    if (json) return to_json(r).dump(2) + "\n";
    std::string out;
    for (const auto& line : r.output) out += line + "\n";
    for (const auto& d : r.diagnostics) out += (r.verdict == "error" ? "error: " : "  ") + d + "\n";
    return out;
}

namespace {

struct Options {
    bool json = false;
    bool show_proof = false;
    bool instantiate = false;
    std::string sig_file;
    std::uint64_t seed = 1;
    std::size_t carrier_bound = kDefaultCarrierBound;
    std::size_t random = 0;
    std::string model;
    std::string system;
    std::string theory = "core";
    std::vector<std::string> args;
};

Report report(std::string command, std::string system = {}) {
    Report r;
    r.command = std::move(command);
    r.system = std::move(system);
    return r;
}

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '^';
}

// Generated atoms print as %name; for people, drop the '%' unless the bare
// name is already taken, and prime it until it is not.
std::string readable(const std::string& text) {
    std::set<std::string> bare;
    for (std::size_t i = 0; i < text.size();) {
        if (ident_char(text[i]) && (i == 0 || (text[i - 1] != '%' && !ident_char(text[i - 1])))) {
            std::size_t j = i;
            while (j < text.size() && ident_char(text[j])) ++j;
            bare.insert(text.substr(i, j - i));
            i = j;
        } else {
            ++i;
        }
    }
    std::map<std::string, std::string> names;
    std::string out;
    for (std::size_t i = 0; i < text.size();) {
        if (text[i] != '%' || i + 1 >= text.size() || !ident_char(text[i + 1])) {
            out += text[i++];
            continue;
        }
        std::size_t j = i + 1;
        while (j < text.size() && ident_char(text[j])) ++j;
        std::string name = text.substr(i + 1, j - i - 1);
        auto it = names.find(name);
        if (it == names.end()) {
            std::string shown = name;
            while (bare.count(shown)) shown += "'";
            bare.insert(shown);
            it = names.emplace(name, shown).first;
        }
        out += it->second;
        i = j;
    }
    return out;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Signature signature(const Options& o) {
    return o.sig_file.empty() ? Signature::builtin() : Signature::parse(read_file(o.sig_file));
}

EqTheory theory(const Options& o, const Signature& sig) {
    if (o.theory == "core") return EqTheory::core();
    if (o.theory == "c" || o.theory == "C") return EqTheory::c(sig);
    throw Error("unknown theory '" + o.theory + "' (core or c)");
}

std::string yes(bool b) { return b ? "true" : "false"; }

void expect_args(const Options& o, std::size_t n, const std::string& usage) {
    if (o.args.size() != n) throw Error("usage: " + usage);
}

Report finish(Report r, bool ok) {
    r.exit_code = ok ? 0 : 1;
    return r;
}

void add_derivation(Report& r, const Derivation& d, bool show_proof) {
    if (!show_proof) return;
    r.derivation = to_json(d);
    for (auto& line : lines(render(d))) r.output.push_back(readable(line));
}

void add_proof(Report& r, const ProofTree& tree, bool show_proof) {
    if (!show_proof) return;
    r.derivation = to_json(tree);
    for (auto& line : lines(render(to_derivation(tree)))) r.output.push_back(readable(line));
}

Report cmd_check(const Options& o) {
    std::string system = o.system.empty() ? "fix" : o.system;
    std::string text;
    if (o.args.size() == 2) {
        system = o.args[0];
        text = o.args[1];
    } else {
        expect_args(o, 1, "check [fresh|fix|fix-gvar|strong-fix] JUDGEMENT");
        text = o.args[0];
    }
    Signature sig = signature(o);
    EqTheory th = theory(o, sig);
    EngineOptions eo;
    eo.carrier_bound = o.carrier_bound;
    ParsedJudgement p = parse_judgement(text, sig);
    Report r = report("check", system);
    bool holds = false;
    if (system == "fresh") {
        FreshJudgement j = to_fresh_judgement(p);
        Verdict v = check(j, th, eo);
        holds = v.holds;
        r.output.push_back(readable(show(j)));
        r.output.push_back(holds ? "derivable" : "not derivable");
        if (holds && v.derivation) add_derivation(r, *v.derivation, o.show_proof);
        r.diagnostics = v.diagnostics;
    } else if (system == "fix" || system == "fix-gvar") {
        VarRuleMode mode = system == "fix" ? VarRuleMode::subset_dom : VarRuleMode::group_generated;
        FixJudgement j = to_fix_judgement(p);
        Verdict v = check(j, mode, th, eo);
        holds = v.holds;
        r.output.push_back(readable(show(j)));
        r.output.push_back(holds ? "derivable" : "not derivable");
        if (holds && mode == VarRuleMode::subset_dom) {
            std::optional<ProofTree> tree;
            if (const auto* f = std::get_if<FixBody>(&j.body)) {
                tree = prove_fix(j.context, f->perm, f->term, mode, eo);
            } else {
                const auto& e = std::get<EqBody>(j.body);
                tree = prove_eq(j.context, e.lhs, e.rhs, th, eo);
            }
            if (tree) add_proof(r, *tree, o.show_proof);
        } else if (holds && v.derivation) {
            add_derivation(r, *v.derivation, o.show_proof);
        }
        r.diagnostics = v.diagnostics;
    } else if (system == "strong-fix") {
        NuJudgement j = to_nu_judgement(p);
        Verdict v = check(j, th, eo);
        holds = v.holds;
        r.output.push_back(readable(show(j)));
        r.output.push_back(holds ? "derivable" : "not derivable");
        if (holds && v.derivation) add_derivation(r, *v.derivation, o.show_proof);
        r.diagnostics = v.diagnostics;
    } else {
        throw Error("unknown system '" + system + "' (fresh, fix, fix-gvar or strong-fix)");
    }
    r.verdict = yes(holds);
    return finish(r, holds);
}

Report cmd_translate(const Options& o) {
    expect_args(o, 2, "translate fresh-to-fix|fix-to-fresh TEXT");
    const std::string& direction = o.args[0];
    Signature sig = signature(o);
    ParsedJudgement p = parse_judgement(o.args[1], sig);
    Report r = report("translate", direction);
    std::string text;
    if (direction == "fresh-to-fix") {
        if (!p.nu.empty() || !p.fix_context.empty()) throw Error("fresh-to-fix expects freshness constraints");
        text = p.body ? show(translate_fresh_to_fix(to_fresh_judgement(p))) : show(translate_fresh_to_fix(p.fresh_context));
    } else if (direction == "fix-to-fresh") {
        if (!p.fresh_context.empty()) throw Error("fix-to-fresh expects a strong context");
        text = p.body ? show(translate_fix_to_fresh(to_nu_judgement(p)))
                      : show(translate_fix_to_fresh(strong_context(p.nu, p.fix_context)));
    } else {
        throw Error("unknown direction '" + direction + "' (fresh-to-fix or fix-to-fresh)");
    }
    r.output.push_back(readable(text));
    r.verdict = "true";
    return finish(r, true);
}

std::unique_ptr<SigmaAlgebra> model_from(const Options& o, std::vector<std::string>& rest, std::size_t n,
                                         const Signature& sig, const std::string& usage) {
    std::string name = o.model;
    if (rest.size() == n + 1) {
        name = rest.front();
        rest.erase(rest.begin());
    }
    if (rest.size() != n || name.empty()) throw Error("usage: " + usage);
    auto m = make_model(name, sig);
    if (!m) {
        std::string known;
        for (const auto& s : model_selectors()) known += (known.empty() ? "" : ", ") + s;
        throw Error("unknown model '" + name + "' (" + known + ")");
    }
    return m;
}

Report cmd_eval(const Options& o) {
    Signature sig = signature(o);
    std::vector<std::string> rest = o.args;
    auto m = model_from(o, rest, 2, sig, "eval MODEL VALUATION TERM");
    Valuation v = parse_valuation(rest[0], *m, sig);
    Term t = parse_term(rest[1], sig);
    Report r = report("eval", m->name());
    r.output.push_back(readable(m->show(interpret(*m, v, t))));
    r.verdict = "true";
    return finish(r, true);
}

// Semantic values of the context and body under one valuation.
std::vector<std::string> explain(const SigmaAlgebra& m, const Valuation& v, const FixJudgement& j) {
    std::vector<std::string> out;
    for (const auto& k : j.context) {
        Elem x = interpret(m, v, Term::var(k.var));
        out.push_back("[[" + k.var.name + "]] = " + m.show(x) + ", " + show(k.perm) + " fixes it: " +
                      yes(fix_sem(m, k.perm, x)));
    }
    if (const auto* f = std::get_if<FixBody>(&j.body)) {
        out.push_back("[[" + show(f->term) + "]] = " + m.show(interpret(m, v, f->term)));
        Term moved = act(f->perm, f->term);
        out.push_back("[[" + show(moved) + "]] = " + m.show(interpret(m, v, moved)));
    } else {
        const auto& e = std::get<EqBody>(j.body);
        out.push_back("[[" + show(e.lhs) + "]] = " + m.show(interpret(m, v, e.lhs)));
        out.push_back("[[" + show(e.rhs) + "]] = " + m.show(interpret(m, v, e.rhs)));
    }
    return out;
}

VarSet vars_of(const FixJudgement& j) {
    VarSet out;
    for (const auto& k : j.context) out.insert(k.var);
    if (const auto* f = std::get_if<FixBody>(&j.body)) {
        out.merge(vars_of(f->term));
    } else {
        const auto& e = std::get<EqBody>(j.body);
        out.merge(vars_of(e.lhs));
        out.merge(vars_of(e.rhs));
    }
    return out;
}

std::string show(const SigmaAlgebra& m, const Valuation& v) {
    std::string out;
    for (const auto& [x, e] : v.values) out += (out.empty() ? "" : "; ") + x.name + " := " + m.show(e);
    return out;
}

Report cmd_validity(const Options& o) {
    Signature sig = signature(o);
    std::vector<std::string> rest = o.args;
    std::size_t n = o.random ? 1 : 2;
    auto m = model_from(o, rest, n, sig, o.random ? "validity MODEL JUDGEMENT --random N" : "validity MODEL VALUATION JUDGEMENT");
    FixJudgement j = to_fix_judgement(parse_judgement(rest.back(), sig));
    Report r = report("validity", m->name());
    r.output.push_back(show(j));
    bool valid = true;
    if (o.random) {
        GenConfig cfg = GenConfig::standard();
        for (const auto& a : atoms_of(j)) {
            if (std::find(cfg.atoms.begin(), cfg.atoms.end(), a) == cfg.atoms.end()) cfg.atoms.push_back(a);
        }
        Gen gen(o.seed, cfg);
        VarSet vars = vars_of(j);
        std::size_t tried = 0;
        for (; tried < o.random && valid; ++tried) {
            Valuation v = gen.valuation(*m, vars);
            if (!judgement_valid(*m, v, j)) {
                valid = false;
                r.output.push_back(readable("counterexample: " + show(*m, v)));
                for (auto& line : explain(*m, v, j)) r.output.push_back(readable(line));
            }
        }
        r.output.push_back("valuations tried: " + std::to_string(tried));
    } else {
        Valuation v = parse_valuation(rest.front(), *m, sig);
        for (auto& line : explain(*m, v, j)) r.output.push_back(readable(line));
        r.output.push_back("context valid: " + yes(context_valid(*m, v, j.context)));
        valid = judgement_valid(*m, v, j);
    }
    r.output.push_back(valid ? "valid" : "invalid");
    r.verdict = valid ? "valid" : "invalid";
    return finish(r, valid);
}

// Each demo step records what it saw; the first divergence from the
// expected outcome is reported.
struct Demo {
    Report& r;
    bool ok = true;

    void step(const std::string& what, bool expected_holds) {
        r.output.push_back(what);
        if (!expected_holds && ok) {
            ok = false;
            r.diagnostics.push_back("reproduction failure at: " + what);
        }
    }
};

FixJudgement pfin_judgement(const Signature& sig) {
    return to_fix_judgement(parse_judgement("(a1 a2) fix X1, (a3 a4) fix X1 |- (a1 a3) fix X1", sig));
}

Report demo_counterexample(const Signature& sig, bool pfin) {
    Report r = report("demo", pfin ? "counterexample-pfin" : "counterexample-c");
    Demo d{r};
    FixJudgement j = pfin_judgement(sig);
    Term x1 = Term::var(Var{"X1"});
    Term moved = act(std::get<FixBody>(j.body).perm, x1);
    d.step(show(j), true);
    bool derivable = check(j, VarRuleMode::subset_dom).holds;
    d.step("derivable (subset-dom): " + yes(derivable), derivable);
    std::unique_ptr<SigmaAlgebra> m = make_model(pfin ? "pfin" : "ground-alpha-c", sig);
    Valuation v = parse_valuation(pfin ? "X1 := {a1,a2}" : "X1 := a1 + a2", *m, sig);
    Elem before = interpret(*m, v, x1);
    Elem after = interpret(*m, v, moved);
    Elem expected = pfin ? parse_element("{a3,a2}", *m, sig) : parse_element("a3 + a2", *m, sig);
    d.step("[[X1]] = " + m->show(before), true);
    d.step("[[" + show(moved) + "]] = " + m->show(after), after == expected);
    bool ctx = context_valid(*m, v, j.context);
    d.step("context valid: " + yes(ctx), ctx);
    bool valid = judgement_valid(*m, v, j);
    d.step("derivable=" + yes(derivable) + ", valid-in-" + m->name() + "=" + yes(valid), !valid);
    bool gvar = check(j, VarRuleMode::group_generated).holds;
    d.step("derivable (group-generated): " + yes(gvar), !gvar);
    r.verdict = yes(d.ok);
    return finish(r, d.ok);
}

Report demo_example_7_1(const Signature& sig) {
    Report r = report("demo", "example-7-1");
    Demo d{r};
    Problem problem = parse_problem("f^C(X, Y) =?= f^C(c, (a b).X) [C]", sig);
    d.step("problem: " + show(problem.equations[0].lhs) + " =?=_C " + show(problem.equations[0].rhs), true);
    auto run = [&](const std::string& label, const Candidate& c, ValidationStatus want) {
        Validation v = validate(problem, c, sig);
        d.step(label + ": " + to_string(v.status), v.status == want);
    };
    Subst both{{Var{"X"}, parse_term("c", sig)}, {Var{"Y"}, parse_term("c", sig)}};
    Subst y{{Var{"Y"}, parse_term("c", sig)}};
    run("(∅, {X↦c, Y↦c})", FreshPair{{}, both}, ValidationStatus::valid);
    run("(∅, {Y↦c}, {X ≈ (a b).X})", FreshTriple{{}, y, {{Var{"X"}, parse_perm("(a b)")}}},
        ValidationStatus::valid_with_residual);
    FixPair fp{to_fix_judgement(parse_judgement("(a b) fix X |- X = X", sig)).context, y};
    run("({(a b) fix X}, {Y↦c})", fp, ValidationStatus::valid);
    for (std::string inst : {"f^C(a, b)", "f^C(f^C(a, b), f^C(a, b))"}) {
        Validation v = instantiate_and_check(fp, {{Var{"X"}, parse_term(inst, sig)}}, problem, sig);
        d.step("instance X↦" + inst + ": " + to_string(v.status), v.status == ValidationStatus::valid);
    }
    r.verdict = yes(d.ok);
    return finish(r, d.ok);
}

Report demo_strong_axioms() {
    Report r = report("demo", "strong-axioms");
    Demo d{r};
    const std::set<std::string> strong{"A", "Hom", "I", "N", "Lproj", "Rproj"};
    for (const auto& ax : standard_axioms()) {
        StrongAxiomResult res = is_strong_axiom(ax);
        std::string line = ax.name + ": " + show(ax.lhs) + " = " + show(ax.rhs) + "  " +
                           (res.strong ? "strong" : "not strong (" + res.reason + ")");
        d.step(line, res.strong == (strong.count(ax.name) != 0));
    }
    r.verdict = yes(d.ok);
    return finish(r, d.ok);
}

Report cmd_demo(const Options& o) {
    expect_args(o, 1, "demo counterexample-pfin|counterexample-c|example-7-1|strong-axioms");
    Signature sig = Signature::builtin();
    const std::string& name = o.args[0];
    if (name == "counterexample-pfin") return demo_counterexample(sig, true);
    if (name == "counterexample-c") return demo_counterexample(sig, false);
    if (name == "example-7-1") return demo_example_7_1(sig);
    if (name == "strong-axioms") return demo_strong_axioms();
    throw Error("unknown demo '" + name + "'");
}

Report cmd_verify(const Options& o) {
    expect_args(o, 1, "verify PROOF.json");
    Signature sig = signature(o);
    std::string system = o.system.empty() ? "fix" : o.system;
    VarRuleMode mode;
    if (system == "fix") {
        mode = VarRuleMode::subset_dom;
    } else if (system == "fix-gvar") {
        mode = VarRuleMode::group_generated;
    } else {
        throw Error("verify supports the fix and fix-gvar systems");
    }
    Theory th = theory(o, sig).is_core() ? Theory::core(sig) : Theory::commutative(sig);
    ProofTree tree = proof_from_json(nlohmann::json::parse(read_file(o.args[0])), sig);
    ProofCheck c = verify_proof(tree, th, mode, o.carrier_bound);
    Report r = report("verify", system);
    r.output.push_back(readable(show(tree.conclusion)));
    if (c.valid) {
        r.output.push_back("valid proof");
    } else {
        r.output.push_back("invalid proof");
        r.diagnostics.push_back("at " + c.mismatch->path + ": " + readable(c.mismatch->reason));
    }
    r.verdict = c.valid ? "valid" : "invalid";
    return finish(r, c.valid);
}

Report cmd_validate(const Options& o) {
    expect_args(o, 2, "validate PROBLEM CANDIDATE [--instantiate]");
    Signature sig = signature(o);
    Problem problem = parse_problem(read_file(o.args[0]), sig);
    CandidateFile cand = parse_candidate(read_file(o.args[1]), sig);
    Validation v;
    if (o.instantiate) {
        const auto* fp = std::get_if<FixPair>(&cand.candidate);
        if (!fp) throw Error("--instantiate needs a fix-pair candidate");
        if (cand.instance.empty()) throw Error("--instantiate needs 'instance X := t' lines");
        v = instantiate_and_check(*fp, cand.instance, problem, sig);
    } else {
        v = validate(problem, cand.candidate, sig);
    }
    Report r = report("validate", o.instantiate ? "instantiate" : "candidate");
    for (const auto& c : v.results) {
        std::string tag = !c.holds ? "fail" : c.residual ? "residual" : "ok";
        r.output.push_back("[" + tag + "] " + c.kind + ": " + c.text);
    }
    r.output.push_back(to_string(v.status));
    r.verdict = to_string(v.status);
    return finish(r, v.accepted());
}

Report error_report(const std::string& command, const std::string& message) {
    Report r = report(command);
    r.verdict = "error";
    r.diagnostics.push_back(message);
    r.exit_code = 2;
    return r;
}

}  // namespace

Report run_cli(const std::vector<std::string>& args, bool* json) {
    Options o;
    CLI::App app{"Nominal terms with freshness and fixed-point constraints", "nomfix"};
    app.require_subcommand(1);
    app.add_flag("--json", o.json, "Machine-readable report");
    app.add_flag("--show-proof", o.show_proof, "Print the derivation when one exists");
    app.add_option("--sig", o.sig_file, "Signature file: lines 'symbol/arity [comm]'");
    app.add_option("--seed", o.seed, "Seed for randomized valuations");
    app.add_option("--carrier-bound", o.carrier_bound, "Largest carrier for group membership");
    app.add_option("--model", o.model, "Model: singleton, pfin, words, ground-alpha, ground-alpha-c");
    app.add_option("--system", o.system, "Proof system: fresh, fix, fix-gvar, strong-fix");
    app.add_option("--theory", o.theory, "Equational theory: core or c");
    app.add_flag("--instantiate", o.instantiate, "validate: check the candidate's 'instance' lines");
    app.add_option("--random", o.random, "validity: number of random valuations to try");

    std::map<std::string, std::function<Report(const Options&)>> commands{
        {"check", cmd_check},   {"translate", cmd_translate}, {"eval", cmd_eval},         {"validity", cmd_validity},
        {"demo", cmd_demo},     {"verify", cmd_verify},       {"validate", cmd_validate},
    };
    const std::map<std::string, std::string> help{
        {"check", "Decide a judgement in one of the proof systems"},
        {"translate", "Translate between freshness and strong fixed-point contexts"},
        {"eval", "Interpret a term in a model"},
        {"validity", "Check a fixed-point judgement in a model"},
        {"demo", "Run a packaged scenario"},
        {"verify", "Check a proof tree in JSON form"},
        {"validate", "Validate a unification candidate against a problem"},
    };
    for (const auto& [name, _] : commands) {
        auto* sub = app.add_subcommand(name, help.at(name));
        sub->fallthrough();
        sub->add_option("args", o.args, "Positional arguments");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        Report r = report("help", "");
        r.verdict = "true";
        r.output = lines(app.help());
        r.exit_code = 0;
        return r;
    } catch (const CLI::ParseError& e) {
        if (json) *json = o.json;
        return error_report("", e.what());
    }
    if (json) *json = o.json;
    std::string name = app.get_subcommands().front()->get_name();
    try {
        return commands.at(name)(o);
    } catch (const ParseError& e) {
        return error_report(name, e.what());
    } catch (const nlohmann::json::exception& e) {
        return error_report(name, std::string("bad JSON: ") + e.what());
    } catch (const std::exception& e) {
        return error_report(name, e.what());
    }
}

}  // namespace nomfix
