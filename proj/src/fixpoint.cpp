#include "nomfix/fixpoint.hpp"

#include <algorithm>
#include <array>

#include "nomfix/error.hpp"
#include "nomfix/permgroups.hpp"

namespace nomfix {

std::vector<Perm> perms_for(const FixContext& ctx, const Var& x) {
    std::vector<Perm> out;
    for (const auto& c : ctx) {
        if (c.var == x) out.push_back(c.perm);
    }
    return out;
}

AtomSet domain_for(const FixContext& ctx, const Var& x) {
    AtomSet out;
    for (const auto& c : ctx) {
        if (c.var == x) out.merge(c.perm.domain());
    }
    return out;
}

FixContext extend(const FixContext& ctx, const Perm& pi, const VarSet& vars) {
    FixContext out = ctx;
    for (const auto& x : vars) out.insert({pi, x});
    return out;
}

std::string to_string(VarRuleMode mode) {
    return mode == VarRuleMode::subset_dom ? "subset-dom" : "group-generated";
}

bool operator==(const FixJudgement& lhs, const FixJudgement& rhs) {
    if (lhs.context != rhs.context || lhs.body.index() != rhs.body.index()) return false;
    if (const auto* f = std::get_if<FixBody>(&lhs.body)) {
        const auto& g = std::get<FixBody>(rhs.body);
        return f->perm == g.perm && f->term == g.term;
    }
    const auto& e = std::get<EqBody>(lhs.body);
    const auto& d = std::get<EqBody>(rhs.body);
    return e.lhs == d.lhs && e.rhs == d.rhs;
}

std::string show(const FixContext& ctx, const AtomNames* names) {
    std::string out;
    bool first = true;
    for (const auto& c : ctx) {
        if (!first) out += ", ";
        first = false;
        out += show(c.perm, names) + " fix " + c.var.name;
    }
    return out;
}

std::string show(const FixJudgement& j, const AtomNames* names) {
    std::string ctx = show(j.context, names);
    std::string out = ctx.empty() ? "|- " : ctx + " |- ";
    if (const auto* f = std::get_if<FixBody>(&j.body)) {
        return out + show(f->perm, names) + " fix " + show(f->term, names);
    }
    const auto& e = std::get<EqBody>(j.body);
    return out + show(e.lhs, names) + " = " + show(e.rhs, names);
}

AtomSet atoms_of(const FixContext& ctx) {
    AtomSet out;
    for (const auto& c : ctx) out.merge(c.perm.domain());
    return out;
}

AtomSet atoms_of(const FixJudgement& j) {
    AtomSet out = atoms_of(j.context);
    if (const auto* f = std::get_if<FixBody>(&j.body)) {
        out.merge(f->perm.domain());
        out.merge(atoms_of(f->term));
    } else {
        const auto& e = std::get<EqBody>(j.body);
        out.merge(atoms_of(e.lhs));
        out.merge(atoms_of(e.rhs));
    }
    return out;
}

bool var_rule_holds(const FixContext& ctx, const Perm& pi, const Perm& rho, const Var& x, VarRuleMode mode,
                    std::size_t carrier_bound) {
    Perm g = conjugate(pi, inverse(rho));
    if (g.is_identity()) return true;
    if (mode == VarRuleMode::subset_dom) {
        AtomSet dom = domain_for(ctx, x);
        return std::ranges::includes(dom, g.domain());
    }
    return group_member(g, GenSet(perms_for(ctx, x), carrier_bound));
}

namespace {

constexpr std::array<std::pair<Rule, const char*>, 12> kRuleNames{{
    {Rule::refl, "refl"},
    {Rule::symm, "symm"},
    {Rule::tran, "tran"},
    {Rule::ax, "ax"},
    {Rule::cong_abs, "cong_abs"},
    {Rule::cong_f, "cong_f"},
    {Rule::fr, "fr"},
    {Rule::perm, "perm"},
    {Rule::fix_a, "fix_a"},
    {Rule::fix_f, "fix_f"},
    {Rule::fix_var, "fix_var"},
    {Rule::fix_abs, "fix_abs"},
}};

}  // namespace

std::string to_string(Rule r) {
    for (const auto& [rule, name] : kRuleNames) {
        if (rule == r) return name;
    }
    return "?";
}

std::optional<Rule> rule_from_string(const std::string& s) {
    for (const auto& [rule, name] : kRuleNames) {
        if (s == name) return rule;
    }
    return std::nullopt;
}

Derivation to_derivation(const ProofTree& tree) {
    Derivation d;
    d.rule = to_string(tree.rule);
    if (tree.rule == Rule::ax) d.rule += " " + tree.axiom;
    if (tree.rule == Rule::cong_f) d.rule += " " + std::to_string(tree.position);
    d.conclusion = show(tree.conclusion);
    for (const auto& p : tree.premises) d.premises.push_back(to_derivation(p));
    return d;
}

const Axiom* Theory::find(const std::string& axiom_name) const {
    for (const auto& ax : axioms) {
        if (ax.name == axiom_name) return &ax;
    }
    return nullptr;
}

Theory Theory::core(Signature sig) { return Theory{"CORE", std::move(sig), {}}; }

Theory Theory::commutative(Signature sig) {
    Theory t{"C", std::move(sig), {}};
    Term x = Term::var(Var{"X"});
    Term y = Term::var(Var{"Y"});
    for (const auto& f : t.signature.commutative_symbols()) {
        t.axioms.push_back({"comm(" + f + ")", {}, Term::app(f, {x, y}), Term::app(f, {y, x})});
    }
    return t;
}

namespace {

AtomSet atoms_of_all(const FixContext& ctx, const Perm& pi, const Term& t) {
    AtomSet out = atoms_of(ctx);
    out.merge(pi.domain());
    out.merge(atoms_of(t));
    return out;
}

// Syntax-directed search for Υ ⊢ π ⋏ t.
class FixEngine {
  public:
    FixEngine(VarRuleMode mode, std::size_t bound, FreshSupply& supply) : mode_(mode), bound_(bound), supply_(supply) {}

    bool prove(const FixContext& ctx, const Perm& pi, const Term& t, ProofTree* out) {
        if (out) {
            out->conclusion = FixJudgement{ctx, FixBody{pi, t}};
        }
        switch (t.kind()) {
            case Term::Kind::atom:
                if (out) out->rule = Rule::fix_a;
                return pi(t.atom_value()) == t.atom_value();
            case Term::Kind::susp:
                if (out) out->rule = Rule::fix_var;
                return var_rule_holds(ctx, pi, t.perm(), t.var_value(), mode_, bound_);
            case Term::Kind::abs: {
                Atom c1 = supply_.next();
                Atom c2 = supply_.next();
                FixContext ext = extend(ctx, Perm::swap(c1, c2), vars_of(t.body()));
                Term renamed = act(Perm::swap(t.atom_value(), c1), t.body());
                if (!out) return prove(ext, pi, renamed, nullptr);
                out->rule = Rule::fix_abs;
                out->fresh = {c1, c2};
                out->premises.resize(1);
                return prove(ext, pi, renamed, &out->premises[0]);
            }
            case Term::Kind::app: {
                if (out) {
                    out->rule = Rule::fix_f;
                    out->premises.resize(t.args().size());
                }
                for (std::size_t i = 0; i < t.args().size(); ++i) {
                    if (!prove(ctx, pi, t.args()[i], out ? &out->premises[i] : nullptr)) return false;
                }
                return true;
            }
        }
        return false;
    }

  private:
    VarRuleMode mode_;
    std::size_t bound_;
    FreshSupply& supply_;
};

// The structural decision procedure for Υ ⊢ s = t; the trace uses its own
// rule labels and embeds the ⋏ subderivations.
class EqEngine {
  public:
    EqEngine(const FixContext& ctx, VarRuleMode mode, const EqTheory& theory, std::size_t bound, FreshSupply& supply)
        : ctx_(ctx), mode_(mode), theory_(theory), bound_(bound), supply_(supply), fix_(mode, bound, supply) {}

    bool equal(const Term& s, const Term& t, Derivation* out) {
        auto conclude = [&](const char* rule) {
            if (out) {
                out->rule = rule;
                out->conclusion = show(FixJudgement{ctx_, EqBody{s, t}});
            }
        };
        if (s.kind() != t.kind()) return false;
        switch (s.kind()) {
            case Term::Kind::atom:
                if (s.atom_value() != t.atom_value()) return false;
                conclude("=a");
                return true;
            case Term::Kind::susp: {
                if (s.var_value() != t.var_value()) return false;
                if (!var_rule_holds(ctx_, compose(inverse(t.perm()), s.perm()), Perm{}, s.var_value(), mode_, bound_)) {
                    return false;
                }
                conclude("=var");
                return true;
            }
            case Term::Kind::abs: {
                const Atom& a = s.atom_value();
                const Atom& b = t.atom_value();
                if (a == b) {
                    Derivation sub;
                    if (!equal(s.body(), t.body(), out ? &sub : nullptr)) return false;
                    conclude("=[a]");
                    if (out) out->premises.push_back(std::move(sub));
                    return true;
                }
                Derivation eq;
                if (!equal(s.body(), act(Perm::swap(a, b), t.body()), out ? &eq : nullptr)) return false;
                Atom c1 = supply_.next();
                Atom c2 = supply_.next();
                FixContext ext = extend(ctx_, Perm::swap(c1, c2), vars_of(t.body()));
                ProofTree fix;
                if (!fix_.prove(ext, Perm::swap(a, c1), t.body(), out ? &fix : nullptr)) return false;
                conclude("=ab");
                if (out) out->premises = {std::move(eq), to_derivation(fix)};
                return true;
            }
            case Term::Kind::app: {
                if (s.symbol() != t.symbol() || s.args().size() != t.args().size()) return false;
                if (argwise(s.args(), t.args(), out)) {
                    conclude("=f");
                    return true;
                }
                if (theory_.is_commutative(s.symbol()) && s.args().size() == 2) {
                    std::vector<Term> swapped{t.args()[1], t.args()[0]};
                    if (argwise(s.args(), swapped, out)) {
                        conclude("=fC");
                        return true;
                    }
                }
                return false;
            }
        }
        return false;
    }

  private:
    bool argwise(const std::vector<Term>& lhs, const std::vector<Term>& rhs, Derivation* out) {
        std::vector<Derivation> subs(lhs.size());
        for (std::size_t i = 0; i < lhs.size(); ++i) {
            if (!equal(lhs[i], rhs[i], out ? &subs[i] : nullptr)) return false;
        }
        if (out) out->premises = std::move(subs);
        return true;
    }

    const FixContext& ctx_;
    VarRuleMode mode_;
    const EqTheory& theory_;
    std::size_t bound_;
    FreshSupply& supply_;
    FixEngine fix_;
};

FixJudgement eq_judgement(const FixContext& ctx, const Term& s, const Term& t) {
    return FixJudgement{ctx, EqBody{s, t}};
}

ProofTree leaf(Rule rule, FixJudgement conclusion) {
    ProofTree tree;
    tree.rule = rule;
    tree.conclusion = std::move(conclusion);
    return tree;
}

// Builds proof trees for equalities decided by EqEngine.
class EqProver {
  public:
    EqProver(const FixContext& ctx, const EqTheory& theory, std::size_t bound, FreshSupply& supply)
        : ctx_(ctx), theory_(theory), supply_(supply), fix_(VarRuleMode::subset_dom, bound, supply) {}

    std::optional<ProofTree> prove(const Term& s, const Term& t) {
        if (s == t) return leaf(Rule::refl, eq_judgement(ctx_, s, t));
        if (s.kind() != t.kind()) return std::nullopt;
        switch (s.kind()) {
            case Term::Kind::atom:
                return std::nullopt;
            case Term::Kind::susp:
                if (s.var_value() != t.var_value()) return std::nullopt;
                return suspension(s, t);
            case Term::Kind::abs: {
                const Atom& a = s.atom_value();
                const Atom& b = t.atom_value();
                if (a == b) {
                    auto body = prove(s.body(), t.body());
                    if (!body) return std::nullopt;
                    ProofTree tree = leaf(Rule::cong_abs, eq_judgement(ctx_, s, t));
                    tree.premises.push_back(std::move(*body));
                    return tree;
                }
                // [a]s' = [a]((a b)·t') = [b]t'
                Perm ab = Perm::swap(a, b);
                Term mid = act(ab, t);
                auto inner = prove(s.body(), mid.body());
                if (!inner) return std::nullopt;
                ProofTree cong = leaf(Rule::cong_abs, eq_judgement(ctx_, s, mid));
                cong.premises.push_back(std::move(*inner));
                auto swap = perm_step(a, b, t);
                if (!swap) return std::nullopt;
                return chain({std::move(cong), std::move(*swap)});
            }
            case Term::Kind::app: {
                if (s.symbol() != t.symbol() || s.args().size() != t.args().size()) return std::nullopt;
                if (auto direct = congruence(s, t)) return direct;
                if (theory_.is_commutative(s.symbol()) && s.args().size() == 2) {
                    Term flipped = Term::app(s.symbol(), {s.args()[1], s.args()[0]});
                    auto rest = congruence(flipped, t);
                    if (!rest) return std::nullopt;
                    ProofTree ax = leaf(Rule::ax, eq_judgement(ctx_, s, flipped));
                    ax.axiom = "comm(" + s.symbol() + ")";
                    ax.subst = {{Var{"X"}, s.args()[0]}, {Var{"Y"}, s.args()[1]}};
                    return chain({std::move(ax), std::move(*rest)});
                }
                return std::nullopt;
            }
        }
        return std::nullopt;
    }

  private:
    // (perm): Υ ⊢ (a b)·t = t
    std::optional<ProofTree> perm_step(const Atom& a, const Atom& b, const Term& t) {
        Atom c1 = supply_.next();
        Atom c2 = supply_.next();
        Atom d1 = supply_.next();
        Atom d2 = supply_.next();
        VarSet vars = vars_of(t);
        ProofTree left;
        ProofTree right;
        if (!fix_.prove(extend(ctx_, Perm::swap(c1, c2), vars), Perm::swap(a, c1), t, &left)) return std::nullopt;
        if (!fix_.prove(extend(ctx_, Perm::swap(d1, d2), vars), Perm::swap(b, d1), t, &right)) return std::nullopt;
        ProofTree tree = leaf(Rule::perm, eq_judgement(ctx_, act(Perm::swap(a, b), t), t));
        tree.perm = Perm::swap(a, b);
        tree.fresh = {c1, c2, d1, d2};
        tree.premises = {std::move(left), std::move(right)};
        return tree;
    }

    // π·X = ρ·X: write ρ⁻¹∘π as swaps τ1…τk inside dom(perm(Υ|X)) and move
    // from ρ·X to π·X one conjugated swap at a time.
    std::optional<ProofTree> suspension(const Term& s, const Term& t) {
        const Perm& pi = s.perm();
        const Perm& rho = t.perm();
        Perm mu = Perm::from_map(compose(inverse(rho), pi).mapping());
        if (!std::ranges::includes(domain_for(ctx_, s.var_value()), mu.domain())) return std::nullopt;
        std::vector<ProofTree> steps;
        Term cur = t;
        const auto& swaps = mu.swaps();
        for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) {
            auto step = perm_step(rho(it->first), rho(it->second), cur);
            if (!step) return std::nullopt;
            cur = std::get<EqBody>(step->conclusion.body).lhs;
            steps.push_back(std::move(*step));
        }
        std::reverse(steps.begin(), steps.end());
        ProofTree tree = chain(std::move(steps));
        std::get<EqBody>(tree.conclusion.body).lhs = s;
        return tree;
    }

    // f(s̄) = f(t̄) one argument at a time.
    std::optional<ProofTree> congruence(const Term& s, const Term& t) {
        std::vector<ProofTree> steps;
        std::vector<Term> cur = s.args();
        for (std::size_t i = 0; i < cur.size(); ++i) {
            if (cur[i] == t.args()[i]) continue;
            auto sub = prove(cur[i], t.args()[i]);
            if (!sub) return std::nullopt;
            Term from = Term::app(s.symbol(), cur);
            cur[i] = t.args()[i];
            ProofTree step = leaf(Rule::cong_f, eq_judgement(ctx_, from, Term::app(s.symbol(), cur)));
            step.position = i + 1;
            step.premises.push_back(std::move(*sub));
            steps.push_back(std::move(step));
        }
        if (steps.empty()) return leaf(Rule::refl, eq_judgement(ctx_, s, t));
        return chain(std::move(steps));
    }

    // s0 = s1, s1 = s2, … ⟹ s0 = sn
    ProofTree chain(std::vector<ProofTree> steps) {
        ProofTree acc = std::move(steps.back());
        for (std::size_t i = steps.size() - 1; i-- > 0;) {
            const Term& lhs = std::get<EqBody>(steps[i].conclusion.body).lhs;
            const Term& rhs = std::get<EqBody>(acc.conclusion.body).rhs;
            ProofTree tran = leaf(Rule::tran, eq_judgement(ctx_, lhs, rhs));
            tran.premises = {std::move(steps[i]), std::move(acc)};
            acc = std::move(tran);
        }
        return acc;
    }

    const FixContext& ctx_;
    const EqTheory& theory_;
    FreshSupply& supply_;
    FixEngine fix_;
};

FreshSupply supply_for(const EngineOptions& opts, AtomSet avoid) {
    FreshSupply supply(opts.fresh_prefix);
    supply.avoid(avoid);
    return supply;
}

}  // namespace

Verdict check_fix(const FixContext& ctx, const Perm& pi, const Term& t, VarRuleMode mode, const EngineOptions& opts) {
    FreshSupply supply = supply_for(opts, atoms_of_all(ctx, pi, t));
    FixEngine engine(mode, opts.carrier_bound, supply);
    Verdict v;
    if (!opts.build_derivation) {
        v.holds = engine.prove(ctx, pi, t, nullptr);
        return v;
    }
    ProofTree tree;
    v.holds = engine.prove(ctx, pi, t, &tree);
    if (v.holds) v.derivation = to_derivation(tree);
    return v;
}

std::optional<ProofTree> prove_fix(const FixContext& ctx, const Perm& pi, const Term& t, VarRuleMode mode,
                                   const EngineOptions& opts) {
    FreshSupply supply = supply_for(opts, atoms_of_all(ctx, pi, t));
    FixEngine engine(mode, opts.carrier_bound, supply);
    ProofTree tree;
    if (!engine.prove(ctx, pi, t, &tree)) return std::nullopt;
    return tree;
}

Verdict check_eq_fix(const FixContext& ctx, const Term& s, const Term& t, VarRuleMode mode, const EqTheory& theory,
                     const EngineOptions& opts) {
    AtomSet avoid = atoms_of_all(ctx, Perm{}, s);
    avoid.merge(atoms_of(t));
    FreshSupply supply = supply_for(opts, avoid);
    EqEngine engine(ctx, mode, theory, opts.carrier_bound, supply);
    Verdict v;
    Derivation d;
    v.holds = engine.equal(s, t, opts.build_derivation ? &d : nullptr);
    if (!v.holds || !opts.build_derivation) return v;
    if (mode == VarRuleMode::subset_dom) {
        if (auto tree = prove_eq(ctx, s, t, theory, opts)) {
            v.derivation = to_derivation(*tree);
            return v;
        }
    }
    v.derivation = std::move(d);
    return v;
}

std::optional<ProofTree> prove_eq(const FixContext& ctx, const Term& s, const Term& t, const EqTheory& theory,
                                  const EngineOptions& opts) {
    AtomSet avoid = atoms_of_all(ctx, Perm{}, s);
    avoid.merge(atoms_of(t));
    FreshSupply supply = supply_for(opts, avoid);
    EqProver prover(ctx, theory, opts.carrier_bound, supply);
    return prover.prove(s, t);
}

Verdict check(const FixJudgement& j, VarRuleMode mode, const EqTheory& theory, const EngineOptions& opts) {
    if (const auto* f = std::get_if<FixBody>(&j.body)) return check_fix(j.context, f->perm, f->term, mode, opts);
    const auto& e = std::get<EqBody>(j.body);
    return check_eq_fix(j.context, e.lhs, e.rhs, mode, theory, opts);
}

namespace {

class ProofChecker {
  public:
    ProofChecker(const Theory& theory, VarRuleMode mode, std::size_t bound)
        : theory_(theory), mode_(mode), bound_(bound) {}

    std::optional<RuleMismatch> check(const ProofTree& node, const std::string& path) {
        if (auto reason = check_node(node)) return RuleMismatch{path, *reason};
        for (std::size_t i = 0; i < node.premises.size(); ++i) {
            if (auto m = check(node.premises[i], path + "." + std::to_string(i + 1))) return m;
        }
        return std::nullopt;
    }

  private:
    using Reason = std::optional<std::string>;

    static std::size_t expected_premises(const ProofTree& node, const Axiom* ax) {
        switch (node.rule) {
            case Rule::refl:
            case Rule::fix_a:
            case Rule::fix_var:
                return 0;
            case Rule::symm:
            case Rule::cong_abs:
            case Rule::cong_f:
            case Rule::fr:
            case Rule::fix_abs:
                return 1;
            case Rule::tran:
            case Rule::perm:
                return 2;
            case Rule::ax:
                return ax ? ax->context.size() : 0;
            case Rule::fix_f: {
                const auto* f = std::get_if<FixBody>(&node.conclusion.body);
                return f && f->term.is_app() ? f->term.args().size() : 0;
            }
        }
        return 0;
    }

    static bool is_fix_rule(Rule r) {
        return r == Rule::fix_a || r == Rule::fix_f || r == Rule::fix_var || r == Rule::fix_abs;
    }

    Reason signature_ok(const FixJudgement& j) const {
        try {
            if (const auto* f = std::get_if<FixBody>(&j.body)) {
                check_signature(theory_.signature, f->term);
            } else {
                const auto& e = std::get<EqBody>(j.body);
                check_signature(theory_.signature, e.lhs);
                check_signature(theory_.signature, e.rhs);
            }
        } catch (const Error& err) {
            return std::string(err.what());
        }
        return std::nullopt;
    }

    static Reason fresh_ok(const ProofTree& node, std::size_t count) {
        if (node.fresh.size() != count) return "expected " + std::to_string(count) + " fresh atoms";
        AtomSet seen(node.fresh.begin(), node.fresh.end());
        if (seen.size() != count) return std::string("fresh atoms are not distinct");
        AtomSet used = atoms_of(node.conclusion);
        for (const auto& c : node.fresh) {
            if (used.count(c)) return "atom " + c.str() + " is not fresh";
        }
        return std::nullopt;
    }

    Reason check_node(const ProofTree& node) const {
        const Axiom* ax = nullptr;
        if (node.rule == Rule::ax) {
            ax = theory_.find(node.axiom);
            if (!ax) return "unknown axiom '" + node.axiom + "' in theory " + theory_.name;
        }
        bool fix_rule = is_fix_rule(node.rule);
        if (fix_rule != std::holds_alternative<FixBody>(node.conclusion.body)) {
            return to_string(node.rule) + " has the wrong kind of conclusion";
        }
        if (node.premises.size() != expected_premises(node, ax)) {
            return to_string(node.rule) + " needs " + std::to_string(expected_premises(node, ax)) +
                   " premise(s) but has " + std::to_string(node.premises.size());
        }
        if (auto bad = signature_ok(node.conclusion)) return bad;
        return fix_rule ? check_fix_node(node) : check_eq_node(node, ax);
    }

    Reason check_fix_node(const ProofTree& node) const {
        const FixContext& ctx = node.conclusion.context;
        const auto& body = std::get<FixBody>(node.conclusion.body);
        const Term& t = body.term;
        switch (node.rule) {
            case Rule::fix_a:
                if (!t.is_atom()) return std::string("fix_a needs an atom");
                if (body.perm(t.atom_value()) != t.atom_value()) return std::string("permutation moves the atom");
                return std::nullopt;
            case Rule::fix_var:
                if (!t.is_susp()) return std::string("fix_var needs a suspension");
                if (!var_rule_holds(ctx, body.perm, t.perm(), t.var_value(), mode_, bound_)) {
                    return "variable side condition fails (" + to_string(mode_) + ")";
                }
                return std::nullopt;
            case Rule::fix_f:
                if (!t.is_app()) return std::string("fix_f needs an application");
                for (std::size_t i = 0; i < t.args().size(); ++i) {
                    FixJudgement want{ctx, FixBody{body.perm, t.args()[i]}};
                    if (!(node.premises[i].conclusion == want)) return "premise " + std::to_string(i + 1) + " mismatch";
                }
                return std::nullopt;
            case Rule::fix_abs: {
                if (!t.is_abs()) return std::string("fix_abs needs an abstraction");
                if (auto bad = fresh_ok(node, 2)) return bad;
                const Atom& c1 = node.fresh[0];
                const Atom& c2 = node.fresh[1];
                FixJudgement want{extend(ctx, Perm::swap(c1, c2), vars_of(t.body())),
                                  FixBody{body.perm, act(Perm::swap(t.atom_value(), c1), t.body())}};
                if (!(node.premises[0].conclusion == want)) return std::string("premise mismatch");
                return std::nullopt;
            }
            default:
                return std::string("not a fixed-point rule");
        }
    }

    Reason check_eq_node(const ProofTree& node, const Axiom* ax) const {
        const FixContext& ctx = node.conclusion.context;
        const auto& body = std::get<EqBody>(node.conclusion.body);
        auto premise_eq = [&](std::size_t i) -> const EqBody* {
            return std::get_if<EqBody>(&node.premises[i].conclusion.body);
        };
        auto same_ctx = [&](std::size_t i) { return node.premises[i].conclusion.context == ctx; };
        switch (node.rule) {
            case Rule::refl:
                if (!(body.lhs == body.rhs)) return std::string("refl needs identical sides");
                return std::nullopt;
            case Rule::symm: {
                const auto* p = premise_eq(0);
                if (!p || !same_ctx(0) || !(p->lhs == body.rhs) || !(p->rhs == body.lhs)) {
                    return std::string("premise is not the symmetric equality");
                }
                return std::nullopt;
            }
            case Rule::tran: {
                const auto* p = premise_eq(0);
                const auto* q = premise_eq(1);
                if (!p || !q || !same_ctx(0) || !same_ctx(1)) return std::string("premises must be equalities");
                if (!(p->lhs == body.lhs) || !(q->rhs == body.rhs) || !(p->rhs == q->lhs)) {
                    return std::string("premises do not chain");
                }
                return std::nullopt;
            }
            case Rule::cong_abs: {
                const auto* p = premise_eq(0);
                if (!body.lhs.is_abs() || !body.rhs.is_abs() || body.lhs.atom_value() != body.rhs.atom_value()) {
                    return std::string("cong_abs needs abstractions over the same atom");
                }
                if (!p || !same_ctx(0) || !(p->lhs == body.lhs.body()) || !(p->rhs == body.rhs.body())) {
                    return std::string("premise mismatch");
                }
                return std::nullopt;
            }
            case Rule::cong_f: {
                const Term& s = body.lhs;
                const Term& t = body.rhs;
                if (!s.is_app() || !t.is_app() || s.symbol() != t.symbol() || s.args().size() != t.args().size()) {
                    return std::string("cong_f needs applications of the same symbol");
                }
                if (node.position < 1 || node.position > s.args().size()) return std::string("position out of range");
                std::size_t k = node.position - 1;
                for (std::size_t i = 0; i < s.args().size(); ++i) {
                    if (i != k && !(s.args()[i] == t.args()[i])) {
                        return "argument " + std::to_string(i + 1) + " differs outside the position";
                    }
                }
                const auto* p = premise_eq(0);
                if (!p || !same_ctx(0) || !(p->lhs == s.args()[k]) || !(p->rhs == t.args()[k])) {
                    return std::string("premise mismatch");
                }
                return std::nullopt;
            }
            case Rule::fr: {
                if (!node.var) return std::string("fr needs a variable");
                if (!std::ranges::includes(domain_for(ctx, *node.var), node.perm.domain())) {
                    return std::string("dom(pi) is not inside dom(perm(ctx|X))");
                }
                FixContext wider = ctx;
                wider.insert({node.perm, *node.var});
                FixJudgement want{wider, node.conclusion.body};
                if (!(node.premises[0].conclusion == want)) return std::string("premise mismatch");
                return std::nullopt;
            }
            case Rule::perm: {
                if (node.perm.swaps().size() != 1 || node.perm.is_identity()) {
                    return std::string("perm needs a single swap");
                }
                if (auto bad = fresh_ok(node, 4)) return bad;
                const auto& [a, b] = node.perm.swaps().front();
                const Term& t = body.rhs;
                if (!(body.lhs == act(node.perm, t))) return std::string("left side is not (a b) applied to the right");
                VarSet vars = vars_of(t);
                const auto& f = node.fresh;
                FixJudgement left{extend(ctx, Perm::swap(f[0], f[1]), vars), FixBody{Perm::swap(a, f[0]), t}};
                FixJudgement right{extend(ctx, Perm::swap(f[2], f[3]), vars), FixBody{Perm::swap(b, f[2]), t}};
                if (!(node.premises[0].conclusion == left)) return std::string("first premise mismatch");
                if (!(node.premises[1].conclusion == right)) return std::string("second premise mismatch");
                return std::nullopt;
            }
            case Rule::ax: {
                Term lhs = act(node.perm, subst_apply(ax->lhs, node.subst));
                Term rhs = act(node.perm, subst_apply(ax->rhs, node.subst));
                if (!(lhs == body.lhs) || !(rhs == body.rhs)) return std::string("conclusion is not an axiom instance");
                std::vector<bool> used(node.premises.size(), false);
                for (const auto& c : ax->context) {
                    FixJudgement want{ctx, FixBody{conjugate(c.perm, node.perm),
                                                   act(node.perm, subst_apply(Term::var(c.var), node.subst))}};
                    bool found = false;
                    for (std::size_t i = 0; i < node.premises.size() && !found; ++i) {
                        if (!used[i] && node.premises[i].conclusion == want) used[i] = found = true;
                    }
                    if (!found) return "missing premise " + show(want);
                }
                return std::nullopt;
            }
            default:
                return std::string("not an equality rule");
        }
    }

    const Theory& theory_;
    VarRuleMode mode_;
    std::size_t bound_;
};

}  // namespace

ProofCheck verify_proof(const ProofTree& tree, const Theory& theory, VarRuleMode mode, std::size_t carrier_bound) {
    ProofChecker checker(theory, mode, carrier_bound);
    ProofCheck out;
    out.mismatch = checker.check(tree, "root");
    out.valid = !out.mismatch.has_value();
    return out;
}

}  // namespace nomfix
