#include "nomfix/strong.hpp"

#include <algorithm>

#include "nomfix/error.hpp"

namespace nomfix {

void StrongContext::validate() const {
    AtomSet seen;
    for (const auto& c : nu) {
        if (!seen.insert(c).second) throw ShapeError("new atom " + c.str() + " is listed twice");
    }
    for (const auto& k : constraints) {
        if (!seen.count(k.nu)) {
            throw ShapeError("(" + k.atom.str() + " " + k.nu.str() + ") fix " + k.var.name + ": " + k.nu.str() +
                             " is not a new atom");
        }
        if (seen.count(k.atom)) {
            throw ShapeError("(" + k.atom.str() + " " + k.nu.str() + ") fix " + k.var.name + ": " + k.atom.str() +
                             " is a new atom");
        }
    }
}

AtomSet StrongContext::domain_for(const Var& x) const {
    AtomSet out;
    for (const auto& k : constraints) {
        if (k.var == x) out.insert(k.atom);
    }
    return out;
}

FixContext StrongContext::as_fix_context() const {
    FixContext out;
    for (const auto& k : constraints) out.insert({Perm::swap(k.atom, k.nu), k.var});
    return out;
}

void NuJudgement::validate() const {
    context.validate();
    AtomSet outer(nu.begin(), nu.end());
    if (outer.size() != nu.size()) throw ShapeError("repeated new atom in judgement");
    for (const auto& c : context.nu) {
        if (!outer.count(c)) throw ShapeError("context atom " + c.str() + " is not bound by the judgement");
    }
    for (const auto& k : context.constraints) {
        if (outer.count(k.atom)) throw ShapeError("constrained atom " + k.atom.str() + " is a new atom");
    }
}

namespace {

std::string show_nu(const std::vector<Atom>& nu, const AtomNames* names) {
    if (nu.empty()) return {};
    std::string out = "new";
    for (std::size_t i = 0; i < nu.size(); ++i) out += (i ? ", " : " ") + show(nu[i], names);
    return out + ". ";
}

std::string show_constraints(const StrongContext& ctx, const AtomNames* names) {
    std::string out;
    bool first = true;
    for (const auto& k : ctx.constraints) {
        if (!first) out += ", ";
        first = false;
        out += "(" + show(k.atom, names) + " " + show(k.nu, names) + ") fix " + k.var.name;
    }
    return out;
}

std::string show_body(const std::variant<FixBody, EqBody>& body, const AtomNames* names) {
    if (const auto* f = std::get_if<FixBody>(&body)) return show(f->perm, names) + " fix " + show(f->term, names);
    const auto& e = std::get<EqBody>(body);
    return show(e.lhs, names) + " ~ " + show(e.rhs, names);
}

}  // namespace

std::string show(const StrongContext& ctx, const AtomNames* names) {
    return show_nu(ctx.nu, names) + show_constraints(ctx, names);
}

std::string show(const NuJudgement& j, const AtomNames* names) {
    std::string ctx = show_constraints(j.context, names);
    return show_nu(j.nu, names) + (ctx.empty() ? "|- " : ctx + " |- ") + show_body(j.body, names);
}

AtomSet atoms_of(const NuJudgement& j) {
    AtomSet out(j.nu.begin(), j.nu.end());
    for (const auto& k : j.context.constraints) {
        out.insert(k.atom);
        out.insert(k.nu);
    }
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

StrongContext strong_context(const std::vector<Atom>& nu, const FixContext& ctx) {
    AtomSet bound(nu.begin(), nu.end());
    StrongContext out;
    out.nu = nu;
    for (const auto& c : ctx) {
        Perm cycles = Perm::from_map(c.perm.mapping());
        const auto& swaps = cycles.swaps();
        std::string text = show(c.perm) + " fix " + c.var.name;
        if (swaps.size() != 1) throw ShapeError(text + " is not a single swap");
        auto [a, b] = swaps.front();
        if (bound.count(a)) std::swap(a, b);
        if (!bound.count(b)) throw ShapeError(text + " swaps no new atom");
        if (bound.count(a)) throw ShapeError(text + " swaps two new atoms");
        out.constraints.insert({a, b, c.var});
    }
    // Keep only the ν atoms the context binds; the rest belong to the judgement.
    std::vector<Atom> used;
    for (const auto& c : nu) {
        bool found = std::ranges::any_of(out.constraints, [&](const StrongConstraint& k) { return k.nu == c; });
        if (found) used.push_back(c);
    }
    out.nu = std::move(used);
    out.validate();
    return out;
}

NuJudgement strong_judgement(const std::vector<Atom>& nu, const FixJudgement& j) {
    NuJudgement out{nu, strong_context(nu, j.context), j.body};
    out.validate();
    return out;
}

namespace {

class StrongEngine {
  public:
    StrongEngine(const StrongContext& ctx, const EqTheory& theory, FreshSupply& supply)
        : ctx_(ctx), theory_(theory), supply_(supply) {}

    bool fix(const std::vector<Atom>& nu, const Perm& pi, const Term& t, Derivation* out) {
        auto conclude = [&](const char* rule) {
            if (out) {
                out->rule = rule;
                out->conclusion = show(NuJudgement{nu, ctx_, FixBody{pi, t}});
            }
        };
        switch (t.kind()) {
            case Term::Kind::atom:
                if (pi(t.atom_value()) != t.atom_value()) return false;
                conclude("fix_a");
                return true;
            case Term::Kind::susp:
                if (!outside_nu_within(nu, conjugate(pi, inverse(t.perm())), t.var_value())) return false;
                conclude("fix_var");
                return true;
            case Term::Kind::abs: {
                Atom c1 = supply_.next();
                std::vector<Atom> wider = nu;
                wider.push_back(c1);
                Derivation sub;
                if (!fix(wider, pi, act(Perm::swap(t.atom_value(), c1), t.body()), out ? &sub : nullptr)) return false;
                conclude("fix_abs");
                if (out) out->premises.push_back(std::move(sub));
                return true;
            }
            case Term::Kind::app: {
                std::vector<Derivation> subs(t.args().size());
                for (std::size_t i = 0; i < t.args().size(); ++i) {
                    if (!fix(nu, pi, t.args()[i], out ? &subs[i] : nullptr)) return false;
                }
                conclude("fix_f");
                if (out) out->premises = std::move(subs);
                return true;
            }
        }
        return false;
    }

    bool alpha(const std::vector<Atom>& nu, const Term& s, const Term& t, Derivation* out) {
        auto conclude = [&](const char* rule) {
            if (out) {
                out->rule = rule;
                out->conclusion = show(NuJudgement{nu, ctx_, EqBody{s, t}});
            }
        };
        if (s.kind() != t.kind()) return false;
        switch (s.kind()) {
            case Term::Kind::atom:
                if (s.atom_value() != t.atom_value()) return false;
                conclude("~a");
                return true;
            case Term::Kind::susp:
                if (s.var_value() != t.var_value()) return false;
                if (!outside_nu_within(nu, compose(inverse(t.perm()), s.perm()), s.var_value())) return false;
                conclude("~var");
                return true;
            case Term::Kind::abs: {
                const Atom& a = s.atom_value();
                const Atom& b = t.atom_value();
                if (a == b) {
                    Derivation sub;
                    if (!alpha(nu, s.body(), t.body(), out ? &sub : nullptr)) return false;
                    conclude("~[a]");
                    if (out) out->premises.push_back(std::move(sub));
                    return true;
                }
                Derivation eq;
                Derivation fr;
                if (!alpha(nu, s.body(), act(Perm::swap(a, b), t.body()), out ? &eq : nullptr)) return false;
                Atom c1 = supply_.next();
                std::vector<Atom> wider = nu;
                wider.push_back(c1);
                if (!fix(wider, Perm::swap(a, c1), t.body(), out ? &fr : nullptr)) return false;
                conclude("~ab");
                if (out) out->premises = {std::move(eq), std::move(fr)};
                return true;
            }
            case Term::Kind::app: {
                if (s.symbol() != t.symbol() || s.args().size() != t.args().size()) return false;
                if (argwise(nu, s.args(), t.args(), out)) {
                    conclude("~f");
                    return true;
                }
                if (theory_.is_commutative(s.symbol()) && s.args().size() == 2) {
                    std::vector<Term> swapped{t.args()[1], t.args()[0]};
                    if (argwise(nu, s.args(), swapped, out)) {
                        conclude("~fC");
                        return true;
                    }
                }
                return false;
            }
        }
        return false;
    }

  private:
    // dom(g) ∖ c̄ ⊆ dom(perm(Υ|X))
    bool outside_nu_within(const std::vector<Atom>& nu, const Perm& g, const Var& x) const {
        AtomSet dom = ctx_.domain_for(x);
        for (const auto& a : g.domain()) {
            if (dom.count(a)) continue;
            if (std::find(nu.begin(), nu.end(), a) == nu.end()) return false;
        }
        return true;
    }

    bool argwise(const std::vector<Atom>& nu, const std::vector<Term>& lhs, const std::vector<Term>& rhs,
                 Derivation* out) {
        std::vector<Derivation> subs(lhs.size());
        for (std::size_t i = 0; i < lhs.size(); ++i) {
            if (!alpha(nu, lhs[i], rhs[i], out ? &subs[i] : nullptr)) return false;
        }
        if (out) out->premises = std::move(subs);
        return true;
    }

    const StrongContext& ctx_;
    const EqTheory& theory_;
    FreshSupply& supply_;
};

Verdict run(const NuJudgement& j, const EqTheory& theory, const EngineOptions& opts) {
    j.validate();
    FreshSupply supply(opts.fresh_prefix);
    supply.avoid(atoms_of(j));
    StrongEngine engine(j.context, theory, supply);
    Derivation d;
    Derivation* out = opts.build_derivation ? &d : nullptr;
    Verdict v;
    if (const auto* f = std::get_if<FixBody>(&j.body)) {
        v.holds = engine.fix(j.nu, f->perm, f->term, out);
    } else {
        const auto& e = std::get<EqBody>(j.body);
        v.holds = engine.alpha(j.nu, e.lhs, e.rhs, out);
    }
    if (v.holds && out) v.derivation = std::move(d);
    return v;
}

}  // namespace

Verdict check_fix_strong(const NuJudgement& j, const EngineOptions& opts) {
    if (!std::holds_alternative<FixBody>(j.body)) throw ShapeError("expected a fixed-point conclusion");
    return run(j, EqTheory{}, opts);
}

Verdict check_alpha_strong(const NuJudgement& j, const EqTheory& theory, const EngineOptions& opts) {
    if (!std::holds_alternative<EqBody>(j.body)) throw ShapeError("expected an equality conclusion");
    return run(j, theory, opts);
}

Verdict check(const NuJudgement& j, const EqTheory& theory, const EngineOptions& opts) {
    return run(j, theory, opts);
}

StrongContext translate_fresh_to_fix(const FreshContext& delta, FreshSupply& supply) {
    StrongContext out;
    for (const auto& c : delta) {
        Atom nu = supply.next();
        out.nu.push_back(nu);
        out.constraints.insert({c.atom, nu, c.var});
    }
    return out;
}

StrongContext translate_fresh_to_fix(const FreshContext& delta) {
    FreshSupply supply;
    for (const auto& c : delta) supply.avoid(c.atom);
    return translate_fresh_to_fix(delta, supply);
}

FreshContext translate_fix_to_fresh(const StrongContext& ctx) {
    FreshContext out;
    for (const auto& k : ctx.constraints) out.insert({k.atom, k.var});
    return out;
}

NuJudgement translate_fresh_to_fix(const FreshJudgement& j) {
    FreshSupply supply;
    supply.avoid(atoms_of(j));
    NuJudgement out;
    out.context = translate_fresh_to_fix(j.context, supply);
    out.nu = out.context.nu;
    if (const auto* f = std::get_if<FreshBody>(&j.body)) {
        Atom c = supply.next();
        out.nu.push_back(c);
        out.body = FixBody{Perm::swap(f->atom, c), f->term};
    } else {
        out.body = std::get<EqBody>(j.body);
    }
    return out;
}

FreshJudgement translate_fix_to_fresh(const NuJudgement& j) {
    j.validate();
    FreshJudgement out;
    out.context = translate_fix_to_fresh(j.context);
    if (const auto* f = std::get_if<FixBody>(&j.body)) {
        std::string text = show(f->perm) + " fix " + show(f->term);
        Perm cycles = Perm::from_map(f->perm.mapping());
        const auto& swaps = cycles.swaps();
        if (swaps.size() != 1) throw ShapeError(text + ": the permutation is not a single swap");
        AtomSet bound(j.nu.begin(), j.nu.end());
        auto [a, c] = swaps.front();
        if (bound.count(a)) std::swap(a, c);
        if (!bound.count(c) || bound.count(a)) {
            throw ShapeError(text + ": the swap must pair an atom with a new name, and neither " + a.str() + " nor " +
                             c.str() + " is new");
        }
        for (const auto& k : j.context.constraints) {
            if (k.nu == c) throw ShapeError(text + ": " + c.str() + " is already used by the context");
        }
        out.body = FreshBody{a, f->term};
        return out;
    }
    const auto& e = std::get<EqBody>(j.body);
    VarSet vars = vars_of(e.lhs);
    vars.merge(vars_of(e.rhs));
    for (const auto& c : j.nu) {
        for (const auto& x : vars) out.context.insert({c, x});
    }
    out.body = e;
    return out;
}

namespace {

// Renames atoms; suspension permutations are conjugated.
Term rename_term(const Term& t, const Perm& pi) {
    switch (t.kind()) {
        case Term::Kind::atom:
            return Term::atom(pi(t.atom_value()));
        case Term::Kind::susp:
            return Term::susp(conjugate(t.perm(), pi), t.var_value());
        case Term::Kind::abs:
            return Term::abs(pi(t.atom_value()), rename_term(t.body(), pi));
        case Term::Kind::app: {
            std::vector<Term> args;
            for (const auto& a : t.args()) args.push_back(rename_term(a, pi));
            return Term::app(t.symbol(), std::move(args));
        }
    }
    return t;
}

}  // namespace

NuJudgement rename_nu(const NuJudgement& j, const std::map<Atom, Atom>& renaming) {
    std::vector<Perm::Swap> swaps;
    for (const auto& [from, to] : renaming) swaps.emplace_back(from, to);
    Perm pi = Perm::from_swaps(swaps);
    auto rename = [&](const Atom& a) {
        auto it = renaming.find(a);
        return it == renaming.end() ? a : it->second;
    };
    NuJudgement out;
    for (const auto& c : j.nu) out.nu.push_back(rename(c));
    for (const auto& c : j.context.nu) out.context.nu.push_back(rename(c));
    for (const auto& k : j.context.constraints) out.context.constraints.insert({k.atom, rename(k.nu), k.var});
    if (const auto* f = std::get_if<FixBody>(&j.body)) {
        out.body = FixBody{conjugate(f->perm, pi), rename_term(f->term, pi)};
    } else {
        const auto& e = std::get<EqBody>(j.body);
        out.body = EqBody{rename_term(e.lhs, pi), rename_term(e.rhs, pi)};
    }
    return out;
}

}  // namespace nomfix
