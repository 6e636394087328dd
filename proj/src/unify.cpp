#include "nomfix/unify.hpp"

#include "nomfix/show.hpp"

namespace nomfix {

VarSet Problem::vars() const {
    VarSet out;
    for (const auto& e : equations) {
        out.merge(vars_of(e.lhs));
        out.merge(vars_of(e.rhs));
    }
    for (const auto& g : fresh_goals) out.merge(vars_of(g.term));
    return out;
}

bool Problem::uses_commutativity() const {
    for (const auto& e : equations) {
        if (e.commutative) return true;
    }
    return false;
}

std::string to_string(ValidationStatus s) {
    switch (s) {
        case ValidationStatus::valid:
            return "valid";
        case ValidationStatus::valid_with_residual:
            return "valid-with-residual";
        case ValidationStatus::invalid:
            return "invalid";
    }
    return "invalid";
}

Subst compose_subst(const Subst& sigma, const Subst& delta) {
    Subst out;
    for (const auto& [x, t] : sigma) out[x] = subst_apply(t, delta);
    for (const auto& [x, t] : delta) out.emplace(x, t);
    return out;
}

namespace {

EngineOptions quiet() {
    EngineOptions o;
    o.build_derivation = false;
    return o;
}

// α(C)-equality where a suspension pair π·X ≈ ρ·X not closed by Δ may be
// discharged by a deferred equation X ≈ γ·X with γ = π⁻¹∘ρ or its inverse.
class ResidualMatcher {
  public:
    ResidualMatcher(const FreshContext& delta, const EqTheory& theory, const std::vector<FixEquation>& residuals)
        : delta_(delta), theory_(theory), residuals_(residuals) {}

    bool used_residual = false;

    bool equal(const Term& s, const Term& t) {
        if (s.kind() != t.kind()) return false;
        switch (s.kind()) {
            case Term::Kind::atom:
                return s.atom_value() == t.atom_value();
            case Term::Kind::susp: {
                if (s.var_value() != t.var_value()) return false;
                if (check_alpha(delta_, s, t, theory_, quiet()).holds) return true;
                Perm gamma = compose(inverse(s.perm()), t.perm());
                for (const auto& r : residuals_) {
                    if (r.var == s.var_value() && (r.perm == gamma || r.perm == inverse(gamma))) {
                        used_residual = true;
                        return true;
                    }
                }
                return false;
            }
            case Term::Kind::abs: {
                const Atom& a = s.atom_value();
                const Atom& b = t.atom_value();
                if (a == b) return equal(s.body(), t.body());
                return equal(s.body(), act(Perm::swap(a, b), t.body())) && check_fresh(delta_, a, t.body(), quiet()).holds;
            }
            case Term::Kind::app: {
                if (s.symbol() != t.symbol() || s.args().size() != t.args().size()) return false;
                bool saved = used_residual;
                if (argwise(s.args(), t.args())) return true;
                used_residual = saved;
                if (theory_.is_commutative(s.symbol()) && s.args().size() == 2) {
                    if (argwise(s.args(), {t.args()[1], t.args()[0]})) return true;
                    used_residual = saved;
                }
                return false;
            }
        }
        return false;
    }

  private:
    bool argwise(const std::vector<Term>& lhs, const std::vector<Term>& rhs) {
        for (std::size_t i = 0; i < lhs.size(); ++i) {
            if (!equal(lhs[i], rhs[i])) return false;
        }
        return true;
    }

    const FreshContext& delta_;
    const EqTheory& theory_;
    const std::vector<FixEquation>& residuals_;
};

std::string eq_text(const Term& s, const Term& t, bool c) { return show(s) + (c ? " ~C " : " ~ ") + show(t); }

Validation finish(std::vector<ConstraintResult> results) {
    Validation v;
    v.results = std::move(results);
    bool ok = true;
    bool residual = false;
    for (const auto& r : v.results) {
        ok = ok && r.holds;
        residual = residual || r.residual;
    }
    v.status = !ok ? ValidationStatus::invalid
                   : residual ? ValidationStatus::valid_with_residual : ValidationStatus::valid;
    return v;
}

Validation validate_fresh(const Problem& problem, const FreshContext& delta, const Subst& sigma,
                          const std::vector<FixEquation>* residuals, const Signature& sig) {
    EqTheory c = EqTheory::c(sig);
    EqTheory core;
    std::vector<ConstraintResult> out;
    for (const auto& e : problem.equations) {
        Term s = subst_apply(e.lhs, sigma);
        Term t = subst_apply(e.rhs, sigma);
        const EqTheory& th = e.commutative ? c : core;
        ConstraintResult r{"equation", eq_text(s, t, e.commutative), check_alpha(delta, s, t, th, quiet()).holds};
        if (!r.holds && residuals) {
            ResidualMatcher m(delta, th, *residuals);
            r.holds = m.equal(s, t);
            r.residual = r.holds && m.used_residual;
        }
        out.push_back(std::move(r));
    }
    for (const auto& g : problem.fresh_goals) {
        Term t = subst_apply(g.term, sigma);
        out.push_back({"freshness", g.atom.str() + " # " + show(t), check_fresh(delta, g.atom, t, quiet()).holds});
    }
    const EqTheory& th = problem.uses_commutativity() ? c : core;
    for (const auto& x : problem.vars()) {
        Term once = subst_apply(Term::var(x), sigma);
        Term twice = subst_apply(once, sigma);
        out.push_back({"idempotency", x.name + ": " + eq_text(once, twice, !th.is_core()),
                       check_alpha(delta, once, twice, th, quiet()).holds});
    }
    return finish(std::move(out));
}

Validation validate_fix(const Problem& problem, const FixPair& cand, const Signature& sig) {
    EqTheory c = EqTheory::c(sig);
    EqTheory core;
    std::vector<ConstraintResult> out;
    const auto mode = VarRuleMode::subset_dom;
    for (const auto& e : problem.equations) {
        Term s = subst_apply(e.lhs, cand.sigma);
        Term t = subst_apply(e.rhs, cand.sigma);
        bool ok = check_eq_fix(cand.context, s, t, mode, e.commutative ? c : core, quiet()).holds;
        out.push_back({"equation", eq_text(s, t, e.commutative), ok});
    }
    for (const auto& g : problem.fresh_goals) {
        Term t = subst_apply(g.term, cand.sigma);
        // a # t as ν c1.(a c1) ⋏ t, with (c1 c2) ⋏ var(t) recording c1 as new.
        FreshSupply supply;
        supply.avoid(t);
        supply.avoid(g.atom);
        for (const auto& k : cand.context) supply.avoid(k.perm);
        Atom c1 = supply.next();
        Atom c2 = supply.next();
        FixContext ext = extend(cand.context, Perm::swap(c1, c2), vars_of(t));
        bool ok = check_fix(ext, Perm::swap(g.atom, c1), t, mode, quiet()).holds;
        out.push_back({"freshness", g.atom.str() + " # " + show(t), ok});
    }
    const EqTheory& th = problem.uses_commutativity() ? c : core;
    for (const auto& x : problem.vars()) {
        Term once = subst_apply(Term::var(x), cand.sigma);
        Term twice = subst_apply(once, cand.sigma);
        out.push_back({"idempotency", x.name + ": " + eq_text(once, twice, !th.is_core()),
                       check_eq_fix(cand.context, once, twice, mode, th, quiet()).holds});
    }
    return finish(std::move(out));
}

}  // namespace

Validation validate(const Problem& problem, const Candidate& candidate, const Signature& sig) {
    if (const auto* p = std::get_if<FreshPair>(&candidate)) return validate_fresh(problem, p->delta, p->sigma, nullptr, sig);
    if (const auto* t = std::get_if<FreshTriple>(&candidate)) {
        return validate_fresh(problem, t->delta, t->sigma, &t->residuals, sig);
    }
    return validate_fix(problem, std::get<FixPair>(candidate), sig);
}

Validation instantiate_and_check(const FixPair& candidate, const Subst& delta, const Problem& problem,
                                 const Signature& sig) {
    EqTheory c = EqTheory::c(sig);
    std::vector<ConstraintResult> instances;
    for (const auto& k : candidate.context) {
        auto it = delta.find(k.var);
        std::string text = show(k.perm) + " fix " + k.var.name;
        if (it == delta.end()) {
            instances.push_back({"instance", text + ": no instance given", false});
            continue;
        }
        const Term& x = it->second;
        bool ok = check_alpha({}, act(k.perm, x), x, c, quiet()).holds;
        instances.push_back({"instance", text + " with " + k.var.name + " := " + show(x), ok});
    }
    Validation v = validate(problem, FreshPair{{}, compose_subst(candidate.sigma, delta)}, sig);
    instances.insert(instances.end(), v.results.begin(), v.results.end());
    return finish(std::move(instances));
}

}  // namespace nomfix
