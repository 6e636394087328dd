#include "nomfix/fresh.hpp"

#include "nomfix/permgroups.hpp"

namespace nomfix {

namespace {

std::string entails(const FreshContext& delta) { return delta.empty() ? "|- " : show(delta) + " |- "; }

class FreshEngine {
  public:
    FreshEngine(const FreshContext& delta, const EqTheory& theory) : delta_(delta), theory_(theory) {}

    bool fresh(const Atom& a, const Term& t, Derivation* out) {
        auto conclude = [&](const char* rule) {
            if (out) {
                out->rule = rule;
                out->conclusion = entails(delta_) + show(a) + " # " + show(t);
            }
        };
        switch (t.kind()) {
            case Term::Kind::atom:
                if (t.atom_value() == a) return false;
                conclude("#a");
                return true;
            case Term::Kind::susp: {
                Atom pre = inverse(t.perm())(a);
                if (!delta_.count({pre, t.var_value()})) return false;
                conclude("#var");
                return true;
            }
            case Term::Kind::abs: {
                if (t.atom_value() == a) {
                    conclude("#[a]");
                    return true;
                }
                Derivation sub;
                if (!fresh(a, t.body(), out ? &sub : nullptr)) return false;
                conclude("#abs");
                if (out) out->premises.push_back(std::move(sub));
                return true;
            }
            case Term::Kind::app: {
                std::vector<Derivation> subs(t.args().size());
                for (std::size_t i = 0; i < t.args().size(); ++i) {
                    if (!fresh(a, t.args()[i], out ? &subs[i] : nullptr)) return false;
                }
                conclude("#f");
                if (out) out->premises = std::move(subs);
                return true;
            }
        }
        return false;
    }

    bool alpha(const Term& s, const Term& t, Derivation* out) {
        auto conclude = [&](const char* rule) {
            if (out) {
                out->rule = rule;
                out->conclusion = entails(delta_) + show(s) + " ~ " + show(t);
            }
        };
        if (s.kind() != t.kind()) return false;
        switch (s.kind()) {
            case Term::Kind::atom:
                if (s.atom_value() != t.atom_value()) return false;
                conclude("~a");
                return true;
            case Term::Kind::susp: {
                if (s.var_value() != t.var_value()) return false;
                for (const auto& a : ds(s.perm(), t.perm())) {
                    if (!delta_.count({a, s.var_value()})) return false;
                }
                conclude("~var");
                return true;
            }
            case Term::Kind::abs: {
                const Atom& a = s.atom_value();
                const Atom& b = t.atom_value();
                if (a == b) {
                    Derivation sub;
                    if (!alpha(s.body(), t.body(), out ? &sub : nullptr)) return false;
                    conclude("~[a]");
                    if (out) out->premises.push_back(std::move(sub));
                    return true;
                }
                Derivation eq;
                Derivation fr;
                if (!alpha(s.body(), act(Perm::swap(a, b), t.body()), out ? &eq : nullptr)) return false;
                if (!fresh(a, t.body(), out ? &fr : nullptr)) return false;
                conclude("~ab");
                if (out) out->premises = {std::move(eq), std::move(fr)};
                return true;
            }
            case Term::Kind::app: {
                if (s.symbol() != t.symbol() || s.args().size() != t.args().size()) return false;
                if (argwise(s.args(), t.args(), out)) {
                    conclude("~f");
                    return true;
                }
                if (theory_.is_commutative(s.symbol()) && s.args().size() == 2) {
                    std::vector<Term> swapped{t.args()[1], t.args()[0]};
                    if (argwise(s.args(), swapped, out)) {
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
    bool argwise(const std::vector<Term>& lhs, const std::vector<Term>& rhs, Derivation* out) {
        std::vector<Derivation> subs(lhs.size());
        for (std::size_t i = 0; i < lhs.size(); ++i) {
            if (!alpha(lhs[i], rhs[i], out ? &subs[i] : nullptr)) return false;
        }
        if (out) out->premises = std::move(subs);
        return true;
    }

    const FreshContext& delta_;
    const EqTheory& theory_;
};

Verdict finish(bool holds, Derivation&& d, bool build) {
    Verdict v;
    v.holds = holds;
    if (holds && build) v.derivation = std::move(d);
    return v;
}

}  // namespace

Verdict check_fresh(const FreshContext& delta, const Atom& a, const Term& t, const EngineOptions& opts) {
    EqTheory core;
    FreshEngine engine(delta, core);
    Derivation d;
    bool ok = engine.fresh(a, t, opts.build_derivation ? &d : nullptr);
    return finish(ok, std::move(d), opts.build_derivation);
}

Verdict check_alpha(const FreshContext& delta, const Term& s, const Term& t, const EqTheory& theory,
                    const EngineOptions& opts) {
    FreshEngine engine(delta, theory);
    Derivation d;
    bool ok = engine.alpha(s, t, opts.build_derivation ? &d : nullptr);
    return finish(ok, std::move(d), opts.build_derivation);
}

Verdict check(const FreshJudgement& j, const EqTheory& theory, const EngineOptions& opts) {
    if (const auto* f = std::get_if<FreshBody>(&j.body)) return check_fresh(j.context, f->atom, f->term, opts);
    const auto& e = std::get<EqBody>(j.body);
    return check_alpha(j.context, e.lhs, e.rhs, theory, opts);
}

FreshContext act(const Perm& pi, const FreshContext& delta) {
    FreshContext out;
    for (const auto& c : delta) out.insert({pi(c.atom), c.var});
    return out;
}

std::string show(const FreshContext& delta, const AtomNames* names) {
    std::string out;
    bool first = true;
    for (const auto& c : delta) {
        if (!first) out += ", ";
        first = false;
        out += show(c.atom, names) + " # " + c.var.name;
    }
    return out;
}

std::string show(const FreshJudgement& j, const AtomNames* names) {
    std::string ctx = show(j.context, names);
    std::string out = ctx.empty() ? "|- " : ctx + " |- ";
    if (const auto* f = std::get_if<FreshBody>(&j.body)) {
        return out + show(f->atom, names) + " # " + show(f->term, names);
    }
    const auto& e = std::get<EqBody>(j.body);
    return out + show(e.lhs, names) + " ~ " + show(e.rhs, names);
}

AtomSet atoms_of(const FreshJudgement& j) {
    AtomSet out;
    for (const auto& c : j.context) out.insert(c.atom);
    if (const auto* f = std::get_if<FreshBody>(&j.body)) {
        out.insert(f->atom);
        out.merge(atoms_of(f->term));
    } else {
        const auto& e = std::get<EqBody>(j.body);
        out.merge(atoms_of(e.lhs));
        out.merge(atoms_of(e.rhs));
    }
    return out;
}

}  // namespace nomfix
