#pragma once

// Judgement generators for the property suites. Raw random judgements are
// rarely derivable, so bodies are built from perturbations of one term:
// context permutations, binder renamings and commutative flips.

#include <optional>
#include <string>
#include <vector>

#include "nomfix/fixpoint.hpp"
#include "nomfix/fresh.hpp"
#include "nomfix/random.hpp"
#include "nomfix/strong.hpp"

namespace sample {

using namespace nomfix;

class Sampler {
  public:
    explicit Sampler(Gen& g) : g_(g) {}

    Gen& gen() { return g_; }

    // A product of context permutations for some unknown of t, or a random
    // permutation, or one moving only atoms that do not occur in t.
    Perm perm_for(const FixContext& ctx, const Term& t) {
        VarSet vars = vars_of(t);
        switch (g_.below(3)) {
            case 0: {
                if (vars.empty()) break;
                std::vector<Var> vs(vars.begin(), vars.end());
                auto perms = perms_for(ctx, g_.pick(vs));
                if (perms.empty()) break;
                Perm out;
                for (std::size_t i = 0, n = 1 + g_.below(3); i < n; ++i) out = compose(g_.pick(perms), out);
                return out;
            }
            case 1: {
                std::vector<Atom> outside;
                AtomSet used = atoms_of(t);
                for (const auto& a : g_.config().atoms) {
                    if (!used.count(a)) outside.push_back(a);
                }
                if (outside.size() < 2) break;
                return g_.perm_on(outside);
            }
            default:
                break;
        }
        return g_.perm();
    }

    Term rename_binders(const Term& t) {
        switch (t.kind()) {
            case Term::Kind::abs: {
                Term body = rename_binders(t.body());
                if (g_.coin()) {
                    Atom b = g_.atom();
                    return Term::abs(b, act(Perm::swap(t.atom_value(), b), body));
                }
                return Term::abs(t.atom_value(), body);
            }
            case Term::Kind::app: {
                std::vector<Term> args;
                for (const auto& x : t.args()) args.push_back(rename_binders(x));
                return Term::app(t.symbol(), args);
            }
            default:
                return t;
        }
    }

    Term flip_commutative(const Term& t) {
        switch (t.kind()) {
            case Term::Kind::abs:
                return Term::abs(t.atom_value(), flip_commutative(t.body()));
            case Term::Kind::app: {
                std::vector<Term> args;
                for (const auto& x : t.args()) args.push_back(flip_commutative(x));
                if (args.size() == 2 && (t.symbol() == "f^C" || t.symbol() == "+") && g_.coin()) {
                    std::swap(args[0], args[1]);
                }
                return Term::app(t.symbol(), args);
            }
            default:
                return t;
        }
    }

    Term variant(const FixContext& ctx, const Term& t) {
        switch (g_.below(4)) {
            case 0:
                return act(perm_for(ctx, t), t);
            case 1:
                return rename_binders(t);
            case 2:
                return flip_commutative(rename_binders(t));
            default:
                return t;
        }
    }

    Term term() { return g_.term(1 + g_.below(g_.config().max_depth)); }

    FixJudgement fix_judgement() {
        FixContext ctx = g_.fix_context(3);
        Term t = term();
        if (g_.coin()) return {ctx, FixBody{perm_for(ctx, t), t}};
        return {ctx, EqBody{variant(ctx, t), t}};
    }

    FreshContext fresh_context() { return g_.fresh_context(4); }

    FreshJudgement fresh_judgement() {
        FreshContext delta = fresh_context();
        Term t = term();
        if (g_.coin()) return {delta, FreshBody{g_.atom(), t}};
        return {delta, EqBody{variant({}, t), t}};
    }

    // νc̄.Υ with one ν atom per constraint, plus up to two unused ν atoms.
    NuJudgement nu_judgement() {
        std::vector<Atom> nu;
        StrongContext ctx;
        std::size_t n = g_.below(4);
        for (std::size_t i = 0; i < n; ++i) {
            Atom c = Atom::fresh("n" + std::to_string(i + 1));
            nu.push_back(c);
            ctx.constraints.insert({g_.atom(), c, g_.var()});
        }
        ctx.nu = nu;
        for (std::size_t i = 0, extra = g_.below(3); i < extra; ++i) {
            nu.push_back(Atom::fresh("m" + std::to_string(i + 1)));
        }
        // Swaps of user atoms that are both new for X: these fix X.
        FixContext fix;
        for (const auto& x : g_.config().vars) {
            AtomSet dom = ctx.domain_for(x);
            for (const auto& a : dom) {
                for (const auto& b : dom) {
                    if (a < b) fix.insert({Perm::swap(a, b), x});
                }
            }
        }
        Term t = term();
        NuJudgement j{nu, ctx, EqBody{t, t}};
        if (g_.coin()) {
            j.body = FixBody{perm_for(fix, t), t};
        } else {
            j.body = EqBody{variant(fix, t), t};
        }
        return j;
    }

    // The same context with conclusion (a c') ⋏ t for a ν atom c' the
    // context leaves unused; none when every ν atom is used.
    std::optional<NuJudgement> fresh_shaped(NuJudgement j) {
        AtomSet used;
        for (const auto& k : j.context.constraints) used.insert(k.nu);
        std::vector<Atom> spare;
        for (const auto& c : j.nu) {
            if (!used.count(c)) spare.push_back(c);
        }
        if (spare.empty()) return std::nullopt;
        const auto* f = std::get_if<FixBody>(&j.body);
        Term t = f ? f->term : std::get<EqBody>(j.body).rhs;
        j.body = FixBody{Perm::swap(g_.atom(), g_.pick(spare)), t};
        return j;
    }

  private:
    Gen& g_;
};

}  // namespace sample
