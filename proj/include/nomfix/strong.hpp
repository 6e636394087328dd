#pragma once

// Strong judgements ν c̄.Υ ⊢ …: contexts of ν-bound swap constraints, their
// decision procedures, and the translations to and from freshness.

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "nomfix/derivation.hpp"
#include "nomfix/fixpoint.hpp"
#include "nomfix/fresh.hpp"
#include "nomfix/show.hpp"
#include "nomfix/terms.hpp"

namespace nomfix {

// ν nu.(atom nu) ⋏ var
struct StrongConstraint {
    Atom atom;
    Atom nu;
    Var var;

    friend bool operator==(const StrongConstraint&, const StrongConstraint&) = default;
    friend std::strong_ordering operator<=>(const StrongConstraint&, const StrongConstraint&) = default;
};

struct StrongContext {
    std::vector<Atom> nu;
    std::set<StrongConstraint> constraints;

    // Throws ShapeError on repeated ν atoms, a constraint whose ν atom is
    // not listed, or whose left atom is.
    void validate() const;

    // {a | (a c) ⋏ X ∈ Υ}
    AtomSet domain_for(const Var& x) const;
    FixContext as_fix_context() const;

    friend bool operator==(const StrongContext&, const StrongContext&) = default;
};

struct NuJudgement {
    std::vector<Atom> nu;
    StrongContext context;
    std::variant<FixBody, EqBody> body;

    // The context's ν atoms must be among the judgement's.
    void validate() const;
};

std::string show(const StrongContext& ctx, const AtomNames* names = nullptr);
std::string show(const NuJudgement& j, const AtomNames* names = nullptr);
AtomSet atoms_of(const NuJudgement& j);

/// Reads ν c̄ and a fixed-point context as a strong context: every
/// constraint must be a single swap (a c) with c ∈ c̄ and a ∉ c̄.
StrongContext strong_context(const std::vector<Atom>& nu, const FixContext& ctx);
NuJudgement strong_judgement(const std::vector<Atom>& nu, const FixJudgement& j);

Verdict check_fix_strong(const NuJudgement& j, const EngineOptions& opts = {});
Verdict check_alpha_strong(const NuJudgement& j, const EqTheory& theory = {}, const EngineOptions& opts = {});
Verdict check(const NuJudgement& j, const EqTheory& theory = {}, const EngineOptions& opts = {});

// a # X ↦ ν c.(a c) ⋏ X, one new c per constraint.
StrongContext translate_fresh_to_fix(const FreshContext& delta);
StrongContext translate_fresh_to_fix(const FreshContext& delta, FreshSupply& supply);
// ν c.(a c) ⋏ X ↦ a # X
FreshContext translate_fix_to_fresh(const StrongContext& ctx);

/// Δ ⊢ a # t  ↦  ν c̄,c'.[Δ]⋏ ⊢ (a c') ⋏ t
/// Δ ⊢ s ≈ t  ↦  ν c̄.[Δ]⋏ ⊢ s ≈ t
NuJudgement translate_fresh_to_fix(const FreshJudgement& j);

/// ν c̄,c1.Υ ⊢ (a c1) ⋏ t  ↦  [Υ]# ⊢ a # t
/// ν c̄.Υ ⊢ s ≈ t          ↦  [Υ]#, c̄ # var(s,t) ⊢ s ≈ t
/// Throws ShapeError when a ⋏ conclusion is not a swap of an old atom with
/// a ν atom unused by the context.
FreshJudgement translate_fix_to_fresh(const NuJudgement& j);

/// Renames ν atoms throughout; targets must not occur in `j`.
NuJudgement rename_nu(const NuJudgement& j, const std::map<Atom, Atom>& renaming);

}  // namespace nomfix
