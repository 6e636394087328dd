#pragma once

// The fixed-point system: Υ ⊢ π ⋏ t and Υ ⊢ s = t, with the two
// variable-rule modes, explicit proof trees and a proof checker.

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "nomfix/derivation.hpp"
#include "nomfix/fresh.hpp"
#include "nomfix/show.hpp"
#include "nomfix/terms.hpp"

namespace nomfix {

struct FixConstraint {
    Perm perm;
    Var var;

    friend bool operator==(const FixConstraint&, const FixConstraint&) = default;
    friend std::strong_ordering operator<=>(const FixConstraint& lhs, const FixConstraint& rhs) {
        if (auto c = lhs.var <=> rhs.var; c != 0) return c;
        return lhs.perm <=> rhs.perm;
    }
};

using FixContext = std::set<FixConstraint>;

// perm(Υ|X)
std::vector<Perm> perms_for(const FixContext& ctx, const Var& x);
// dom(perm(Υ|X)): union of the domains of perm(Υ|X)
AtomSet domain_for(const FixContext& ctx, const Var& x);
// Υ, [π ⋏ var(t)]
FixContext extend(const FixContext& ctx, const Perm& pi, const VarSet& vars);

enum class VarRuleMode {
    subset_dom,       // dom(π^{π'⁻¹}) ⊆ dom(perm(Υ|X))
    group_generated,  // π^{π'⁻¹} ∈ ⟨perm(Υ|X)⟩
};

std::string to_string(VarRuleMode mode);

struct FixBody {
    Perm perm;
    Term term;
};

struct FixJudgement {
    FixContext context;
    std::variant<FixBody, EqBody> body;

    friend bool operator==(const FixJudgement& lhs, const FixJudgement& rhs);
};

std::string show(const FixContext& ctx, const AtomNames* names = nullptr);
std::string show(const FixJudgement& j, const AtomNames* names = nullptr);
AtomSet atoms_of(const FixContext& ctx);
AtomSet atoms_of(const FixJudgement& j);

/// The variable-rule side condition for Υ ⊢ π ⋏ ρ·X.
bool var_rule_holds(const FixContext& ctx, const Perm& pi, const Perm& rho, const Var& x, VarRuleMode mode,
                    std::size_t carrier_bound = 8);

enum class Rule { refl, symm, tran, ax, cong_abs, cong_f, fr, perm, fix_a, fix_f, fix_var, fix_abs };

std::string to_string(Rule r);
std::optional<Rule> rule_from_string(const std::string& s);

/// An explicit derivation in the fixed-point system.
///
/// Rule parameters live next to the conclusion:
///   ax:       axiom, perm (π), subst (σ)
///   cong_f:   position (1-based argument index)
///   fr:       perm, var
///   perm:     perm (the swapped pair), fresh = {c1, c2, d1, d2}
///   fix_abs:  fresh = {c1, c2}
struct ProofTree {
    Rule rule = Rule::refl;
    FixJudgement conclusion;
    std::vector<ProofTree> premises;

    std::string axiom;
    Perm perm;
    Subst subst;
    std::size_t position = 0;
    std::optional<Var> var;
    std::vector<Atom> fresh;
};

Derivation to_derivation(const ProofTree& tree);

struct Axiom {
    std::string name;
    FixContext context;
    Term lhs;
    Term rhs;
};

struct Theory {
    std::string name;
    Signature signature;
    std::vector<Axiom> axioms;

    const Axiom* find(const std::string& axiom_name) const;

    static Theory core(Signature sig);
    // One axiom "comm(f)" : f(X,Y) = f(Y,X) per commutative symbol f.
    static Theory commutative(Signature sig);
};

// Υ ⊢ π ⋏ t
Verdict check_fix(const FixContext& ctx, const Perm& pi, const Term& t, VarRuleMode mode,
                  const EngineOptions& opts = {});
std::optional<ProofTree> prove_fix(const FixContext& ctx, const Perm& pi, const Term& t, VarRuleMode mode,
                                   const EngineOptions& opts = {});

/// Υ ⊢ s = t for the axiom-free relation (plus commutativity in C mode).
///
/// Suspensions π·X = ρ·X reduce to ρ⁻¹∘π ⋏ X. Abstractions [a]s' = [b]t'
/// with a ≠ b need s' = (a b)·t' and (a c1) ⋏ t' under the fresh
/// extension [(c1 c2) ⋏ var(t')].
Verdict check_eq_fix(const FixContext& ctx, const Term& s, const Term& t, VarRuleMode mode,
                     const EqTheory& theory = {}, const EngineOptions& opts = {});

/// A proof tree for Υ ⊢ s = t using refl/symm/tran/cong/perm/ax and the
/// ⋏ rules, in subset-domain mode. For C, ax nodes refer to
/// Theory::commutative. Returns nullopt when check_eq_fix fails.
std::optional<ProofTree> prove_eq(const FixContext& ctx, const Term& s, const Term& t, const EqTheory& theory = {},
                                  const EngineOptions& opts = {});

Verdict check(const FixJudgement& j, VarRuleMode mode, const EqTheory& theory = {}, const EngineOptions& opts = {});

struct RuleMismatch {
    std::string path;  // "root", "root.2.1", ... (1-based premise indices)
    std::string reason;
};

struct ProofCheck {
    bool valid = false;
    std::optional<RuleMismatch> mismatch;

    explicit operator bool() const { return valid; }
};

/// Checks every node of `tree` against its rule; reports the first
/// invalid node in depth-first order.
ProofCheck verify_proof(const ProofTree& tree, const Theory& theory, VarRuleMode mode,
                        std::size_t carrier_bound = 8);

}  // namespace nomfix
