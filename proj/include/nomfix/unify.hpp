#pragma once

// Validation of candidate solutions to nominal (C-)unification problems.
// No solving: candidates are checked against the problem as given.

#include <string>
#include <variant>
#include <vector>

#include "nomfix/fixpoint.hpp"
#include "nomfix/fresh.hpp"
#include "nomfix/terms.hpp"

namespace nomfix {

struct Equation {
    Term lhs;
    Term rhs;
    bool commutative = false;  // s ≈?_C t
};

struct FreshGoal {
    Atom atom;
    Term term;
};

struct Problem {
    std::vector<Equation> equations;
    std::vector<FreshGoal> fresh_goals;

    VarSet vars() const;
    bool uses_commutativity() const;
};

// X ≈ π·X
struct FixEquation {
    Var var;
    Perm perm;
};

struct FreshPair {
    FreshContext delta;
    Subst sigma;
};

struct FreshTriple {
    FreshContext delta;
    Subst sigma;
    std::vector<FixEquation> residuals;
};

struct FixPair {
    FixContext context;
    Subst sigma;
};

using Candidate = std::variant<FreshPair, FreshTriple, FixPair>;

enum class ValidationStatus { valid, valid_with_residual, invalid };

std::string to_string(ValidationStatus s);

struct ConstraintResult {
    std::string kind;  // equation | freshness | idempotency | instance
    std::string text;
    bool holds = false;
    bool residual = false;  // closed only by a deferred fixed-point equation
};

struct Validation {
    ValidationStatus status = ValidationStatus::invalid;
    std::vector<ConstraintResult> results;

    bool accepted() const { return status != ValidationStatus::invalid; }
};

Validation validate(const Problem& problem, const Candidate& candidate, const Signature& sig = Signature::builtin());

/// Checks that δ satisfies every π ⋏ X of the candidate's context modulo
/// αC, then validates σδ as a freshness pair with empty context.
Validation instantiate_and_check(const FixPair& candidate, const Subst& delta, const Problem& problem,
                                 const Signature& sig = Signature::builtin());

// (σδ)(X) = σ(X)δ, and δ(X) outside dom(σ).
Subst compose_subst(const Subst& sigma, const Subst& delta);

}  // namespace nomfix
