#pragma once

// Freshness and α-equivalence under a freshness context, with an optional
// commutative extension.

#include <set>
#include <string>
#include <variant>

#include "nomfix/derivation.hpp"
#include "nomfix/show.hpp"
#include "nomfix/terms.hpp"

namespace nomfix {

struct FreshConstraint {
    Atom atom;
    Var var;

    friend bool operator==(const FreshConstraint&, const FreshConstraint&) = default;
    friend std::strong_ordering operator<=>(const FreshConstraint&, const FreshConstraint&) = default;
};

using FreshContext = std::set<FreshConstraint>;

/// The equational layer: CORE (no axioms) or C for the listed symbols.
struct EqTheory {
    std::set<std::string> commutative;

    static EqTheory core() { return {}; }
    static EqTheory c(const Signature& sig) { return {sig.commutative_symbols()}; }

    bool is_core() const { return commutative.empty(); }
    bool is_commutative(const std::string& symbol) const { return commutative.count(symbol) != 0; }
};

struct FreshBody {
    Atom atom;
    Term term;
};

struct EqBody {
    Term lhs;
    Term rhs;
};

struct FreshJudgement {
    FreshContext context;
    std::variant<FreshBody, EqBody> body;
};

// Δ ⊢ a # t
Verdict check_fresh(const FreshContext& delta, const Atom& a, const Term& t, const EngineOptions& opts = {});
// Δ ⊢ s ≈ t, or Δ ⊢ s ≈_C t when `theory` lists commutative symbols.
Verdict check_alpha(const FreshContext& delta, const Term& s, const Term& t, const EqTheory& theory = {},
                    const EngineOptions& opts = {});
Verdict check(const FreshJudgement& j, const EqTheory& theory = {}, const EngineOptions& opts = {});

// π·Δ = {π(a) # X}
FreshContext act(const Perm& pi, const FreshContext& delta);

std::string show(const FreshContext& delta, const AtomNames* names = nullptr);
std::string show(const FreshJudgement& j, const AtomNames* names = nullptr);
AtomSet atoms_of(const FreshJudgement& j);

}  // namespace nomfix
