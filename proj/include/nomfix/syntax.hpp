#pragma once

// Concrete syntax for terms, permutations, contexts, judgements,
// valuations and unification problem/candidate files.
//
//   term  ::= sum
//   sum   ::= prod ('+' prod)*
//   prod  ::= prim ('*' prim)*
//   prim  ::= atom | X | perm '.' prim | '[' atom ']' prim
//           | sym '(' term (',' term)* ')' | sym | '(' term ')'
//   perm  ::= 'id' | swap+        swap ::= '(' atom atom ')'
//
// Lowercase identifiers are symbols when the signature declares them and
// atoms otherwise; uppercase identifiers are unknowns. `perm . t` is the
// permutation action. Judgements use '|-' or '⊢'; equality is '=', '~' or
// '≈'; fixed-point constraints use 'fix' or '⋏'; 'new c1 c2.' (or 'ν')
// binds new names. '%name' spells a generated atom and is only accepted
// when allow_fresh is set.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nomfix/fixpoint.hpp"
#include "nomfix/fresh.hpp"
#include "nomfix/semantics.hpp"
#include "nomfix/strong.hpp"
#include "nomfix/terms.hpp"
#include "nomfix/unify.hpp"

namespace nomfix {

struct ParseOptions {
    bool allow_fresh = false;
};

Term parse_term(const std::string& text, const Signature& sig = Signature::builtin(), ParseOptions opts = {});
Perm parse_perm(const std::string& text, ParseOptions opts = {});

/// Any judgement or bare context. Freshness and fixed-point constraints may
/// both appear; the conversions below reject mixtures.
struct ParsedJudgement {
    std::vector<Atom> nu;
    FreshContext fresh_context;
    FixContext fix_context;
    std::optional<std::variant<FreshBody, FixBody, EqBody>> body;
};

ParsedJudgement parse_judgement(const std::string& text, const Signature& sig = Signature::builtin(),
                                ParseOptions opts = {});

FreshJudgement to_fresh_judgement(const ParsedJudgement& p);
FixJudgement to_fix_judgement(const ParsedJudgement& p);
NuJudgement to_nu_judgement(const ParsedJudgement& p);

/// "X := value; Y := value" with values read by the model: {a,b} for pfin,
/// a word such as "abc" or "a1a2" for words, a ground term for the ground
/// models, anything for singleton.
Valuation parse_valuation(const std::string& text, const SigmaAlgebra& m, const Signature& sig = Signature::builtin());
Elem parse_element(const std::string& text, const SigmaAlgebra& m, const Signature& sig = Signature::builtin());

/// Lines "s =?= t", "s =?= t [C]" and "a #? t"; '%' starts a comment.
Problem parse_problem(const std::string& text, const Signature& sig = Signature::builtin());

struct CandidateFile {
    Candidate candidate;
    Subst instance;  // "instance X := t" lines, for instantiate_and_check
};

/// Lines:
///   kind fresh-pair | fresh-triple | fix-pair
///   context <constraints>       (a # X or (a b) fix X, comma separated)
///   bind X := t
///   residual X = (a b).X
///   instance X := t
CandidateFile parse_candidate(const std::string& text, const Signature& sig = Signature::builtin());

}  // namespace nomfix
