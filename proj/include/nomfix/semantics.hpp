#pragma once

// Nominal Σ-algebras, interpretation of terms, validity of judgements and
// the concrete models used to test the proof systems.

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "nomfix/fixpoint.hpp"
#include "nomfix/terms.hpp"

namespace nomfix {

struct Star {
    friend bool operator==(Star, Star) { return true; }
    friend std::strong_ordering operator<=>(Star, Star) { return std::strong_ordering::equal; }
};

using Word = std::vector<Atom>;

// Singleton ⋆ | finite set of atoms | word over distinct atoms | canonical ground term
using Elem = std::variant<Star, AtomSet, Word, Term>;

class SigmaAlgebra {
  public:
    virtual ~SigmaAlgebra() = default;

    virtual std::string name() const = 0;
    virtual bool is_strong() const = 0;

    virtual Elem act(const Perm& pi, const Elem& x) const = 0;
    virtual Elem atom(const Atom& a) const = 0;
    virtual Elem abs(const Atom& a, const Elem& x) const = 0;
    virtual Elem apply(const std::string& symbol, const std::vector<Elem>& args) const = 0;
    virtual AtomSet supp(const Elem& x) const = 0;
    virtual std::string show(const Elem& x) const = 0;

    // Image of unmapped unknowns: atom(a1).
    Elem default_element() const { return atom(Atom::user("a1")); }
};

class SingletonModel final : public SigmaAlgebra {
  public:
    std::string name() const override { return "singleton"; }
    bool is_strong() const override { return true; }
    Elem act(const Perm&, const Elem&) const override { return Star{}; }
    Elem atom(const Atom&) const override { return Star{}; }
    Elem abs(const Atom&, const Elem&) const override { return Star{}; }
    Elem apply(const std::string&, const std::vector<Elem>&) const override { return Star{}; }
    AtomSet supp(const Elem&) const override { return {}; }
    std::string show(const Elem&) const override { return "⋆"; }
};

// Finite sets of atoms; abs(a,B) = B∖{a}, f = intersection (∅ when nullary).
class PFinModel final : public SigmaAlgebra {
  public:
    std::string name() const override { return "pfin"; }
    bool is_strong() const override { return false; }
    Elem act(const Perm& pi, const Elem& x) const override;
    Elem atom(const Atom& a) const override { return AtomSet{a}; }
    Elem abs(const Atom& a, const Elem& x) const override;
    Elem apply(const std::string& symbol, const std::vector<Elem>& args) const override;
    AtomSet supp(const Elem& x) const override { return std::get<AtomSet>(x); }
    std::string show(const Elem& x) const override;
};

// Words over distinct atoms; abs deletes the letter, f concatenates and
// drops later duplicates.
class WordsModel final : public SigmaAlgebra {
  public:
    std::string name() const override { return "words"; }
    bool is_strong() const override { return true; }
    Elem act(const Perm& pi, const Elem& x) const override;
    Elem atom(const Atom& a) const override { return Word{a}; }
    Elem abs(const Atom& a, const Elem& x) const override;
    Elem apply(const std::string& symbol, const std::vector<Elem>& args) const override;
    AtomSet supp(const Elem& x) const override;
    std::string show(const Elem& x) const override;
};

enum class GroundTheory { alpha, alpha_c, alpha_a };

// Ground terms modulo α, αC or αA, represented by canonical forms.
class GroundModel final : public SigmaAlgebra {
  public:
    // `symbols` are the commutative (alpha_c) or associative (alpha_a) symbols.
    GroundModel(GroundTheory theory, std::set<std::string> symbols = {});

    static GroundModel alpha() { return GroundModel(GroundTheory::alpha); }
    static GroundModel alpha_c(const Signature& sig) {
        return GroundModel(GroundTheory::alpha_c, sig.commutative_symbols());
    }

    GroundTheory theory() const { return theory_; }

    std::string name() const override;
    bool is_strong() const override { return theory_ != GroundTheory::alpha_c; }
    Elem act(const Perm& pi, const Elem& x) const override;
    Elem atom(const Atom& a) const override { return Term::atom(a); }
    Elem abs(const Atom& a, const Elem& x) const override;
    Elem apply(const std::string& symbol, const std::vector<Elem>& args) const override;
    AtomSet supp(const Elem& x) const override;
    std::string show(const Elem& x) const override;

    // Representative of the class of a ground term. Bound atoms are renamed
    // to %v0, %v1, … by nesting depth.
    Term canon(const Term& g) const;

  private:
    GroundTheory theory_;
    std::set<std::string> symbols_;
};

// Selector strings: singleton | pfin | words | ground-alpha | ground-alpha-c
std::unique_ptr<SigmaAlgebra> make_model(const std::string& selector, const Signature& sig = Signature::builtin());
std::vector<std::string> model_selectors();

struct Valuation {
    std::map<Var, Elem> values;
    // When false, unmapped unknowns raise UnboundVariable.
    bool use_default = true;
};

Elem interpret(const SigmaAlgebra& m, const Valuation& v, const Term& t);
bool fix_sem(const SigmaAlgebra& m, const Perm& pi, const Elem& x);
bool context_valid(const SigmaAlgebra& m, const Valuation& v, const FixContext& ctx);
bool judgement_valid(const SigmaAlgebra& m, const Valuation& v, const FixJudgement& j);
AtomSet supp_of(const SigmaAlgebra& m, const Elem& x);

struct SupportCheck {
    bool strong = true;
    std::optional<Perm> witness;
};

/// Looks for π with π·x = x that moves some atom of supp(x): every swap in
/// `universe`, then every permutation of it when it has at most
/// `full_search_limit` atoms. Throws UniverseBoundExceeded above `bound`.
SupportCheck strong_support_check(const SigmaAlgebra& m, const Elem& x, const AtomSet& universe,
                                  std::size_t bound = 8, std::size_t full_search_limit = 5);

struct AxiomForm {
    std::string name;
    FixContext context;
    Term lhs;
    Term rhs;
};

struct StrongAxiomResult {
    bool strong = false;
    std::string reason;
};

StrongAxiomResult is_strong_axiom(const AxiomForm& ax);

// A, Hom, I, N, Lproj, Rproj, C, D, ATOM and the permuted-binder axiom.
std::vector<AxiomForm> standard_axioms();

}  // namespace nomfix
