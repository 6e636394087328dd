#pragma once

// Nominal term syntax: atoms, unknowns, finite permutations, terms,
// signatures and substitutions.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace nomfix {

class Atom {
  public:
    enum class Space : std::uint8_t { user, fresh };

    Atom() = default;

    static Atom user(std::string name) { return Atom(Space::user, std::move(name)); }
    // Generated names; the parser never produces these from ordinary input.
    static Atom fresh(std::string name) { return Atom(Space::fresh, std::move(name)); }

    const std::string& name() const { return name_; }
    Space space() const { return space_; }
    bool is_fresh() const { return space_ == Space::fresh; }

    // Rendering: user atoms print as their name, fresh atoms as "%name".
    std::string str() const { return is_fresh() ? "%" + name_ : name_; }

    friend bool operator==(const Atom&, const Atom&) = default;
    friend std::strong_ordering operator<=>(const Atom&, const Atom&) = default;

  private:
    Atom(Space space, std::string name) : space_(space), name_(std::move(name)) {}

    Space space_ = Space::user;
    std::string name_;
};

struct Var {
    std::string name;

    friend bool operator==(const Var&, const Var&) = default;
    friend std::strong_ordering operator<=>(const Var&, const Var&) = default;
};

using AtomSet = std::set<Atom>;
using VarSet = std::set<Var>;

/// A finitely supported bijection on atoms.
///
/// Keeps the swap list it was built from (for display) alongside the
/// normalized map of moved atoms. Equality and ordering look only at the
/// normalized map. Swap lists compose right to left: the last swap is
/// applied first.
class Perm {
  public:
    using Swap = std::pair<Atom, Atom>;

    Perm() = default;

    static Perm swap(const Atom& a, const Atom& b);
    static Perm from_swaps(std::vector<Swap> swaps);
    // `mapping` must be a bijection on its key set; fixed points are dropped.
    static Perm from_map(const std::map<Atom, Atom>& mapping);

    Atom operator()(const Atom& a) const;

    bool is_identity() const { return map_.empty(); }
    AtomSet domain() const;
    const std::vector<Swap>& swaps() const { return swaps_; }
    const std::map<Atom, Atom>& mapping() const { return map_; }

    std::string str() const;

    friend bool operator==(const Perm& lhs, const Perm& rhs) { return lhs.map_ == rhs.map_; }
    friend std::strong_ordering operator<=>(const Perm& lhs, const Perm& rhs) {
        return lhs.map_ <=> rhs.map_;
    }

  private:
    std::vector<Swap> swaps_;
    std::map<Atom, Atom> map_;
};

// lhs ∘ rhs: rhs is applied first.
Perm compose(const Perm& lhs, const Perm& rhs);
Perm inverse(const Perm& pi);
// pi^rho = rho ∘ pi ∘ rho⁻¹
Perm conjugate(const Perm& pi, const Perm& rho);

inline Atom perm_apply(const Perm& pi, const Atom& a) { return pi(a); }

class Term {
  public:
    enum class Kind : std::uint8_t { atom, susp, abs, app };

    // Placeholder: the nullary application with an empty symbol.
    Term();

    static Term atom(Atom a);
    static Term susp(Perm pi, Var x);
    static Term var(Var x) { return susp(Perm{}, std::move(x)); }
    static Term abs(Atom a, Term body);
    static Term app(std::string symbol, std::vector<Term> args);

    Kind kind() const { return node_->kind; }
    bool is_atom() const { return kind() == Kind::atom; }
    bool is_susp() const { return kind() == Kind::susp; }
    bool is_abs() const { return kind() == Kind::abs; }
    bool is_app() const { return kind() == Kind::app; }

    // Atom of an atom term, or the binder of an abstraction.
    const Atom& atom_value() const { return node_->atom; }
    const Perm& perm() const { return node_->perm; }
    const Var& var_value() const { return node_->var; }
    const Term& body() const { return node_->args.front(); }
    const std::string& symbol() const { return node_->symbol; }
    const std::vector<Term>& args() const { return node_->args; }

    friend bool operator==(const Term& lhs, const Term& rhs);
    friend std::strong_ordering operator<=>(const Term& lhs, const Term& rhs);

  private:
    struct Node {
        Kind kind = Kind::atom;
        Atom atom;
        Perm perm;
        Var var;
        std::string symbol;
        std::vector<Term> args;
    };

    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

using Subst = std::map<Var, Term>;

Term act(const Perm& pi, const Term& t);
// Applies sigma once; abstraction binders are not renamed.
Term subst_apply(const Term& t, const Subst& sigma);

// a ∈ t: includes binders and atoms in the domain of suspended permutations.
AtomSet atoms_of(const Term& t);
VarSet vars_of(const Term& t);
bool is_ground(const Term& t);
// Throws GroundnessError on terms mentioning unknowns.
AtomSet free_names(const Term& g);

std::size_t depth(const Term& t);

class Signature {
  public:
    void add(const std::string& symbol, unsigned arity, bool commutative = false);

    std::optional<unsigned> arity(const std::string& symbol) const;
    bool contains(const std::string& symbol) const { return arities_.count(symbol) != 0; }
    bool is_commutative(const std::string& symbol) const { return commutative_.count(symbol) != 0; }
    const std::map<std::string, unsigned>& symbols() const { return arities_; }
    const std::set<std::string>& commutative_symbols() const { return commutative_; }

    // Lines of the form "symbol/arity [comm]"; '%' starts a comment.
    static Signature parse(const std::string& text);
    // lam/1 app/2 +/2 comm f^C/2 comm f/2 g/2 h/1 */2 0/0 pl/2 pr/2
    static Signature builtin();

  private:
    std::map<std::string, unsigned> arities_;
    std::set<std::string> commutative_;
};

// Throws Error when an application disagrees with the signature.
void check_signature(const Signature& sig, const Term& t);

}  // namespace nomfix
