#include "nomfix/semantics.hpp"

#include <algorithm>

#include "nomfix/error.hpp"
#include "nomfix/permgroups.hpp"
#include "nomfix/show.hpp"

namespace nomfix {

Elem PFinModel::act(const Perm& pi, const Elem& x) const {
    AtomSet out;
    for (const auto& a : std::get<AtomSet>(x)) out.insert(pi(a));
    return out;
}

Elem PFinModel::abs(const Atom& a, const Elem& x) const {
    AtomSet out = std::get<AtomSet>(x);
    out.erase(a);
    return out;
}

Elem PFinModel::apply(const std::string&, const std::vector<Elem>& args) const {
    if (args.empty()) return AtomSet{};
    AtomSet out = std::get<AtomSet>(args.front());
    for (std::size_t i = 1; i < args.size(); ++i) {
        const auto& b = std::get<AtomSet>(args[i]);
        std::erase_if(out, [&](const Atom& a) { return !b.count(a); });
    }
    return out;
}

std::string PFinModel::show(const Elem& x) const { return nomfix::show(std::get<AtomSet>(x)); }

Elem WordsModel::act(const Perm& pi, const Elem& x) const {
    Word out;
    for (const auto& a : std::get<Word>(x)) out.push_back(pi(a));
    return out;
}

Elem WordsModel::abs(const Atom& a, const Elem& x) const {
    Word out = std::get<Word>(x);
    std::erase(out, a);
    return out;
}

Elem WordsModel::apply(const std::string&, const std::vector<Elem>& args) const {
    Word out;
    AtomSet seen;
    for (const auto& w : args) {
        for (const auto& a : std::get<Word>(w)) {
            if (seen.insert(a).second) out.push_back(a);
        }
    }
    return out;
}

AtomSet WordsModel::supp(const Elem& x) const {
    const auto& w = std::get<Word>(x);
    return AtomSet(w.begin(), w.end());
}

std::string WordsModel::show(const Elem& x) const {
    const auto& w = std::get<Word>(x);
    if (w.empty()) return "ε";
    std::string out;
    for (const auto& a : w) out += a.str();
    return out;
}

GroundModel::GroundModel(GroundTheory theory, std::set<std::string> symbols)
    : theory_(theory), symbols_(std::move(symbols)) {
    if (theory_ == GroundTheory::alpha) symbols_.clear();
}

std::string GroundModel::name() const {
    switch (theory_) {
        case GroundTheory::alpha:
            return "ground-alpha";
        case GroundTheory::alpha_c:
            return "ground-alpha-c";
        case GroundTheory::alpha_a:
            return "ground-alpha-a";
    }
    return "ground";
}

namespace {

// Locally nameless ground terms: free atoms, de Bruijn indices for bound ones.
struct Ln {
    enum class Kind { free, bound, abs, app } kind = Kind::free;
    Atom atom;
    std::size_t index = 0;
    std::string symbol;
    std::vector<Ln> args;

    friend bool operator==(const Ln&, const Ln&) = default;
    friend std::strong_ordering operator<=>(const Ln& lhs, const Ln& rhs) {
        if (auto c = lhs.kind <=> rhs.kind; c != 0) return c;
        switch (lhs.kind) {
            case Kind::free:
                return lhs.atom <=> rhs.atom;
            case Kind::bound:
                return lhs.index <=> rhs.index;
            case Kind::abs:
            case Kind::app:
                if (auto c = lhs.symbol <=> rhs.symbol; c != 0) return c;
                return std::lexicographical_compare_three_way(lhs.args.begin(), lhs.args.end(), rhs.args.begin(),
                                                              rhs.args.end());
        }
        return std::strong_ordering::equal;
    }
};

Ln to_ln(const Term& g, std::vector<Atom>& binders) {
    switch (g.kind()) {
        case Term::Kind::atom: {
            for (std::size_t i = binders.size(); i-- > 0;) {
                if (binders[i] == g.atom_value()) return Ln{Ln::Kind::bound, {}, binders.size() - 1 - i, {}, {}};
            }
            return Ln{Ln::Kind::free, g.atom_value(), 0, {}, {}};
        }
        case Term::Kind::abs: {
            binders.push_back(g.atom_value());
            Ln body = to_ln(g.body(), binders);
            binders.pop_back();
            return Ln{Ln::Kind::abs, {}, 0, {}, {std::move(body)}};
        }
        case Term::Kind::app: {
            Ln out{Ln::Kind::app, {}, 0, g.symbol(), {}};
            for (const auto& a : g.args()) out.args.push_back(to_ln(a, binders));
            return out;
        }
        case Term::Kind::susp:
            break;
    }
    throw GroundnessError("ground model given a term with unknowns: " + show(g));
}

void flatten(const std::string& f, Ln&& t, std::vector<Ln>& out) {
    if (t.kind == Ln::Kind::app && t.symbol == f && t.args.size() == 2) {
        flatten(f, std::move(t.args[0]), out);
        flatten(f, std::move(t.args[1]), out);
    } else {
        out.push_back(std::move(t));
    }
}

// Sorts the arguments of commutative symbols bottom-up.
Ln sort_commutative(Ln t, const std::set<std::string>& symbols) {
    for (auto& a : t.args) a = sort_commutative(std::move(a), symbols);
    if (t.kind == Ln::Kind::app && t.args.size() == 2 && symbols.count(t.symbol) && t.args[1] < t.args[0]) {
        std::swap(t.args[0], t.args[1]);
    }
    return t;
}

// Rewrites chains of associative symbols into right-nested form bottom-up.
Ln right_nest(Ln t, const std::set<std::string>& symbols) {
    for (auto& a : t.args) a = right_nest(std::move(a), symbols);
    if (t.kind != Ln::Kind::app || t.args.size() != 2 || !symbols.count(t.symbol)) return t;
    std::string f = t.symbol;
    std::vector<Ln> chain;
    flatten(f, std::move(t), chain);
    Ln acc = std::move(chain.back());
    for (std::size_t i = chain.size() - 1; i-- > 0;) {
        acc = Ln{Ln::Kind::app, {}, 0, f, {std::move(chain[i]), std::move(acc)}};
    }
    return acc;
}

Term from_ln(const Ln& t, std::size_t depth) {
    switch (t.kind) {
        case Ln::Kind::free:
            return Term::atom(t.atom);
        case Ln::Kind::bound:
            return Term::atom(Atom::fresh("v" + std::to_string(depth - 1 - t.index)));
        case Ln::Kind::abs:
            return Term::abs(Atom::fresh("v" + std::to_string(depth)), from_ln(t.args[0], depth + 1));
        case Ln::Kind::app: {
            std::vector<Term> args;
            for (const auto& a : t.args) args.push_back(from_ln(a, depth));
            return Term::app(t.symbol, std::move(args));
        }
    }
    return {};
}

}  // namespace

Term GroundModel::canon(const Term& g) const {
    std::vector<Atom> binders;
    Ln ln = to_ln(g, binders);
    if (theory_ == GroundTheory::alpha_c) ln = sort_commutative(std::move(ln), symbols_);
    if (theory_ == GroundTheory::alpha_a) ln = right_nest(std::move(ln), symbols_);
    return from_ln(ln, 0);
}

Elem GroundModel::act(const Perm& pi, const Elem& x) const { return canon(nomfix::act(pi, std::get<Term>(x))); }

Elem GroundModel::abs(const Atom& a, const Elem& x) const { return canon(Term::abs(a, std::get<Term>(x))); }

Elem GroundModel::apply(const std::string& symbol, const std::vector<Elem>& args) const {
    std::vector<Term> ts;
    for (const auto& a : args) ts.push_back(std::get<Term>(a));
    return canon(Term::app(symbol, std::move(ts)));
}

AtomSet GroundModel::supp(const Elem& x) const { return free_names(std::get<Term>(x)); }

std::string GroundModel::show(const Elem& x) const { return "[" + nomfix::show(std::get<Term>(x)) + "]"; }

std::unique_ptr<SigmaAlgebra> make_model(const std::string& selector, const Signature& sig) {
    if (selector == "singleton") return std::make_unique<SingletonModel>();
    if (selector == "pfin") return std::make_unique<PFinModel>();
    if (selector == "words") return std::make_unique<WordsModel>();
    if (selector == "ground-alpha") return std::make_unique<GroundModel>(GroundTheory::alpha);
    if (selector == "ground-alpha-c") return std::make_unique<GroundModel>(GroundModel::alpha_c(sig));
    throw Error("unknown model '" + selector + "'");
}

std::vector<std::string> model_selectors() { return {"singleton", "pfin", "words", "ground-alpha", "ground-alpha-c"}; }

Elem interpret(const SigmaAlgebra& m, const Valuation& v, const Term& t) {
    switch (t.kind()) {
        case Term::Kind::atom:
            return m.atom(t.atom_value());
        case Term::Kind::susp: {
            auto it = v.values.find(t.var_value());
            if (it != v.values.end()) return m.act(t.perm(), it->second);
            if (!v.use_default) throw UnboundVariable("no value for " + t.var_value().name);
            return m.act(t.perm(), m.default_element());
        }
        case Term::Kind::abs:
            return m.abs(t.atom_value(), interpret(m, v, t.body()));
        case Term::Kind::app: {
            std::vector<Elem> args;
            for (const auto& a : t.args()) args.push_back(interpret(m, v, a));
            return m.apply(t.symbol(), args);
        }
    }
    return Star{};
}

bool fix_sem(const SigmaAlgebra& m, const Perm& pi, const Elem& x) { return m.act(pi, x) == x; }

bool context_valid(const SigmaAlgebra& m, const Valuation& v, const FixContext& ctx) {
    for (const auto& c : ctx) {
        if (!fix_sem(m, c.perm, interpret(m, v, Term::var(c.var)))) return false;
    }
    return true;
}

bool judgement_valid(const SigmaAlgebra& m, const Valuation& v, const FixJudgement& j) {
    if (!context_valid(m, v, j.context)) return true;
    if (const auto* f = std::get_if<FixBody>(&j.body)) return fix_sem(m, f->perm, interpret(m, v, f->term));
    const auto& e = std::get<EqBody>(j.body);
    return interpret(m, v, e.lhs) == interpret(m, v, e.rhs);
}

AtomSet supp_of(const SigmaAlgebra& m, const Elem& x) { return m.supp(x); }

SupportCheck strong_support_check(const SigmaAlgebra& m, const Elem& x, const AtomSet& universe, std::size_t bound,
                                  std::size_t full_search_limit) {
    if (universe.size() > bound) {
        throw UniverseBoundExceeded("universe has " + std::to_string(universe.size()) + " atoms, bound is " +
                                    std::to_string(bound));
    }
    AtomSet support = m.supp(x);
    if (!std::ranges::includes(universe, support)) throw Error("support is not inside the universe");
    auto violates = [&](const Perm& pi) { return fix_sem(m, pi, x) && !fixes_pointwise(pi, support); };
    std::vector<Atom> atoms(universe.begin(), universe.end());
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        for (std::size_t j = i + 1; j < atoms.size(); ++j) {
            Perm pi = Perm::swap(atoms[i], atoms[j]);
            if (violates(pi)) return {false, pi};
        }
    }
    if (atoms.size() <= full_search_limit) {
        std::vector<Atom> image = atoms;
        while (std::next_permutation(image.begin(), image.end())) {
            std::map<Atom, Atom> mapping;
            for (std::size_t i = 0; i < atoms.size(); ++i) mapping[atoms[i]] = image[i];
            Perm pi = Perm::from_map(mapping);
            if (violates(pi)) return {false, pi};
        }
    }
    return {true, std::nullopt};
}

namespace {

using Position = std::vector<std::size_t>;

// Returns the reason a term is not first-order, if any.
std::optional<std::string> not_first_order(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::atom:
            return "mentions the atom " + t.atom_value().str();
        case Term::Kind::abs:
            return "contains the abstraction " + show(t);
        case Term::Kind::susp:
            if (!t.perm().is_identity()) return "contains the suspension " + show(t);
            return std::nullopt;
        case Term::Kind::app:
            for (const auto& a : t.args()) {
                if (auto r = not_first_order(a)) return r;
            }
            return std::nullopt;
    }
    return std::nullopt;
}

void occurrences(const Term& t, Position& pos, std::vector<std::pair<Position, Var>>& out) {
    if (t.is_susp()) {
        out.emplace_back(pos, t.var_value());
        return;
    }
    for (std::size_t i = 0; i < t.args().size(); ++i) {
        pos.push_back(i + 1);
        occurrences(t.args()[i], pos, out);
        pos.pop_back();
    }
}

// X <_t Y for distinct X, Y.
std::set<std::pair<Var, Var>> position_order(const Term& t) {
    std::vector<std::pair<Position, Var>> occ;
    Position pos;
    occurrences(t, pos, occ);
    std::set<std::pair<Var, Var>> out;
    for (const auto& [p, x] : occ) {
        for (const auto& [q, y] : occ) {
            if (x != y && p < q) out.insert({x, y});
        }
    }
    return out;
}

std::optional<std::string> ill_ordered(const std::set<std::pair<Var, Var>>& order) {
    for (const auto& [x, y] : order) {
        if (order.count({y, x})) return x.name + " and " + y.name + " occur in both orders";
    }
    return std::nullopt;
}

}  // namespace

StrongAxiomResult is_strong_axiom(const AxiomForm& ax) {
    if (!ax.context.empty()) return {false, "the context is not empty"};
    if (auto r = not_first_order(ax.lhs)) return {false, "left side " + *r};
    if (auto r = not_first_order(ax.rhs)) return {false, "right side " + *r};
    auto lo = position_order(ax.lhs);
    auto ro = position_order(ax.rhs);
    if (auto r = ill_ordered(lo)) return {false, "left side is not well-ordered: " + *r};
    if (auto r = ill_ordered(ro)) return {false, "right side is not well-ordered: " + *r};
    for (const auto& [x, y] : lo) {
        if (ro.count({y, x})) return {false, "variable orders disagree on " + x.name + " and " + y.name};
    }
    return {true, "first-order, well-ordered and compatible"};
}

std::vector<AxiomForm> standard_axioms() {
    Term x = Term::var(Var{"X"});
    Term y = Term::var(Var{"Y"});
    Term z = Term::var(Var{"Z"});
    Atom a = Atom::user("a");
    Atom b = Atom::user("b");
    auto f = [](const std::string& s, std::vector<Term> args) { return Term::app(s, std::move(args)); };
    return {
        {"A", {}, f("f", {f("f", {x, y}), z}), f("f", {x, f("f", {y, z})})},
        {"Hom", {}, f("h", {f("+", {x, y})}), f("+", {f("h", {x}), f("h", {y})})},
        {"I", {}, f("g", {x, x}), x},
        {"N", {}, f("*", {x, f("0", {})}), f("0", {})},
        {"Lproj", {}, f("pl", {x, y}), x},
        {"Rproj", {}, f("pr", {x, y}), y},
        {"C", {}, f("+", {x, y}), f("+", {y, x})},
        {"D", {}, f("*", {x, f("+", {y, z})}), f("+", {f("*", {x, y}), f("*", {x, z})})},
        {"ATOM", {}, Term::atom(a), Term::atom(b)},
        {"PermBinder", {}, f("f", {Term::abs(a, x), Term::abs(b, y)}), f("g", {Term::abs(b, x), Term::abs(a, y)})},
    };
}

}  // namespace nomfix
