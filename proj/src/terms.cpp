#include "nomfix/terms.hpp"

#include <algorithm>
#include <sstream>

#include "nomfix/error.hpp"

namespace nomfix {

Perm Perm::swap(const Atom& a, const Atom& b) { return from_swaps({{a, b}}); }

Perm Perm::from_swaps(std::vector<Swap> swaps) {
    Perm p;
    std::erase_if(swaps, [](const Swap& s) { return s.first == s.second; });
    AtomSet touched;
    for (const auto& [a, b] : swaps) {
        touched.insert(a);
        touched.insert(b);
    }
    for (const auto& a : touched) {
        Atom image = a;
        for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) {
            if (image == it->first) {
                image = it->second;
            } else if (image == it->second) {
                image = it->first;
            }
        }
        if (image != a) p.map_.emplace(a, image);
    }
    p.swaps_ = std::move(swaps);
    return p;
}

Perm Perm::from_map(const std::map<Atom, Atom>& mapping) {
    Perm p;
    for (const auto& [a, b] : mapping) {
        if (a != b) p.map_.emplace(a, b);
    }
    // One cycle x1 -> x2 -> ... -> xk becomes (x1 x2)(x2 x3)...(x(k-1) xk).
    AtomSet seen;
    for (const auto& [start, next] : p.map_) {
        if (seen.count(start)) continue;
        std::vector<Atom> cycle{start};
        seen.insert(start);
        for (Atom cur = next; cur != start; cur = p.map_.at(cur)) {
            cycle.push_back(cur);
            seen.insert(cur);
        }
        for (std::size_t i = 0; i + 1 < cycle.size(); ++i) p.swaps_.emplace_back(cycle[i], cycle[i + 1]);
    }
    return p;
}

Atom Perm::operator()(const Atom& a) const {
    auto it = map_.find(a);
    return it == map_.end() ? a : it->second;
}

AtomSet Perm::domain() const {
    AtomSet dom;
    for (const auto& kv : map_) dom.insert(kv.first);
    return dom;
}

std::string Perm::str() const {
    if (swaps_.empty() || is_identity()) return "id";
    std::string out;
    for (const auto& [a, b] : swaps_) out += "(" + a.str() + " " + b.str() + ")";
    return out;
}

Perm compose(const Perm& lhs, const Perm& rhs) {
    std::vector<Perm::Swap> swaps = lhs.swaps();
    swaps.insert(swaps.end(), rhs.swaps().begin(), rhs.swaps().end());
    return Perm::from_swaps(std::move(swaps));
}

Perm inverse(const Perm& pi) {
    std::vector<Perm::Swap> swaps(pi.swaps().rbegin(), pi.swaps().rend());
    return Perm::from_swaps(std::move(swaps));
}

Perm conjugate(const Perm& pi, const Perm& rho) { return compose(rho, compose(pi, inverse(rho))); }

Term::Term() {
    static const auto placeholder = std::make_shared<const Node>(Node{Kind::app, {}, {}, {}, {}, {}});
    node_ = placeholder;
}

Term Term::atom(Atom a) {
    Node n;
    n.kind = Kind::atom;
    n.atom = std::move(a);
    return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::susp(Perm pi, Var x) {
    Node n;
    n.kind = Kind::susp;
    n.perm = std::move(pi);
    n.var = std::move(x);
    return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::abs(Atom a, Term body) {
    Node n;
    n.kind = Kind::abs;
    n.atom = std::move(a);
    n.args.push_back(std::move(body));
    return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::app(std::string symbol, std::vector<Term> args) {
    Node n;
    n.kind = Kind::app;
    n.symbol = std::move(symbol);
    n.args = std::move(args);
    return Term(std::make_shared<const Node>(std::move(n)));
}

bool operator==(const Term& lhs, const Term& rhs) { return (lhs <=> rhs) == 0; }

std::strong_ordering operator<=>(const Term& lhs, const Term& rhs) {
    if (lhs.node_ == rhs.node_) return std::strong_ordering::equal;
    if (auto c = lhs.kind() <=> rhs.kind(); c != 0) return c;
    switch (lhs.kind()) {
        case Term::Kind::atom:
            return lhs.atom_value() <=> rhs.atom_value();
        case Term::Kind::susp:
            if (auto c = lhs.var_value() <=> rhs.var_value(); c != 0) return c;
            return lhs.perm() <=> rhs.perm();
        case Term::Kind::abs:
            if (auto c = lhs.atom_value() <=> rhs.atom_value(); c != 0) return c;
            return lhs.body() <=> rhs.body();
        case Term::Kind::app:
            if (auto c = lhs.symbol() <=> rhs.symbol(); c != 0) return c;
            return std::lexicographical_compare_three_way(lhs.args().begin(), lhs.args().end(),
                                                          rhs.args().begin(), rhs.args().end());
    }
    return std::strong_ordering::equal;
}

Term act(const Perm& pi, const Term& t) {
    if (pi.is_identity()) return t;
    switch (t.kind()) {
        case Term::Kind::atom:
            return Term::atom(pi(t.atom_value()));
        case Term::Kind::susp:
            return Term::susp(compose(pi, t.perm()), t.var_value());
        case Term::Kind::abs:
            return Term::abs(pi(t.atom_value()), act(pi, t.body()));
        case Term::Kind::app: {
            std::vector<Term> args;
            args.reserve(t.args().size());
            for (const auto& a : t.args()) args.push_back(act(pi, a));
            return Term::app(t.symbol(), std::move(args));
        }
    }
    return t;
}

Term subst_apply(const Term& t, const Subst& sigma) {
    switch (t.kind()) {
        case Term::Kind::atom:
            return t;
        case Term::Kind::susp: {
            auto it = sigma.find(t.var_value());
            return it == sigma.end() ? t : act(t.perm(), it->second);
        }
        case Term::Kind::abs:
            return Term::abs(t.atom_value(), subst_apply(t.body(), sigma));
        case Term::Kind::app: {
            std::vector<Term> args;
            args.reserve(t.args().size());
            for (const auto& a : t.args()) args.push_back(subst_apply(a, sigma));
            return Term::app(t.symbol(), std::move(args));
        }
    }
    return t;
}

namespace {

void collect_atoms(const Term& t, AtomSet& out) {
    switch (t.kind()) {
        case Term::Kind::atom:
            out.insert(t.atom_value());
            break;
        case Term::Kind::susp:
            for (const auto& kv : t.perm().mapping()) out.insert(kv.first);
            break;
        case Term::Kind::abs:
            out.insert(t.atom_value());
            collect_atoms(t.body(), out);
            break;
        case Term::Kind::app:
            for (const auto& a : t.args()) collect_atoms(a, out);
            break;
    }
}

void collect_vars(const Term& t, VarSet& out) {
    switch (t.kind()) {
        case Term::Kind::atom:
            break;
        case Term::Kind::susp:
            out.insert(t.var_value());
            break;
        case Term::Kind::abs:
            collect_vars(t.body(), out);
            break;
        case Term::Kind::app:
            for (const auto& a : t.args()) collect_vars(a, out);
            break;
    }
}

AtomSet free_names_rec(const Term& g) {
    switch (g.kind()) {
        case Term::Kind::atom:
            return {g.atom_value()};
        case Term::Kind::abs: {
            AtomSet fn = free_names_rec(g.body());
            fn.erase(g.atom_value());
            return fn;
        }
        case Term::Kind::app: {
            AtomSet fn;
            for (const auto& a : g.args()) fn.merge(free_names_rec(a));
            return fn;
        }
        case Term::Kind::susp:
            break;
    }
    throw GroundnessError("free_names: term mentions unknown " + g.var_value().name);
}

}  // namespace

AtomSet atoms_of(const Term& t) {
    AtomSet out;
    collect_atoms(t, out);
    return out;
}

VarSet vars_of(const Term& t) {
    VarSet out;
    collect_vars(t, out);
    return out;
}

bool is_ground(const Term& t) { return vars_of(t).empty(); }

AtomSet free_names(const Term& g) { return free_names_rec(g); }

std::size_t depth(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::atom:
        case Term::Kind::susp:
            return 1;
        case Term::Kind::abs:
            return 1 + depth(t.body());
        case Term::Kind::app: {
            std::size_t d = 0;
            for (const auto& a : t.args()) d = std::max(d, depth(a));
            return 1 + d;
        }
    }
    return 1;
}

void Signature::add(const std::string& symbol, unsigned arity, bool commutative) {
    if (commutative && arity != 2) throw Error("commutative symbol " + symbol + " must have arity 2");
    arities_[symbol] = arity;
    if (commutative) {
        commutative_.insert(symbol);
    } else {
        commutative_.erase(symbol);
    }
}

std::optional<unsigned> Signature::arity(const std::string& symbol) const {
    auto it = arities_.find(symbol);
    if (it == arities_.end()) return std::nullopt;
    return it->second;
}

Signature Signature::parse(const std::string& text) {
    Signature sig;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto c = line.find('%'); c != std::string::npos) line.erase(c);
        std::istringstream ls(line);
        std::string decl;
        if (!(ls >> decl)) continue;
        auto slash = decl.rfind('/');
        if (slash == std::string::npos || slash == 0 || slash + 1 == decl.size()) {
            throw ParseError("signature line " + std::to_string(lineno) + ": expected symbol/arity", lineno);
        }
        unsigned arity = 0;
        try {
            arity = static_cast<unsigned>(std::stoul(decl.substr(slash + 1)));
        } catch (const std::exception&) {
            throw ParseError("signature line " + std::to_string(lineno) + ": bad arity", lineno);
        }
        std::string flag;
        bool comm = false;
        if (ls >> flag) {
            if (flag != "comm") {
                throw ParseError("signature line " + std::to_string(lineno) + ": unknown flag " + flag, lineno);
            }
            comm = true;
        }
        sig.add(decl.substr(0, slash), arity, comm);
    }
    return sig;
}

Signature Signature::builtin() {
    Signature sig;
    sig.add("lam", 1);
    sig.add("app", 2);
    sig.add("+", 2, true);
    sig.add("f^C", 2, true);
    sig.add("f", 2);
    sig.add("g", 2);
    sig.add("h", 1);
    sig.add("*", 2);
    sig.add("0", 0);
    sig.add("pl", 2);
    sig.add("pr", 2);
    return sig;
}

void check_signature(const Signature& sig, const Term& t) {
    switch (t.kind()) {
        case Term::Kind::atom:
        case Term::Kind::susp:
            return;
        case Term::Kind::abs:
            check_signature(sig, t.body());
            return;
        case Term::Kind::app: {
            auto ar = sig.arity(t.symbol());
            if (!ar) throw Error("symbol " + t.symbol() + " is not in the signature");
            if (*ar != t.args().size()) {
                throw Error("symbol " + t.symbol() + " expects " + std::to_string(*ar) + " arguments, got " +
                            std::to_string(t.args().size()));
            }
            for (const auto& a : t.args()) check_signature(sig, a);
            return;
        }
    }
}

}  // namespace nomfix
