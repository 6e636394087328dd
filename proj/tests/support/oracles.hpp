#pragma once

// Reference implementations used as test oracles. They share no code with
// the library beyond the term and atom constructors.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "nomfix/terms.hpp"

namespace oracle {

using nomfix::Atom;
using nomfix::Term;

// Swap list applied right to left.
inline Atom apply_swaps(const std::vector<std::pair<Atom, Atom>>& swaps, Atom a) {
    for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) {
        if (a == it->first) {
            a = it->second;
        } else if (a == it->second) {
            a = it->first;
        }
    }
    return a;
}

inline Atom swap_atom(const Atom& a, const Atom& b, const Atom& x) { return x == a ? b : x == b ? a : x; }

// (a b) acting on a ground term.
inline Term swap_ground(const Atom& a, const Atom& b, const Term& t) {
    switch (t.kind()) {
        case Term::Kind::atom:
            return Term::atom(swap_atom(a, b, t.atom_value()));
        case Term::Kind::abs:
            return Term::abs(swap_atom(a, b, t.atom_value()), swap_ground(a, b, t.body()));
        case Term::Kind::app: {
            std::vector<Term> args;
            for (const auto& x : t.args()) args.push_back(swap_ground(a, b, x));
            return Term::app(t.symbol(), args);
        }
        case Term::Kind::susp:
            break;
    }
    return t;
}

inline std::set<Atom> free_atoms(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::atom:
            return {t.atom_value()};
        case Term::Kind::abs: {
            auto s = free_atoms(t.body());
            s.erase(t.atom_value());
            return s;
        }
        case Term::Kind::app: {
            std::set<Atom> s;
            for (const auto& x : t.args()) {
                auto y = free_atoms(x);
                s.insert(y.begin(), y.end());
            }
            return s;
        }
        case Term::Kind::susp:
            break;
    }
    return {};
}

// α(C)-equivalence of ground terms: both binders are renamed to a common
// new name, and commutative symbols may match crosswise.
class GroundAlpha {
  public:
    explicit GroundAlpha(std::set<std::string> comm = {}) : comm_(std::move(comm)) {}

    bool operator()(const Term& s, const Term& t) {
        if (s.kind() != t.kind()) return false;
        switch (s.kind()) {
            case Term::Kind::atom:
                return s.atom_value() == t.atom_value();
            case Term::Kind::abs: {
                Atom z = Atom::fresh("oracle" + std::to_string(counter_++));
                return (*this)(swap_ground(s.atom_value(), z, s.body()), swap_ground(t.atom_value(), z, t.body()));
            }
            case Term::Kind::app: {
                if (s.symbol() != t.symbol() || s.args().size() != t.args().size()) return false;
                bool straight = true;
                for (std::size_t i = 0; i < s.args().size() && straight; ++i) {
                    straight = (*this)(s.args()[i], t.args()[i]);
                }
                if (straight) return true;
                if (comm_.count(s.symbol()) && s.args().size() == 2) {
                    return (*this)(s.args()[0], t.args()[1]) && (*this)(s.args()[1], t.args()[0]);
                }
                return false;
            }
            case Term::Kind::susp:
                break;
        }
        return false;
    }

  private:
    std::set<std::string> comm_;
    int counter_ = 0;
};

using PermMap = std::map<Atom, Atom>;

inline PermMap compose_maps(const PermMap& f, const PermMap& g, const std::set<Atom>& carrier) {
    PermMap out;
    for (const auto& a : carrier) {
        Atom ga = g.count(a) ? g.at(a) : a;
        out[a] = f.count(ga) ? f.at(ga) : ga;
    }
    return out;
}

// Saturation of {id} ∪ gens under pairwise products until nothing new
// appears; finite groups are closed under products alone.
inline std::set<PermMap> closure(const std::vector<PermMap>& gens, const std::set<Atom>& carrier) {
    PermMap id;
    for (const auto& a : carrier) id[a] = a;
    std::set<PermMap> all{id};
    for (const auto& g : gens) all.insert(compose_maps(g, id, carrier));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<PermMap> now(all.begin(), all.end());
        for (const auto& f : now) {
            for (const auto& g : now) {
                if (all.insert(compose_maps(f, g, carrier)).second) grew = true;
            }
        }
    }
    return all;
}

}  // namespace oracle
