#include "nomfix/permgroups.hpp"

#include <deque>
#include <set>

#include "nomfix/error.hpp"

namespace nomfix {

AtomSet ds(const Perm& pi, const Perm& rho) {
    AtomSet out;
    for (const auto& a : pi.domain()) {
        if (pi(a) != rho(a)) out.insert(a);
    }
    for (const auto& a : rho.domain()) {
        if (pi(a) != rho(a)) out.insert(a);
    }
    return out;
}

bool fixes_pointwise(const Perm& pi, const AtomSet& atoms) {
    for (const auto& a : atoms) {
        if (pi(a) != a) return false;
    }
    return true;
}

GenSet::GenSet(std::vector<Perm> generators, std::size_t carrier_bound)
    : generators_(std::move(generators)), bound_(carrier_bound) {
    for (const auto& g : generators_) carrier_.merge(g.domain());
}

namespace {

// Composition on normalized maps; avoids growing swap lists during closure.
Perm compose_maps(const Perm& lhs, const Perm& rhs) {
    std::map<Atom, Atom> m;
    for (const auto& [a, b] : rhs.mapping()) m[a] = lhs(b);
    for (const auto& [a, b] : lhs.mapping()) {
        if (!rhs.mapping().count(a) && !m.count(a)) m[a] = b;
    }
    return Perm::from_map(m);
}

std::vector<Perm> closure(const std::vector<Perm>& generators, std::size_t carrier_size, std::size_t bound) {
    if (carrier_size > bound) {
        throw CarrierBoundExceeded("group carrier has " + std::to_string(carrier_size) +
                                   " atoms, bound is " + std::to_string(bound));
    }
    std::set<Perm> seen{Perm{}};
    std::deque<Perm> queue{Perm{}};
    std::vector<Perm> out;
    while (!queue.empty()) {
        Perm cur = queue.front();
        queue.pop_front();
        out.push_back(cur);
        // Finite groups: closing under generators alone also yields inverses.
        for (const auto& g : generators) {
            Perm next = compose_maps(g, cur);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return out;
}

struct Component {
    AtomSet atoms;
    std::vector<Perm> generators;
};

std::vector<Component> components(const std::vector<Perm>& generators) {
    std::vector<Component> comps;
    for (const auto& g : generators) {
        if (g.is_identity()) continue;
        Component merged{g.domain(), {g}};
        std::vector<Component> rest;
        for (auto& c : comps) {
            bool overlap = false;
            for (const auto& a : c.atoms) {
                if (merged.atoms.count(a)) {
                    overlap = true;
                    break;
                }
            }
            if (overlap) {
                merged.atoms.merge(c.atoms);
                merged.generators.insert(merged.generators.end(), c.generators.begin(), c.generators.end());
            } else {
                rest.push_back(std::move(c));
            }
        }
        rest.push_back(std::move(merged));
        comps = std::move(rest);
    }
    return comps;
}

}  // namespace

std::vector<Perm> enumerate_group(const GenSet& gens) {
    return closure(gens.generators(), gens.carrier().size(), gens.carrier_bound());
}

bool group_member(const Perm& pi, const GenSet& gens) {
    if (pi.is_identity()) return true;
    for (const auto& a : pi.domain()) {
        if (!gens.carrier().count(a)) return false;
    }
    for (const auto& comp : components(gens.generators())) {
        std::map<Atom, Atom> restricted;
        for (const auto& a : comp.atoms) {
            Atom image = pi(a);
            if (!comp.atoms.count(image)) return false;
            if (image != a) restricted.emplace(a, image);
        }
        if (restricted.empty()) continue;
        Perm target = Perm::from_map(restricted);
        bool found = false;
        for (const auto& g : closure(comp.generators, comp.atoms.size(), gens.carrier_bound())) {
            if (g == target) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace nomfix
