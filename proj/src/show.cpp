#include "nomfix/show.hpp"

#include <set>

namespace nomfix {

std::string show(const Atom& a, const AtomNames* names) {
    if (names) {
        auto it = names->find(a);
        if (it != names->end()) return it->second;
    }
    return a.str();
}

std::string show(const Perm& pi, const AtomNames* names) {
    if (pi.is_identity()) return "id";
    std::string out;
    for (const auto& [a, b] : pi.swaps()) out += "(" + show(a, names) + " " + show(b, names) + ")";
    return out;
}

bool is_operator_symbol(const std::string& symbol) {
    if (symbol.empty()) return false;
    for (char c : symbol) {
        if (c != '+' && c != '*') return false;
    }
    return true;
}

namespace {

bool is_infix(const Term& t) { return t.is_app() && t.args().size() == 2 && is_operator_symbol(t.symbol()); }

std::string operand(const Term& t, const AtomNames* names) {
    return is_infix(t) ? "(" + show(t, names) + ")" : show(t, names);
}

}  // namespace

std::string show(const Term& t, const AtomNames* names) {
    switch (t.kind()) {
        case Term::Kind::atom:
            return show(t.atom_value(), names);
        case Term::Kind::susp:
            if (t.perm().is_identity()) return t.var_value().name;
            return show(t.perm(), names) + "." + t.var_value().name;
        case Term::Kind::abs:
            return "[" + show(t.atom_value(), names) + "]" + operand(t.body(), names);
        case Term::Kind::app: {
            if (is_infix(t)) return operand(t.args()[0], names) + " " + t.symbol() + " " + operand(t.args()[1], names);
            if (t.args().empty()) return t.symbol();
            std::string out = t.symbol() + "(";
            for (std::size_t i = 0; i < t.args().size(); ++i) {
                if (i) out += ", ";
                out += show(t.args()[i], names);
            }
            return out + ")";
        }
    }
    return {};
}

std::string show(const Subst& sigma, const AtomNames* names) {
    std::string out = "{";
    bool first = true;
    for (const auto& [x, t] : sigma) {
        if (!first) out += ", ";
        first = false;
        out += x.name + " := " + show(t, names);
    }
    return out + "}";
}

std::string show(const AtomSet& atoms, const AtomNames* names) {
    std::string out = "{";
    bool first = true;
    for (const auto& a : atoms) {
        if (!first) out += ",";
        first = false;
        out += show(a, names);
    }
    return out + "}";
}

AtomNames display_names(const AtomSet& atoms, const AtomSet& taken, const std::string& prefix) {
    std::set<std::string> used;
    for (const auto& a : taken) {
        if (!a.is_fresh()) used.insert(a.name());
    }
    AtomNames names;
    int next = 1;
    for (const auto& a : atoms) {
        if (!a.is_fresh()) continue;
        std::string candidate;
        do {
            candidate = prefix + std::to_string(next++);
        } while (used.count(candidate));
        used.insert(candidate);
        names.emplace(a, candidate);
    }
    return names;
}

}  // namespace nomfix
