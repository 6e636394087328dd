#pragma once

#include <map>
#include <string>

#include "nomfix/terms.hpp"

namespace nomfix {

// Optional display renaming for atoms (used to give ν-bound and generated
// atoms readable names). Atoms without an entry print as Atom::str().
using AtomNames = std::map<Atom, std::string>;

std::string show(const Atom& a, const AtomNames* names = nullptr);
std::string show(const Perm& pi, const AtomNames* names = nullptr);
// Identity suspensions print as the bare unknown; binary operator symbols
// (+, *) print infix.
std::string show(const Term& t, const AtomNames* names = nullptr);
std::string show(const Subst& sigma, const AtomNames* names = nullptr);
std::string show(const AtomSet& atoms, const AtomNames* names = nullptr);

bool is_operator_symbol(const std::string& symbol);

// Readable names for the fresh atoms in `atoms`, avoiding the user atom
// names in `taken`. Generated names follow `prefix` + index.
AtomNames display_names(const AtomSet& atoms, const AtomSet& taken, const std::string& prefix = "c");

}  // namespace nomfix
