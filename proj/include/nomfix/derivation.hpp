#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nomfix/terms.hpp"

namespace nomfix {

/// A rendered derivation: rule name, conclusion text and premises.
/// Engines return these for explanation; the typed, checkable form for the
/// fixed-point system is ProofTree.
struct Derivation {
    std::string rule;
    std::string conclusion;
    std::vector<Derivation> premises;

    friend bool operator==(const Derivation&, const Derivation&) = default;
};

struct Verdict {
    bool holds = false;
    std::optional<Derivation> derivation;
    std::vector<std::string> diagnostics;

    explicit operator bool() const { return holds; }
};

std::string render(const Derivation& d, int indent = 0);

nlohmann::json to_json(const Derivation& d);
Derivation derivation_from_json(const nlohmann::json& j);

/// Call-scoped supply of atoms in the fresh namespace, named prefix+index
/// and skipping anything registered with avoid().
class FreshSupply {
  public:
    explicit FreshSupply(std::string prefix = "c") : prefix_(std::move(prefix)) {}

    void avoid(const Atom& a) { avoid_.insert(a); }
    void avoid(const AtomSet& atoms) { avoid_.insert(atoms.begin(), atoms.end()); }
    void avoid(const Term& t) { avoid(atoms_of(t)); }
    void avoid(const Perm& pi) { avoid(pi.domain()); }

    Atom next();

  private:
    std::string prefix_;
    AtomSet avoid_;
    unsigned counter_ = 0;
};

/// Knobs shared by the decision procedures.
struct EngineOptions {
    std::string fresh_prefix = "c";
    std::size_t carrier_bound = 8;
    bool build_derivation = true;
};

}  // namespace nomfix
