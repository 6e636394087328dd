#pragma once

// Seeded generators for terms, permutations, contexts and model elements.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "nomfix/fixpoint.hpp"
#include "nomfix/fresh.hpp"
#include "nomfix/semantics.hpp"
#include "nomfix/terms.hpp"

namespace nomfix {

struct GenConfig {
    std::vector<Atom> atoms;
    std::vector<Var> vars;
    std::vector<std::pair<std::string, unsigned>> symbols;
    std::size_t max_depth = 4;
    std::size_t max_swaps = 2;

    // atoms a b c d e i …, skipping symbol names; unknowns X Y Z, symbols f/2 g/2 h/1 f^C/2 0/0
    static GenConfig standard(std::size_t atom_count = 6);
};

class Gen {
  public:
    explicit Gen(std::uint64_t seed, GenConfig config = GenConfig::standard());

    const GenConfig& config() const { return config_; }
    std::mt19937_64& engine() { return rng_; }

    std::size_t below(std::size_t n);
    bool coin(double p = 0.5);
    template <class T>
    const T& pick(const std::vector<T>& xs) {
        return xs[below(xs.size())];
    }

    Atom atom();
    Var var();
    Perm swap();
    Perm perm();
    Perm perm_on(const std::vector<Atom>& atoms);
    Term term(std::size_t depth);
    Term term() { return term(config_.max_depth); }
    Term ground_term(std::size_t depth);
    FixContext fix_context(std::size_t max_constraints = 3);
    FreshContext fresh_context(std::size_t max_constraints = 3);

    Elem element(const SigmaAlgebra& m);
    Valuation valuation(const SigmaAlgebra& m, const VarSet& vars);

  private:
    GenConfig config_;
    std::mt19937_64 rng_;
};

}  // namespace nomfix
