#include "nomfix/random.hpp"

#include <algorithm>

namespace nomfix {

GenConfig GenConfig::standard(std::size_t atom_count) {
    GenConfig c;
    const Signature sig = Signature::builtin();
    for (char n = 'a'; c.atoms.size() < atom_count && n <= 'z'; ++n) {
        std::string name(1, n);
        if (!sig.contains(name)) c.atoms.push_back(Atom::user(name));
    }
    c.vars = {Var{"X"}, Var{"Y"}, Var{"Z"}};
    c.symbols = {{"f", 2}, {"g", 2}, {"h", 1}, {"f^C", 2}, {"0", 0}};
    return c;
}

Gen::Gen(std::uint64_t seed, GenConfig config) : config_(std::move(config)), rng_(seed) {}

std::size_t Gen::below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

bool Gen::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

Atom Gen::atom() { return pick(config_.atoms); }

Var Gen::var() { return pick(config_.vars); }

Perm Gen::swap() {
    Atom a = atom();
    Atom b = atom();
    while (config_.atoms.size() > 1 && b == a) b = atom();
    return Perm::swap(a, b);
}

Perm Gen::perm() {
    std::vector<Perm::Swap> swaps;
    std::size_t n = below(config_.max_swaps + 1);
    for (std::size_t i = 0; i < n; ++i) {
        Perm s = swap();
        swaps.push_back(s.swaps().front());
    }
    return Perm::from_swaps(std::move(swaps));
}

Perm Gen::perm_on(const std::vector<Atom>& atoms) {
    std::vector<Atom> image = atoms;
    std::shuffle(image.begin(), image.end(), rng_);
    std::map<Atom, Atom> m;
    for (std::size_t i = 0; i < atoms.size(); ++i) m[atoms[i]] = image[i];
    return Perm::from_map(m);
}

Term Gen::term(std::size_t depth) {
    bool leaf = depth == 0 || coin(0.3);
    if (leaf) {
        if (!config_.vars.empty() && coin()) return Term::susp(coin() ? Perm{} : perm(), var());
        return Term::atom(atom());
    }
    if (coin(0.35)) return Term::abs(atom(), term(depth - 1));
    const auto& [f, n] = pick(config_.symbols);
    std::vector<Term> args;
    for (unsigned i = 0; i < n; ++i) args.push_back(term(depth - 1));
    return Term::app(f, std::move(args));
}

Term Gen::ground_term(std::size_t depth) {
    if (depth == 0 || coin(0.3)) return Term::atom(atom());
    if (coin(0.35)) return Term::abs(atom(), ground_term(depth - 1));
    const auto& [f, n] = pick(config_.symbols);
    std::vector<Term> args;
    for (unsigned i = 0; i < n; ++i) args.push_back(ground_term(depth - 1));
    return Term::app(f, std::move(args));
}

FixContext Gen::fix_context(std::size_t max_constraints) {
    FixContext out;
    std::size_t n = below(max_constraints + 1);
    for (std::size_t i = 0; i < n; ++i) out.insert({swap(), var()});
    return out;
}

FreshContext Gen::fresh_context(std::size_t max_constraints) {
    FreshContext out;
    std::size_t n = below(max_constraints + 1);
    for (std::size_t i = 0; i < n; ++i) out.insert({atom(), var()});
    return out;
}

Elem Gen::element(const SigmaAlgebra& m) {
    std::string name = m.name();
    if (name == "singleton") return Star{};
    if (name == "pfin") {
        AtomSet s;
        for (const auto& a : config_.atoms) {
            if (coin(0.4)) s.insert(a);
        }
        return s;
    }
    if (name == "words") {
        std::vector<Atom> letters = config_.atoms;
        std::shuffle(letters.begin(), letters.end(), rng_);
        letters.resize(below(std::min<std::size_t>(letters.size(), 4) + 1));
        return Word(letters.begin(), letters.end());
    }
    if (const auto* g = dynamic_cast<const GroundModel*>(&m)) return g->canon(ground_term(3));
    return m.atom(atom());
}

Valuation Gen::valuation(const SigmaAlgebra& m, const VarSet& vars) {
    Valuation v;
    for (const auto& x : vars) v.values[x] = element(m);
    return v;
}

}  // namespace nomfix
