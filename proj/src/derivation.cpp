#include "nomfix/derivation.hpp"

namespace nomfix {

std::string render(const Derivation& d, int indent) {
    std::string out(static_cast<std::size_t>(indent) * 2, ' ');
    out += d.conclusion + "   (" + d.rule + ")\n";
    for (const auto& p : d.premises) out += render(p, indent + 1);
    return out;
}

nlohmann::json to_json(const Derivation& d) {
    nlohmann::json premises = nlohmann::json::array();
    for (const auto& p : d.premises) premises.push_back(to_json(p));
    return {{"rule", d.rule}, {"conclusion", d.conclusion}, {"premises", premises}};
}

Derivation derivation_from_json(const nlohmann::json& j) {
    Derivation d;
    d.rule = j.at("rule").get<std::string>();
    d.conclusion = j.at("conclusion").get<std::string>();
    for (const auto& p : j.at("premises")) d.premises.push_back(derivation_from_json(p));
    return d;
}

Atom FreshSupply::next() {
    for (;;) {
        Atom a = Atom::fresh(prefix_ + std::to_string(++counter_));
        if (!avoid_.count(a)) {
            avoid_.insert(a);
            return a;
        }
    }
}

}  // namespace nomfix
