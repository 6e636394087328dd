#include "nomfix/proof_io.hpp"

#include "nomfix/error.hpp"
#include "nomfix/syntax.hpp"

namespace nomfix {

namespace {

const ParseOptions kFresh{true};

FixJudgement conclusion_from(const std::string& text, const Signature& sig) {
    return to_fix_judgement(parse_judgement(text, sig, kFresh));
}

Atom atom_from(const std::string& text) {
    Term t = parse_term(text, Signature{}, kFresh);
    if (!t.is_atom()) throw Error("expected an atom, got '" + text + "'");
    return t.atom_value();
}

}  // namespace

nlohmann::json to_json(const ProofTree& tree) {
    nlohmann::json j;
    j["rule"] = to_string(tree.rule);
    j["conclusion"] = show(tree.conclusion);
    switch (tree.rule) {
        case Rule::ax: {
            j["axiom"] = tree.axiom;
            j["perm"] = show(tree.perm);
            nlohmann::json s = nlohmann::json::object();
            for (const auto& [x, t] : tree.subst) s[x.name] = show(t);
            j["subst"] = s;
            break;
        }
        case Rule::cong_f:
            j["position"] = tree.position;
            break;
        case Rule::fr:
            j["perm"] = show(tree.perm);
            if (tree.var) j["var"] = tree.var->name;
            break;
        case Rule::perm:
            j["perm"] = show(tree.perm);
            break;
        default:
            break;
    }
    if (!tree.fresh.empty()) {
        nlohmann::json f = nlohmann::json::array();
        for (const auto& a : tree.fresh) f.push_back(show(a));
        j["fresh"] = f;
    }
    nlohmann::json premises = nlohmann::json::array();
    for (const auto& p : tree.premises) premises.push_back(to_json(p));
    j["premises"] = premises;
    return j;
}

ProofTree proof_from_json(const nlohmann::json& j, const Signature& sig) {
    if (!j.is_object()) throw Error("proof node must be an object");
    if (!j.contains("rule") || !j["rule"].is_string()) throw Error("proof node needs a string 'rule'");
    if (!j.contains("conclusion") || !j["conclusion"].is_string()) {
        throw Error("proof node needs a string 'conclusion'");
    }
    ProofTree tree;
    auto rule = rule_from_string(j["rule"].get<std::string>());
    if (!rule) throw Error("unknown rule '" + j["rule"].get<std::string>() + "'");
    tree.rule = *rule;
    tree.conclusion = conclusion_from(j["conclusion"].get<std::string>(), sig);
    if (j.contains("axiom")) tree.axiom = j["axiom"].get<std::string>();
    if (j.contains("perm")) tree.perm = parse_perm(j["perm"].get<std::string>(), kFresh);
    if (j.contains("subst")) {
        if (!j["subst"].is_object()) throw Error("'subst' must be an object");
        for (const auto& [x, t] : j["subst"].items()) {
            tree.subst[Var{x}] = parse_term(t.get<std::string>(), sig, kFresh);
        }
    }
    if (j.contains("position")) tree.position = j["position"].get<std::size_t>();
    if (j.contains("var")) tree.var = Var{j["var"].get<std::string>()};
    if (j.contains("fresh")) {
        for (const auto& a : j["fresh"]) tree.fresh.push_back(atom_from(a.get<std::string>()));
    }
    if (j.contains("premises")) {
        if (!j["premises"].is_array()) throw Error("'premises' must be an array");
        for (const auto& p : j["premises"]) tree.premises.push_back(proof_from_json(p, sig));
    }
    return tree;
}

}  // namespace nomfix
