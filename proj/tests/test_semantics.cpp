#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "nomfix/error.hpp"
#include "nomfix/fresh.hpp"
#include "nomfix/random.hpp"
#include "nomfix/semantics.hpp"
#include "nomfix/syntax.hpp"
#include "support/oracles.hpp"
#include "support/sample.hpp"

using namespace nomfix;

namespace {

const Signature sig = Signature::builtin();
const PFinModel pfin;
const SingletonModel single;
const WordsModel words;
const GroundModel alpha = GroundModel::alpha();
const GroundModel alpha_c = GroundModel::alpha_c(sig);

Atom at(const char* n) { return Atom::user(n); }
Perm sw(const char* a, const char* b) { return Perm::swap(at(a), at(b)); }
Term T(const std::string& s) { return parse_term(s); }
Elem E(const SigmaAlgebra& m, const std::string& s) { return parse_element(s, m); }
FixJudgement J(const std::string& s) { return to_fix_judgement(parse_judgement(s)); }

std::vector<const SigmaAlgebra*> models() { return {&single, &pfin, &words, &alpha, &alpha_c}; }

// Every permutation of `universe`.
std::vector<Perm> all_perms(const std::vector<Atom>& universe) {
    std::vector<Perm> out;
    std::vector<Atom> image = universe;
    std::sort(image.begin(), image.end());
    do {
        std::map<Atom, Atom> m;
        for (std::size_t i = 0; i < universe.size(); ++i) m[universe[i]] = image[i];
        out.push_back(Perm::from_map(m));
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
}

// Every word of distinct letters over `universe`.
std::vector<Word> all_words(const std::vector<Atom>& universe) {
    std::vector<Word> out{{}};
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (const auto& a : universe) {
            if (std::find(out[i].begin(), out[i].end(), a) != out[i].end()) continue;
            Word w = out[i];
            w.push_back(a);
            out.push_back(w);
        }
    }
    return out;
}

Valuation closed(Gen& g, const SigmaAlgebra& m) {
    VarSet vars(g.config().vars.begin(), g.config().vars.end());
    Valuation v = g.valuation(m, vars);
    v.use_default = false;
    return v;
}

}  // namespace

TEST_CASE("interpretation") {
    CHECK(interpret(pfin, {}, T("[a]a")) == Elem{AtomSet{}});
    Valuation v = parse_valuation("X1 := {a1, a2}", pfin);
    CHECK(interpret(pfin, v, T("(a1 a3).X1")) == Elem{AtomSet{at("a3"), at("a2")}});
    CHECK(interpret(pfin, v, T("f(X1, a1)")) == Elem{AtomSet{at("a1")}});
    CHECK(interpret(single, {}, T("f([a]X, g(b, c))")) == Elem{Star{}});
    CHECK(interpret(words, parse_valuation("X := abc", words), T("f([b]X, (a d).X)")) == E(words, "acdb"));
    CHECK(interpret(alpha, {}, T("[a]f(a, b)")) == interpret(alpha, {}, T("[c]f(c, b)")));
    CHECK(interpret(alpha_c, {}, T("f^C(a, b)")) == interpret(alpha_c, {}, T("f^C(b, a)")));
    CHECK(interpret(alpha, {}, T("f^C(a, b)")) != interpret(alpha, {}, T("f^C(b, a)")));
    Valuation strict;
    strict.use_default = false;
    CHECK_THROWS_AS(interpret(pfin, strict, T("X")), UnboundVariable);
    CHECK(interpret(pfin, {}, T("X")) == pfin.default_element());
}

TEST_CASE("semantic fixed points") {
    CHECK(fix_sem(pfin, sw("a", "b"), E(pfin, "{a, b}")));
    CHECK_FALSE(fix_sem(pfin, sw("a", "c"), E(pfin, "{a, b}")));
    CHECK(fix_sem(alpha_c, sw("a", "b"), E(alpha_c, "f^C(a, b)")));
    CHECK_FALSE(fix_sem(alpha, sw("a", "b"), E(alpha, "f^C(a, b)")));
    CHECK(fix_sem(words, Perm{}, E(words, "ab")));
    CHECK_FALSE(fix_sem(words, sw("a", "b"), E(words, "ab")));
}

TEST_CASE("supports") {
    CHECK(supp_of(pfin, E(pfin, "{a, b}")) == AtomSet{at("a"), at("b")});
    CHECK(supp_of(alpha, E(alpha, "[a]a")).empty());
    CHECK(supp_of(alpha, E(alpha, "[a]f(a, b)")) == AtomSet{at("b")});
    CHECK(supp_of(single, Star{}).empty());
    CHECK(supp_of(words, E(words, "ba")) == AtomSet{at("a"), at("b")});
}

TEST_CASE("the finite-powerset counterexample") {
    FixJudgement j = J("(a1 a2) fix X1, (a3 a4) fix X1 |- (a1 a3) fix X1");
    CHECK(check(j, VarRuleMode::subset_dom).holds);
    CHECK_FALSE(check(j, VarRuleMode::group_generated).holds);
    Valuation v = parse_valuation("X1 := {a1, a2}", pfin);
    CHECK(context_valid(pfin, v, j.context));
    CHECK_FALSE(judgement_valid(pfin, v, j));
    CHECK(pfin.show(interpret(pfin, v, T("(a1 a3).X1"))) == "{a2,a3}");
}

TEST_CASE("the commutative counterexample") {
    FixJudgement j = J("(a1 a2) fix X1, (a3 a4) fix X1 |- (a1 a3) fix X1");
    Valuation v = parse_valuation("X1 := f^C(a1, a2)", alpha_c);
    CHECK(context_valid(alpha_c, v, j.context));
    CHECK_FALSE(judgement_valid(alpha_c, v, j));
    CHECK(judgement_valid(single, {}, j));
}

TEST_CASE("strong support") {
    SupportCheck p = strong_support_check(pfin, E(pfin, "{a, b}"), {at("a"), at("b"), at("c")});
    CHECK_FALSE(p.strong);
    REQUIRE(p.witness);
    CHECK(*p.witness == sw("a", "b"));
    CHECK(strong_support_check(words, E(words, "ab"), {at("a"), at("b"), at("c")}).strong);
    SupportCheck c = strong_support_check(alpha_c, E(alpha_c, "f^C(a, b)"), {at("a"), at("b"), at("c")});
    CHECK_FALSE(c.strong);
    REQUIRE(c.witness);
    CHECK(*c.witness == sw("a", "b"));
    AtomSet big;
    for (int i = 0; i < 9; ++i) big.insert(Atom::user("u" + std::to_string(i)));
    CHECK_THROWS_AS(strong_support_check(words, E(words, "ab"), big), UniverseBoundExceeded);
}

TEST_CASE("strong axioms") {
    std::map<std::string, bool> want{{"A", true},  {"Hom", true}, {"I", true},    {"N", true},
                                     {"Lproj", true}, {"Rproj", true}, {"C", false}, {"D", false},
                                     {"ATOM", false}};
    std::map<std::string, bool> got;
    int binder = 0;
    for (const auto& ax : standard_axioms()) {
        StrongAxiomResult r = is_strong_axiom(ax);
        CHECK_FALSE(r.reason.empty());
        if (want.count(ax.name)) {
            got[ax.name] = r.strong;
        } else {
            ++binder;
            CHECK_FALSE(r.strong);
        }
    }
    CHECK(got == want);
    CHECK(binder == 1);
    CHECK_FALSE(is_strong_axiom({"ctx", J("(a b) fix X |- a = a").context, T("f(X, Y)"), T("f(X, Y)")}).strong);
    CHECK_FALSE(is_strong_axiom({"swap", {}, T("f(X, Y)"), T("f(Y, X)")}).strong);
    CHECK(is_strong_axiom({"drop", {}, T("f(X, Y)"), T("h(Y)")}).strong);
}

TEST_CASE("selectors") {
    for (const auto& s : model_selectors()) CHECK(make_model(s)->name() == s);
    CHECK_THROWS(make_model("nope"));
}

TEST_CASE("property: model laws") {
    Gen g(61);
    for (const SigmaAlgebra* m : models()) {
        INFO(m->name());
        for (int i = 0; i < 300; ++i) {
            Elem x = g.element(*m);
            Elem y = g.element(*m);
            Perm p = g.perm();
            Perm q = g.perm();
            Atom a = g.atom();
            CHECK(m->act(Perm{}, x) == x);
            CHECK(m->act(p, m->act(q, x)) == m->act(compose(p, q), x));
            CHECK(m->act(p, m->atom(a)) == m->atom(p(a)));
            CHECK(m->act(p, m->abs(a, x)) == m->abs(p(a), m->act(p, x)));
            CHECK(m->act(p, m->apply("f", {x, y})) == m->apply("f", {m->act(p, x), m->act(p, y)}));
            CHECK(m->act(p, m->apply("f^C", {x, y})) == m->apply("f^C", {m->act(p, x), m->act(p, y)}));
            CHECK(m->act(p, m->apply("h", {x})) == m->apply("h", {m->act(p, x)}));
            CHECK(supp_of(*m, m->abs(a, x)).count(a) == 0);
        }
    }
}

TEST_CASE("property: words keep their letters distinct") {
    Gen g(62);
    for (int i = 0; i < 500; ++i) {
        Word w = std::get<Word>(interpret(words, closed(g, words), g.term()));
        CHECK(std::set<Atom>(w.begin(), w.end()).size() == w.size());
    }
}

TEST_CASE("property: interpretation is equivariant") {
    Gen g(63);
    for (const SigmaAlgebra* m : models()) {
        INFO(m->name());
        for (int i = 0; i < 300; ++i) {
            Valuation v = closed(g, *m);
            Term t = g.term();
            Perm p = g.perm();
            CHECK(m->act(p, interpret(*m, v, t)) == interpret(*m, v, act(p, t)));
        }
    }
}

TEST_CASE("property: permutations away from the support fix an element") {
    Gen g(64, GenConfig::standard(8));
    for (const SigmaAlgebra* m : models()) {
        int away = 0;
        for (int i = 0; i < 500; ++i) {
            Elem x = g.element(*m);
            Perm p = g.perm();
            AtomSet s = supp_of(*m, x);
            AtomSet d = p.domain();
            bool disjoint = std::none_of(s.begin(), s.end(), [&](const Atom& a) { return d.count(a); });
            if (!disjoint) continue;
            ++away;
            CHECK(fix_sem(*m, p, x));
        }
        CHECK(away > 50);
    }
}

TEST_CASE("strong models: fixing permutations determine a fixed domain") {
    std::vector<Atom> universe{at("a"), at("b"), at("c"), at("d")};
    std::vector<Perm> perms = all_perms(universe);
    auto check_model = [&](const SigmaAlgebra& m, const std::vector<Elem>& xs) {
        for (const auto& x : xs) {
            AtomSet covered;
            for (const auto& gamma : perms) {
                if (!fix_sem(m, gamma, x)) continue;
                AtomSet d = gamma.domain();
                covered.insert(d.begin(), d.end());
            }
            for (const auto& pi : perms) {
                AtomSet d = pi.domain();
                if (std::includes(covered.begin(), covered.end(), d.begin(), d.end())) {
                    CHECK(fix_sem(m, pi, x));
                }
            }
        }
    };
    std::vector<Elem> ws;
    for (const auto& w : all_words(universe)) ws.push_back(w);
    check_model(words, ws);

    GenConfig cfg = GenConfig::standard(4);
    Gen g(65, cfg);
    std::vector<Elem> gs;
    for (int i = 0; i < 150; ++i) gs.push_back(alpha.canon(g.ground_term(3)));
    check_model(alpha, gs);

    Elem b = E(pfin, "{a, b}");
    CHECK(fix_sem(pfin, sw("a", "b"), b));
    CHECK(fix_sem(pfin, sw("c", "d"), b));
    CHECK_FALSE(fix_sem(pfin, sw("a", "c"), b));
}

TEST_CASE("property: ground terms modulo alpha are strongly supported") {
    GenConfig cfg = GenConfig::standard(4);
    Gen g(66, cfg);
    AtomSet universe(cfg.atoms.begin(), cfg.atoms.end());
    GroundModel assoc(GroundTheory::alpha_a, {"f"});
    for (int i = 0; i < 200; ++i) {
        Term t = g.ground_term(3);
        CHECK(strong_support_check(alpha, alpha.canon(t), universe).strong);
        CHECK(strong_support_check(assoc, assoc.canon(t), universe).strong);
    }
}

TEST_CASE("property: associative canonical forms identify regroupings") {
    GroundModel assoc(GroundTheory::alpha_a, {"f"});
    Gen g(67);
    for (int i = 0; i < 300; ++i) {
        Term x = g.ground_term(2), y = g.ground_term(2), z = g.ground_term(2);
        CHECK(assoc.canon(Term::app("f", {Term::app("f", {x, y}), z})) ==
              assoc.canon(Term::app("f", {x, Term::app("f", {y, z})})));
    }
}

TEST_CASE("property: canonical forms decide alpha and alpha-C") {
    Gen g(68);
    sample::Sampler s(g);
    oracle::GroundAlpha core;
    oracle::GroundAlpha comm({"f^C", "+"});
    const EqTheory C = EqTheory::c(sig);
    int equal = 0;
    for (int i = 0; i < 1000; ++i) {
        Term t = g.ground_term(4);
        Term u = g.coin(0.8) ? s.variant({}, t) : g.ground_term(4);
        bool same_c = alpha_c.canon(u) == alpha_c.canon(t);
        CHECK(same_c == check_alpha({}, u, t, C).holds);
        CHECK(same_c == comm(u, t));
        CHECK((alpha.canon(u) == alpha.canon(t)) == core(u, t));
        CHECK(alpha_c.canon(alpha_c.canon(t)) == alpha_c.canon(t));
        equal += same_c;
    }
    CHECK(equal > 200);
}
