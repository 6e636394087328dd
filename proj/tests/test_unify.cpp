#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nomfix/fresh.hpp"
#include "nomfix/permgroups.hpp"
#include "nomfix/random.hpp"
#include "nomfix/syntax.hpp"
#include "nomfix/unify.hpp"
#include "support/oracles.hpp"
#include "support/sample.hpp"

using namespace nomfix;

namespace {

const Signature sig = Signature::builtin();
const EqTheory C = EqTheory::c(sig);
const Var X{"X"};
const Var Y{"Y"};

Atom at(const char* n) { return Atom::user(n); }
Perm sw(const char* a, const char* b) { return Perm::swap(at(a), at(b)); }
Term T(const std::string& s) { return parse_term(s); }

// f^C(X, Y) =?=_C f^C(c, (a b).X)
Problem commutative_problem() { return {{{T("f^C(X, Y)"), T("f^C(c, (a b).X)"), true}}, {}}; }

}  // namespace

TEST_CASE("problems") {
    Problem p = commutative_problem();
    CHECK(p.vars() == VarSet{X, Y});
    CHECK(p.uses_commutativity());
    CHECK_FALSE(Problem{{{T("X"), T("a"), false}}, {}}.uses_commutativity());
}

TEST_CASE("solutions as freshness pairs") {
    Problem p = commutative_problem();
    Validation v = validate(p, FreshPair{{}, {{X, T("c")}, {Y, T("c")}}});
    CHECK(v.status == ValidationStatus::valid);
    CHECK_FALSE(v.results.empty());

    Validation w = validate(p, FreshPair{{}, {{X, T("a")}, {Y, T("c")}}});
    CHECK(w.status == ValidationStatus::invalid);

    Problem fresh{{}, {{at("a"), T("f(X, b)")}}};
    CHECK(validate(fresh, FreshPair{{{at("a"), X}}, {}}).accepted());
    CHECK_FALSE(validate(fresh, FreshPair{{}, {{X, T("a")}}}).accepted());
    CHECK(validate(fresh, FreshPair{{}, {{X, T("[a]a")}}}).accepted());
}

TEST_CASE("solutions must be idempotent") {
    Problem p{{{T("X"), T("X"), false}}, {}};
    Validation v = validate(p, FreshPair{{}, {{X, T("h(X)")}}});
    CHECK_FALSE(v.accepted());
    bool flagged = false;
    for (const auto& r : v.results) flagged |= r.kind == "idempotency" && !r.holds;
    CHECK(flagged);
    CHECK(validate(p, FreshPair{{}, {{X, T("h(Y)")}}}).accepted());
}

TEST_CASE("solutions with deferred fixed-point equations") {
    Problem p = commutative_problem();
    FreshTriple t{{}, {{Y, T("c")}}, {{X, sw("a", "b")}}};
    Validation v = validate(p, t);
    CHECK(v.status == ValidationStatus::valid_with_residual);
    bool residual = false;
    for (const auto& r : v.results) residual |= r.residual;
    CHECK(residual);

    FreshTriple none{{}, {{Y, T("c")}}, {}};
    CHECK(validate(p, none).status == ValidationStatus::invalid);
    FreshTriple other{{}, {{Y, T("c")}}, {{X, sw("a", "d")}}};
    CHECK(validate(p, other).status == ValidationStatus::invalid);
}

TEST_CASE("solutions as fixed-point pairs") {
    Problem p = commutative_problem();
    FixPair f{{{sw("a", "b"), X}}, {{Y, T("c")}}};
    CHECK(validate(p, f).status == ValidationStatus::valid);
    CHECK_FALSE(validate(p, FixPair{{}, {{Y, T("c")}}}).accepted());

    CHECK(instantiate_and_check(f, {{X, T("f^C(a, b)")}}, p).status == ValidationStatus::valid);
    CHECK(instantiate_and_check(f, {{X, T("f^C(f^C(a, b), f^C(a, b))")}}, p).status == ValidationStatus::valid);
    Validation bad = instantiate_and_check(f, {{X, T("a")}}, p);
    CHECK(bad.status == ValidationStatus::invalid);
    bool instance = false;
    for (const auto& r : bad.results) instance |= r.kind == "instance" && !r.holds;
    CHECK(instance);
}

TEST_CASE("substitution composition") {
    Subst s{{X, T("f(Y, a)")}};
    Subst d{{Y, T("b")}, {X, T("c")}};
    Subst sd = compose_subst(s, d);
    CHECK(sd.at(X) == T("f(b, a)"));
    CHECK(sd.at(Y) == T("b"));
}

TEST_CASE("property: instances of validated fixed-point pairs stay valid") {
    Gen g(71);
    sample::Sampler s(g);
    int validated = 0, instances = 0;
    for (int i = 0; i < 400; ++i) {
        FixContext ctx = g.fix_context(2);
        Term t = s.term();
        Problem p{{{s.variant(ctx, t), t, g.coin()}}, {}};
        FixPair cand{ctx, {}};
        if (!validate(p, cand).accepted()) continue;
        ++validated;
        for (int k = 0; k < 10; ++k) {
            Subst delta;
            for (const auto& x : g.config().vars) delta[x] = g.ground_term(2);
            bool fixed = true;
            for (const auto& c : ctx) {
                const Term& gx = delta.at(c.var);
                fixed &= check_alpha({}, act(c.perm, gx), gx, C).holds;
            }
            Validation v = instantiate_and_check(cand, delta, p);
            if (!fixed) {
                CHECK_FALSE(v.accepted());
                continue;
            }
            ++instances;
            CHECK(v.status == ValidationStatus::valid);
        }
    }
    CHECK(validated > 200);
    CHECK(instances > 300);
}

TEST_CASE("property: equal suspensions make the disagreement fresh, without commutativity") {
    Gen g(72);
    int equal = 0;
    for (int i = 0; i < 2000; ++i) {
        Term x = g.ground_term(3);
        Perm p = g.perm();
        Perm q = g.perm();
        if (!check_alpha({}, act(p, x), act(q, x)).holds) continue;
        ++equal;
        auto fn = oracle::free_atoms(x);
        for (const auto& a : ds(p, q)) CHECK(fn.count(a) == 0);
    }
    CHECK(equal > 300);
}

TEST_CASE("commutativity loses the disagreement-set simplification") {
    Term x = T("f^C(a, b)");
    Perm p = sw("a", "b");
    CHECK(check_alpha({}, act(p, x), x, C).holds);
    CHECK_FALSE(check_fresh({}, at("a"), x).holds);
    CHECK(ds(p, Perm{}) == AtomSet{at("a"), at("b")});
}
