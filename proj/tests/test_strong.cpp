#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nomfix/error.hpp"
#include "nomfix/random.hpp"
#include "nomfix/strong.hpp"
#include "nomfix/syntax.hpp"
#include "support/sample.hpp"

using namespace nomfix;

namespace {

Atom at(const char* n) { return Atom::user(n); }
Atom nu(const char* n) { return Atom::fresh(n); }
Term T(const std::string& s) { return parse_term(s); }
NuJudgement J(const std::string& s) { return to_nu_judgement(parse_judgement(s)); }

FreshContext fctx(std::initializer_list<std::pair<const char*, const char*>> ks) {
    FreshContext out;
    for (auto [a, x] : ks) out.insert({at(a), Var{x}});
    return out;
}

}  // namespace

TEST_CASE("strong fixed points") {
    CHECK(check(J("new c1, c2. (a c1) fix X, (b c2) fix X |- (a b) fix X")).holds);
    CHECK(check(J("new c. |- id fix f([a]X, b)")).holds);
    CHECK_FALSE(check(J("new c1. (a c1) fix X |- (a b) fix X")).holds);
    CHECK(check(J("new c1, c2. (a c1) fix X |- (a c2) fix [b](b c).X")).holds);
    CHECK_FALSE(check(J("new c1, c2. (a c1) fix X |- (b c2) fix X")).holds);
}

TEST_CASE("strong equality") {
    CHECK(check(J("|- [a]a = [b]b")).holds);
    CHECK(check(J("new c1, c2. (a c1) fix X, (b c2) fix X |- (a b).X = X")).holds);
    CHECK_FALSE(check(J("|- a = b")).holds);
    CHECK_FALSE(check(J("new c1. (a c1) fix X |- (a b).X = X")).holds);
    CHECK(check(J("|- f^C(a, b) = f^C(b, a)"), EqTheory::c(Signature::builtin())).holds);
}

TEST_CASE("strong contexts are validated") {
    CHECK_THROWS_AS(J("new c1. (a b) fix X |- a = a"), ShapeError);
    CHECK_THROWS_AS(J("new c1. (a c1)(a b) fix X |- a = a"), ShapeError);
    StrongContext bad{{nu("c")}, {{nu("c"), nu("c"), Var{"X"}}}};
    CHECK_THROWS_AS(bad.validate(), ShapeError);
    StrongContext loose{{}, {{at("a"), nu("c"), Var{"X"}}}};
    CHECK_THROWS_AS(loose.validate(), ShapeError);
}

TEST_CASE("context translations") {
    StrongContext one = translate_fresh_to_fix(fctx({{"a", "X"}}));
    REQUIRE(one.nu.size() == 1);
    REQUIRE(one.constraints.size() == 1);
    CHECK(one.constraints.begin()->atom == at("a"));
    CHECK(one.constraints.begin()->nu == one.nu[0]);
    CHECK(one.nu[0].is_fresh());

    CHECK(translate_fresh_to_fix(FreshContext{}) == StrongContext{});

    StrongContext two = translate_fresh_to_fix(fctx({{"a", "X"}, {"a", "Y"}}));
    CHECK(two.nu.size() == 2);
    CHECK(two.nu[0] != two.nu[1]);

    StrongContext pair{{nu("c1"), nu("c2")},
                       {{at("a"), nu("c1"), Var{"X"}}, {at("b"), nu("c2"), Var{"X"}}}};
    CHECK(translate_fix_to_fresh(pair) == fctx({{"a", "X"}, {"b", "X"}}));
}

TEST_CASE("fixed points of old atoms do not translate to freshness") {
    NuJudgement j = J("new c1, c2. (a c1) fix X, (b c2) fix X |- (a b) fix X");
    CHECK(check(j).holds);
    CHECK_THROWS_AS(translate_fix_to_fresh(j), ShapeError);
    NuJudgement e = J("new c1, c2. (a c1) fix X, (b c2) fix X |- (a b).X = X");
    CHECK(check(e).holds);
    FreshJudgement f = translate_fix_to_fresh(e);
    CHECK(check(f).holds);

    CHECK_THROWS_AS(translate_fix_to_fresh(J("new c1. (a c1) fix X |- (a c1) fix X")), ShapeError);
}

TEST_CASE("judgement translations") {
    FreshJudgement f{fctx({{"a", "X"}}), FreshBody{at("a"), T("f(X, [b]a)")}};
    NuJudgement n = translate_fresh_to_fix(f);
    CHECK(n.nu.size() == 2);
    const auto& body = std::get<FixBody>(n.body);
    CHECK(body.perm == Perm::swap(at("a"), n.nu.back()));
    CHECK_FALSE(check(f).holds);
    CHECK_FALSE(check(n).holds);

    FreshJudgement back = translate_fix_to_fresh(J("new c1, c2. (a c1) fix X |- (b c2) fix f(X, a)"));
    CHECK(back.context == fctx({{"a", "X"}}));
    CHECK(std::get<FreshBody>(back.body).atom == at("b"));
}

TEST_CASE("property: a strong fixed point is an equality with its image") {
    Gen g(51);
    sample::Sampler s(g);
    int fixes = 0, holds = 0;
    for (int i = 0; i < 1000; ++i) {
        NuJudgement j = s.nu_judgement();
        const auto* f = std::get_if<FixBody>(&j.body);
        if (!f) continue;
        ++fixes;
        NuJudgement e = j;
        e.body = EqBody{act(f->perm, f->term), f->term};
        bool got = check_fix_strong(j).holds;
        CHECK(got == check_alpha_strong(e).holds);
        holds += got;
    }
    CHECK(fixes > 300);
    CHECK(holds > 50);
    CHECK(holds < fixes);
}

TEST_CASE("property: freshness judgements keep their verdicts under translation") {
    Gen g(52);
    sample::Sampler s(g);
    for (int i = 0; i < 1000; ++i) {
        FreshJudgement f = s.fresh_judgement();
        NuJudgement n = translate_fresh_to_fix(f);
        CHECK(check(f).holds == check(n).holds);
        CHECK(translate_fix_to_fresh(n.context) == f.context);
    }
}

TEST_CASE("property: strong judgements keep their verdicts under translation") {
    Gen g(53);
    sample::Sampler s(g);
    int shaped = 0;
    for (int i = 0; i < 1000; ++i) {
        NuJudgement j = s.nu_judgement();
        if (std::holds_alternative<EqBody>(j.body)) {
            CHECK(check(j).holds == check(translate_fix_to_fresh(j)).holds);
        }
        if (auto k = s.fresh_shaped(j)) {
            ++shaped;
            CHECK(check(*k).holds == check(translate_fix_to_fresh(*k)).holds);
        }
    }
    CHECK(shaped > 200);
}

TEST_CASE("property: fixed-point equality agrees with freshness on strong contexts") {
    Gen g(54);
    sample::Sampler s(g);
    for (int i = 0; i < 1000; ++i) {
        NuJudgement j = s.nu_judgement();
        const auto* e = std::get_if<EqBody>(&j.body);
        if (!e) continue;
        FreshJudgement f = translate_fix_to_fresh(j);
        const auto& fe = std::get<EqBody>(f.body);
        CHECK(check_eq_fix(j.context.as_fix_context(), e->lhs, e->rhs, VarRuleMode::subset_dom).holds ==
              check_alpha(f.context, fe.lhs, fe.rhs).holds);
    }
}

TEST_CASE("property: verdicts are invariant under renaming of new atoms") {
    Gen g(55);
    sample::Sampler s(g);
    const EqTheory C = EqTheory::c(Signature::builtin());
    for (int i = 0; i < 1000; ++i) {
        NuJudgement j = s.nu_judgement();
        if (auto k = s.fresh_shaped(j); k && g.coin()) j = *k;
        std::map<Atom, Atom> renaming;
        for (std::size_t n = 0; n < j.nu.size(); ++n) renaming[j.nu[n]] = Atom::fresh("r" + std::to_string(n));
        NuJudgement r = rename_nu(j, renaming);
        CHECK(r.nu.size() == j.nu.size());
        CHECK(check(j).holds == check(r).holds);
        CHECK(check(j, C).holds == check(r, C).holds);
    }
}
