#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nomfix/error.hpp"
#include "nomfix/random.hpp"
#include "nomfix/show.hpp"
#include "nomfix/syntax.hpp"
#include "support/sample.hpp"

using namespace nomfix;

namespace {

const Signature sig = Signature::builtin();
Atom at(const char* n) { return Atom::user(n); }
Perm sw(const char* a, const char* b) { return Perm::swap(at(a), at(b)); }
Term T(const std::string& s) { return parse_term(s); }
const ParseOptions fresh_ok{true};

}  // namespace

TEST_CASE("terms") {
    CHECK(T("a") == Term::atom(at("a")));
    CHECK(T("X") == Term::var(Var{"X"}));
    CHECK(T("(a b).X") == Term::susp(sw("a", "b"), Var{"X"}));
    CHECK(T("(a b).[a]f(a, c)") == T("[b]f(b, c)"));
    CHECK(T("(a b)·X") == T("(a b).X"));
    CHECK(T("X + Y * Z") == Term::app("+", {T("X"), Term::app("*", {T("Y"), T("Z")})}));
    CHECK(T("(X + Y) * Z") == Term::app("*", {Term::app("+", {T("X"), T("Y")}), T("Z")}));
    CHECK(T("0") == Term::app("0", {}));
    CHECK(T("h(a')") == Term::app("h", {Term::atom(at("a'"))}));
}

TEST_CASE("permutations") {
    CHECK(parse_perm("id").is_identity());
    CHECK(parse_perm("(a b)(c d)") == compose(sw("a", "b"), sw("c", "d")));
    CHECK(show(parse_perm("(a b)(b c)")) == "(a b)(b c)");
    CHECK(parse_perm("(a %c1)", fresh_ok) == Perm::swap(at("a"), Atom::fresh("c1")));
    CHECK_THROWS_AS(parse_perm("(a %c1)"), ParseError);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(T("f(a"), ParseError);
    CHECK_THROWS_AS(T("f(a)"), Error);
    CHECK_THROWS_AS(T("[X]a"), ParseError);
    CHECK_THROWS_AS(T("a b"), ParseError);
    CHECK_THROWS_AS(T(""), ParseError);
    CHECK_FALSE(parse_judgement("a # X |-").body);
    CHECK_THROWS(to_fresh_judgement(parse_judgement("a # X |-")));
    CHECK_THROWS_AS(parse_judgement("|- a = "), ParseError);
    try {
        T("f(a, )");
        FAIL("accepted");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("parse error at") != std::string::npos);
    }
}

TEST_CASE("judgements") {
    ParsedJudgement p = parse_judgement("a # X, b # Y |- a # f(X, b)");
    CHECK(p.fresh_context.size() == 2);
    FreshJudgement f = to_fresh_judgement(p);
    CHECK(std::get<FreshBody>(f.body).atom == at("a"));

    FixJudgement x = to_fix_judgement(parse_judgement("(a b) fix X ⊢ (a b) ⋏ [c]X"));
    CHECK(x.context.size() == 1);
    CHECK(std::get<FixBody>(x.body).perm == sw("a", "b"));

    FixJudgement e = to_fix_judgement(parse_judgement("|- [a]a ~ [b]b"));
    CHECK(std::get<EqBody>(e.body).rhs == T("[b]b"));

    NuJudgement n = to_nu_judgement(parse_judgement("ν c1, c2. (a c1) fix X, (b c2) fix X |- (a b) fix X"));
    CHECK(n.nu == std::vector<Atom>{Atom::fresh("c1"), Atom::fresh("c2")});
    CHECK(n.context.constraints.size() == 2);

    CHECK_THROWS(to_fresh_judgement(parse_judgement("a # X, (a b) fix X |- a = a")));
    CHECK_THROWS(to_fix_judgement(parse_judgement("|- a # a")));
}

TEST_CASE("valuations") {
    PFinModel pfin;
    WordsModel words;
    GroundModel alpha = GroundModel::alpha();
    Valuation v = parse_valuation("X := {a, b}; Y := {}", pfin);
    CHECK(v.values.at(Var{"X"}) == Elem{AtomSet{at("a"), at("b")}});
    CHECK(v.values.at(Var{"Y"}) == Elem{AtomSet{}});
    CHECK(parse_element("a1a2", words) == Elem{Word{at("a1"), at("a2")}});
    CHECK(parse_element("ε", words) == Elem{Word{}});
    CHECK_THROWS(parse_element("aa", words));
    CHECK(parse_element("[a]a", alpha) == parse_element("[b]b", alpha));
    CHECK(parse_element("anything", SingletonModel{}) == Elem{Star{}});
    CHECK_THROWS(parse_valuation("X = {a}", pfin));
}

TEST_CASE("problem and candidate files") {
    Problem p = parse_problem("% example\nf^C(X, Y) =?= f^C(c, (a b).X) [C]\na #? [a]X\n");
    REQUIRE(p.equations.size() == 1);
    CHECK(p.equations[0].commutative);
    REQUIRE(p.fresh_goals.size() == 1);
    CHECK(p.fresh_goals[0].atom == at("a"));

    CandidateFile c = parse_candidate("kind fresh-triple\nbind Y := c\nresidual X = (a b).X\n");
    const auto& t = std::get<FreshTriple>(c.candidate);
    CHECK(t.sigma.at(Var{"Y"}) == T("c"));
    REQUIRE(t.residuals.size() == 1);
    CHECK(t.residuals[0].perm == sw("a", "b"));

    CandidateFile f = parse_candidate("kind fix-pair\ncontext (a b) fix X\nbind Y := c\ninstance X := f^C(a, b)\n");
    CHECK(std::get<FixPair>(f.candidate).context.size() == 1);
    CHECK(f.instance.at(Var{"X"}) == T("f^C(a, b)"));

    CHECK(std::holds_alternative<FreshPair>(parse_candidate("kind fresh-pair\ncontext a # X\n").candidate));

    try {
        parse_candidate("kind fix-pair\nbind X = a\n");
        FAIL("accepted");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS(parse_candidate("kind triple\n"));
}

TEST_CASE("property: printed terms parse back") {
    Gen g(81);
    for (int i = 0; i < 1000; ++i) {
        Term t = g.term();
        CHECK(T(show(t)) == t);
        Perm p = g.perm();
        CHECK(parse_perm(show(p)) == p);
    }
}

TEST_CASE("property: printed judgements parse back") {
    Gen g(82);
    sample::Sampler s(g);
    for (int i = 0; i < 500; ++i) {
        FixJudgement x = s.fix_judgement();
        FixJudgement x2 = to_fix_judgement(parse_judgement(show(x)));
        CHECK(x2.context == x.context);
        CHECK(show(x2) == show(x));

        FreshJudgement f = s.fresh_judgement();
        FreshJudgement f2 = to_fresh_judgement(parse_judgement(show(f)));
        CHECK(f2.context == f.context);
        CHECK(show(f2) == show(f));

        NuJudgement n = s.nu_judgement();
        AtomNames bare;
        for (const auto& c : n.nu) bare[c] = c.name();
        NuJudgement n2 = to_nu_judgement(parse_judgement(show(n, &bare)));
        CHECK(n2.nu == n.nu);
        CHECK(n2.context == n.context);
        CHECK(show(n2) == show(n));
    }
}
