#include "nomfix/syntax.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "nomfix/error.hpp"
#include "nomfix/show.hpp"

namespace nomfix {

namespace {

enum class Tok {
    ident,
    fresh,
    lparen,
    rparen,
    lbrack,
    rbrack,
    lbrace,
    rbrace,
    comma,
    dot,
    hash,
    turnstile,
    eq,
    fix,
    plus,
    star,
    compose,
    nu,
    end,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '^';
}

std::vector<Token> lex(const std::string& s) {
    static const std::vector<std::pair<std::string, Tok>> multi{
        {"|-", Tok::turnstile}, {"⊢", Tok::turnstile}, {"≈", Tok::eq},     {"⋏", Tok::fix},
        {"∘", Tok::compose}, {"ν", Tok::nu},      {"·", Tok::dot},
    };
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        bool matched = false;
        for (const auto& [text, kind] : multi) {
            if (s.compare(i, text.size(), text) == 0) {
                out.push_back({kind, text, i});
                i += text.size();
                matched = true;
                break;
            }
        }
        if (matched) continue;
        if (ident_char(c)) {
            std::size_t j = i;
            while (j < s.size() && ident_char(s[j])) ++j;
            out.push_back({Tok::ident, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (c == '%') {
            std::size_t j = i + 1;
            while (j < s.size() && ident_char(s[j])) ++j;
            if (j == i + 1) throw ParseError("expected a name after '%'", i);
            out.push_back({Tok::fresh, s.substr(i + 1, j - i - 1), i});
            i = j;
            continue;
        }
        Tok kind;
        switch (c) {
            case '(': kind = Tok::lparen; break;
            case ')': kind = Tok::rparen; break;
            case '[': kind = Tok::lbrack; break;
            case ']': kind = Tok::rbrack; break;
            case '{': kind = Tok::lbrace; break;
            case '}': kind = Tok::rbrace; break;
            case ',': kind = Tok::comma; break;
            case '.': kind = Tok::dot; break;
            case '#': kind = Tok::hash; break;
            case '=':
            case '~': kind = Tok::eq; break;
            case '+': kind = Tok::plus; break;
            case '*': kind = Tok::star; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({kind, std::string(1, c), i});
        ++i;
    }
    out.push_back({Tok::end, "", s.size()});
    return out;
}

bool is_keyword(const std::string& s) { return s == "fix" || s == "new" || s == "id"; }

class Parser {
  public:
    Parser(const std::string& text, const Signature& sig, ParseOptions opts)
        : toks_(lex(text)), sig_(sig), opts_(opts) {}

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
        return toks_[i];
    }
    bool at(Tok k, std::size_t ahead = 0) const { return peek(ahead).kind == k; }
    bool at_word(const std::string& w, std::size_t ahead = 0) const {
        return at(Tok::ident, ahead) && peek(ahead).text == w;
    }
    const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        throw ParseError(msg + (t.kind == Tok::end ? " at end of input" : " near '" + t.text + "'"), t.pos);
    }

    void expect(Tok k, const char* what) {
        if (!at(k)) fail(std::string("expected ") + what);
        next();
    }

    void expect_end() {
        if (!at(Tok::end)) fail("unexpected trailing input");
    }

    bool at_fix_keyword(std::size_t ahead = 0) const { return at(Tok::fix, ahead) || at_word("fix", ahead); }

    bool atom_token(std::size_t ahead = 0) const {
        const Token& t = peek(ahead);
        if (t.kind == Tok::fresh) return true;
        if (t.kind != Tok::ident) return false;
        if (!std::islower(static_cast<unsigned char>(t.text[0]))) return false;
        return !is_keyword(t.text) && !sig_.contains(t.text);
    }

    Atom atom() {
        if (!atom_token()) fail("expected an atom");
        const Token& t = next();
        if (t.kind == Tok::fresh) {
            if (!opts_.allow_fresh) throw ParseError("generated atom '%" + t.text + "' is not allowed here", t.pos);
            return Atom::fresh(t.text);
        }
        if (nu_.count(t.text)) return Atom::fresh(t.text);
        return Atom::user(t.text);
    }

    Var var() {
        const Token& t = peek();
        if (t.kind != Tok::ident || !std::isupper(static_cast<unsigned char>(t.text[0]))) fail("expected an unknown");
        next();
        return Var{t.text};
    }

    bool swap_start(std::size_t ahead = 0) const {
        return at(Tok::lparen, ahead) && atom_token(ahead + 1) && atom_token(ahead + 2) && at(Tok::rparen, ahead + 3);
    }

    bool perm_start(std::size_t ahead = 0) const { return at_word("id", ahead) || swap_start(ahead); }

    // Number of tokens a permutation starting here spans.
    std::size_t perm_length() const {
        if (at_word("id")) return 1;
        std::size_t n = 0;
        while (true) {
            if (swap_start(n)) {
                n += 4;
            } else if (at(Tok::compose, n) && swap_start(n + 1)) {
                n += 5;
            } else {
                return n;
            }
        }
    }

    Perm perm() {
        if (at_word("id")) {
            next();
            return Perm{};
        }
        if (!swap_start()) fail("expected a permutation");
        std::vector<Perm::Swap> swaps;
        while (swap_start() || (at(Tok::compose) && swap_start(1))) {
            if (at(Tok::compose)) next();
            next();
            Atom a = atom();
            Atom b = atom();
            next();
            swaps.emplace_back(a, b);
        }
        return Perm::from_swaps(std::move(swaps));
    }

    Term term() {
        Term lhs = product();
        while (at(Tok::plus)) {
            std::size_t p = peek().pos;
            next();
            Term rhs = product();
            lhs = application("+", {lhs, rhs}, p);
        }
        return lhs;
    }

    Term product() {
        Term lhs = primary();
        while (at(Tok::star)) {
            std::size_t p = peek().pos;
            next();
            Term rhs = primary();
            lhs = application("*", {lhs, rhs}, p);
        }
        return lhs;
    }

    Term application(const std::string& f, std::vector<Term> args, std::size_t p) {
        auto arity = sig_.arity(f);
        if (!arity) throw ParseError("unknown symbol '" + f + "'", p);
        if (*arity != args.size()) {
            throw ParseError("'" + f + "' expects " + std::to_string(*arity) + " arguments, got " +
                                 std::to_string(args.size()),
                             p);
        }
        return Term::app(f, std::move(args));
    }

    Term primary() {
        if (at(Tok::lbrack)) {
            next();
            Atom a = atom();
            expect(Tok::rbrack, "']'");
            return Term::abs(a, primary());
        }
        if (perm_start()) {
            Perm pi = perm();
            expect(Tok::dot, "'.' after a permutation");
            return act(pi, primary());
        }
        if (at(Tok::lparen)) {
            next();
            Term t = term();
            expect(Tok::rparen, "')'");
            return t;
        }
        const Token& t = peek();
        if (t.kind == Tok::fresh || atom_token()) return Term::atom(atom());
        if (t.kind != Tok::ident) fail("expected a term");
        if (std::isupper(static_cast<unsigned char>(t.text[0]))) return Term::var(var());
        if (is_keyword(t.text)) fail("unexpected keyword");
        next();
        std::vector<Term> args;
        if (at(Tok::lparen)) {
            next();
            args.push_back(term());
            while (at(Tok::comma)) {
                next();
                args.push_back(term());
            }
            expect(Tok::rparen, "')'");
        }
        return application(t.text, std::move(args), t.pos);
    }

    std::vector<Atom> binder_list() {
        std::vector<Atom> out;
        next();
        while (!at(Tok::dot)) {
            if (at(Tok::comma)) {
                next();
                continue;
            }
            const Token& t = peek();
            if (t.kind != Tok::ident || !std::islower(static_cast<unsigned char>(t.text[0])) || is_keyword(t.text) ||
                sig_.contains(t.text)) {
                fail("expected a new name");
            }
            next();
            if (!nu_.insert(t.text).second) throw ParseError("name '" + t.text + "' bound twice", t.pos);
            out.push_back(Atom::fresh(t.text));
        }
        next();
        return out;
    }

    ParsedJudgement judgement() {
        ParsedJudgement out;
        if (at_word("new") || at(Tok::nu)) out.nu = binder_list();
        bool has_turnstile = false;
        for (std::size_t i = pos_; i < toks_.size(); ++i) {
            if (toks_[i].kind == Tok::turnstile) has_turnstile = true;
        }
        while (!at(Tok::turnstile) && !at(Tok::end)) {
            constraint(out);
            if (at(Tok::comma)) {
                next();
            } else if (!at(Tok::turnstile) && !at(Tok::end)) {
                fail("expected ',' or '|-'");
            }
        }
        if (has_turnstile) {
            expect(Tok::turnstile, "'|-'");
            if (!at(Tok::end)) out.body = body();
        }
        expect_end();
        return out;
    }

    void constraint(ParsedJudgement& out) {
        if (atom_token() && at(Tok::hash, 1)) {
            Atom a = atom();
            next();
            out.fresh_context.insert({a, var()});
            return;
        }
        if (perm_start()) {
            Perm pi = perm();
            if (!at_fix_keyword()) fail("expected 'fix'");
            next();
            out.fix_context.insert({pi, var()});
            return;
        }
        fail("expected a constraint 'a # X' or '(a b) fix X'");
    }

    std::variant<FreshBody, FixBody, EqBody> body() {
        if (atom_token() && at(Tok::hash, 1)) {
            Atom a = atom();
            next();
            return FreshBody{a, term()};
        }
        if (perm_start() && at_fix_keyword(perm_length())) {
            Perm pi = perm();
            next();
            return FixBody{pi, term()};
        }
        Term lhs = term();
        expect(Tok::eq, "'=', '~' or '≈'");
        return EqBody{lhs, term()};
    }

    AtomSet atom_set() {
        expect(Tok::lbrace, "'{'");
        AtomSet out;
        while (!at(Tok::rbrace)) {
            out.insert(atom());
            if (at(Tok::comma)) next();
            else if (!at(Tok::rbrace)) fail("expected ',' or '}'");
        }
        next();
        return out;
    }

  private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const Signature& sig_;
    ParseOptions opts_;
    std::set<std::string> nu_;
};

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto c = line.find('%');
        if (c != std::string::npos) line = line.substr(0, c);
        out.push_back(trim(line));
    }
    return out;
}

[[noreturn]] void line_error(std::size_t line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg, 0);
}

template <class F>
auto on_line(std::size_t line, F&& f) {
    try {
        return f();
    } catch (const ParseError& e) {
        line_error(line, e.what());
    }
}

// "X := t"
std::pair<Var, std::string> binding(const std::string& text) {
    auto p = text.find(":=");
    if (p == std::string::npos) throw ParseError("expected 'X := value'", 0);
    std::string name = trim(text.substr(0, p));
    if (name.empty() || !std::isupper(static_cast<unsigned char>(name[0]))) {
        throw ParseError("expected an unknown before ':='", 0);
    }
    for (char c : name) {
        if (!ident_char(c)) throw ParseError("bad unknown name '" + name + "'", 0);
    }
    return {Var{name}, trim(text.substr(p + 2))};
}

}  // namespace

Term parse_term(const std::string& text, const Signature& sig, ParseOptions opts) {
    Parser p(text, sig, opts);
    Term t = p.term();
    p.expect_end();
    return t;
}

Perm parse_perm(const std::string& text, ParseOptions opts) {
    Signature none;
    Parser p(text, none, opts);
    Perm pi = p.perm();
    p.expect_end();
    return pi;
}

ParsedJudgement parse_judgement(const std::string& text, const Signature& sig, ParseOptions opts) {
    Parser p(text, sig, opts);
    return p.judgement();
}

FreshJudgement to_fresh_judgement(const ParsedJudgement& p) {
    if (!p.nu.empty()) throw Error("freshness judgements do not bind new names");
    if (!p.fix_context.empty()) throw Error("freshness judgements take a # X constraints only");
    if (!p.body) throw Error("missing conclusion");
    FreshJudgement out{p.fresh_context, EqBody{}};
    if (const auto* f = std::get_if<FreshBody>(&*p.body)) {
        out.body = *f;
    } else if (const auto* e = std::get_if<EqBody>(&*p.body)) {
        out.body = *e;
    } else {
        throw Error("freshness judgements conclude a # t or s ~ t");
    }
    return out;
}

FixJudgement to_fix_judgement(const ParsedJudgement& p) {
    if (!p.nu.empty()) throw Error("use the strong system for judgements with 'new'");
    if (!p.fresh_context.empty()) throw Error("fixed-point judgements take (a b) fix X constraints only");
    if (!p.body) throw Error("missing conclusion");
    FixJudgement out{p.fix_context, EqBody{}};
    if (const auto* f = std::get_if<FixBody>(&*p.body)) {
        out.body = *f;
    } else if (const auto* e = std::get_if<EqBody>(&*p.body)) {
        out.body = *e;
    } else {
        throw Error("fixed-point judgements conclude pi fix t or s = t");
    }
    return out;
}

NuJudgement to_nu_judgement(const ParsedJudgement& p) {
    if (!p.fresh_context.empty()) throw Error("strong judgements take (a c) fix X constraints only");
    if (!p.body) throw Error("missing conclusion");
    FixJudgement j{p.fix_context, EqBody{}};
    if (const auto* f = std::get_if<FixBody>(&*p.body)) {
        j.body = *f;
    } else if (const auto* e = std::get_if<EqBody>(&*p.body)) {
        j.body = *e;
    } else {
        throw Error("strong judgements conclude pi fix t or s ~ t");
    }
    return strong_judgement(p.nu, j);
}

Elem parse_element(const std::string& text, const SigmaAlgebra& m, const Signature& sig) {
    std::string name = m.name();
    if (name == "singleton") return Star{};
    if (name == "pfin") {
        Parser p(text, sig, {});
        AtomSet s = p.atom_set();
        p.expect_end();
        return s;
    }
    if (name == "words") {
        Word w;
        AtomSet seen;
        std::string body = trim(text);
        if (body == "ε") return w;
        std::size_t i = 0;
        while (i < body.size()) {
            if (std::isspace(static_cast<unsigned char>(body[i]))) {
                ++i;
                continue;
            }
            if (!std::islower(static_cast<unsigned char>(body[i]))) throw ParseError("expected a letter", i);
            std::size_t j = i + 1;
            while (j < body.size() && (std::isdigit(static_cast<unsigned char>(body[j])) || body[j] == '\'')) ++j;
            Atom a = Atom::user(body.substr(i, j - i));
            if (!seen.insert(a).second) throw ParseError("letter '" + a.name() + "' repeats", i);
            w.push_back(a);
            i = j;
        }
        return w;
    }
    const auto* g = dynamic_cast<const GroundModel*>(&m);
    if (!g) throw Error("no element syntax for model " + name);
    Term t = parse_term(text, sig);
    if (!is_ground(t)) throw GroundnessError("value " + show(t) + " mentions unknowns");
    return g->canon(t);
}

Valuation parse_valuation(const std::string& text, const SigmaAlgebra& m, const Signature& sig) {
    Valuation v;
    std::istringstream in(text);
    std::string piece;
    while (std::getline(in, piece, ';')) {
        if (trim(piece).empty()) continue;
        auto [x, value] = binding(piece);
        v.values[x] = parse_element(value, m, sig);
    }
    return v;
}

Problem parse_problem(const std::string& text, const Signature& sig) {
    Problem out;
    auto lines = lines_of(text);
    for (std::size_t n = 0; n < lines.size(); ++n) {
        const std::string& line = lines[n];
        if (line.empty()) continue;
        on_line(n + 1, [&] {
            if (auto p = line.find("=?="); p != std::string::npos) {
                std::string rhs = trim(line.substr(p + 3));
                bool c = rhs.size() >= 3 && rhs.compare(rhs.size() - 3, 3, "[C]") == 0;
                if (c) rhs = trim(rhs.substr(0, rhs.size() - 3));
                out.equations.push_back({parse_term(line.substr(0, p), sig), parse_term(rhs, sig), c});
            } else if (auto q = line.find("#?"); q != std::string::npos) {
                Term a = parse_term(line.substr(0, q), sig);
                if (!a.is_atom()) throw ParseError("expected an atom before '#?'", 0);
                out.fresh_goals.push_back({a.atom_value(), parse_term(line.substr(q + 2), sig)});
            } else {
                throw ParseError("expected 's =?= t' or 'a #? t'", 0);
            }
            return 0;
        });
    }
    return out;
}

CandidateFile parse_candidate(const std::string& text, const Signature& sig) {
    std::string kind;
    FreshContext delta;
    FixContext upsilon;
    Subst sigma;
    Subst instance;
    std::vector<FixEquation> residuals;
    auto lines = lines_of(text);
    for (std::size_t n = 0; n < lines.size(); ++n) {
        const std::string& line = lines[n];
        if (line.empty()) continue;
        on_line(n + 1, [&] {
            auto sp = line.find_first_of(" \t");
            std::string head = line.substr(0, sp);
            std::string rest = sp == std::string::npos ? "" : trim(line.substr(sp));
            if (head == "kind") {
                kind = rest;
            } else if (head == "context") {
                ParsedJudgement p = parse_judgement(rest, sig);
                if (p.body || !p.nu.empty()) throw ParseError("a context line holds constraints only", 0);
                delta.insert(p.fresh_context.begin(), p.fresh_context.end());
                upsilon.insert(p.fix_context.begin(), p.fix_context.end());
            } else if (head == "bind" || head == "instance") {
                auto [x, value] = binding(rest);
                (head == "bind" ? sigma : instance)[x] = parse_term(value, sig);
            } else if (head == "residual") {
                auto eq = rest.find_first_of("=~");
                if (eq == std::string::npos) throw ParseError("expected 'X = pi.X'", 0);
                Term lhs = parse_term(rest.substr(0, eq), sig);
                Term rhs = parse_term(rest.substr(eq + 1), sig);
                if (!lhs.is_susp() || !lhs.perm().is_identity() || !rhs.is_susp() ||
                    rhs.var_value() != lhs.var_value()) {
                    throw ParseError("a residual has the form X = pi.X", 0);
                }
                residuals.push_back({lhs.var_value(), rhs.perm()});
            } else {
                throw ParseError("unknown line kind '" + head + "'", 0);
            }
            return 0;
        });
    }
    CandidateFile out{FreshPair{}, instance};
    if (kind == "fresh-pair" || kind == "fresh-triple") {
        if (!upsilon.empty()) throw Error(kind + " candidates take freshness constraints only");
        if (kind == "fresh-pair") {
            if (!residuals.empty()) throw Error("fresh-pair candidates have no residuals");
            out.candidate = FreshPair{delta, sigma};
        } else {
            out.candidate = FreshTriple{delta, sigma, residuals};
        }
    } else if (kind == "fix-pair") {
        if (!delta.empty()) throw Error("fix-pair candidates take fixed-point constraints only");
        if (!residuals.empty()) throw Error("fix-pair candidates have no residuals");
        out.candidate = FixPair{upsilon, sigma};
    } else {
        throw Error("candidate needs 'kind fresh-pair', 'kind fresh-triple' or 'kind fix-pair'");
    }
    return out;
}

}  // namespace nomfix
