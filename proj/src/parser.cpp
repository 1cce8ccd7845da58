#include "coact/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace coact {

parse_error::parse_error(SourceLoc loc, const std::string& msg)
    : std::runtime_error("line " + std::to_string(loc.line) + ", col " + std::to_string(loc.col) + ": " + msg),
      loc_(loc) {}

namespace {

enum class Tok {
    Word, LBrace, RBrace, Semi, Colon, Eq, Star, Plus, Minus, Caret, Slash, Comma, LBrack, RBrack,
    Arrow, Tensor, End
};

struct Token {
    Tok kind;
    std::string text;
    SourceLoc loc;
};

bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    SourceLoc loc;
    std::size_t i = 0;
    auto bump = [&](char c) {
        if (c == '\n') {
            ++loc.line;
            loc.col = 1;
        } else {
            ++loc.col;
        }
    };
    while (i < text.size()) {
        char c = text[i];
        SourceLoc here = loc;
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') bump(text[i++]);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            bump(c);
            ++i;
            continue;
        }
        if (word_char(c)) {
            std::string w;
            while (i < text.size() && word_char(text[i])) {
                w += text[i];
                bump(text[i++]);
            }
            out.push_back({Tok::Word, std::move(w), here});
            continue;
        }
        auto push1 = [&](Tok k) {
            out.push_back({k, std::string(1, c), here});
            bump(c);
            ++i;
        };
        switch (c) {
            case '{': push1(Tok::LBrace); break;
            case '}': push1(Tok::RBrace); break;
            case ';': push1(Tok::Semi); break;
            case ':': push1(Tok::Colon); break;
            case '=': push1(Tok::Eq); break;
            case '*': push1(Tok::Star); break;
            case '+': push1(Tok::Plus); break;
            case '^': push1(Tok::Caret); break;
            case '/': push1(Tok::Slash); break;
            case ',': push1(Tok::Comma); break;
            case '[': push1(Tok::LBrack); break;
            case ']': push1(Tok::RBrack); break;
            case '-':
                if (i + 1 < text.size() && text[i + 1] == '>') {
                    out.push_back({Tok::Arrow, "->", here});
                    bump(c);
                    bump('>');
                    i += 2;
                } else {
                    push1(Tok::Minus);
                }
                break;
            case '(':
                if (i + 2 < text.size() && text[i + 1] == 'x' && text[i + 2] == ')') {
                    out.push_back({Tok::Tensor, "(x)", here});
                    bump('(');
                    bump('x');
                    bump(')');
                    i += 3;
                } else {
                    throw parse_error(here, "unexpected '('; only the tensor symbol (x) uses parentheses");
                }
                break;
            default:
                throw parse_error(here, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Tok::End, "", loc});
    return out;
}

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

enum class Kind { Algebra, Coalgebra, Bialgebra, Skew, Coaction, Action, Module, HopfModule, Localize, Entwining, EntwinedModule, Probe };

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::Algebra: return "algebra";
        case Kind::Coalgebra: return "coalgebra";
        case Kind::Bialgebra: return "bialgebra";
        case Kind::Skew: return "skew";
        case Kind::Coaction: return "coaction";
        case Kind::Action: return "action";
        case Kind::Module: return "module";
        case Kind::HopfModule: return "hopfmodule";
        case Kind::Localize: return "localize";
        case Kind::Entwining: return "entwining";
        case Kind::EntwinedModule: return "entwined";
        case Kind::Probe: return "probe";
    }
    return "?";
}

struct Parser {
    std::vector<Token> toks;
    std::size_t pos = 0;
    PresentationBundle bundle;
    std::map<std::string, std::pair<Kind, std::size_t>> symbols; // name -> (kind, decl index)
    bool field_seen = false;

    const Token& peek(std::size_t ahead = 0) const { return toks[std::min(pos + ahead, toks.size() - 1)]; }
    Token next() { return toks[pos == toks.size() - 1 ? pos : pos++]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        next();
        return true;
    }
    Token expect(Tok k, const std::string& what) {
        if (peek().kind != k) throw parse_error(peek().loc, "expected " + what + ", found '" + peek().text + "'");
        return next();
    }
    std::string expect_word(const std::string& what) { return expect(Tok::Word, what).text; }

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(peek().loc, msg); }

    // -- symbol helpers -------------------------------------------------------

    const Declaration& resolve(const std::string& name, SourceLoc at) const {
        auto it = symbols.find(name);
        if (it == symbols.end()) throw parse_error(at, "unresolved reference '" + name + "'");
        return bundle.decls[it->second.second];
    }
    Kind kind_of(const std::string& name, SourceLoc at) const {
        auto it = symbols.find(name);
        if (it == symbols.end()) throw parse_error(at, "unresolved reference '" + name + "'");
        return it->second.first;
    }

    /// Basis of a findim algebra (algebra or bialgebra).
    const std::vector<std::string>& algebra_basis(const std::string& name, SourceLoc at) const {
        const Declaration& d = resolve(name, at);
        if (const auto* a = std::get_if<AlgebraDecl>(&d.body)) return a->basis;
        if (const auto* b = std::get_if<BialgebraDecl>(&d.body)) return b->alg.basis;
        throw parse_error(at, "'" + name + "' is not an algebra");
    }
    const std::vector<std::string>& coalgebra_basis(const std::string& name, SourceLoc at) const {
        const Declaration& d = resolve(name, at);
        if (const auto* c = std::get_if<CoalgebraDecl>(&d.body)) return c->basis;
        if (const auto* b = std::get_if<BialgebraDecl>(&d.body)) return b->co.basis;
        throw parse_error(at, "'" + name + "' is not a coalgebra");
    }
    const std::vector<std::string>& bialgebra_basis(const std::string& name, SourceLoc at) const {
        const Declaration& d = resolve(name, at);
        if (const auto* b = std::get_if<BialgebraDecl>(&d.body)) return b->alg.basis;
        throw parse_error(at, "'" + name + "' is not a bialgebra");
    }
    const SkewDecl& skew_decl(const std::string& name, SourceLoc at) const {
        const Declaration& d = resolve(name, at);
        if (const auto* s = std::get_if<SkewDecl>(&d.body)) return *s;
        throw parse_error(at, "'" + name + "' is not a skew algebra");
    }
    bool is_skew(const std::string& name, SourceLoc at) const { return kind_of(name, at) == Kind::Skew; }

    std::size_t module_dim(const std::string& name, SourceLoc at) const {
        const Declaration& d = resolve(name, at);
        if (const auto* m = std::get_if<ModuleDecl>(&d.body)) return m->basis.size();
        throw parse_error(at, "'" + name + "' is not a module");
    }

    // -- expressions ----------------------------------------------------------

    Scalar parse_fraction() {
        bool neg = accept(Tok::Minus);
        Token t = expect(Tok::Word, "a number");
        if (!all_digits(t.text)) throw parse_error(t.loc, "expected a number, found '" + t.text + "'");
        std::string lit = t.text;
        if (accept(Tok::Slash)) {
            Token d = expect(Tok::Word, "a denominator");
            if (!all_digits(d.text)) throw parse_error(d.loc, "expected a denominator, found '" + d.text + "'");
            if (mpz_class(d.text) == 0) throw parse_error(d.loc, "zero denominator");
            lit += "/" + d.text;
        }
        Scalar s = Scalar::parse(lit, Field::rationals());
        return neg ? -s : s;
    }

    bool at_term_start() const {
        Tok k = peek().kind;
        return k == Tok::Word || k == Tok::Minus;
    }

    /// One additive term: optional sign and coefficient, then word factors
    /// with optional integer exponents.  A leading all-digit word is a
    /// coefficient unless it names something in `names`; a digit word
    /// followed by '/' is always a coefficient.
    struct Term {
        Scalar coef = Scalar(1);
        std::vector<std::pair<std::string, long>> factors;
        SourceLoc loc;
    };
    Term parse_term(const std::set<std::string>& names) {
        Term term;
        term.loc = peek().loc;
        bool neg = false;
        if (accept(Tok::Minus)) neg = true;
        bool have_any = false;
        if (peek().kind == Tok::Word && all_digits(peek().text) &&
            (!names.count(peek().text) || peek(1).kind == Tok::Slash)) {
            term.coef = parse_fraction();
            have_any = true;
        }
        while (peek().kind == Tok::Word) {
            Token w = next();
            long e = 1;
            if (accept(Tok::Caret)) {
                bool eneg = accept(Tok::Minus);
                Token et = expect(Tok::Word, "an exponent");
                if (!all_digits(et.text)) throw parse_error(et.loc, "expected an exponent");
                try {
                    e = std::stol(et.text);
                } catch (const std::out_of_range&) {
                    throw parse_error(et.loc, "exponent out of range");
                }
                if (eneg) e = -e;
            }
            term.factors.emplace_back(w.text, e);
            have_any = true;
        }
        if (!have_any) fail("expected a term");
        if (neg) term.coef = -term.coef;
        return term;
    }

    std::vector<Term> parse_sum(const std::set<std::string>& names) {
        std::vector<Term> terms{parse_term(names)};
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool minus = next().kind == Tok::Minus;
            Term t = parse_term(names);
            if (minus) t.coef = -t.coef;
            terms.push_back(std::move(t));
        }
        return terms;
    }

    /// Linear combination over a known basis; bare scalars are rejected
    /// unless they are zero.
    LinComb parse_lincomb(const std::vector<std::string>& basis) {
        std::set<std::string> names(basis.begin(), basis.end());
        LinComb comb;
        for (const Term& t : parse_sum(names)) {
            if (t.factors.empty()) {
                if (!t.coef.is_zero()) throw parse_error(t.loc, "expected a basis element");
                continue;
            }
            if (t.factors.size() != 1 || t.factors[0].second != 1)
                throw parse_error(t.loc, "expected a single basis element");
            const std::string& n = t.factors[0].first;
            if (!names.count(n)) throw parse_error(t.loc, "unknown basis element '" + n + "'");
            Scalar c = comb.count(n) ? comb[n] + t.coef : t.coef;
            if (c.is_zero())
                comb.erase(n);
            else
                comb[n] = c;
        }
        return comb;
    }

    /// Tensor combination c⊗c' over two known bases.
    TensorComb parse_tensor_comb(const std::vector<std::string>& left, const std::vector<std::string>& right) {
        std::set<std::string> names(left.begin(), left.end());
        names.insert(right.begin(), right.end());
        TensorComb comb;
        std::set<std::string> lnames(left.begin(), left.end()), rnames(right.begin(), right.end());
        for (Term first = parse_term(names);; ) {
            // term shape: coef l (x) r
            if (first.factors.size() != 1 || first.factors[0].second != 1 || !lnames.count(first.factors[0].first))
                throw parse_error(first.loc, "expected a basis element of the left tensor factor");
            expect(Tok::Tensor, "the tensor symbol (x)");
            Token r = expect(Tok::Word, "a basis element");
            if (!rnames.count(r.text)) throw parse_error(r.loc, "unknown basis element '" + r.text + "'");
            auto key = std::make_pair(first.factors[0].first, r.text);
            Scalar c = comb.count(key) ? comb[key] + first.coef : first.coef;
            if (c.is_zero())
                comb.erase(key);
            else
                comb[key] = c;
            if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
                bool minus = next().kind == Tok::Minus;
                first = parse_term(names);
                if (minus) first.coef = -first.coef;
                continue;
            }
            break;
        }
        return comb;
    }

    /// Monomial-tensor combination for coaction right-hand sides.
    MonoTensorComb parse_mono_tensor_comb(const std::set<std::string>& left_names,
                                          const std::set<std::string>& right_names) {
        std::set<std::string> all(left_names.begin(), left_names.end());
        all.insert(right_names.begin(), right_names.end());
        MonoTensorComb comb;
        while (true) {
            Term lt = parse_term(all);
            MonomialExpr lmono;
            for (const auto& [w, e] : lt.factors) {
                if (!left_names.count(w)) {
                    if (w == "1" && e == 1) continue; // unit monomial
                    throw parse_error(lt.loc, "unknown generator '" + w + "' in the left tensor factor");
                }
                if (e != 0) lmono[w] += e;
            }
            expect(Tok::Tensor, "the tensor symbol (x)");
            Term rt = parse_term(all);
            if (!rt.coef.is_one()) throw parse_error(rt.loc, "coefficients belong before the tensor term");
            MonomialExpr rmono;
            for (const auto& [w, e] : rt.factors) {
                if (!right_names.count(w)) {
                    if (w == "1" && e == 1) continue;
                    throw parse_error(rt.loc, "unknown generator '" + w + "' in the right tensor factor");
                }
                if (e != 0) rmono[w] += e;
            }
            auto key = std::make_pair(std::move(lmono), std::move(rmono));
            Scalar c = comb.count(key) ? comb[key] + lt.coef : lt.coef;
            if (c.is_zero())
                comb.erase(key);
            else
                comb[key] = c;
            if (peek().kind == Tok::Plus) {
                next();
                continue;
            }
            if (peek().kind == Tok::Minus) fail("write negative coefficients inside the term");
            break;
        }
        return comb;
    }

    std::vector<std::vector<Scalar>> parse_matrix() {
        expect(Tok::LBrack, "'['");
        std::vector<std::vector<Scalar>> rows;
        while (true) {
            expect(Tok::LBrack, "'['");
            std::vector<Scalar> row;
            if (peek().kind != Tok::RBrack) {
                row.push_back(parse_fraction());
                while (accept(Tok::Comma)) row.push_back(parse_fraction());
            }
            expect(Tok::RBrack, "']'");
            rows.push_back(std::move(row));
            if (!accept(Tok::Comma)) break;
        }
        expect(Tok::RBrack, "']'");
        return rows;
    }

    // -- declarations ---------------------------------------------------------

    std::vector<std::string> parse_name_list() {
        std::vector<std::string> names;
        while (peek().kind == Tok::Word) names.push_back(next().text);
        if (names.empty()) fail("expected at least one name");
        std::set<std::string> seen;
        for (const auto& n : names)
            if (!seen.insert(n).second) fail("duplicate name '" + n + "' in list");
        return names;
    }

    void parse_algebra_block(AlgebraDecl& a, bool& saw_unit) {
        std::string stmt = expect_word("a statement");
        if (stmt == "basis") {
            if (!a.basis.empty()) fail("duplicate basis statement");
            a.basis = parse_name_list();
        } else if (stmt == "mult") {
            if (a.basis.empty()) fail("basis must be declared before mult");
            Token l = expect(Tok::Word, "a basis element");
            expect(Tok::Star, "'*'");
            Token r = expect(Tok::Word, "a basis element");
            for (const auto& n : {l.text, r.text})
                if (std::find(a.basis.begin(), a.basis.end(), n) == a.basis.end())
                    throw parse_error(l.loc, "unknown basis element '" + n + "'");
            expect(Tok::Eq, "'='");
            a.mult[{l.text, r.text}] = parse_lincomb(a.basis);
        } else if (stmt == "unit") {
            if (a.basis.empty()) fail("basis must be declared before unit");
            expect(Tok::Eq, "'='");
            a.unit = parse_lincomb(a.basis);
            saw_unit = true;
        } else {
            fail("unknown statement '" + stmt + "' in algebra block");
        }
    }

    void parse_coalgebra_block(CoalgebraDecl& c, const std::string& stmt) {
        if (stmt == "basis") {
            if (!c.basis.empty()) fail("duplicate basis statement");
            c.basis = parse_name_list();
        } else if (stmt == "comult") {
            if (c.basis.empty()) fail("basis must be declared before comult");
            Token src = expect(Tok::Word, "a basis element");
            if (std::find(c.basis.begin(), c.basis.end(), src.text) == c.basis.end())
                throw parse_error(src.loc, "unknown basis element '" + src.text + "'");
            expect(Tok::Eq, "'='");
            c.comult[src.text] = parse_tensor_comb(c.basis, c.basis);
        } else if (stmt == "counit") {
            if (c.basis.empty()) fail("basis must be declared before counit");
            Token src = expect(Tok::Word, "a basis element");
            if (std::find(c.basis.begin(), c.basis.end(), src.text) == c.basis.end())
                throw parse_error(src.loc, "unknown basis element '" + src.text + "'");
            expect(Tok::Eq, "'='");
            c.counit[src.text] = parse_fraction();
        } else {
            fail("unknown statement '" + stmt + "' in coalgebra block");
        }
    }

    Declaration parse_declaration() {
        Token kw = expect(Tok::Word, "a declaration keyword");
        Declaration decl;
        decl.loc = kw.loc;
        decl.name = expect_word("a name");
        if (symbols.count(decl.name)) throw parse_error(kw.loc, "duplicate name '" + decl.name + "'");
        Kind kind;

        if (kw.text == "algebra") {
            kind = Kind::Algebra;
            AlgebraDecl a;
            bool saw_unit = false;
            expect(Tok::LBrace, "'{'");
            while (!accept(Tok::RBrace)) {
                parse_algebra_block(a, saw_unit);
                if (!accept(Tok::Semi) && peek().kind != Tok::RBrace) fail("expected ';' or '}'");
            }
            if (a.basis.empty()) throw parse_error(kw.loc, "incomplete declaration: missing basis");
            if (!saw_unit) throw parse_error(kw.loc, "incomplete declaration: missing unit");
            decl.body = std::move(a);
        } else if (kw.text == "coalgebra") {
            kind = Kind::Coalgebra;
            CoalgebraDecl c;
            expect(Tok::LBrace, "'{'");
            while (!accept(Tok::RBrace)) {
                parse_coalgebra_block(c, expect_word("a statement"));
                if (!accept(Tok::Semi) && peek().kind != Tok::RBrace) fail("expected ';' or '}'");
            }
            if (c.basis.empty()) throw parse_error(kw.loc, "incomplete declaration: missing basis");
            if (c.comult.empty()) throw parse_error(kw.loc, "incomplete declaration: missing comultiplication");
            if (c.counit.empty()) throw parse_error(kw.loc, "incomplete declaration: missing counit");
            decl.body = std::move(c);
        } else if (kw.text == "bialgebra") {
            kind = Kind::Bialgebra;
            BialgebraDecl b;
            bool saw_unit = false;
            expect(Tok::LBrace, "'{'");
            while (!accept(Tok::RBrace)) {
                std::string stmt = peek().text;
                if (stmt == "mult" || stmt == "unit") {
                    parse_algebra_block(b.alg, saw_unit);
                } else if (stmt == "comult" || stmt == "counit") {
                    b.co.basis = b.alg.basis;
                    parse_coalgebra_block(b.co, expect_word("a statement"));
                } else if (stmt == "basis") {
                    next();
                    if (!b.alg.basis.empty()) fail("duplicate basis statement");
                    b.alg.basis = parse_name_list();
                    b.co.basis = b.alg.basis;
                } else {
                    fail("unknown statement '" + stmt + "' in bialgebra block");
                }
                if (!accept(Tok::Semi) && peek().kind != Tok::RBrace) fail("expected ';' or '}'");
            }
            if (b.alg.basis.empty()) throw parse_error(kw.loc, "incomplete declaration: missing basis");
            if (!saw_unit) throw parse_error(kw.loc, "incomplete declaration: missing unit");
            if (b.co.comult.empty())
                throw parse_error(kw.loc, "incomplete declaration: missing comultiplication");
            if (b.co.counit.empty()) throw parse_error(kw.loc, "incomplete declaration: missing counit");
            decl.body = std::move(b);
        } else if (kw.text == "skew") {
            kind = Kind::Skew;
            SkewDecl s;
            expect(Tok::LBrace, "'{'");
            while (!accept(Tok::RBrace)) {
                std::string stmt = expect_word("a statement");
                auto known = [&](const std::string& g, SourceLoc at) {
                    if (std::find(s.gens.begin(), s.gens.end(), g) == s.gens.end())
                        throw parse_error(at, "unknown generator '" + g + "'");
                };
                if (stmt == "gens") {
                    if (!s.gens.empty()) fail("duplicate gens statement");
                    s.gens = parse_name_list();
                } else if (stmt == "inv" || stmt == "grouplike" || stmt == "primitive") {
                    SourceLoc at = peek().loc;
                    for (const auto& g : parse_name_list()) {
                        known(g, at);
                        auto& list = stmt == "inv" ? s.inv : stmt == "grouplike" ? s.grouplike : s.primitive;
                        if (std::find(list.begin(), list.end(), g) == list.end()) list.push_back(g);
                    }
                } else if (stmt == "q") {
                    Token x = expect(Tok::Word, "a generator");
                    Token y = expect(Tok::Word, "a generator");
                    known(x.text, x.loc);
                    known(y.text, y.loc);
                    if (x.text == y.text) throw parse_error(x.loc, "q relates two distinct generators");
                    expect(Tok::Eq, "'='");
                    Scalar q = parse_fraction();
                    if (q.is_zero()) throw parse_error(x.loc, "q factors must be nonzero");
                    s.q[{x.text, y.text}] = q;
                } else {
                    fail("unknown statement '" + stmt + "' in skew block");
                }
                if (!accept(Tok::Semi) && peek().kind != Tok::RBrace) fail("expected ';' or '}'");
            }
            if (s.gens.empty()) throw parse_error(kw.loc, "incomplete declaration: missing gens");
            decl.body = std::move(s);
        } else if (kw.text == "coaction") {
            kind = Kind::Coaction;
            CoactionDecl c;
            expect(Tok::Colon, "':'");
            Token src = expect(Tok::Word, "the source algebra");
            c.source = src.text;
            expect(Tok::Arrow, "'->'");
            Token src2 = expect(Tok::Word, "the source algebra");
            if (src2.text != c.source) throw parse_error(src2.loc, "coaction target must be E (x) B");
            expect(Tok::Tensor, "the tensor symbol (x)");
            Token tgt = expect(Tok::Word, "the coacting bialgebra");
            c.target = tgt.text;

            bool skew_backend = is_skew(c.source, src.loc);
            std::set<std::string> lnames, rnames;
            if (skew_backend) {
                if (!is_skew(c.target, tgt.loc))
                    throw parse_error(tgt.loc, "backend mismatch: skew source requires a skew target");
                const SkewDecl& e = skew_decl(c.source, src.loc);
                const SkewDecl& b = skew_decl(c.target, tgt.loc);
                lnames.insert(e.gens.begin(), e.gens.end());
                rnames.insert(b.gens.begin(), b.gens.end());
            } else {
                if (is_skew(c.target, tgt.loc))
                    throw parse_error(tgt.loc, "backend mismatch: findim source requires a findim bialgebra");
                const auto& eb = algebra_basis(c.source, src.loc);
                const auto& bb = bialgebra_basis(c.target, tgt.loc);
                lnames.insert(eb.begin(), eb.end());
                rnames.insert(bb.begin(), bb.end());
            }

            expect(Tok::LBrace, "'{'");
            while (!accept(Tok::RBrace)) {
                std::string stmt = expect_word("a statement");
                if (stmt != "rho") fail("unknown statement '" + stmt + "' in coaction block");
                Token who = expect(Tok::Word, "a basis element or generator");
                if (!lnames.count(who.text))
                    throw parse_error(who.loc, "unknown element '" + who.text + "' of the source");
                expect(Tok::Eq, "'='");
                c.rho[who.text] = parse_mono_tensor_comb(lnames, rnames);
                if (!accept(Tok::Semi) && peek().kind != Tok::RBrace) fail("expected ';' or '}'");
            }
            decl.body = std::move(c);
        } else if (kw.text == "action") {
            kind = Kind::Action;
            ActionDecl a;
            expect(Tok::Colon, "':'");
            Token h = expect(Tok::Word, "the acting bialgebra");
            a.h = h.text;
            std::string on = expect_word("'on'");
            if (on != "on") fail("expected 'on'");
            Token alg = expect(Tok::Word, "the algebra acted on");
            a.a = alg.text;
            const auto& hb = bialgebra_basis(a.h, h.loc);
            const auto& ab = algebra_basis(a.a, alg.loc);
            expect(Tok::LBrace, "'{'");
            while (!accept(Tok::RBrace)) {
                std::string stmt = expect_word("a statement");
                if (stmt != "act") fail("unknown statement '" + stmt + "' in action block");
                Token hh = expect(Tok::Word, "a basis element of the bialgebra");
                Token aa = expect(Tok::Word, "a basis element of the algebra");
                if (std::find(hb.begin(), hb.end(), hh.text) == hb.end())
                    throw parse_error(hh.loc, "unknown basis element '" + hh.text + "'");
                if (std::find(ab.begin(), ab.end(), aa.text) == ab.end())
                    throw parse_error(aa.loc, "unknown basis element '" + aa.text + "'");
                expect(Tok::Eq, "'='");
                a.act[{hh.text, aa.text}] = parse_lincomb(ab);
                if (!accept(Tok::Semi) && peek().kind != Tok::RBrace) fail("expected ';' or '}'");
            }
            decl.body = std::move(a);
        } else if (kw.text == "module" || kw.text == "hopfmodule" || kw.text == "entwined") {
            std::string over_kw = expect_word("'over'");
            if (over_kw != "over") fail("expected 'over'");
            Token over = expect(Tok::Word, "a declared name");

            std::vector<std::string> alg_basis;
            std::vector<std::string> co_basis; // for coact lines
            if (kw.text == "module") {
                kind = Kind::Module;
                if (is_skew(over.text, over.loc))
                    throw parse_error(over.loc, "modules over skew algebras are not supported");
                alg_basis = algebra_basis(over.text, over.loc);
            } else if (kw.text == "hopfmodule") {
                kind = Kind::HopfModule;
                const Declaration& d = resolve(over.text, over.loc);
                const auto* c = std::get_if<CoactionDecl>(&d.body);
                if (!c) throw parse_error(over.loc, "'" + over.text + "' is not a coaction");
                if (is_skew(c->source, over.loc))
                    throw parse_error(over.loc, "Hopf modules require a findim coaction");
                alg_basis = algebra_basis(c->source, over.loc);
                co_basis = bialgebra_basis(c->target, over.loc);
            } else {
                kind = Kind::EntwinedModule;
                const Declaration& d = resolve(over.text, over.loc);
                const auto* e = std::get_if<EntwiningDecl>(&d.body);
                if (!e) throw parse_error(over.loc, "'" + over.text + "' is not an entwining");
                alg_basis = algebra_basis(e->alg, over.loc);
                co_basis = coalgebra_basis(e->coalg, over.loc);
            }

            std::vector<std::string> basis;
            std::map<std::pair<std::string, std::string>, LinComb> act;
            std::map<std::string, TensorComb> coact;
            expect(Tok::LBrace, "'{'");
            while (!accept(Tok::RBrace)) {
                std::string stmt = expect_word("a statement");
                if (stmt == "basis") {
                    if (!basis.empty()) fail("duplicate basis statement");
                    basis = parse_name_list();
                } else if (stmt == "act") {
                    if (basis.empty()) fail("basis must be declared before act");
                    Token aa = expect(Tok::Word, "an algebra basis element");
                    Token mm = expect(Tok::Word, "a module basis element");
                    if (std::find(alg_basis.begin(), alg_basis.end(), aa.text) == alg_basis.end())
                        throw parse_error(aa.loc, "unknown basis element '" + aa.text + "'");
                    if (std::find(basis.begin(), basis.end(), mm.text) == basis.end())
                        throw parse_error(mm.loc, "unknown basis element '" + mm.text + "'");
                    expect(Tok::Eq, "'='");
                    act[{aa.text, mm.text}] = parse_lincomb(basis);
                } else if (stmt == "coact" && kind != Kind::Module) {
                    if (basis.empty()) fail("basis must be declared before coact");
                    Token mm = expect(Tok::Word, "a module basis element");
                    if (std::find(basis.begin(), basis.end(), mm.text) == basis.end())
                        throw parse_error(mm.loc, "unknown basis element '" + mm.text + "'");
                    expect(Tok::Eq, "'='");
                    // Hopf modules coact as m -> Σ m'⊗b; entwined modules as m -> Σ c⊗m'
                    coact[mm.text] = kind == Kind::HopfModule ? parse_tensor_comb(basis, co_basis)
                                                              : parse_tensor_comb(co_basis, basis);
                } else {
                    fail("unknown statement '" + stmt + "' in " + kw.text + " block");
                }
                if (!accept(Tok::Semi) && peek().kind != Tok::RBrace) fail("expected ';' or '}'");
            }
            if (basis.empty()) throw parse_error(kw.loc, "incomplete declaration: missing basis");
            if (kind == Kind::Module) {
                decl.body = ModuleDecl{over.text, std::move(basis), std::move(act)};
            } else if (kind == Kind::HopfModule) {
                if (coact.empty()) throw parse_error(kw.loc, "incomplete declaration: missing coaction");
                decl.body = HopfModuleDecl{over.text, std::move(basis), std::move(act), std::move(coact)};
            } else {
                if (coact.empty()) throw parse_error(kw.loc, "incomplete declaration: missing coaction");
                decl.body = EntwinedModuleDecl{over.text, std::move(basis), std::move(act), std::move(coact)};
            }
        } else if (kw.text == "localize") {
            kind = Kind::Localize;
            LocalizeDecl l;
            std::string of = expect_word("'of'");
            if (of != "of") fail("expected 'of'");
            Token tgt = expect(Tok::Word, "the algebra to localize");
            l.target = tgt.text;
            std::string at = expect_word("'at'");
            if (at != "at") fail("expected 'at'");
            expect(Tok::LBrace, "'{'");
            if (is_skew(l.target, tgt.loc)) {
                l.skew_form = true;
                const SkewDecl& s = skew_decl(l.target, tgt.loc);
                SourceLoc here = peek().loc;
                for (const auto& g : parse_name_list())
                    if (std::find(s.gens.begin(), s.gens.end(), g) == s.gens.end())
                        throw parse_error(here, "unknown generator '" + g + "'");
                    else
                        l.gens.push_back(g);
            } else {
                const auto& basis = algebra_basis(l.target, tgt.loc);
                std::set<std::string> names(basis.begin(), basis.end());
                for (const Term& t : parse_sum(names)) {
                    MonomialExpr mono;
                    for (const auto& [w, e] : t.factors) {
                        if (!names.count(w)) throw parse_error(t.loc, "unknown basis element '" + w + "'");
                        if (e != 1) throw parse_error(t.loc, "exponents are not allowed here");
                        mono[w] += 1;
                    }
                    if (mono.size() > 1) throw parse_error(t.loc, "expected a linear expression");
                    l.expr.emplace_back(t.coef, std::move(mono));
                }
            }
            expect(Tok::RBrace, "'}'");
            decl.body = std::move(l);
        } else if (kw.text == "entwining") {
            kind = Kind::Entwining;
            EntwiningDecl e;
            expect(Tok::Colon, "':'");
            Token alg = expect(Tok::Word, "the algebra");
            e.alg = alg.text;
            expect(Tok::Tensor, "the tensor symbol (x)");
            Token co = expect(Tok::Word, "the coalgebra");
            e.coalg = co.text;
            expect(Tok::Arrow, "'->'");
            Token co2 = expect(Tok::Word, "the coalgebra");
            expect(Tok::Tensor, "the tensor symbol (x)");
            Token alg2 = expect(Tok::Word, "the algebra");
            if (co2.text != e.coalg || alg2.text != e.alg)
                throw parse_error(co2.loc, "entwining signature must read A (x) C -> C (x) A");
            if (is_skew(e.alg, alg.loc))
                throw parse_error(alg.loc, "declared entwinings are findim; skew entwinings arise canonically");
            const auto& ab = algebra_basis(e.alg, alg.loc);
            const auto& cb = coalgebra_basis(e.coalg, co.loc);
            expect(Tok::LBrace, "'{'");
            while (!accept(Tok::RBrace)) {
                std::string stmt = expect_word("a statement");
                if (stmt != "psi") fail("unknown statement '" + stmt + "' in entwining block");
                Token aa = expect(Tok::Word, "an algebra basis element");
                Token cc = expect(Tok::Word, "a coalgebra basis element");
                if (std::find(ab.begin(), ab.end(), aa.text) == ab.end())
                    throw parse_error(aa.loc, "unknown basis element '" + aa.text + "'");
                if (std::find(cb.begin(), cb.end(), cc.text) == cb.end())
                    throw parse_error(cc.loc, "unknown basis element '" + cc.text + "'");
                expect(Tok::Eq, "'='");
                e.psi[{aa.text, cc.text}] = parse_tensor_comb(cb, ab);
                if (!accept(Tok::Semi) && peek().kind != Tok::RBrace) fail("expected ';' or '}'");
            }
            decl.body = std::move(e);
        } else if (kw.text == "probe") {
            kind = Kind::Probe;
            ProbeDecl p;
            expect(Tok::LBrace, "'{'");
            while (!accept(Tok::RBrace)) {
                std::string stmt = expect_word("a statement");
                if (stmt == "modules") {
                    SourceLoc here = peek().loc;
                    for (const auto& m : parse_name_list()) {
                        module_dim(m, here);
                        p.modules.push_back(m);
                    }
                } else if (stmt == "maps") {
                    ProbeDecl::MapDecl md;
                    md.name = expect_word("a map name");
                    expect(Tok::Colon, "':'");
                    Token src = expect(Tok::Word, "a module name");
                    expect(Tok::Arrow, "'->'");
                    Token dst = expect(Tok::Word, "a module name");
                    md.src = src.text;
                    md.dst = dst.text;
                    if (std::find(p.modules.begin(), p.modules.end(), md.src) == p.modules.end())
                        throw parse_error(src.loc, "map endpoints must be listed in modules first");
                    if (std::find(p.modules.begin(), p.modules.end(), md.dst) == p.modules.end())
                        throw parse_error(dst.loc, "map endpoints must be listed in modules first");
                    expect(Tok::Eq, "'='");
                    SourceLoc mat_loc = peek().loc;
                    md.matrix = parse_matrix();
                    std::size_t rows = module_dim(md.dst, dst.loc), cols = module_dim(md.src, src.loc);
                    if (md.matrix.size() != rows) throw parse_error(mat_loc, "matrix has the wrong number of rows");
                    for (const auto& r : md.matrix)
                        if (r.size() != cols) throw parse_error(mat_loc, "matrix has a row of the wrong length");
                    p.maps.push_back(std::move(md));
                } else {
                    fail("unknown statement '" + stmt + "' in probe block");
                }
                if (!accept(Tok::Semi) && peek().kind != Tok::RBrace) fail("expected ';' or '}'");
            }
            decl.body = std::move(p);
        } else {
            throw parse_error(kw.loc, "unknown declaration keyword '" + kw.text + "'");
        }

        symbols[decl.name] = {kind, bundle.decls.size()};
        return decl;
    }

    void run() {
        while (peek().kind != Tok::End) {
            if (peek().kind == Tok::Word && peek().text == "field") {
                Token f = next();
                if (field_seen || !bundle.decls.empty())
                    throw parse_error(f.loc, "the field must be declared once, before all declarations");
                Token which = expect(Tok::Word, "Q or F<p>");
                if (which.text == "Q") {
                    bundle.field = Field::rationals();
                } else if (which.text.size() > 1 && which.text[0] == 'F' && all_digits(which.text.substr(1))) {
                    try {
                        unsigned long p = std::stoul(which.text.substr(1));
                        if (p > 0x7fffffffUL) throw std::out_of_range("p");
                        bundle.field = Field::prime(static_cast<std::uint32_t>(p));
                    } catch (const std::invalid_argument& e) {
                        throw parse_error(which.loc, e.what());
                    } catch (const std::out_of_range&) {
                        throw parse_error(which.loc, "field characteristic out of range");
                    }
                } else {
                    throw parse_error(which.loc, "expected Q or F<p>");
                }
                field_seen = true;
                accept(Tok::Semi);
                continue;
            }
            bundle.decls.push_back(parse_declaration());
        }
    }
};

} // namespace

PresentationBundle parse(const std::string& text) {
    Parser p;
    p.toks = lex(text);
    p.run();
    return p.bundle;
}

} // namespace coact
