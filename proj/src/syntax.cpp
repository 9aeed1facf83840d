#include "lamu/syntax.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace lamu {

// ---------------------------------------------------------------------------
// Type constructors
// ---------------------------------------------------------------------------

Ty tvar(std::string name) {
    return std::make_shared<TypeNode>(TypeNode{TyKind::Var, std::move(name), nullptr, nullptr});
}

Ty later(Ty body) {
    return std::make_shared<TypeNode>(TypeNode{TyKind::Later, {}, std::move(body), nullptr});
}

Ty arrow(Ty dom, Ty cod) {
    return std::make_shared<TypeNode>(TypeNode{TyKind::Arrow, {}, std::move(dom), std::move(cod)});
}

static Ty mu_unchecked(std::string binder, Ty body) {
    return std::make_shared<TypeNode>(TypeNode{TyKind::Mu, std::move(binder), std::move(body), nullptr});
}

Ty mu(std::string binder, Ty body) {
    if (!is_proper(body, binder)) throw NonProperMu(binder);
    return mu_unchecked(std::move(binder), std::move(body));
}

Ty top() {
    static const Ty t = mu_unchecked("X", later(tvar("X")));
    return t;
}

Ty laters(Ty t, int n) {
    for (int i = 0; i < n; ++i) t = later(std::move(t));
    return t;
}

int strip_laters(Ty& t) {
    int n = 0;
    while (t->kind == TyKind::Later) {
        t = t->a;
        ++n;
    }
    return n;
}

bool is_var(const Ty& t, std::string_view name) {
    return t->kind == TyKind::Var && t->name == name;
}

// ---------------------------------------------------------------------------
// Free variables, alpha equivalence
// ---------------------------------------------------------------------------

static void free_tvars_rec(const Ty& t, std::set<std::string>& bound, std::set<std::string>& out) {
    switch (t->kind) {
    case TyKind::Var:
        if (!bound.count(t->name)) out.insert(t->name);
        break;
    case TyKind::Later:
        free_tvars_rec(t->a, bound, out);
        break;
    case TyKind::Arrow:
        free_tvars_rec(t->a, bound, out);
        free_tvars_rec(t->b, bound, out);
        break;
    case TyKind::Mu: {
        bool fresh = bound.insert(t->name).second;
        free_tvars_rec(t->a, bound, out);
        if (fresh) bound.erase(t->name);
        break;
    }
    }
}

std::set<std::string> free_tvars(const Ty& t) {
    std::set<std::string> bound, out;
    free_tvars_rec(t, bound, out);
    return out;
}

static void type_key_rec(const Ty& t, std::vector<std::string>& binders, std::string& out) {
    switch (t->kind) {
    case TyKind::Var: {
        for (size_t i = binders.size(); i-- > 0;) {
            if (binders[i] == t->name) {
                out += 'b';
                out += std::to_string(binders.size() - 1 - i);
                return;
            }
        }
        out += 'f';
        out += t->name;
        out += ';';
        return;
    }
    case TyKind::Later:
        out += '#';
        type_key_rec(t->a, binders, out);
        return;
    case TyKind::Arrow:
        out += '(';
        type_key_rec(t->a, binders, out);
        out += '>';
        type_key_rec(t->b, binders, out);
        out += ')';
        return;
    case TyKind::Mu:
        out += 'u';
        binders.push_back(t->name);
        type_key_rec(t->a, binders, out);
        binders.pop_back();
        return;
    }
}

std::string type_key(const Ty& t) {
    std::string out;
    std::vector<std::string> binders;
    type_key_rec(t, binders, out);
    return out;
}

bool alpha_eq_type(const Ty& a, const Ty& b) {
    if (a == b) return true;
    return type_key(a) == type_key(b);
}

bool contains_mu(const Ty& t) {
    switch (t->kind) {
    case TyKind::Var: return false;
    case TyKind::Later: return contains_mu(t->a);
    case TyKind::Arrow: return contains_mu(t->a) || contains_mu(t->b);
    case TyKind::Mu: return true;
    }
    return false;
}

bool contains_later(const Ty& t) {
    switch (t->kind) {
    case TyKind::Var: return false;
    case TyKind::Later: return true;
    case TyKind::Arrow: return contains_later(t->a) || contains_later(t->b);
    case TyKind::Mu: return contains_later(t->a);
    }
    return false;
}

// ---------------------------------------------------------------------------
// Substitution
// ---------------------------------------------------------------------------

std::string fresh_tvar(const std::string& base, const std::set<std::string>& avoid) {
    std::string stem = base;
    while (!stem.empty() && stem.back() == '\'') stem.pop_back();
    if (stem.empty()) stem = "X";
    std::string cand = stem;
    while (avoid.count(cand)) cand += '\'';
    return cand;
}

static Ty subst_rec(const Ty& t, const std::map<std::string, Ty>& sub,
                    const std::set<std::string>& fvs) {
    switch (t->kind) {
    case TyKind::Var: {
        auto it = sub.find(t->name);
        return it == sub.end() ? t : it->second;
    }
    case TyKind::Later:
        return later(subst_rec(t->a, sub, fvs));
    case TyKind::Arrow:
        return arrow(subst_rec(t->a, sub, fvs), subst_rec(t->b, sub, fvs));
    case TyKind::Mu: {
        std::map<std::string, Ty> inner = sub;
        inner.erase(t->name);
        if (inner.empty()) return t;
        std::string binder = t->name;
        Ty body = t->a;
        if (fvs.count(binder)) {
            // rename to avoid capture
            std::set<std::string> avoid = fvs;
            for (const auto& v : free_tvars(body)) avoid.insert(v);
            for (const auto& kv : inner) avoid.insert(kv.first);
            std::string nb = fresh_tvar(binder, avoid);
            body = subst_rec(body, {{binder, tvar(nb)}}, {});
            binder = nb;
        }
        return mu_unchecked(binder, subst_rec(body, inner, fvs));
    }
    }
    return t;
}

Ty subst_type(const Ty& t, const std::vector<std::pair<std::string, Ty>>& pairs) {
    std::map<std::string, Ty> sub;
    std::set<std::string> fvs;
    for (const auto& [x, by] : pairs) {
        sub.emplace(x, by);
        for (const auto& v : free_tvars(by)) fvs.insert(v);
    }
    if (sub.empty()) return t;
    return subst_rec(t, sub, fvs);
}

Ty subst_type1(const Ty& t, const std::string& x, const Ty& by) {
    return subst_type(t, {{x, by}});
}

Ty unfold_mu(const Ty& t) {
    if (t->kind != TyKind::Mu) throw std::logic_error("unfold_mu: not a mu type");
    return subst_type1(t->a, t->name, t);
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

static bool is_top_pattern(const Ty& t) {
    return t->kind == TyKind::Mu && t->a->kind == TyKind::Later &&
           is_var(t->a->a, t->name);
}

// precedence: mu (0) < arrow (1) < later (2)
static void print_type_rec(const Ty& t, int prec, std::string& out) {
    if (is_top_pattern(t)) {
        out += "Top";
        return;
    }
    switch (t->kind) {
    case TyKind::Var:
        out += t->name;
        return;
    case TyKind::Later:
        out += '#';
        print_type_rec(t->a, 2, out);
        return;
    case TyKind::Arrow: {
        bool paren = prec > 1;
        if (paren) out += '(';
        print_type_rec(t->a, 2, out);
        out += " -> ";
        print_type_rec(t->b, 1, out);
        if (paren) out += ')';
        return;
    }
    case TyKind::Mu: {
        bool paren = prec > 0;
        if (paren) out += '(';
        out += "mu ";
        out += t->name;
        out += ". ";
        print_type_rec(t->a, 0, out);
        if (paren) out += ')';
        return;
    }
    }
}

std::string print_type(const Ty& t) {
    std::string out;
    print_type_rec(t, 0, out);
    return out;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

struct Lexer {
    std::string_view src;
    size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= src.size();
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    bool try_consume(std::string_view tok) {
        skip_ws();
        if (src.substr(pos, tok.size()) == tok) {
            // keyword tokens must not extend into an identifier
            if (std::isalpha(static_cast<unsigned char>(tok[0]))) {
                size_t end = pos + tok.size();
                if (end < src.size()) {
                    char c = src[end];
                    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')
                        return false;
                }
            }
            pos += tok.size();
            return true;
        }
        return false;
    }
    void expect(std::string_view tok) {
        if (!try_consume(tok))
            throw ParseError("expected '" + std::string(tok) + "'", pos);
    }
    std::string ident() {
        skip_ws();
        if (pos >= src.size() || !std::isalpha(static_cast<unsigned char>(src[pos])))
            throw ParseError("expected identifier", pos);
        size_t start = pos;
        ++pos;
        while (pos < src.size()) {
            char c = src[pos];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'') ++pos;
            else break;
        }
        std::string name(src.substr(start, pos - start));
        if (name == "mu" || name == "Top" || name == "lam")
            throw ParseError("keyword '" + name + "' used as identifier", start);
        return name;
    }
};

struct TypeParser {
    Lexer lex;

    Ty parse_arrow() {
        Ty lhs = parse_prefix();
        if (lex.try_consume("->")) return arrow(lhs, parse_arrow());
        return lhs;
    }

    Ty parse_prefix() {
        int bullets = 0;
        while (lex.try_consume("#")) ++bullets;
        Ty t = parse_atom();
        return laters(t, bullets);
    }

    Ty parse_atom() {
        if (lex.try_consume("Top")) return top();
        if (lex.try_consume("(")) {
            Ty t = parse_arrow();
            lex.expect(")");
            return t;
        }
        if (lex.try_consume("mu")) {
            std::string binder = lex.ident();
            lex.expect(".");
            Ty body = parse_arrow();
            size_t at = lex.pos;
            try {
                return mu(binder, body);
            } catch (const NonProperMu& e) {
                throw ParseError(std::string(e.what()), at);
            }
        }
        return tvar(lex.ident());
    }
};

} // namespace

Ty parse_type(std::string_view text) {
    TypeParser p{Lexer{text}};
    Ty t = p.parse_arrow();
    if (!p.lex.eof()) throw ParseError("trailing input", p.lex.pos);
    return t;
}

// ---------------------------------------------------------------------------
// Terms
// ---------------------------------------------------------------------------

Tm tmvar(std::string name) {
    return std::make_shared<TermNode>(TermNode{TmKind::Var, std::move(name), nullptr, nullptr});
}

Tm lam(std::string binder, Tm body) {
    return std::make_shared<TermNode>(TermNode{TmKind::Lam, std::move(binder), std::move(body), nullptr});
}

Tm app(Tm fun, Tm arg) {
    return std::make_shared<TermNode>(TermNode{TmKind::App, {}, std::move(fun), std::move(arg)});
}

static void free_vars_rec(const Tm& t, std::set<std::string>& bound, std::set<std::string>& out) {
    switch (t->kind) {
    case TmKind::Var:
        if (!bound.count(t->name)) out.insert(t->name);
        break;
    case TmKind::Lam: {
        bool fresh = bound.insert(t->name).second;
        free_vars_rec(t->a, bound, out);
        if (fresh) bound.erase(t->name);
        break;
    }
    case TmKind::App:
        free_vars_rec(t->a, bound, out);
        free_vars_rec(t->b, bound, out);
        break;
    }
}

std::set<std::string> free_vars(const Tm& t) {
    std::set<std::string> bound, out;
    free_vars_rec(t, bound, out);
    return out;
}

static void term_key_rec(const Tm& t, std::vector<std::string>& binders, std::string& out) {
    switch (t->kind) {
    case TmKind::Var: {
        for (size_t i = binders.size(); i-- > 0;) {
            if (binders[i] == t->name) {
                out += 'b';
                out += std::to_string(binders.size() - 1 - i);
                return;
            }
        }
        out += 'f';
        out += t->name;
        out += ';';
        return;
    }
    case TmKind::Lam:
        out += 'L';
        binders.push_back(t->name);
        term_key_rec(t->a, binders, out);
        binders.pop_back();
        return;
    case TmKind::App:
        out += '(';
        term_key_rec(t->a, binders, out);
        out += ' ';
        term_key_rec(t->b, binders, out);
        out += ')';
        return;
    }
}

std::string term_key(const Tm& t) {
    std::string out;
    std::vector<std::string> binders;
    term_key_rec(t, binders, out);
    return out;
}

bool alpha_eq_term(const Tm& a, const Tm& b) {
    if (a == b) return true;
    return term_key(a) == term_key(b);
}

std::string fresh_var(const std::string& base, const std::set<std::string>& avoid) {
    std::string stem = base;
    while (!stem.empty() && stem.back() == '\'') stem.pop_back();
    if (stem.empty()) stem = "x";
    std::string cand = stem;
    while (avoid.count(cand)) cand += '\'';
    return cand;
}

Tm subst_term(const Tm& t, const std::string& x, const Tm& by) {
    switch (t->kind) {
    case TmKind::Var:
        return t->name == x ? by : t;
    case TmKind::App:
        return app(subst_term(t->a, x, by), subst_term(t->b, x, by));
    case TmKind::Lam: {
        if (t->name == x) return t;
        std::set<std::string> by_fv = free_vars(by);
        if (by_fv.count(t->name)) {
            std::set<std::string> avoid = by_fv;
            for (const auto& v : free_vars(t->a)) avoid.insert(v);
            avoid.insert(x);
            std::string nb = fresh_var(t->name, avoid);
            Tm body = subst_term(t->a, t->name, tmvar(nb));
            return lam(nb, subst_term(body, x, by));
        }
        return lam(t->name, subst_term(t->a, x, by));
    }
    }
    return t;
}

// precedence: lam (0) < app (1) < atom (2)
static void print_term_rec(const Tm& t, int prec, std::string& out) {
    switch (t->kind) {
    case TmKind::Var:
        out += t->name;
        return;
    case TmKind::Lam: {
        bool paren = prec > 0;
        if (paren) out += '(';
        out += '\\';
        out += t->name;
        out += ". ";
        print_term_rec(t->a, 0, out);
        if (paren) out += ')';
        return;
    }
    case TmKind::App: {
        bool paren = prec > 1;
        if (paren) out += '(';
        print_term_rec(t->a, 1, out);
        out += ' ';
        print_term_rec(t->b, 2, out);
        if (paren) out += ')';
        return;
    }
    }
}

std::string print_term(const Tm& t) {
    std::string out;
    print_term_rec(t, 0, out);
    return out;
}

namespace {

struct TermParser {
    Lexer lex;

    Tm parse_term() {
        if (lex.try_consume("\\")) {
            std::string binder = lex.ident();
            lex.expect(".");
            return lam(binder, parse_term());
        }
        return parse_appseq();
    }

    Tm parse_appseq() {
        Tm t = parse_atom_req();
        while (true) {
            auto a = parse_atom_opt();
            if (!a) break;
            t = app(t, *a);
        }
        return t;
    }

    Tm parse_atom_req() {
        auto a = parse_atom_opt();
        if (!a) throw ParseError("expected term", lex.pos);
        return *a;
    }

    std::optional<Tm> parse_atom_opt() {
        if (lex.eof()) return std::nullopt;
        char c = lex.peek();
        if (c == '(') {
            lex.expect("(");
            Tm t = parse_term();
            lex.expect(")");
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t save = lex.pos;
            try {
                return tmvar(lex.ident());
            } catch (const ParseError&) {
                lex.pos = save;
                return std::nullopt;
            }
        }
        return std::nullopt;
    }
};

} // namespace

Tm parse_term(std::string_view text) {
    TermParser p{Lexer{text}};
    Tm t = p.parse_term();
    if (!p.lex.eof()) throw ParseError("trailing input", p.lex.pos);
    return t;
}

// ---------------------------------------------------------------------------
// TypeClosure
// ---------------------------------------------------------------------------

Ty TypeClosure::expand() const {
    if (env.empty()) return skeleton;
    std::vector<std::pair<std::string, Ty>> pairs;
    pairs.reserve(env.size());
    for (const auto& [x, cl] : env) pairs.emplace_back(x, cl.expand());
    return subst_type(skeleton, pairs);
}

} // namespace lamu
