#pragma once

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lamu {

// ---------------------------------------------------------------------------
// Type expressions
// ---------------------------------------------------------------------------

enum class TyKind { Var, Later, Arrow, Mu };

struct TypeNode;
using Ty = std::shared_ptr<const TypeNode>;

struct TypeNode {
    TyKind kind;
    std::string name; // Var name / Mu binder
    Ty a;             // Later body / Arrow dom / Mu body
    Ty b;             // Arrow cod
};

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& msg, size_t p) : std::runtime_error(msg), pos(p) {}
};

struct NonProperMu : std::runtime_error {
    std::string binder;
    explicit NonProperMu(const std::string& x)
        : std::runtime_error("mu-body not proper in " + x), binder(x) {}
};

Ty tvar(std::string name);
Ty later(Ty body);
Ty arrow(Ty dom, Ty cod);
// Rejects bodies that are not proper in the binder.
Ty mu(std::string binder, Ty body);
Ty top();

Ty laters(Ty t, int n);
// Strips leading Later nodes; returns the count.
int strip_laters(Ty& t);

bool is_var(const Ty& t, std::string_view name);

std::set<std::string> free_tvars(const Ty& t);
bool alpha_eq_type(const Ty& a, const Ty& b);
bool contains_mu(const Ty& t);
bool contains_later(const Ty& t);

// Simultaneous capture-avoiding substitution.
Ty subst_type(const Ty& t, const std::vector<std::pair<std::string, Ty>>& pairs);
Ty subst_type1(const Ty& t, const std::string& x, const Ty& by);

// mu X. A  ->  A[mu X. A / X]
Ty unfold_mu(const Ty& t);

std::string print_type(const Ty& t);
// Alpha-invariant key (de Bruijn binders); usable as a map key.
std::string type_key(const Ty& t);

Ty parse_type(std::string_view text);

std::string fresh_tvar(const std::string& base, const std::set<std::string>& avoid);

// Defined in measures.cpp; needed by mu() for the properness gate.
bool is_proper(const Ty& t, const std::string& x);

// ---------------------------------------------------------------------------
// Lambda terms
// ---------------------------------------------------------------------------

enum class TmKind { Var, Lam, App };

struct TermNode;
using Tm = std::shared_ptr<const TermNode>;

struct TermNode {
    TmKind kind;
    std::string name; // Var name / Lam binder
    Tm a;             // Lam body / App fun
    Tm b;             // App arg
};

Tm tmvar(std::string name);
Tm lam(std::string binder, Tm body);
Tm app(Tm fun, Tm arg);

std::set<std::string> free_vars(const Tm& t);
bool alpha_eq_term(const Tm& a, const Tm& b);
Tm subst_term(const Tm& t, const std::string& x, const Tm& by);

std::string print_term(const Tm& t);
std::string term_key(const Tm& t);
Tm parse_term(std::string_view text);

std::string fresh_var(const std::string& base, const std::set<std::string>& avoid);

// ---------------------------------------------------------------------------
// Type closures: a skeleton subexpression plus bindings for mu-bound
// variables that were opened while decomposing a root type.
// ---------------------------------------------------------------------------

struct TypeClosure {
    Ty skeleton;
    std::map<std::string, TypeClosure> env;

    Ty expand() const;
};

} // namespace lamu
