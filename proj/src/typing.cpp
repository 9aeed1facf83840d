#include "lamu/typing.hpp"

#include <algorithm>
#include <cassert>

namespace lamu {

// ---------------------------------------------------------------------------
// Contexts
// ---------------------------------------------------------------------------

bool ctx_eq(const Ctx& a, const Ctx& b) {
    if (a.size() != b.size()) return false;
    auto it = b.begin();
    for (const auto& [x, t] : a) {
        if (it->first != x || !alpha_eq_type(it->second, t)) return false;
        ++it;
    }
    return true;
}

Ctx later_ctx(const Ctx& g, int n) {
    Ctx out;
    for (const auto& [x, t] : g) out.emplace(x, laters(t, n));
    return out;
}

std::optional<Ctx> union_ctx(const Ctx& a, const Ctx& b) {
    Ctx out = a;
    for (const auto& [x, t] : b) {
        auto [it, inserted] = out.emplace(x, t);
        if (!inserted && !alpha_eq_type(it->second, t)) return std::nullopt;
    }
    return out;
}

TypDerivPtr make_typ(TypRule rule, Ctx ctx, Tm subject, Ty type,
                     std::vector<TypDerivPtr> premises, SubDerivPtr sub) {
    return std::make_shared<TypDeriv>(TypDeriv{rule, std::move(ctx), std::move(subject),
                                               std::move(type), std::move(premises),
                                               std::move(sub)});
}

// ---------------------------------------------------------------------------
// Checker
// ---------------------------------------------------------------------------

static const char* typ_rule_name(TypRule r) {
    switch (r) {
    case TypRule::Var: return "var";
    case TypRule::Shift: return "shift";
    case TypRule::TopI: return "top";
    case TypRule::Subsume: return "subsume";
    case TypRule::ArrowI: return "arrow-i";
    case TypRule::ArrowE: return "arrow-e";
    }
    return "?";
}

namespace {

void check_typ_rec(const TypDerivPtr& d, const std::string& path, CheckResult& res) {
    auto fail = [&](const std::string& msg) {
        res.fail("[" + path + " " + typ_rule_name(d->rule) + "] " + msg);
    };
    auto need_premises = [&](size_t n) {
        if (d->premises.size() != n) {
            fail("expected " + std::to_string(n) + " premises");
            return false;
        }
        return true;
    };

    switch (d->rule) {
    case TypRule::Var: {
        if (!need_premises(0)) break;
        if (d->subject->kind != TmKind::Var) {
            fail("subject must be a variable");
            break;
        }
        auto it = d->ctx.find(d->subject->name);
        if (it == d->ctx.end()) fail("variable not bound in the context");
        else if (!alpha_eq_type(it->second, d->type)) fail("context binding differs from type");
        break;
    }
    case TypRule::Shift: {
        if (!need_premises(1)) break;
        const auto& p = d->premises[0];
        if (!alpha_eq_term(p->subject, d->subject)) fail("premise subject differs");
        if (!ctx_eq(p->ctx, later_ctx(d->ctx))) fail("premise context is not •Γ");
        if (p->type->kind != TyKind::Later || !alpha_eq_type(p->type->a, d->type))
            fail("premise type is not •A");
        break;
    }
    case TypRule::TopI:
        if (!need_premises(0)) break;
        if (!alpha_eq_type(d->type, top())) fail("type must be Top");
        break;
    case TypRule::Subsume: {
        if (!need_premises(1)) break;
        const auto& p = d->premises[0];
        if (!d->sub) {
            fail("missing subtyping certificate");
            break;
        }
        if (!alpha_eq_term(p->subject, d->subject)) fail("premise subject differs");
        if (!ctx_eq(p->ctx, d->ctx)) fail("premise context differs");
        if (!d->sub->gamma.pairs.empty()) fail("certificate must have empty assumptions");
        if (!alpha_eq_type(d->sub->lhs, p->type)) fail("certificate lhs is not the premise type");
        if (!alpha_eq_type(d->sub->rhs, d->type)) fail("certificate rhs is not the type");
        CheckResult sres = check_subderiv(d->sub);
        if (!sres.ok) {
            for (auto& m : sres.diagnostics) res.diagnostics.push_back("[" + path + " sub] " + m);
            res.ok = false;
        }
        break;
    }
    case TypRule::ArrowI: {
        if (!need_premises(1)) break;
        if (d->subject->kind != TmKind::Lam || d->type->kind != TyKind::Arrow) {
            fail("subject must be an abstraction at an arrow type");
            break;
        }
        const auto& p = d->premises[0];
        if (!alpha_eq_term(p->subject, d->subject->a)) fail("premise subject is not the body");
        if (!alpha_eq_type(p->type, d->type->b)) fail("premise type is not the codomain");
        auto want = union_ctx(d->ctx, Ctx{{d->subject->name, d->type->a}});
        if (!want) fail("binder clashes with the context");
        else if (!ctx_eq(p->ctx, *want)) fail("premise context is not Γ ∪ {x:A}");
        break;
    }
    case TypRule::ArrowE: {
        if (!need_premises(2)) break;
        if (d->subject->kind != TmKind::App) {
            fail("subject must be an application");
            break;
        }
        const auto& p1 = d->premises[0];
        const auto& p2 = d->premises[1];
        if (!alpha_eq_term(p1->subject, d->subject->a)) fail("function premise subject differs");
        if (!alpha_eq_term(p2->subject, d->subject->b)) fail("argument premise subject differs");
        if (p1->type->kind != TyKind::Arrow) {
            fail("function premise must have an arrow type");
            break;
        }
        if (!alpha_eq_type(p1->type->b, d->type)) fail("codomain differs from the type");
        if (!alpha_eq_type(p1->type->a, p2->type)) fail("argument type mismatch");
        auto u = union_ctx(p1->ctx, p2->ctx);
        if (!u) fail("premise contexts do not union");
        else if (!ctx_eq(*u, d->ctx)) fail("context is not the premise union");
        break;
    }
    }

    for (size_t i = 0; i < d->premises.size(); ++i)
        check_typ_rec(d->premises[i], path + "." + std::to_string(i), res);
}

} // namespace

CheckResult check_typderiv(const TypDerivPtr& d) {
    CheckResult res;
    if (!d) {
        res.fail("null derivation");
        return res;
    }
    check_typ_rec(d, "0", res);
    return res;
}

// ---------------------------------------------------------------------------
// Structural transformations
// ---------------------------------------------------------------------------

static std::set<std::string> ctx_vars(const Ctx& g) {
    std::set<std::string> out;
    for (const auto& [x, t] : g) out.insert(x);
    return out;
}

TypDerivPtr typ_rename(const TypDerivPtr& d, const std::string& x, const std::string& y) {
    if (x == y) return d;
    Ctx g;
    for (const auto& [z, t] : d->ctx) g.emplace(z == x ? y : z, t);
    Tm subj = subst_term(d->subject, x, tmvar(y));
    switch (d->rule) {
    case TypRule::Var:
        return make_typ(TypRule::Var, std::move(g), subj, d->type);
    case TypRule::TopI:
        return make_typ(TypRule::TopI, std::move(g), subj, d->type);
    case TypRule::Shift:
        return make_typ(TypRule::Shift, std::move(g), subj, d->type,
                        {typ_rename(d->premises[0], x, y)});
    case TypRule::Subsume:
        return make_typ(TypRule::Subsume, std::move(g), subj, d->type,
                        {typ_rename(d->premises[0], x, y)}, d->sub);
    case TypRule::ArrowE:
        return make_typ(TypRule::ArrowE, std::move(g), subj, d->type,
                        {typ_rename(d->premises[0], x, y), typ_rename(d->premises[1], x, y)});
    case TypRule::ArrowI: {
        TypDerivPtr p = d->premises[0];
        std::string binder = d->subject->name;
        if (binder == x || binder == y) {
            std::set<std::string> avoid = ctx_vars(p->ctx);
            avoid.insert(x);
            avoid.insert(y);
            for (const auto& v : free_vars(p->subject)) avoid.insert(v);
            std::string nb = fresh_var(binder, avoid);
            p = typ_rename(p, binder, nb);
            binder = nb;
        }
        TypDerivPtr p2 = typ_rename(p, x, y);
        return make_typ(TypRule::ArrowI, std::move(g), lam(binder, p2->subject), d->type, {p2});
    }
    }
    return d;
}

TypDerivPtr typ_weaken(const TypDerivPtr& d, const std::string& x, const Ty& a) {
    auto it = d->ctx.find(x);
    if (it != d->ctx.end()) {
        assert(alpha_eq_type(it->second, a));
        return d;
    }
    Ctx g = d->ctx;
    g.emplace(x, a);
    switch (d->rule) {
    case TypRule::Var:
        return make_typ(TypRule::Var, std::move(g), d->subject, d->type);
    case TypRule::TopI:
        return make_typ(TypRule::TopI, std::move(g), d->subject, d->type);
    case TypRule::Shift:
        return make_typ(TypRule::Shift, std::move(g), d->subject, d->type,
                        {typ_weaken(d->premises[0], x, later(a))});
    case TypRule::Subsume:
        return make_typ(TypRule::Subsume, std::move(g), d->subject, d->type,
                        {typ_weaken(d->premises[0], x, a)}, d->sub);
    case TypRule::ArrowE:
        return make_typ(TypRule::ArrowE, std::move(g), d->subject, d->type,
                        {typ_weaken(d->premises[0], x, a), typ_weaken(d->premises[1], x, a)});
    case TypRule::ArrowI: {
        TypDerivPtr p = d->premises[0];
        std::string binder = d->subject->name;
        Tm subj = d->subject;
        if (binder == x) {
            std::set<std::string> avoid = ctx_vars(p->ctx);
            avoid.insert(x);
            for (const auto& v : free_vars(p->subject)) avoid.insert(v);
            std::string nb = fresh_var(binder, avoid);
            p = typ_rename(p, binder, nb);
            binder = nb;
            subj = lam(binder, p->subject);
        }
        return make_typ(TypRule::ArrowI, std::move(g), subj, d->type,
                        {typ_weaken(p, x, a)});
    }
    }
    return d;
}

TypDerivPtr typ_weaken_ctx(const TypDerivPtr& d, const Ctx& target) {
    TypDerivPtr cur = d;
    for (const auto& [x, t] : target)
        if (!cur->ctx.count(x)) cur = typ_weaken(cur, x, t);
    return cur;
}

TypDerivPtr typ_erase(const TypDerivPtr& d, const std::string& x) {
    if (!d->ctx.count(x)) return d;
    assert(!free_vars(d->subject).count(x));
    Ctx g = d->ctx;
    g.erase(x);
    switch (d->rule) {
    case TypRule::Var:
        return make_typ(TypRule::Var, std::move(g), d->subject, d->type);
    case TypRule::TopI:
        return make_typ(TypRule::TopI, std::move(g), d->subject, d->type);
    case TypRule::Shift:
        return make_typ(TypRule::Shift, std::move(g), d->subject, d->type,
                        {typ_erase(d->premises[0], x)});
    case TypRule::Subsume:
        return make_typ(TypRule::Subsume, std::move(g), d->subject, d->type,
                        {typ_erase(d->premises[0], x)}, d->sub);
    case TypRule::ArrowE:
        return make_typ(TypRule::ArrowE, std::move(g), d->subject, d->type,
                        {typ_erase(d->premises[0], x), typ_erase(d->premises[1], x)});
    case TypRule::ArrowI: {
        if (d->subject->name == x)
            // the premise's x is the λ-binder's own binding; leave it
            return make_typ(TypRule::ArrowI, std::move(g), d->subject, d->type, {d->premises[0]});
        return make_typ(TypRule::ArrowI, std::move(g), d->subject, d->type,
                        {typ_erase(d->premises[0], x)});
    }
    }
    return d;
}

TypDerivPtr typ_separate(const TypDerivPtr& d, const std::string& x, const std::string& y) {
    auto it = d->ctx.find(x);
    assert(it != d->ctx.end());
    Ty a = it->second;
    return typ_weaken(typ_rename(d, x, y), x, a);
}

// ---------------------------------------------------------------------------
// nec
// ---------------------------------------------------------------------------

TypDerivPtr elab_nec(const TypDerivPtr& d, const Ctx& extra) {
    auto target = union_ctx(later_ctx(d->ctx), extra);
    if (!target) throw std::invalid_argument("elab_nec: ill-formed context union");
    switch (d->rule) {
    case TypRule::Var:
        return make_typ(TypRule::Var, *target, d->subject, later(d->type));
    case TypRule::Shift: {
        TypDerivPtr p = elab_nec(d->premises[0], later_ctx(extra));
        return make_typ(TypRule::Shift, *target, d->subject, later(d->type), {p});
    }
    case TypRule::TopI: {
        TypDerivPtr t = make_typ(TypRule::TopI, *target, d->subject, top());
        return make_typ(TypRule::Subsume, *target, d->subject, later(top()), {t},
                        sub_reflex({}, top(), later(top())));
    }
    case TypRule::Subsume: {
        TypDerivPtr p = elab_nec(d->premises[0], extra);
        return make_typ(TypRule::Subsume, *target, d->subject, later(d->type), {p},
                        sub_later_mono(d->sub, 1));
    }
    case TypRule::ArrowI: {
        TypDerivPtr p = d->premises[0];
        std::string binder = d->subject->name;
        if (extra.count(binder)) {
            std::set<std::string> avoid = ctx_vars(p->ctx);
            for (const auto& [v, t] : extra) avoid.insert(v);
            for (const auto& v : free_vars(p->subject)) avoid.insert(v);
            std::string nb = fresh_var(binder, avoid);
            p = typ_rename(p, binder, nb);
            binder = nb;
        }
        TypDerivPtr pn = elab_nec(p, extra);
        Ty arr = arrow(later(d->type->a), later(d->type->b));
        Tm subj = lam(binder, p->subject);
        TypDerivPtr ai = make_typ(TypRule::ArrowI, *target, subj, arr, {pn});
        return make_typ(TypRule::Subsume, *target, subj, later(d->type), {ai},
                        sub_reflex({}, arr, later(d->type)));
    }
    case TypRule::ArrowE: {
        TypDerivPtr p1 = elab_nec(d->premises[0], extra);
        TypDerivPtr p2 = elab_nec(d->premises[1], extra);
        Ty funTy = d->premises[0]->type; // B → A
        Ty split = arrow(later(funTy->a), later(funTy->b));
        TypDerivPtr s = make_typ(TypRule::Subsume, p1->ctx, p1->subject, split, {p1},
                                 sub_reflex({}, later(funTy), split));
        return make_typ(TypRule::ArrowE, *target, d->subject, later(d->type), {s, p2});
    }
    }
    throw std::logic_error("elab_nec: unreachable");
}

// ---------------------------------------------------------------------------
// subst
// ---------------------------------------------------------------------------

TypDerivPtr elab_subst(const TypDerivPtr& d1, const std::string& x, const TypDerivPtr& d2) {
    auto it = d1->ctx.find(x);
    if (it == d1->ctx.end()) throw std::invalid_argument("elab_subst: variable not bound");
    if (!alpha_eq_type(it->second, d2->type))
        throw std::invalid_argument("elab_subst: argument type mismatch");

    Ctx g1 = d1->ctx;
    g1.erase(x);
    auto target = union_ctx(g1, d2->ctx);
    if (!target) throw std::invalid_argument("elab_subst: context clash");

    if (!free_vars(d1->subject).count(x))
        return typ_weaken_ctx(typ_erase(d1, x), *target);

    switch (d1->rule) {
    case TypRule::Var:
        // subject is x itself
        return typ_weaken_ctx(d2, *target);
    case TypRule::TopI:
        return make_typ(TypRule::TopI, *target, subst_term(d1->subject, x, d2->subject), top());
    case TypRule::Shift: {
        TypDerivPtr d2n = elab_nec(d2);
        TypDerivPtr p = elab_subst(d1->premises[0], x, d2n);
        return make_typ(TypRule::Shift, *target, subst_term(d1->subject, x, d2->subject),
                        d1->type, {p});
    }
    case TypRule::Subsume: {
        TypDerivPtr p = elab_subst(d1->premises[0], x, d2);
        return make_typ(TypRule::Subsume, *target, p->subject, d1->type, {p}, d1->sub);
    }
    case TypRule::ArrowI: {
        TypDerivPtr p = d1->premises[0];
        std::string binder = d1->subject->name;
        // binder == x is impossible here: x would not be free in the subject
        std::set<std::string> clash = free_vars(d2->subject);
        for (const auto& [v, t] : d2->ctx) clash.insert(v);
        if (clash.count(binder)) {
            std::set<std::string> avoid = clash;
            for (const auto& v : ctx_vars(p->ctx)) avoid.insert(v);
            for (const auto& v : free_vars(p->subject)) avoid.insert(v);
            std::string nb = fresh_var(binder, avoid);
            p = typ_rename(p, binder, nb);
            binder = nb;
        }
        TypDerivPtr ps = elab_subst(p, x, d2);
        return make_typ(TypRule::ArrowI, *target, lam(binder, ps->subject), d1->type, {ps});
    }
    case TypRule::ArrowE: {
        TypDerivPtr p1 = typ_weaken_ctx(d1->premises[0], d1->ctx);
        TypDerivPtr p2 = typ_weaken_ctx(d1->premises[1], d1->ctx);
        TypDerivPtr s1 = elab_subst(p1, x, d2);
        TypDerivPtr s2 = elab_subst(p2, x, d2);
        return make_typ(TypRule::ArrowE, *target, app(s1->subject, s2->subject), d1->type,
                        {s1, s2});
    }
    }
    throw std::logic_error("elab_subst: unreachable");
}

// ---------------------------------------------------------------------------
// Context subsumption (Γ' ⪯ Γ)
// ---------------------------------------------------------------------------

TypDerivPtr typ_ctx_subsume(const TypDerivPtr& d, const std::string& x, const SubDerivPtr& cert) {
    auto it = d->ctx.find(x);
    if (it == d->ctx.end() || !alpha_eq_type(cert->rhs, it->second))
        throw std::invalid_argument("typ_ctx_subsume: certificate does not match the binding");
    std::set<std::string> avoid = ctx_vars(d->ctx);
    for (const auto& v : free_vars(d->subject)) avoid.insert(v);
    std::string y = fresh_var(x + "w", avoid);
    Ctx yctx{{y, cert->lhs}};
    TypDerivPtr var = make_typ(TypRule::Var, yctx, tmvar(y), cert->lhs);
    TypDerivPtr sub = make_typ(TypRule::Subsume, yctx, tmvar(y), cert->rhs, {var}, cert);
    TypDerivPtr s = elab_subst(d, x, sub);
    return typ_rename(s, y, x);
}

// ---------------------------------------------------------------------------
// Subject reduction
// ---------------------------------------------------------------------------

namespace {

// anti-abstraction: from a valid derivation of Γ ⊢ λx.M : A with A ≄ ⊤,
// a premise-level derivation •ⁿΓ ∪ {x:B} ⊢ M : C with ∅ ⊢ B→C ⪯ •ⁿA.
struct AntiAbst {
    int n = 0;
    TypDerivPtr body; // •ⁿΓ ∪ {x:B} ⊢ M : C
    SubDerivPtr cert; // ∅ ⊢ B → C ⪯ •ⁿA
};

AntiAbst anti_abstract(const TypDerivPtr& d) {
    switch (d->rule) {
    case TypRule::ArrowI: {
        AntiAbst r;
        r.n = 0;
        r.body = d->premises[0];
        r.cert = sub_reflex({}, d->type, d->type);
        return r;
    }
    case TypRule::Shift: {
        AntiAbst r = anti_abstract(d->premises[0]);
        ++r.n; // •^{n'}(•A) reads as •^{n'+1}A; the certificate is unchanged
        return r;
    }
    case TypRule::Subsume: {
        AntiAbst r = anti_abstract(d->premises[0]);
        r.cert = sub_trans(r.cert, sub_later_mono(d->sub, r.n));
        return r;
    }
    case TypRule::TopI:
        throw std::logic_error("anti_abstract: ⊤-typed abstraction");
    default:
        throw std::logic_error("anti_abstract: subject is not an abstraction");
    }
}

TypDerivPtr contract_redex(const TypDerivPtr& d) {
    // d is an ArrowE node whose function premise types λx.L' at B → A.
    const TypDerivPtr& p1 = d->premises[0];
    const TypDerivPtr& p2 = d->premises[1];
    assert(p1->subject->kind == TmKind::Lam);
    const std::string& x = p1->subject->name;
    Tm reduct = subst_term(p1->subject->a, x, p2->subject);

    if (is_top_variant(d->type)) {
        TypDerivPtr t = make_typ(TypRule::TopI, d->ctx, reduct, top());
        if (alpha_eq_type(d->type, top())) return t;
        return make_typ(TypRule::Subsume, d->ctx, reduct, d->type, {t},
                        sub_reflex({}, top(), d->type));
    }

    Ty funTy = p1->type;                 // B → A (with A = d->type)
    AntiAbst aa = anti_abstract(p1);     // •ⁿΓ₁ ∪ {x:B'} ⊢ L' : C'
    Ty bPrime = aa.cert->lhs->a;
    Ty cPrime = aa.cert->lhs->b;
    int n = aa.n;

    SubInversion inv = invert_arrow_sub(aa.cert);
    int k = inv.k;
    Ty nB = laters(funTy->a, n);
    Ty nA = laters(funTy->b, n);

    // ∅ ⊢ •ⁿB ⪯ •ᵏB'
    SubDerivPtr dA = inv.dom;
    if (!alpha_eq_type(inv.e, nB)) dA = sub_trans(sub_reflex({}, nB, inv.e), dA);
    // ∅ ⊢ •ᵏC' ⪯ •ⁿA
    SubDerivPtr dB = inv.cod;
    if (!alpha_eq_type(inv.f, nA)) dB = sub_trans(dB, sub_reflex({}, inv.f, nA));

    // body: •^{n+k}Γ₁ ∪ {x:•ᵏB'} ⊢ L' : •ᵏC'
    TypDerivPtr body = aa.body;
    for (int i = 0; i < k; ++i) body = elab_nec(body);
    // lower the context back to •ⁿΓ₁ through  •ⁿT ⪯ •ᵏ(•ⁿT)
    if (k > 0) {
        Ctx gammaN = later_ctx(p1->ctx, n);
        for (const auto& [z, t] : gammaN) {
            if (z == x) continue;
            SubDerivPtr c = sub_approx_chain({}, t, k);
            if (!alpha_eq_type(c->rhs, laters(t, k)))
                c = sub_trans(c, sub_reflex({}, c->rhs, laters(t, k)));
            body = typ_ctx_subsume(body, z, c);
        }
    }

    // argument: •ⁿΓ₂ ⊢ M₂ : •ᵏB'
    TypDerivPtr arg = p2;
    for (int i = 0; i < n; ++i) arg = elab_nec(arg);
    if (!(k == 0 && alpha_eq_type(dA->lhs, dA->rhs)))
        arg = make_typ(TypRule::Subsume, arg->ctx, arg->subject, dA->rhs, {arg}, dA);

    TypDerivPtr out = elab_subst(body, x, arg); // •ⁿΓ ⊢ L'[M₂/x] : •ᵏC'
    out = make_typ(TypRule::Subsume, out->ctx, out->subject, nA, {out}, dB);
    for (int i = n - 1; i >= 0; --i) {
        Ctx g = later_ctx(d->ctx, i);
        out = make_typ(TypRule::Shift, std::move(g), out->subject, laters(funTy->b, i), {out});
    }
    return out;
}

} // namespace

namespace {

Tm reduce_term_at(const Tm& t, const std::vector<int>& path, size_t i) {
    if (i == path.size()) {
        if (t->kind != TmKind::App || t->a->kind != TmKind::Lam)
            throw std::invalid_argument("subject_reduce: path is not a redex");
        return subst_term(t->a->a, t->a->name, t->b);
    }
    int step = path[i];
    if (t->kind == TmKind::Lam && step == 0) return lam(t->name, reduce_term_at(t->a, path, i + 1));
    if (t->kind == TmKind::App && step == 0) return app(reduce_term_at(t->a, path, i + 1), t->b);
    if (t->kind == TmKind::App && step == 1) return app(t->a, reduce_term_at(t->b, path, i + 1));
    throw std::invalid_argument("subject_reduce: bad path");
}

TypDerivPtr reduce_rec(const TypDerivPtr& cur, const std::vector<int>& path, size_t at) {
    switch (cur->rule) {
    case TypRule::TopI:
        return make_typ(TypRule::TopI, cur->ctx, reduce_term_at(cur->subject, path, at), top());
    case TypRule::Shift: {
        TypDerivPtr p = reduce_rec(cur->premises[0], path, at);
        return make_typ(TypRule::Shift, cur->ctx, p->subject, cur->type, {p});
    }
    case TypRule::Subsume: {
        TypDerivPtr p = reduce_rec(cur->premises[0], path, at);
        return make_typ(TypRule::Subsume, cur->ctx, p->subject, cur->type, {p}, cur->sub);
    }
    case TypRule::ArrowI: {
        if (at >= path.size() || path[at] != 0)
            throw std::invalid_argument("subject_reduce: bad path at abstraction");
        TypDerivPtr p = reduce_rec(cur->premises[0], path, at + 1);
        return make_typ(TypRule::ArrowI, cur->ctx, lam(cur->subject->name, p->subject),
                        cur->type, {p});
    }
    case TypRule::ArrowE: {
        if (at == path.size()) return contract_redex(cur);
        if (path[at] == 0) {
            TypDerivPtr p = reduce_rec(cur->premises[0], path, at + 1);
            return make_typ(TypRule::ArrowE, cur->ctx, app(p->subject, cur->premises[1]->subject),
                            cur->type, {p, cur->premises[1]});
        }
        if (path[at] == 1) {
            TypDerivPtr p = reduce_rec(cur->premises[1], path, at + 1);
            return make_typ(TypRule::ArrowE, cur->ctx, app(cur->premises[0]->subject, p->subject),
                            cur->type, {cur->premises[0], p});
        }
        throw std::invalid_argument("subject_reduce: bad path at application");
    }
    case TypRule::Var:
        throw std::invalid_argument("subject_reduce: path leads into a variable");
    }
    throw std::logic_error("subject_reduce: unreachable");
}

} // namespace

TypDerivPtr subject_reduce(const TypDerivPtr& d, const std::vector<int>& path) {
    return reduce_rec(d, path, 0);
}

// ---------------------------------------------------------------------------
// Curry's Y
// ---------------------------------------------------------------------------

TypDerivPtr y_combinator_derivation(const Ty& t) {
    std::set<std::string> avoid = free_tvars(t);
    std::string r = fresh_tvar("R", avoid);
    Ty a = mu(r, arrow(later(tvar(r)), t)); // A = μR.•R → t
    Ty la = later(a);
    Ty ft = arrow(later(t), t); // •t → t

    Tm f = tmvar("f");
    Tm x = tmvar("x");
    Tm inner = lam("x", app(f, app(x, x))); // λx.f (x x)

    Ctx cf{{"f", ft}};
    Ctx cx{{"x", la}};
    Ctx cfx{{"f", ft}, {"x", la}};

    TypDerivPtr vx1 = make_typ(TypRule::Var, cx, x, la);
    Ty funShape = arrow(later(la), later(t)); // ••A → •t
    TypDerivPtr s1 =
        make_typ(TypRule::Subsume, cx, x, funShape, {vx1}, sub_reflex({}, la, funShape));
    TypDerivPtr vx2 = make_typ(TypRule::Var, cx, x, la);
    TypDerivPtr s2 = make_typ(TypRule::Subsume, cx, x, later(la), {vx2},
                              make_sub(SubRule::Approx, {}, la, later(la)));
    TypDerivPtr e1 = make_typ(TypRule::ArrowE, cx, app(x, x), later(t), {s1, s2});
    TypDerivPtr vf = make_typ(TypRule::Var, cf, f, ft);
    TypDerivPtr e2 = make_typ(TypRule::ArrowE, cfx, app(f, app(x, x)), t, {vf, e1});
    TypDerivPtr pi = make_typ(TypRule::ArrowI, cf, inner, arrow(la, t), {e2});

    SubDerivPtr fold = sub_reflex({}, arrow(la, t), a); // •A→t ≃ A
    SubDerivPtr toLa = sub_trans(fold, make_sub(SubRule::Approx, {}, a, la));
    TypDerivPtr s3 = make_typ(TypRule::Subsume, cf, inner, la, {pi}, toLa);
    TypDerivPtr e3 = make_typ(TypRule::ArrowE, cf, app(inner, inner), t, {pi, s3});
    return make_typ(TypRule::ArrowI, {}, lam("f", app(inner, inner)), arrow(ft, t), {e3});
}

} // namespace lamu
