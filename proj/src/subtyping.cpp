#include "lamu/subtyping.hpp"

#include <algorithm>
#include <cassert>

namespace lamu {

// ---------------------------------------------------------------------------
// SubAssump
// ---------------------------------------------------------------------------

SubAssump SubAssump::of(std::vector<std::pair<std::string, std::string>> ps) {
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    return SubAssump{std::move(ps)};
}

bool SubAssump::contains(const std::string& x, const std::string& y) const {
    return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(x, y));
}

bool SubAssump::well_formed() const {
    std::set<std::string> seen;
    for (const auto& [x, y] : pairs) {
        if (!seen.insert(x).second) return false;
        if (!seen.insert(y).second) return false;
    }
    return true;
}

bool SubAssump::subset_of(const SubAssump& o) const {
    for (const auto& p : pairs)
        if (!std::binary_search(o.pairs.begin(), o.pairs.end(), p)) return false;
    return true;
}

std::set<std::string> SubAssump::vars() const {
    std::set<std::string> out;
    for (const auto& [x, y] : pairs) {
        out.insert(x);
        out.insert(y);
    }
    return out;
}

bool operator==(const SubAssump& a, const SubAssump& b) { return a.pairs == b.pairs; }

std::optional<SubAssump> union_assump(const SubAssump& a, const SubAssump& b) {
    std::vector<std::pair<std::string, std::string>> ps = a.pairs;
    ps.insert(ps.end(), b.pairs.begin(), b.pairs.end());
    SubAssump u = SubAssump::of(std::move(ps));
    if (!u.well_formed()) return std::nullopt;
    return u;
}

static std::string assump_key(const SubAssump& g) {
    std::string k;
    for (const auto& [x, y] : g.pairs) {
        k += x;
        k += '<';
        k += y;
        k += ';';
    }
    return k;
}

// ---------------------------------------------------------------------------
// Construction / checking
// ---------------------------------------------------------------------------

SubDerivPtr make_sub(SubRule rule, SubAssump gamma, Ty lhs, Ty rhs,
                     std::vector<SubDerivPtr> premises) {
    return std::make_shared<SubDeriv>(
        SubDeriv{rule, std::move(gamma), std::move(lhs), std::move(rhs), std::move(premises)});
}

static const char* sub_rule_name(SubRule r) {
    switch (r) {
    case SubRule::Assump: return "assump";
    case SubRule::TopR: return "top";
    case SubRule::Reflex: return "reflex";
    case SubRule::Trans: return "trans";
    case SubRule::LaterMono: return "later-mono";
    case SubRule::ArrowMono: return "arrow-mono";
    case SubRule::MuAmber: return "mu-amber";
    case SubRule::Approx: return "approx";
    }
    return "?";
}

namespace {

void check_sub_rec(const SubDerivPtr& d, const std::string& path, CheckResult& res) {
    auto fail = [&](const std::string& msg) {
        res.fail("[" + path + " " + sub_rule_name(d->rule) + "] " + msg);
    };
    if (!d->gamma.well_formed()) fail("assumption set repeats a variable");

    auto need_premises = [&](size_t n) {
        if (d->premises.size() != n) {
            fail("expected " + std::to_string(n) + " premises");
            return false;
        }
        return true;
    };

    switch (d->rule) {
    case SubRule::Assump: {
        if (!need_premises(0)) break;
        if (d->lhs->kind != TyKind::Var || d->rhs->kind != TyKind::Var)
            fail("sides must be type variables");
        else if (!d->gamma.contains(d->lhs->name, d->rhs->name))
            fail("pair not in the assumption set");
        break;
    }
    case SubRule::TopR: {
        if (!need_premises(0)) break;
        if (!alpha_eq_type(d->rhs, top())) fail("right side must be Top");
        break;
    }
    case SubRule::Reflex: {
        if (!need_premises(0)) break;
        if (!type_eq(d->lhs, d->rhs, EqMode::Sim)) fail("sides are not ≃-equal");
        break;
    }
    case SubRule::Trans: {
        if (!need_premises(2)) break;
        const auto& p1 = d->premises[0];
        const auto& p2 = d->premises[1];
        if (!alpha_eq_type(p1->lhs, d->lhs)) fail("left premise does not start at lhs");
        if (!alpha_eq_type(p2->rhs, d->rhs)) fail("right premise does not end at rhs");
        if (!alpha_eq_type(p1->rhs, p2->lhs)) fail("middle types disagree");
        auto u = union_assump(p1->gamma, p2->gamma);
        if (!u) fail("premise assumption sets do not union");
        else if (!(*u == d->gamma)) fail("conclusion assumptions are not the union");
        break;
    }
    case SubRule::LaterMono: {
        if (!need_premises(1)) break;
        if (d->lhs->kind != TyKind::Later || d->rhs->kind != TyKind::Later) {
            fail("sides must both be bulleted");
            break;
        }
        const auto& p = d->premises[0];
        if (!alpha_eq_type(p->lhs, d->lhs->a) || !alpha_eq_type(p->rhs, d->rhs->a))
            fail("premise does not match the bodies");
        if (!(p->gamma == d->gamma)) fail("assumption set changed");
        break;
    }
    case SubRule::ArrowMono: {
        if (!need_premises(2)) break;
        if (d->lhs->kind != TyKind::Arrow || d->rhs->kind != TyKind::Arrow) {
            fail("sides must both be arrows");
            break;
        }
        const auto& p1 = d->premises[0]; // rhs.dom ⪯ lhs.dom
        const auto& p2 = d->premises[1]; // lhs.cod ⪯ rhs.cod
        if (!alpha_eq_type(p1->lhs, d->rhs->a) || !alpha_eq_type(p1->rhs, d->lhs->a))
            fail("contravariant premise mismatch");
        if (!alpha_eq_type(p2->lhs, d->lhs->b) || !alpha_eq_type(p2->rhs, d->rhs->b))
            fail("covariant premise mismatch");
        auto u = union_assump(p1->gamma, p2->gamma);
        if (!u) fail("premise assumption sets do not union");
        else if (!(*u == d->gamma)) fail("conclusion assumptions are not the union");
        break;
    }
    case SubRule::MuAmber: {
        if (!need_premises(1)) break;
        if (d->lhs->kind != TyKind::Mu || d->rhs->kind != TyKind::Mu) {
            fail("sides must both be mu types");
            break;
        }
        const auto& p = d->premises[0];
        // exactly one pair beyond the conclusion's assumptions
        std::vector<std::pair<std::string, std::string>> extra;
        for (const auto& pr : p->gamma.pairs)
            if (!d->gamma.contains(pr.first, pr.second)) extra.push_back(pr);
        if (extra.size() != 1 || p->gamma.pairs.size() != d->gamma.pairs.size() + 1) {
            fail("premise must extend the assumptions by exactly one pair");
            break;
        }
        const auto& [x, y] = extra[0];
        std::set<std::string> gvars = d->gamma.vars();
        if (gvars.count(x) || gvars.count(y)) fail("amber pair not fresh for assumptions");
        auto ftvB = free_tvars(p->rhs);
        auto ftvA = free_tvars(p->lhs);
        if (ftvB.count(x)) fail("left binder occurs free in the right body");
        if (ftvA.count(y)) fail("right binder occurs free in the left body");
        bool properL = is_proper(p->lhs, x);
        bool properR = is_proper(p->rhs, y);
        if (!properL) fail("left body not proper in its binder");
        if (!properR) fail("right body not proper in its binder");
        if (properL && !alpha_eq_type(mu(x, p->lhs), d->lhs))
            fail("left mu does not match premise body");
        if (properR && !alpha_eq_type(mu(y, p->rhs), d->rhs))
            fail("right mu does not match premise body");
        break;
    }
    case SubRule::Approx: {
        if (!need_premises(0)) break;
        if (d->rhs->kind != TyKind::Later || !alpha_eq_type(d->rhs->a, d->lhs))
            fail("right side must be the bulleted left side");
        break;
    }
    }

    for (size_t i = 0; i < d->premises.size(); ++i)
        check_sub_rec(d->premises[i], path + "." + std::to_string(i), res);
}

} // namespace

CheckResult check_subderiv(const SubDerivPtr& d) {
    CheckResult res;
    if (!d) {
        res.fail("null derivation");
        return res;
    }
    check_sub_rec(d, "0", res);
    return res;
}

// ---------------------------------------------------------------------------
// Small constructors
// ---------------------------------------------------------------------------

SubDerivPtr sub_reflex(SubAssump gamma, Ty a, Ty b) {
    return make_sub(SubRule::Reflex, std::move(gamma), std::move(a), std::move(b));
}

SubDerivPtr sub_trans(const SubDerivPtr& a, const SubDerivPtr& b) {
    auto u = union_assump(a->gamma, b->gamma);
    assert(u);
    return make_sub(SubRule::Trans, *u, a->lhs, b->rhs, {a, b});
}

SubDerivPtr sub_approx_chain(SubAssump gamma, Ty a, int k) {
    assert(k >= 1);
    SubDerivPtr d = make_sub(SubRule::Approx, gamma, a, later(a));
    Ty cur = later(a);
    for (int i = 1; i < k; ++i) {
        SubDerivPtr step = make_sub(SubRule::Approx, gamma, cur, later(cur));
        d = sub_trans(d, step);
        cur = later(cur);
    }
    return d;
}

SubDerivPtr sub_later_mono(const SubDerivPtr& d, int k) {
    SubDerivPtr cur = d;
    for (int i = 0; i < k; ++i)
        cur = make_sub(SubRule::LaterMono, cur->gamma, later(cur->lhs), later(cur->rhs), {cur});
    return cur;
}

// ---------------------------------------------------------------------------
// Generic derivation transformation
// ---------------------------------------------------------------------------

namespace {

enum class PairAction { Rename, Instantiate, Substitute, None };

struct WalkCtx {
    std::vector<std::pair<std::string, Ty>> sigma;
    std::optional<std::pair<std::string, std::string>> drop;
    PairAction action = PairAction::None;
    std::pair<std::string, std::string> renameTo;
    Ty instType;
    SubDerivPtr replacement;
    SubAssump extra;
    std::set<std::string> avoid;
};

Ty apply_sigma(const WalkCtx& ctx, const Ty& t) {
    return ctx.sigma.empty() ? t : subst_type(t, ctx.sigma);
}

SubAssump transform_gamma(const WalkCtx& ctx, const SubAssump& g) {
    std::vector<std::pair<std::string, std::string>> ps;
    for (const auto& p : g.pairs) {
        if (ctx.drop && p == *ctx.drop) {
            if (ctx.action == PairAction::Rename) ps.push_back(ctx.renameTo);
            continue;
        }
        ps.push_back(p);
    }
    for (const auto& p : ctx.extra.pairs) ps.push_back(p);
    return SubAssump::of(std::move(ps));
}

SubDerivPtr walk(const SubDerivPtr& d, const WalkCtx& ctx);

SubDerivPtr walk_amber(const SubDerivPtr& d, const WalkCtx& ctx) {
    // locate the amber pair
    const auto& p = d->premises[0];
    std::pair<std::string, std::string> amber;
    for (const auto& pr : p->gamma.pairs)
        if (!d->gamma.contains(pr.first, pr.second)) {
            amber = pr;
            break;
        }
    SubDerivPtr prem = p;
    std::set<std::string> clash = ctx.avoid;
    if (ctx.drop) {
        clash.insert(ctx.drop->first);
        clash.insert(ctx.drop->second);
    }
    if (clash.count(amber.first) || clash.count(amber.second)) {
        std::set<std::string> avoid = clash;
        for (const auto& v : p->gamma.vars()) avoid.insert(v);
        for (const auto& v : free_tvars(p->lhs)) avoid.insert(v);
        for (const auto& v : free_tvars(p->rhs)) avoid.insert(v);
        std::string nx = fresh_tvar(amber.first + "a", avoid);
        avoid.insert(nx);
        std::string ny = fresh_tvar(amber.second + "a", avoid);
        prem = sub_rename(prem, amber.first, amber.second, nx, ny);
    }
    return make_sub(SubRule::MuAmber, transform_gamma(ctx, d->gamma), apply_sigma(ctx, d->lhs),
                    apply_sigma(ctx, d->rhs), {walk(prem, ctx)});
}

SubDerivPtr walk(const SubDerivPtr& d, const WalkCtx& ctx) {
    SubAssump g = transform_gamma(ctx, d->gamma);
    Ty lhs = apply_sigma(ctx, d->lhs);
    Ty rhs = apply_sigma(ctx, d->rhs);
    switch (d->rule) {
    case SubRule::Assump: {
        std::pair<std::string, std::string> pr{d->lhs->name, d->rhs->name};
        if (ctx.drop && pr == *ctx.drop) {
            switch (ctx.action) {
            case PairAction::Rename:
                return make_sub(SubRule::Assump, g, tvar(ctx.renameTo.first),
                                tvar(ctx.renameTo.second));
            case PairAction::Instantiate:
                return sub_reflex(g, ctx.instType, ctx.instType);
            case PairAction::Substitute:
                return sub_weaken(ctx.replacement, g);
            case PairAction::None:
                break;
            }
        }
        return make_sub(SubRule::Assump, g, lhs, rhs);
    }
    case SubRule::TopR:
        return make_sub(SubRule::TopR, g, lhs, top());
    case SubRule::Reflex:
        return make_sub(SubRule::Reflex, g, lhs, rhs);
    case SubRule::Approx:
        return make_sub(SubRule::Approx, g, lhs, later(lhs));
    case SubRule::Trans:
    case SubRule::LaterMono:
    case SubRule::ArrowMono: {
        std::vector<SubDerivPtr> prems;
        prems.reserve(d->premises.size());
        for (const auto& p : d->premises) prems.push_back(walk(p, ctx));
        return make_sub(d->rule, g, lhs, rhs, std::move(prems));
    }
    case SubRule::MuAmber:
        return walk_amber(d, ctx);
    }
    return d;
}

} // namespace

SubDerivPtr sub_rename(const SubDerivPtr& d, const std::string& x, const std::string& y,
                       const std::string& x2, const std::string& y2) {
    WalkCtx ctx;
    ctx.sigma = {{x, tvar(x2)}, {y, tvar(y2)}};
    ctx.drop = {{x, y}};
    ctx.action = PairAction::Rename;
    ctx.renameTo = {x2, y2};
    ctx.avoid = {x, y, x2, y2};
    return walk(d, ctx);
}

SubDerivPtr sub_weaken(const SubDerivPtr& d, const SubAssump& gammaPrime) {
    if (d->gamma == gammaPrime) return d;
    std::vector<std::pair<std::string, std::string>> extra;
    for (const auto& p : gammaPrime.pairs)
        if (!d->gamma.contains(p.first, p.second)) extra.push_back(p);
    WalkCtx ctx;
    ctx.extra = SubAssump::of(std::move(extra));
    ctx.avoid = gammaPrime.vars();
    return walk(d, ctx);
}

SubDerivPtr sub_instantiate(const SubDerivPtr& d, const std::string& x, const std::string& y,
                            const Ty& c) {
    WalkCtx ctx;
    ctx.sigma = {{x, c}, {y, c}};
    ctx.drop = {{x, y}};
    ctx.action = PairAction::Instantiate;
    ctx.instType = c;
    ctx.avoid = free_tvars(c);
    ctx.avoid.insert(x);
    ctx.avoid.insert(y);
    return walk(d, ctx);
}

SubDerivPtr sub_substitute(const SubDerivPtr& d, const std::string& x, const std::string& y,
                           const SubDerivPtr& cd) {
    WalkCtx ctx;
    ctx.sigma = {{x, cd->lhs}, {y, cd->rhs}};
    ctx.drop = {{x, y}};
    ctx.action = PairAction::Substitute;
    ctx.replacement = cd;
    ctx.extra = cd->gamma;
    ctx.avoid = free_tvars(cd->lhs);
    for (const auto& v : free_tvars(cd->rhs)) ctx.avoid.insert(v);
    for (const auto& v : cd->gamma.vars()) ctx.avoid.insert(v);
    ctx.avoid.insert(x);
    ctx.avoid.insert(y);
    return walk(d, ctx);
}

// ---------------------------------------------------------------------------
// Prover
// ---------------------------------------------------------------------------

namespace {

struct Prover {
    SubBudget budget;
    long fuel;
    std::set<std::string> in_progress;

    explicit Prover(SubBudget b) : budget(b), fuel(b.fuel) {}

    std::optional<SubDerivPtr> prove(const SubAssump& gamma, const Ty& a, const Ty& b) {
        if (fuel-- <= 0) return std::nullopt;

        if (alpha_eq_type(b, top()))
            return make_sub(SubRule::TopR, gamma, a, b);
        if (type_eq(a, b, EqMode::Sim))
            return sub_reflex(gamma, a, b);
        if (is_top_variant(b)) {
            auto d1 = make_sub(SubRule::TopR, gamma, a, top());
            return sub_trans(d1, sub_reflex(gamma, top(), b));
        }
        {
            // B = •ᵏA up to alpha
            Ty cur = b;
            int k = 0;
            while (cur->kind == TyKind::Later) {
                cur = cur->a;
                ++k;
                if (alpha_eq_type(cur, a)) return approx_to(gamma, a, b, k);
            }
        }
        if (a->kind == TyKind::Var && b->kind == TyKind::Var &&
            gamma.contains(a->name, b->name))
            return make_sub(SubRule::Assump, gamma, a, b);

        std::string key = type_key(a) + "|" + type_key(b) + "|" + assump_key(gamma);
        if (!in_progress.insert(key).second) return std::nullopt;
        auto out = dispatch(gamma, a, b);
        in_progress.erase(key);
        return out;
    }

    // γ ⊢ A ⪯ B where B = •ᵏA syntactically (k ≥ 1); keeps B's own spelling.
    SubDerivPtr approx_to(const SubAssump& gamma, const Ty& a, const Ty& b, int k) {
        SubDerivPtr chain = sub_approx_chain(gamma, a, k);
        if (alpha_eq_type(chain->rhs, b)) return chain;
        return sub_trans(chain, sub_reflex(gamma, chain->rhs, b));
    }

    std::optional<SubDerivPtr> dispatch(const SubAssump& gamma, const Ty& a, const Ty& b) {
        // Amber rule on syntactic μ/μ
        if (a->kind == TyKind::Mu && b->kind == TyKind::Mu) {
            std::set<std::string> avoid = gamma.vars();
            for (const auto& v : free_tvars(a)) avoid.insert(v);
            for (const auto& v : free_tvars(b)) avoid.insert(v);
            std::string x = fresh_tvar(a->name, avoid);
            avoid.insert(x);
            std::string y = fresh_tvar(b->name + "'", avoid);
            Ty abody = subst_type1(a->a, a->name, tvar(x));
            Ty bbody = subst_type1(b->a, b->name, tvar(y));
            SubAssump g2 = *union_assump(gamma, SubAssump::of({{x, y}}));
            if (auto p = prove(g2, abody, bbody))
                return make_sub(SubRule::MuAmber, gamma, a, b, {*p});
        }

        CanonForm ca = canon_form(a, EqMode::Sim);
        CanonForm cb = canon_form(b, EqMode::Sim);

        if (ca.tag == CanonForm::Tag::Var && cb.tag == CanonForm::Tag::Var) {
            int m = ca.bullets, n = cb.bullets;
            if (m > n) return std::nullopt;
            bool same = ca.var == cb.var;
            if (!same && !gamma.contains(ca.var, cb.var)) return std::nullopt;
            // A ≃ •ᵐX ⪯ •ᵐY ⪯ •ⁿY ≃ B
            Ty mid1 = laters(tvar(ca.var), m);
            SubDerivPtr chain = nullptr;
            Ty cur = mid1;
            if (!alpha_eq_type(a, mid1)) chain = sub_reflex(gamma, a, mid1);
            if (!same) {
                SubDerivPtr mono = sub_later_mono(
                    make_sub(SubRule::Assump, gamma, tvar(ca.var), tvar(cb.var)), m);
                chain = chain ? sub_trans(chain, mono) : mono;
                cur = laters(tvar(cb.var), m);
            }
            if (n > m) {
                SubDerivPtr ap = sub_approx_chain(gamma, cur, n - m);
                chain = chain ? sub_trans(chain, ap) : ap;
                cur = laters(cur, n - m);
            }
            if (!alpha_eq_type(cur, b)) {
                SubDerivPtr fin = sub_reflex(gamma, cur, b);
                chain = chain ? sub_trans(chain, fin) : fin;
            }
            if (!chain) chain = sub_reflex(gamma, a, b); // both sides ≃ •ᵐX
            return chain;
        }

        if (ca.tag == CanonForm::Tag::Arr && cb.tag == CanonForm::Tag::Arr) {
            const Ty& c = ca.dom;
            const Ty& dd = ca.cod;
            const Ty& e = cb.dom;
            const Ty& f = cb.cod;
            for (int k = 0; k <= budget.max_k; ++k) {
                auto d1 = prove(gamma, e, laters(c, k));
                if (!d1) continue;
                auto d2 = prove(gamma, laters(dd, k), f);
                if (!d2) continue;
                // A ≃ C→D ⪯ •ᵏ(C→D) ≃ •ᵏC→•ᵏD ⪯ E→F ≃ B
                Ty cd_arrow = arrow(c, dd);
                Ty ef_arrow = arrow(e, f);
                Ty kk_arrow = arrow(laters(c, k), laters(dd, k));
                SubDerivPtr mono =
                    make_sub(SubRule::ArrowMono, gamma, kk_arrow, ef_arrow, {*d1, *d2});
                SubDerivPtr chain = nullptr;
                if (!alpha_eq_type(a, cd_arrow)) chain = sub_reflex(gamma, a, cd_arrow);
                if (k > 0) {
                    SubDerivPtr ap = sub_approx_chain(gamma, cd_arrow, k);
                    chain = chain ? sub_trans(chain, ap) : ap;
                    chain = sub_trans(chain, sub_reflex(gamma, laters(cd_arrow, k), kk_arrow));
                }
                chain = chain ? sub_trans(chain, mono) : mono;
                if (!alpha_eq_type(ef_arrow, b))
                    chain = sub_trans(chain, sub_reflex(gamma, ef_arrow, b));
                return chain;
            }
            return std::nullopt;
        }

        return std::nullopt;
    }
};

} // namespace

std::optional<SubDerivPtr> prove_sub(const SubAssump& gamma, const Ty& a, const Ty& b,
                                     SubBudget budget) {
    Prover p(budget);
    return p.prove(gamma, a, b);
}

// ---------------------------------------------------------------------------
// Constructive arrow inversion
// ---------------------------------------------------------------------------

SubInversion invert_arrow_sub(const SubDerivPtr& d) {
    if (is_top_variant(d->rhs))
        throw std::logic_error("invert_arrow_sub: right side is a ⊤-variant");
    CanonForm fa = canon_form(d->lhs, EqMode::Sim);
    if (fa.tag != CanonForm::Tag::Arr)
        throw std::logic_error("invert_arrow_sub: left canonical head is not an arrow");
    const Ty& c = fa.dom;
    const Ty& dd = fa.cod;

    switch (d->rule) {
    case SubRule::Assump:
    case SubRule::TopR:
        throw std::logic_error("invert_arrow_sub: impossible rule for arrow head");
    case SubRule::Reflex: {
        CanonForm fb = canon_form(d->rhs, EqMode::Sim);
        if (fb.tag != CanonForm::Tag::Arr)
            throw std::logic_error("invert_arrow_sub: reflex right side lacks an arrow head");
        SubInversion inv;
        inv.k = 0;
        inv.e = fb.dom;
        inv.f = fb.cod;
        inv.dom = sub_reflex(d->gamma, fb.dom, c);
        inv.cod = sub_reflex(d->gamma, dd, fb.cod);
        return inv;
    }
    case SubRule::Trans: {
        SubInversion i1 = invert_arrow_sub(d->premises[0]);
        SubInversion i2 = invert_arrow_sub(d->premises[1]);
        SubInversion inv;
        inv.k = i1.k + i2.k;
        inv.e = i2.e;
        inv.f = i2.f;
        // E ⪯ •^{k2}E' ⪯ •^{k2}(•^{k1}C)
        SubDerivPtr domTail = sub_weaken(sub_later_mono(i1.dom, i2.k), d->gamma);
        inv.dom = sub_trans(sub_weaken(i2.dom, d->gamma), domTail);
        // •^{k1+k2}D ⪯ •^{k2}F' ⪯ F
        SubDerivPtr codHead = sub_weaken(sub_later_mono(i1.cod, i2.k), d->gamma);
        inv.cod = sub_trans(codHead, sub_weaken(i2.cod, d->gamma));
        return inv;
    }
    case SubRule::LaterMono: {
        SubInversion i = invert_arrow_sub(d->premises[0]);
        SubInversion inv;
        inv.k = i.k;
        inv.e = later(i.e);
        inv.f = later(i.f);
        inv.dom = sub_later_mono(i.dom, 1);
        inv.cod = sub_later_mono(i.cod, 1);
        return inv;
    }
    case SubRule::ArrowMono: {
        SubInversion inv;
        inv.k = 0;
        inv.e = d->rhs->a;
        inv.f = d->rhs->b;
        inv.dom = sub_weaken(d->premises[0], d->gamma);
        inv.cod = sub_weaken(d->premises[1], d->gamma);
        return inv;
    }
    case SubRule::MuAmber: {
        const auto& p = d->premises[0];
        std::pair<std::string, std::string> amber;
        for (const auto& pr : p->gamma.pairs)
            if (!d->gamma.contains(pr.first, pr.second)) {
                amber = pr;
                break;
            }
        SubInversion i = invert_arrow_sub(p);
        SubInversion inv;
        inv.k = i.k;
        inv.e = subst_type1(i.e, amber.second, d->rhs);
        inv.f = subst_type1(i.f, amber.second, d->rhs);
        inv.dom = sub_substitute(i.dom, amber.first, amber.second, d);
        inv.cod = sub_substitute(i.cod, amber.first, amber.second, d);
        return inv;
    }
    case SubRule::Approx: {
        SubInversion inv;
        inv.k = 1;
        inv.e = later(c);
        inv.f = later(dd);
        inv.dom = sub_reflex(d->gamma, later(c), later(c));
        inv.cod = sub_reflex(d->gamma, later(dd), later(dd));
        return inv;
    }
    }
    throw std::logic_error("invert_arrow_sub: unreachable");
}

} // namespace lamu
