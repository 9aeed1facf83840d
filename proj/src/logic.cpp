#include "lamu/logic.hpp"

#include "lamu/equality.hpp"
#include "lamu/measures.hpp"

#include <algorithm>
#include <cassert>

namespace lamu {

System system_of(const std::string& name) {
    if (name == "mik4") return System::miK4;
    if (name == "migl") return System::miGL;
    if (name == "miglc") return System::miGLC;
    if (name == "la") return System::LA;
    if (name == "lamu") return System::LAmu;
    throw std::invalid_argument("unknown system: " + name);
}

std::string system_name(System s) {
    switch (s) {
    case System::miK4: return "mik4";
    case System::miGL: return "migl";
    case System::miGLC: return "miglc";
    case System::LA: return "la";
    case System::LAmu: return "lamu";
    }
    return "?";
}

FrameClass system_frame_class(System s) {
    switch (s) {
    case System::miK4: return FrameClass::IK4;
    case System::miGL: return FrameClass::IGL;
    case System::miGLC: return FrameClass::IGLC;
    case System::LA: return FrameClass::LA;
    case System::LAmu: return FrameClass::LA;
    }
    return FrameClass::LA;
}

static bool rule_allowed(System s, PrfRule r) {
    switch (r) {
    case PrfRule::Assump:
    case PrfRule::Nec:
    case PrfRule::ArrowI:
    case PrfRule::ArrowE:
        return true;
    case PrfRule::Four:
        return s == System::miK4 || s == System::miGL;
    case PrfRule::W:
        return s == System::miGL || s == System::miGLC || s == System::LA;
    case PrfRule::Approx:
        return s == System::miGLC || s == System::LA || s == System::LAmu;
    case PrfRule::LRule:
        return s == System::LA || s == System::LAmu;
    case PrfRule::Fold:
    case PrfRule::Unfold:
        return s == System::LAmu;
    }
    return false;
}

static const char* prf_rule_name(PrfRule r) {
    switch (r) {
    case PrfRule::Assump: return "assump";
    case PrfRule::Nec: return "nec";
    case PrfRule::Four: return "four";
    case PrfRule::ArrowI: return "arrow-i";
    case PrfRule::ArrowE: return "arrow-e";
    case PrfRule::Fold: return "fold";
    case PrfRule::Unfold: return "unfold";
    case PrfRule::LRule: return "l";
    case PrfRule::Approx: return "approx";
    case PrfRule::W: return "w";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Contexts as α-deduplicated vectors
// ---------------------------------------------------------------------------

bool ctx_member(const std::vector<Ty>& ctx, const Ty& a) {
    for (const auto& c : ctx)
        if (alpha_eq_type(c, a)) return true;
    return false;
}

std::vector<Ty> ctx_insert(std::vector<Ty> ctx, const Ty& a) {
    if (!ctx_member(ctx, a)) ctx.push_back(a);
    return ctx;
}

static std::vector<Ty> ctx_union(const std::vector<Ty>& a, const std::vector<Ty>& b) {
    std::vector<Ty> out = a;
    for (const auto& t : b) out = ctx_insert(std::move(out), t);
    return out;
}

static bool ctx_subset(const std::vector<Ty>& a, const std::vector<Ty>& b) {
    for (const auto& t : a)
        if (!ctx_member(b, t)) return false;
    return true;
}

static bool ctx_same(const std::vector<Ty>& a, const std::vector<Ty>& b) {
    return ctx_subset(a, b) && ctx_subset(b, a);
}

static std::string ctx_key(const std::vector<Ty>& ctx) {
    std::vector<std::string> ks;
    ks.reserve(ctx.size());
    for (const auto& t : ctx) ks.push_back(type_key(t));
    std::sort(ks.begin(), ks.end());
    std::string out;
    for (auto& k : ks) {
        out += k;
        out += ',';
    }
    return out;
}

ProofPtr make_proof(System sys, PrfRule rule, std::vector<Ty> ctx, Ty formula,
                    std::vector<ProofPtr> premises) {
    return std::make_shared<Proof>(
        Proof{sys, rule, std::move(ctx), std::move(formula), std::move(premises)});
}

// ---------------------------------------------------------------------------
// Checker
// ---------------------------------------------------------------------------

namespace {

void check_proof_rec(const ProofPtr& p, const std::string& path, CheckResult& res) {
    auto fail = [&](const std::string& msg) {
        res.fail("[" + path + " " + prf_rule_name(p->rule) + "] " + msg);
    };
    auto need = [&](size_t n) {
        if (p->premises.size() != n) {
            fail("expected " + std::to_string(n) + " premises");
            return false;
        }
        return true;
    };

    if (!rule_allowed(p->system, p->rule))
        fail(std::string("rule not available in ") + system_name(p->system));
    if (p->system != System::LAmu) {
        if (contains_mu(p->formula)) fail("recursive formula outside LAmu");
        for (const auto& c : p->ctx)
            if (contains_mu(c)) fail("recursive hypothesis outside LAmu");
    }
    for (const auto& q : p->premises)
        if (q->system != p->system) fail("premise system differs");

    switch (p->rule) {
    case PrfRule::Assump:
        if (!need(0)) break;
        if (!ctx_member(p->ctx, p->formula)) fail("formula not among the hypotheses");
        break;
    case PrfRule::Nec: {
        if (!need(1)) break;
        const auto& q = p->premises[0];
        if (p->formula->kind != TyKind::Later || !alpha_eq_type(p->formula->a, q->formula)) {
            fail("conclusion is not the bulleted premise");
            break;
        }
        for (const auto& c : q->ctx)
            if (!ctx_member(p->ctx, later(c))) fail("a bulleted premise hypothesis is missing");
        break;
    }
    case PrfRule::Four: {
        if (!need(1)) break;
        const auto& q = p->premises[0];
        if (q->formula->kind != TyKind::Later) fail("premise must be bulleted");
        if (p->formula->kind != TyKind::Later || !alpha_eq_type(p->formula->a, q->formula))
            fail("conclusion is not the bulleted premise");
        if (!ctx_same(p->ctx, q->ctx)) fail("context changed");
        break;
    }
    case PrfRule::ArrowI: {
        if (!need(1)) break;
        const auto& q = p->premises[0];
        if (p->formula->kind != TyKind::Arrow) {
            fail("conclusion must be an arrow");
            break;
        }
        if (!alpha_eq_type(q->formula, p->formula->b)) fail("premise is not the codomain");
        if (!ctx_same(q->ctx, ctx_insert(p->ctx, p->formula->a)))
            fail("premise context is not Γ ∪ {A}");
        break;
    }
    case PrfRule::ArrowE: {
        if (!need(2)) break;
        const auto& q1 = p->premises[0];
        const auto& q2 = p->premises[1];
        if (q1->formula->kind != TyKind::Arrow) {
            fail("function premise must be an arrow");
            break;
        }
        if (!alpha_eq_type(q1->formula->b, p->formula)) fail("codomain differs");
        if (!alpha_eq_type(q1->formula->a, q2->formula)) fail("argument formula differs");
        if (!ctx_same(p->ctx, ctx_union(q1->ctx, q2->ctx)))
            fail("context is not the premise union");
        break;
    }
    case PrfRule::Fold: {
        if (!need(1)) break;
        const auto& q = p->premises[0];
        if (p->formula->kind != TyKind::Mu) {
            fail("conclusion must be a mu formula");
            break;
        }
        if (!alpha_eq_type(q->formula, unfold_mu(p->formula)))
            fail("premise is not the unfolding");
        if (!ctx_same(p->ctx, q->ctx)) fail("context changed");
        break;
    }
    case PrfRule::Unfold: {
        if (!need(1)) break;
        const auto& q = p->premises[0];
        if (q->formula->kind != TyKind::Mu) {
            fail("premise must be a mu formula");
            break;
        }
        if (!alpha_eq_type(p->formula, unfold_mu(q->formula)))
            fail("conclusion is not the unfolding");
        if (!ctx_same(p->ctx, q->ctx)) fail("context changed");
        break;
    }
    case PrfRule::LRule: {
        if (!need(1)) break;
        const auto& q = p->premises[0];
        bool shape = p->formula->kind == TyKind::Later && p->formula->a->kind == TyKind::Arrow;
        if (!shape) {
            fail("conclusion must be •(A→B)");
            break;
        }
        Ty want = arrow(later(p->formula->a->a), later(p->formula->a->b));
        if (!alpha_eq_type(q->formula, want)) fail("premise is not •A→•B");
        if (!ctx_same(p->ctx, q->ctx)) fail("context changed");
        break;
    }
    case PrfRule::Approx: {
        if (!need(1)) break;
        const auto& q = p->premises[0];
        if (p->formula->kind != TyKind::Later || !alpha_eq_type(p->formula->a, q->formula))
            fail("conclusion is not the bulleted premise");
        if (!ctx_same(p->ctx, q->ctx)) fail("context changed");
        break;
    }
    case PrfRule::W: {
        if (!need(1)) break;
        const auto& q = p->premises[0];
        if (p->formula->kind != TyKind::Later) {
            fail("conclusion must be •A");
            break;
        }
        Ty want = later(arrow(later(p->formula->a), p->formula->a));
        if (!alpha_eq_type(q->formula, want)) fail("premise is not •(•A→A)");
        if (!ctx_same(p->ctx, q->ctx)) fail("context changed");
        break;
    }
    }

    for (size_t i = 0; i < p->premises.size(); ++i)
        check_proof_rec(p->premises[i], path + "." + std::to_string(i), res);
}

} // namespace

CheckResult check_proof(const ProofPtr& p) {
    CheckResult res;
    if (!p) {
        res.fail("null proof");
        return res;
    }
    check_proof_rec(p, "0", res);
    return res;
}

// ---------------------------------------------------------------------------
// Transformations
// ---------------------------------------------------------------------------

ProofPtr proof_weaken(const ProofPtr& p, const std::vector<Ty>& extra) {
    std::vector<Ty> g = ctx_union(p->ctx, extra);
    if (ctx_same(g, p->ctx)) return p;
    switch (p->rule) {
    case PrfRule::Assump:
        return make_proof(p->system, PrfRule::Assump, std::move(g), p->formula);
    case PrfRule::Nec:
        // the extra hypotheses join the Γ₂ side; the premise is untouched
        return make_proof(p->system, PrfRule::Nec, std::move(g), p->formula, {p->premises[0]});
    case PrfRule::ArrowI: {
        ProofPtr q = proof_weaken(p->premises[0], extra);
        return make_proof(p->system, PrfRule::ArrowI, std::move(g), p->formula, {q});
    }
    case PrfRule::ArrowE: {
        ProofPtr q1 = proof_weaken(p->premises[0], extra);
        ProofPtr q2 = proof_weaken(p->premises[1], extra);
        return make_proof(p->system, PrfRule::ArrowE, std::move(g), p->formula, {q1, q2});
    }
    default: {
        ProofPtr q = proof_weaken(p->premises[0], extra);
        return make_proof(p->system, p->rule, std::move(g), p->formula, {q});
    }
    }
}

ProofPtr proof_subst(const ProofPtr& p, const std::string& x, const Ty& c) {
    std::vector<Ty> g;
    g.reserve(p->ctx.size());
    for (const auto& t : p->ctx) g.push_back(subst_type1(t, x, c));
    Ty f = subst_type1(p->formula, x, c);
    std::vector<ProofPtr> prems;
    prems.reserve(p->premises.size());
    for (const auto& q : p->premises) prems.push_back(proof_subst(q, x, c));
    return make_proof(p->system, p->rule, std::move(g), std::move(f), std::move(prems));
}

ProofPtr proof_cut(const ProofPtr& main, const Ty& hyp, const ProofPtr& arg) {
    assert(alpha_eq_type(arg->formula, hyp));
    std::vector<Ty> base;
    for (const auto& t : main->ctx)
        if (!alpha_eq_type(t, hyp)) base.push_back(t);
    ProofPtr imp =
        make_proof(main->system, PrfRule::ArrowI, base, arrow(hyp, main->formula), {main});
    std::vector<Ty> g = ctx_union(base, arg->ctx);
    return make_proof(main->system, PrfRule::ArrowE, g, main->formula,
                      {proof_weaken(imp, g), proof_weaken(arg, g)});
}

// ---------------------------------------------------------------------------
// Canned theorems
// ---------------------------------------------------------------------------

ProofPtr theorem_k(System sys, const Ty& a, const Ty& b) {
    Ty ab = arrow(a, b);
    std::vector<Ty> g{ab, a};
    ProofPtr q1 = make_proof(sys, PrfRule::ArrowE, g, b,
                             {make_proof(sys, PrfRule::Assump, g, ab),
                              make_proof(sys, PrfRule::Assump, g, a)});
    std::vector<Ty> bg{later(ab), later(a)};
    ProofPtr q2 = make_proof(sys, PrfRule::Nec, bg, later(b), {q1});
    ProofPtr q3 = make_proof(sys, PrfRule::ArrowI, {later(ab)}, arrow(later(a), later(b)), {q2});
    return make_proof(sys, PrfRule::ArrowI, {},
                      arrow(later(ab), arrow(later(a), later(b))), {q3});
}

ProofPtr derived_k(const ProofPtr& p) {
    assert(p->formula->kind == TyKind::Later && p->formula->a->kind == TyKind::Arrow);
    Ty a = p->formula->a->a;
    Ty b = p->formula->a->b;
    ProofPtr k = proof_weaken(theorem_k(p->system, a, b), p->ctx);
    return make_proof(p->system, PrfRule::ArrowE, p->ctx, arrow(later(a), later(b)), {k, p});
}

ProofPtr theorem_y(System sys, const Ty& a) {
    if (sys == System::miGLC || sys == System::LA) {
        if (contains_mu(a))
            throw std::invalid_argument("theorem_y: recursive formula outside LAmu");
        Ty h = arrow(later(a), a);
        ProofPtr as = make_proof(sys, PrfRule::Assump, {h}, h);
        ProofPtr ap = make_proof(sys, PrfRule::Approx, {h}, later(h), {as});
        ProofPtr w = make_proof(sys, PrfRule::W, {h}, later(a), {ap});
        ProofPtr e = make_proof(sys, PrfRule::ArrowE, {h}, a, {as, w});
        return make_proof(sys, PrfRule::ArrowI, {}, arrow(h, a), {e});
    }
    if (sys != System::LAmu)
        throw std::invalid_argument("theorem_y: not derivable in " + system_name(sys));

    std::string x = fresh_tvar("X", free_tvars(a));
    Ty b = mu(x, arrow(later(tvar(x)), a)); // B = μX.•X→A
    Ty h = arrow(later(a), a);

    ProofPtr u1 = make_proof(sys, PrfRule::Assump, {b}, b);
    ProofPtr u2 = make_proof(sys, PrfRule::Unfold, {b}, unfold_mu(b), {u1}); // {B} ⊢ •B→A
    ProofPtr n1 = make_proof(sys, PrfRule::Nec, {later(b)}, later(unfold_mu(b)), {u2});
    ProofPtr k1 = derived_k(n1); // {•B} ⊢ ••B→•A
    ProofPtr a1 = make_proof(sys, PrfRule::Assump, {later(b)}, later(b));
    ProofPtr a2 = make_proof(sys, PrfRule::Approx, {later(b)}, later(later(b)), {a1});
    ProofPtr e1 = make_proof(sys, PrfRule::ArrowE, {later(b)}, later(a), {k1, a2});
    ProofPtr hh = make_proof(sys, PrfRule::Assump, {h}, h);
    ProofPtr e2 = make_proof(sys, PrfRule::ArrowE, {h, later(b)}, a, {hh, e1});
    ProofPtr pi = make_proof(sys, PrfRule::ArrowI, {h}, arrow(later(b), a), {e2}); // {h} ⊢ •B→A
    ProofPtr f1 = make_proof(sys, PrfRule::Fold, {h}, b, {pi});
    ProofPtr ap = make_proof(sys, PrfRule::Approx, {h}, later(b), {f1});
    ProofPtr e3 = make_proof(sys, PrfRule::ArrowE, {h}, a, {pi, ap});
    return make_proof(sys, PrfRule::ArrowI, {}, arrow(h, a), {e3});
}

ProofPtr theorem_loeb(System sys, const Ty& a) {
    if (sys == System::miGL || sys == System::miGLC || sys == System::LA) {
        if (contains_mu(a))
            throw std::invalid_argument("theorem_loeb: recursive formula outside LAmu");
        Ty h = later(arrow(later(a), a));
        ProofPtr as = make_proof(sys, PrfRule::Assump, {h}, h);
        ProofPtr w = make_proof(sys, PrfRule::W, {h}, later(a), {as});
        return make_proof(sys, PrfRule::ArrowI, {}, arrow(h, later(a)), {w});
    }
    if (sys != System::LAmu)
        throw std::invalid_argument("theorem_loeb: not derivable in " + system_name(sys));
    ProofPtr y = theorem_y(sys, a);
    ProofPtr n = make_proof(sys, PrfRule::Nec, {}, later(y->formula), {y});
    return derived_k(n); // ⊢ •(•A→A) → •A
}

// {†A} ⊢ A in LAμ
ProofPtr theorem_tail_entails(const Ty& a) {
    const System sys = System::LAmu;
    switch (a->kind) {
    case TyKind::Var:
        return make_proof(sys, PrfRule::Assump, {a}, a);
    case TyKind::Later: {
        ProofPtr p = theorem_tail_entails(a->a); // {†B} ⊢ B
        Ty tb = tail(a->a);
        return make_proof(sys, PrfRule::Nec, {later(tb)}, later(a->a), {p});
    }
    case TyKind::Arrow: {
        ProofPtr p = theorem_tail_entails(a->b); // {†C} ⊢ C
        ProofPtr w = proof_weaken(p, {a->a});
        return make_proof(sys, PrfRule::ArrowI, {tail(a->b)}, a, {w});
    }
    case TyKind::Mu: {
        const std::string& x = a->name;
        Ty tb = tail(a->a);
        ProofPtr p = theorem_tail_entails(a->a); // {†B} ⊢ B
        Ty ta = tail(a);                         // μX.†B
        if (!free_tvars(tb).count(x)) {
            ProofPtr q = make_proof(sys, PrfRule::Assump, {ta}, ta);
            ProofPtr q2 = make_proof(sys, PrfRule::Unfold, {ta}, unfold_mu(ta), {q}); // ⊢ †B
            ProofPtr r = proof_cut(p, tb, q2);  // {†A} ⊢ B
            ProofPtr s = proof_subst(r, x, a);  // {†A} ⊢ B[A/X]
            return make_proof(sys, PrfRule::Fold, {ta}, a, {s});
        }
        // †B = •^{m0} μY₁ … •^{mn} X with total bullets k ≥ 1
        // c1: {•ᵏX} ⊢ †B by nec/fold from {X} ⊢ X
        int k = 0;
        {
            Ty cur = tb;
            while (true) {
                if (cur->kind == TyKind::Later) {
                    ++k;
                    cur = cur->a;
                } else if (cur->kind == TyKind::Mu) {
                    cur = cur->a;
                } else {
                    break;
                }
            }
        }
        assert(k >= 1);
        // rebuild †B inside out
        std::vector<const TypeNode*> spine;
        for (Ty cur = tb; cur->kind != TyKind::Var; cur = cur->a) spine.push_back(cur.get());
        ProofPtr c1 = make_proof(sys, PrfRule::Assump, {tvar(x)}, tvar(x));
        int bullets = 0;
        Ty formula = tvar(x);
        for (auto it = spine.rbegin(); it != spine.rend(); ++it) {
            if ((*it)->kind == TyKind::Later) {
                ++bullets;
                formula = later(formula);
                c1 = make_proof(sys, PrfRule::Nec, {laters(tvar(x), bullets)}, formula, {c1});
            } else { // Mu layer; its binder does not occur below
                formula = std::make_shared<TypeNode>(
                    TypeNode{TyKind::Mu, (*it)->name, formula, nullptr});
                c1 = make_proof(sys, PrfRule::Fold, c1->ctx, formula, {c1});
            }
        }
        // c2: {•X} ⊢ •ᵏX
        ProofPtr c2 = make_proof(sys, PrfRule::Assump, {later(tvar(x))}, later(tvar(x)));
        for (int i = 1; i < k; ++i)
            c2 = make_proof(sys, PrfRule::Approx, c2->ctx, later(c2->formula), {c2});
        ProofPtr c3 = proof_cut(c1, laters(tvar(x), k), c2); // {•X} ⊢ †B
        ProofPtr c4 = proof_cut(p, tb, c3);                  // {•X} ⊢ B
        ProofPtr c5 = proof_subst(c4, x, a);                 // {•A} ⊢ B[A/X]
        ProofPtr c6 = make_proof(sys, PrfRule::Fold, {later(a)}, a, {c5});
        ProofPtr c7 = make_proof(sys, PrfRule::ArrowI, {}, arrow(later(a), a), {c6});
        ProofPtr c8 = make_proof(sys, PrfRule::ArrowE, {}, a, {theorem_y(sys, a), c7});
        return proof_weaken(c8, {ta});
    }
    }
    throw std::logic_error("theorem_tail_entails: unreachable");
}

ProofPtr theorem_top_variant(const Ty& a) {
    const System sys = System::LAmu;
    if (!is_top_variant(a)) throw std::invalid_argument("theorem_top_variant: not a ⊤-variant");
    // spine of †A: bullets m0, binders X1 … Xn with bullets m1 … mn, end var Y
    Ty ta = tail(a);
    std::vector<std::pair<std::string, int>> layers; // binder "" for the m0 segment
    layers.push_back({"", 0});
    Ty cur = ta;
    while (cur->kind != TyKind::Var) {
        if (cur->kind == TyKind::Later) ++layers.back().second;
        else layers.push_back({cur->name, 0});
        cur = cur->a;
    }
    const std::string y = cur->name;
    size_t i = 0; // innermost binder named y
    for (size_t j = layers.size(); j-- > 1;)
        if (layers[j].first == y) {
            i = j;
            break;
        }
    assert(i >= 1);
    size_t kk = 0; // largest index with bullets > 0
    for (size_t j = 0; j < layers.size(); ++j)
        if (layers[j].second > 0) kk = j;
    assert(kk >= i);

    // C = μX_{k+1}…μXₙ.Y built by folding from {Y} ⊢ Y
    ProofPtr s1 = make_proof(sys, PrfRule::Assump, {tvar(y)}, tvar(y));
    Ty formula = tvar(y);
    for (size_t j = layers.size(); j-- > kk + 1;) {
        formula =
            std::make_shared<TypeNode>(TypeNode{TyKind::Mu, layers[j].first, formula, nullptr});
        s1 = make_proof(sys, PrfRule::Fold, s1->ctx, formula, {s1});
    }
    // first bullet by nec, the rest by approx/fold up to D (layers kk down to i)
    ProofPtr s2 = make_proof(sys, PrfRule::Nec, {later(tvar(y))}, later(formula), {s1});
    formula = later(formula);
    int placed = 1;
    for (size_t j = kk + 1; j-- > i;) {
        int want = layers[j].second;
        while (placed < want) {
            formula = later(formula);
            s2 = make_proof(sys, PrfRule::Approx, s2->ctx, formula, {s2});
            ++placed;
        }
        if (j > i) {
            formula = std::make_shared<TypeNode>(
                TypeNode{TyKind::Mu, layers[j].first, formula, nullptr});
            s2 = make_proof(sys, PrfRule::Fold, s2->ctx, formula, {s2});
            placed = 0;
        }
    }
    // s2 : {•Y} ⊢ D; now tie the knot at μY.D
    Ty muD = mu(y, formula);
    ProofPtr s4 = proof_subst(s2, y, muD); // {•μY.D} ⊢ D[μY.D/Y]
    ProofPtr s5 = make_proof(sys, PrfRule::Fold, {later(muD)}, muD, {s4});
    ProofPtr s6 = make_proof(sys, PrfRule::ArrowI, {}, arrow(later(muD), muD), {s5});
    ProofPtr s7 = make_proof(sys, PrfRule::ArrowE, {}, muD, {theorem_y(sys, muD), s6});
    // outer layers i-1 … 0 (per segment: bullets first, then the binder)
    formula = muD;
    ProofPtr s8 = s7;
    for (size_t j = i; j-- > 0;) {
        for (int bCount = 0; bCount < layers[j].second; ++bCount) {
            formula = later(formula);
            s8 = make_proof(sys, PrfRule::Approx, {}, formula, {s8});
        }
        if (j > 0) {
            formula = std::make_shared<TypeNode>(
                TypeNode{TyKind::Mu, layers[j].first, formula, nullptr});
            s8 = make_proof(sys, PrfRule::Fold, {}, formula, {s8});
        }
    }
    // s8 : ∅ ⊢ †A ; combine with {†A} ⊢ A
    ProofPtr t = theorem_tail_entails(a);
    return proof_cut(t, ta, s8);
}

// ---------------------------------------------------------------------------
// Prover
// ---------------------------------------------------------------------------

namespace {

struct Searcher {
    System sys;
    LogicBudget budget;
    long fuel;
    std::vector<Ty> cuts;
    std::map<std::string, int> failed_at;

    bool has(PrfRule r) const { return rule_allowed(sys, r); }

    std::optional<ProofPtr> canned(const std::vector<Ty>& ctx, const Ty& goal) {
        // ⊤-variants (LAμ only; finite formulas are never ⊤-variants)
        if (sys == System::LAmu && is_top_variant(goal))
            return proof_weaken(theorem_top_variant(goal), ctx);
        bool hasY = sys == System::LAmu || sys == System::miGLC || sys == System::LA;
        bool okMu = sys == System::LAmu || !contains_mu(goal);
        if (hasY && okMu) {
            // (•A→A)→A
            if (goal->kind == TyKind::Arrow && goal->a->kind == TyKind::Arrow &&
                goal->a->a->kind == TyKind::Later && alpha_eq_type(goal->a->a->a, goal->b) &&
                alpha_eq_type(goal->a->b, goal->b))
                return proof_weaken(theorem_y(sys, goal->b), ctx);
            // strong Löb as a rule: (•G→G) ∈ Γ yields G
            Ty h = arrow(later(goal), goal);
            if (ctx_member(ctx, h)) {
                ProofPtr y = proof_weaken(theorem_y(sys, goal), ctx);
                ProofPtr as = make_proof(sys, PrfRule::Assump, ctx, h);
                return make_proof(sys, PrfRule::ArrowE, ctx, goal, {y, as});
            }
        }
        bool hasLoeb = hasY || sys == System::miGL;
        if (hasLoeb && okMu) {
            // •(•A→A)→•A
            if (goal->kind == TyKind::Arrow && goal->a->kind == TyKind::Later &&
                goal->a->a->kind == TyKind::Arrow && goal->a->a->a->kind == TyKind::Later &&
                goal->b->kind == TyKind::Later &&
                alpha_eq_type(goal->a->a->a->a, goal->b->a) &&
                alpha_eq_type(goal->a->a->b, goal->b->a))
                return proof_weaken(theorem_loeb(sys, goal->b->a), ctx);
        }
        return std::nullopt;
    }

    std::optional<ProofPtr> search(const std::vector<Ty>& ctx, const Ty& goal, int depth) {
        if (ctx_member(ctx, goal)) return make_proof(sys, PrfRule::Assump, ctx, goal);
        if (auto c = canned(ctx, goal)) return c;
        if (depth <= 0 || fuel-- <= 0) return std::nullopt;
        std::string key = ctx_key(ctx) + "|-" + type_key(goal);
        auto it = failed_at.find(key);
        if (it != failed_at.end() && it->second >= depth) return std::nullopt;

        auto out = expand(ctx, goal, depth);
        if (!out) {
            auto [pos, fresh] = failed_at.emplace(key, depth);
            if (!fresh && pos->second < depth) pos->second = depth;
        }
        return out;
    }

    std::optional<ProofPtr> expand(const std::vector<Ty>& ctx, const Ty& goal, int depth) {
        if (goal->kind == TyKind::Arrow) {
            if (auto p = search(ctx_insert(ctx, goal->a), goal->b, depth - 1))
                return make_proof(sys, PrfRule::ArrowI, ctx, goal, {*p});
        }
        if (goal->kind == TyKind::Later) {
            // nec: un-bullet the bulleted part of the context
            std::vector<Ty> inner;
            for (const auto& h : ctx)
                if (h->kind == TyKind::Later) inner = ctx_insert(std::move(inner), h->a);
            if (auto p = search(inner, goal->a, depth - 1))
                return make_proof(sys, PrfRule::Nec, ctx, goal, {*p});
            if (has(PrfRule::Approx)) {
                if (auto p = search(ctx, goal->a, depth - 1))
                    return make_proof(sys, PrfRule::Approx, ctx, goal, {*p});
            }
            if (has(PrfRule::W)) {
                Ty want = later(arrow(later(goal->a), goal->a));
                if (auto p = search(ctx, want, depth - 1))
                    return make_proof(sys, PrfRule::W, ctx, goal, {*p});
            }
            if (has(PrfRule::LRule) && goal->a->kind == TyKind::Arrow) {
                Ty want = arrow(later(goal->a->a), later(goal->a->b));
                if (auto p = search(ctx, want, depth - 1))
                    return make_proof(sys, PrfRule::LRule, ctx, goal, {*p});
            }
            if (has(PrfRule::Four) && goal->a->kind == TyKind::Later) {
                if (auto p = search(ctx, goal->a, depth - 1))
                    return make_proof(sys, PrfRule::Four, ctx, goal, {*p});
            }
        }
        if (goal->kind == TyKind::Mu && has(PrfRule::Fold)) {
            if (auto p = search(ctx, unfold_mu(goal), depth - 1))
                return make_proof(sys, PrfRule::Fold, ctx, goal, {*p});
        }
        // hypothesis-driven modus ponens (curried up to 3 arguments)
        for (const auto& h : ctx) {
            std::vector<Ty> args;
            Ty cur = h;
            while (cur->kind == TyKind::Arrow && args.size() < 3) {
                args.push_back(cur->a);
                cur = cur->b;
                if (!alpha_eq_type(cur, goal)) continue;
                std::vector<ProofPtr> argProofs;
                bool ok = true;
                for (const auto& arg : args) {
                    auto p = search(ctx, arg, depth - 1);
                    if (!p) {
                        ok = false;
                        break;
                    }
                    argProofs.push_back(*p);
                }
                if (!ok) continue;
                ProofPtr acc = make_proof(sys, PrfRule::Assump, ctx, h);
                Ty ft = h;
                for (const auto& ap : argProofs) {
                    ft = ft->b;
                    acc = make_proof(sys, PrfRule::ArrowE, ctx, ft, {acc, ap});
                }
                return acc;
            }
        }
        // unfold recursive hypotheses
        if (sys == System::LAmu) {
            for (const auto& h : ctx) {
                if (h->kind != TyKind::Mu) continue;
                Ty u = unfold_mu(h);
                if (ctx_member(ctx, u)) continue;
                if (auto p = search(ctx_insert(ctx, u), goal, depth - 1)) {
                    ProofPtr imp = make_proof(sys, PrfRule::ArrowI, ctx, arrow(u, goal), {*p});
                    ProofPtr as = make_proof(sys, PrfRule::Assump, ctx, h);
                    ProofPtr uf = make_proof(sys, PrfRule::Unfold, ctx, u, {as});
                    return make_proof(sys, PrfRule::ArrowE, ctx, goal, {imp, uf});
                }
            }
        }
        // restricted cuts
        if (depth >= 2) {
            for (const auto& c : cuts) {
                if (alpha_eq_type(c, goal)) continue;
                auto p2 = search(ctx, c, depth - 2);
                if (!p2) continue;
                auto p1 = search(ctx, arrow(c, goal), depth - 2);
                if (!p1) continue;
                return make_proof(sys, PrfRule::ArrowE, ctx, goal, {*p1, *p2});
            }
        }
        return std::nullopt;
    }
};

std::vector<Ty> build_cutset(const std::vector<Ty>& ctx, const Ty& goal, int bullet_bound) {
    std::vector<Ty> cuts;
    auto add = [&](const Ty& t) {
        for (const auto& c : cuts)
            if (alpha_eq_type(c, t)) return;
        if (cuts.size() < 40) cuts.push_back(t);
    };
    std::vector<Ty> roots = ctx;
    roots.push_back(goal);
    for (const auto& r : roots)
        for (const auto& cl : comp_closure(r)) {
            Ty base = cl.skeleton;
            add(base);
            for (int i = 1; i <= bullet_bound; ++i) add(laters(base, i));
        }
    return cuts;
}

} // namespace

std::optional<ProofPtr> prove(System sys, const std::vector<Ty>& ctx, const Ty& goal,
                              LogicBudget budget) {
    if (sys != System::LAmu) {
        if (contains_mu(goal)) return std::nullopt;
        for (const auto& c : ctx)
            if (contains_mu(c)) return std::nullopt;
    }
    Searcher s{sys, budget, budget.fuel, build_cutset(ctx, goal, budget.bullet_bound), {}};
    std::vector<Ty> start;
    for (const auto& c : ctx) start = ctx_insert(std::move(start), c);
    for (int depth = 4; depth <= 12; depth += 4) {
        if (auto p = s.search(start, goal, depth)) return p;
        if (s.fuel <= 0) break;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Countermodel search
// ---------------------------------------------------------------------------

namespace {

bool refutes(const Frame& f, const Valuation& v, int w, const std::vector<Ty>& ctx,
             const Ty& goal) {
    for (const auto& h : ctx)
        if (!model_check(f, v, w, h)) return false;
    return !model_check(f, v, w, goal);
}

std::vector<std::set<int>> hereditary_sets(const Frame& f) {
    int n = static_cast<int>(f.worlds.size());
    std::vector<std::set<int>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::set<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.insert(i);
        bool ok = true;
        for (int p : s) {
            for (auto& [a, b] : f.pre)
                if (a == p && !s.count(b)) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (ok) out.push_back(std::move(s));
    }
    return out;
}

std::optional<Counter> scan_frame(const Frame& f, const std::vector<std::string>& vars,
                                  const std::vector<Ty>& ctx, const Ty& goal) {
    std::vector<std::set<int>> hs = hereditary_sets(f);
    size_t m = vars.size();
    std::vector<size_t> idx(m, 0);
    while (true) {
        Valuation v;
        for (size_t i = 0; i < m; ++i) v[vars[i]] = hs[idx[i]];
        for (int w = 0; w < static_cast<int>(f.worlds.size()); ++w)
            if (refutes(f, v, w, ctx, goal)) return Counter{f, v, w};
        size_t i = 0;
        for (; i < m; ++i) {
            if (++idx[i] < hs.size()) break;
            idx[i] = 0;
        }
        if (i == m || m == 0) break;
    }
    return std::nullopt;
}

} // namespace

std::optional<Counter> countermodel(System sys, const std::vector<Ty>& ctx, const Ty& goal,
                                    int max_worlds) {
    FrameClass cls = system_frame_class(sys);
    std::set<std::string> varset = free_tvars(goal);
    for (const auto& c : ctx)
        for (const auto& x : free_tvars(c)) varset.insert(x);
    std::vector<std::string> vars(varset.begin(), varset.end());

    bool cyclic = cls == FrameClass::IK4;
    int exhaustive_limit = cyclic ? 3 : 4;
    for (int n = 1; n <= max_worlds; ++n) {
        if (n <= exhaustive_limit) {
            // enumerate ▷ (topologically sorted unless cyclic frames are allowed)
            std::vector<std::pair<int, int>> wfSlots, preSlots;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i != j) preSlots.push_back({i, j});
                    if (cyclic) wfSlots.push_back({i, j}); // diagonal allowed
                    else if (i > j) wfSlots.push_back({i, j});
                }
            uint64_t wfMax = 1ull << wfSlots.size();
            uint64_t preMax = 1ull << preSlots.size();
            for (uint64_t wm = 0; wm < wfMax; ++wm) {
                Frame base;
                for (int i = 0; i < n; ++i) base.worlds.push_back("w" + std::to_string(i));
                for (size_t s = 0; s < wfSlots.size(); ++s)
                    if (wm & (1ull << s)) base.wf.insert(wfSlots[s]);
                for (uint64_t pm = 0; pm < preMax; ++pm) {
                    Frame f = base;
                    for (int i = 0; i < n; ++i) f.pre.insert({i, i});
                    for (size_t s = 0; s < preSlots.size(); ++s)
                        if (pm & (1ull << s)) f.pre.insert(preSlots[s]);
                    if (!validate_frame(f, cls).ok) continue;
                    if (auto c = scan_frame(f, vars, ctx, goal)) return c;
                }
            }
        } else {
            for (int attempt = 0; attempt < 300; ++attempt) {
                Frame f = random_frame(cls, n, 0x5eed0000u + n * 1000 + attempt);
                if (auto c = scan_frame(f, vars, ctx, goal)) return c;
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// decide
// ---------------------------------------------------------------------------

Decision decide(System sys, const std::vector<Ty>& ctx, const Ty& goal, LogicBudget budget) {
    struct Round {
        int fuel;
        int worlds;
    };
    std::vector<Round> rounds{{budget.fuel / 4, 2},
                              {budget.fuel / 2, 3},
                              {budget.fuel, budget.max_worlds}};
    for (const auto& r : rounds) {
        LogicBudget b = budget;
        b.fuel = r.fuel;
        if (auto p = prove(sys, ctx, goal, b)) {
            if (check_proof(*p).ok) return {Decision::V::Provable, *p, std::nullopt};
        }
        if (auto c = countermodel(sys, ctx, goal, std::min(r.worlds, budget.max_worlds))) {
            bool frameOk = validate_frame(c->frame, system_frame_class(sys)).ok;
            if (frameOk && refutes(c->frame, c->val, c->world, ctx, goal))
                return {Decision::V::Refutable, nullptr, c};
        }
        if (r.worlds >= budget.max_worlds) break;
    }
    return {Decision::V::Unknown, nullptr, std::nullopt};
}

} // namespace lamu
