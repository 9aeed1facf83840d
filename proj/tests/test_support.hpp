#pragma once

#include "lamu/classify.hpp"
#include "lamu/equality.hpp"
#include "lamu/lambda.hpp"
#include "lamu/measures.hpp"
#include "lamu/subtyping.hpp"
#include "lamu/syntax.hpp"
#include "lamu/typing.hpp"

#include <random>
#include <vector>

namespace lamu::testing {

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline const std::vector<std::string>& var_pool() {
    static const std::vector<std::string> p{"X", "Y", "Z", "W", "V"};
    return p;
}

// Random well-formed type of height at most h.
inline Ty gen_type(Rng& rng, int h, int mu_depth = 0) {
    int kind = pick(rng, 0, 9);
    if (h <= 0 || kind <= 2) {
        return tvar(var_pool()[pick(rng, 0, static_cast<int>(var_pool().size()) - 1)]);
    }
    if (kind <= 4) return later(gen_type(rng, h - 1, mu_depth));
    if (kind <= 7) return arrow(gen_type(rng, h - 1, mu_depth), gen_type(rng, h - 1, mu_depth));
    if (kind == 8 && mu_depth < 3) {
        std::string binder = "M" + std::to_string(pick(rng, 0, 2));
        Ty body = gen_type(rng, h - 1, mu_depth + 1);
        if (!is_proper(body, binder)) body = later(body); // guard the recursion
        return mu(binder, body);
    }
    return top();
}

// One ∼-preserving rewrite applied at a random position: μ-unfold, a
// ⊤-variant collapse, or (Sim only) a K/L push.
inline Ty equal_mutation(Rng& rng, const Ty& t, EqMode mode, int tries = 6) {
    for (int attempt = 0; attempt < tries; ++attempt) {
        int choice = pick(rng, 0, 3);
        switch (t->kind) {
        case TyKind::Var:
            break;
        case TyKind::Later:
            if (choice == 0 && mode == EqMode::Sim && t->a->kind == TyKind::Arrow)
                return arrow(later(t->a->a), later(t->a->b)); // •(A→B) ↦ •A→•B
            return later(equal_mutation(rng, t->a, mode, tries - 1));
        case TyKind::Arrow:
            if (choice == 0 && is_top_variant(t)) return top();
            if (pick(rng, 0, 1))
                return arrow(equal_mutation(rng, t->a, mode, tries - 1), t->b);
            return arrow(t->a, equal_mutation(rng, t->b, mode, tries - 1));
        case TyKind::Mu:
            if (choice == 0) return unfold_mu(t);
            if (choice == 1 && is_top_variant(t)) return top();
            break;
        }
    }
    return t;
}

inline Ty mutate_n(Rng& rng, Ty t, EqMode mode, int n) {
    for (int i = 0; i < n; ++i) t = equal_mutation(rng, t, mode);
    return t;
}

// ---------------------------------------------------------------------------
// Typing corpus
// ---------------------------------------------------------------------------

// Simply-typed random derivation of a closed term; bullet-free types.
inline TypDerivPtr gen_simple_deriv(Rng& rng, int size, const Ctx& ctx, int varIdx = 0) {
    // goal-directed: pick a shape
    if (size <= 0 || pick(rng, 0, 3) == 0) {
        // either a variable from ctx or an identity function
        if (!ctx.empty() && pick(rng, 0, 1)) {
            auto it = ctx.begin();
            std::advance(it, pick(rng, 0, static_cast<int>(ctx.size()) - 1));
            return make_typ(TypRule::Var, ctx, tmvar(it->first), it->second);
        }
        std::string x = "v" + std::to_string(varIdx);
        Ty a = gen_type(rng, 1);
        while (contains_later(a) || contains_mu(a)) a = gen_type(rng, 1);
        Ctx inner = ctx;
        inner[x] = a;
        TypDerivPtr v = make_typ(TypRule::Var, inner, tmvar(x), a);
        return make_typ(TypRule::ArrowI, ctx, lam(x, tmvar(x)), arrow(a, a), {v});
    }
    if (pick(rng, 0, 1)) {
        // abstraction
        std::string x = "v" + std::to_string(varIdx);
        Ty a = gen_type(rng, 1);
        while (contains_later(a) || contains_mu(a)) a = gen_type(rng, 1);
        Ctx inner = ctx;
        inner[x] = a;
        TypDerivPtr body = gen_simple_deriv(rng, size - 1, inner, varIdx + 1);
        return make_typ(TypRule::ArrowI, ctx, lam(x, body->subject), arrow(a, body->type),
                        {body});
    }
    // application of an identity-shaped function to a generated argument
    TypDerivPtr argInner = gen_simple_deriv(rng, size - 1, ctx, varIdx + 1);
    Ty a = argInner->type;
    std::string x = "v" + std::to_string(varIdx);
    Ctx inner = ctx;
    inner[x] = a;
    TypDerivPtr v = make_typ(TypRule::Var, inner, tmvar(x), a);
    TypDerivPtr idf = make_typ(TypRule::ArrowI, ctx, lam(x, tmvar(x)), arrow(a, a), {v});
    return make_typ(TypRule::ArrowE, ctx, app(idf->subject, argInner->subject), a,
                    {idf, argInner});
}

// Mixed corpus: simply-typed derivations, Y instances, Y applied to
// constant-result step functions, nec-decorated variants, and redexes whose
// functions are widened through approx or typed under a Shift.
inline std::vector<TypDerivPtr> typing_corpus(Rng& rng, int n) {
    std::vector<TypDerivPtr> out;
    while (static_cast<int>(out.size()) < n) {
        int kind = pick(rng, 0, 11);
        if (kind >= 10) {
            // (λx. body) y with the abstraction approx-widened (and possibly
            // Shift-wrapped), a free variable g in scope
            Ty w = gen_type(rng, 1);
            while (contains_later(w) || contains_mu(w)) w = gen_type(rng, 1);
            Ty t = tvar("V");
            Ctx cg{{"gfree", w}};
            auto vg = make_typ(TypRule::Var, Ctx{{"gfree", w}, {"xq", t}}, tmvar("gfree"), w);
            auto lamG =
                make_typ(TypRule::ArrowI, cg, lam("xq", tmvar("gfree")), arrow(t, w), {vg});
            SubDerivPtr widen =
                sub_trans(make_sub(SubRule::Approx, {}, arrow(t, w), later(arrow(t, w))),
                          sub_reflex({}, later(arrow(t, w)), arrow(later(t), later(w))));
            TypDerivPtr fn = make_typ(TypRule::Subsume, cg, lamG->subject,
                                      arrow(later(t), later(w)), {lamG}, widen);
            if (pick(rng, 0, 1)) {
                auto up = elab_nec(fn);
                fn = make_typ(TypRule::Shift, cg, fn->subject, fn->type, {up});
            }
            auto vy = make_typ(TypRule::Var, Ctx{{"yq", t}}, tmvar("yq"), t);
            auto argUp = make_typ(TypRule::Subsume, Ctx{{"yq", t}}, tmvar("yq"), later(t),
                                  {vy}, make_sub(SubRule::Approx, {}, t, later(t)));
            Ctx full{{"gfree", w}, {"yq", t}};
            out.push_back(make_typ(TypRule::ArrowE, full, app(fn->subject, tmvar("yq")),
                                   later(w), {fn, argUp}));
        } else if (kind <= 4) {
            out.push_back(gen_simple_deriv(rng, pick(rng, 1, 3), {}));
        } else if (kind <= 6) {
            Ty t = gen_type(rng, 2);
            out.push_back(y_combinator_derivation(t));
        } else if (kind <= 8) {
            // Y (λx. N) : T with N closed at T — a convergent recursion
            TypDerivPtr body = gen_simple_deriv(rng, pick(rng, 1, 2), {});
            Ty t = body->type;
            TypDerivPtr y = y_combinator_derivation(t);
            std::string x = "u0";
            TypDerivPtr inner = typ_weaken(body, x, later(t));
            TypDerivPtr stepf = make_typ(TypRule::ArrowI, {}, lam(x, inner->subject),
                                         arrow(later(t), t), {inner});
            out.push_back(make_typ(TypRule::ArrowE, {}, app(y->subject, stepf->subject), t,
                                   {y, stepf}));
        } else {
            TypDerivPtr base = gen_simple_deriv(rng, pick(rng, 1, 2), {});
            TypDerivPtr up = elab_nec(base);
            // a Shift node on top restores the original judgment
            out.push_back(make_typ(TypRule::Shift, base->ctx, base->subject, base->type, {up}));
        }
    }
    return out;
}

} // namespace lamu::testing
