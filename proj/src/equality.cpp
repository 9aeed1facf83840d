#include "lamu/equality.hpp"

#include <cassert>
#include <map>

namespace lamu {

// ---------------------------------------------------------------------------
// Canonical forms
// ---------------------------------------------------------------------------

CanonForm canon_form(const Ty& t, EqMode mode) {
    if (is_top_variant(t)) return {CanonForm::Tag::Top, 0, {}, nullptr, nullptr};
    switch (t->kind) {
    case TyKind::Var:
        return {CanonForm::Tag::Var, 0, t->name, nullptr, nullptr};
    case TyKind::Later: {
        CanonForm f = canon_form(t->a, mode);
        assert(f.tag != CanonForm::Tag::Top); // •A is a ⊤-variant iff A is
        if (f.tag == CanonForm::Tag::Var) {
            ++f.bullets;
            return f;
        }
        if (mode == EqMode::Congr) {
            ++f.bullets;
            return f;
        }
        // ⌜•A⌝⁺ = •B → •C when ⌜A⌝⁺ = B → C
        return {CanonForm::Tag::Arr, 0, {}, later(f.dom), later(f.cod)};
    }
    case TyKind::Arrow:
        return {CanonForm::Tag::Arr, 0, {}, t->a, t->b};
    case TyKind::Mu: {
        CanonForm f = canon_form(t->a, mode);
        assert(f.tag != CanonForm::Tag::Top);
        if (f.tag == CanonForm::Tag::Var) {
            assert(f.var != t->name); // else t would be a ⊤-variant
            return f;
        }
        f.dom = subst_type1(f.dom, t->name, t);
        f.cod = subst_type1(f.cod, t->name, t);
        return f;
    }
    }
    return {CanonForm::Tag::Top, 0, {}, nullptr, nullptr};
}

Ty canon(const Ty& t, EqMode mode) {
    CanonForm f = canon_form(t, mode);
    switch (f.tag) {
    case CanonForm::Tag::Top:
        return top();
    case CanonForm::Tag::Var:
        return laters(tvar(f.var), f.bullets);
    case CanonForm::Tag::Arr:
        return laters(arrow(f.dom, f.cod), f.bullets);
    }
    return top();
}

// ---------------------------------------------------------------------------
// Equality decision
//
// Compares canonical heads coinductively. States are pairs of types with a
// bullet offset delta, meaning  •ᵃ lhs  vs  •ᵇ rhs  with delta = a − b. For
// Sim mode the K/L redistribution is absorbed into delta (using the identity
// ⌜A⌝⁺ = •ⁿC → •ⁿD exactly when ⌜A⌝ = •ⁿ(C→D)); for Congr the offset must
// vanish at every head. A pair revisited with a different delta is unequal:
// both offsets holding would force C ≃ •ᵏC with k ≠ 0, i.e. a ⊤-variant,
// which never reaches the arrow case. Termination follows from the
// finiteness of Comp(·)/≅ on each side.
// ---------------------------------------------------------------------------

namespace {

struct EqEngine {
    EqMode mode;
    EqTrace* trace;
    std::map<std::pair<std::string, std::string>, long> assumed;
    std::map<std::string, CanonForm> canon_cache;

    const CanonForm& head(const Ty& t, const std::string& key) {
        auto it = canon_cache.find(key);
        if (it != canon_cache.end()) return it->second;
        return canon_cache.emplace(key, canon_form(t, EqMode::Congr)).first->second;
    }

    bool eq(const Ty& a, const Ty& b, long delta) {
        std::string ka = type_key(a), kb = type_key(b);
        if (delta == 0 && ka == kb) return true;
        const CanonForm& ha = head(a, ka);
        const CanonForm& hb = head(b, kb);
        if (ha.tag == CanonForm::Tag::Top || hb.tag == CanonForm::Tag::Top)
            return ha.tag == hb.tag;
        if (ha.tag != hb.tag) return false;
        long shifted = delta + ha.bullets - hb.bullets;
        if (ha.tag == CanonForm::Tag::Var)
            return ha.var == hb.var && shifted == 0;
        // arrow heads
        if (mode == EqMode::Congr && shifted != 0) return false;
        auto key = std::make_pair(std::move(ka), std::move(kb));
        auto it = assumed.find(key);
        if (it != assumed.end()) return it->second == delta;
        assumed.emplace(std::move(key), delta);
        if (trace) trace->visited.emplace_back(a, b, delta);
        long child = mode == EqMode::Congr ? 0 : shifted;
        return eq(ha.dom, hb.dom, child) && eq(ha.cod, hb.cod, child);
    }
};

} // namespace

bool type_eq(const Ty& a, const Ty& b, EqMode mode, EqTrace* trace) {
    EqEngine engine{mode, trace, {}, {}};
    return engine.eq(a, b, 0);
}

// ---------------------------------------------------------------------------
// Comp(A)/≅ representatives
//
// Follows the inversion structure of the finiteness proof:
//   Comp(X)      ⊆ {X}
//   Comp(•C)     ⊆ {•C} ∪ Comp(C)
//   Comp(C→D)    ⊆ {C→D} ∪ Comp(C) ∪ Comp(D)
//   Comp(μX.C)   ⊆ { S[μX.C/X] : S ∈ Comp(C) }
// with every listed member genuinely a component, so deduplication by ≅
// yields exactly the classes.
// ---------------------------------------------------------------------------

namespace {

struct CompBuilder {
    std::vector<Ty> reps;

    void add(const Ty& t) {
        for (const auto& r : reps)
            if (type_eq(r, t, EqMode::Congr)) return;
        reps.push_back(t);
    }

    void visit(const Ty& t) {
        if (is_top_variant(t)) {
            add(t);
            return;
        }
        switch (t->kind) {
        case TyKind::Var:
            add(t);
            return;
        case TyKind::Later:
            add(t);
            visit(t->a);
            return;
        case TyKind::Arrow:
            add(t);
            visit(t->a);
            visit(t->b);
            return;
        case TyKind::Mu: {
            CompBuilder body;
            body.visit(t->a);
            for (const auto& s : body.reps) add(subst_type1(s, t->name, t));
            return;
        }
        }
    }
};

} // namespace

std::vector<TypeClosure> comp_closure(const Ty& a) {
    CompBuilder b;
    b.visit(a);
    std::vector<TypeClosure> out;
    out.reserve(b.reps.size());
    for (auto& r : b.reps) out.push_back(TypeClosure{std::move(r), {}});
    return out;
}

// ---------------------------------------------------------------------------
// tree_expand
// ---------------------------------------------------------------------------

namespace {

// Peel bullets and μ-unfold until the head is a variable or an arrow,
// assuming the input is not a ⊤-variant. Returns the accumulated bullets.
int peel_head(Ty& t) {
    int bullets = 0;
    while (true) {
        if (t->kind == TyKind::Later) {
            ++bullets;
            t = t->a;
        } else if (t->kind == TyKind::Mu) {
            t = unfold_mu(t);
        } else {
            return bullets;
        }
    }
}

TypeTree expand_rec(Ty t, int depth, EqMode mode) {
    if (is_top_variant(t)) return {TypeTree::K::Top, {}, {}};
    int n = peel_head(t);
    if (t->kind == TyKind::Var) {
        TypeTree node{TypeTree::K::Var, t->name, {}};
        for (int i = 0; i < n; ++i)
            node = TypeTree{TypeTree::K::Bullet, {}, {std::move(node)}};
        return node;
    }
    // arrow head
    if (depth == 0) {
        TypeTree cut{TypeTree::K::Cut, {}, {}};
        if (mode == EqMode::Sim) return cut;
        for (int i = 0; i < n; ++i)
            cut = TypeTree{TypeTree::K::Bullet, {}, {std::move(cut)}};
        return cut;
    }
    if (mode == EqMode::Sim) {
        // •ⁿ(C→D) rewrites to •ⁿC → •ⁿD
        TypeTree node{TypeTree::K::Arrow, {}, {}};
        node.kids.push_back(expand_rec(laters(t->a, n), depth - 1, mode));
        node.kids.push_back(expand_rec(laters(t->b, n), depth - 1, mode));
        return node;
    }
    TypeTree node{TypeTree::K::Arrow, {}, {}};
    node.kids.push_back(expand_rec(t->a, depth - 1, mode));
    node.kids.push_back(expand_rec(t->b, depth - 1, mode));
    for (int i = 0; i < n; ++i)
        node = TypeTree{TypeTree::K::Bullet, {}, {std::move(node)}};
    return node;
}

} // namespace

TypeTree tree_expand(const Ty& t, int depth, EqMode mode) {
    return expand_rec(t, depth, mode);
}

std::string tree_str(const TypeTree& t) {
    switch (t.k) {
    case TypeTree::K::Top:
        return "Top";
    case TypeTree::K::Var:
        return t.var;
    case TypeTree::K::Bullet:
        return "#" + tree_str(t.kids[0]);
    case TypeTree::K::Arrow:
        return "(" + tree_str(t.kids[0]) + " -> " + tree_str(t.kids[1]) + ")";
    case TypeTree::K::Cut:
        return "?";
    }
    return "?";
}

} // namespace lamu
