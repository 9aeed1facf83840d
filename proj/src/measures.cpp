#include "lamu/measures.hpp"

#include <algorithm>
#include <cassert>

namespace lamu {

// tail: †X = X, †(A→B) = †B, †(•A) = •†A, †(μX.A) = μX.†A
Ty tail(const Ty& t) {
    switch (t->kind) {
    case TyKind::Var:
        return t;
    case TyKind::Arrow:
        return tail(t->b);
    case TyKind::Later:
        return later(tail(t->a));
    case TyKind::Mu:
        // the body's tail stays proper in the binder (tail preserves properness)
        return std::make_shared<TypeNode>(TypeNode{TyKind::Mu, t->name, tail(t->a), nullptr});
    }
    return t;
}

// †A always has the form •^{m0} μX1. •^{m1} ... μXn. •^{mn} Y.
// A is a ⊤-variant iff Y is bound by some μXi with Xi not rebound later and
// the bullet count at or after that binder is at least 1.
bool is_top_variant(const Ty& t) {
    struct Layer {
        std::string binder;
        int bullets_after; // bullets between this binder and the next
    };
    Ty cur = t;
    std::vector<Layer> layers; // layers[0] holds m0 in binder "", then per-μ
    layers.push_back({"", 0});
    while (true) {
        switch (cur->kind) {
        case TyKind::Later:
            ++layers.back().bullets_after;
            cur = cur->a;
            continue;
        case TyKind::Mu:
            layers.push_back({cur->name, 0});
            cur = cur->a;
            continue;
        case TyKind::Arrow:
            cur = cur->b;
            continue;
        case TyKind::Var: {
            const std::string& y = cur->name;
            // innermost binder named y
            for (size_t i = layers.size(); i-- > 1;) {
                if (layers[i].binder == y) {
                    int sum = 0;
                    for (size_t j = i; j < layers.size(); ++j) sum += layers[j].bullets_after;
                    return sum >= 1;
                }
            }
            return false;
        }
        }
    }
}

bool is_proper(const Ty& t, const std::string& x) {
    switch (t->kind) {
    case TyKind::Var:
        return t->name != x;
    case TyKind::Later:
        return true;
    case TyKind::Arrow:
        if (is_top_variant(t->b)) return true;
        return is_proper(t->a, x) && is_proper(t->b, x);
    case TyKind::Mu:
        if (t->name == x) return true; // no free occurrence of x
        if (is_proper(t->a, x)) return true;
        return is_top_variant(t);
    }
    return true;
}

EtvSets etv(const Ty& t) {
    if (is_top_variant(t)) return {};
    switch (t->kind) {
    case TyKind::Var:
        return {{t->name}, {}};
    case TyKind::Later:
        return etv(t->a);
    case TyKind::Arrow: {
        EtvSets l = etv(t->a), r = etv(t->b);
        EtvSets out;
        out.positive = l.negative;
        out.positive.insert(r.positive.begin(), r.positive.end());
        out.negative = l.positive;
        out.negative.insert(r.negative.begin(), r.negative.end());
        return out;
    }
    case TyKind::Mu: {
        EtvSets b = etv(t->a);
        EtvSets out;
        if (b.negative.count(t->name)) {
            std::set<std::string> u = b.all();
            u.erase(t->name);
            out.positive = u;
            out.negative = std::move(u);
        } else {
            out.positive = b.positive;
            out.negative = b.negative;
            out.positive.erase(t->name);
            out.negative.erase(t->name);
        }
        return out;
    }
    }
    return {};
}

int height(const Ty& t) {
    switch (t->kind) {
    case TyKind::Var:
        return 0;
    case TyKind::Later:
        return height(t->a) + 1;
    case TyKind::Arrow:
        return std::max(height(t->a), height(t->b)) + 1;
    case TyKind::Mu:
        return height(t->a) + 1;
    }
    return 0;
}

int rank(const Ty& t) {
    if (is_top_variant(t)) return 0;
    switch (t->kind) {
    case TyKind::Var:
        return 0;
    case TyKind::Later:
        return 0;
    case TyKind::Arrow:
        return std::max(rank(t->a), rank(t->b)) + 1;
    case TyKind::Mu:
        return rank(t->a) + 1;
    }
    return 0;
}

static Sign flip(Sign s) { return s == Sign::Pos ? Sign::Neg : Sign::Pos; }

ExtNat depth(const Ty& t, const std::string& x, DepthKind kind, Sign sign) {
    if (is_top_variant(t)) return ExtNat::inf();
    switch (t->kind) {
    case TyKind::Var:
        if (t->name == x) return sign == Sign::Pos ? ExtNat(0) : ExtNat::inf();
        return ExtNat::inf();
    case TyKind::Later: {
        ExtNat d = depth(t->a, x, kind, sign);
        return kind == DepthKind::Later ? d + ExtNat(1) : d;
    }
    case TyKind::Arrow: {
        ExtNat d = min(depth(t->a, x, kind, flip(sign)), depth(t->b, x, kind, sign));
        return kind == DepthKind::Arrow ? d + ExtNat(1) : d;
    }
    case TyKind::Mu: {
        if (t->name == x) return ExtNat::inf(); // no free occurrence
        ExtNat dSame = depth(t->a, x, kind, sign);
        ExtNat dBind = depth(t->a, t->name, kind, Sign::Neg);
        ExtNat dFlip = depth(t->a, x, kind, flip(sign));
        return min(dSame, dBind + dFlip);
    }
    }
    return ExtNat::inf();
}

ExtNat depth_both(const Ty& t, const std::string& x, DepthKind kind) {
    return min(depth(t, x, kind, Sign::Pos), depth(t, x, kind, Sign::Neg));
}

// ⌊A⌋ⁿ, by recursion on ⟨n, rank⟩.
Ty shift(const Ty& t, int n) {
    if (is_top_variant(t)) return top();
    switch (t->kind) {
    case TyKind::Var:
        return t;
    case TyKind::Later:
        if (n == 0) return t;
        return shift(t->a, n - 1);
    case TyKind::Arrow:
        return arrow(shift(t->a, n), shift(t->b, n));
    case TyKind::Mu:
        return shift(unfold_mu(t), n);
    }
    return t;
}

} // namespace lamu
