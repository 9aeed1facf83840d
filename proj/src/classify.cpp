#include "lamu/classify.hpp"

#include "lamu/measures.hpp"

namespace lamu {

bool tail_finite(const Ty& t, const std::set<std::string>& v) {
    switch (t->kind) {
    case TyKind::Var:
        return !v.count(t->name);
    case TyKind::Later:
        return tail_finite(t->a, v);
    case TyKind::Arrow:
        return tail_finite(t->b, v);
    case TyKind::Mu: {
        std::set<std::string> v2 = v;
        v2.insert(t->name);
        return tail_finite(t->a, v2);
    }
    }
    return false;
}

static bool in_pf(const Ty& t);
static bool in_nf(const Ty& t);

static bool in_pf(const Ty& t) {
    switch (t->kind) {
    case TyKind::Var:
        return true;
    case TyKind::Later:
        return in_pf(t->a);
    case TyKind::Arrow:
        return in_nf(t->a) && in_pf(t->b);
    case TyKind::Mu:
        if (!tail_finite(t)) return false;
        if (!in_pf(t->a)) return false;
        return !etv(t->a).negative.count(t->name) || in_nf(t->a);
    }
    return false;
}

// Any ⊤-variant is in NF; the test comes first since the grammar is
// ambiguous (A → B ∈ NF need not put A in PF).
static bool in_nf(const Ty& t) {
    if (is_top_variant(t)) return true;
    switch (t->kind) {
    case TyKind::Var:
        return true;
    case TyKind::Later:
        return in_nf(t->a);
    case TyKind::Arrow:
        return in_pf(t->a) && in_nf(t->b);
    case TyKind::Mu:
        if (!in_nf(t->a)) return false;
        return !etv(t->a).negative.count(t->name) || in_pf(t);
    }
    return false;
}

std::pair<bool, bool> pos_neg_finite(const Ty& t) {
    return {in_pf(t), in_nf(t)};
}

ConvClass classify_type(const Ty& t) {
    auto [pf, nf] = pos_neg_finite(t);
    return {tail_finite(t), pf, nf};
}

} // namespace lamu
