#include "lamu/lambda.hpp"

namespace lamu {

static std::optional<Tm> leftmost_step(const Tm& t) {
    switch (t->kind) {
    case TmKind::Var:
        return std::nullopt;
    case TmKind::Lam: {
        auto b = leftmost_step(t->a);
        if (b) return lam(t->name, *b);
        return std::nullopt;
    }
    case TmKind::App: {
        if (t->a->kind == TmKind::Lam) return subst_term(t->a->a, t->a->name, t->b);
        auto f = leftmost_step(t->a);
        if (f) return app(*f, t->b);
        auto a = leftmost_step(t->b);
        if (a) return app(t->a, *a);
        return std::nullopt;
    }
    }
    return std::nullopt;
}

// The head redex sits under the λ-spine at the front of the application
// spine: λx₁…λxₘ.(λx.B) N N₁…Nₙ.
static std::optional<Tm> head_step(const Tm& t) {
    switch (t->kind) {
    case TmKind::Var:
        return std::nullopt;
    case TmKind::Lam: {
        auto b = head_step(t->a);
        if (b) return lam(t->name, *b);
        return std::nullopt;
    }
    case TmKind::App: {
        if (t->a->kind == TmKind::Lam) return subst_term(t->a->a, t->a->name, t->b);
        auto f = head_step(t->a);
        if (f) return app(*f, t->b);
        return std::nullopt;
    }
    }
    return std::nullopt;
}

std::optional<Tm> beta_step(const Tm& t, Strategy strategy) {
    return strategy == Strategy::Leftmost ? leftmost_step(t) : head_step(t);
}

bool is_hnf(const Tm& t) {
    Tm cur = t;
    while (cur->kind == TmKind::Lam) cur = cur->a;
    while (cur->kind == TmKind::App) cur = cur->a;
    return cur->kind == TmKind::Var;
}

ReduceResult head_normalize(Tm t, long fuel) {
    long steps = 0;
    while (true) {
        auto next = head_step(t);
        if (!next) return {true, t, steps};
        if (steps >= fuel) return {false, t, steps};
        t = *next;
        ++steps;
    }
}

ReduceResult normalize(Tm t, long fuel) {
    long steps = 0;
    while (true) {
        auto next = leftmost_step(t);
        if (!next) return {true, t, steps};
        if (steps >= fuel) return {false, t, steps};
        t = *next;
        ++steps;
    }
}

BohmTree bohm_tree(const Tm& t, int depth, long fuel) {
    if (depth <= 0) return {BohmTree::K::Pending, {}, {}, {}, t};
    ReduceResult h = head_normalize(t, fuel);
    if (!h.ok) return {BohmTree::K::Pending, {}, {}, {}, h.term};
    BohmTree node{BohmTree::K::Head, {}, {}, {}, nullptr};
    Tm cur = h.term;
    while (cur->kind == TmKind::Lam) {
        node.binders.push_back(cur->name);
        cur = cur->a;
    }
    std::vector<Tm> args;
    while (cur->kind == TmKind::App) {
        args.push_back(cur->b);
        cur = cur->a;
    }
    node.headvar = cur->name;
    for (auto it = args.rbegin(); it != args.rend(); ++it)
        node.children.push_back(bohm_tree(*it, depth - 1, fuel));
    return node;
}

static int min_pending_rec(const BohmTree& t, int level) {
    if (t.k == BohmTree::K::Pending) return level;
    int best = -1;
    for (const auto& c : t.children) {
        int d = min_pending_rec(c, level + 1);
        if (d >= 0 && (best < 0 || d < best)) best = d;
    }
    return best;
}

int min_pending_depth(const BohmTree& t) {
    return min_pending_rec(t, 0);
}

std::optional<std::vector<int>> head_redex_path(const Tm& t) {
    std::vector<int> path;
    Tm cur = t;
    while (cur->kind == TmKind::Lam) {
        path.push_back(0);
        cur = cur->a;
    }
    while (cur->kind == TmKind::App && cur->a->kind == TmKind::App) {
        path.push_back(0);
        cur = cur->a;
    }
    if (cur->kind == TmKind::App && cur->a->kind == TmKind::Lam) return path;
    return std::nullopt;
}

std::optional<std::vector<int>> leftmost_redex_path(const Tm& t) {
    switch (t->kind) {
    case TmKind::Var:
        return std::nullopt;
    case TmKind::Lam: {
        auto p = leftmost_redex_path(t->a);
        if (!p) return std::nullopt;
        p->insert(p->begin(), 0);
        return p;
    }
    case TmKind::App: {
        if (t->a->kind == TmKind::Lam) return std::vector<int>{};
        if (auto p = leftmost_redex_path(t->a)) {
            p->insert(p->begin(), 0);
            return p;
        }
        if (auto p = leftmost_redex_path(t->b)) {
            p->insert(p->begin(), 1);
            return p;
        }
        return std::nullopt;
    }
    }
    return std::nullopt;
}

std::string bohm_str(const BohmTree& t) {
    if (t.k == BohmTree::K::Pending) return "...";
    std::string out;
    for (const auto& b : t.binders) out += "\\" + b + ". ";
    out += t.headvar;
    for (const auto& c : t.children) {
        out += " (";
        out += bohm_str(c);
        out += ")";
    }
    return out;
}

} // namespace lamu
