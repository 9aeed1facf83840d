#pragma once

#include "lamu/measures.hpp"
#include "lamu/syntax.hpp"

#include <optional>
#include <tuple>
#include <vector>

namespace lamu {

enum class EqMode { Congr, Sim }; // ≅ / ≃

// Canonical head of a type expression: ⊤, •ⁿX, or •ⁿ(C → D) with the cod
// never a ⊤-variant. In Sim mode the arrow head always carries n = 0.
struct CanonForm {
    enum class Tag { Top, Var, Arr } tag;
    int bullets = 0;
    std::string var;
    Ty dom, cod;
};

CanonForm canon_form(const Ty& t, EqMode mode);
// The canonical form as a type expression.
Ty canon(const Ty& t, EqMode mode);

struct EqTrace {
    // visited pairs (lhs, rhs, bullet offset) assumed during the decision
    std::vector<std::tuple<Ty, Ty, long>> visited;
};

bool type_eq(const Ty& a, const Ty& b, EqMode mode, EqTrace* trace = nullptr);

// Representatives (first seen) of the ≅-classes of Comp(A).
std::vector<TypeClosure> comp_closure(const Ty& a);

// Truncated rational-tree expansion: unfolds μ, collapses ⊤-variants, and in
// Sim mode pushes • through arrows. Depth counts arrow nodes.
struct TypeTree {
    enum class K { Top, Var, Bullet, Arrow, Cut } k;
    std::string var;
    std::vector<TypeTree> kids;

    bool operator==(const TypeTree& o) const {
        return k == o.k && var == o.var && kids == o.kids;
    }
};

TypeTree tree_expand(const Ty& t, int depth, EqMode mode = EqMode::Congr);
std::string tree_str(const TypeTree& t);

} // namespace lamu
