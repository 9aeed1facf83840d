#pragma once

#include "lamu/subtyping.hpp"
#include "lamu/syntax.hpp"

#include <map>
#include <optional>
#include <vector>

namespace lamu {

using Ctx = std::map<std::string, Ty>;

bool ctx_eq(const Ctx& a, const Ctx& b);
Ctx later_ctx(const Ctx& g, int n = 1);
// nullopt when the same variable is bound at non-α-equal types
std::optional<Ctx> union_ctx(const Ctx& a, const Ctx& b);

enum class TypRule { Var, Shift, TopI, Subsume, ArrowI, ArrowE };

struct TypDeriv;
using TypDerivPtr = std::shared_ptr<const TypDeriv>;

struct TypDeriv {
    TypRule rule;
    Ctx ctx;
    Tm subject;
    Ty type;
    std::vector<TypDerivPtr> premises;
    SubDerivPtr sub; // Subsume payload
};

TypDerivPtr make_typ(TypRule rule, Ctx ctx, Tm subject, Ty type,
                     std::vector<TypDerivPtr> premises = {}, SubDerivPtr sub = nullptr);

CheckResult check_typderiv(const TypDerivPtr& d);

// Γ₁ ⊢ M : A  becomes  •Γ₁ ∪ Γ₂ ⊢ M : •A  (derived rule nec)
TypDerivPtr elab_nec(const TypDerivPtr& d, const Ctx& extra = {});

// From Γ₁ ∪ {x:A} ⊢ M : B and Γ₂ ⊢ N : A to Γ₁ ∪ Γ₂ ⊢ M[N/x] : B.
TypDerivPtr elab_subst(const TypDerivPtr& d1, const std::string& x, const TypDerivPtr& d2);

// One-step β-reduction of the subject at the given path (Lam body = 0,
// App fun = 0 / arg = 1), rebuilding a valid derivation of the reduct.
TypDerivPtr subject_reduce(const TypDerivPtr& d, const std::vector<int>& path);

// Basic structural transformations (renaming, weakening, separation,
// erasing); all preserve the derivation skeleton.
TypDerivPtr typ_rename(const TypDerivPtr& d, const std::string& x, const std::string& y);
TypDerivPtr typ_weaken(const TypDerivPtr& d, const std::string& x, const Ty& a);
TypDerivPtr typ_weaken_ctx(const TypDerivPtr& d, const Ctx& target);
TypDerivPtr typ_erase(const TypDerivPtr& d, const std::string& x);
TypDerivPtr typ_separate(const TypDerivPtr& d, const std::string& x, const std::string& y);

// Replaces the binding x:A by x:A' given a certificate ∅ ⊢ A' ⪯ A.
TypDerivPtr typ_ctx_subsume(const TypDerivPtr& d, const std::string& x, const SubDerivPtr& cert);

// The Curry Y-combinator derivation at result type t:
//   ⊢ \f.(\x.f (x x)) (\x.f (x x)) : (•t → t) → t
TypDerivPtr y_combinator_derivation(const Ty& t);

} // namespace lamu
