#pragma once

#include "lamu/kripke.hpp"
#include "lamu/subtyping.hpp"
#include "lamu/syntax.hpp"

#include <optional>
#include <vector>

namespace lamu {

enum class System { miK4, miGL, miGLC, LA, LAmu };

System system_of(const std::string& name);
std::string system_name(System s);
// frame class against which the system is refuted (and is sound)
FrameClass system_frame_class(System s);

enum class PrfRule { Assump, Nec, Four, ArrowI, ArrowE, Fold, Unfold, LRule, Approx, W };

struct Proof;
using ProofPtr = std::shared_ptr<const Proof>;

struct Proof {
    System system;
    PrfRule rule;
    std::vector<Ty> ctx; // finite set, deduplicated by α
    Ty formula;
    std::vector<ProofPtr> premises;
};

ProofPtr make_proof(System sys, PrfRule rule, std::vector<Ty> ctx, Ty formula,
                    std::vector<ProofPtr> premises = {});

std::vector<Ty> ctx_insert(std::vector<Ty> ctx, const Ty& a);
bool ctx_member(const std::vector<Ty>& ctx, const Ty& a);

CheckResult check_proof(const ProofPtr& p);

// context-monotonicity and substitution, as proof transformations
ProofPtr proof_weaken(const ProofPtr& p, const std::vector<Ty>& extra);
ProofPtr proof_subst(const ProofPtr& p, const std::string& x, const Ty& c);
// from Γ∪{A} ⊢ B and Γ' ⊢ A, derive Γ∪Γ' ⊢ B
ProofPtr proof_cut(const ProofPtr& main, const Ty& hyp, const ProofPtr& arg);

// Canned theorems. Throw std::invalid_argument when the system lacks the
// required rules or a precondition fails.
ProofPtr theorem_k(System sys, const Ty& a, const Ty& b); // ⊢ •(A→B) → •A→•B
ProofPtr theorem_y(System sys, const Ty& a);              // ⊢ (•A→A) → A
ProofPtr theorem_loeb(System sys, const Ty& a);           // ⊢ •(•A→A) → •A
ProofPtr theorem_tail_entails(const Ty& a);               // {†A} ⊢ A      (LAμ)
ProofPtr theorem_top_variant(const Ty& a);                // ⊢ A, A a ⊤-variant (LAμ)

// derived K as a rule: from Γ ⊢ •(A→B) conclude Γ ⊢ •A→•B
ProofPtr derived_k(const ProofPtr& p);

struct LogicBudget {
    int fuel = 6000;
    int bullet_bound = 3;
    int max_worlds = 4;
};

std::optional<ProofPtr> prove(System sys, const std::vector<Ty>& ctx, const Ty& goal,
                              LogicBudget budget = {});

struct Counter {
    Frame frame;
    Valuation val;
    int world = 0;
};

std::optional<Counter> countermodel(System sys, const std::vector<Ty>& ctx, const Ty& goal,
                                    int max_worlds);

struct Decision {
    enum class V { Provable, Refutable, Unknown } verdict = V::Unknown;
    ProofPtr proof;
    std::optional<Counter> counter;
};

Decision decide(System sys, const std::vector<Ty>& ctx, const Ty& goal, LogicBudget budget = {});

} // namespace lamu
