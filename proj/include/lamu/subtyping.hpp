#pragma once

#include "lamu/equality.hpp"
#include "lamu/syntax.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lamu {

// Finite set of variable pairs; every variable occurs at most once anywhere
// in the set.
struct SubAssump {
    std::vector<std::pair<std::string, std::string>> pairs; // kept sorted

    static SubAssump of(std::vector<std::pair<std::string, std::string>> ps);
    bool contains(const std::string& x, const std::string& y) const;
    bool well_formed() const;
    bool subset_of(const SubAssump& o) const;
    std::set<std::string> vars() const;
    friend bool operator==(const SubAssump&, const SubAssump&);
};

// nullopt when the union repeats a variable
std::optional<SubAssump> union_assump(const SubAssump& a, const SubAssump& b);

enum class SubRule { Assump, TopR, Reflex, Trans, LaterMono, ArrowMono, MuAmber, Approx };

struct SubDeriv;
using SubDerivPtr = std::shared_ptr<const SubDeriv>;

struct SubDeriv {
    SubRule rule;
    SubAssump gamma;
    Ty lhs, rhs;
    std::vector<SubDerivPtr> premises;
};

SubDerivPtr make_sub(SubRule rule, SubAssump gamma, Ty lhs, Ty rhs,
                     std::vector<SubDerivPtr> premises = {});

struct CheckResult {
    bool ok = true;
    std::vector<std::string> diagnostics;

    void fail(std::string msg) {
        ok = false;
        diagnostics.push_back(std::move(msg));
    }
};

CheckResult check_subderiv(const SubDerivPtr& d);

struct SubBudget {
    int max_k = 4;
    int fuel = 4000;
};

// Bounded certificate search; nullopt means Unknown (never "false").
std::optional<SubDerivPtr> prove_sub(const SubAssump& gamma, const Ty& a, const Ty& b,
                                     SubBudget budget = {});

// Constructive forms of the basic metatheory. All take valid derivations and
// produce valid derivations; rename/weaken/instantiate preserve the height.
SubDerivPtr sub_rename(const SubDerivPtr& d, const std::string& x, const std::string& y,
                       const std::string& x2, const std::string& y2);
SubDerivPtr sub_weaken(const SubDerivPtr& d, const SubAssump& gammaPrime);
SubDerivPtr sub_instantiate(const SubDerivPtr& d, const std::string& x, const std::string& y,
                            const Ty& c);
SubDerivPtr sub_substitute(const SubDerivPtr& d, const std::string& x, const std::string& y,
                           const SubDerivPtr& cd);

// helpers used across modules
SubDerivPtr sub_reflex(SubAssump gamma, Ty a, Ty b);
SubDerivPtr sub_approx_chain(SubAssump gamma, Ty a, int k); // γ ⊢ A ⪯ •ᵏA
SubDerivPtr sub_later_mono(const SubDerivPtr& d, int k);    // wrap k bullets
SubDerivPtr sub_trans(const SubDerivPtr& a, const SubDerivPtr& b);

// Constructive inversion for arrow heads: given a valid d: γ ⊢ A ⪯ B with
// B ≄ ⊤ and ⌜A⌝⁺ = C → D, yields k and ⌜B⌝⁺ = E → F together with checkable
// derivations γ ⊢ E ⪯ •ᵏC and γ ⊢ •ᵏD ⪯ F.
struct SubInversion {
    int k = 0;
    Ty e, f;
    SubDerivPtr dom; // γ ⊢ E ⪯ •ᵏC
    SubDerivPtr cod; // γ ⊢ •ᵏD ⪯ F
};

SubInversion invert_arrow_sub(const SubDerivPtr& d);

} // namespace lamu
