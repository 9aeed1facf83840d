#pragma once

#include "lamu/syntax.hpp"

#include <optional>
#include <vector>

namespace lamu {

enum class Strategy { Leftmost, Head };

// One-step contraction of the strategy's redex; nullopt when there is none
// (for Head: exactly when the term is a head normal form).
std::optional<Tm> beta_step(const Tm& t, Strategy strategy);

struct ReduceResult {
    bool ok = false; // false: fuel exhausted
    Tm term;
    long steps = 0;
};

ReduceResult head_normalize(Tm t, long fuel);
// Leftmost-outermost reduction to β-normal form.
ReduceResult normalize(Tm t, long fuel);

bool is_hnf(const Tm& t);

// Böhm tree, depth-bounded. Pending marks both fuel exhaustion and the depth
// cut; divergence is never asserted.
struct BohmTree {
    enum class K { Head, Pending } k;
    std::vector<std::string> binders;
    std::string headvar;
    std::vector<BohmTree> children;
    Tm pending; // term not yet expanded (K::Pending)
};

BohmTree bohm_tree(const Tm& t, int depth, long fuel);

// Depth (in Böhm-tree levels) of the shallowest Pending node; -1 if none.
int min_pending_depth(const BohmTree& t);

std::string bohm_str(const BohmTree& t);

// Paths address subterms: Lam body = 0, App fun = 0, App arg = 1.
std::optional<std::vector<int>> head_redex_path(const Tm& t);
std::optional<std::vector<int>> leftmost_redex_path(const Tm& t);

} // namespace lamu
