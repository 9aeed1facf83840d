#pragma once

#include "lamu/syntax.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace lamu {

// Finite two-relation frame: wf (▷) drives •, pre (R) drives →.
// Single-relation frames are represented with pre = the reflexive-transitive
// closure of wf.
struct Frame {
    std::vector<std::string> worlds;
    std::set<std::pair<int, int>> wf;
    std::set<std::pair<int, int>> pre;

    int world_index(const std::string& name) const;
};

enum class FrameClass {
    WF,      // single-relation, conversely well-founded
    LambdaA, // WF + locally linear
    IK4,     // two-relation, ▷ transitive (cycles allowed; μ-free formulas only)
    IWF,     // two-relation intuitionistic well-founded
    IGL,     // IWF + ▷ transitive
    IGLC,    // IGL + (▷ ⊆ R)
    LA,      // IWF + (▷ ⊆ R) + locally-linear witness condition
};

FrameClass frame_class_of(const std::string& name);
std::string frame_class_name(FrameClass c);

struct FrameReport {
    bool ok = true;
    std::vector<std::string> violations;
};

FrameReport validate_frame(const Frame& f, FrameClass cls);

using Valuation = std::map<std::string, std::set<int>>;

bool is_hereditary(const Frame& f, const Valuation& v);
Valuation hereditary_closure(const Frame& f, Valuation v);

// Two-valued Kripke evaluation; requires a hereditary valuation and, for
// formulas containing μ, an acyclic ▷.
bool model_check(const Frame& f, const Valuation& v, int world, const Ty& a);

Frame random_frame(FrameClass cls, int size, uint64_t seed);
Valuation random_valuation(const Frame& f, const std::vector<std::string>& vars, uint64_t seed);

// The three-world branching frame that separates •(A→B) ⪰ •A→•B: an
// IGLC frame that is not locally linear.
Frame kl_separation_frame();

} // namespace lamu
