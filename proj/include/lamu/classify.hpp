#pragma once

#include "lamu/syntax.hpp"

#include <set>

namespace lamu {

// Membership in TF^V: tail finiteness even when the variables in V are
// instantiated by ⊤.
bool tail_finite(const Ty& t, const std::set<std::string>& v = {});

struct ConvClass {
    bool tail_finite = false;
    bool positively_finite = false;
    bool negatively_finite = false;
};

// (PF, NF) grammar membership.
std::pair<bool, bool> pos_neg_finite(const Ty& t);

ConvClass classify_type(const Ty& t);

} // namespace lamu
