#pragma once

#include "lamu/syntax.hpp"

#include <cstdint>
#include <iosfwd>

namespace lamu {

// N ∪ {∞} with saturating addition and min.
class ExtNat {
public:
    constexpr ExtNat() : v_(0) {}
    constexpr explicit ExtNat(uint64_t v) : v_(v) {}
    static constexpr ExtNat inf() { return ExtNat(kInf, 0); }

    bool is_inf() const { return v_ == kInf; }
    uint64_t value() const { return v_; } // meaningful only when finite

    friend ExtNat operator+(ExtNat a, ExtNat b) {
        if (a.is_inf() || b.is_inf()) return inf();
        uint64_t s = a.v_ + b.v_;
        if (s < a.v_ || s >= kInf) return inf();
        return ExtNat(s);
    }
    friend ExtNat min(ExtNat a, ExtNat b) { return a.v_ <= b.v_ ? a : b; }
    friend bool operator==(ExtNat a, ExtNat b) { return a.v_ == b.v_; }
    friend bool operator!=(ExtNat a, ExtNat b) { return a.v_ != b.v_; }
    friend bool operator<(ExtNat a, ExtNat b) { return a.v_ < b.v_; }
    friend bool operator<=(ExtNat a, ExtNat b) { return a.v_ <= b.v_; }
    friend bool operator>(ExtNat a, ExtNat b) { return a.v_ > b.v_; }

    std::string str() const { return is_inf() ? "inf" : std::to_string(v_); }

private:
    static constexpr uint64_t kInf = UINT64_MAX;
    constexpr ExtNat(uint64_t v, int) : v_(v) {}
    uint64_t v_;
};

// The rightmost spine of a type through arrows.
Ty tail(const Ty& t);

bool is_top_variant(const Ty& t);

// declared in syntax.hpp: bool is_proper(const Ty&, const std::string&);

struct EtvSets {
    std::set<std::string> positive;
    std::set<std::string> negative;
    std::set<std::string> all() const {
        std::set<std::string> u = positive;
        u.insert(negative.begin(), negative.end());
        return u;
    }
};

EtvSets etv(const Ty& t);

int height(const Ty& t);
int rank(const Ty& t);

enum class DepthKind { Later, Arrow };
enum class Sign { Pos, Neg };

ExtNat depth(const Ty& t, const std::string& x, DepthKind kind, Sign sign);
// min of the positive and negative depths
ExtNat depth_both(const Ty& t, const std::string& x, DepthKind kind);

Ty shift(const Ty& t, int n);

} // namespace lamu
