#include "lamu/kripke.hpp"

#include "lamu/equality.hpp"
#include "lamu/measures.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace lamu {

int Frame::world_index(const std::string& name) const {
    for (size_t i = 0; i < worlds.size(); ++i)
        if (worlds[i] == name) return static_cast<int>(i);
    return -1;
}

FrameClass frame_class_of(const std::string& name) {
    if (name == "wf") return FrameClass::WF;
    if (name == "lambda-a" || name == "lambdaa") return FrameClass::LambdaA;
    if (name == "ik4") return FrameClass::IK4;
    if (name == "iwf") return FrameClass::IWF;
    if (name == "igl") return FrameClass::IGL;
    if (name == "iglc") return FrameClass::IGLC;
    if (name == "la") return FrameClass::LA;
    throw std::invalid_argument("unknown frame class: " + name);
}

std::string frame_class_name(FrameClass c) {
    switch (c) {
    case FrameClass::WF: return "wf";
    case FrameClass::LambdaA: return "lambda-a";
    case FrameClass::IK4: return "ik4";
    case FrameClass::IWF: return "iwf";
    case FrameClass::IGL: return "igl";
    case FrameClass::IGLC: return "iglc";
    case FrameClass::LA: return "la";
    }
    return "?";
}

namespace {

bool has(const std::set<std::pair<int, int>>& r, int a, int b) {
    return r.count({a, b}) != 0;
}

bool acyclic(int n, const std::set<std::pair<int, int>>& r) {
    // DFS cycle detection
    std::vector<int> state(n, 0); // 0 unseen, 1 active, 2 done
    std::vector<std::vector<int>> succ(n);
    for (auto& [a, b] : r) succ[a].push_back(b);
    std::vector<std::pair<int, int>> stack;
    for (int s = 0; s < n; ++s) {
        if (state[s]) continue;
        stack.push_back({s, 0});
        state[s] = 1;
        while (!stack.empty()) {
            auto& [v, i] = stack.back();
            if (i < static_cast<int>(succ[v].size())) {
                int w = succ[v][i++];
                if (state[w] == 1) return false;
                if (state[w] == 0) {
                    state[w] = 1;
                    stack.push_back({w, 0});
                }
            } else {
                state[v] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

std::set<std::pair<int, int>> refl_trans_closure(int n, std::set<std::pair<int, int>> r) {
    for (int i = 0; i < n; ++i) r.insert({i, i});
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::pair<int, int>> add;
        for (auto& [a, b] : r)
            for (auto& [c, d] : r)
                if (b == c && !r.count({a, d})) add.push_back({a, d});
        if (!add.empty()) {
            changed = true;
            for (auto& p : add) r.insert(p);
        }
    }
    return r;
}

bool is_transitive(const std::set<std::pair<int, int>>& r) {
    for (auto& [a, b] : r)
        for (auto& [c, d] : r)
            if (b == c && !r.count({a, d})) return false;
    return true;
}

// condition 6 of LA frames: p ▷ q R q' implies some r with p R r ▷ q' and
// (r ▷ s implies q' R s).
bool locally_linear_witness(const Frame& f) {
    int n = static_cast<int>(f.worlds.size());
    for (auto& [p, q] : f.wf) {
        for (int q2 = 0; q2 < n; ++q2) {
            if (!has(f.pre, q, q2)) continue;
            bool found = false;
            for (int r = 0; r < n && !found; ++r) {
                if (!has(f.pre, p, r) || !has(f.wf, r, q2)) continue;
                bool ok = true;
                for (int s = 0; s < n; ++s)
                    if (has(f.wf, r, s) && !has(f.pre, q2, s)) {
                        ok = false;
                        break;
                    }
                if (ok) found = true;
            }
            if (!found) return false;
        }
    }
    return true;
}

} // namespace

FrameReport validate_frame(const Frame& f, FrameClass cls) {
    FrameReport rep;
    auto fail = [&](const std::string& m) {
        rep.ok = false;
        rep.violations.push_back(m);
    };
    int n = static_cast<int>(f.worlds.size());
    if (n == 0) fail("empty world set");
    for (auto& [a, b] : f.wf)
        if (a < 0 || a >= n || b < 0 || b >= n) fail("wf relation out of range");
    for (auto& [a, b] : f.pre)
        if (a < 0 || a >= n || b < 0 || b >= n) fail("pre relation out of range");
    if (!rep.ok) return rep;

    bool single = cls == FrameClass::WF || cls == FrameClass::LambdaA;
    if (single) {
        if (!acyclic(n, f.wf)) fail("wf relation has a cycle");
        if (f.pre != refl_trans_closure(n, f.wf))
            fail("pre must be the reflexive-transitive closure of wf");
        if (cls == FrameClass::LambdaA && rep.ok && !locally_linear_witness(f))
            fail("wf is not locally linear");
        return rep;
    }

    // two-relation classes
    if (cls != FrameClass::IK4 && !acyclic(n, f.wf)) fail("wf relation has a cycle (cond 1)");
    for (int i = 0; i < n; ++i)
        if (!has(f.pre, i, i)) fail("pre not reflexive (cond 2)");
    if (!is_transitive(f.pre)) fail("pre not transitive (cond 2)");
    for (auto& [p, q] : f.pre)
        for (auto& [q2, r] : f.wf)
            if (q == q2 && !has(f.wf, p, r)) fail("pre;wf not within wf (cond 3)");
    if (cls == FrameClass::IK4 || cls == FrameClass::IGL || cls == FrameClass::IGLC) {
        if (!is_transitive(f.wf)) fail("wf not transitive (cond 4)");
    }
    if (cls == FrameClass::IGLC || cls == FrameClass::LA) {
        for (auto& [p, q] : f.wf)
            if (!has(f.pre, p, q)) fail("wf not within pre (cond 5)");
    }
    if (cls == FrameClass::LA) {
        if (!locally_linear_witness(f)) fail("locally-linear witness missing (cond 6)");
    }
    return rep;
}

bool is_hereditary(const Frame& f, const Valuation& v) {
    for (const auto& [x, ws] : v)
        for (int p : ws)
            for (auto& [a, b] : f.pre)
                if (a == p && !ws.count(b)) return false;
    return true;
}

Valuation hereditary_closure(const Frame& f, Valuation v) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [x, ws] : v) {
            std::vector<int> add;
            for (int p : ws)
                for (auto& [a, b] : f.pre)
                    if (a == p && !ws.count(b)) add.push_back(b);
            if (!add.empty()) {
                changed = true;
                for (int w : add) ws.insert(w);
            }
        }
    }
    return v;
}

namespace {

struct Evaluator {
    const Frame& f;
    const Valuation& v;
    std::map<std::pair<int, std::string>, bool> memo;

    bool eval(int p, const Ty& a) {
        if (is_top_variant(a)) return true;
        auto key = std::make_pair(p, type_key(a));
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool out = compute(p, a);
        memo.emplace(std::move(key), out);
        return out;
    }

    bool compute(int p, const Ty& a) {
        switch (a->kind) {
        case TyKind::Var: {
            auto it = v.find(a->name);
            return it != v.end() && it->second.count(p);
        }
        case TyKind::Later: {
            for (auto& [q1, q2] : f.wf)
                if (q1 == p && !eval(q2, a->a)) return false;
            return true;
        }
        case TyKind::Arrow: {
            for (auto& [q1, q2] : f.pre)
                if (q1 == p && eval(q2, a->a) && !eval(q2, a->b)) return false;
            return true;
        }
        case TyKind::Mu:
            return eval(p, unfold_mu(a));
        }
        return false;
    }
};

} // namespace

bool model_check(const Frame& f, const Valuation& v, int world, const Ty& a) {
    if (world < 0 || world >= static_cast<int>(f.worlds.size()))
        throw std::invalid_argument("model_check: world out of range");
    if (!is_hereditary(f, v)) throw std::invalid_argument("model_check: valuation not hereditary");
    if (contains_mu(a) && !acyclic(static_cast<int>(f.worlds.size()), f.wf))
        throw std::invalid_argument("model_check: μ-formula over a cyclic frame");
    Evaluator ev{f, v, {}};
    return ev.eval(world, a);
}

// ---------------------------------------------------------------------------
// Random generators (rejection sampling with a chain fallback)
// ---------------------------------------------------------------------------

namespace {

Frame chain_frame(int n) {
    Frame f;
    for (int i = 0; i < n; ++i) f.worlds.push_back("w" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i > j) f.wf.insert({i, j}); // greater-than
            if (i >= j) f.pre.insert({i, j});
        }
    return f;
}

} // namespace

Frame random_frame(FrameClass cls, int size, uint64_t seed) {
    std::mt19937_64 rng(seed);
    int n = std::max(1, size);
    for (int attempt = 0; attempt < 400; ++attempt) {
        Frame f;
        for (int i = 0; i < n; ++i) f.worlds.push_back("w" + std::to_string(i));
        // random DAG respecting the index order, then closure repairs
        std::uniform_int_distribution<int> coin(0, 99);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j)
                if (coin(rng) < 45) f.wf.insert({i, j});
        if (cls == FrameClass::IK4 || cls == FrameClass::IGL || cls == FrameClass::IGLC ||
            cls == FrameClass::LA) {
            // transitive closure of wf
            bool ch = true;
            while (ch) {
                ch = false;
                std::vector<std::pair<int, int>> add;
                for (auto& [a, b] : f.wf)
                    for (auto& [c, d] : f.wf)
                        if (b == c && !f.wf.count({a, d})) add.push_back({a, d});
                for (auto& p : add) f.wf.insert(p);
                ch = !add.empty();
            }
        }
        if (cls == FrameClass::WF || cls == FrameClass::LambdaA) {
            f.pre = refl_trans_closure(n, f.wf);
        } else {
            for (int i = 0; i < n; ++i) f.pre.insert({i, i});
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < i; ++j)
                    if (coin(rng) < 25) f.pre.insert({i, j});
            if (cls == FrameClass::IGLC || cls == FrameClass::LA)
                for (auto& p : f.wf) f.pre.insert(p);
            f.pre = refl_trans_closure(n, f.pre);
            // repair condition 3 by extending wf along pre;wf
            bool ch = true;
            while (ch) {
                ch = false;
                std::vector<std::pair<int, int>> add;
                for (auto& [p, q] : f.pre)
                    for (auto& [q2, r] : f.wf)
                        if (q == q2 && !f.wf.count({p, r})) add.push_back({p, r});
                for (auto& p : add) f.wf.insert(p);
                ch = !add.empty();
            }
        }
        if (validate_frame(f, cls).ok) return f;
    }
    Frame f = chain_frame(n);
    if (!validate_frame(f, cls).ok) throw std::logic_error("random_frame: fallback invalid");
    return f;
}

Valuation random_valuation(const Frame& f, const std::vector<std::string>& vars, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coin(0, 1);
    Valuation v;
    for (const auto& x : vars) {
        std::set<int> ws;
        for (size_t i = 0; i < f.worlds.size(); ++i)
            if (coin(rng)) ws.insert(static_cast<int>(i));
        v[x] = std::move(ws);
    }
    return hereditary_closure(f, v);
}

Frame kl_separation_frame() {
    Frame f;
    f.worlds = {"p", "q", "s"};
    f.wf = {{0, 1}, {0, 2}};
    f.pre = {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}};
    return f;
}

} // namespace lamu
