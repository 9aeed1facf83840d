#include "lamu/json_io.hpp"

#include "lamu/equality.hpp"
#include "lamu/lambda.hpp"

#include <stdexcept>

namespace lamu {

namespace {

const std::map<std::string, SubRule>& sub_rule_table() {
    static const std::map<std::string, SubRule> t{
        {"assump", SubRule::Assump},       {"top", SubRule::TopR},
        {"reflex", SubRule::Reflex},       {"trans", SubRule::Trans},
        {"later-mono", SubRule::LaterMono}, {"arrow-mono", SubRule::ArrowMono},
        {"mu-amber", SubRule::MuAmber},    {"approx", SubRule::Approx}};
    return t;
}

std::string sub_rule_str(SubRule r) {
    for (const auto& [k, v] : sub_rule_table())
        if (v == r) return k;
    return "?";
}

const std::map<std::string, TypRule>& typ_rule_table() {
    static const std::map<std::string, TypRule> t{
        {"var", TypRule::Var},         {"shift", TypRule::Shift},
        {"top", TypRule::TopI},        {"subsume", TypRule::Subsume},
        {"arrow-i", TypRule::ArrowI},  {"arrow-e", TypRule::ArrowE}};
    return t;
}

std::string typ_rule_str(TypRule r) {
    for (const auto& [k, v] : typ_rule_table())
        if (v == r) return k;
    return "?";
}

const std::map<std::string, PrfRule>& prf_rule_table() {
    static const std::map<std::string, PrfRule> t{
        {"assump", PrfRule::Assump}, {"nec", PrfRule::Nec},     {"four", PrfRule::Four},
        {"arrow-i", PrfRule::ArrowI}, {"arrow-e", PrfRule::ArrowE}, {"fold", PrfRule::Fold},
        {"unfold", PrfRule::Unfold}, {"l", PrfRule::LRule},     {"approx", PrfRule::Approx},
        {"w", PrfRule::W}};
    return t;
}

std::string prf_rule_str(PrfRule r) {
    for (const auto& [k, v] : prf_rule_table())
        if (v == r) return k;
    return "?";
}

} // namespace

Json sub_to_json(const SubDerivPtr& d) {
    Json gamma = Json::array();
    for (const auto& [x, y] : d->gamma.pairs) gamma.push_back(Json::array({x, y}));
    Json prems = Json::array();
    for (const auto& p : d->premises) prems.push_back(sub_to_json(p));
    Json side = Json::object();
    if (d->rule == SubRule::Trans && !d->premises.empty())
        side["middle"] = print_type(d->premises[0]->rhs);
    if (d->rule == SubRule::MuAmber && !d->premises.empty()) {
        for (const auto& pr : d->premises[0]->gamma.pairs)
            if (!d->gamma.contains(pr.first, pr.second))
                side["pair"] = Json::array({pr.first, pr.second});
    }
    return Json{{"rule", sub_rule_str(d->rule)},
                {"conclusion",
                 {{"gamma", gamma}, {"lhs", print_type(d->lhs)}, {"rhs", print_type(d->rhs)}}},
                {"premises", prems},
                {"side", side}};
}

SubDerivPtr sub_from_json(const Json& j) {
    const auto& table = sub_rule_table();
    auto it = table.find(j.at("rule").get<std::string>());
    if (it == table.end()) throw std::invalid_argument("unknown subtyping rule");
    const Json& c = j.at("conclusion");
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& p : c.at("gamma")) pairs.emplace_back(p.at(0), p.at(1));
    std::vector<SubDerivPtr> prems;
    if (j.contains("premises"))
        for (const auto& p : j.at("premises")) prems.push_back(sub_from_json(p));
    return make_sub(it->second, SubAssump::of(std::move(pairs)),
                    parse_type(c.at("lhs").get<std::string>()),
                    parse_type(c.at("rhs").get<std::string>()), std::move(prems));
}

Json typ_to_json(const TypDerivPtr& d) {
    Json ctx = Json::object();
    for (const auto& [x, t] : d->ctx) ctx[x] = print_type(t);
    Json prems = Json::array();
    for (const auto& p : d->premises) prems.push_back(typ_to_json(p));
    Json out{{"rule", typ_rule_str(d->rule)},
             {"conclusion",
              {{"ctx", ctx}, {"term", print_term(d->subject)}, {"type", print_type(d->type)}}},
             {"premises", prems}};
    if (d->sub) out["sub"] = sub_to_json(d->sub);
    return out;
}

TypDerivPtr typ_from_json(const Json& j) {
    const auto& table = typ_rule_table();
    auto it = table.find(j.at("rule").get<std::string>());
    if (it == table.end()) throw std::invalid_argument("unknown typing rule");
    const Json& c = j.at("conclusion");
    Ctx ctx;
    for (const auto& [x, t] : c.at("ctx").items()) ctx.emplace(x, parse_type(t.get<std::string>()));
    std::vector<TypDerivPtr> prems;
    if (j.contains("premises"))
        for (const auto& p : j.at("premises")) prems.push_back(typ_from_json(p));
    SubDerivPtr sub;
    if (j.contains("sub")) sub = sub_from_json(j.at("sub"));
    return make_typ(it->second, std::move(ctx), parse_term(c.at("term").get<std::string>()),
                    parse_type(c.at("type").get<std::string>()), std::move(prems), std::move(sub));
}

Json proof_to_json(const ProofPtr& p) {
    Json ctx = Json::array();
    for (const auto& t : p->ctx) ctx.push_back(print_type(t));
    Json prems = Json::array();
    for (const auto& q : p->premises) prems.push_back(proof_to_json(q));
    return Json{{"system", system_name(p->system)},
                {"rule", prf_rule_str(p->rule)},
                {"conclusion", {{"ctx", ctx}, {"formula", print_type(p->formula)}}},
                {"premises", prems}};
}

ProofPtr proof_from_json(const Json& j) {
    const auto& table = prf_rule_table();
    auto it = table.find(j.at("rule").get<std::string>());
    if (it == table.end()) throw std::invalid_argument("unknown proof rule");
    System sys = system_of(j.at("system").get<std::string>());
    const Json& c = j.at("conclusion");
    std::vector<Ty> ctx;
    for (const auto& t : c.at("ctx")) ctx = ctx_insert(std::move(ctx), parse_type(t.get<std::string>()));
    std::vector<ProofPtr> prems;
    if (j.contains("premises"))
        for (const auto& q : j.at("premises")) prems.push_back(proof_from_json(q));
    return make_proof(sys, it->second, std::move(ctx),
                      parse_type(c.at("formula").get<std::string>()), std::move(prems));
}

Json frame_to_json(const Frame& f, const Valuation* v) {
    Json worlds = Json::array();
    for (const auto& w : f.worlds) worlds.push_back(w);
    Json wf = Json::array();
    for (const auto& [a, b] : f.wf) wf.push_back(Json::array({f.worlds[a], f.worlds[b]}));
    Json pre = Json::array();
    for (const auto& [a, b] : f.pre) pre.push_back(Json::array({f.worlds[a], f.worlds[b]}));
    Json out{{"worlds", worlds}, {"wf", wf}, {"pre", pre}};
    if (v) {
        Json val = Json::object();
        for (const auto& [x, ws] : *v) {
            Json arr = Json::array();
            for (int w : ws) arr.push_back(f.worlds[w]);
            val[x] = arr;
        }
        out["val"] = val;
    }
    return out;
}

Frame frame_from_json(const Json& j) {
    Frame f;
    for (const auto& w : j.at("worlds")) f.worlds.push_back(w.get<std::string>());
    auto idx = [&](const Json& name) {
        int i = f.world_index(name.get<std::string>());
        if (i < 0) throw std::invalid_argument("unknown world: " + name.get<std::string>());
        return i;
    };
    for (const auto& p : j.at("wf")) f.wf.insert({idx(p.at(0)), idx(p.at(1))});
    for (const auto& p : j.at("pre")) f.pre.insert({idx(p.at(0)), idx(p.at(1))});
    return f;
}

Valuation valuation_from_json(const Frame& f, const Json& j) {
    Valuation v;
    for (const auto& [x, arr] : j.items()) {
        std::set<int> ws;
        for (const auto& w : arr) {
            int i = f.world_index(w.get<std::string>());
            if (i < 0) throw std::invalid_argument("unknown world in valuation");
            ws.insert(i);
        }
        v[x] = std::move(ws);
    }
    return v;
}

Json bohm_to_json(const BohmTree& t) {
    if (t.k == BohmTree::K::Pending) return Json{{"pending", print_term(t.pending)}};
    Json kids = Json::array();
    for (const auto& c : t.children) kids.push_back(bohm_to_json(c));
    Json binders = Json::array();
    for (const auto& b : t.binders) binders.push_back(b);
    return Json{{"binders", binders}, {"head", t.headvar}, {"children", kids}};
}

Json tree_to_json(const TypeTree& t) {
    switch (t.k) {
    case TypeTree::K::Top: return Json{{"top", true}};
    case TypeTree::K::Var: return Json{{"var", t.var}};
    case TypeTree::K::Bullet: return Json{{"bullet", tree_to_json(t.kids[0])}};
    case TypeTree::K::Arrow:
        return Json{{"dom", tree_to_json(t.kids[0])}, {"cod", tree_to_json(t.kids[1])}};
    case TypeTree::K::Cut: return Json{{"cut", true}};
    }
    return {};
}

} // namespace lamu
