// Command-line front end: every subsystem behind one binary with JSON output.

#include "lamu/classify.hpp"
#include "lamu/equality.hpp"
#include "lamu/json_io.hpp"
#include "lamu/lambda.hpp"
#include "lamu/logic.hpp"
#include "lamu/measures.hpp"
#include "lamu/subtyping.hpp"
#include "lamu/typing.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace lamu;

namespace {

enum ExitCode { Yes = 0, No = 1, Unknown = 2, Usage = 64, BadData = 65, Internal = 70 };

struct Output {
    std::string command;
    std::string verdict;
    Json payload = Json::object();
    std::vector<std::string> diagnostics;
    int exit_code = Yes;
    bool compact = false;

    int emit() const {
        Json rep{{"command", command},
                 {"verdict", verdict},
                 {"payload", payload},
                 {"diagnostics", diagnostics}};
        std::cout << (compact ? rep.dump() : rep.dump(2)) << "\n";
        return exit_code;
    }
};

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

EqMode mode_of(const std::string& m) {
    if (m == "congr") return EqMode::Congr;
    if (m == "sim") return EqMode::Sim;
    throw CLI::ValidationError("--mode must be congr or sim");
}

std::vector<int> parse_path(const std::string& s) {
    std::vector<int> out;
    size_t i = 0;
    while (i < s.size()) {
        size_t j = s.find('.', i);
        if (j == std::string::npos) j = s.size();
        out.push_back(std::stoi(s.substr(i, j - i)));
        i = j + 1;
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App cli{"analyses for recursive modal types and the logics behind them"};
    cli.require_subcommand(1);
    cli.fallthrough();
    bool compact = false;
    cli.add_flag("--json", compact, "compact single-line JSON output");

    std::string ty_a, ty_b, mode = "congr", file1, file2, term_s, world, formula, system = "lamu";
    std::string frame_class = "la", ctx_s, var_name, path_s, extend_s;
    long fuel = 100000;
    int bohm_depth = 4, max_k = 4, max_worlds = 4;
    uint64_t seed = 1;

    auto* c_measure = cli.add_subcommand("measure", "structural measures of a type");
    c_measure->add_option("type", ty_a)->required();

    auto* c_canon = cli.add_subcommand("canon", "canonical form of a type");
    c_canon->add_option("--mode", mode);
    c_canon->add_option("type", ty_a)->required();

    auto* c_eq = cli.add_subcommand("eq", "decide type equality");
    c_eq->add_option("--mode", mode);
    c_eq->add_option("lhs", ty_a)->required();
    c_eq->add_option("rhs", ty_b)->required();

    auto* c_comp = cli.add_subcommand("comp", "component closure representatives");
    c_comp->add_option("type", ty_a)->required();

    auto* c_classify = cli.add_subcommand("classify", "convergence classification");
    c_classify->add_option("type", ty_a)->required();

    auto* c_sub = cli.add_subcommand("sub", "subtyping certificates");
    c_sub->fallthrough();
    auto* c_sub_check = c_sub->add_subcommand("check", "validate a certificate file");
    c_sub_check->add_option("file", file1)->required();
    auto* c_sub_prove = c_sub->add_subcommand("prove", "search for a certificate");
    c_sub_prove->add_option("--max-k", max_k);
    c_sub_prove->add_option("lhs", ty_a)->required();
    c_sub_prove->add_option("rhs", ty_b)->required();

    auto* c_type = cli.add_subcommand("type", "typing derivations");
    c_type->fallthrough();
    auto* c_type_check = c_type->add_subcommand("check", "validate a derivation file");
    c_type_check->add_option("file", file1)->required();
    auto* c_type_nec = c_type->add_subcommand("nec", "apply the derived nec rule");
    c_type_nec->add_option("file", file1)->required();
    c_type_nec->add_option("--extend", extend_s, "extra context, e.g. \"x:A,y:B\"");
    auto* c_type_subst = c_type->add_subcommand("subst", "substitute a derivation");
    c_type_subst->add_option("file1", file1)->required();
    c_type_subst->add_option("file2", file2)->required();
    c_type_subst->add_option("--var", var_name)->required();
    auto* c_type_step = c_type->add_subcommand("step", "subject reduction at a redex path");
    c_type_step->add_option("file", file1)->required();
    c_type_step->add_option("--path", path_s);

    auto* c_term = cli.add_subcommand("term", "untyped reduction");
    c_term->fallthrough();
    auto* c_term_hnf = c_term->add_subcommand("hnf", "head normalization");
    c_term_hnf->add_option("--fuel", fuel);
    c_term_hnf->add_option("term", term_s)->required();
    auto* c_term_bohm = c_term->add_subcommand("bohm", "Böhm tree expansion");
    c_term_bohm->add_option("--fuel", fuel);
    c_term_bohm->add_option("--depth", bohm_depth);
    c_term_bohm->add_option("term", term_s)->required();

    auto* c_kripke = cli.add_subcommand("kripke", "frames and model checking");
    c_kripke->fallthrough();
    auto* c_k_validate = c_kripke->add_subcommand("validate", "frame class validation");
    c_k_validate->add_option("--class", frame_class);
    c_k_validate->add_option("file", file1)->required();
    auto* c_k_eval = c_kripke->add_subcommand("eval", "evaluate a formula at a world");
    c_k_eval->add_option("file", file1)->required();
    c_k_eval->add_option("world", world)->required();
    c_k_eval->add_option("formula", formula)->required();
    int frame_size = 4;
    std::string frame_vars = "X,Y";
    auto* c_k_random = c_kripke->add_subcommand("random", "seeded random frame and valuation");
    c_k_random->add_option("--class", frame_class);
    c_k_random->add_option("--size", frame_size);
    c_k_random->add_option("--seed", seed);
    c_k_random->add_option("--vars", frame_vars, "comma-separated propositional variables");

    auto* c_logic = cli.add_subcommand("logic", "proof systems");
    c_logic->fallthrough();
    auto* c_l_check = c_logic->add_subcommand("check", "validate a proof file");
    c_l_check->add_option("file", file1)->required();
    auto* c_l_prove = c_logic->add_subcommand("prove", "bounded proof search");
    c_l_prove->add_option("--system", system);
    c_l_prove->add_option("--ctx", ctx_s, "comma-separated hypotheses");
    c_l_prove->add_option("goal", formula)->required();
    auto* c_l_counter = c_logic->add_subcommand("counter", "countermodel search");
    c_l_counter->add_option("--system", system);
    c_l_counter->add_option("--ctx", ctx_s);
    c_l_counter->add_option("--max-worlds", max_worlds);
    c_l_counter->add_option("goal", formula)->required();
    auto* c_l_decide = c_logic->add_subcommand("decide", "prove or refute with budgets");
    c_l_decide->add_option("--system", system);
    c_l_decide->add_option("--ctx", ctx_s);
    c_l_decide->add_option("--max-worlds", max_worlds);
    c_l_decide->add_option("goal", formula)->required();

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = cli.exit(e);
        return rc == 0 ? 0 : Usage;
    }

    Output out;
    out.compact = compact;

    auto parse_ctx_types = [&]() {
        std::vector<Ty> ctx;
        size_t i = 0;
        while (i < ctx_s.size()) {
            size_t j = ctx_s.find(',', i);
            if (j == std::string::npos) j = ctx_s.size();
            std::string piece = ctx_s.substr(i, j - i);
            if (!piece.empty()) ctx = ctx_insert(std::move(ctx), parse_type(piece));
            i = j + 1;
        }
        return ctx;
    };

    try {
        if (c_measure->parsed()) {
            out.command = "measure";
            Ty t = parse_type(ty_a);
            EtvSets e = etv(t);
            Json depths = Json::object();
            for (const auto& x : free_tvars(t)) {
                depths[x] = {{"later_pos", depth(t, x, DepthKind::Later, Sign::Pos).str()},
                             {"later_neg", depth(t, x, DepthKind::Later, Sign::Neg).str()},
                             {"arrow_pos", depth(t, x, DepthKind::Arrow, Sign::Pos).str()},
                             {"arrow_neg", depth(t, x, DepthKind::Arrow, Sign::Neg).str()}};
            }
            out.payload = {{"type", print_type(t)},
                           {"tail", print_type(tail(t))},
                           {"top_variant", is_top_variant(t)},
                           {"etv",
                            {{"pos", Json(e.positive)}, {"neg", Json(e.negative)}}},
                           {"height", height(t)},
                           {"rank", rank(t)},
                           {"depths", depths}};
            out.verdict = "ok";
        } else if (c_canon->parsed()) {
            out.command = "canon";
            Ty t = parse_type(ty_a);
            out.payload = {{"type", print_type(t)}, {"canon", print_type(canon(t, mode_of(mode)))}};
            out.verdict = "ok";
        } else if (c_eq->parsed()) {
            out.command = "eq";
            Ty a = parse_type(ty_a);
            Ty b = parse_type(ty_b);
            EqTrace trace;
            bool eq = type_eq(a, b, mode_of(mode), &trace);
            Json visited = Json::array();
            for (const auto& [l, r, delta] : trace.visited)
                visited.push_back(
                    {{"lhs", print_type(l)}, {"rhs", print_type(r)}, {"offset", delta}});
            out.payload = {{"equal", eq}, {"visited", visited}};
            out.verdict = eq ? "equal" : "inequal";
            out.exit_code = eq ? Yes : No;
        } else if (c_comp->parsed()) {
            out.command = "comp";
            Ty t = parse_type(ty_a);
            Json reps = Json::array();
            for (const auto& cl : comp_closure(t)) reps.push_back(print_type(cl.expand()));
            out.payload = {{"type", print_type(t)}, {"representatives", reps}};
            out.verdict = "ok";
        } else if (c_classify->parsed()) {
            out.command = "classify";
            Ty t = parse_type(ty_a);
            ConvClass c = classify_type(t);
            out.payload = {{"type", print_type(t)},
                           {"tail_finite", c.tail_finite},
                           {"positively_finite", c.positively_finite},
                           {"negatively_finite", c.negatively_finite}};
            out.verdict = "ok";
        } else if (c_sub_check->parsed()) {
            out.command = "sub check";
            SubDerivPtr d = sub_from_json(load_json(file1));
            CheckResult r = check_subderiv(d);
            out.payload = {{"conclusion",
                            {{"lhs", print_type(d->lhs)}, {"rhs", print_type(d->rhs)}}}};
            out.diagnostics = r.diagnostics;
            out.verdict = r.ok ? "valid" : "invalid";
            out.exit_code = r.ok ? Yes : No;
        } else if (c_sub_prove->parsed()) {
            out.command = "sub prove";
            Ty a = parse_type(ty_a);
            Ty b = parse_type(ty_b);
            SubBudget budget;
            budget.max_k = max_k;
            auto d = prove_sub({}, a, b, budget);
            if (d) {
                out.payload = {{"certificate", sub_to_json(*d)}};
                out.verdict = "proved";
                out.exit_code = Yes;
            } else {
                out.verdict = "unknown";
                out.exit_code = Unknown;
            }
        } else if (c_type_check->parsed()) {
            out.command = "type check";
            TypDerivPtr d = typ_from_json(load_json(file1));
            CheckResult r = check_typderiv(d);
            out.payload = {{"term", print_term(d->subject)}, {"type", print_type(d->type)}};
            out.diagnostics = r.diagnostics;
            out.verdict = r.ok ? "valid" : "invalid";
            out.exit_code = r.ok ? Yes : No;
        } else if (c_type_nec->parsed()) {
            out.command = "type nec";
            TypDerivPtr d = typ_from_json(load_json(file1));
            Ctx extra;
            if (!extend_s.empty()) {
                size_t i = 0;
                while (i < extend_s.size()) {
                    size_t j = extend_s.find(',', i);
                    if (j == std::string::npos) j = extend_s.size();
                    std::string piece = extend_s.substr(i, j - i);
                    size_t colon = piece.find(':');
                    if (colon == std::string::npos)
                        throw std::runtime_error("--extend expects x:Type pairs");
                    extra.emplace(piece.substr(0, colon), parse_type(piece.substr(colon + 1)));
                    i = j + 1;
                }
            }
            TypDerivPtr r = elab_nec(d, extra);
            out.payload = {{"derivation", typ_to_json(r)}};
            out.verdict = check_typderiv(r).ok ? "valid" : "invalid";
            out.exit_code = out.verdict == "valid" ? Yes : Internal;
        } else if (c_type_subst->parsed()) {
            out.command = "type subst";
            TypDerivPtr d1 = typ_from_json(load_json(file1));
            TypDerivPtr d2 = typ_from_json(load_json(file2));
            TypDerivPtr r = elab_subst(d1, var_name, d2);
            out.payload = {{"derivation", typ_to_json(r)}};
            out.verdict = check_typderiv(r).ok ? "valid" : "invalid";
            out.exit_code = out.verdict == "valid" ? Yes : Internal;
        } else if (c_type_step->parsed()) {
            out.command = "type step";
            TypDerivPtr d = typ_from_json(load_json(file1));
            std::vector<int> path;
            if (!path_s.empty()) path = parse_path(path_s);
            else if (auto p = leftmost_redex_path(d->subject)) path = *p;
            else throw std::runtime_error("subject has no redex");
            TypDerivPtr r = subject_reduce(d, path);
            out.payload = {{"derivation", typ_to_json(r)}, {"term", print_term(r->subject)}};
            out.verdict = check_typderiv(r).ok ? "valid" : "invalid";
            out.exit_code = out.verdict == "valid" ? Yes : Internal;
        } else if (c_term_hnf->parsed()) {
            out.command = "term hnf";
            Tm t = parse_term(term_s);
            ReduceResult r = head_normalize(t, fuel);
            out.payload = {{"steps", r.steps}, {"term", print_term(r.term)}};
            out.verdict = r.ok ? "hnf" : "fuel-exhausted";
            out.exit_code = r.ok ? Yes : No;
        } else if (c_term_bohm->parsed()) {
            out.command = "term bohm";
            Tm t = parse_term(term_s);
            BohmTree b = bohm_tree(t, bohm_depth, fuel);
            out.payload = {{"tree", bohm_to_json(b)},
                           {"min_pending_depth", min_pending_depth(b)}};
            out.verdict = "ok";
        } else if (c_k_validate->parsed()) {
            out.command = "kripke validate";
            Json j = load_json(file1);
            Frame f = frame_from_json(j);
            FrameReport r = validate_frame(f, frame_class_of(frame_class));
            out.payload = {{"class", frame_class}, {"worlds", f.worlds.size()}};
            out.diagnostics = r.violations;
            out.verdict = r.ok ? "valid" : "invalid";
            out.exit_code = r.ok ? Yes : No;
        } else if (c_k_eval->parsed()) {
            out.command = "kripke eval";
            Json j = load_json(file1);
            Frame f = frame_from_json(j);
            Valuation v;
            if (j.contains("val")) v = valuation_from_json(f, j.at("val"));
            int w = f.world_index(world);
            if (w < 0) throw std::runtime_error("unknown world: " + world);
            bool truth = model_check(f, v, w, parse_type(formula));
            out.payload = {{"world", world}, {"formula", formula}, {"true", truth}};
            out.verdict = truth ? "true" : "false";
            out.exit_code = truth ? Yes : No;
        } else if (c_k_random->parsed()) {
            out.command = "kripke random";
            Frame f = random_frame(frame_class_of(frame_class), frame_size, seed);
            std::vector<std::string> vars;
            size_t i = 0;
            while (i < frame_vars.size()) {
                size_t j = frame_vars.find(',', i);
                if (j == std::string::npos) j = frame_vars.size();
                if (j > i) vars.push_back(frame_vars.substr(i, j - i));
                i = j + 1;
            }
            Valuation v = random_valuation(f, vars, seed + 1);
            out.payload = {{"frame", frame_to_json(f, &v)}, {"class", frame_class}};
            out.verdict = "ok";
        } else if (c_l_check->parsed()) {
            out.command = "logic check";
            ProofPtr p = proof_from_json(load_json(file1));
            CheckResult r = check_proof(p);
            out.payload = {{"formula", print_type(p->formula)}};
            out.diagnostics = r.diagnostics;
            out.verdict = r.ok ? "valid" : "invalid";
            out.exit_code = r.ok ? Yes : No;
        } else if (c_l_prove->parsed()) {
            out.command = "logic prove";
            auto ctx = parse_ctx_types();
            auto p = prove(system_of(system), ctx, parse_type(formula));
            if (p) {
                out.payload = {{"proof", proof_to_json(*p)}};
                out.verdict = "proved";
                out.exit_code = Yes;
            } else {
                out.verdict = "unknown";
                out.exit_code = Unknown;
            }
        } else if (c_l_counter->parsed()) {
            out.command = "logic counter";
            auto ctx = parse_ctx_types();
            auto c = countermodel(system_of(system), ctx, parse_type(formula), max_worlds);
            if (c) {
                out.payload = {{"frame", frame_to_json(c->frame, &c->val)},
                               {"world", c->frame.worlds[c->world]}};
                out.verdict = "refuted";
                out.exit_code = Yes;
            } else {
                out.verdict = "not-found";
                out.exit_code = Unknown;
            }
        } else if (c_l_decide->parsed()) {
            out.command = "logic decide";
            auto ctx = parse_ctx_types();
            LogicBudget budget;
            budget.max_worlds = max_worlds;
            Decision dec = decide(system_of(system), ctx, parse_type(formula), budget);
            switch (dec.verdict) {
            case Decision::V::Provable:
                out.payload = {{"proof", proof_to_json(dec.proof)}};
                out.verdict = "provable";
                out.exit_code = Yes;
                break;
            case Decision::V::Refutable:
                out.payload = {{"frame", frame_to_json(dec.counter->frame, &dec.counter->val)},
                               {"world", dec.counter->frame.worlds[dec.counter->world]}};
                out.verdict = "refutable";
                out.exit_code = No;
                break;
            case Decision::V::Unknown:
                out.verdict = "unknown";
                out.exit_code = Unknown;
                break;
            }
        } else {
            std::cerr << cli.help() << "\n";
            return Usage;
        }
    } catch (const ParseError& e) {
        out.verdict = "error";
        out.diagnostics.push_back(std::string("parse error: ") + e.what() + " at " +
                                  std::to_string(e.pos));
        out.exit_code = BadData;
    } catch (const NonProperMu& e) {
        out.verdict = "error";
        out.diagnostics.push_back(e.what());
        out.exit_code = BadData;
    } catch (const std::exception& e) {
        out.verdict = "error";
        out.diagnostics.push_back(e.what());
        out.exit_code = BadData;
    }
    return out.emit();
}
