#include "test_support.hpp"

#include <doctest.h>

using namespace lamu;
using namespace lamu::testing;

TEST_CASE("tail clauses") {
    CHECK(alpha_eq_type(tail(parse_type("X")), parse_type("X")));
    CHECK(alpha_eq_type(tail(parse_type("A -> B")), parse_type("B")));
    CHECK(alpha_eq_type(tail(parse_type("#(A -> B)")), parse_type("#B")));
    CHECK(alpha_eq_type(tail(parse_type("mu X. #X")), parse_type("mu X. #X")));
    CHECK(alpha_eq_type(tail(parse_type("mu X. #(X -> #Y) -> Z")), parse_type("mu X. Z")));
}

TEST_CASE("top variants") {
    CHECK(is_top_variant(top()));
    CHECK(is_top_variant(parse_type("X -> Top")));
    CHECK(is_top_variant(parse_type("mu X. Y -> #X")));
    CHECK(is_top_variant(parse_type("#Top")));
    CHECK(is_top_variant(parse_type("mu X. mu Y. #X"))); // tail ends at X with a bullet after
    CHECK(is_top_variant(parse_type("mu X. #mu Y. X"))); // bullet before the inner binder
    CHECK(!is_top_variant(parse_type("X")));
    CHECK(!is_top_variant(parse_type("#X")));
    CHECK(!is_top_variant(parse_type("X -> Y")));
    CHECK(!is_top_variant(parse_type("mu X. #X -> Y")));
    CHECK(!is_top_variant(parse_type("mu X. #mu Y. Z"))); // free tail variable
}

TEST_CASE("top variant iff both etv sets empty") {
    Rng rng(3);
    for (int i = 0; i < 2000; ++i) {
        Ty a = gen_type(rng, 5);
        EtvSets e = etv(a);
        CHECK(is_top_variant(a) == (e.positive.empty() && e.negative.empty()));
    }
}

TEST_CASE("properness examples") {
    CHECK(is_proper(parse_type("#X"), "X"));
    CHECK(is_proper(parse_type("#(X -> Y)"), "X"));
    CHECK(is_proper(parse_type("mu Y. #(X -> Y)"), "X"));
    CHECK(is_proper(parse_type("X -> Top"), "X"));
    CHECK(is_proper(parse_type("mu Y. X -> #Y"), "X"));
    CHECK(!is_proper(parse_type("X"), "X"));
    CHECK(!is_proper(parse_type("X -> Y"), "X"));
    // μY.μZ.X→Y is a pseudo type expression; properness is still defined on it
    Ty pseudo = std::make_shared<TypeNode>(TypeNode{
        TyKind::Mu, "Y",
        std::make_shared<TypeNode>(TypeNode{
            TyKind::Mu, "Z", arrow(tvar("X"), tvar("Y")), nullptr}),
        nullptr});
    CHECK(!is_proper(pseudo, "X"));
}

TEST_CASE("proper iff both later-depths positive") {
    Rng rng(5);
    for (int i = 0; i < 2000; ++i) {
        Ty a = gen_type(rng, 5);
        bool byDepth = depth_both(a, "X", DepthKind::Later) > ExtNat(0);
        CHECK(is_proper(a, "X") == byDepth);
        if (!etv(a).all().count("X")) CHECK(is_proper(a, "X"));
    }
}

TEST_CASE("etv worked examples") {
    EtvSets e1 = etv(parse_type("mu X. #(X -> Y) -> Z"));
    CHECK(e1.positive == std::set<std::string>{"Z"});
    CHECK(e1.negative == std::set<std::string>{"Y"});
    EtvSets e2 = etv(parse_type("mu X. (Y -> Z) -> #X"));
    CHECK(e2.positive.empty());
    CHECK(e2.negative.empty());
    EtvSets e3 = etv(parse_type("mu X. #(X -> Y -> Z)"));
    CHECK(e3.positive == std::set<std::string>{"Y", "Z"});
    CHECK(e3.negative == std::set<std::string>{"Y", "Z"});
}

TEST_CASE("height and rank") {
    CHECK(height(parse_type("X")) == 0);
    CHECK(rank(top()) == 0);
    CHECK(rank(parse_type("X")) == 0);
    CHECK(rank(parse_type("mu X. #X -> Y")) == 2);
    Ty a = parse_type("mu X. #X -> Y");
    CHECK(rank(unfold_mu(a)) < rank(a));
}

TEST_CASE("rank decreases under unfolding on random non-top mus") {
    Rng rng(9);
    int seen = 0;
    for (int i = 0; i < 4000 && seen < 300; ++i) {
        Ty a = gen_type(rng, 5);
        if (a->kind != TyKind::Mu || is_top_variant(a)) continue;
        ++seen;
        CHECK(rank(unfold_mu(a)) < rank(a));
    }
    CHECK(seen > 50);
}

TEST_CASE("ExtNat algebra") {
    ExtNat inf = ExtNat::inf();
    CHECK((ExtNat(3) + inf).is_inf());
    CHECK(min(ExtNat(3), inf) == ExtNat(3));
    CHECK(ExtNat(2) + ExtNat(5) == ExtNat(7));
    CHECK(min(inf, inf).is_inf());
}

TEST_CASE("depth table for the two worked examples") {
    // In A the effective occurrence of Y is negative (cf. the etv example of
    // the same shape), so the finite depths are the negative ones.
    Ty a = parse_type("mu X. #(X -> #Y) -> Z");
    CHECK(depth(a, "Y", DepthKind::Later, Sign::Neg) == ExtNat(2));
    CHECK(depth(a, "Y", DepthKind::Arrow, Sign::Neg) == ExtNat(2));
    CHECK(depth(a, "Y", DepthKind::Later, Sign::Pos).is_inf());
    CHECK(depth(a, "Y", DepthKind::Arrow, Sign::Pos).is_inf());

    Ty b = parse_type("mu X. #(X -> Y -> Z)");
    CHECK(depth(b, "Y", DepthKind::Later, Sign::Pos) == ExtNat(2));
    CHECK(depth(b, "Y", DepthKind::Arrow, Sign::Pos) == ExtNat(3));
    CHECK(depth(b, "Y", DepthKind::Later, Sign::Neg) == ExtNat(1));
    CHECK(depth(b, "Y", DepthKind::Arrow, Sign::Neg) == ExtNat(2));
}

TEST_CASE("depths of top variants are infinite") {
    Rng rng(13);
    for (int i = 0; i < 500; ++i) {
        Ty a = gen_type(rng, 4);
        if (!is_top_variant(a)) continue;
        CHECK(depth(a, "X", DepthKind::Later, Sign::Pos).is_inf());
        CHECK(depth(a, "Y", DepthKind::Arrow, Sign::Neg).is_inf());
    }
}

TEST_CASE("depth finiteness matches etv membership") {
    Rng rng(17);
    for (int i = 0; i < 2000; ++i) {
        Ty a = gen_type(rng, 5);
        EtvSets e = etv(a);
        for (const std::string x : {"X", "Y"}) {
            CHECK((depth(a, x, DepthKind::Later, Sign::Pos) < ExtNat::inf()) ==
                  (e.positive.count(x) != 0));
            CHECK((depth(a, x, DepthKind::Later, Sign::Neg) < ExtNat::inf()) ==
                  (e.negative.count(x) != 0));
            CHECK(depth(a, x, DepthKind::Arrow, Sign::Neg) > ExtNat(0));
        }
    }
}

TEST_CASE("tail commutes with substitution") {
    Rng rng(19);
    for (int i = 0; i < 500; ++i) {
        Ty a = gen_type(rng, 4);
        Ty b = gen_type(rng, 3);
        CHECK(alpha_eq_type(tail(subst_type1(a, "X", b)),
                            subst_type1(tail(a), "X", tail(b))));
    }
}

TEST_CASE("depth substitution law") {
    Rng rng(23);
    int checked = 0;
    for (int i = 0; i < 3000 && checked < 400; ++i) {
        Ty a = gen_type(rng, 4);
        Ty b = gen_type(rng, 3);
        if (is_top_variant(b)) continue;
        ++checked;
        for (DepthKind k : {DepthKind::Later, DepthKind::Arrow}) {
            // X ≠ Y case of the substitution law
            ExtNat lhs = depth(subst_type1(a, "X", b), "Y", k, Sign::Pos);
            ExtNat rhs = min(depth(a, "Y", k, Sign::Pos),
                             min(depth(a, "X", k, Sign::Pos) + depth(b, "Y", k, Sign::Pos),
                                 depth(a, "X", k, Sign::Neg) + depth(b, "Y", k, Sign::Neg)));
            CHECK(lhs == rhs);
        }
    }
    CHECK(checked >= 400);
}

TEST_CASE("depth substitution laws at the substituted variable") {
    Rng rng(24);
    int checked = 0;
    for (int i = 0; i < 3000 && checked < 300; ++i) {
        Ty a = gen_type(rng, 4);
        Ty b = gen_type(rng, 3);
        if (is_top_variant(b)) continue;
        ++checked;
        for (DepthKind k : {DepthKind::Later, DepthKind::Arrow}) {
            // law at the substituted variable itself
            ExtNat lhs = depth(subst_type1(a, "X", b), "X", k, Sign::Pos);
            ExtNat rhs = min(depth(a, "X", k, Sign::Pos) + depth(b, "X", k, Sign::Pos),
                             depth(a, "X", k, Sign::Neg) + depth(b, "X", k, Sign::Neg));
            CHECK(lhs == rhs);
            // law for an uninvolved variable
            if (!etv(b).all().count("W")) {
                CHECK(depth(subst_type1(a, "X", b), "W", k, Sign::Neg) ==
                      depth(a, "W", k, Sign::Neg));
            }
        }
    }
    CHECK(checked >= 300);
}

TEST_CASE("top variance closed under substitution") {
    Rng rng(29);
    for (int i = 0; i < 1500; ++i) {
        Ty a = gen_type(rng, 4);
        Ty b = gen_type(rng, 3);
        Ty s = subst_type1(a, "X", b);
        if (is_top_variant(a)) CHECK(is_top_variant(s));
        if (is_top_variant(s)) {
            bool explained = is_top_variant(a) ||
                             (etv(tail(a)).positive.count("X") && is_top_variant(b));
            CHECK(explained);
        }
        if (a->kind == TyKind::Mu)
            CHECK(is_top_variant(a) == is_top_variant(unfold_mu(a)));
    }
}

TEST_CASE("shift worked examples") {
    Ty a = parse_type("mu X. #X -> Y");
    CHECK(alpha_eq_type(shift(a, 0), parse_type("#(mu X. #X -> Y) -> Y")));

    Ty b = parse_type("mu X. #(#X -> ##Y)");
    CHECK(alpha_eq_type(shift(b, 3),
                        parse_type("(#(mu X. #(#X -> ##Y)) -> ##Y) -> Y")));

    Rng rng(31);
    for (int i = 0; i < 50; ++i) CHECK(alpha_eq_type(shift(top(), pick(rng, 0, 5)), top()));
}

TEST_CASE("shift at level zero is congruent to the input") {
    Rng rng(37);
    for (int i = 0; i < 400; ++i) {
        Ty a = gen_type(rng, 4);
        CHECK(type_eq(shift(a, 0), a, EqMode::Congr));
    }
}
