#include "oracle.h"

#include <catoms/altsem.h>
#include <catoms/diffkit.h>
#include <catoms/fixpoint.h>
#include <catoms/general.h>

#include <catch2/catch_amalgamated.hpp>

using namespace catoms;
using test::load;
using test::set_of;
using test::sets_of;

TEST_CASE("applicable rules and nondeterministic provability") {
    Program p3 = load("p3.cat");
    CHECK(applicable(p3, {}).size() == 2);
    CHECK(applicable(p3, set_of(p3, "p,q")).empty());
    CHECK(applicable(Program(), {}).empty());

    CHECK(tnd(p3, {}) == sets_of(p3, {"p,q"}));
    CHECK(tnd(p3, set_of(p3, "p,q")) == std::vector<Interpretation>{{}});
    Program p8 = load("p8.cat");
    CHECK(tnd(p8, {}) == sets_of(p8, {"a", "b"}));
}

TEST_CASE("computations") {
    Program p = parse_program("a. b :- a. c :- b, a.");
    Computation c = canonical_computation(p, p.universe());
    CHECK(c.steps == sets_of(p, {"", "a", "a,b", "a,b,c"}));
    CHECK(is_computation(p, c));
    CHECK(c.result() == p.universe());

    Computation jump{sets_of(p, {"", "a,b"})};
    CHECK_FALSE(is_computation(p, jump));
    Computation shrink{sets_of(p, {"", "a", ""})};
    CHECK_FALSE(is_computation(p, shrink));
}

TEST_CASE("stable models of monotone programs") {
    Program choice = parse_program("p :- not q. q :- not p.");
    CHECK(mt_stable(choice, set_of(choice, "p")));
    CHECK(mt_stable(choice, set_of(choice, "q")));
    CHECK_FALSE(mt_stable(choice, set_of(choice, "p,q")));

    Program p3 = load("p3.cat");
    CHECK_THROWS_AS(mt_stable(p3, set_of(p3, "p")), Error);
    CHECK_FALSE(mt_stable_exhaustive(p3, set_of(p3, "p")));
    CHECK_FALSE(mt_stable_exhaustive(p3, set_of(p3, "q")));
    CHECK_FALSE(mt_stable_exhaustive(p3, set_of(p3, "p,q")));

    Program facts = parse_program("a. b.");
    CHECK(mt_stable(facts, facts.universe()));

    Program p8 = load("p8.cat");
    CHECK_THROWS_AS(mt_stable(p8, set_of(p8, "a")), Error);
    Program up = parse_program("({a,b},{{a},{a,b}}). c :- b.");
    CHECK(mt_stable(up, set_of(up, "a")));
    CHECK(mt_stable(up, set_of(up, "a,b,c")));
    CHECK_FALSE(mt_stable(up, set_of(up, "a,b")));
}

TEST_CASE("Marek-Remmel answer sets") {
    Program p4 = load("p4.cat");
    CHECK(mr_answer_set(p4, set_of(p4, "c")));
    CHECK(mr_answer_set(p4, set_of(p4, "a,c")));
    Program p10 = load("p10.cat");
    CHECK(mr_answer_set(p10, set_of(p10, "a,c")));
    CHECK(mr_answer_set(p10, set_of(p10, "a,c,d")));
    Program p2 = load("p2.cat");
    CHECK(mr_answer_set(p2, set_of(p2, "p(1),p(-1),p(2)")));
    CHECK_FALSE(mr_answer_set(p2, set_of(p2, "p(1),p(-1)")));

    CHECK(render(nss_reduct(p4, set_of(p4, "a,c"))) == "c.\na :- ({a,c},{{},{a},{c},{a,c}}).");
    CHECK(render(nss_reduct(p10, set_of(p10, "a,c,d"))) == "a.\nc.\nd :- ({a,c,d},{{a},{a,c},{a,d},{a,c,d}}).");

    Program p5 = load("p5.cat");
    CHECK_THROWS_AS(mr_answer_set(p5, set_of(p5, "a,c"), false), Error);
    CHECK_THROWS_AS(nss_reduct(p5, {}), Error);
    CHECK(mr_answer_set(p5, set_of(p5, "a,c")));
}

TEST_CASE("FLP answer sets") {
    Program ex21 = load("ex21.cat");
    CHECK(flp_answer_set(ex21, set_of(ex21, "p(1),p(-1)")));
    CHECK_FALSE(flp_answer_set(ex21, {}));
    Program p2 = load("p2.cat");
    CHECK_FALSE(flp_answer_set(p2, set_of(p2, "p(1),p(-1),p(2)")));
    Program facts = parse_program("a. b.");
    CHECK(flp_answer_set(facts, facts.universe()));
    CHECK_THROWS_AS(flp_answer_set(load("p8.cat"), {}), Error);
}

TEST_CASE("solution pairs") {
    Program ex21 = load("ex21.cat");
    const CAtom& a   = ex21.rules()[0].pos.front();
    Interpretation m = set_of(ex21, "p(1),p(-1)");
    CHECK_FALSE(pelov_cond_sat({}, m, a));
    CHECK(pelov_cond_sat(m, m, a));
    CHECK(solves(SolutionPair{m, {}}, a));
    CHECK_FALSE(solves(SolutionPair{{}, {}}, a));
    CHECK(solves(SolutionPair{{}, m}, a));

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Program p = generate(GenConfig{4, 4, 0.0, false, true, seed});
        auto subsets = test::all_subsets(p.universe());
        for (const auto& r : p.rules()) {
            for (const auto& mm : subsets) {
                CHECK(pelov_cond_sat(mm, mm, r.head) == satisfies(mm, r.head));
                for (const auto& i : subsets) {
                    if (i.subset_of(mm)) { CHECK(pelov_cond_sat(i, mm, r.head) == cond_sat(i, mm, r.head)); }
                }
            }
        }
    }
    CHECK_THROWS_AS(k_operator(load("p5.cat"), {}, {}), Error);
}

TEST_CASE("relationships between the semantics") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        bool monotone = seed % 2 == 0;
        Program p     = generate(GenConfig{5, 6, seed % 3 == 0 ? 0.3 : 0.0, monotone, seed % 5 < 2, seed});
        for (const auto& m : test::all_subsets(p.universe())) {
            bool ours_r = check_answer_set_general(p, m, Mode::reduct);
            bool ours_c = check_answer_set_general(p, m, Mode::complement);
            if (p.is_positive() && (ours_r || ours_c)) { CHECK(mr_answer_set(p, m)); }
            if (p.is_monotone()) {
                bool mt = mt_stable(p, m);
                CHECK(ours_r == mt);
                CHECK(mt == mt_stable_exhaustive(p, m));
                if (p.is_basic()) {
                    bool flp = flp_answer_set(p, m);
                    CHECK(ours_r == flp);
                    CHECK(ours_c == flp);
                }
            }
        }
    }
}

TEST_CASE("canonical computations are computations") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Program p = generate(GenConfig{5, 6, 0.3, true, true, seed});
        for (const auto& m : test::all_subsets(p.universe())) {
            Program q = mt_reduct(p, m);
            if (!is_model(m, q)) { continue; }
            Computation c = canonical_computation(q, m);
            CHECK(is_computation(q, c));
            for (std::size_t i = 0; i + 1 < c.steps.size(); ++i) {
                auto next = tnd(q, c.steps[i]);
                CHECK(std::find(next.begin(), next.end(), c.steps[i + 1]) != next.end());
            }
        }
    }
}
