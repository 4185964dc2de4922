#include "oracle.h"

#include <catoms/diffkit.h>

#include <catch2/catch_amalgamated.hpp>

using namespace catoms;
using test::load;
using test::set_of;

TEST_CASE("atom table is sorted and dense") {
    AtomTable t({"q", "p(2)", "p(-1)", "p(1)", "q"});
    REQUIRE(t.size() == 4);
    CHECK(t.name(0) == "p(-1)");
    CHECK(t.name(1) == "p(1)");
    CHECK(t.name(2) == "p(2)");
    CHECK(t.name(3) == "q");
    for (AtomId i = 0; i < t.size(); ++i) { CHECK(t.find(t.name(i)) == i); }
    CHECK_FALSE(t.find("r").has_value());
}

TEST_CASE("interpretations behave as sets") {
    Interpretation a{1, 70, 3};
    Interpretation b{3, 4};
    CHECK(a.size() == 3);
    CHECK((a | b).size() == 4);
    CHECK((a & b) == Interpretation{3});
    CHECK((a - b) == Interpretation{1, 70});
    CHECK((a - a).empty());
    CHECK(Interpretation{3}.subset_of(a));
    CHECK_FALSE(b.subset_of(a));
    CHECK(a.members() == std::vector<AtomId>{1, 3, 70});
    Interpretation c = a;
    c.erase(70);
    CHECK(c == Interpretation{1, 3});
    CHECK(c.hash() == Interpretation{3, 1}.hash());
}

TEST_CASE("canonical order is by size, then lexicographic") {
    std::vector<Interpretation> sets{{0, 1}, {2}, {}, {0, 2}, {1}};
    sort_canonical(sets);
    CHECK(sets == std::vector<Interpretation>{{}, {1}, {2}, {0, 1}, {0, 2}});
}

TEST_CASE("satisfaction") {
    Program p1 = load("p1.cat");
    const CAtom& count_gt_2 = p1.rules()[3].pos.front();
    CHECK(satisfies(set_of(p1, "p(a),p(b),p(c),q"), count_gt_2));
    CHECK_FALSE(satisfies(set_of(p1, "p(a),p(b)"), count_gt_2));
    CHECK_FALSE(satisfies(Interpretation{}, CAtom::elementary(0)));

    Program sum = parse_program("x :- sum{p(1)=1, p(-2)=-2} >= -1.");
    const CAtom& a = sum.rules()[0].pos.front();
    CHECK(satisfies(set_of(sum, "p(1),p(-2)"), a));
    CHECK(satisfies(Interpretation{}, a));
    CHECK_FALSE(satisfies(set_of(sum, "p(-2)"), a));
}

TEST_CASE("models and minimal models") {
    Program p2 = load("p2.cat");
    CHECK(is_model(set_of(p2, "p(1),p(-1)"), p2));
    CHECK_FALSE(is_model(set_of(p2, "p(1),p(2)"), p2));

    Program p3 = load("p3.cat");
    CHECK_FALSE(is_model(Interpretation{}, p3));
    for (auto m : {"p", "q", "p,q"}) { CHECK(is_model(set_of(p3, m), p3)); }
    CHECK(is_minimal_model(set_of(p3, "p"), p3));
    CHECK(is_minimal_model(set_of(p3, "q"), p3));
    CHECK_FALSE(is_minimal_model(set_of(p3, "p,q"), p3));

    Program p1 = load("p1.cat");
    CHECK(is_minimal_model(set_of(p1, "p(a),p(b)"), p1));
    CHECK_FALSE(is_minimal_model(set_of(p1, "p(a),p(b),p(c),q"), p1));

    Program empty;
    CHECK(is_model(Interpretation{}, empty));
    CHECK(is_minimal_model(Interpretation{}, empty));

    Limits tiny{4};
    CHECK_THROWS_AS(is_minimal_model(set_of(p1, "p(a),p(b),p(c),q"), p1, tiny), Error);
}

TEST_CASE("support") {
    Program p1 = load("p1.cat");
    CHECK(supports(set_of(p1, "p(a),p(b)"), p1, *p1.atoms().find("p(a)")));
    Program p4 = load("p4.cat");
    CHECK_FALSE(supports(set_of(p4, "c"), p4, *p4.atoms().find("a")));
    Program p9 = load("p9.cat");
    CHECK(supports(set_of(p9, "a,b,c"), p9, *p9.atoms().find("b")));
}

TEST_CASE("complement and closure") {
    CAtom trivial = CAtom::from_masks({}, {0});
    CHECK(complement(trivial) == CAtom::bottom());
    CHECK(complement(CAtom::bottom()) == trivial);

    Program p = parse_program("x :- ({a,b},{{a},{b}}), ({a,b},{{a,b}}), ({a,c},{{},{a,c}}), "
                              "({a,c,d},{{a},{a,c,d}}).");
    auto body = p.rules()[0].pos;
    auto make = [&](std::string_view dom, std::initializer_list<std::string_view> sols) {
        std::vector<Interpretation> s;
        for (auto x : sols) { s.push_back(set_of(p, x)); }
        return CAtom::make(set_of(p, dom), s);
    };
    CHECK(complement(body[0]) == make("a,b", {"", "a,b"}));
    CHECK(complement(body[1]) == make("a,b", {"", "a", "b"}));
    CHECK(closure(body[2]) == make("a,c", {"", "a", "c", "a,c"}));
    CHECK(closure(body[3]) == make("a,c,d", {"a", "a,c", "a,d", "a,c,d"}));
    CHECK(closure(CAtom::elementary(0)) == CAtom::elementary(0));
}

TEST_CASE("classification") {
    CHECK(classify(CAtom::elementary(3)) == CAtomClass{true, true, true, true});
    Program p6 = load("p6.cat");
    CAtomClass one_of = classify(p6.rules()[0].neg.front());
    CHECK_FALSE(one_of.monotone);
    CHECK(one_of.convex);
    Program p1 = load("p1.cat");
    CHECK(classify(p1.rules()[3].pos.front()).monotone);
    Program p4 = load("p4.cat");
    CHECK_FALSE(classify(p4.rules()[1].pos.front()).convex);
}

TEST_CASE("hset") {
    Program p3 = load("p3.cat");
    CHECK(hset(p3) == set_of(p3, "p,q"));
    Program p9 = load("p9.cat");
    CHECK(hset(p9) == set_of(p9, "a,b,c"));
    CHECK(hset(Program()).empty());
}

TEST_CASE("class flags agree with recomputation") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        GenConfig cfg{5, 6, 0.3, seed % 2 == 0, seed % 3 == 0, seed};
        Program p = generate(cfg);
        bool basic = true, positive = true, monotone = true, naf_monotone = true;
        for (const auto& r : p.rules()) {
            basic    = basic && (r.head.is_bottom() || r.head.is_elementary());
            positive = positive && r.neg.empty();
            for (const auto* list : {&r.pos, &r.neg}) {
                for (const auto& a : *list) { monotone = monotone && classify(a).monotone; }
            }
            monotone = monotone && classify(r.head).monotone;
            for (const auto& a : r.neg) { naf_monotone = naf_monotone && classify(a).monotone; }
        }
        CHECK(p.is_basic() == basic);
        CHECK(p.is_positive() == positive);
        CHECK(p.is_monotone() == monotone);
        CHECK(p.is_naf_monotone() == naf_monotone);
    }
}

TEST_CASE("c-atom invariants are enforced") {
    CHECK_THROWS_AS(CAtom::make(Interpretation{0}, std::vector<Interpretation>{{1}}), Error);
    Interpretation big;
    for (AtomId i = 0; i < 25; ++i) { big.insert(i); }
    CHECK_THROWS_AS(CAtom::make(big, {}), Error);
    std::vector<Interpretation> dup{{0}, {0}};
    CHECK(CAtom::make(Interpretation{0}, dup).solution_count() == 1);
}

TEST_CASE("properties of c-atom operations on random c-atoms") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        Program p = generate(GenConfig{4, 4, 0.5, false, true, seed});
        Interpretation universe = p.universe();
        for (const auto& r : p.rules()) {
            std::vector<CAtom> atoms(r.pos);
            atoms.insert(atoms.end(), r.neg.begin(), r.neg.end());
            atoms.push_back(r.head);
            for (const auto& a : atoms) {
                CHECK(complement(complement(a)) == a);
                CHECK(closure(closure(a)) == closure(a));
                CAtomClass c = classify(a);
                if (c.monotone) { CHECK(c.convex); }
                CHECK(c.monotone == (closure(a) == a));
                for (const auto& s : test::all_subsets(universe)) {
                    CHECK(satisfies_naf(s, a) == satisfies(s, complement(a)));
                    CHECK(satisfies(s, a) == oracle::sat(s, a));
                }
            }
        }
    }
}

TEST_CASE("minimality by subset enumeration agrees with the definition") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        Program p = generate(GenConfig{5, 6, 0.3, false, seed % 2 == 1, seed});
        auto subsets = test::all_subsets(p.universe());
        for (const auto& m : subsets) {
            if (!oracle::model(m, p)) { continue; }
            bool minimal = true;
            for (const auto& s : subsets) {
                if (s != m && s.subset_of(m) && oracle::model(s, p)) { minimal = false; }
            }
            CHECK(is_minimal_model(m, p) == minimal);
        }
    }
}

TEST_CASE("sweeps do not depend on the worker count") {
    Interpretation atoms{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    auto pred = [](const Interpretation& s) { return s.size() % 3 == 1; };
    auto one  = sweep_subsets(atoms, {}, 1, pred);
    auto four = sweep_subsets(atoms, {}, 4, pred);
    CHECK(one == four);
    CHECK(std::is_sorted(one.begin(), one.end(), canonical_less));
    CHECK_THROWS_AS(sweep_subsets(atoms, Limits{1024}, 1, pred), Error);
}
