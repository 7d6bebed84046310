#include <catch2/catch_amalgamated.hpp>

#include "freearr/lattice.hpp"
#include "freearr/oracle.hpp"
#include "freearr/replay.hpp"
#include "freearr/rootsys.hpp"
#include "support.hpp"

using namespace freearr;
using freearr::testsupport::cat1_a1;
using freearr::testsupport::shi1_a1;
using freearr::testsupport::weyl_a2;

namespace {

IntVec rt(std::initializer_list<long> cs) {
    IntVec v;
    for (long c : cs) v.emplace_back(c);
    return v;
}

}  // namespace

TEST_CASE("positive root generation matches the classical data") {
    CHECK(build_root_system('A', 3).positive.size() == 6);
    CHECK(build_root_system('B', 2).positive.size() == 4);
    CHECK(build_root_system('C', 3).positive.size() == 9);
    CHECK(build_root_system('D', 4).positive.size() == 12);
    CHECK(build_root_system('F', 4).positive.size() == 24);
    CHECK(build_root_system('G', 2).positive.size() == 6);

    SECTION("rank two systems, root by root") {
        RootSystem a2 = build_root_system('A', 2);
        CHECK(a2.positive == std::vector<IntVec>{rt({0, 1}), rt({1, 0}), rt({1, 1})});
        RootSystem b2 = build_root_system('B', 2);
        CHECK(b2.positive ==
              std::vector<IntVec>{rt({0, 1}), rt({1, 0}), rt({1, 1}), rt({1, 2})});
        RootSystem g2 = build_root_system('G', 2);
        CHECK(g2.positive == std::vector<IntVec>{rt({0, 1}), rt({1, 0}), rt({1, 1}),
                                                 rt({2, 1}), rt({3, 1}), rt({3, 2})});
    }
    SECTION("heights and the Coxeter number") {
        CHECK(coxeter_number(build_root_system('A', 2)) == 3);
        CHECK(coxeter_number(build_root_system('B', 2)) == 4);
        CHECK(coxeter_number(build_root_system('G', 2)) == 6);
        CHECK(coxeter_number(build_root_system('F', 4)) == 12);
        CHECK(coxeter_number(build_root_system('D', 4)) == 6);
        CHECK(height_counts(build_root_system('B', 2).positive) ==
              std::vector<long>{2, 1, 1});
    }
    SECTION("labels parse") {
        CHECK(build_root_system("B3").positive.size() == 9);
        CHECK_THROWS_AS(build_root_system("E8"), UnsupportedFamily);
        CHECK_THROWS_AS(build_root_system("A0"), UnsupportedFamily);
        CHECK_THROWS_AS(build_root_system("D2"), UnsupportedFamily);
        CHECK_THROWS_AS(build_root_system("G3"), UnsupportedFamily);
        CHECK_THROWS_AS(build_root_system("Bx"), UnsupportedFamily);
    }
}

TEST_CASE("lower ideals of the root poset") {
    RootSystem a2 = build_root_system('A', 2);
    RootSystem b2 = build_root_system('B', 2);

    SECTION("closure") {
        CHECK(ideal_closure(a2, {rt({1, 1})}).roots.size() == 3);
        CHECK(ideal_closure(a2, {rt({1, 0})}).roots == std::vector<IntVec>{rt({1, 0})});
        CHECK(ideal_closure(b2, {rt({1, 1})}).roots ==
              std::vector<IntVec>{rt({0, 1}), rt({1, 0}), rt({1, 1})});
        CHECK(ideal_closure(a2, {}).roots.empty());
        CHECK_THROWS_AS(ideal_closure(a2, {rt({2, 0})}), std::invalid_argument);
    }
    SECTION("membership test") {
        CHECK(is_ideal(a2, {}));
        CHECK(is_ideal(a2, a2.positive));
        CHECK(is_ideal(a2, {rt({1, 0}), rt({0, 1})}));
        CHECK_FALSE(is_ideal(a2, {rt({1, 1})}));
        CHECK_FALSE(is_ideal(a2, {rt({2, 0})}));
    }
    SECTION("height ideals") {
        CHECK(height_ideal(b2, 1).roots == std::vector<IntVec>{rt({0, 1}), rt({1, 0})});
        CHECK(height_ideal(b2, 2).roots.size() == 3);
        CHECK(height_ideal(b2, 3).roots.size() == 4);
    }
}

TEST_CASE("dual partition of the height distribution") {
    auto full_dual = [](char s, size_t r) {
        RootSystem rs = build_root_system(s, r);
        Ideal all{rs.positive};
        return dual_partition_exponents(rs, all);
    };
    CHECK(full_dual('A', 2) == std::vector<int>{1, 2});
    CHECK(full_dual('A', 3) == std::vector<int>{1, 2, 3});
    CHECK(full_dual('B', 2) == std::vector<int>{1, 3});
    CHECK(full_dual('B', 3) == std::vector<int>{1, 3, 5});
    CHECK(full_dual('C', 3) == std::vector<int>{1, 3, 5});
    CHECK(full_dual('D', 4) == std::vector<int>{1, 3, 3, 5});
    CHECK(full_dual('G', 2) == std::vector<int>{1, 5});
    CHECK(full_dual('F', 4) == std::vector<int>{1, 5, 7, 11});

    RootSystem a2 = build_root_system('A', 2);
    CHECK(dual_partition_exponents(a2, Ideal{}) == std::vector<int>{0, 0});
    CHECK(dual_partition_exponents(a2, height_ideal(a2, 1)) == std::vector<int>{1, 1});

    SECTION("entries sum to the ideal size") {
        RootSystem f4 = build_root_system('F', 4);
        for (long s = 0; s <= coxeter_number(f4) - 1; ++s) {
            Ideal j = height_ideal(f4, s);
            std::vector<int> d = dual_partition_exponents(f4, j);
            long sum = 0;
            for (int x : d) sum += x;
            CHECK(sum == static_cast<long>(j.roots.size()));
        }
    }
    SECTION("full dual partition matches the reflection arrangement") {
        for (std::string label : {"A2", "A3", "B2", "B3", "G2"}) {
            RootSystem rs = build_root_system(label);
            std::vector<int> dual = dual_partition_exponents(rs, Ideal{rs.positive});
            FreenessReport fr = freeness_oracle(weyl_arrangement(rs));
            REQUIRE(fr.verdict == Freeness::FreeWithExponents);
            CHECK(fr.exponents == dual);
        }
    }
}

TEST_CASE("cone constructions") {
    RootSystem a1 = build_root_system('A', 1);
    RootSystem a2 = build_root_system('A', 2);
    RootSystem b2 = build_root_system('B', 2);

    SECTION("weyl arrangements") {
        CHECK(weyl_arrangement(a2) == weyl_a2());
        CHECK(weyl_arrangement(a1).size() == 1);
    }
    SECTION("ideal subarrangements") {
        Ideal j = height_ideal(a2, 1);
        Arrangement sub = ideal_subarrangement(a2, j);
        CHECK(sub.size() == 2);
        CHECK_THROWS_AS(ideal_subarrangement(a2, Ideal{{rt({1, 1})}}),
                        std::invalid_argument);
    }
    SECTION("small cones agree with the hand-built ones") {
        ConeArrangement shi = shi_cone(a1, 1);
        CHECK(shi.arr == shi1_a1());
        CHECK(shi.arr.vars() == std::vector<std::string>{"x1", "z"});
        ConeArrangement cat = catalan_cone(a1, 1);
        CHECK(cat.arr == cat1_a1());
        CHECK(cat.construction == "cat");
        CHECK(cat.k == 1);
    }
    SECTION("cardinalities") {
        CHECK(shi_cone(a2, 1).arr.size() == 7);
        CHECK(catalan_cone(a2, 1).arr.size() == 10);
        CHECK(shi_cone(b2, 2).arr.size() == 17);
        CHECK(catalan_cone(b2, 1).arr.size() == 13);
        CHECK(shi_ideal_cone(a2, 1, height_ideal(a2, 1)).arr.size() == 9);
        CHECK(shi_ideal_cone(a2, 1, Ideal{}).arr.size() == 7);
        CHECK_THROWS_AS(shi_cone(a2, 0), std::invalid_argument);
        CHECK_THROWS_AS(shi_ideal_cone(a2, 1, Ideal{{rt({1, 1})}}), std::invalid_argument);
    }
    SECTION("the shi cone of the hexagonal system is free") {
        FreenessReport fr = freeness_oracle(shi_cone(a2, 1).arr);
        REQUIRE(fr.verdict == Freeness::FreeWithExponents);
        CHECK(fr.exponents == std::vector<int>{1, 3, 3});
    }
}

TEST_CASE("family labels") {
    CHECK(family_arrangement("weyl:A2") == weyl_a2());
    CHECK(family_arrangement("shi:A1:k=1") == shi1_a1());
    CHECK(family_arrangement("cat:A1:k=1") == cat1_a1());
    RootSystem a2 = build_root_system('A', 2);
    CHECK(family_arrangement("shiplus:A2:k=1:ideal=a1,a1+a2") ==
          catalan_cone(a2, 1).arr);
    CHECK(family_arrangement("shiplus:A2:k=1:ideal=") == shi_cone(a2, 1).arr);
    CHECK(family_arrangement("shiplus:B2:k=1:ideal=a1+2a2").size() == 13);

    CHECK_THROWS_AS(family_arrangement("cat:E8:k=1"), UnsupportedFamily);
    CHECK_THROWS_AS(family_arrangement("weyl:A2:k=1"), std::invalid_argument);
    CHECK_THROWS_AS(family_arrangement("shi:A2"), std::invalid_argument);
    CHECK_THROWS_AS(family_arrangement("shi:A2:k=0"), std::invalid_argument);
    CHECK_THROWS_AS(family_arrangement("shi:A2:j=1"), std::invalid_argument);
    CHECK_THROWS_AS(family_arrangement("shiplus:A2:k=1:ideal=a1+b2"),
                    std::invalid_argument);
    CHECK_THROWS_AS(family_arrangement("shiplus:A2:k=1"), std::invalid_argument);
    CHECK_THROWS_AS(family_arrangement("bogus:A2"), std::invalid_argument);
    CHECK_THROWS_AS(family_arrangement("weyl"), std::invalid_argument);
}

TEST_CASE("staged catalan certificates") {
    SECTION("rank one: a single stage") {
        RootSystem a1 = build_root_system('A', 1);
        Certificate cert = catalan_certificate(a1, 1);
        CHECK(cert.seed.exponents == std::vector<int>{1, 2});
        REQUIRE(cert.steps.size() == 1);
        const CertificateStep& st = cert.steps[0];
        CHECK(st.evidence.card_before - st.evidence.restriction_cards[0] == 2);
        CHECK(st.after == std::vector<int>{1, 3});
        ReplayReport rep = replay_certificate(build_lattice(cat1_a1()), cert);
        CHECK(rep.accepted);
    }
    SECTION("rank two: stage counts follow the height") {
        RootSystem a2 = build_root_system('A', 2);
        Certificate cert = catalan_certificate(a2, 1);
        CHECK(cert.seed.exponents == std::vector<int>{1, 3, 3});
        REQUIRE(cert.steps.size() == 2);
        for (size_t s = 0; s < 2; ++s) {
            const CertificateStep& st = cert.steps[s];
            long want = 3 + static_cast<long>(s);  // k h + s - 1
            for (long card : st.evidence.restriction_cards)
                CHECK(st.evidence.card_before - card == want);
        }
        CHECK(cert.steps[0].hyperplanes.size() == 2);
        CHECK(cert.steps[1].hyperplanes.size() == 1);
        CHECK(cert.steps[1].after == std::vector<int>{1, 4, 5});
        ReplayReport rep =
            replay_certificate(build_lattice(catalan_cone(a2, 1).arr), cert);
        CHECK(rep.accepted);
    }
    SECTION("longer system: three stages") {
        RootSystem b2 = build_root_system('B', 2);
        Certificate cert = catalan_certificate(b2, 1);
        CHECK(cert.seed.exponents == std::vector<int>{1, 4, 4});
        REQUIRE(cert.steps.size() == 3);
        std::vector<long> deltas;
        for (const CertificateStep& st : cert.steps)
            deltas.push_back(st.evidence.card_before - st.evidence.restriction_cards[0]);
        CHECK(deltas == std::vector<long>{4, 5, 6});
        CHECK(cert.steps[2].after == std::vector<int>{1, 5, 7});
        ReplayReport rep =
            replay_certificate(build_lattice(catalan_cone(b2, 1).arr), cert);
        CHECK(rep.accepted);
    }
    SECTION("caller-supplied seed exponents skip the solver") {
        RootSystem a1 = build_root_system('A', 1);
        Certificate cert = catalan_certificate(a1, 1, std::vector<int>{1, 2});
        CHECK(cert.steps.size() == 1);
        CHECK_THROWS_AS(catalan_certificate(a1, 1, std::vector<int>{2, 1}),
                        std::invalid_argument);
    }
}

TEST_CASE("staging monotonicity") {
    // after stage s the state is the shi cone extended by the height <= s
    // ideal, and its exponents are 1 then (k h) plus the dual partition
    RootSystem a2 = build_root_system('A', 2);
    long k = 1, kh = k * coxeter_number(a2);
    Certificate cert = catalan_certificate(a2, k);

    Arrangement state = cert.seed_arrangement();
    std::vector<int> exp = cert.seed.exponents;
    for (size_t s = 0; s < cert.steps.size(); ++s) {
        for (const IntVec& n : cert.steps[s].hyperplanes) state = state.with(Hyperplane{n});
        exp = cert.steps[s].after;

        Ideal j = height_ideal(a2, static_cast<long>(s) + 1);
        CHECK(state == shi_ideal_cone(a2, k, j).arr);

        std::vector<int> want{1};
        for (int d : dual_partition_exponents(a2, j)) want.push_back(static_cast<int>(kh) + d);
        std::sort(want.begin(), want.end());
        CHECK(exp == want);

        FreenessReport fr = freeness_oracle(state);
        REQUIRE(fr.verdict == Freeness::FreeWithExponents);
        CHECK(fr.exponents == exp);
    }
    CHECK(state == catalan_cone(a2, k).arr);
}
