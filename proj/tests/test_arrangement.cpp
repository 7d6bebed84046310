#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "freearr/arrangement.hpp"
#include "freearr/lattice.hpp"
#include "support.hpp"

using namespace freearr;
using namespace freearr::testsupport;

namespace {

Poly chi_of(const Arrangement& a) { return char_poly(a).chi; }

Poly t_poly(const std::vector<long>& coeffs_ascending) {
    // coeffs_ascending[k] multiplies t^k
    Poly p(std::vector<std::string>{"t"});
    for (size_t k = 0; k < coeffs_ascending.size(); ++k)
        p.add_term(ExpVec{static_cast<int>(k)}, Rational(coeffs_ascending[k]));
    return p;
}

}  // namespace

TEST_CASE("hyperplane normalization") {
    Hyperplane h{{-2, 4}};
    CHECK(h.normal == IntVec{1, -2});
    CHECK_THROWS_AS((Hyperplane{IntVec{0, 0}}), std::invalid_argument);

    Arrangement a(2, {Hyperplane{{2, 0}}, Hyperplane{{1, 0}}, Hyperplane{{0, -3}}});
    CHECK(a.size() == 2);  // 2x and x coincide
    CHECK(a.plane(0).normal == IntVec{0, 1});
}

TEST_CASE("arrangement equality ignores input order") {
    Arrangement a(2, {Hyperplane{{1, 0}}, Hyperplane{{0, 1}}, Hyperplane{{1, 1}}});
    Arrangement b(2, {Hyperplane{{1, 1}}, Hyperplane{{1, 0}}, Hyperplane{{0, 1}}});
    CHECK(a == b);
    CHECK(a.contains(Hyperplane{{-1, -1}}));
    CHECK(a.index_of(Hyperplane{{2, 2}}) == a.index_of(Hyperplane{{1, 1}}));
    CHECK(a.without(Hyperplane{{1, 1}}).size() == 2);
    CHECK_THROWS_AS(a.without(Hyperplane{{1, -1}}), std::invalid_argument);
}

TEST_CASE("text format round trip is byte identical") {
    std::string text = "# demo\ndim 2\n1 0\n1 -1\n1 1\n0 1\n";
    std::istringstream in(text);
    Arrangement a = parse_arrangement(in);
    CHECK(a == cat1_a1());
    std::string once = write_arrangement(a);
    std::istringstream again(once);
    CHECK(write_arrangement(parse_arrangement(again)) == once);
}

TEST_CASE("parser reports line numbers") {
    std::istringstream bad1("dim 2\n1 a\n");
    CHECK_THROWS_MATCHES(parse_arrangement(bad1), ParseError,
                         Catch::Matchers::Message("line 2: non-integer entry 'a'"));
    std::istringstream bad2("dim 3\n1 0\n");
    CHECK_THROWS_AS(parse_arrangement(bad2), ParseError);
    std::istringstream bad3("1 0\n");
    CHECK_THROWS_AS(parse_arrangement(bad3), ParseError);
    std::istringstream bad4("dim 2\n0 0\n");
    try {
        parse_arrangement(bad4);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("lattice of pinned arrangements") {
    SECTION("empty arrangement") {
        IntersectionLattice lat = build_lattice(Arrangement(3));
        CHECK(lat.flats().size() == 1);
        CHECK(lat.rank() == 0);
        CHECK(lat.flats()[0].mobius == 1);
    }
    SECTION("boolean cube") {
        IntersectionLattice lat = build_lattice(boolean_arrangement(3));
        CHECK(lat.flats().size() == 8);
        CHECK(lat.rank() == 3);
        // mu alternates with codim on the boolean lattice
        for (const Flat& f : lat.flats())
            CHECK(f.mobius == ((f.codim % 2) ? -1 : 1));
    }
    SECTION("A2 Weyl: triple point has mu = 2") {
        IntersectionLattice lat = build_lattice(weyl_a2());
        CHECK(lat.flats().size() == 5);
        auto origin = lat.level(2);
        REQUIRE(origin.size() == 1);
        CHECK(lat.flat(origin[0]).mobius == 2);
        CHECK(lat.flat(origin[0]).members == 0b111u);
    }
}

TEST_CASE("characteristic polynomials of pinned arrangements") {
    CHECK(chi_of(Arrangement(3)) == t_poly({0, 0, 0, 1}));
    CHECK(chi_of(weyl_a2()) == t_poly({2, -3, 1}));
    CHECK(chi_of(cat1_a1()) == t_poly({3, -4, 1}));
    // non-essential: a single plane in Q^2
    CHECK(chi_of(Arrangement(2, {Hyperplane{{1, 0}}})) == t_poly({0, -1, 1}));

    CharPoly cp = char_poly(weyl_a2());
    CHECK(cp.poincare == t_poly({1, 3, 2}));
}

TEST_CASE("chi and poincare determine each other") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 30; ++trial) {
        Arrangement a = random_arrangement(rng, 2 + trial % 2, 5);
        CharPoly cp = char_poly(a);
        // chi(t) = sum mu t^(l-codim), pi(t) = sum mu (-t)^codim: term by term
        size_t l = a.dim();
        Poly rebuilt(std::vector<std::string>{"t"});
        for (const auto& [e, c] : cp.poincare.terms()) {
            int codim = e[0];
            Rational sgn = (codim % 2) ? Rational(-1) : Rational(1);
            rebuilt.add_term(ExpVec{static_cast<int>(l) - codim}, sgn * c);
        }
        CHECK(rebuilt == cp.chi);
    }
}

TEST_CASE("mobius recursion holds at every flat") {
    std::mt19937 rng(77);
    std::vector<Arrangement> cases = {weyl_a2(), cat1_a1(), boolean_arrangement(3)};
    for (int trial = 0; trial < 20; ++trial) cases.push_back(random_arrangement(rng, 3, 6));
    for (const Arrangement& a : cases) {
        IntersectionLattice lat = build_lattice(a);
        for (const Flat& x : lat.flats()) {
            Integer total = 0;
            for (const Flat& y : lat.flats())
                if (mask_subset(y.members, x.members)) total += y.mobius;
            CHECK(total == (x.codim == 0 ? 1 : 0));
        }
    }
}

TEST_CASE("lattice construction is input-order insensitive") {
    std::mt19937 rng(4321);
    for (int trial = 0; trial < 10; ++trial) {
        Arrangement a = random_arrangement(rng, 3, 6);
        std::vector<Hyperplane> shuffled = a.planes();
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        Arrangement b(3, shuffled);
        CHECK(a == b);
        CHECK(chi_of(a) == chi_of(b));
    }
}

TEST_CASE("deletion-restriction recursion for chi") {
    std::mt19937 rng(2718);
    int checked = 0;
    for (int trial = 0; trial < 25; ++trial) {
        Arrangement a = random_arrangement(rng, 1 + trial % 3, 7);
        if (a.size() == 0) continue;
        for (const Hyperplane& h : a.planes()) {
            Arrangement del = a.without(h);
            Restriction res = restrict(a, Subspace::from_forms({h.normal}, a.dim()));
            Poly lhs = chi_of(a);
            Poly rhs = chi_of(del) - chi_of(res.arr);
            CHECK(lhs == rhs);
            ++checked;
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("localize picks exactly the containing hyperplanes") {
    Arrangement a2 = weyl_a2();
    Subspace origin = Subspace::from_forms({{1, 0}, {0, 1}}, 2);
    CHECK(localize(a2, origin) == a2);

    Subspace xline = Subspace::from_forms({{1, 0}}, 2);
    Arrangement loc = localize(a2, xline);
    CHECK(loc.size() == 1);
    CHECK(loc.plane(0).normal == IntVec{1, 0});

    // a subspace that is not a lattice member localizes to nothing
    Subspace skew = Subspace::from_forms({{1, 2}}, 2);
    CHECK(localize(a2, skew).size() == 0);
}

TEST_CASE("restriction counts preimages") {
    SECTION("ziegler multiplicity on the cone coordinate of Cat1(A1)") {
        Arrangement cat = cat1_a1();
        Restriction r = ziegler_restriction(cat, Hyperplane{{0, 1}});
        REQUIRE(r.arr.size() == 1);
        CHECK(r.mult[0] == 3);
        CHECK(r.arr.dim() == 1);
    }
    SECTION("restriction to the whole space is the identity") {
        Arrangement a2 = weyl_a2();
        Restriction r = restrict(a2, Subspace::whole_space(2));
        CHECK(r.arr.size() == 3);
        CHECK(r.mult == std::vector<int>{1, 1, 1});
    }
    SECTION("sum of ziegler multiplicities is |A| - 1") {
        std::mt19937 rng(31415);
        std::vector<Arrangement> cases = {weyl_a2(), cat1_a1(), boolean_arrangement(3)};
        for (int trial = 0; trial < 15; ++trial) cases.push_back(random_arrangement(rng, 3, 7));
        for (const Arrangement& a : cases)
            for (const Hyperplane& h : a.planes()) {
                Restriction r = ziegler_restriction(a, h);
                CHECK(multiplicity_total(r.mult) == static_cast<int>(a.size()) - 1);
            }
    }
}

TEST_CASE("b_polynomial pinned examples") {
    SECTION("triple point: {x, y, x+y} against x-y") {
        Arrangement ap(2, {Hyperplane{{1, 0}}, Hyperplane{{0, 1}}, Hyperplane{{1, 1}}});
        Poly b = b_polynomial(ap, Hyperplane{{1, -1}});
        CHECK(b.str() == "u1^2");
    }
    SECTION("{x, y} against x+y") {
        Arrangement ap(2, {Hyperplane{{1, 0}}, Hyperplane{{0, 1}}});
        Poly b = b_polynomial(ap, Hyperplane{{1, 1}});
        CHECK(b.str() == "u1");
    }
    SECTION("empty deleted arrangement gives B = 1") {
        Poly b = b_polynomial(Arrangement(2), Hyperplane{{1, 0}});
        CHECK(b.degree() == 0);
        CHECK(b.leading_coeff() == 1);
    }
    SECTION("degree is |A'| minus restriction size") {
        std::mt19937 rng(95);
        for (int trial = 0; trial < 20; ++trial) {
            Arrangement a = random_arrangement(rng, 3, 6);
            if (a.size() < 2) continue;
            Hyperplane h = a.plane(trial % a.size());
            Arrangement ap = a.without(h);
            Restriction r = restrict(ap, Subspace::from_forms({h.normal}, 3));
            CHECK(b_polynomial(ap, h).degree() ==
                  static_cast<int>(ap.size()) - static_cast<int>(r.arr.size()));
        }
    }
}
