#include <doctest.h>

#include <set>

#include "lcmlat/errors.hpp"
#include "lcmlat/lattice.hpp"
#include "lcmlat/poset.hpp"
#include "oracles.hpp"

using namespace lcmlat;

namespace {

MonomialIdeal ideal_of(const std::vector<const char*>& gens, std::size_t nvars,
                       ContextPtr ctx = nullptr) {
    if (!ctx) ctx = make_context(nvars, "x");
    std::vector<Monomial> ms;
    for (const char* g : gens) ms.push_back(parse_monomial(g, ctx));
    return MonomialIdeal(ctx, std::move(ms));
}

MonomialIdeal path3() {
    auto ctx = make_context({"x", "y", "z", "w"});
    return ideal_of({"x*y", "y*z", "z*w"}, 4, ctx);
}

MonomialIdeal two_disjoint() {
    auto ctx = make_context({"x", "y", "z", "w"});
    return ideal_of({"x*y", "z*w"}, 4, ctx);
}

Poset pentagon() {
    // 0 < a < c < 1 and 0 < b < 1.
    return Poset::from_cover_edges({"0", "a", "b", "c", "1"},
                                   {{0, 1}, {0, 2}, {1, 3}, {3, 4}, {2, 4}});
}

}  // namespace

TEST_CASE("lattice construction matches subset enumeration") {
    for (const MonomialIdeal& I :
         {path3(), two_disjoint(),
          ideal_of({"x1*x2"}, 2), ideal_of({"x1^2", "x1*x2", "x2^3"}, 2),
          ideal_of({"x1*x2", "x2*x3", "x3*x4", "x4*x5", "x5*x1"}, 5)}) {
        LcmLattice L = LcmLattice::build(I);
        auto expected = testing::brute_force_lattice_elements(I);
        REQUIRE(L.size() == expected.size());
        for (std::size_t e = 0; e < expected.size(); ++e) {
            CHECK(L.element(static_cast<int>(e)) == expected[e]);
        }
        // Covers match the literal definition.
        CHECK(L.poset().cover_edges() == testing::brute_force_covers(expected));
        // Join table agrees with componentwise max and lands in the set.
        for (std::size_t a = 0; a < L.size(); ++a) {
            for (std::size_t b = 0; b < L.size(); ++b) {
                int j = L.join(static_cast<int>(a), static_cast<int>(b));
                CHECK(L.element(j) ==
                      lcm(L.element(static_cast<int>(a)), L.element(static_cast<int>(b))));
            }
        }
    }
}

TEST_CASE("lattice sizes of the running examples") {
    CHECK(LcmLattice::build(ideal_of({"x1*x2"}, 2)).size() == 2);
    CHECK(LcmLattice::build(path3()).size() == 7);
    CHECK(LcmLattice::build(two_disjoint()).size() == 4);
}

TEST_CASE("atoms are the minimal generators") {
    LcmLattice L = LcmLattice::build(path3());
    std::set<std::string> atoms;
    for (int a : L.atom_indices()) atoms.insert(to_pretty_string(L.element(a)));
    CHECK(atoms == std::set<std::string>{"x*y", "y*z", "z*w"});
    CHECK(to_pretty_string(L.element(L.top())) == "x*y*z*w");
    CHECK(L.element(L.bottom()).is_one());
}

TEST_CASE("generator cap") {
    auto ctx = make_context(5);
    std::vector<Monomial> gens;
    for (int i = 0; i < 4; ++i) {
        std::vector<int> e(5, 0);
        e[static_cast<std::size_t>(i)] = 1;
        e[static_cast<std::size_t>(i) + 1] = 1;
        gens.emplace_back(ctx, std::move(e));
    }
    MonomialIdeal I(ctx, std::move(gens));
    CHECK_THROWS_AS(LcmLattice::build(I, 3), SizeLimitError);
}

TEST_CASE("super atoms") {
    SUBCASE("3-path: the two degree-3 joins") {
        LcmLattice L = LcmLattice::build(path3());
        std::set<std::string> names;
        for (int s : L.super_atoms()) names.insert(to_pretty_string(L.element(s)));
        CHECK(names == std::set<std::string>{"x*y*z", "y*z*w"});
    }
    SUBCASE("two disjoint edges: only the top") {
        LcmLattice L = LcmLattice::build(two_disjoint());
        REQUIRE(L.super_atoms().size() == 1);
        CHECK(L.super_atoms()[0] == L.top());
    }
    SUBCASE("principal ideal: none") {
        CHECK(LcmLattice::build(ideal_of({"x1*x2"}, 2)).super_atoms().empty());
    }
}

TEST_CASE("degree gradedness") {
    CHECK(is_degree_graded(LcmLattice::build(path3())));
    CHECK(is_d_degree_graded(LcmLattice::build(path3()), 2));
    CHECK(degree_graded_degree(LcmLattice::build(path3())) == 2);
    CHECK(!is_degree_graded(LcmLattice::build(two_disjoint())));  // 2 -> 4 jump
    // Principal: vacuously graded, atom degree 2.
    CHECK(is_d_degree_graded(LcmLattice::build(ideal_of({"x1*x2"}, 2)), 2));
}

TEST_CASE("intervals") {
    LcmLattice L = LcmLattice::build(path3());
    auto idx = [&](const char* text) {
        return *L.index_of(parse_monomial(text, L.element(0).context()));
    };
    SUBCASE("closed interval is a chain") {
        Poset I = interval(L.poset(), idx("x*y"), idx("x*y*z*w"));
        CHECK(I.size() == 3);
        CHECK(I.cover_edges().size() == 2);
        CHECK(is_graded_poset(I));
    }
    SUBCASE("open interval below an atom is empty") {
        CHECK(open_interval(L.poset(), L.bottom(), idx("y*z")).size() == 0);
    }
    SUBCASE("open interval of the disjoint square is an antichain") {
        LcmLattice M = LcmLattice::build(two_disjoint());
        Poset O = open_interval(M.poset(), M.bottom(), M.top());
        CHECK(O.size() == 2);
        CHECK(O.cover_edges().empty());
    }
    SUBCASE("incomparable endpoints error") {
        CHECK_THROWS_AS(interval(L.poset(), idx("x*y"), idx("y*z*w")), InputError);
    }
}

TEST_CASE("semimodularity") {
    SUBCASE("chains") {
        Poset chain = Poset::from_cover_edges({"a", "b", "c"}, {{0, 1}, {1, 2}});
        CHECK(is_semimodular(chain));
        CHECK(is_totally_semimodular(chain));
    }
    SUBCASE("pentagon fails") {
        CHECK(!is_semimodular(pentagon()));
        CHECK(!is_totally_semimodular(pentagon()));
    }
    SUBCASE("diamond of two disjoint edges") {
        CHECK(is_semimodular(LcmLattice::build(two_disjoint()).poset()));
    }
    SUBCASE("the 3-path lattice fails at the bottom but not above it") {
        // Atoms x*y and z*w cover the bottom and join only two levels up,
        // so the full lattice is not semimodular. Every interval [x, y]
        // with x above the bottom is, the lattice being 2-degree graded.
        LcmLattice L = LcmLattice::build(path3());
        const Poset& P = L.poset();
        CHECK(!is_semimodular(P));
        CHECK(!is_totally_semimodular(P));
        for (std::size_t x = 1; x < P.size(); ++x) {
            for (std::size_t y = 0; y < P.size(); ++y) {
                if (!P.leq(static_cast<int>(x), static_cast<int>(y))) continue;
                Poset I = interval(P, static_cast<int>(x), static_cast<int>(y));
                CHECK(is_semimodular(I));
                CHECK(is_totally_semimodular(I));
            }
        }
    }
}

TEST_CASE("graded poset recognition") {
    CHECK(is_graded_poset(LcmLattice::build(two_disjoint()).poset()));
    CHECK(is_graded_poset(LcmLattice::build(path3()).poset()));
    CHECK(!is_graded_poset(pentagon()));
    // Unbounded: two incomparable maximal elements.
    Poset V = Poset::from_cover_edges({"0", "a", "b"}, {{0, 1}, {0, 2}});
    CHECK(!is_graded_poset(V));
}

TEST_CASE("poset validation") {
    CHECK_THROWS_AS(Poset::from_cover_edges({"a", "b"}, {{0, 1}, {1, 0}}), InputError);
    // Transitive edge is not a cover.
    CHECK_THROWS_AS(Poset::from_cover_edges({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}}),
                    InputError);
}

TEST_CASE("isomorphism search") {
    SUBCASE("a poset is isomorphic to itself") {
        Poset P = pentagon();
        auto iso = are_isomorphic(P, P);
        REQUIRE(iso.has_value());
        for (std::size_t a = 0; a < P.size(); ++a) {
            for (std::size_t b = 0; b < P.size(); ++b) {
                CHECK(P.leq(static_cast<int>(a), static_cast<int>(b)) ==
                      P.leq((*iso)[a], (*iso)[b]));
            }
        }
    }
    SUBCASE("chain vs antichain-extended poset") {
        Poset chain = Poset::from_cover_edges({"a", "b", "c"}, {{0, 1}, {1, 2}});
        Poset vee = Poset::from_cover_edges({"0", "a", "b"}, {{0, 1}, {0, 2}});
        CHECK(!are_isomorphic(chain, vee).has_value());
    }
    SUBCASE("polarization diamond") {
        auto ctx = make_context({"x", "y"});
        MonomialIdeal I(ctx, {parse_monomial("x^2", ctx), parse_monomial("x*y", ctx)});
        LcmLattice LI = LcmLattice::build(I);
        LcmLattice LJ = LcmLattice::build(polarize(I));
        CHECK(LI.size() == 4);
        auto iso = are_isomorphic(LI, LJ);
        REQUIRE(iso.has_value());
        for (std::size_t e = 0; e < LI.size(); ++e) {
            CHECK(LI.degree(static_cast<int>(e)) == LJ.degree((*iso)[e]));
        }
    }
    SUBCASE("size cap") {
        Poset P = pentagon();
        CHECK_THROWS_AS(are_isomorphic(P, P, nullptr, nullptr, 3), SizeLimitError);
    }
}
