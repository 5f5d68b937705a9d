#include <doctest.h>

#include "lcmlat/quotients.hpp"
#include "oracles.hpp"

using namespace lcmlat;

namespace {

MonomialIdeal path3_ideal() {
    auto ctx = make_context({"x", "y", "z", "w"});
    return MonomialIdeal(ctx, {parse_monomial("x*y", ctx), parse_monomial("y*z", ctx),
                               parse_monomial("z*w", ctx)});
}

MonomialIdeal cycle5_ideal() {
    auto ctx = make_context(5);
    std::vector<Monomial> gens;
    for (int i = 0; i < 5; ++i) {
        std::vector<int> e(5, 0);
        e[static_cast<std::size_t>(i)] = 1;
        e[static_cast<std::size_t>((i + 1) % 5)] = 1;
        gens.emplace_back(ctx, std::move(e));
    }
    return MonomialIdeal(ctx, std::move(gens));
}

}  // namespace

TEST_CASE("linear quotients on the 3-path edge ideal") {
    MonomialIdeal I = path3_ideal();
    auto result = find_linear_quotients_order(I);
    REQUIRE(result.found());
    CHECK(verify_quotient_certificate(I, *result.certificate));
    // Replay the ordering against the lemma-formula oracle.
    std::vector<Monomial> prefix;
    for (int g : result.certificate->ordering) {
        CHECK(testing::lq_step_ok(prefix, I.generators()[static_cast<std::size_t>(g)]));
        prefix.push_back(I.generators()[static_cast<std::size_t>(g)]);
    }
}

TEST_CASE("the 5-cycle edge ideal has no linear quotients") {
    MonomialIdeal I = cycle5_ideal();
    auto result = find_linear_quotients_order(I);
    CHECK(result.not_found());
    // All 120 orderings fail, by full enumeration on the oracle path.
    CHECK(!testing::brute_force_has_linear_quotients(I));
}

TEST_CASE("single generator is trivially Found") {
    auto ctx = make_context({"x", "y", "z"});
    MonomialIdeal I(ctx, {parse_monomial("x*y*z", ctx)});
    auto result = find_linear_quotients_order(I);
    REQUIRE(result.found());
    CHECK(result.certificate->ordering == std::vector<int>{0});
    CHECK(verify_quotient_certificate(I, *result.certificate));
}

TEST_CASE("budget exhaustion reports Exhausted") {
    MonomialIdeal I = cycle5_ideal();
    auto result = find_linear_quotients_order(I, SearchBudget(3));
    CHECK(result.exhausted());
}

TEST_CASE("search agrees with permutation enumeration on small ideals") {
    // Mixed bag: with and without linear quotients, squarefree and not.
    auto ctx = make_context({"x", "y", "z", "w"});
    auto mk = [&](std::initializer_list<const char*> gens) {
        std::vector<Monomial> ms;
        for (const char* g : gens) ms.push_back(parse_monomial(g, ctx));
        return MonomialIdeal(ctx, std::move(ms));
    };
    std::vector<MonomialIdeal> ideals{
        mk({"x*y", "z*w"}),
        mk({"x*y", "y*z", "z*w", "x*w"}),          // 4-cycle
        mk({"x^2", "x*y", "y^2"}),
        mk({"x^2*y", "y*z^3", "x*z"}),
        mk({"x*y*z", "x*y*w", "x*z*w", "y*z*w"}),
        mk({"x^3", "y^3", "z^3"}),
    };
    for (const auto& I : ideals) {
        auto result = find_linear_quotients_order(I);
        REQUIRE(!result.exhausted());
        CHECK(result.found() == testing::brute_force_has_linear_quotients(I));
        if (result.found()) CHECK(verify_quotient_certificate(I, *result.certificate));
    }
}

TEST_CASE("tampered certificates are rejected") {
    MonomialIdeal I = path3_ideal();
    auto result = find_linear_quotients_order(I);
    REQUIRE(result.found());
    auto cert = *result.certificate;
    std::swap(cert.ordering[0], cert.ordering[1]);
    // Reordering without recomputing witnesses must not verify.
    CHECK(!verify_quotient_certificate(I, cert));
}
