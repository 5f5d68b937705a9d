#include <doctest.h>

#include "lcmlat/errors.hpp"
#include "lcmlat/harness.hpp"

using namespace lcmlat;

TEST_CASE("corpus spec parsing round trips") {
    for (const char* text :
         {"all-graphs-4", "all-graphs-le-3",
          "random-squarefree:d=3,n=6,count=200,seed=0,min-gens=1,max-gens=10",
          "random-monomial:n=4,maxdeg=3,count=100,seed=0,min-gens=2,max-gens=5",
          "random-squarefree-mixed:n=5,count=200,seed=7,min-gens=1,max-gens=5"}) {
        CorpusSpec spec = CorpusSpec::parse(text);
        CHECK(spec.to_string() == text);
    }
    CHECK_THROWS_AS(CorpusSpec::parse("bogus"), InputError);
}

TEST_CASE("graph corpora enumerate all labeled graphs") {
    CHECK(generate_graph_corpus(CorpusSpec::parse("all-graphs-3")).size() == 8);
    CHECK(generate_graph_corpus(CorpusSpec::parse("all-graphs-4")).size() == 64);
    // 1 + 2 + 8 labeled graphs on 1, 2, 3 vertices.
    CHECK(generate_graph_corpus(CorpusSpec::parse("all-graphs-le-3")).size() == 11);
}

TEST_CASE("seeded ideal corpora are reproducible") {
    CorpusSpec spec = CorpusSpec::parse("random-squarefree:d=2,n=5,count=20,seed=42");
    auto a = generate_ideal_corpus(spec);
    auto b = generate_ideal_corpus(spec);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    // Different seeds differ somewhere.
    spec.seed = 43;
    auto c = generate_ideal_corpus(spec);
    bool any_diff = false;
    for (std::size_t i = 0; i < a.size(); ++i) any_diff = any_diff || !(a[i] == c[i]);
    CHECK(any_diff);
}

TEST_CASE("non-squarefree corpus really is non-squarefree") {
    auto ideals = generate_ideal_corpus(
        CorpusSpec::parse("random-monomial:n=3,maxdeg=3,count=25,seed=1,min-gens=2,max-gens=4"));
    CHECK(ideals.size() == 25);
    for (const auto& I : ideals) CHECK(!I.is_squarefree());
}

TEST_CASE("suites agree on small corpora") {
    SuiteOptions options;
    SUBCASE("theorem 1.1 on all graphs with 4 vertices") {
        CheckReport r = check_theorem_1_1(CorpusSpec::parse("all-graphs-4"), options);
        CHECK(r.total == 63);  // the edgeless graph has no edge ideal
        CHECK(r.disagreed == 0);
        CHECK(r.skipped == 0);
    }
    SUBCASE("theorem 1.2 on all graphs with 4 vertices") {
        CheckReport r = check_theorem_1_2(CorpusSpec::parse("all-graphs-4"), options);
        CHECK(r.disagreed == 0);
        CHECK(r.skipped == 0);
    }
    SUBCASE("corollary 1.3 on all graphs with up to 4 vertices") {
        CheckReport r = check_corollary_1_3(CorpusSpec::parse("all-graphs-le-4"), options);
        CHECK(r.disagreed == 0);
        // Skips are exactly the edgeless graphs: one per vertex count.
        CHECK(r.skipped == 4);
    }
    SUBCASE("polarization on a small random batch") {
        CheckReport r = check_polarization_suite(
            CorpusSpec::parse("random-monomial:n=3,maxdeg=2,count=15,seed=5,min-gens=2,max-gens=4"),
            options);
        CHECK(r.total == 15);
        CHECK(r.disagreed == 0);
        CHECK(r.skipped == 0);
    }
    SUBCASE("eagon-reiner on a small squarefree batch") {
        CheckReport r = check_eagon_reiner_suite(
            CorpusSpec::parse("random-squarefree-mixed:n=4,count=25,seed=3,min-gens=1,max-gens=4"),
            options);
        CHECK(r.total == 25);
        CHECK(r.disagreed == 0);
        CHECK(r.skipped == 0);
    }
}

TEST_CASE("reports are byte-identical across reruns and job counts") {
    SuiteOptions serial;
    SuiteOptions parallel;
    parallel.jobs = 4;
    CorpusSpec spec = CorpusSpec::parse("random-squarefree:d=2,n=5,count=15,seed=9");
    std::string a = check_theorem_1_2(spec, serial).to_json(serial).dump();
    std::string b = check_theorem_1_2(spec, serial).to_json(serial).dump();
    std::string c = check_theorem_1_2(spec, parallel).to_json(serial).dump();
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("replay reruns one instance verbosely") {
    Json input = Json::parse(R"({"variables":["x","y","z"],"generators":[[1,1,0],[0,1,1]]})");
    Json out = replay_instance("theorem-1-2", input);
    CHECK(out["suite"] == "theorem-1-2");
    CHECK(out["agree"] == true);
    Json graph_input = Json::parse(R"({"n":5,"edges":[[1,2],[2,3],[3,4],[4,5],[5,1]]})");
    Json out2 = replay_instance("corollary-1-3", graph_input);
    CHECK(out2["agree"] == true);
    CHECK(out2["left"] == false);
    CHECK(out2["right"] == false);
}

TEST_CASE("budget exhaustion surfaces as skips, not verdicts") {
    SuiteOptions options;
    options.budget_nodes = 1;
    CheckReport r = check_theorem_1_2(CorpusSpec::parse("all-graphs-3"), options);
    CHECK(r.disagreed == 0);
    CHECK(r.skipped > 0);
}
