// Acceptance suite: runs every criterion at its stated corpus and
// tolerance and prints one pass/fail line each. Exit status is the number
// of failed criteria.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "lcmlat/betti.hpp"
#include "lcmlat/duality.hpp"
#include "lcmlat/graph.hpp"
#include "lcmlat/harness.hpp"
#include "lcmlat/homology.hpp"
#include "lcmlat/lattice.hpp"
#include "lcmlat/quotients.hpp"
#include "lcmlat/rao.hpp"
#include "lcmlat/shelling.hpp"

using namespace lcmlat;

namespace {

int failures = 0;

void report(const std::string& name, bool pass, const std::string& note = "") {
    std::printf("%s  %-28s %s\n", pass ? "PASS" : "FAIL", name.c_str(), note.c_str());
    if (!pass) ++failures;
}

SuiteOptions default_options() {
    SuiteOptions options;
    options.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    return options;
}

const char* kGraphCorpus = "all-graphs-5";
const char* kSquarefreeCorpus = "random-squarefree:d=3,n=6,count=200,seed=0,min-gens=1,max-gens=10";
const char* kMonomialCorpus = "random-monomial:n=4,maxdeg=3,count=100,seed=0,min-gens=2,max-gens=5";
const char* kMixedCorpus = "random-squarefree-mixed:n=5,count=200,seed=0,min-gens=1,max-gens=5";

std::vector<MonomialIdeal> criterion_ideals() {
    auto ideals = generate_ideal_corpus(CorpusSpec::parse(kGraphCorpus));
    auto extra = generate_ideal_corpus(CorpusSpec::parse(kSquarefreeCorpus));
    ideals.insert(ideals.end(), extra.begin(), extra.end());
    return ideals;
}

std::string summary_note(const CheckReport& r) {
    std::ostringstream os;
    os << "checked=" << r.checked << " agreed=" << r.agreed << " disagreed=" << r.disagreed
       << " skipped=" << r.skipped;
    return os.str();
}

void criterion_1() {
    SuiteOptions options = default_options();
    CheckReport graphs = check_theorem_1_1(CorpusSpec::parse(kGraphCorpus), options);
    CheckReport random = check_theorem_1_1(CorpusSpec::parse(kSquarefreeCorpus), options);
    const bool pass = graphs.disagreed == 0 && graphs.skipped == 0 && graphs.checked == 1023 &&
                      random.disagreed == 0 && random.skipped == 0 && random.checked == 200;
    report("criterion-1 theorem-1-1", pass,
           "graphs[" + summary_note(graphs) + "] random[" + summary_note(random) + "]");
}

void criterion_2() {
    SuiteOptions options = default_options();
    CheckReport graphs = check_theorem_1_2(CorpusSpec::parse(kGraphCorpus), options);
    CheckReport random = check_theorem_1_2(CorpusSpec::parse(kSquarefreeCorpus), options);
    // Both corpora are equigenerated and within the 10-generator bound, so
    // nothing may be skipped: NotFound must come from exhausted search.
    const bool pass = graphs.disagreed == 0 && graphs.skipped == 0 &&
                      random.disagreed == 0 && random.skipped == 0;
    report("criterion-2 theorem-1-2", pass,
           "graphs[" + summary_note(graphs) + "] random[" + summary_note(random) + "]");
}

void criterion_3() {
    SuiteOptions options = default_options();
    CheckReport r = check_corollary_1_3(CorpusSpec::parse("all-graphs-le-5"), options);
    bool pass = r.disagreed == 0 && r.skipped == 5;  // the five edgeless graphs

    // Named cases with their known co-chordality verdicts.
    auto named = [&](const SimpleGraph& G, bool expect_cochordal) {
        Json out = replay_instance("corollary-1-3", graph_to_json(G), options);
        if (out["skipped"].get<bool>() || !out["agree"].get<bool>()) return false;
        return out["left"].get<bool>() == expect_cochordal;
    };
    auto cycle = [](int n) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i <= n; ++i) edges.emplace_back(i, i % n + 1);
        return SimpleGraph(n, std::move(edges));
    };
    pass = pass && named(cycle(5), false);
    pass = pass && named(cycle(6), false);
    pass = pass && named(SimpleGraph(4, {{1, 2}, {2, 3}, {3, 4}}), true);   // P4
    pass = pass && named(SimpleGraph(4, {{1, 2}, {3, 4}}), false);          // 2K2
    pass = pass && named(SimpleGraph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}),
                         true);                                             // K4

    // The two graph-theoretic inputs behind the corollary, checked head
    // on: co-chordality matches a 2-linear resolution (both fields), and
    // linear resolutions match linear quotients on edge ideals.
    const std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::prime_field(2)};
    std::atomic<bool> froberg_ok{true}, hhz_ok{true};
    auto graphs = generate_graph_corpus(CorpusSpec::parse("all-graphs-le-5"));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (int w = 0; w < options.jobs; ++w) {
        workers.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= graphs.size()) break;
                const SimpleGraph& G = graphs[i];
                if (G.edges().empty()) continue;
                MonomialIdeal I = edge_ideal(G);
                auto lq = find_linear_quotients_order(I);
                for (const FieldSpec& f : fields) {
                    auto lin = has_d_linear_resolution(I, f);
                    const bool two_linear = lin.has_value() && *lin == 2;
                    if (two_linear != is_cochordal(G)) froberg_ok = false;
                    if (lin.has_value() != lq.found()) hhz_ok = false;
                }
            }
        });
    }
    for (auto& t : workers) t.join();
    pass = pass && froberg_ok && hhz_ok;
    report("criterion-3 corollary-1-3", pass,
           summary_note(r) + " froberg=" + (froberg_ok ? "ok" : "bad") + " hhz=" +
               (hhz_ok ? "ok" : "bad"));
}

void criterion_4() {
    const auto ideals = criterion_ideals();
    const std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::prime_field(2)};
    std::atomic<std::size_t> mismatches{0};
    std::atomic<std::size_t> next{0};
    const int jobs = default_options().jobs;
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= ideals.size()) break;
                for (const FieldSpec& field : fields) {
                    BettiTable a = gpw_betti(ideals[i], field);
                    BettiTable b = koszul_betti_oracle(ideals[i], field);
                    if (!a.same_entries(b)) ++mismatches;
                }
            }
        });
    }
    for (auto& t : workers) t.join();

    // Frozen spot values.
    auto ctx3 = make_context({"x", "y", "z"});
    auto ctx4 = make_context({"x", "y", "z", "w"});
    MonomialIdeal diam(ctx3, {parse_monomial("x*y", ctx3), parse_monomial("y*z", ctx3)});
    MonomialIdeal disj(ctx4, {parse_monomial("x*y", ctx4), parse_monomial("z*w", ctx4)});
    MonomialIdeal path(ctx4, {parse_monomial("x*y", ctx4), parse_monomial("y*z", ctx4),
                              parse_monomial("z*w", ctx4)});
    bool spots = true;
    spots = spots && gpw_betti(diam, fields[0]).at(1, parse_monomial("x*y*z", ctx3)) == 1;
    spots = spots && gpw_betti(disj, fields[0]).at(1, parse_monomial("x*y*z*w", ctx4)) == 1;
    BettiTable path_table = gpw_betti(path, fields[0]);
    for (int i = 0; i <= 4; ++i) {
        spots = spots && path_table.at(i, parse_monomial("x*y*z*w", ctx4)) == 0;
    }
    std::ostringstream os;
    os << "ideals=" << ideals.size() << " mismatches=" << mismatches.load()
       << " spot_values=" << (spots ? "ok" : "bad");
    report("criterion-4 betti-oracle", mismatches == 0 && spots, os.str());
}

void criterion_5() {
    SuiteOptions options = default_options();
    CheckReport r = check_polarization_suite(CorpusSpec::parse(kMonomialCorpus), options);
    const bool pass = r.disagreed == 0 && r.skipped == 0 && r.checked == 100;
    report("criterion-5 polarization", pass, summary_note(r));
}

void criterion_6() {
    SuiteOptions options = default_options();
    CheckReport mixed = check_eagon_reiner_suite(CorpusSpec::parse(kMixedCorpus), options);
    // The 5-vertex edge ideals are exactly the squarefree degree-2 ideals
    // on five variables, so the same suite sweeps those too.
    CheckReport graphs = check_eagon_reiner_suite(CorpusSpec::parse(kGraphCorpus), options);
    const bool pass = mixed.disagreed == 0 && mixed.skipped == 0 && mixed.checked == 200 &&
                      graphs.disagreed == 0 && graphs.skipped == 0;
    report("criterion-6 eagon-reiner", pass,
           "mixed[" + summary_note(mixed) + "] graphs[" + summary_note(graphs) + "]");
}

void criterion_7() {
    const auto ideals = criterion_ideals();
    const FieldSpec q = FieldSpec::rationals();
    const FieldSpec f2 = FieldSpec::prime_field(2);
    bool super_atoms_ok = true;
    bool i1_ok = true;
    bool semimodular_ok = true;
    bool rao_all_orderings_ok = true;
    bool lq_implies_linear_ok = true;
    std::size_t linear_count = 0, i1_count = 0, graded_count = 0, tsm_count = 0, lq_count = 0;

    std::mutex mu;
    std::atomic<std::size_t> next{0};
    const int jobs = default_options().jobs;
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
            while (true) {
                std::size_t idx = next.fetch_add(1);
                if (idx >= ideals.size()) break;
                const MonomialIdeal& I = ideals[idx];
                LcmLattice L = LcmLattice::build(I);
                const Poset& P = L.poset();
                auto d = has_d_linear_resolution(I, q);

                bool local_super = true, local_i1 = true, local_semi = true, local_rao = true;
                bool local_lq_linear = true;
                bool counted_linear = false, counted_i1 = false, counted_graded = false,
                     counted_tsm = false, counted_lq = false;

                // Linear quotients on an equigenerated ideal force a
                // d-linear resolution over every field.
                auto equi = is_equigenerated(I);
                if (equi) {
                    auto lq = find_linear_quotients_order(I);
                    if (lq.found()) {
                        counted_lq = true;
                        local_lq_linear = d.has_value() && *d == *equi &&
                                          has_d_linear_resolution(I, f2) == equi;
                    }
                }

                if (d) {
                    counted_linear = true;
                    // Super atoms coincide with the first Betti degrees and
                    // sit in degree d + 1.
                    std::vector<Monomial> supers;
                    for (int s : L.super_atoms()) supers.push_back(L.element(s));
                    std::sort(supers.begin(), supers.end(), CanonicalMonomialLess{});
                    auto betti1 = first_betti_degrees(I, q);
                    local_super = supers == betti1;
                    for (const Monomial& m : supers) {
                        local_super = local_super && m.degree() == *d + 1;
                    }
                    // I1 inherits a linear resolution, one degree up.
                    if (I.is_squarefree() && !betti1.empty()) {
                        counted_i1 = true;
                        auto d1 = has_d_linear_resolution(build_I1(I, q), q);
                        local_i1 = d1.has_value() && *d1 == *d + 1;
                    }
                }

                if (degree_graded_degree(L)) {
                    counted_graded = true;
                    // Every interval avoiding the bottom is semimodular
                    // (hence totally semimodular, intervals of intervals
                    // being intervals).
                    for (std::size_t x = 1; x < P.size() && local_semi; ++x) {
                        for (std::size_t y = 0; y < P.size() && local_semi; ++y) {
                            if (!P.leq(static_cast<int>(x), static_cast<int>(y))) continue;
                            local_semi =
                                is_semimodular(interval(P, static_cast<int>(x), static_cast<int>(y)));
                        }
                    }
                }

                if (P.atoms().size() <= 5 && is_graded_poset(P) && is_totally_semimodular(P)) {
                    counted_tsm = true;
                    std::vector<int> atoms = P.atoms();
                    std::sort(atoms.begin(), atoms.end());
                    do {
                        auto forced = has_recursive_atom_ordering_with_root(P, atoms);
                        local_rao = local_rao && forced.found() &&
                                    verify_rao_certificate(P, *forced.certificate);
                    } while (std::next_permutation(atoms.begin(), atoms.end()) && local_rao);
                }

                std::lock_guard<std::mutex> lock(mu);
                super_atoms_ok = super_atoms_ok && local_super;
                i1_ok = i1_ok && local_i1;
                semimodular_ok = semimodular_ok && local_semi;
                rao_all_orderings_ok = rao_all_orderings_ok && local_rao;
                lq_implies_linear_ok = lq_implies_linear_ok && local_lq_linear;
                if (counted_linear) ++linear_count;
                if (counted_i1) ++i1_count;
                if (counted_graded) ++graded_count;
                if (counted_tsm) ++tsm_count;
                if (counted_lq) ++lq_count;
            }
        });
    }
    for (auto& t : workers) t.join();

    std::ostringstream os;
    os << "linear=" << linear_count << " i1=" << i1_count << " graded=" << graded_count
       << " totally_semimodular=" << tsm_count;
    report("criterion-7 structural-lemmas",
           super_atoms_ok && i1_ok && semimodular_ok && rao_all_orderings_ok && linear_count > 0 &&
               i1_count > 0 && graded_count > 0 && tsm_count > 0,
           os.str());
}

void criterion_8() {
    bool pass = true;
    const std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::prime_field(2)};

    // Named homology values: the circle two ways, and cones are acyclic.
    SimplicialComplex circle({"1", "2", "3"}, {{0, 1}, {1, 2}, {0, 2}});
    SimplicialComplex s0a({"a1", "a2"}, {{0}, {1}});
    SimplicialComplex s0b({"b1", "b2"}, {{0}, {1}});
    SimplicialComplex s1 = join_complex(s0a, s0b);
    for (const FieldSpec& f : fields) {
        HomologyProfile h_circle = reduced_homology(circle, f);
        pass = pass && h_circle.at(1) == 1 && h_circle.at(0) == 0;
        HomologyProfile h_s1 = reduced_homology(s1, f);
        pass = pass && h_s1.at(1) == 1 && h_s1.at(0) == 0;
        // Cones: join with a point kills all homology.
        SimplicialComplex apex({"apex"}, {{0}});
        for (const SimplicialComplex& base : {circle, s1, s0a}) {
            HomologyProfile h = reduced_homology(join_complex(base, apex), f);
            pass = pass && h.is_trivial();
        }
    }

    // Certificate replay with the independent verifiers, over a sample of
    // edge ideals on four vertices.
    auto graphs = generate_graph_corpus(CorpusSpec::parse("all-graphs-4"));
    std::size_t lq_replayed = 0, rao_replayed = 0, shell_replayed = 0, elim_replayed = 0;
    for (const SimpleGraph& G : graphs) {
        auto chord = is_chordal(G);
        if (chord.chordal) {
            pass = pass && verify_elimination_order(G, chord.elimination_order);
            ++elim_replayed;
        } else {
            pass = pass && verify_induced_cycle(G, chord.induced_cycle);
        }
        if (G.edges().empty()) continue;
        MonomialIdeal I = edge_ideal(G);
        auto lq = find_linear_quotients_order(I);
        if (lq.found()) {
            pass = pass && verify_quotient_certificate(I, *lq.certificate);
            ++lq_replayed;
        }
        LcmLattice L = LcmLattice::build(I);
        auto cl = is_cl_shellable(L);
        if (cl.found()) {
            pass = pass && verify_rao_certificate(L.poset(), *cl.certificate);
            ++rao_replayed;
        }
        SimplicialComplex dual = alexander_dual(complex_of_ideal(I));
        if (dual.is_pure()) {
            auto shell = is_shellable(dual);
            if (shell.found()) {
                pass = pass && verify_shelling_certificate(dual, *shell.certificate);
                ++shell_replayed;
            }
        }
    }
    std::ostringstream os;
    os << "lq=" << lq_replayed << " rao=" << rao_replayed << " shell=" << shell_replayed
       << " elim=" << elim_replayed;
    pass = pass && lq_replayed > 0 && rao_replayed > 0 && shell_replayed > 0 && elim_replayed > 0;
    report("criterion-8 homology-sanity", pass, os.str());
}

void criterion_9() {
    SuiteOptions options;  // deterministic single-job baseline
    SuiteOptions parallel = default_options();
    CorpusSpec spec = CorpusSpec::parse("random-squarefree:d=2,n=5,count=40,seed=11");
    std::string a = check_theorem_1_2(spec, options).to_json(options).dump();
    std::string b = check_theorem_1_2(spec, options).to_json(options).dump();
    std::string c = check_theorem_1_2(spec, parallel).to_json(options).dump();
    CorpusSpec pol = CorpusSpec::parse("random-monomial:n=3,maxdeg=2,count=20,seed=2,min-gens=2,max-gens=4");
    std::string d = check_polarization_suite(pol, options).to_json(options).dump();
    std::string e = check_polarization_suite(pol, parallel).to_json(options).dump();
    report("criterion-9 determinism", a == b && a == c && d == e,
           "reports byte-identical across reruns and job counts");
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    auto seconds = std::chrono::duration_cast<std::chrono::seconds>(clock::now() - t0).count();
    std::printf("acceptance finished in %llds, %d criterion failure(s)\n",
                static_cast<long long>(seconds), failures);
    return failures;
}
