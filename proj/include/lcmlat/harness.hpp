#ifndef LCMLAT_HARNESS_HPP
#define LCMLAT_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lcmlat/field.hpp"
#include "lcmlat/graph.hpp"
#include "lcmlat/ideal.hpp"
#include "lcmlat/json_io.hpp"
#include "lcmlat/search.hpp"

namespace lcmlat {

/// splitmix64; self-contained so seeded corpora are reproducible
/// bit-for-bit on every platform.
class DeterministicRng {
public:
    explicit DeterministicRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n), rejection sampled.
    std::uint64_t below(std::uint64_t n);

private:
    std::uint64_t state_;
};

/// Corpus description, parsed from compact strings such as
///   all-graphs-5
///   all-graphs-le-4
///   random-squarefree:d=3,n=6,count=200,seed=0,min-gens=1,max-gens=10
///   random-monomial:n=4,maxdeg=3,count=100,seed=0
///   random-squarefree-mixed:n=5,count=200,seed=7
struct CorpusSpec {
    enum class Kind {
        AllGraphs,            // all labeled graphs on exactly n vertices
        AllGraphsUpTo,        // all labeled graphs on 1..n vertices
        RandomSquarefree,     // equigenerated squarefree, degree d
        RandomMonomial,       // non-squarefree, exponents <= maxdeg
        RandomSquarefreeMixed // squarefree, mixed degrees
    };

    Kind kind = Kind::AllGraphs;
    int n = 4;
    int degree = 2;
    int maxdeg = 2;
    std::size_t count = 100;
    std::uint64_t seed = 0;
    std::size_t min_gens = 1;
    std::size_t max_gens = 10;

    static CorpusSpec parse(const std::string& text);
    std::string to_string() const;
    bool is_graph_corpus() const {
        return kind == Kind::AllGraphs || kind == Kind::AllGraphsUpTo;
    }
};

std::vector<SimpleGraph> generate_graph_corpus(const CorpusSpec& spec);
std::vector<MonomialIdeal> generate_ideal_corpus(const CorpusSpec& spec);

struct SuiteOptions {
    std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::prime_field(2)};
    std::uint64_t budget_nodes = SearchBudget::kDefaultNodes;
    int jobs = 1;
    bool include_certificates = false;
};

/// One corpus instance: both sides of each equivalence, agreement flag,
/// and a skip marker when a search budget ran out or the instance is not
/// applicable. The full input is embedded for replay.
struct InstanceResult {
    std::string id;
    Json detail;     // includes "input", per-check verdicts, "agree", "skipped"
    bool agree = true;
    bool skipped = false;
};

struct CheckReport {
    std::string suite;
    std::string corpus;
    std::vector<InstanceResult> instances;
    std::size_t total = 0;
    std::size_t checked = 0;
    std::size_t agreed = 0;
    std::size_t disagreed = 0;
    std::size_t skipped = 0;

    bool all_agree() const { return disagreed == 0; }
    Json to_json(const SuiteOptions& options) const;
};

/// Linear resolution <=> d-degree graded and Cohen-Macaulay lcm-lattice,
/// per field.
CheckReport check_theorem_1_1(const CorpusSpec& corpus, const SuiteOptions& options = {});
/// Linear quotients <=> d-degree graded and CL-shellable lcm-lattice
/// (equigenerated instances; others are skipped with a reason).
CheckReport check_theorem_1_2(const CorpusSpec& corpus, const SuiteOptions& options = {});
/// Co-chordal <=> 2-degree graded and CL-shellable, over edge ideals.
CheckReport check_corollary_1_3(const CorpusSpec& corpus, const SuiteOptions& options = {});
/// Polarization preserves the lattice (with degrees), linear quotients,
/// and linear resolutions.
CheckReport check_polarization_suite(const CorpusSpec& corpus, const SuiteOptions& options = {});
/// Eagon-Reiner with degrees, linear quotients vs dual shellability, and
/// the lattice-vs-dual corollary, per field.
CheckReport check_eagon_reiner_suite(const CorpusSpec& corpus, const SuiteOptions& options = {});

/// Dispatch by suite name: theorem-1-1, theorem-1-2, corollary-1-3,
/// polarization, eagon-reiner.
CheckReport run_suite(const std::string& suite, const CorpusSpec& corpus,
                      const SuiteOptions& options = {});

/// Re-runs one instance (the "input" object of an instance entry) through
/// its suite and returns the detailed verdicts.
Json replay_instance(const std::string& suite, const Json& input, const SuiteOptions& options = {});

}  // namespace lcmlat

#endif
