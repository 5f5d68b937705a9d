#include "lcmlat/harness.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <thread>

#include "lcmlat/betti.hpp"
#include "lcmlat/duality.hpp"
#include "lcmlat/errors.hpp"
#include "lcmlat/homology.hpp"
#include "lcmlat/lattice.hpp"
#include "lcmlat/quotients.hpp"
#include "lcmlat/rao.hpp"
#include "lcmlat/shelling.hpp"
#include "lcmlat/version.hpp"

namespace lcmlat {

std::uint64_t DeterministicRng::below(std::uint64_t n) {
    if (n == 0) throw InputError("rng: below(0)");
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % n;
}

namespace {

std::map<std::string, std::string> parse_kv(const std::string& body) {
    std::map<std::string, std::string> out;
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t comma = body.find(',', pos);
        if (comma == std::string::npos) comma = body.size();
        std::string item = body.substr(pos, comma - pos);
        std::size_t eq = item.find('=');
        if (eq == std::string::npos) throw InputError("corpus spec: expected key=value in '" + item + "'");
        out[item.substr(0, eq)] = item.substr(eq + 1);
        pos = comma + 1;
    }
    return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

CorpusSpec CorpusSpec::parse(const std::string& text) {
    CorpusSpec spec;
    if (text.rfind("all-graphs-le-", 0) == 0) {
        spec.kind = Kind::AllGraphsUpTo;
        spec.n = std::stoi(text.substr(14));
        return spec;
    }
    if (text.rfind("all-graphs-", 0) == 0) {
        spec.kind = Kind::AllGraphs;
        spec.n = std::stoi(text.substr(11));
        return spec;
    }
    auto with_body = [&](const char* prefix) -> std::optional<std::map<std::string, std::string>> {
        std::string p(prefix);
        if (text.rfind(p, 0) != 0) return std::nullopt;
        return parse_kv(text.substr(p.size()));
    };
    if (auto kv = with_body("random-squarefree-mixed:")) {
        spec.kind = Kind::RandomSquarefreeMixed;
        spec.min_gens = 1;
        spec.max_gens = 5;
        for (const auto& [k, v] : *kv) {
            if (k == "n") spec.n = std::stoi(v);
            else if (k == "count") spec.count = std::stoul(v);
            else if (k == "seed") spec.seed = std::stoull(v);
            else if (k == "min-gens") spec.min_gens = std::stoul(v);
            else if (k == "max-gens") spec.max_gens = std::stoul(v);
            else throw InputError("corpus spec: unknown key '" + k + "'");
        }
        return spec;
    }
    if (auto kv = with_body("random-squarefree:")) {
        spec.kind = Kind::RandomSquarefree;
        for (const auto& [k, v] : *kv) {
            if (k == "d") spec.degree = std::stoi(v);
            else if (k == "n") spec.n = std::stoi(v);
            else if (k == "count") spec.count = std::stoul(v);
            else if (k == "seed") spec.seed = std::stoull(v);
            else if (k == "min-gens") spec.min_gens = std::stoul(v);
            else if (k == "max-gens") spec.max_gens = std::stoul(v);
            else throw InputError("corpus spec: unknown key '" + k + "'");
        }
        return spec;
    }
    if (auto kv = with_body("random-monomial:")) {
        spec.kind = Kind::RandomMonomial;
        spec.min_gens = 2;
        spec.max_gens = 5;
        for (const auto& [k, v] : *kv) {
            if (k == "n") spec.n = std::stoi(v);
            else if (k == "maxdeg") spec.maxdeg = std::stoi(v);
            else if (k == "count") spec.count = std::stoul(v);
            else if (k == "seed") spec.seed = std::stoull(v);
            else if (k == "min-gens") spec.min_gens = std::stoul(v);
            else if (k == "max-gens") spec.max_gens = std::stoul(v);
            else throw InputError("corpus spec: unknown key '" + k + "'");
        }
        return spec;
    }
    throw InputError("unrecognized corpus spec '" + text + "'");
}

std::string CorpusSpec::to_string() const {
    switch (kind) {
        case Kind::AllGraphs:
            return "all-graphs-" + std::to_string(n);
        case Kind::AllGraphsUpTo:
            return "all-graphs-le-" + std::to_string(n);
        case Kind::RandomSquarefree:
            return "random-squarefree:d=" + std::to_string(degree) + ",n=" + std::to_string(n) +
                   ",count=" + std::to_string(count) + ",seed=" + std::to_string(seed) +
                   ",min-gens=" + std::to_string(min_gens) + ",max-gens=" + std::to_string(max_gens);
        case Kind::RandomMonomial:
            return "random-monomial:n=" + std::to_string(n) + ",maxdeg=" + std::to_string(maxdeg) +
                   ",count=" + std::to_string(count) + ",seed=" + std::to_string(seed) +
                   ",min-gens=" + std::to_string(min_gens) + ",max-gens=" + std::to_string(max_gens);
        case Kind::RandomSquarefreeMixed:
            return "random-squarefree-mixed:n=" + std::to_string(n) + ",count=" +
                   std::to_string(count) + ",seed=" + std::to_string(seed) + ",min-gens=" +
                   std::to_string(min_gens) + ",max-gens=" + std::to_string(max_gens);
    }
    return "";
}

std::vector<SimpleGraph> generate_graph_corpus(const CorpusSpec& spec) {
    if (!spec.is_graph_corpus()) throw InputError("not a graph corpus");
    std::vector<SimpleGraph> out;
    const int lo = spec.kind == CorpusSpec::Kind::AllGraphs ? spec.n : 1;
    for (int n = lo; n <= spec.n; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int u = 1; u <= n; ++u) {
            for (int v = u + 1; v <= n; ++v) slots.emplace_back(u, v);
        }
        if (slots.size() > 30) throw SizeLimitError("graph corpus: too many edge slots");
        for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (std::size_t b = 0; b < slots.size(); ++b) {
                if (mask >> b & 1) edges.push_back(slots[b]);
            }
            out.emplace_back(n, std::move(edges));
        }
    }
    return out;
}

std::vector<MonomialIdeal> generate_ideal_corpus(const CorpusSpec& spec) {
    std::vector<MonomialIdeal> out;
    DeterministicRng rng(spec.seed);
    const std::size_t n = static_cast<std::size_t>(spec.n);
    ContextPtr ctx = make_context(n);

    if (spec.kind == CorpusSpec::Kind::RandomSquarefree) {
        // All degree-d squarefree monomials, canonical order.
        std::vector<std::vector<int>> pool;
        std::vector<int> e(n, 0);
        auto rec = [&](auto&& self, std::size_t start, int left) -> void {
            if (left == 0) {
                pool.push_back(e);
                return;
            }
            for (std::size_t v = start; v + static_cast<std::size_t>(left) <= n; ++v) {
                e[v] = 1;
                self(self, v + 1, left - 1);
                e[v] = 0;
            }
        };
        rec(rec, 0, spec.degree);
        const std::size_t limit = std::min(spec.max_gens, pool.size());
        const std::size_t lo = std::min(spec.min_gens, limit);
        for (std::size_t i = 0; i < spec.count; ++i) {
            const std::size_t k = lo + rng.below(limit - lo + 1);
            // Distinct picks by partial Fisher-Yates on an index array.
            std::vector<std::size_t> idx(pool.size());
            for (std::size_t t = 0; t < idx.size(); ++t) idx[t] = t;
            std::vector<Monomial> gens;
            for (std::size_t t = 0; t < k; ++t) {
                const std::size_t pick = t + rng.below(idx.size() - t);
                std::swap(idx[t], idx[pick]);
                gens.emplace_back(ctx, pool[idx[t]]);
            }
            out.emplace_back(ctx, std::move(gens));
        }
        return out;
    }

    if (spec.kind == CorpusSpec::Kind::RandomMonomial) {
        while (out.size() < spec.count) {
            const std::size_t k = spec.min_gens + rng.below(spec.max_gens - spec.min_gens + 1);
            std::vector<Monomial> gens;
            for (std::size_t t = 0; t < k; ++t) {
                std::vector<int> e(n, 0);
                int deg = 0;
                for (std::size_t v = 0; v < n; ++v) {
                    e[v] = static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.maxdeg) + 1));
                    deg += e[v];
                }
                if (deg == 0) {
                    --t;
                    continue;
                }
                gens.emplace_back(ctx, std::move(e));
            }
            MonomialIdeal I(ctx, std::move(gens));
            if (I.is_zero() || I.is_squarefree()) continue;  // this corpus is non-squarefree
            out.push_back(std::move(I));
        }
        return out;
    }

    if (spec.kind == CorpusSpec::Kind::RandomSquarefreeMixed) {
        while (out.size() < spec.count) {
            const std::size_t k = spec.min_gens + rng.below(spec.max_gens - spec.min_gens + 1);
            std::vector<Monomial> gens;
            for (std::size_t t = 0; t < k; ++t) {
                std::vector<int> e(n, 0);
                int deg = 0;
                for (std::size_t v = 0; v < n; ++v) {
                    e[v] = static_cast<int>(rng.below(2));
                    deg += e[v];
                }
                if (deg == 0) {
                    --t;
                    continue;
                }
                gens.emplace_back(ctx, std::move(e));
            }
            MonomialIdeal I(ctx, std::move(gens));
            if (I.is_zero()) continue;
            out.push_back(std::move(I));
        }
        return out;
    }

    // Graph corpora: edge ideals of the graphs that have edges.
    auto graphs = generate_graph_corpus(spec);
    for (const auto& G : graphs) {
        if (!G.edges().empty()) out.push_back(edge_ideal(G));
    }
    return out;
}

namespace {

Json optional_int_json(const std::optional<int>& v) {
    return v ? Json(*v) : Json(nullptr);
}

const char* status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::NotFound: return "not-found";
        case SearchStatus::Exhausted: return "exhausted";
    }
    return "?";
}

struct InstanceOutcome {
    Json detail = Json::object();
    bool agree = true;
    bool skipped = false;
};

void finish(InstanceOutcome& out, const std::string& skip_reason = "") {
    out.skipped = !skip_reason.empty();
    out.detail["skipped"] = out.skipped;
    if (out.skipped) {
        out.detail["skip_reason"] = skip_reason;
        out.agree = true;
    }
    out.detail["agree"] = out.agree;
}

InstanceOutcome eval_theorem_1_1(const MonomialIdeal& I, const SuiteOptions& options) {
    InstanceOutcome out;
    LcmLattice L = LcmLattice::build(I);
    auto graded = degree_graded_degree(L);
    out.detail["lattice_size"] = L.size();
    out.detail["degree_graded"] = optional_int_json(graded);
    Json fields = Json::object();
    for (const FieldSpec& field : options.fields) {
        auto left = has_d_linear_resolution(I, field);
        bool cm = is_cm_poset(L.poset(), field);
        std::optional<int> right = (graded && cm) ? graded : std::nullopt;
        const bool agree = left == right;
        Json f;
        f["linear_resolution"] = optional_int_json(left);
        f["cm_poset"] = cm;
        f["lattice_side"] = optional_int_json(right);
        f["agree"] = agree;
        fields[field.to_string()] = std::move(f);
        out.agree = out.agree && agree;
    }
    out.detail["fields"] = std::move(fields);
    finish(out);
    return out;
}

InstanceOutcome eval_theorem_1_2(const MonomialIdeal& I, const SuiteOptions& options) {
    InstanceOutcome out;
    auto d = is_equigenerated(I);
    if (!d) {
        finish(out, "not equigenerated");
        return out;
    }
    auto lq = find_linear_quotients_order(I, SearchBudget(options.budget_nodes));
    LcmLattice L = LcmLattice::build(I);
    const bool graded = is_d_degree_graded(L, *d);
    auto cl = is_cl_shellable(L, SearchBudget(options.budget_nodes));
    out.detail["equigenerated"] = *d;
    out.detail["linear_quotients"] = status_name(lq.status);
    out.detail["d_degree_graded"] = graded;
    out.detail["cl_shellable"] = status_name(cl.status);
    if (lq.exhausted() || cl.exhausted()) {
        finish(out, "search budget exhausted");
        return out;
    }
    bool certificates_ok = true;
    if (lq.found()) {
        certificates_ok = certificates_ok && verify_quotient_certificate(I, *lq.certificate);
        if (options.include_certificates) {
            out.detail["lq_certificate"] = quotient_certificate_to_json(*lq.certificate, I);
        }
    }
    if (cl.found()) {
        certificates_ok = certificates_ok && verify_rao_certificate(L.poset(), *cl.certificate);
        if (options.include_certificates) {
            out.detail["rao_certificate"] = rao_certificate_to_json(*cl.certificate);
        }
    }
    out.detail["certificates_verified"] = certificates_ok;
    const bool left = lq.found();
    const bool right = graded && cl.found();
    out.agree = (left == right) && certificates_ok;
    out.detail["left"] = left;
    out.detail["right"] = right;
    finish(out);
    return out;
}

InstanceOutcome eval_corollary_1_3(const SimpleGraph& G, const SuiteOptions& options) {
    InstanceOutcome out;
    auto chord = is_chordal(complement(G));
    out.detail["cochordal"] = chord.chordal;
    if (G.edges().empty()) {
        finish(out, "edgeless graph has no edge ideal");
        return out;
    }
    MonomialIdeal I = edge_ideal(G);
    LcmLattice L = LcmLattice::build(I);
    const bool graded = is_d_degree_graded(L, 2);
    auto cl = is_cl_shellable(L, SearchBudget(options.budget_nodes));
    out.detail["two_degree_graded"] = graded;
    out.detail["cl_shellable"] = status_name(cl.status);
    if (cl.exhausted()) {
        finish(out, "search budget exhausted");
        return out;
    }
    const bool left = chord.chordal;
    const bool right = graded && cl.found();
    out.agree = left == right;
    out.detail["left"] = left;
    out.detail["right"] = right;
    finish(out);
    return out;
}

// Polarized image of one generator, by the "<name>_<k>" naming scheme.
Monomial polarized_generator(const Monomial& g, const ContextPtr& polarized_ctx) {
    std::vector<int> e(polarized_ctx->size(), 0);
    for (std::size_t v = 0; v < g.exponents().size(); ++v) {
        for (int k = 1; k <= g.exponents()[v]; ++k) {
            auto idx = polarized_ctx->index_of(g.context()->name(v) + "_" + std::to_string(k));
            if (!idx) throw std::logic_error("polarized variable missing");
            e[*idx] = 1;
        }
    }
    return Monomial(polarized_ctx, std::move(e));
}

// The canonical lattice map: lcm of a subset of atoms goes to the lcm of
// the polarized atoms. Checks bijectivity, order preservation both ways,
// and degree preservation.
bool natural_polarization_iso(const MonomialIdeal& I, const MonomialIdeal& J,
                              const LcmLattice& LI, const LcmLattice& LJ) {
    if (LI.size() != LJ.size()) return false;
    std::vector<Monomial> pol;
    pol.reserve(I.generator_count());
    for (const Monomial& g : I.generators()) pol.push_back(polarized_generator(g, J.context()));
    std::vector<int> image(LI.size(), -1);
    for (std::size_t e = 0; e < LI.size(); ++e) {
        Monomial target = Monomial::one(J.context());
        for (std::size_t g = 0; g < I.generator_count(); ++g) {
            if (I.generators()[g].divides(LI.element(static_cast<int>(e)))) {
                target = lcm(target, pol[g]);
            }
        }
        auto idx = LJ.index_of(target);
        if (!idx) return false;
        image[e] = *idx;
        if (LI.degree(static_cast<int>(e)) != LJ.degree(*idx)) return false;
    }
    std::vector<bool> hit(LJ.size(), false);
    for (int im : image) {
        if (im < 0 || hit[static_cast<std::size_t>(im)]) return false;
        hit[static_cast<std::size_t>(im)] = true;
    }
    for (std::size_t a = 0; a < LI.size(); ++a) {
        for (std::size_t b = 0; b < LI.size(); ++b) {
            if (LI.poset().leq(static_cast<int>(a), static_cast<int>(b)) !=
                LJ.poset().leq(image[a], image[b])) {
                return false;
            }
        }
    }
    return true;
}

InstanceOutcome eval_polarization(const MonomialIdeal& I, const SuiteOptions& options) {
    InstanceOutcome out;
    MonomialIdeal J = polarize(I);
    out.detail["polarization"] = ideal_to_json(J);
    if (!J.is_squarefree()) {
        out.agree = false;
        out.detail["polarization_squarefree"] = false;
        finish(out);
        return out;
    }
    LcmLattice LI = LcmLattice::build(I);
    LcmLattice LJ = LcmLattice::build(J);
    const bool natural = natural_polarization_iso(I, J, LI, LJ);
    auto generic = are_isomorphic(LI, LJ);
    out.detail["lattice_iso_natural"] = natural;
    out.detail["lattice_iso_search"] = generic.has_value();
    bool agree = natural && generic.has_value();

    auto lq_i = find_linear_quotients_order(I, SearchBudget(options.budget_nodes));
    auto lq_j = find_linear_quotients_order(J, SearchBudget(options.budget_nodes));
    out.detail["lq_original"] = status_name(lq_i.status);
    out.detail["lq_polarized"] = status_name(lq_j.status);
    if (lq_i.exhausted() || lq_j.exhausted()) {
        finish(out, "search budget exhausted");
        return out;
    }
    agree = agree && (lq_i.found() == lq_j.found());

    Json fields = Json::object();
    for (const FieldSpec& field : options.fields) {
        auto lr_i = has_d_linear_resolution(I, field);
        auto lr_j = has_d_linear_resolution(J, field);
        Json f;
        f["linear_resolution_original"] = optional_int_json(lr_i);
        f["linear_resolution_polarized"] = optional_int_json(lr_j);
        f["agree"] = lr_i == lr_j;
        agree = agree && (lr_i == lr_j);
        fields[field.to_string()] = std::move(f);
    }
    out.detail["fields"] = std::move(fields);
    out.agree = agree;
    finish(out);
    return out;
}

InstanceOutcome eval_eagon_reiner(const MonomialIdeal& I, const SuiteOptions& options) {
    InstanceOutcome out;
    if (!I.is_squarefree()) {
        finish(out, "not squarefree");
        return out;
    }
    const int n = static_cast<int>(I.context()->size());
    SimplicialComplex dual = alexander_dual(complex_of_ideal(I));
    // L(I) against the intersection lattice of the dual, via the
    // support-complement map.
    const bool correspondence = verify_lattice_correspondence(I);
    out.detail["lattice_correspondence"] = correspondence;
    const bool dual_pure = dual.is_pure();
    const std::optional<int> q_dual =
        dual_pure ? std::optional<int>(n - 1 - dual.dim()) : std::nullopt;
    out.detail["dual_pure"] = dual_pure;
    out.detail["dual_dim"] = dual.dim();

    LcmLattice L = LcmLattice::build(I);
    auto graded = degree_graded_degree(L);
    auto equi = is_equigenerated(I);
    auto lq = find_linear_quotients_order(I, SearchBudget(options.budget_nodes));
    std::optional<SearchResult<ShellingCertificate>> shell;
    if (dual_pure) shell = is_shellable(dual, SearchBudget(options.budget_nodes));
    auto cl = is_cl_shellable(L, SearchBudget(options.budget_nodes));
    if (lq.exhausted() || cl.exhausted() || (shell && shell->exhausted())) {
        finish(out, "search budget exhausted");
        return out;
    }

    bool agree = correspondence;
    Json fields = Json::object();
    for (const FieldSpec& field : options.fields) {
        auto left = has_d_linear_resolution(I, field);
        const bool dual_cm = is_cohen_macaulay(dual, field);
        std::optional<int> right = (dual_pure && dual_cm) ? q_dual : std::nullopt;
        const bool cm_poset = is_cm_poset(L.poset(), field);
        std::optional<int> lattice_side = (graded && cm_poset) ? graded : std::nullopt;
        Json f;
        f["linear_resolution"] = optional_int_json(left);
        f["dual_cm"] = dual_cm;
        f["eagon_reiner_agree"] = left == right;
        f["lattice_vs_dual_agree"] = lattice_side == right;
        agree = agree && (left == right) && (lattice_side == right);
        fields[field.to_string()] = std::move(f);
    }
    out.detail["fields"] = std::move(fields);

    std::optional<int> left_lq = (equi && lq.found()) ? equi : std::nullopt;
    std::optional<int> right_shell =
        (dual_pure && shell && shell->found()) ? q_dual : std::nullopt;
    std::optional<int> lattice_cl = (graded && cl.found()) ? graded : std::nullopt;
    out.detail["lq_side"] = optional_int_json(left_lq);
    out.detail["dual_shellable_side"] = optional_int_json(right_shell);
    out.detail["lattice_cl_side"] = optional_int_json(lattice_cl);
    agree = agree && (left_lq == right_shell) && (lattice_cl == right_shell);

    if (shell && shell->found() &&
        !verify_shelling_certificate(dual, *shell->certificate)) {
        agree = false;
        out.detail["shelling_certificate_ok"] = false;
    }
    out.agree = agree;
    finish(out);
    return out;
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    const int n_workers = std::min<int>(jobs, static_cast<int>(count));
    workers.reserve(static_cast<std::size_t>(n_workers));
    for (int w = 0; w < n_workers; ++w) {
        workers.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) break;
                fn(i);
            }
        });
    }
    for (auto& t : workers) t.join();
}

CheckReport assemble(const std::string& suite, const CorpusSpec& corpus,
                     std::vector<InstanceResult> instances) {
    CheckReport report;
    report.suite = suite;
    report.corpus = corpus.to_string();
    report.total = instances.size();
    for (const auto& inst : instances) {
        if (inst.skipped) {
            ++report.skipped;
        } else {
            ++report.checked;
            if (inst.agree) {
                ++report.agreed;
            } else {
                ++report.disagreed;
            }
        }
    }
    report.instances = std::move(instances);
    return report;
}

// Shared driver for the ideal-based suites.
CheckReport run_ideal_suite(
    const std::string& suite, const CorpusSpec& corpus, const SuiteOptions& options,
    const std::function<InstanceOutcome(const MonomialIdeal&, const SuiteOptions&)>& eval) {
    std::vector<MonomialIdeal> ideals = generate_ideal_corpus(corpus);
    std::vector<InstanceResult> results(ideals.size());
    parallel_for(ideals.size(), options.jobs, [&](std::size_t i) {
        InstanceOutcome outcome = eval(ideals[i], options);
        InstanceResult r;
        r.id = std::to_string(i) + ":" + to_pretty_string(ideals[i]);
        Json detail;
        detail["input"] = ideal_to_json(ideals[i]);
        detail.update(outcome.detail);
        r.detail = std::move(detail);
        r.agree = outcome.agree;
        r.skipped = outcome.skipped;
        results[i] = std::move(r);
    });
    return assemble(suite, corpus, std::move(results));
}

}  // namespace

CheckReport check_theorem_1_1(const CorpusSpec& corpus, const SuiteOptions& options) {
    return run_ideal_suite("theorem-1-1", corpus, options, eval_theorem_1_1);
}

CheckReport check_theorem_1_2(const CorpusSpec& corpus, const SuiteOptions& options) {
    return run_ideal_suite("theorem-1-2", corpus, options, eval_theorem_1_2);
}

CheckReport check_corollary_1_3(const CorpusSpec& corpus, const SuiteOptions& options) {
    if (!corpus.is_graph_corpus()) {
        throw InputError("corollary-1-3 runs on graph corpora");
    }
    std::vector<SimpleGraph> graphs = generate_graph_corpus(corpus);
    std::vector<InstanceResult> results(graphs.size());
    parallel_for(graphs.size(), options.jobs, [&](std::size_t i) {
        InstanceOutcome outcome = eval_corollary_1_3(graphs[i], options);
        InstanceResult r;
        r.id = std::to_string(i) + ":" + to_graph6(graphs[i]);
        Json detail;
        detail["input"] = graph_to_json(graphs[i]);
        detail.update(outcome.detail);
        r.detail = std::move(detail);
        r.agree = outcome.agree;
        r.skipped = outcome.skipped;
        results[i] = std::move(r);
    });
    return assemble("corollary-1-3", corpus, std::move(results));
}

CheckReport check_polarization_suite(const CorpusSpec& corpus, const SuiteOptions& options) {
    return run_ideal_suite("polarization", corpus, options, eval_polarization);
}

CheckReport check_eagon_reiner_suite(const CorpusSpec& corpus, const SuiteOptions& options) {
    return run_ideal_suite("eagon-reiner", corpus, options, eval_eagon_reiner);
}

CheckReport run_suite(const std::string& suite, const CorpusSpec& corpus,
                      const SuiteOptions& options) {
    if (suite == "theorem-1-1") return check_theorem_1_1(corpus, options);
    if (suite == "theorem-1-2") return check_theorem_1_2(corpus, options);
    if (suite == "corollary-1-3") return check_corollary_1_3(corpus, options);
    if (suite == "polarization") return check_polarization_suite(corpus, options);
    if (suite == "eagon-reiner") return check_eagon_reiner_suite(corpus, options);
    throw InputError("unknown suite '" + suite + "'");
}

Json replay_instance(const std::string& suite, const Json& input, const SuiteOptions& options) {
    InstanceOutcome outcome;
    if (suite == "corollary-1-3") {
        outcome = eval_corollary_1_3(graph_from_json(input), options);
    } else {
        MonomialIdeal I = input.contains("generators") ? ideal_from_json(input)
                                                       : edge_ideal(graph_from_json(input));
        if (suite == "theorem-1-1") outcome = eval_theorem_1_1(I, options);
        else if (suite == "theorem-1-2") outcome = eval_theorem_1_2(I, options);
        else if (suite == "polarization") outcome = eval_polarization(I, options);
        else if (suite == "eagon-reiner") outcome = eval_eagon_reiner(I, options);
        else throw InputError("unknown suite '" + suite + "'");
    }
    Json out;
    out["suite"] = suite;
    out["input"] = input;
    out.update(outcome.detail);
    return out;
}

Json CheckReport::to_json(const SuiteOptions& options) const {
    Json j;
    j["suite"] = suite;
    j["version"] = kVersion;
    j["corpus"] = corpus;
    Json fields = Json::array();
    for (const FieldSpec& f : options.fields) fields.push_back(f.to_string());
    j["fields"] = std::move(fields);
    j["budget"] = options.budget_nodes;
    Json insts = Json::array();
    for (const InstanceResult& r : instances) {
        Json e;
        e["id"] = r.id;
        e.update(r.detail);
        insts.push_back(std::move(e));
    }
    j["instances"] = std::move(insts);
    Json summary;
    summary["total"] = total;
    summary["checked"] = checked;
    summary["agreed"] = agreed;
    summary["disagreed"] = disagreed;
    summary["skipped"] = skipped;
    j["summary"] = std::move(summary);
    return j;
}

}  // namespace lcmlat
