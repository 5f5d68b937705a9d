// lcmlat: lcm-lattice analysis of monomial ideals from the command line.
//
// Exit codes: 0 success, 1 a --expect query came back negative, 2 input
// error, 3 a search budget was exhausted.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lcmlat/betti.hpp"
#include "lcmlat/duality.hpp"
#include "lcmlat/errors.hpp"
#include "lcmlat/graph.hpp"
#include "lcmlat/harness.hpp"
#include "lcmlat/homology.hpp"
#include "lcmlat/json_io.hpp"
#include "lcmlat/lattice.hpp"
#include "lcmlat/quotients.hpp"
#include "lcmlat/rao.hpp"
#include "lcmlat/shelling.hpp"
#include "lcmlat/version.hpp"

namespace {

using lcmlat::Json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw lcmlat::InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json parse_json_text(const std::string& text) {
    return Json::parse(text);
}

lcmlat::MonomialIdeal load_ideal(const std::string& path) {
    return lcmlat::ideal_from_json(parse_json_text(read_input(path)));
}

lcmlat::SimpleGraph load_graph(const std::string& path) {
    std::string text = read_input(path);
    // Accept a bare graph6 line as well as JSON.
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] != '{' && text[first] != '"') {
        std::string line = text.substr(first);
        if (auto end = line.find_first_of("\r\n"); end != std::string::npos) line.resize(end);
        return lcmlat::parse_graph6(line);
    }
    return lcmlat::graph_from_json(parse_json_text(text));
}

lcmlat::SimplicialComplex load_complex(const std::string& path) {
    return lcmlat::complex_from_json(parse_json_text(read_input(path)));
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("LCMLAT_BUDGET")) {
        return std::stoull(env);
    }
    return lcmlat::SearchBudget::kDefaultNodes;
}

lcmlat::FieldSpec default_field() {
    if (const char* env = std::getenv("LCMLAT_FIELD")) {
        return lcmlat::FieldSpec::parse(env);
    }
    return lcmlat::FieldSpec::rationals();
}

void emit(const Json& report, bool json_mode) {
    if (json_mode) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    // The human format is a plain rendering of the same object.
    std::function<void(const Json&, int)> render = [&](const Json& node, int indent) {
        const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
        if (node.is_object()) {
            for (const auto& [key, value] : node.items()) {
                if (value.is_object() || value.is_array()) {
                    std::cout << pad << key << ":\n";
                    render(value, indent + 1);
                } else {
                    std::cout << pad << key << ": " << value.dump() << "\n";
                }
            }
        } else if (node.is_array()) {
            for (const auto& value : node) {
                if (value.is_object() || value.is_array()) {
                    render(value, indent);
                } else {
                    std::cout << pad << "- " << value.dump() << "\n";
                }
            }
        } else {
            std::cout << pad << node.dump() << "\n";
        }
    };
    render(report, 0);
}

const char* status_name(lcmlat::SearchStatus s) {
    switch (s) {
        case lcmlat::SearchStatus::Found: return "found";
        case lcmlat::SearchStatus::NotFound: return "not-found";
        case lcmlat::SearchStatus::Exhausted: return "exhausted";
    }
    return "?";
}

// Full ideal report: generators, lattice, gradedness, CM, LQ, RAO, Betti.
Json analyze_ideal(const lcmlat::MonomialIdeal& I, const lcmlat::FieldSpec& field,
                   std::uint64_t budget, bool* exhausted) {
    Json report;
    report["version"] = lcmlat::kVersion;
    report["ideal"] = lcmlat::ideal_to_json(I);
    report["field"] = field.to_string();
    report["squarefree"] = I.is_squarefree();
    auto equi = lcmlat::is_equigenerated(I);
    report["equigenerated"] = equi ? Json(*equi) : Json(nullptr);

    lcmlat::LcmLattice L = lcmlat::LcmLattice::build(I);
    report["lattice_size"] = L.size();
    auto graded = lcmlat::degree_graded_degree(L);
    report["degree_graded"] = graded ? Json(*graded) : Json(nullptr);
    report["cm_poset"] = lcmlat::is_cm_poset(L.poset(), field);

    auto lq = lcmlat::find_linear_quotients_order(I, lcmlat::SearchBudget(budget));
    report["linear_quotients"] = status_name(lq.status);
    if (lq.found()) {
        report["lq_certificate"] = lcmlat::quotient_certificate_to_json(*lq.certificate, I);
        report["lq_certificate_verified"] = lcmlat::verify_quotient_certificate(I, *lq.certificate);
    }
    auto cl = lcmlat::is_cl_shellable(L, lcmlat::SearchBudget(budget));
    report["cl_shellable"] = status_name(cl.status);
    if (cl.found()) {
        report["rao_certificate"] = lcmlat::rao_certificate_to_json(*cl.certificate);
        report["rao_certificate_verified"] =
            lcmlat::verify_rao_certificate(L.poset(), *cl.certificate);
    }
    if (lq.exhausted() || cl.exhausted()) *exhausted = true;

    lcmlat::BettiTable betti = lcmlat::gpw_betti(I, field);
    report["betti"] = lcmlat::betti_to_json(betti, I.context());
    auto lin = lcmlat::has_d_linear_resolution(I, field);
    report["linear_resolution"] = lin ? Json(*lin) : Json(nullptr);
    return report;
}

int apply_expect(const Json& report, const std::string& expect) {
    if (expect.empty()) return kExitOk;
    if (!report.contains(expect)) {
        std::cerr << "lcmlat: no verdict named '" << expect << "' in this report\n";
        return kExitInput;
    }
    const Json& v = report.at(expect);
    bool positive = false;
    if (v.is_boolean()) positive = v.get<bool>();
    else if (v.is_string()) positive = v.get<std::string>() == "found";
    else positive = !v.is_null();
    return positive ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lcm-lattice analysis of monomial ideals"};
    app.set_version_flag("--version", lcmlat::kVersion);
    app.require_subcommand(1);

    bool json_mode = false;
    app.add_flag("--json", json_mode, "emit JSON instead of the human rendering");

    std::string field_text;
    std::uint64_t budget = default_budget();
    std::string expect;

    auto* cmd_ideal = app.add_subcommand("analyze-ideal", "full report for a monomial ideal");
    std::string ideal_path;
    cmd_ideal->add_option("file", ideal_path, "ideal JSON file or '-'")->required();
    cmd_ideal->add_option("--field", field_text, "coefficient field: q or fp:<p>");
    cmd_ideal->add_option("--budget", budget, "search node budget");
    cmd_ideal->add_option("--expect", expect, "exit 1 unless this verdict is positive");

    auto* cmd_graph = app.add_subcommand("analyze-graph", "chordality and edge-ideal report");
    std::string graph_path;
    cmd_graph->add_option("file", graph_path, "graph JSON / graph6 file or '-'")->required();
    cmd_graph->add_option("--field", field_text, "coefficient field: q or fp:<p>");
    cmd_graph->add_option("--budget", budget, "search node budget");
    cmd_graph->add_option("--expect", expect, "exit 1 unless this verdict is positive");

    auto* cmd_betti = app.add_subcommand("betti", "Betti table of an ideal");
    std::string betti_path;
    bool with_oracle = false;
    cmd_betti->add_option("file", betti_path, "ideal JSON file or '-'")->required();
    cmd_betti->add_flag("--oracle", with_oracle, "cross-check against the Koszul oracle");
    cmd_betti->add_option("--field", field_text, "coefficient field: q or fp:<p>");

    auto* cmd_lattice = app.add_subcommand("lattice", "lcm-lattice JSON export");
    std::string lattice_path;
    cmd_lattice->add_option("file", lattice_path, "ideal JSON file or '-'")->required();

    auto* cmd_dual = app.add_subcommand("dual", "Alexander dual of a complex");
    std::string dual_path;
    cmd_dual->add_option("file", dual_path, "complex JSON file or '-'")->required();

    auto* cmd_polarize = app.add_subcommand("polarize", "polarization of an ideal");
    std::string polarize_path;
    cmd_polarize->add_option("file", polarize_path, "ideal JSON file or '-'")->required();

    auto* cmd_sr = app.add_subcommand("sr", "Stanley-Reisner ideal of a complex");
    std::string sr_path;
    cmd_sr->add_option("file", sr_path, "complex JSON file or '-'")->required();

    auto* cmd_check = app.add_subcommand("check", "run a theorem-checking suite");
    std::string suite, corpus_text, replay_path, out_path;
    std::uint64_t seed_override = 0;
    bool seed_given = false;
    int jobs = 1;
    bool with_certs = false;
    cmd_check->add_option("suite", suite,
                          "theorem-1-1 | theorem-1-2 | corollary-1-3 | polarization | eagon-reiner")
        ->required();
    cmd_check->add_option("--corpus", corpus_text, "corpus spec string");
    auto* seed_opt = cmd_check->add_option("--seed", seed_override, "override the corpus seed");
    cmd_check->add_option("--budget", budget, "search node budget");
    cmd_check->add_option("--jobs", jobs, "parallel workers");
    cmd_check->add_option("--out", out_path, "write the JSON report to a file");
    cmd_check->add_option("--replay", replay_path, "re-run one instance JSON verbosely");
    cmd_check->add_flag("--certificates", with_certs, "embed certificates in the report");

    auto* cmd_verify = app.add_subcommand("verify-certificate", "replay a certificate");
    std::string cert_path, object_path;
    cmd_verify->add_option("certificate", cert_path, "certificate JSON file")->required();
    cmd_verify->add_option("object", object_path, "ideal / graph / complex JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        const lcmlat::FieldSpec field =
            field_text.empty() ? default_field() : lcmlat::FieldSpec::parse(field_text);

        if (*cmd_ideal) {
            bool exhausted = false;
            Json report = analyze_ideal(load_ideal(ideal_path), field, budget, &exhausted);
            emit(report, json_mode);
            if (exhausted) return kExitBudget;
            return apply_expect(report, expect);
        }

        if (*cmd_graph) {
            lcmlat::SimpleGraph G = load_graph(graph_path);
            Json report;
            report["version"] = lcmlat::kVersion;
            report["graph"] = lcmlat::graph_to_json(G);
            report["complement"] = lcmlat::graph_to_json(lcmlat::complement(G));
            auto chord = lcmlat::is_chordal(G);
            report["chordal"] = chord.chordal;
            if (chord.chordal) {
                report["elimination_order"] = chord.elimination_order;
                report["elimination_verified"] =
                    lcmlat::verify_elimination_order(G, chord.elimination_order);
            } else {
                report["induced_cycle"] = chord.induced_cycle;
                report["cycle_verified"] = lcmlat::verify_induced_cycle(G, chord.induced_cycle);
            }
            report["cochordal"] = lcmlat::is_cochordal(G);
            bool exhausted = false;
            if (!G.edges().empty()) {
                report["edge_ideal"] =
                    analyze_ideal(lcmlat::edge_ideal(G), field, budget, &exhausted);
            }
            emit(report, json_mode);
            if (exhausted) return kExitBudget;
            return apply_expect(report, expect);
        }

        if (*cmd_betti) {
            lcmlat::MonomialIdeal I = load_ideal(betti_path);
            lcmlat::BettiTable table = lcmlat::gpw_betti(I, field);
            Json report;
            report["version"] = lcmlat::kVersion;
            report["ideal"] = lcmlat::ideal_to_json(I);
            report["betti"] = lcmlat::betti_to_json(table, I.context());
            report["grid"] = table.to_grid_string();
            if (with_oracle) {
                lcmlat::BettiTable oracle = lcmlat::koszul_betti_oracle(I, field);
                report["oracle_agrees"] = table.same_entries(oracle);
                if (!table.same_entries(oracle)) {
                    report["oracle"] = lcmlat::betti_to_json(oracle, I.context());
                    emit(report, json_mode);
                    return kExitNegative;
                }
            }
            emit(report, json_mode);
            return kExitOk;
        }

        if (*cmd_lattice) {
            lcmlat::MonomialIdeal I = load_ideal(lattice_path);
            emit(lcmlat::lattice_to_json(lcmlat::LcmLattice::build(I)), json_mode);
            return kExitOk;
        }

        if (*cmd_dual) {
            lcmlat::SimplicialComplex c = load_complex(dual_path);
            emit(lcmlat::complex_to_json(lcmlat::alexander_dual(c)), json_mode);
            return kExitOk;
        }

        if (*cmd_polarize) {
            lcmlat::MonomialIdeal I = load_ideal(polarize_path);
            emit(lcmlat::ideal_to_json(lcmlat::polarize(I)), json_mode);
            return kExitOk;
        }

        if (*cmd_sr) {
            lcmlat::SimplicialComplex c = load_complex(sr_path);
            emit(lcmlat::ideal_to_json(lcmlat::stanley_reisner_ideal(c)), json_mode);
            return kExitOk;
        }

        if (*cmd_check) {
            lcmlat::SuiteOptions options;
            options.budget_nodes = budget;
            options.jobs = jobs;
            options.include_certificates = with_certs;
            if (!replay_path.empty()) {
                Json input = parse_json_text(read_input(replay_path));
                if (input.contains("input")) input = input.at("input");
                emit(lcmlat::replay_instance(suite, input, options), json_mode);
                return kExitOk;
            }
            if (corpus_text.empty()) {
                std::cerr << "lcmlat: check needs --corpus (or --replay)\n";
                return kExitInput;
            }
            lcmlat::CorpusSpec corpus = lcmlat::CorpusSpec::parse(corpus_text);
            if (!seed_opt->empty()) {
                (void)seed_given;
                corpus.seed = seed_override;
            }
            lcmlat::CheckReport report = lcmlat::run_suite(suite, corpus, options);
            Json j = report.to_json(options);
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                out << j.dump(2) << "\n";
                std::cout << "report written to " << out_path << "\n";
                std::cout << "summary: " << j["summary"].dump() << "\n";
            } else {
                emit(j, json_mode);
            }
            if (!report.all_agree()) return kExitNegative;
            return kExitOk;
        }

        if (*cmd_verify) {
            Json cert = parse_json_text(read_input(cert_path));
            const std::string type = cert.value("type", "");
            bool ok = false;
            if (type == "linear-quotients") {
                ok = lcmlat::verify_quotient_certificate(
                    load_ideal(object_path), lcmlat::quotient_certificate_from_json(cert));
            } else if (type == "rao") {
                lcmlat::LcmLattice L = lcmlat::LcmLattice::build(load_ideal(object_path));
                ok = lcmlat::verify_rao_certificate(L.poset(),
                                                    lcmlat::rao_certificate_from_json(cert));
            } else if (type == "shelling") {
                ok = lcmlat::verify_shelling_certificate(
                    load_complex(object_path), lcmlat::shelling_certificate_from_json(cert));
            } else if (type == "elimination") {
                std::vector<int> order;
                for (const auto& v : cert.at("order")) order.push_back(v.get<int>());
                ok = lcmlat::verify_elimination_order(load_graph(object_path), order);
            } else {
                std::cerr << "lcmlat: unknown certificate type '" << type << "'\n";
                return kExitInput;
            }
            Json report;
            report["certificate"] = type;
            report["verified"] = ok;
            emit(report, json_mode);
            return ok ? kExitOk : kExitNegative;
        }
    } catch (const lcmlat::InputError& e) {
        std::cerr << "lcmlat: " << e.what() << "\n";
        return kExitInput;
    } catch (const lcmlat::ContextMismatchError& e) {
        std::cerr << "lcmlat: " << e.what() << "\n";
        return kExitInput;
    } catch (const lcmlat::SizeLimitError& e) {
        std::cerr << "lcmlat: " << e.what() << "\n";
        return kExitInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "lcmlat: bad JSON: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
