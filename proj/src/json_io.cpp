#include "lcmlat/json_io.hpp"

#include <algorithm>

#include "lcmlat/errors.hpp"

namespace lcmlat {

MonomialIdeal ideal_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("generators")) {
        throw InputError("ideal JSON needs a \"generators\" array");
    }
    const Json& gens = j.at("generators");
    if (!gens.is_array()) throw InputError("\"generators\" must be an array");

    ContextPtr ctx;
    if (j.contains("variables")) {
        std::vector<std::string> names;
        for (const auto& v : j.at("variables")) names.push_back(v.get<std::string>());
        ctx = make_context(std::move(names));
    } else {
        // Infer the context from string generators.
        std::vector<std::vector<std::pair<std::string, int>>> factor_lists;
        for (const auto& g : gens) {
            if (!g.is_string()) {
                throw InputError("ideal JSON without \"variables\" needs string generators");
            }
            factor_lists.push_back(parse_monomial_factors(g.get<std::string>()));
        }
        ctx = infer_context(factor_lists);
    }

    std::vector<Monomial> monomials;
    for (const auto& g : gens) {
        if (g.is_string()) {
            monomials.push_back(parse_monomial(g.get<std::string>(), ctx));
        } else if (g.is_array()) {
            std::vector<int> e;
            for (const auto& x : g) e.push_back(x.get<int>());
            monomials.emplace_back(ctx, std::move(e));
        } else {
            throw InputError("generator entries must be strings or exponent arrays");
        }
    }
    return MonomialIdeal(ctx, std::move(monomials));
}

Json ideal_to_json(const MonomialIdeal& I) {
    Json j;
    j["variables"] = I.context()->names();
    Json gens = Json::array();
    Json pretty = Json::array();
    for (const Monomial& g : I.generators()) {
        gens.push_back(g.exponents());
        pretty.push_back(to_pretty_string(g));
    }
    j["generators"] = std::move(gens);
    j["pretty"] = std::move(pretty);
    return j;
}

SimpleGraph graph_from_json(const Json& j) {
    if (j.is_string()) return parse_graph6(j.get<std::string>());
    if (!j.is_object()) throw InputError("graph JSON must be an object or a graph6 string");
    if (j.contains("graph6")) return parse_graph6(j.at("graph6").get<std::string>());
    if (!j.contains("n") || !j.contains("edges")) {
        throw InputError("graph JSON needs \"n\" and \"edges\"");
    }
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw InputError("edges must be pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return SimpleGraph(n, std::move(edges));
}

Json graph_to_json(const SimpleGraph& G) {
    Json j;
    j["n"] = G.vertex_count();
    Json edges = Json::array();
    for (auto [u, v] : G.edges()) edges.push_back(Json::array({u, v}));
    j["edges"] = std::move(edges);
    j["graph6"] = to_graph6(G);
    return j;
}

SimplicialComplex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices")) {
        throw InputError("complex JSON needs a \"vertices\" array");
    }
    std::vector<std::string> labels;
    for (const auto& v : j.at("vertices")) {
        labels.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
    if (j.value("void", false)) return SimplicialComplex::void_complex(std::move(labels));
    if (!j.contains("facets")) throw InputError("complex JSON needs \"facets\"");
    std::vector<std::vector<int>> facets;
    for (const auto& f : j.at("facets")) {
        std::vector<int> face;
        for (const auto& v : f) {
            if (v.is_number_integer()) {
                face.push_back(v.get<int>());
            } else {
                const std::string name = v.get<std::string>();
                auto it = std::find(labels.begin(), labels.end(), name);
                if (it == labels.end()) {
                    throw InputError("facet vertex '" + name + "' is not declared");
                }
                face.push_back(static_cast<int>(it - labels.begin()));
            }
        }
        facets.push_back(std::move(face));
    }
    return SimplicialComplex(std::move(labels), std::move(facets));
}

Json complex_to_json(const SimplicialComplex& complex) {
    Json j;
    j["vertices"] = complex.vertex_labels();
    if (complex.is_void()) {
        j["void"] = true;
        j["facets"] = Json::array();
        return j;
    }
    Json facets = Json::array();
    for (const auto& f : complex.facets()) {
        Json face = Json::array();
        for (int v : f) face.push_back(complex.vertex_labels()[static_cast<std::size_t>(v)]);
        facets.push_back(std::move(face));
    }
    j["facets"] = std::move(facets);
    return j;
}

Json homology_to_json(const HomologyProfile& h, const FieldSpec& field) {
    Json j;
    j["field"] = field.to_string();
    Json dims = Json::object();
    for (const auto& [deg, dim] : h.dims()) dims[std::to_string(deg)] = dim;
    j["h"] = std::move(dims);
    return j;
}

Json lattice_to_json(const LcmLattice& L) {
    Json j;
    j["variables"] = L.element(0).context()->names();
    Json elements = Json::array();
    Json degrees = Json::array();
    for (std::size_t e = 0; e < L.size(); ++e) {
        elements.push_back(L.element(static_cast<int>(e)).exponents());
        degrees.push_back(L.degree(static_cast<int>(e)));
    }
    j["elements"] = std::move(elements);
    Json pretty = Json::array();
    for (std::size_t e = 0; e < L.size(); ++e) {
        pretty.push_back(to_pretty_string(L.element(static_cast<int>(e))));
    }
    j["pretty"] = std::move(pretty);
    Json covers = Json::array();
    for (auto [a, b] : L.poset().cover_edges()) covers.push_back(Json::array({a, b}));
    j["covers"] = std::move(covers);
    j["atoms"] = L.atom_indices();
    j["top"] = L.top();
    j["degrees"] = std::move(degrees);
    return j;
}

Json betti_to_json(const BettiTable& table, const ContextPtr& context) {
    Json j;
    j["field"] = table.field().to_string();
    Json entries = Json::array();
    for (const auto& [key, value] : table.entries()) {
        Json entry;
        entry["i"] = key.first;
        entry["multidegree"] = key.second;
        entry["pretty"] = to_pretty_string(Monomial(context, key.second));
        entry["value"] = value;
        entries.push_back(std::move(entry));
    }
    j["entries"] = std::move(entries);
    Json graded = Json::array();
    for (const auto& [key, value] : table.graded()) {
        graded.push_back(Json::array({key.first, key.second, value}));
    }
    j["graded"] = std::move(graded);
    return j;
}

Json quotient_certificate_to_json(const QuotientCertificate& cert, const MonomialIdeal& I) {
    Json j;
    j["type"] = "linear-quotients";
    j["ordering"] = cert.ordering;
    Json pretty = Json::array();
    for (int g : cert.ordering) {
        pretty.push_back(to_pretty_string(I.generators()[static_cast<std::size_t>(g)]));
    }
    j["ordering_pretty"] = std::move(pretty);
    Json steps = Json::array();
    for (std::size_t s = 0; s < cert.witnesses.size(); ++s) {
        Json ws = Json::array();
        for (const QuotientWitness& w : cert.witnesses[s]) {
            Json jw;
            jw["earlier"] = w.earlier;
            jw["via"] = w.via;
            jw["variable"] = I.context()->name(w.variable);
            ws.push_back(std::move(jw));
        }
        steps.push_back(std::move(ws));
    }
    j["witnesses"] = std::move(steps);
    j["variables"] = I.context()->names();
    return j;
}

QuotientCertificate quotient_certificate_from_json(const Json& j) {
    if (j.value("type", "") != "linear-quotients") {
        throw InputError("certificate is not of type linear-quotients");
    }
    QuotientCertificate cert;
    for (const auto& v : j.at("ordering")) cert.ordering.push_back(v.get<int>());
    std::vector<std::string> vars;
    for (const auto& v : j.at("variables")) vars.push_back(v.get<std::string>());
    for (const auto& step : j.at("witnesses")) {
        std::vector<QuotientWitness> ws;
        for (const auto& w : step) {
            QuotientWitness qw;
            qw.earlier = w.at("earlier").get<int>();
            qw.via = w.at("via").get<int>();
            const std::string name = w.at("variable").get<std::string>();
            auto it = std::find(vars.begin(), vars.end(), name);
            if (it == vars.end()) throw InputError("certificate variable '" + name + "' unknown");
            qw.variable = static_cast<std::size_t>(it - vars.begin());
            ws.push_back(qw);
        }
        cert.witnesses.push_back(std::move(ws));
    }
    return cert;
}

namespace {

Json rao_node_to_json(const RaoNode& node) {
    Json j;
    j["bottom"] = node.bottom;
    j["atom_order"] = node.atom_order;
    Json ws = Json::array();
    for (const RaoPairWitness& w : node.witnesses) {
        Json jw;
        jw["i"] = w.i;
        jw["j"] = w.j;
        jw["k"] = w.k;
        Json steps = Json::array();
        for (const auto& [y, z] : w.cover_steps) steps.push_back(Json::array({y, z}));
        jw["cover_steps"] = std::move(steps);
        ws.push_back(std::move(jw));
    }
    j["witnesses"] = std::move(ws);
    Json children = Json::array();
    for (const RaoNode& c : node.children) children.push_back(rao_node_to_json(c));
    j["children"] = std::move(children);
    return j;
}

RaoNode rao_node_from_json(const Json& j) {
    RaoNode node;
    node.bottom = j.at("bottom").get<int>();
    for (const auto& v : j.at("atom_order")) node.atom_order.push_back(v.get<int>());
    for (const auto& w : j.at("witnesses")) {
        RaoPairWitness pw;
        pw.i = w.at("i").get<int>();
        pw.j = w.at("j").get<int>();
        pw.k = w.at("k").get<int>();
        for (const auto& s : w.at("cover_steps")) {
            pw.cover_steps.push_back({s[0].get<int>(), s[1].get<int>()});
        }
        node.witnesses.push_back(std::move(pw));
    }
    for (const auto& c : j.at("children")) node.children.push_back(rao_node_from_json(c));
    return node;
}

}  // namespace

Json rao_certificate_to_json(const RaoCertificate& cert) {
    Json j;
    j["type"] = "rao";
    j["root"] = rao_node_to_json(cert.root);
    return j;
}

RaoCertificate rao_certificate_from_json(const Json& j) {
    if (j.value("type", "") != "rao") throw InputError("certificate is not of type rao");
    return RaoCertificate{rao_node_from_json(j.at("root"))};
}

Json shelling_certificate_to_json(const ShellingCertificate& cert) {
    Json j;
    j["type"] = "shelling";
    j["facet_order"] = cert.facet_order;
    return j;
}

ShellingCertificate shelling_certificate_from_json(const Json& j) {
    if (j.value("type", "") != "shelling") throw InputError("certificate is not of type shelling");
    ShellingCertificate cert;
    for (const auto& v : j.at("facet_order")) cert.facet_order.push_back(v.get<int>());
    return cert;
}

Json elimination_certificate_to_json(const std::vector<int>& order) {
    Json j;
    j["type"] = "elimination";
    j["order"] = order;
    return j;
}

}  // namespace lcmlat
