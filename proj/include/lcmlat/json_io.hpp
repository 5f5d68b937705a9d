#ifndef LCMLAT_JSON_IO_HPP
#define LCMLAT_JSON_IO_HPP

#include <json.hpp>
#include <string>

#include "lcmlat/betti.hpp"
#include "lcmlat/complex.hpp"
#include "lcmlat/graph.hpp"
#include "lcmlat/homology.hpp"
#include "lcmlat/ideal.hpp"
#include "lcmlat/lattice.hpp"
#include "lcmlat/quotients.hpp"
#include "lcmlat/rao.hpp"
#include "lcmlat/shelling.hpp"

namespace lcmlat {

// ordered_json keeps key order stable, so reruns are byte identical.
using Json = nlohmann::ordered_json;

/// {"variables": [...], "generators": [[e...], ...]}; generators may also
/// be monomial strings, and "variables" may be omitted when they are.
MonomialIdeal ideal_from_json(const Json& j);
Json ideal_to_json(const MonomialIdeal& I);

/// {"n": 5, "edges": [[1,2], ...]} or {"graph6": "..."}.
SimpleGraph graph_from_json(const Json& j);
Json graph_to_json(const SimpleGraph& G);

/// {"vertices": [...], "facets": [[...], ...]}; facet entries are vertex
/// labels or indices. "void": true encodes the void complex.
SimplicialComplex complex_from_json(const Json& j);
Json complex_to_json(const SimplicialComplex& complex);

Json homology_to_json(const HomologyProfile& h, const FieldSpec& field);

/// Element exponent vectors, cover edges, atoms, degree map.
Json lattice_to_json(const LcmLattice& L);

Json betti_to_json(const BettiTable& table, const ContextPtr& context);

Json quotient_certificate_to_json(const QuotientCertificate& cert, const MonomialIdeal& I);
QuotientCertificate quotient_certificate_from_json(const Json& j);

Json rao_certificate_to_json(const RaoCertificate& cert);
RaoCertificate rao_certificate_from_json(const Json& j);

Json shelling_certificate_to_json(const ShellingCertificate& cert);
ShellingCertificate shelling_certificate_from_json(const Json& j);

Json elimination_certificate_to_json(const std::vector<int>& order);

}  // namespace lcmlat

#endif
