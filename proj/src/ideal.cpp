#include "lcmlat/ideal.hpp"

#include <algorithm>

#include "lcmlat/errors.hpp"

namespace lcmlat {

std::vector<Monomial> minimalize(std::vector<Monomial> generators) {
    if (generators.empty()) return generators;
    for (std::size_t i = 1; i < generators.size(); ++i) {
        require_same_context(generators[0], generators[i]);
    }
    std::sort(generators.begin(), generators.end(), CanonicalMonomialLess{});
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    // After the degree-first sort a divisor always precedes its multiples.
    std::vector<Monomial> minimal;
    for (const Monomial& g : generators) {
        bool dominated = std::any_of(minimal.begin(), minimal.end(),
                                     [&](const Monomial& m) { return m.divides(g); });
        if (!dominated) minimal.push_back(g);
    }
    return minimal;
}

MonomialIdeal::MonomialIdeal(ContextPtr context, std::vector<Monomial> generators)
    : context_(std::move(context)) {
    if (!context_) throw InputError("ideal requires a variable context");
    for (const Monomial& g : generators) {
        if (!(g.context() == context_ || *g.context() == *context_)) {
            throw ContextMismatchError("generator context differs from ideal context");
        }
        if (g.is_one()) {
            throw InputError("the unit monomial 1 is not allowed as a generator");
        }
    }
    generators_ = minimalize(std::move(generators));
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(generators_.begin(), generators_.end(),
                       [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
    return std::any_of(generators_.begin(), generators_.end(),
                       [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
    if (!(*context_ == *other.context_)) return false;
    return generators_ == other.generators_;
}

std::vector<Monomial> colon_generators(const MonomialIdeal& I, const Monomial& v) {
    if (!(v.context() == I.context() || *v.context() == *I.context())) {
        throw ContextMismatchError("colon: monomial context differs from ideal context");
    }
    std::vector<Monomial> quotients;
    quotients.reserve(I.generator_count());
    for (const Monomial& u : I.generators()) {
        quotients.push_back(colon_quotient(u, v));
    }
    return minimalize(std::move(quotients));
}

bool is_linear_divisor(const MonomialIdeal& I, const Monomial& m) {
    if (I.is_zero()) throw InputError("is_linear_divisor: zero ideal");
    auto gens = colon_generators(I, m);
    return std::all_of(gens.begin(), gens.end(),
                       [](const Monomial& g) { return g.degree() == 1; });
}

std::optional<int> is_equigenerated(const MonomialIdeal& I) {
    if (I.is_zero()) throw InputError("is_equigenerated: zero ideal");
    int d = I.generators().front().degree();
    for (const Monomial& g : I.generators()) {
        if (g.degree() != d) return std::nullopt;
    }
    return d;
}

MonomialIdeal polarize(const MonomialIdeal& I) {
    if (I.is_zero()) throw InputError("polarize: zero ideal");
    const std::size_t n = I.context()->size();
    std::vector<int> max_exp(n, 0);
    for (const Monomial& g : I.generators()) {
        for (std::size_t j = 0; j < n; ++j) {
            max_exp[j] = std::max(max_exp[j], g.exponents()[j]);
        }
    }
    std::vector<std::string> names;
    std::vector<std::size_t> offset(n, 0);  // first polarized slot of variable j
    for (std::size_t j = 0; j < n; ++j) {
        offset[j] = names.size();
        for (int k = 1; k <= max_exp[j]; ++k) {
            names.push_back(I.context()->name(j) + "_" + std::to_string(k));
        }
    }
    ContextPtr polarized = make_context(std::move(names));
    std::vector<Monomial> gens;
    gens.reserve(I.generator_count());
    for (const Monomial& g : I.generators()) {
        std::vector<int> e(polarized->size(), 0);
        for (std::size_t j = 0; j < n; ++j) {
            for (int k = 0; k < g.exponents()[j]; ++k) {
                e[offset[j] + static_cast<std::size_t>(k)] = 1;
            }
        }
        gens.emplace_back(polarized, std::move(e));
    }
    return MonomialIdeal(polarized, std::move(gens));
}

std::string to_pretty_string(const MonomialIdeal& I) {
    std::string out = "(";
    for (std::size_t i = 0; i < I.generators().size(); ++i) {
        if (i) out += ", ";
        out += to_pretty_string(I.generators()[i]);
    }
    out += ")";
    return out;
}

}  // namespace lcmlat
