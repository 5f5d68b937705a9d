#ifndef LCMLAT_IDEAL_HPP
#define LCMLAT_IDEAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "lcmlat/monomial.hpp"

namespace lcmlat {

/// Inclusion-minimal antichain of the input under divisibility, canonically
/// sorted (degree, then lex). Idempotent and order-insensitive. An empty
/// list maps to the empty list (the zero ideal).
std::vector<Monomial> minimalize(std::vector<Monomial> generators);

/// Monomial ideal stored by its unique minimal generating set, canonically
/// sorted so equal ideals have identical representations. The empty
/// generator list denotes the zero ideal. Generators equal to 1 are
/// rejected: the ideals here are proper.
class MonomialIdeal {
public:
    MonomialIdeal(ContextPtr context, std::vector<Monomial> generators);

    const ContextPtr& context() const { return context_; }
    const std::vector<Monomial>& generators() const { return generators_; }
    std::size_t generator_count() const { return generators_.size(); }
    bool is_zero() const { return generators_.empty(); }
    bool is_squarefree() const;
    bool contains(const Monomial& m) const;

    bool operator==(const MonomialIdeal& other) const;

private:
    ContextPtr context_;
    std::vector<Monomial> generators_;
};

/// Generator set of the colon ideal (I : (v)): minimalize{u/gcd(u,v)}.
std::vector<Monomial> colon_generators(const MonomialIdeal& I, const Monomial& v);

/// True iff (I : m) is generated by variables. The unit ideal (which arises
/// when some generator divides m) does not count as variable-generated.
bool is_linear_divisor(const MonomialIdeal& I, const Monomial& m);

/// The common degree of the minimal generators, if they all agree.
std::optional<int> is_equigenerated(const MonomialIdeal& I);

/// Squarefree-ization over the context {x_{j,k}} with one copy per exponent
/// level actually used; variables of the source context that appear in no
/// generator get no copies. Polarized names are "<name>_<k>".
MonomialIdeal polarize(const MonomialIdeal& I);

std::string to_pretty_string(const MonomialIdeal& I);

}  // namespace lcmlat

#endif
