#ifndef LCMLAT_MONOMIAL_HPP
#define LCMLAT_MONOMIAL_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lcmlat {

/// Ordered set of distinct variable names. The order is fixed at
/// construction and drives every deterministic iteration downstream.
class VariableContext {
public:
    explicit VariableContext(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const VariableContext& other) const {
        return names_ == other.names_;
    }

private:
    std::vector<std::string> names_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

ContextPtr make_context(std::vector<std::string> names);
/// Context x1,...,xn.
ContextPtr make_context(std::size_t n, const std::string& stem = "x");

/// A monomial as an exponent vector over a shared variable context.
/// Immutable after construction.
class Monomial {
public:
    Monomial(ContextPtr context, std::vector<int> exponents);

    static Monomial one(ContextPtr context);
    static Monomial variable(ContextPtr context, std::size_t var);

    const ContextPtr& context() const { return context_; }
    const std::vector<int>& exponents() const { return exponents_; }
    int exponent(std::size_t var) const { return exponents_.at(var); }

    int degree() const { return degree_; }
    bool is_one() const { return degree_ == 0; }
    bool is_squarefree() const;
    /// Indices of variables with positive exponent.
    std::vector<std::size_t> support() const;

    bool divides(const Monomial& other) const;

    bool operator==(const Monomial& other) const;
    bool operator!=(const Monomial& other) const { return !(*this == other); }

private:
    ContextPtr context_;
    std::vector<int> exponents_;
    int degree_;
};

/// True when the two monomials share one variable context (by value).
bool same_context(const Monomial& a, const Monomial& b);
/// Throws ContextMismatchError unless same_context(a, b).
void require_same_context(const Monomial& a, const Monomial& b);

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial product(const Monomial& a, const Monomial& b);
/// a / gcd(a, b); never fails.
Monomial colon_quotient(const Monomial& a, const Monomial& b);
/// Exact division a / b; throws InputError unless b divides a.
Monomial exact_quotient(const Monomial& a, const Monomial& b);

/// Canonical monomial order: total degree, then lexicographic on the
/// exponent vector. Returns <0, 0, >0.
int compare_canonical(const Monomial& a, const Monomial& b);

struct CanonicalMonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return compare_canonical(a, b) < 0;
    }
};

/// Pretty form: "x*y^2*z", "1" for the constant monomial.
std::string to_pretty_string(const Monomial& m);

/// Parses "x*y^2*z" / "x1^2*x3" style strings against a known context.
Monomial parse_monomial(std::string_view text, const ContextPtr& context);

/// Name -> exponent pairs of a monomial string, before context resolution.
std::vector<std::pair<std::string, int>> parse_monomial_factors(std::string_view text);

/// Builds a context from names sorted naturally (alphabetic stem, then
/// numeric suffix value), for files that give generators as strings only.
ContextPtr infer_context(const std::vector<std::vector<std::pair<std::string, int>>>& factor_lists);

}  // namespace lcmlat

#endif
