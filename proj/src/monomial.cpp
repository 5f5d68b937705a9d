#include "lcmlat/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "lcmlat/errors.hpp"

namespace lcmlat {

VariableContext::VariableContext(std::vector<std::string> names)
    : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw InputError("variable names must be nonempty");
        auto [it, inserted] = index_.emplace(names_[i], i);
        if (!inserted) throw InputError("duplicate variable name '" + names_[i] + "'");
    }
}

std::optional<std::size_t> VariableContext::index_of(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

ContextPtr make_context(std::vector<std::string> names) {
    return std::make_shared<VariableContext>(std::move(names));
}

ContextPtr make_context(std::size_t n, const std::string& stem) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
    return make_context(std::move(names));
}

Monomial::Monomial(ContextPtr context, std::vector<int> exponents)
    : context_(std::move(context)), exponents_(std::move(exponents)) {
    if (!context_) throw InputError("monomial requires a variable context");
    if (exponents_.size() != context_->size()) {
        throw InputError("exponent vector length " + std::to_string(exponents_.size()) +
                         " does not match context size " + std::to_string(context_->size()));
    }
    for (int e : exponents_) {
        if (e < 0) throw InputError("negative exponent in monomial");
    }
    degree_ = std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

Monomial Monomial::one(ContextPtr context) {
    std::size_t n = context->size();
    return Monomial(std::move(context), std::vector<int>(n, 0));
}

Monomial Monomial::variable(ContextPtr context, std::size_t var) {
    std::vector<int> e(context->size(), 0);
    e.at(var) = 1;
    return Monomial(std::move(context), std::move(e));
}

bool Monomial::is_squarefree() const {
    return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e <= 1; });
}

std::vector<std::size_t> Monomial::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] > 0) s.push_back(i);
    }
    return s;
}

bool Monomial::divides(const Monomial& other) const {
    require_same_context(*this, other);
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] > other.exponents_[i]) return false;
    }
    return true;
}

bool Monomial::operator==(const Monomial& other) const {
    return same_context(*this, other) && exponents_ == other.exponents_;
}

bool same_context(const Monomial& a, const Monomial& b) {
    return a.context() == b.context() || *a.context() == *b.context();
}

void require_same_context(const Monomial& a, const Monomial& b) {
    if (!same_context(a, b)) {
        throw ContextMismatchError("monomials live over different variable contexts");
    }
}

namespace {

Monomial zip_exponents(const Monomial& a, const Monomial& b, int (*op)(int, int)) {
    require_same_context(a, b);
    std::vector<int> e(a.exponents().size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = op(a.exponents()[i], b.exponents()[i]);
    }
    return Monomial(a.context(), std::move(e));
}

}  // namespace

Monomial lcm(const Monomial& a, const Monomial& b) {
    return zip_exponents(a, b, [](int x, int y) { return std::max(x, y); });
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    return zip_exponents(a, b, [](int x, int y) { return std::min(x, y); });
}

Monomial product(const Monomial& a, const Monomial& b) {
    return zip_exponents(a, b, [](int x, int y) { return x + y; });
}

Monomial colon_quotient(const Monomial& a, const Monomial& b) {
    return zip_exponents(a, b, [](int x, int y) { return std::max(x - y, 0); });
}

Monomial exact_quotient(const Monomial& a, const Monomial& b) {
    if (!b.divides(a)) throw InputError("exact_quotient: divisor does not divide");
    return zip_exponents(a, b, [](int x, int y) { return x - y; });
}

int compare_canonical(const Monomial& a, const Monomial& b) {
    require_same_context(a, b);
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    if (a.exponents() < b.exponents()) return -1;
    if (b.exponents() < a.exponents()) return 1;
    return 0;
}

std::string to_pretty_string(const Monomial& m) {
    if (m.is_one()) return "1";
    std::string out;
    for (std::size_t i = 0; i < m.exponents().size(); ++i) {
        int e = m.exponents()[i];
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += m.context()->name(i);
        if (e > 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out;
}

std::vector<std::pair<std::string, int>> parse_monomial_factors(std::string_view text) {
    std::vector<std::pair<std::string, int>> factors;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos >= text.size()) throw InputError("empty monomial string");
    // Constant monomial.
    if (text[pos] == '1') {
        ++pos;
        skip_ws();
        if (pos != text.size()) throw InputError("unexpected trailing text after '1'");
        return factors;
    }
    while (true) {
        skip_ws();
        std::size_t start = pos;
        if (pos >= text.size() || !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            throw InputError("expected variable name in monomial string '" + std::string(text) + "'");
        }
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            ++pos;
        }
        std::string name(text.substr(start, pos - start));
        int exp = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip_ws();
            std::size_t dstart = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (dstart == pos) throw InputError("expected exponent after '^'");
            exp = std::stoi(std::string(text.substr(dstart, pos - dstart)));
        }
        factors.emplace_back(std::move(name), exp);
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != '*') {
            throw InputError("expected '*' between factors in '" + std::string(text) + "'");
        }
        ++pos;
    }
    return factors;
}

Monomial parse_monomial(std::string_view text, const ContextPtr& context) {
    auto factors = parse_monomial_factors(text);
    std::vector<int> e(context->size(), 0);
    for (const auto& [name, exp] : factors) {
        auto idx = context->index_of(name);
        if (!idx) throw InputError("unknown variable '" + name + "' in monomial");
        e[*idx] += exp;
    }
    return Monomial(context, std::move(e));
}

namespace {

// Splits a trailing decimal suffix off a name: "x12" -> ("x", 12).
std::pair<std::string, long long> natural_key(const std::string& name) {
    std::size_t i = name.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(name[i - 1]))) --i;
    if (i == name.size()) return {name, -1};
    return {name.substr(0, i), std::stoll(name.substr(i))};
}

}  // namespace

ContextPtr infer_context(const std::vector<std::vector<std::pair<std::string, int>>>& factor_lists) {
    std::set<std::string> seen;
    for (const auto& factors : factor_lists) {
        for (const auto& [name, exp] : factors) {
            (void)exp;
            seen.insert(name);
        }
    }
    std::vector<std::string> names(seen.begin(), seen.end());
    std::sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
        auto ka = natural_key(a);
        auto kb = natural_key(b);
        if (ka.first != kb.first) return ka.first < kb.first;
        if (ka.second != kb.second) return ka.second < kb.second;
        return a < b;
    });
    return make_context(std::move(names));
}

}  // namespace lcmlat
