#include "lcmlat/field.hpp"

#include <charconv>

#include "lcmlat/errors.hpp"

namespace lcmlat {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime_field(std::int64_t p) {
    if (!is_prime(p)) {
        throw InputError("prime field characteristic must be prime, got " +
                         std::to_string(p));
    }
    return FieldSpec(p);
}

std::int64_t FieldSpec::prime() const {
    if (is_rationals()) throw InputError("rationals have no finite characteristic");
    return p_;
}

std::string FieldSpec::to_string() const {
    return is_rationals() ? "q" : "fp:" + std::to_string(p_);
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "q" || text == "Q" || text == "rationals") return rationals();
    if (text.rfind("fp:", 0) == 0) {
        std::int64_t p = 0;
        auto body = text.substr(3);
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
        if (ec == std::errc() && ptr == body.data() + body.size()) {
            return prime_field(p);
        }
    }
    throw InputError("unrecognized field spec '" + std::string(text) +
                     "' (expected \"q\" or \"fp:<prime>\")");
}

}  // namespace lcmlat
